#include "vetomanip/io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "vetomanip/version.hpp"

namespace vetomanip {
namespace {

bool blank_or_comment(const std::string& line) {
  for (char ch : line) {
    if (ch == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::istringstream in(line);
  std::string field;
  while (in >> field) fields.push_back(field);
  return fields;
}

std::int64_t parse_int(const std::string& field, int line_no, const char* what) {
  std::int64_t value = 0;
  const char* first = field.data();
  const char* last = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw ParseError(line_no, std::string("expected an integer for ") + what + ", got '" +
                                  field + "'");
  }
  return value;
}

struct Line {
  std::string text;
  int number = 0;
};

// Next significant line, skipping comments and blanks.
bool next_line(std::istream& in, Line& line, int& line_no) {
  std::string text;
  while (std::getline(in, text)) {
    ++line_no;
    if (!text.empty() && text.back() == '\r') text.pop_back();
    if (blank_or_comment(text)) continue;
    line.text = std::move(text);
    line.number = line_no;
    return true;
  }
  return false;
}

std::int64_t read_scalar_line(std::istream& in, int& line_no, const char* key) {
  Line line;
  if (!next_line(in, line, line_no)) {
    throw ParseError(line_no + 1, std::string("missing '") + key + " <int>' line");
  }
  const auto fields = split_fields(line.text);
  if (fields.size() != 2 || fields[0] != key) {
    throw ParseError(line.number, std::string("expected '") + key + " <int>', got '" +
                                      line.text + "'");
  }
  const std::int64_t value = parse_int(fields[1], line.number, key);
  if (value < 0) {
    throw ParseError(line.number, std::string(key) + " must be non-negative");
  }
  return value;
}

std::string format(const char* fmt, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), fmt, v);
  return buf;
}

}  // namespace

ManipulationInstance read_instance(std::istream& in) {
  int line_no = 0;
  Line line;
  if (!next_line(in, line, line_no)) {
    throw ParseError(1, "empty input, expected header 'veto-instance v1'");
  }
  if (line.text != "veto-instance v1") {
    throw ParseError(line.number, "expected header 'veto-instance v1', got '" + line.text + "'");
  }

  ManipulationInstance inst;
  inst.a = read_scalar_line(in, line_no, "a");
  inst.b = read_scalar_line(in, line_no, "b");
  inst.c = read_scalar_line(in, line_no, "c");

  if (!next_line(in, line, line_no)) {
    throw ParseError(line_no + 1, "missing 'W <int> ...' line");
  }
  const auto fields = split_fields(line.text);
  if (fields.empty() || fields[0] != "W") {
    throw ParseError(line.number, "expected 'W <int> ...', got '" + line.text + "'");
  }
  inst.coalition.reserve(fields.size() - 1);
  for (std::size_t i = 1; i < fields.size(); ++i) {
    const std::int64_t w = parse_int(fields[i], line.number, "W");
    if (w < 1) throw ParseError(line.number, "coalition weights must be >= 1");
    inst.coalition.push_back(w);
  }

  if (next_line(in, line, line_no)) {
    throw ParseError(line.number, "unexpected content after the W line: '" + line.text + "'");
  }
  return inst;
}

ManipulationInstance read_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return read_instance(in);
}

void write_instance(std::ostream& out, const ManipulationInstance& inst) {
  out << "veto-instance v1\n";
  out << "a " << inst.a << '\n';
  out << "b " << inst.b << '\n';
  out << "c " << inst.c << '\n';
  out << 'W';
  for (std::int64_t w : inst.coalition) out << ' ' << w;
  out << '\n';
}

std::string curve_csv_row(const CurvePoint& pt) {
  const GeneratorSpec& s = pt.spec;
  const bool uses_k = s.kind != VoteModel::normal;
  const bool uses_normal = s.kind == VoteModel::normal;
  const bool uses_k_prime = s.kind == VoteModel::hung_one_random;

  std::ostringstream os;
  os << vote_model_name(s.kind) << ',' << s.n << ',' << s.m << ',';
  if (uses_k) os << s.k;
  os << ',';
  if (uses_normal) os << format("%.6g", s.mean);
  os << ',';
  if (uses_normal) os << format("%.6g", s.sd);
  os << ',';
  if (uses_k_prime) os << s.k_prime;
  os << ',' << pt.trials << ',' << s.base_seed;
  os << ',' << format("%.6f", pt.p_hat);
  os << ',' << format("%.6f", pt.ci_halfwidth);
  os << ',' << format("%.4f", pt.branch_mean);
  os << ',' << format("%.1f", pt.branch_median);
  os << ',' << pt.branch_max << ',';
  if (!std::isnan(pt.x_rescaled)) os << format("%.6f", pt.x_rescaled);
  return os.str();
}

void write_curve_csv(std::ostream& out, const CsvMetadata& meta,
                     const std::vector<CurvePoint>& points) {
  out << "# vetomanip " << kVersion << '\n';
  out << "# prng " << kPrngDescription << '\n';
  for (const std::string& line : meta.config_lines) out << "# " << line << '\n';
  out << kCurveCsvHeader << '\n';
  for (const CurvePoint& pt : points) out << curve_csv_row(pt) << '\n';
}

}  // namespace vetomanip
