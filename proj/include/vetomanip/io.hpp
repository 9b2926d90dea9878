#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "vetomanip/election.hpp"
#include "vetomanip/experiment.hpp"

namespace vetomanip {

/// Parse failure with a 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// Plain-text instance format (exact, hand-writable):
///
///   veto-instance v1
///   a <int>
///   b <int>
///   c <int>
///   W <int> <int> ...
///
/// Full-line `#` comments and blank lines may appear anywhere; the W line may
/// list no weights. The sincere voter count is runtime metadata and is not
/// stored, so it parses back as 0.
ManipulationInstance read_instance(std::istream& in);
ManipulationInstance read_instance_file(const std::string& path);
void write_instance(std::ostream& out, const ManipulationInstance& inst);

inline constexpr const char* kCurveCsvHeader =
    "kind,n,m,k,mean,sd,k_prime,trials,seed,p_hat,ci,branch_mean,branch_median,"
    "branch_max,x_rescaled";

/// Leading `#` lines recording how the rows were produced. Worker count is
/// deliberately not part of the metadata: output is identical for any pool
/// size, and the files must be too.
struct CsvMetadata {
  std::vector<std::string> config_lines;
};

std::string curve_csv_row(const CurvePoint& pt);
void write_curve_csv(std::ostream& out, const CsvMetadata& meta,
                     const std::vector<CurvePoint>& points);

}  // namespace vetomanip
