// vetomanip: decide veto-election manipulations and reproduce the
// phase-transition experiments as CSV files.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "vetomanip/experiment.hpp"
#include "vetomanip/io.hpp"
#include "vetomanip/version.hpp"

namespace {

using namespace vetomanip;

struct SweepPlan {
  GeneratorSpec base;
  std::vector<SweepOverride> sweep;
  std::vector<std::string> config_lines;
};

std::string join_int(const std::vector<std::int64_t>& values) {
  std::ostringstream os;
  for (std::size_t i = 0; i < values.size(); ++i) os << (i ? "," : "") << values[i];
  return os.str();
}

std::string join_double(const std::vector<double>& values) {
  std::ostringstream os;
  for (std::size_t i = 0; i < values.size(); ++i) os << (i ? "," : "") << values[i];
  return os.str();
}

std::vector<double> default_x_grid(double step) {
  std::vector<double> xs;
  for (double x = 0.0; x <= 4.0 + 1e-9; x += step) xs.push_back(x);
  return xs;
}

// Coalition sizes hitting the rescaled grid for one electorate size,
// deduplicated after rounding.
std::vector<std::int64_t> sizes_for_grid(std::int64_t n, const std::vector<double>& xs) {
  std::vector<std::int64_t> ms;
  for (double x : xs) {
    const std::int64_t m = std::llround(x * std::sqrt(static_cast<double>(n)));
    if (ms.empty() || ms.back() != m) ms.push_back(m);
  }
  return ms;
}

std::int64_t pow2_capped(std::int64_t exponent) {
  return std::int64_t{1} << std::min<std::int64_t>(std::max<std::int64_t>(exponent, 0), 30);
}

const std::vector<std::int64_t> kDefaultElectorates{16, 64, 256, 1024, 4096};

SweepPlan preset_plan(const std::string& preset) {
  SweepPlan plan;
  plan.config_lines.push_back("preset " + preset);
  if (preset == "fig1") {
    plan.base = {VoteModel::uniform, 0, 0, 256, 0, 0, 0, 0};
    for (std::int64_t n : kDefaultElectorates) {
      const std::int64_t root = std::llround(std::sqrt(static_cast<double>(n)));
      const std::int64_t step = std::max<std::int64_t>(1, root / 4);
      for (std::int64_t m = 0; m <= 4 * root; m += step) {
        plan.sweep.push_back({n, m, std::nullopt, std::nullopt});
      }
    }
    plan.config_lines.push_back("kind uniform, k=256, m swept to 4*sqrt(n) for n in {" +
                                join_int(kDefaultElectorates) + "}");
  } else if (preset == "fig2" || preset == "fig5") {
    plan.base = preset == "fig2" ? GeneratorSpec{VoteModel::uniform, 0, 0, 256, 0, 0, 0, 0}
                                 : GeneratorSpec{VoteModel::normal, 0, 0, 0, 256.0, 128.0, 0, 0};
    const auto xs = default_x_grid(0.25);
    for (std::int64_t n : kDefaultElectorates) {
      for (std::int64_t m : sizes_for_grid(n, xs)) {
        plan.sweep.push_back({n, m, std::nullopt, std::nullopt});
      }
    }
    plan.config_lines.push_back(
        std::string("kind ") + (preset == "fig2" ? "uniform, k=256" : "normal, mean=256, sd=128") +
        ", m/sqrt(n) grid [0,4] step 0.25 for n in {" + join_int(kDefaultElectorates) + "}");
  } else if (preset == "fig3") {
    plan.base = {VoteModel::uniform, 0, 0, 1, 0, 0, 0, 0};
    const auto xs = default_x_grid(0.25);
    for (std::int64_t n : kDefaultElectorates) {
      for (std::int64_t m : sizes_for_grid(n, xs)) {
        plan.sweep.push_back({n, m, pow2_capped(m), std::nullopt});
      }
    }
    plan.config_lines.push_back("kind uniform, k=2^min(m,30), m/sqrt(n) grid [0,4] step 0.25"
                                " for n in {" + join_int(kDefaultElectorates) + "}");
  } else if (preset == "fig4") {
    plan.base = {VoteModel::uniform, 256, 0, 0, 0, 0, 0, 0};
    const auto xs = default_x_grid(0.25);
    for (std::int64_t k : {std::int64_t{1} << 8, std::int64_t{1} << 12, std::int64_t{1} << 16}) {
      for (std::int64_t m : sizes_for_grid(256, xs)) {
        plan.sweep.push_back({std::nullopt, m, k, std::nullopt});
      }
    }
    plan.config_lines.push_back(
        "kind uniform, n=256, m/sqrt(n) grid [0,4] step 0.25, k in {2^8,2^12,2^16}");
  } else if (preset == "fig6") {
    plan.base = {VoteModel::hung, 0, 20, 1, 0, 0, 0, 0};
    for (std::int64_t j = 5; j <= 30; ++j) {
      plan.sweep.push_back({std::nullopt, std::nullopt, std::int64_t{1} << j, std::nullopt});
    }
    plan.config_lines.push_back("kind hung, m=20, k=2^j for j in 5..30");
  } else if (preset == "fig7") {
    plan.base = {VoteModel::hung, 0, 24, 1, 0, 0, 0, 0};
    for (std::int64_t j = 6; j <= 30; j += 3) {
      plan.sweep.push_back({std::nullopt, std::nullopt, std::int64_t{1} << j, std::nullopt});
    }
    plan.config_lines.push_back("kind hung, m=24, k=2^j for j in 6..30 step 3");
  } else if (preset == "fig8") {
    plan.base = {VoteModel::hung_one_random, 0, 24, std::int64_t{1} << 24, 0, 0, 1, 0};
    for (std::int64_t j = 0; j <= 24; j += 3) {
      plan.sweep.push_back({std::nullopt, std::nullopt, std::nullopt, std::int64_t{1} << j});
    }
    plan.config_lines.push_back("kind hung_one_random, m=24, k=2^24, k'=2^j for j in 0..24 step 3");
  } else {
    throw CLI::ValidationError("--preset", "unknown preset '" + preset + "'");
  }
  return plan;
}

int write_csv_output(const std::string& out_path, const SweepPlan& plan,
                     const std::vector<CurvePoint>& points, std::uint64_t trials,
                     std::uint64_t seed, const std::string& command) {
  CsvMetadata meta;
  meta.config_lines.push_back("command " + command);
  for (const std::string& line : plan.config_lines) meta.config_lines.push_back(line);
  meta.config_lines.push_back("trials " + std::to_string(trials));
  meta.config_lines.push_back("seed " + std::to_string(seed));

  if (out_path == "-") {
    write_curve_csv(std::cout, meta, points);
    return 0;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open output file '" << out_path << "'\n";
    return 2;
  }
  write_curve_csv(out, meta, points);
  if (!out) {
    std::cerr << "error: failed writing '" << out_path << "'\n";
    return 2;
  }
  return 0;
}

int run_decide(const std::string& path) {
  ManipulationInstance inst;
  try {
    if (path == "-") {
      inst = read_instance(std::cin);
    } else {
      inst = read_instance_file(path);
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << path << ": " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }

  const ManipulationResult res = decide_manipulation(inst);
  if (res.manipulable) {
    std::cout << "MANIPULABLE\n";
    std::cout << "veto_to_A " << res.veto_to_a << '\n';
    std::cout << "veto_to_B " << res.veto_to_b << '\n';
    std::cout << "assignment";
    for (VetoTarget t : res.assignment) std::cout << ' ' << (t == VetoTarget::A ? 'A' : 'B');
    std::cout << '\n';
    std::cout << "branches " << res.stats.branches << '\n';
    return 0;
  }
  std::cout << "NOT MANIPULABLE\n";
  std::cout << "branches " << res.stats.branches << '\n';
  return 1;
}

int run_selftest(std::uint64_t seed, std::uint64_t rounds) {
  int failures = 0;
  const auto report = [&](const char* name, bool ok) {
    std::cout << (ok ? "PASS " : "FAIL ") << name << '\n';
    if (!ok) ++failures;
  };

  std::mt19937_64 rng(splitmix64(seed));
  std::uniform_int_distribution<int> size(0, 12);
  std::uniform_int_distribution<std::int64_t> value(0, 512);
  std::uniform_int_distribution<std::int64_t> weight(1, 512);

  bool partition_ok = true;
  for (std::uint64_t r = 0; r < rounds; ++r) {
    std::vector<std::int64_t> numbers(static_cast<std::size_t>(size(rng)));
    for (auto& v : numbers) v = value(rng);
    const auto outcome = ckk_decide({numbers, -1});
    if (outcome.best_difference != brute_force_partition(numbers)) {
      partition_ok = false;
      break;
    }
  }
  report("partition search matches enumeration", partition_ok);

  bool election_ok = true;
  for (std::uint64_t r = 0; r < rounds; ++r) {
    ManipulationInstance inst;
    inst.a = value(rng);
    inst.b = value(rng);
    inst.c = value(rng);
    inst.coalition.resize(static_cast<std::size_t>(size(rng)));
    for (auto& w : inst.coalition) w = weight(rng);
    const auto res = decide_manipulation(inst);
    if (res.manipulable != brute_force_manipulation(inst) ||
        (res.manipulable && !verify_assignment(inst, res.assignment))) {
      election_ok = false;
      break;
    }
  }
  report("manipulation decision matches enumeration", election_ok);

  const GeneratorSpec spec{VoteModel::uniform, 64, 8, 256, 0, 0, 0, seed};
  const CurvePoint one = estimate_point(spec, 200, 1);
  const CurvePoint four = estimate_point(spec, 200, 4);
  report("estimates identical across worker counts",
         one.p_hat == four.p_hat && one.branch_mean == four.branch_mean &&
             one.branch_median == four.branch_median && one.branch_max == four.branch_max);

  const GeneratorSpec tiny_hung{VoteModel::hung, 0, 2, 1, 0, 0, 0, seed};
  report("two unit weights always split a hung election",
         estimate_point(tiny_hung, 50, 1).p_hat == 1.0);

  std::cout << (failures == 0 ? "selftest: PASS" : "selftest: FAIL") << '\n';
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"veto-election manipulation solver and experiment harness"};
  app.set_version_flag("--version", std::string("vetomanip ") + kVersion);
  app.require_subcommand(1);

  // decide
  std::string instance_path;
  auto* decide = app.add_subcommand("decide", "decide one instance file ('-' for stdin)");
  decide->add_option("file", instance_path, "instance file")->required();

  // shared sweep flags
  std::uint64_t trials = 10000;
  std::uint64_t seed = 0;
  int workers = 1;
  std::string out_path = "-";
  std::string preset;

  // curve
  auto* curve = app.add_subcommand("curve", "estimate manipulability over a parameter sweep");
  std::string kind_name = "uniform";
  std::vector<std::int64_t> n_values;
  std::vector<std::int64_t> m_values;
  std::vector<double> x_values;
  std::vector<std::int64_t> k_values;
  double mean = 256.0;
  double sd = 128.0;
  auto* curve_preset = curve->add_option("--preset", preset, "fig1|fig2|fig3|fig4|fig5");
  curve->add_option("--kind", kind_name, "uniform|normal")->check(CLI::IsMember({"uniform", "normal"}));
  curve->add_option("--n", n_values, "electorate sizes")->excludes(curve_preset);
  curve->add_option("--m", m_values, "coalition sizes")->excludes(curve_preset);
  curve->add_option("--x", x_values, "rescaled coalition sizes m/sqrt(n)")
      ->excludes(curve->get_option("--m"))->excludes(curve_preset);
  curve->add_option("--k", k_values, "weight bounds")->excludes(curve_preset);
  curve->add_option("--mean", mean, "normal weight mean");
  curve->add_option("--sd", sd, "normal weight sd");

  // hung
  auto* hung = app.add_subcommand("hung", "hung-election sweeps over the weight range");
  std::int64_t hung_m = 20;
  std::vector<std::int64_t> log2k_values;
  std::vector<double> ratio_values;
  std::vector<std::int64_t> k_prime_values;
  auto* hung_preset = hung->add_option("--preset", preset, "fig6|fig7|fig8");
  hung->add_option("--m", hung_m, "coalition size")->excludes(hung_preset);
  hung->add_option("--log2k", log2k_values, "log2 of the weight bound, one point each")
      ->excludes(hung_preset);
  hung->add_option("--ratio", ratio_values, "log2(k)/m values, one point each")
      ->excludes(hung->get_option("--log2k"))->excludes(hung_preset);
  hung->add_option("--k-prime", k_prime_values,
                   "weight bounds of one random extra voter (switches model)")
      ->excludes(hung_preset);

  for (auto* cmd : {curve, hung}) {
    cmd->add_option("--trials", trials, "trials per point")->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--seed", seed, "base seed (required: no silent nondeterminism)")->required();
    cmd->add_option("--workers", workers, "trial pool size")->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--out", out_path, "output CSV path ('-' for stdout)")->capture_default_str();
  }

  // bound
  auto* bound = app.add_subcommand("bound", "hard-instance probability bound");
  std::int64_t bound_m = 0, bound_n = 0, bound_k = 0;
  double alpha = 1.0;
  QuadratureOptions quad;
  bound->add_option("--m", bound_m, "coalition size")->required()->check(CLI::PositiveNumber);
  bound->add_option("--n", bound_n, "electorate size")->required()->check(CLI::PositiveNumber);
  bound->add_option("--k", bound_k, "weight bound")->required()->check(CLI::PositiveNumber);
  bound->add_option("--alpha", alpha, "width constant of the hard band")
      ->check(CLI::NonNegativeNumber)->capture_default_str();
  bound->add_option("--tol", quad.abs_tol, "quadrature absolute tolerance")
      ->capture_default_str();
  bound->add_option("--trunc-sigmas", quad.trunc_sigmas, "outer truncation in sigmas")
      ->capture_default_str();

  // selftest
  auto* selftest = app.add_subcommand("selftest", "quick internal cross-checks");
  std::uint64_t selftest_seed = 1;
  std::uint64_t selftest_rounds = 300;
  selftest->add_option("--seed", selftest_seed, "seed")->capture_default_str();
  selftest->add_option("--rounds", selftest_rounds, "checks per suite")
      ->check(CLI::PositiveNumber)->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (decide->parsed()) return run_decide(instance_path);

    if (curve->parsed() || hung->parsed()) {
      SweepPlan plan;
      if (!preset.empty()) {
        plan = preset_plan(preset);
      } else if (curve->parsed()) {
        plan.base.kind = vote_model_from_name(kind_name);
        if (plan.base.kind == VoteModel::normal) {
          plan.base.mean = mean;
          plan.base.sd = sd;
          plan.config_lines.push_back("kind normal, mean=" + std::to_string(mean) +
                                      ", sd=" + std::to_string(sd));
        } else {
          plan.config_lines.push_back("kind uniform");
        }
        if (n_values.empty()) throw CLI::ValidationError("--n", "at least one electorate size");
        if (k_values.empty()) k_values = {256};
        for (std::int64_t n : n_values) {
          std::vector<std::int64_t> ms = m_values;
          if (!x_values.empty()) ms = sizes_for_grid(n, x_values);
          if (ms.empty()) throw CLI::ValidationError("--m", "give --m or --x");
          for (std::int64_t k : k_values) {
            for (std::int64_t m : ms) plan.sweep.push_back({n, m, k, std::nullopt});
          }
        }
        plan.config_lines.push_back("n {" + join_int(n_values) + "}" +
                                    (x_values.empty() ? " m {" + join_int(m_values) + "}"
                                                      : " x {" + join_double(x_values) + "}") +
                                    " k {" + join_int(k_values) + "}");
      } else {
        plan.base.kind = k_prime_values.empty() ? VoteModel::hung : VoteModel::hung_one_random;
        plan.base.m = hung_m;
        plan.base.k = 1;
        plan.base.k_prime = k_prime_values.empty() ? 0 : 1;
        std::vector<std::int64_t> log2ks = log2k_values;
        for (double r : ratio_values) log2ks.push_back(std::llround(r * hung_m));
        if (log2ks.empty() && k_prime_values.empty()) {
          throw CLI::ValidationError("--log2k", "give --log2k, --ratio, or --k-prime");
        }
        if (log2ks.empty()) log2ks = {hung_m};  // k' sweep at log2(k)/m = 1
        for (std::int64_t j : log2ks) {
          if (j < 0 || j > 30) throw CLI::ValidationError("--log2k", "log2(k) must be in 0..30");
          if (k_prime_values.empty()) {
            plan.sweep.push_back({std::nullopt, std::nullopt, std::int64_t{1} << j, std::nullopt});
          } else {
            for (std::int64_t kp : k_prime_values) {
              plan.sweep.push_back({std::nullopt, std::nullopt, std::int64_t{1} << j, kp});
            }
          }
        }
        plan.config_lines.push_back("kind " + std::string(vote_model_name(plan.base.kind)) +
                                    ", m=" + std::to_string(hung_m) + ", log2k {" +
                                    join_int(log2ks) + "}" +
                                    (k_prime_values.empty()
                                         ? ""
                                         : " k' {" + join_int(k_prime_values) + "}"));
      }
      plan.base.base_seed = seed;
      const auto points = probability_curve(plan.base, plan.sweep, trials, workers);
      return write_csv_output(out_path, plan, points, trials, seed,
                              curve->parsed() ? "curve" : "hung");
    }

    if (bound->parsed()) {
      const HardBoundResult r = hard_bound(bound_m, bound_n, bound_k, alpha, quad);
      char buf[64];
      std::cout << "# m " << bound_m << " n " << bound_n << " k " << bound_k << " alpha "
                << alpha << '\n';
      std::snprintf(buf, sizeof(buf), "%.1e", quad.abs_tol);
      std::cout << "# quadrature abs_tol " << buf << ", outer truncation mu+"
                << quad.trunc_sigmas << "*sigma\n";
      std::snprintf(buf, sizeof(buf), "%.12e", r.numeric);
      std::cout << "numeric_bound " << buf << '\n';
      std::snprintf(buf, sizeof(buf), "%.12e", r.asymptotic);
      std::cout << "asymptotic_bound " << buf << '\n';
      std::snprintf(buf, sizeof(buf), "%.3e", r.abs_error);
      std::cout << "quadrature_abs_error " << buf << '\n';
      return 0;
    }

    if (selftest->parsed()) return run_selftest(selftest_seed, selftest_rounds);
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
