#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "vetomanip/experiment.hpp"
#include "vetomanip/io.hpp"
#include "vetomanip/version.hpp"

namespace py = pybind11;
using namespace pybind11::literals;
using namespace vetomanip;

PYBIND11_MODULE(_core, m) {
  m.doc() = "veto-election manipulation solver and experiment harness";
  m.attr("__version__") = kVersion;
  m.attr("PRNG_DESCRIPTION") = kPrngDescription;

  py::class_<SearchStats>(m, "SearchStats")
      .def(py::init<>())
      .def_readwrite("branches", &SearchStats::branches)
      .def_readwrite("nodes", &SearchStats::nodes)
      .def_readwrite("terminated_early", &SearchStats::terminated_early)
      .def("__repr__", [](const SearchStats& s) {
        std::ostringstream os;
        os << "SearchStats(branches=" << s.branches << ", nodes=" << s.nodes
           << ", terminated_early=" << (s.terminated_early ? "True" : "False") << ")";
        return os.str();
      });

  py::class_<PartitionProblem>(m, "PartitionProblem")
      .def(py::init([](std::vector<std::int64_t> numbers, std::int64_t threshold) {
             return PartitionProblem{std::move(numbers), threshold};
           }),
           "numbers"_a = std::vector<std::int64_t>{}, "threshold"_a = 0)
      .def_readwrite("numbers", &PartitionProblem::numbers)
      .def_readwrite("threshold", &PartitionProblem::threshold);

  py::class_<PartitionOutcome>(m, "PartitionOutcome")
      .def_readonly("feasible", &PartitionOutcome::feasible)
      .def_readonly("best_difference", &PartitionOutcome::best_difference)
      .def_readonly("assignment", &PartitionOutcome::assignment)
      .def_readonly("stats", &PartitionOutcome::stats)
      .def("__repr__", [](const PartitionOutcome& o) {
        std::ostringstream os;
        os << "PartitionOutcome(feasible=" << (o.feasible ? "True" : "False")
           << ", best_difference=" << o.best_difference << ")";
        return os.str();
      });

  m.def("kk_heuristic", &kk_heuristic, "problem"_a);
  m.def("ckk_decide", &ckk_decide, "problem"_a,
        py::call_guard<py::gil_scoped_release>());
  m.def("brute_force_partition", &brute_force_partition, "numbers"_a);

  py::enum_<CaseLabel>(m, "CaseLabel")
      .value("BOTH_LOSERS_AHEAD", CaseLabel::both_losers_ahead)
      .value("ONE_LOSER_AHEAD", CaseLabel::one_loser_ahead)
      .value("DEFICIT", CaseLabel::deficit);

  py::enum_<VetoTarget>(m, "VetoTarget")
      .value("A", VetoTarget::A)
      .value("B", VetoTarget::B);

  py::class_<ManipulationInstance>(m, "ManipulationInstance")
      .def(py::init([](std::int64_t a, std::int64_t b, std::int64_t c,
                       std::vector<std::int64_t> coalition, std::int64_t n) {
             return ManipulationInstance{a, b, c, std::move(coalition), n};
           }),
           "a"_a = 0, "b"_a = 0, "c"_a = 0, "coalition"_a = std::vector<std::int64_t>{},
           "n"_a = 0)
      .def_readwrite("a", &ManipulationInstance::a)
      .def_readwrite("b", &ManipulationInstance::b)
      .def_readwrite("c", &ManipulationInstance::c)
      .def_readwrite("coalition", &ManipulationInstance::coalition)
      .def_readwrite("n", &ManipulationInstance::n)
      .def("coalition_weight", &ManipulationInstance::coalition_weight)
      .def("__eq__", [](const ManipulationInstance& x, const ManipulationInstance& y) {
        return x == y;
      })
      .def("__repr__", [](const ManipulationInstance& inst) {
        std::ostringstream os;
        os << "ManipulationInstance(a=" << inst.a << ", b=" << inst.b << ", c=" << inst.c
           << ", m=" << inst.coalition.size() << ", n=" << inst.n << ")";
        return os.str();
      });

  py::class_<ManipulationResult>(m, "ManipulationResult")
      .def_readonly("manipulable", &ManipulationResult::manipulable)
      .def_readonly("veto_to_a", &ManipulationResult::veto_to_a)
      .def_readonly("veto_to_b", &ManipulationResult::veto_to_b)
      .def_readonly("assignment", &ManipulationResult::assignment)
      .def_readonly("stats", &ManipulationResult::stats)
      .def("__repr__", [](const ManipulationResult& r) {
        std::ostringstream os;
        os << "ManipulationResult(manipulable=" << (r.manipulable ? "True" : "False")
           << ", veto_to_a=" << r.veto_to_a << ", veto_to_b=" << r.veto_to_b << ")";
        return os.str();
      });

  m.def("classify_case", &classify_case, "a"_a, "b"_a, "c"_a);
  m.def("reduce_to_partition", &reduce_to_partition, "instance"_a);
  m.def("decide_manipulation", &decide_manipulation, "instance"_a,
        py::call_guard<py::gil_scoped_release>());
  m.def("verify_assignment", &verify_assignment, "instance"_a, "assignment"_a);
  m.def("brute_force_manipulation", &brute_force_manipulation, "instance"_a,
        py::call_guard<py::gil_scoped_release>());

  py::enum_<VoteModel>(m, "VoteModel")
      .value("uniform", VoteModel::uniform)
      .value("normal", VoteModel::normal)
      .value("hung", VoteModel::hung)
      .value("hung_one_random", VoteModel::hung_one_random);

  py::class_<GeneratorSpec>(m, "GeneratorSpec")
      .def(py::init([](VoteModel kind, std::int64_t n, std::int64_t m, std::int64_t k,
                       double mean, double sd, std::int64_t k_prime, std::uint64_t base_seed) {
             return GeneratorSpec{kind, n, m, k, mean, sd, k_prime, base_seed};
           }),
           "kind"_a = VoteModel::uniform, "n"_a = 0, "m"_a = 0, "k"_a = 0, "mean"_a = 0.0,
           "sd"_a = 0.0, "k_prime"_a = 0, "base_seed"_a = 0)
      .def_readwrite("kind", &GeneratorSpec::kind)
      .def_readwrite("n", &GeneratorSpec::n)
      .def_readwrite("m", &GeneratorSpec::m)
      .def_readwrite("k", &GeneratorSpec::k)
      .def_readwrite("mean", &GeneratorSpec::mean)
      .def_readwrite("sd", &GeneratorSpec::sd)
      .def_readwrite("k_prime", &GeneratorSpec::k_prime)
      .def_readwrite("base_seed", &GeneratorSpec::base_seed);

  m.def("validate_spec", &validate_spec, "spec"_a);
  m.def("gen_uniform", &gen_uniform, "spec"_a, "trial_index"_a);
  m.def("gen_normal", &gen_normal, "spec"_a, "trial_index"_a);
  m.def("gen_hung", &gen_hung, "spec"_a, "trial_index"_a);
  m.def("gen_hung_one_random", &gen_hung_one_random, "spec"_a, "trial_index"_a);
  m.def("generate", &generate, "spec"_a, "trial_index"_a);

  py::class_<CurvePoint>(m, "CurvePoint")
      .def_readonly("spec", &CurvePoint::spec)
      .def_readonly("trials", &CurvePoint::trials)
      .def_readonly("p_hat", &CurvePoint::p_hat)
      .def_readonly("ci_halfwidth", &CurvePoint::ci_halfwidth)
      .def_readonly("branch_mean", &CurvePoint::branch_mean)
      .def_readonly("branch_median", &CurvePoint::branch_median)
      .def_readonly("branch_max", &CurvePoint::branch_max)
      .def_readonly("x_rescaled", &CurvePoint::x_rescaled)
      .def("__repr__", [](const CurvePoint& pt) {
        std::ostringstream os;
        os << "CurvePoint(p_hat=" << pt.p_hat << ", ci=" << pt.ci_halfwidth
           << ", branch_median=" << pt.branch_median << ")";
        return os.str();
      })
      .def("csv_row", &curve_csv_row);

  py::class_<FitReport>(m, "FitReport")
      .def_readonly("points", &FitReport::points)
      .def_readonly("max_abs_residual", &FitReport::max_abs_residual)
      .def_readonly("rms_residual", &FitReport::rms_residual);

  py::class_<SweepOverride>(m, "SweepOverride")
      .def(py::init([](std::optional<std::int64_t> n, std::optional<std::int64_t> m,
                       std::optional<std::int64_t> k, std::optional<std::int64_t> k_prime) {
             return SweepOverride{n, m, k, k_prime};
           }),
           "n"_a = std::nullopt, "m"_a = std::nullopt, "k"_a = std::nullopt,
           "k_prime"_a = std::nullopt);

  py::class_<QuadratureOptions>(m, "QuadratureOptions")
      .def(py::init([](double abs_tol, double trunc_sigmas) {
             return QuadratureOptions{abs_tol, trunc_sigmas};
           }),
           "abs_tol"_a = 1e-9, "trunc_sigmas"_a = 12.0)
      .def_readwrite("abs_tol", &QuadratureOptions::abs_tol)
      .def_readwrite("trunc_sigmas", &QuadratureOptions::trunc_sigmas);

  py::class_<HardBoundResult>(m, "HardBoundResult")
      .def_readonly("numeric", &HardBoundResult::numeric)
      .def_readonly("asymptotic", &HardBoundResult::asymptotic)
      .def_readonly("abs_error", &HardBoundResult::abs_error)
      .def("__repr__", [](const HardBoundResult& r) {
        std::ostringstream os;
        os << "HardBoundResult(numeric=" << r.numeric << ", asymptotic=" << r.asymptotic << ")";
        return os.str();
      });

  m.def("binomial_ci_halfwidth", &binomial_ci_halfwidth, "successes"_a, "trials"_a);
  m.def("universal_form", &universal_form, "x"_a);
  m.def("estimate_point", &estimate_point, "spec"_a, "trials"_a, "workers"_a = 1,
        py::call_guard<py::gil_scoped_release>());
  m.def("probability_curve", &probability_curve, "base"_a, "sweep"_a, "trials"_a,
        "workers"_a = 1, py::call_guard<py::gil_scoped_release>());
  m.def("cost_curve", &cost_curve, "base"_a, "sweep"_a, "trials"_a, "workers"_a = 1,
        py::call_guard<py::gil_scoped_release>());
  m.def("fit_universal", &fit_universal, "points"_a);
  m.def("hard_bound", &hard_bound, "m"_a, "n"_a, "k"_a, "alpha"_a = 1.0,
        "options"_a = QuadratureOptions{});
}
