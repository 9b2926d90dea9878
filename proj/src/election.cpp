#include "vetomanip/election.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <stdexcept>

namespace vetomanip {
namespace {

void check_instance(const ManipulationInstance& inst) {
  if (inst.a < 0 || inst.b < 0 || inst.c < 0) {
    throw std::invalid_argument("election: veto totals must be non-negative");
  }
  for (std::int64_t w : inst.coalition) {
    if (w < 1) throw std::invalid_argument("election: coalition weights must be positive");
  }
}

}  // namespace

std::int64_t ManipulationInstance::coalition_weight() const {
  std::int64_t total = 0;
  for (std::int64_t w : coalition) total += w;
  return total;
}

CaseLabel classify_case(std::int64_t a, std::int64_t b, std::int64_t c) {
  const std::int64_t hi = std::max(a, b);
  const std::int64_t lo = std::min(a, b);
  if (lo >= c) return CaseLabel::both_losers_ahead;
  if (hi >= c) return CaseLabel::one_loser_ahead;
  return CaseLabel::deficit;
}

PartitionProblem reduce_to_partition(const ManipulationInstance& inst) {
  check_instance(inst);
  PartitionProblem problem;
  problem.numbers = inst.coalition;
  problem.numbers.push_back(std::abs(inst.a - inst.b));
  problem.threshold = inst.a + inst.b - 2 * inst.c + inst.coalition_weight();
  return problem;
}

ManipulationResult decide_manipulation(const ManipulationInstance& inst) {
  check_instance(inst);
  const std::size_t m = inst.coalition.size();
  const std::int64_t total = inst.coalition_weight();
  ManipulationResult result;

  switch (classify_case(inst.a, inst.b, inst.c)) {
    case CaseLabel::both_losers_ahead: {
      // C already has weakly fewest vetoes; park everything on the heavier loser.
      result.manipulable = true;
      const VetoTarget heavier = inst.a >= inst.b ? VetoTarget::A : VetoTarget::B;
      result.assignment.assign(m, heavier);
      (heavier == VetoTarget::A ? result.veto_to_a : result.veto_to_b) = total;
      return result;
    }
    case CaseLabel::one_loser_ahead: {
      const std::int64_t lo = std::min(inst.a, inst.b);
      if (inst.c > lo + total) return result;
      result.manipulable = true;
      const VetoTarget lighter = inst.a < inst.b ? VetoTarget::A : VetoTarget::B;
      result.assignment.assign(m, lighter);
      (lighter == VetoTarget::A ? result.veto_to_a : result.veto_to_b) = total;
      return result;
    }
    case CaseLabel::deficit:
      break;
  }

  PartitionProblem problem = reduce_to_partition(inst);
  if (problem.threshold < 0) {
    // Coalition weight below the deficit 2c-a-b: infeasible without search.
    return result;
  }
  PartitionOutcome outcome = ckk_decide(problem);
  result.stats = outcome.stats;
  if (!outcome.feasible) return result;

  // The bag holding the synthetic element (last position) lifts the lighter
  // loser up to the heavier one's level, so coalition members sharing that bag
  // veto the heavier loser and the rest veto the lighter one.
  result.manipulable = true;
  const std::uint8_t synthetic_bag = outcome.assignment.back();
  const bool a_heavier = inst.a >= inst.b;
  result.assignment.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    const bool with_synthetic = outcome.assignment[i] == synthetic_bag;
    const VetoTarget target = with_synthetic == a_heavier ? VetoTarget::A : VetoTarget::B;
    result.assignment[i] = target;
    (target == VetoTarget::A ? result.veto_to_a : result.veto_to_b) += inst.coalition[i];
  }
  return result;
}

bool verify_assignment(const ManipulationInstance& inst,
                       const std::vector<VetoTarget>& assignment) {
  check_instance(inst);
  if (assignment.size() != inst.coalition.size()) {
    throw std::invalid_argument("verify_assignment: one label per coalition member required");
  }
  std::int64_t to_a = 0;
  std::int64_t to_b = 0;
  for (std::size_t i = 0; i < assignment.size(); ++i) {
    (assignment[i] == VetoTarget::A ? to_a : to_b) += inst.coalition[i];
  }
  return inst.c <= inst.a + to_a && inst.c <= inst.b + to_b;
}

bool brute_force_manipulation(const ManipulationInstance& inst) {
  check_instance(inst);
  const unsigned m = static_cast<unsigned>(inst.coalition.size());
  if (m > 20) {
    throw std::invalid_argument("brute_force_manipulation: coalition exceeds 20 members");
  }
  const std::int64_t total = inst.coalition_weight();

  std::int64_t to_a = 0;  // mask bit set -> that member vetoes A
  const auto wins = [&] {
    return inst.c <= inst.a + to_a && inst.c <= inst.b + (total - to_a);
  };
  if (wins()) return true;

  std::uint32_t gray = 0;
  for (std::uint32_t i = 1; i < (1u << m); ++i) {
    const std::uint32_t next = i ^ (i >> 1);
    const std::uint32_t flipped = next ^ gray;
    const std::size_t idx = static_cast<std::size_t>(std::countr_zero(flipped));
    to_a += (next & flipped) ? inst.coalition[idx] : -inst.coalition[idx];
    gray = next;
    if (wins()) return true;
  }
  return false;
}

}  // namespace vetomanip
