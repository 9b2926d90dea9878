#pragma once

#include <cstdint>
#include <vector>

namespace vetomanip {

/// Cost counters for one solver run. `branches` counts the binary decision
/// points whose children were both explored or scheduled; leaves and pruned
/// nodes do not count, so trivially solved inputs report zero branches.
struct SearchStats {
  std::uint64_t branches = 0;
  std::uint64_t nodes = 0;
  bool terminated_early = false;
};

/// Two-way partitioning instance: split `numbers` into two bags whose sums
/// differ by at most `threshold`. A negative threshold requests an exhaustive
/// run that reports the optimal difference (and is never feasible).
struct PartitionProblem {
  std::vector<std::int64_t> numbers;  // non-negative; duplicates and zeros allowed
  std::int64_t threshold = 0;
};

struct PartitionOutcome {
  bool feasible = false;
  std::int64_t best_difference = 0;
  std::vector<std::uint8_t> assignment;  // bag label (0/1) per input element
  SearchStats stats;
};

/// Largest-differencing (Karmarkar-Karp) greedy heuristic. Never branches.
PartitionOutcome kk_heuristic(const PartitionProblem& problem);

/// Complete Karmarkar-Karp branch and bound. At each node the two largest
/// values are replaced either by their difference (tried first) or by their
/// sum; a node whose largest value dominates the rest is closed immediately.
/// With threshold >= 0 the search stops at the first certificate; with a
/// negative threshold it runs exhaustively and reports the optimum.
PartitionOutcome ckk_decide(const PartitionProblem& problem);

/// Exact minimum difference by enumerating every assignment. Test oracle;
/// rejects inputs with more than 24 elements.
std::int64_t brute_force_partition(const std::vector<std::int64_t>& numbers);

}  // namespace vetomanip
