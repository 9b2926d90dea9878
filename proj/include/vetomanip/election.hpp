#pragma once

#include <cstdint>
#include <vector>

#include "vetomanip/partition.hpp"

namespace vetomanip {

/// A three-candidate veto election seen from the manipulating coalition:
/// veto weight already cast against each candidate, plus the coalition's own
/// veto weights. The coalition wants C to win; the candidate with the least
/// total veto weight wins and ties go to the manipulators.
struct ManipulationInstance {
  std::int64_t a = 0;  // sincere veto weight against A
  std::int64_t b = 0;  // sincere veto weight against B
  std::int64_t c = 0;  // sincere veto weight against C, the coalition's pick
  std::vector<std::int64_t> coalition;  // positive veto weights, one per member
  std::int64_t n = 0;                   // sincere voter count (metadata only)

  std::int64_t coalition_weight() const;
  bool operator==(const ManipulationInstance&) const = default;
};

/// The three regimes of (a, b, c) relative to the favored candidate.
enum class CaseLabel {
  both_losers_ahead,  // min(a, b) >= c: any veto split works
  one_loser_ahead,    // max(a, b) >= c > min(a, b): pile onto the lighter loser
  deficit,            // max(a, b) < c: a genuine partitioning problem
};

enum class VetoTarget : std::uint8_t { A = 0, B = 1 };

struct ManipulationResult {
  bool manipulable = false;
  std::int64_t veto_to_a = 0;
  std::int64_t veto_to_b = 0;
  std::vector<VetoTarget> assignment;  // per coalition member; empty unless manipulable
  SearchStats stats;
};

CaseLabel classify_case(std::int64_t a, std::int64_t b, std::int64_t c);

/// Reduces the manipulation decision to two-way partitioning: the numbers are
/// the coalition weights plus one synthetic element |a-b| (kept last), and a
/// bag-sum difference of at most a+b-2c+sum(W) must be reachable.
PartitionProblem reduce_to_partition(const ManipulationInstance& instance);

/// Decides whether the coalition can make C win, with a certificate when it
/// can. The two easy regimes are answered directly with zero branches; the
/// deficit regime runs the complete partitioning search.
ManipulationResult decide_manipulation(const ManipulationInstance& instance);

/// True iff the given veto split makes C win (weak inequalities: ties favor
/// the manipulators). Throws if the assignment does not match the coalition.
bool verify_assignment(const ManipulationInstance& instance,
                       const std::vector<VetoTarget>& assignment);

/// Enumeration oracle over all 2^m veto splits; rejects coalitions larger
/// than 20 members.
bool brute_force_manipulation(const ManipulationInstance& instance);

}  // namespace vetomanip
