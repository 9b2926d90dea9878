#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <vector>

#include "test_util.hpp"
#include "vetomanip/election.hpp"

using namespace vetomanip;

namespace {

ManipulationInstance make(std::int64_t a, std::int64_t b, std::int64_t c,
                          std::vector<std::int64_t> coalition) {
  ManipulationInstance inst;
  inst.a = a;
  inst.b = b;
  inst.c = c;
  inst.coalition = std::move(coalition);
  return inst;
}

void check_result_invariants(const ManipulationInstance& inst, const ManipulationResult& res) {
  if (!res.manipulable) return;
  REQUIRE(res.assignment.size() == inst.coalition.size());
  CHECK(res.veto_to_a + res.veto_to_b == inst.coalition_weight());
  CHECK(inst.c <= inst.a + res.veto_to_a);
  CHECK(inst.c <= inst.b + res.veto_to_b);
  CHECK(verify_assignment(inst, res.assignment));
}

}  // namespace

TEST_CASE("case labels follow the loser totals") {
  CHECK(classify_case(10, 7, 5) == CaseLabel::both_losers_ahead);
  CHECK(classify_case(10, 2, 5) == CaseLabel::one_loser_ahead);
  CHECK(classify_case(1, 2, 9) == CaseLabel::deficit);
  // symmetric in (a, b), ties count as ahead
  CHECK(classify_case(2, 10, 5) == CaseLabel::one_loser_ahead);
  CHECK(classify_case(5, 5, 5) == CaseLabel::both_losers_ahead);
  CHECK(classify_case(5, 4, 5) == CaseLabel::one_loser_ahead);
}

TEST_CASE("reduction to partitioning on pinned instances") {
  SUBCASE("asymmetric losers") {
    const auto problem = reduce_to_partition(make(10, 1, 3, {1}));
    CHECK(problem.numbers == std::vector<std::int64_t>{1, 9});
    CHECK(problem.threshold == 6);
    CHECK_FALSE(ckk_decide(problem).feasible);
  }
  SUBCASE("hung election needs a perfect split") {
    const auto problem = reduce_to_partition(make(0, 0, 5, {4, 2, 3, 1}));
    CHECK(problem.numbers == std::vector<std::int64_t>{4, 2, 3, 1, 0});
    CHECK(problem.threshold == 0);
  }
  SUBCASE("empty coalition in a won election") {
    const auto problem = reduce_to_partition(make(0, 0, 0, {}));
    CHECK(problem.numbers == std::vector<std::int64_t>{0});
    CHECK(problem.threshold == 0);
    CHECK(ckk_decide(problem).feasible);
  }
}

TEST_CASE("decisions on pinned instances") {
  SUBCASE("split one veto onto each loser") {
    const auto inst = make(5, 5, 6, {1, 1});
    const auto res = decide_manipulation(inst);
    CHECK(res.manipulable);
    CHECK(res.veto_to_a == 1);
    CHECK(res.veto_to_b == 1);
    check_result_invariants(inst, res);
  }
  SUBCASE("lighter loser stays short") {
    const auto res = decide_manipulation(make(10, 1, 3, {1}));
    CHECK_FALSE(res.manipulable);
    CHECK(res.assignment.empty());
    CHECK(res.stats.branches == 0);  // answered without partitioning
  }
  SUBCASE("already won with no coalition") {
    const auto inst = make(7, 9, 7, {});
    const auto res = decide_manipulation(inst);
    CHECK(res.manipulable);
    check_result_invariants(inst, res);
  }
}

TEST_CASE("easy regimes are answered with zero branches") {
  auto rng = testutil::make_rng(0xE1EC7001ULL);
  int both = 0;
  int one = 0;
  for (int round = 0; round < 2000; ++round) {
    const auto inst = testutil::random_instance(rng, 10, 1 << 8);
    const auto label = classify_case(inst.a, inst.b, inst.c);
    if (label == CaseLabel::deficit) continue;
    ++(label == CaseLabel::both_losers_ahead ? both : one);
    const auto res = decide_manipulation(inst);
    CHECK(res.stats.branches == 0);
    CHECK(res.stats.nodes == 0);
    if (label == CaseLabel::both_losers_ahead) CHECK(res.manipulable);
    check_result_invariants(inst, res);
  }
  CHECK(both > 0);
  CHECK(one > 0);
}

TEST_CASE("single-member coalitions never branch") {
  auto rng = testutil::make_rng(0xE1EC7002ULL);
  for (int round = 0; round < 500; ++round) {
    auto inst = testutil::random_instance(rng, 0, 1 << 8);
    inst.coalition = {1 + static_cast<std::int64_t>(round % 251)};
    CHECK(decide_manipulation(inst).stats.branches == 0);
  }
}

TEST_CASE("verify_assignment on pinned splits") {
  CHECK_FALSE(verify_assignment(make(5, 5, 6, {1, 1}), {VetoTarget::A, VetoTarget::A}));
  CHECK(verify_assignment(make(5, 5, 6, {1, 1}), {VetoTarget::A, VetoTarget::B}));
  CHECK(verify_assignment(make(5, 5, 5, {}), {}));
  CHECK_FALSE(verify_assignment(make(0, 0, 1, {2}), {VetoTarget::A}));
  CHECK_THROWS_AS(verify_assignment(make(1, 1, 1, {2, 3}), {VetoTarget::A}),
                  std::invalid_argument);
}

TEST_CASE("enumeration oracle on pinned instances") {
  CHECK(brute_force_manipulation(make(5, 5, 6, {1, 1})));
  CHECK_FALSE(brute_force_manipulation(make(10, 1, 3, {1})));
  CHECK_THROWS_AS(brute_force_manipulation(make(0, 0, 0, std::vector<std::int64_t>(21, 1))),
                  std::invalid_argument);
}

TEST_CASE("decision matches the enumeration oracle across all regimes") {
  auto rng = testutil::make_rng(0xE1EC7003ULL);
  int seen[3] = {0, 0, 0};
  for (int round = 0; round < 20000; ++round) {
    const auto inst = testutil::random_instance(rng, 12, 1 << 10);
    ++seen[static_cast<int>(classify_case(inst.a, inst.b, inst.c))];
    const auto res = decide_manipulation(inst);
    CAPTURE(inst.a);
    CAPTURE(inst.b);
    CAPTURE(inst.c);
    CAPTURE(inst.coalition);
    REQUIRE(res.manipulable == brute_force_manipulation(inst));
    check_result_invariants(inst, res);
    // the reduction answers the same question on its own
    REQUIRE(ckk_decide(reduce_to_partition(inst)).feasible == res.manipulable);
  }
  CHECK(seen[0] > 0);
  CHECK(seen[1] > 0);
  CHECK(seen[2] > 0);
}

TEST_CASE("swapping the losers preserves manipulability") {
  auto rng = testutil::make_rng(0xE1EC7004ULL);
  for (int round = 0; round < 3000; ++round) {
    auto inst = testutil::random_instance(rng, 10, 1 << 9);
    const bool before = decide_manipulation(inst).manipulable;
    std::swap(inst.a, inst.b);
    CHECK(decide_manipulation(inst).manipulable == before);
  }
}

TEST_CASE("extra coalition weight never hurts") {
  auto rng = testutil::make_rng(0xE1EC7005ULL);
  std::uniform_int_distribution<std::int64_t> extra(1, 1 << 9);
  for (int round = 0; round < 3000; ++round) {
    auto inst = testutil::random_instance(rng, 10, 1 << 9);
    if (!decide_manipulation(inst).manipulable) continue;
    inst.coalition.push_back(extra(rng));
    CHECK(decide_manipulation(inst).manipulable);
  }
}

TEST_CASE("the decision is scale invariant") {
  auto rng = testutil::make_rng(0xE1EC7006ULL);
  for (std::int64_t lambda : {2, 5, 11}) {
    for (int round = 0; round < 1000; ++round) {
      auto inst = testutil::random_instance(rng, 10, 1 << 8);
      const bool before = decide_manipulation(inst).manipulable;
      inst.a *= lambda;
      inst.b *= lambda;
      inst.c *= lambda;
      for (auto& w : inst.coalition) w *= lambda;
      CHECK(decide_manipulation(inst).manipulable == before);
    }
  }
}

TEST_CASE("an empty coalition wins exactly the already-won elections") {
  auto rng = testutil::make_rng(0xE1EC7007ULL);
  for (int round = 0; round < 2000; ++round) {
    const auto inst = testutil::random_instance(rng, 0, 1 << 10);
    CHECK(decide_manipulation(inst).manipulable ==
          (inst.c <= std::min(inst.a, inst.b)));
  }
}

TEST_CASE("hung elections reduce to perfect partitioning") {
  auto rng = testutil::make_rng(0xE1EC7008ULL);
  std::uniform_int_distribution<std::int64_t> weight(1, 1 << 6);
  for (int round = 0; round < 2000; ++round) {
    std::vector<std::int64_t> coalition(2 + static_cast<std::size_t>(round % 9));
    for (auto& w : coalition) w = weight(rng);
    std::int64_t total = 0;
    for (auto w : coalition) total += w;
    if (total % 2 != 0) coalition.push_back(1), total += 1;
    const auto inst = make(0, 0, total / 2, coalition);
    CHECK(decide_manipulation(inst).manipulable == (brute_force_partition(coalition) == 0));
  }
}

TEST_CASE("invalid instances are rejected") {
  CHECK_THROWS_AS(decide_manipulation(make(-1, 0, 0, {})), std::invalid_argument);
  CHECK_THROWS_AS(decide_manipulation(make(0, 0, 0, {0})), std::invalid_argument);
}
