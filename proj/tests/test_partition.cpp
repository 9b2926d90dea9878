#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <vector>

#include "test_util.hpp"
#include "vetomanip/partition.hpp"

using namespace vetomanip;
using testutil::difference_of;

TEST_CASE("brute force oracle on pinned inputs") {
  CHECK(brute_force_partition({}) == 0);
  CHECK(brute_force_partition({3, 1, 1}) == 1);
  CHECK(brute_force_partition({7}) == 7);
  CHECK(brute_force_partition({5, 5}) == 0);

  // Powers of two: the largest always dominates the rest by exactly one.
  std::vector<std::int64_t> powers;
  for (int j = 0; j <= 9; ++j) powers.push_back(std::int64_t{1} << j);
  CHECK(brute_force_partition(powers) == 1);

  CHECK_THROWS_AS(brute_force_partition(std::vector<std::int64_t>(25, 1)),
                  std::invalid_argument);
  CHECK_THROWS_AS(brute_force_partition({-1}), std::invalid_argument);
}

TEST_CASE("kk heuristic on pinned inputs") {
  SUBCASE("empty input") {
    const auto out = kk_heuristic({{}, 0});
    CHECK(out.best_difference == 0);
    CHECK(out.feasible);
    CHECK(out.assignment.empty());
    CHECK(out.stats.branches == 0);
  }
  SUBCASE("symmetric pair") {
    const auto out = kk_heuristic({{5, 5}, 0});
    CHECK(out.best_difference == 0);
    CHECK(out.feasible);
    CHECK(difference_of({5, 5}, out.assignment) == 0);
  }
  SUBCASE("greedy differencing trace") {
    // 8,7 -> 1; 6,5 -> 1; 4,1 -> 3; 3,1 -> 2. The optimum is 0 ({7,8} vs
    // {4,5,6}), which the greedy pass misses.
    const auto out = kk_heuristic({{4, 5, 6, 7, 8}, 0});
    CHECK(out.best_difference == 2);
    CHECK_FALSE(out.feasible);
    CHECK(out.stats.branches == 0);
    CHECK(difference_of({4, 5, 6, 7, 8}, out.assignment) == 2);
    CHECK(brute_force_partition({4, 5, 6, 7, 8}) == 0);
  }
}

TEST_CASE("complete search on pinned inputs") {
  SUBCASE("forced imbalance") {
    const auto out = ckk_decide({{1, 2, 4}, 0});
    CHECK_FALSE(out.feasible);
    CHECK(out.best_difference == 1);
    CHECK(out.stats.branches == 0);  // 4 dominates 1+2 at the root
  }
  SUBCASE("two elements over threshold") {
    const auto out = ckk_decide({{1, 9}, 6});
    CHECK_FALSE(out.feasible);
    CHECK(out.best_difference == 8);
  }
  SUBCASE("single element meets its own threshold") {
    const auto out = ckk_decide({{42}, 42});
    CHECK(out.feasible);
    CHECK(out.best_difference == 42);
    CHECK(out.stats.branches == 0);
  }
  SUBCASE("search recovers the optimum the heuristic missed") {
    const auto out = ckk_decide({{4, 5, 6, 7, 8}, 0});
    CHECK(out.feasible);
    CHECK(out.best_difference == 0);
    CHECK(difference_of({4, 5, 6, 7, 8}, out.assignment) == 0);
  }
  SUBCASE("negative threshold forces an exhaustive run") {
    const auto out = ckk_decide({{4, 5, 6, 7, 8}, -1});
    CHECK_FALSE(out.feasible);
    CHECK(out.best_difference == 0);
    CHECK_FALSE(out.stats.terminated_early);
  }
}

TEST_CASE("exhaustive search matches the enumeration oracle") {
  auto rng = testutil::make_rng(0xC0FFEE01ULL);
  for (int round = 0; round < 3000; ++round) {
    const auto numbers = testutil::random_numbers(rng, 16, 1 << 12);
    const auto out = ckk_decide({numbers, -1});
    const auto expected = brute_force_partition(numbers);
    CAPTURE(numbers);
    REQUIRE(out.best_difference == expected);
    REQUIRE(difference_of(numbers, out.assignment) == expected);
    REQUIRE(out.assignment.size() == numbers.size());
  }
}

TEST_CASE("achievable differences keep the parity of the total") {
  auto rng = testutil::make_rng(0xC0FFEE02ULL);
  for (int round = 0; round < 2000; ++round) {
    const auto numbers = testutil::random_numbers(rng, 20, 1 << 10);
    std::int64_t sum = 0;
    for (auto v : numbers) sum += v;
    CHECK(kk_heuristic({numbers, 0}).best_difference % 2 == sum % 2);
    CHECK(ckk_decide({numbers, -1}).best_difference % 2 == sum % 2);
  }
}

TEST_CASE("heuristic never beats the complete search") {
  auto rng = testutil::make_rng(0xC0FFEE03ULL);
  for (int round = 0; round < 2000; ++round) {
    const auto numbers = testutil::random_numbers(rng, 16, 1 << 12);
    CHECK(kk_heuristic({numbers, 0}).best_difference >=
          ckk_decide({numbers, -1}).best_difference);
  }
}

TEST_CASE("feasible certificates re-sum within the threshold") {
  auto rng = testutil::make_rng(0xC0FFEE04ULL);
  std::uniform_int_distribution<std::int64_t> thresholds(0, 1 << 10);
  int feasible_seen = 0;
  for (int round = 0; round < 2000; ++round) {
    const auto numbers = testutil::random_numbers(rng, 14, 1 << 10);
    const std::int64_t threshold = thresholds(rng);
    const auto out = ckk_decide({numbers, threshold});
    if (out.feasible) {
      ++feasible_seen;
      CHECK(out.best_difference <= threshold);
      CHECK(difference_of(numbers, out.assignment) == out.best_difference);
    } else {
      CHECK(out.best_difference == brute_force_partition(numbers));
      CHECK(out.best_difference > threshold);
    }
  }
  CHECK(feasible_seen > 0);
}

TEST_CASE("feasibility is scale invariant") {
  auto rng = testutil::make_rng(0xC0FFEE05ULL);
  std::uniform_int_distribution<std::int64_t> thresholds(0, 1 << 8);
  for (std::int64_t lambda : {2, 3, 7}) {
    for (int round = 0; round < 500; ++round) {
      auto numbers = testutil::random_numbers(rng, 12, 1 << 8);
      const std::int64_t threshold = thresholds(rng);
      const auto base = ckk_decide({numbers, threshold});
      for (auto& v : numbers) v *= lambda;
      const auto scaled = ckk_decide({numbers, threshold * lambda});
      CHECK(base.feasible == scaled.feasible);
      CHECK(scaled.best_difference == base.best_difference * lambda);
    }
  }
}

TEST_CASE("feasibility is monotone in the threshold") {
  auto rng = testutil::make_rng(0xC0FFEE06ULL);
  std::uniform_int_distribution<std::int64_t> thresholds(0, 1 << 9);
  std::uniform_int_distribution<std::int64_t> bumps(0, 1 << 9);
  for (int round = 0; round < 1000; ++round) {
    const auto numbers = testutil::random_numbers(rng, 12, 1 << 9);
    const std::int64_t t = thresholds(rng);
    if (ckk_decide({numbers, t}).feasible) {
      CHECK(ckk_decide({numbers, t + bumps(rng)}).feasible);
    }
  }
}

TEST_CASE("search statistics stay consistent") {
  auto rng = testutil::make_rng(0xC0FFEE07ULL);
  std::uniform_int_distribution<std::int64_t> thresholds(-1, 1 << 9);
  for (int round = 0; round < 1000; ++round) {
    const auto numbers = testutil::random_numbers(rng, 12, 1 << 9);
    const auto out = ckk_decide({numbers, thresholds(rng)});
    CHECK(out.stats.branches <= out.stats.nodes);
    if (numbers.size() <= 1) CHECK(out.stats.branches == 0);
    if (out.stats.terminated_early) CHECK(out.feasible);
  }
}

TEST_CASE("duplicates and zeros are ordinary inputs") {
  const auto out = ckk_decide({{0, 0, 3, 3, 0}, 0});
  CHECK(out.feasible);
  CHECK(out.best_difference == 0);
  CHECK(difference_of({0, 0, 3, 3, 0}, out.assignment) == 0);
  CHECK_THROWS_AS(ckk_decide({{3, -3}, 0}), std::invalid_argument);
}
