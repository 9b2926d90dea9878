#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "vetomanip/election.hpp"
#include "vetomanip/partition.hpp"

namespace testutil {

inline std::mt19937_64 make_rng(std::uint64_t seed = 0x5EEDBA5EULL) {
  return std::mt19937_64{seed};
}

inline std::vector<std::int64_t> random_numbers(std::mt19937_64& rng, std::size_t max_size,
                                                std::int64_t max_value) {
  std::uniform_int_distribution<std::size_t> size(0, max_size);
  std::uniform_int_distribution<std::int64_t> value(0, max_value);
  std::vector<std::int64_t> numbers(size(rng));
  for (auto& v : numbers) v = value(rng);
  return numbers;
}

inline vetomanip::ManipulationInstance random_instance(std::mt19937_64& rng,
                                                       std::size_t max_members,
                                                       std::int64_t max_weight) {
  std::uniform_int_distribution<std::int64_t> totals(0, max_weight);
  std::uniform_int_distribution<std::size_t> members(0, max_members);
  std::uniform_int_distribution<std::int64_t> weight(1, max_weight);
  vetomanip::ManipulationInstance inst;
  inst.a = totals(rng);
  inst.b = totals(rng);
  inst.c = totals(rng);
  inst.coalition.resize(members(rng));
  for (auto& w : inst.coalition) w = weight(rng);
  return inst;
}

// Signed bag difference recomputed from scratch.
inline std::int64_t difference_of(const std::vector<std::int64_t>& numbers,
                                  const std::vector<std::uint8_t>& assignment) {
  std::int64_t diff = 0;
  for (std::size_t i = 0; i < numbers.size(); ++i) {
    diff += assignment[i] == 0 ? numbers[i] : -numbers[i];
  }
  return diff < 0 ? -diff : diff;
}

}  // namespace testutil
