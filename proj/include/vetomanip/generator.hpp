#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "vetomanip/election.hpp"

namespace vetomanip {

enum class VoteModel : std::uint8_t { uniform, normal, hung, hung_one_random };

const char* vote_model_name(VoteModel kind);
VoteModel vote_model_from_name(std::string_view name);

/// Parameters of a random-instance family plus a base seed. Every generator
/// is a pure function of (spec, trial_index); trials are seeded independently
/// so evaluation order and worker count never change the output.
struct GeneratorSpec {
  VoteModel kind = VoteModel::uniform;
  std::int64_t n = 0;        // sincere voters (metadata only for hung kinds)
  std::int64_t m = 0;        // coalition size
  std::int64_t k = 0;        // weight bound: draws are integer-uniform on [1, k]
  double mean = 0.0;         // normal kind
  double sd = 0.0;           // normal kind
  std::int64_t k_prime = 0;  // weight bound of the extra voter (hung_one_random)
  std::uint64_t base_seed = 0;
};

/// PRNG recorded in output metadata.
inline constexpr const char* kPrngDescription = "splitmix64(base_seed,trial)->mt19937_64";

std::uint64_t splitmix64(std::uint64_t x);
std::mt19937_64 trial_rng(std::uint64_t base_seed, std::uint64_t trial_index);

/// Throws std::invalid_argument when a parameter required by the kind is
/// missing, non-positive, or unsatisfiable.
void validate_spec(const GeneratorSpec& spec);

ManipulationInstance gen_uniform(const GeneratorSpec& spec, std::uint64_t trial_index);
ManipulationInstance gen_normal(const GeneratorSpec& spec, std::uint64_t trial_index);
ManipulationInstance gen_hung(const GeneratorSpec& spec, std::uint64_t trial_index);
ManipulationInstance gen_hung_one_random(const GeneratorSpec& spec, std::uint64_t trial_index);

/// Dispatches on spec.kind.
ManipulationInstance generate(const GeneratorSpec& spec, std::uint64_t trial_index);

}  // namespace vetomanip
