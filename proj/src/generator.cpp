#include "vetomanip/generator.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace vetomanip {
namespace {

void require(bool ok, const char* message) {
  if (!ok) throw std::invalid_argument(message);
}

void check_kind(const GeneratorSpec& spec, VoteModel expected) {
  if (spec.kind != expected) {
    throw std::invalid_argument(std::string("generator: spec kind is ") +
                                vote_model_name(spec.kind) + ", expected " +
                                vote_model_name(expected));
  }
}

// Adds one sincere veto against a uniformly random candidate.
template <typename WeightDraw>
void add_sincere_veto(ManipulationInstance& inst, std::mt19937_64& rng, WeightDraw&& draw) {
  std::uniform_int_distribution<int> pick(0, 2);
  const std::int64_t w = draw(rng);
  switch (pick(rng)) {
    case 0: inst.a += w; break;
    case 1: inst.b += w; break;
    default: inst.c += w; break;
  }
}

std::vector<std::int64_t> draw_even_sum_coalition(std::mt19937_64& rng, std::int64_t m,
                                                  std::int64_t k) {
  std::uniform_int_distribution<std::int64_t> weight(1, k);
  std::vector<std::int64_t> coalition;
  coalition.reserve(static_cast<std::size_t>(m));
  std::int64_t total = 0;
  for (std::int64_t i = 0; i < m; ++i) {
    coalition.push_back(weight(rng));
    total += coalition.back();
  }
  while (total % 2 != 0) {
    total -= coalition.back();
    coalition.back() = weight(rng);
    total += coalition.back();
  }
  return coalition;
}

}  // namespace

const char* vote_model_name(VoteModel kind) {
  switch (kind) {
    case VoteModel::uniform: return "uniform";
    case VoteModel::normal: return "normal";
    case VoteModel::hung: return "hung";
    case VoteModel::hung_one_random: return "hung_one_random";
  }
  return "unknown";
}

VoteModel vote_model_from_name(std::string_view name) {
  if (name == "uniform") return VoteModel::uniform;
  if (name == "normal") return VoteModel::normal;
  if (name == "hung") return VoteModel::hung;
  if (name == "hung_one_random") return VoteModel::hung_one_random;
  throw std::invalid_argument("generator: unknown vote model '" + std::string(name) + "'");
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::mt19937_64 trial_rng(std::uint64_t base_seed, std::uint64_t trial_index) {
  return std::mt19937_64(splitmix64(base_seed ^ splitmix64(trial_index)));
}

void validate_spec(const GeneratorSpec& spec) {
  switch (spec.kind) {
    case VoteModel::uniform:
      require(spec.n >= 0 && spec.m >= 0, "uniform: n and m must be non-negative");
      require(spec.k >= 1, "uniform: k must be >= 1");
      return;
    case VoteModel::normal:
      require(spec.n >= 0 && spec.m >= 0, "normal: n and m must be non-negative");
      require(spec.mean > 0.0, "normal: mean must be > 0");
      require(spec.sd > 0.0, "normal: sd must be > 0");
      return;
    case VoteModel::hung:
    case VoteModel::hung_one_random:
      require(spec.m >= 1, "hung: m must be >= 1");
      require(spec.k >= 1, "hung: k must be >= 1");
      require(spec.k >= 2 || spec.m % 2 == 0,
              "hung: odd m with k=1 cannot reach an even coalition sum");
      if (spec.kind == VoteModel::hung_one_random) {
        require(spec.k_prime >= 1, "hung_one_random: k_prime must be >= 1");
      }
      return;
  }
  throw std::invalid_argument("generator: unknown vote model");
}

ManipulationInstance gen_uniform(const GeneratorSpec& spec, std::uint64_t trial_index) {
  check_kind(spec, VoteModel::uniform);
  validate_spec(spec);
  std::mt19937_64 rng = trial_rng(spec.base_seed, trial_index);
  std::uniform_int_distribution<std::int64_t> weight(1, spec.k);

  ManipulationInstance inst;
  inst.n = spec.n;
  for (std::int64_t i = 0; i < spec.n; ++i) {
    add_sincere_veto(inst, rng, [&](std::mt19937_64& r) { return weight(r); });
  }
  inst.coalition.reserve(static_cast<std::size_t>(spec.m));
  for (std::int64_t i = 0; i < spec.m; ++i) inst.coalition.push_back(weight(rng));
  return inst;
}

ManipulationInstance gen_normal(const GeneratorSpec& spec, std::uint64_t trial_index) {
  check_kind(spec, VoteModel::normal);
  validate_spec(spec);
  std::mt19937_64 rng = trial_rng(spec.base_seed, trial_index);
  std::normal_distribution<double> weight(spec.mean, spec.sd);
  // Round to the nearest integer, redrawing anything below 1.
  const auto draw = [&](std::mt19937_64& r) -> std::int64_t {
    for (;;) {
      const std::int64_t w = std::llround(weight(r));
      if (w >= 1) return w;
    }
  };

  ManipulationInstance inst;
  inst.n = spec.n;
  for (std::int64_t i = 0; i < spec.n; ++i) add_sincere_veto(inst, rng, draw);
  inst.coalition.reserve(static_cast<std::size_t>(spec.m));
  for (std::int64_t i = 0; i < spec.m; ++i) inst.coalition.push_back(draw(rng));
  return inst;
}

ManipulationInstance gen_hung(const GeneratorSpec& spec, std::uint64_t trial_index) {
  check_kind(spec, VoteModel::hung);
  validate_spec(spec);
  std::mt19937_64 rng = trial_rng(spec.base_seed, trial_index);

  ManipulationInstance inst;
  inst.n = spec.n;
  inst.coalition = draw_even_sum_coalition(rng, spec.m, spec.k);
  inst.c = inst.coalition_weight() / 2;  // sincere weight all lands on C
  return inst;
}

ManipulationInstance gen_hung_one_random(const GeneratorSpec& spec, std::uint64_t trial_index) {
  check_kind(spec, VoteModel::hung_one_random);
  validate_spec(spec);
  std::mt19937_64 rng = trial_rng(spec.base_seed, trial_index);

  ManipulationInstance inst;
  inst.n = spec.n;
  inst.coalition = draw_even_sum_coalition(rng, spec.m, spec.k);
  inst.c = inst.coalition_weight() / 2;
  std::uniform_int_distribution<std::int64_t> extra(1, spec.k_prime);
  add_sincere_veto(inst, rng, [&](std::mt19937_64& r) { return extra(r); });
  return inst;
}

ManipulationInstance generate(const GeneratorSpec& spec, std::uint64_t trial_index) {
  switch (spec.kind) {
    case VoteModel::uniform: return gen_uniform(spec, trial_index);
    case VoteModel::normal: return gen_normal(spec, trial_index);
    case VoteModel::hung: return gen_hung(spec, trial_index);
    case VoteModel::hung_one_random: return gen_hung_one_random(spec, trial_index);
  }
  throw std::invalid_argument("generator: unknown vote model");
}

}  // namespace vetomanip
