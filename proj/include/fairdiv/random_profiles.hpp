#pragma once

#include "fairdiv/profile.hpp"

#include <cstdint>
#include <random>

namespace fairdiv {

/// Shape of sampled profiles. Agents and goods are drawn uniformly from the
/// closed ranges.
struct SampleShape {
  int min_agents = 2;
  int max_agents = 3;
  int min_goods = 1;
  int max_goods = 7;
  int max_universe = 12;  // coverage only
};

inline constexpr std::uint64_t kDefaultSeed = 20240611;

/// Seeded generators; identical seeds give identical sequences.
class ProfileSampler {
 public:
  explicit ProfileSampler(std::uint64_t seed = kDefaultSeed) : rng_(seed) {}

  /// Integer values in 0..10.
  Valuation additive(int goods);
  /// Factors 1 + k/4, k in 0..8.
  Valuation multiplicative(int goods);
  /// Each good covers a random subset of 1..universe, each element w.p. 1/3.
  Valuation coverage(int goods, int universe);

  Profile additive_profile(const SampleShape& shape);
  Profile multiplicative_profile(const SampleShape& shape);
  Profile coverage_profile(const SampleShape& shape);

  int uniform(int lo, int hi);

 private:
  std::mt19937_64 rng_;
};

}  // namespace fairdiv
