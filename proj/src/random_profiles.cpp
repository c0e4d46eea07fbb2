#include "fairdiv/random_profiles.hpp"

namespace fairdiv {

int ProfileSampler::uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

Valuation ProfileSampler::additive(int goods) {
  std::vector<Rational> values;
  for (int g = 0; g < goods; ++g) values.emplace_back(uniform(0, 10));
  return Valuation::additive(std::move(values));
}

Valuation ProfileSampler::multiplicative(int goods) {
  std::vector<Rational> factors;
  for (int g = 0; g < goods; ++g) factors.push_back(1 + ratio(uniform(0, 8), 4));
  return Valuation::multiplicative(std::move(factors));
}

Valuation ProfileSampler::coverage(int goods, int universe) {
  std::vector<std::vector<int>> sets(static_cast<std::size_t>(goods));
  for (auto& s : sets) {
    for (int e = 1; e <= universe; ++e) {
      if (uniform(0, 2) == 0) s.push_back(e);
    }
  }
  return Valuation::coverage(goods, universe, std::move(sets));
}

namespace {

template <class Gen>
Profile sample(ProfileSampler& rng, const SampleShape& shape, Gen gen) {
  const int n = rng.uniform(shape.min_agents, shape.max_agents);
  const int m = rng.uniform(shape.min_goods, shape.max_goods);
  std::vector<Valuation> vs;
  for (int i = 0; i < n; ++i) vs.push_back(gen(m));
  return Profile(m, std::move(vs));
}

}  // namespace

Profile ProfileSampler::additive_profile(const SampleShape& shape) {
  return sample(*this, shape, [&](int m) { return additive(m); });
}

Profile ProfileSampler::multiplicative_profile(const SampleShape& shape) {
  return sample(*this, shape, [&](int m) { return multiplicative(m); });
}

Profile ProfileSampler::coverage_profile(const SampleShape& shape) {
  return sample(*this, shape, [&](int m) { return coverage(m, uniform(1, shape.max_universe)); });
}

}  // namespace fairdiv
