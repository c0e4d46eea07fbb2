#include "fairdiv/fairness.hpp"

#include "fairdiv/errors.hpp"

namespace fairdiv {

FairnessReport is_alpha_ef1(const Profile& p, const PartialAllocation& bundles, const Rational& alpha) {
  if (alpha < 0 || alpha > 1) throw InvalidArgument("alpha must lie in [0, 1]");
  const int n = p.agents();
  if (static_cast<int>(bundles.size()) != n) throw InvalidArgument("one bundle per agent expected");
  FairnessReport report{alpha, true, {}};
  const Value a(alpha);
  for (int i = 0; i < n; ++i) {
    const Valuation& v = p.valuation(i);
    const Value own = v.value(bundles[static_cast<std::size_t>(i)]);
    for (int j = 0; j < n; ++j) {
      const Bundle& other = bundles[static_cast<std::size_t>(j)];
      if (i == j || other.empty()) continue;
      std::optional<int> removed;
      Value least;
      other.for_each([&](int g) {
        Value rest = v.value(other.without(g));
        if (!removed || rest < least) {
          removed = g;
          least = std::move(rest);
        }
      });
      const Value compared = a * least;
      if (own < compared) report.violations.push_back(Ef1Violation{i, j, removed, own, compared});
    }
  }
  report.satisfied = report.violations.empty();
  return report;
}

FairnessReport is_alpha_ef1(const Profile& p, const Allocation& allocation, const Rational& alpha) {
  return is_alpha_ef1(p, allocation.bundles(), alpha);
}

EnvyMeasure max_envy(const Profile& p, const Allocation& allocation) {
  const int n = p.agents();
  if (n < 2) throw SingleAgent("envy needs at least two agents");
  std::optional<EnvyMeasure> best;
  for (int i = 0; i < n; ++i) {
    const Valuation& v = p.valuation(i);
    const Value own = v.value(allocation.bundle(i));
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      Value envy = v.value(allocation.bundle(j)) - own;
      if (!best || envy > best->amount) best = EnvyMeasure{std::move(envy), i, j};
    }
  }
  return *best;
}

bool is_envy_free(const Profile& p, const Allocation& allocation) {
  return max_envy(p, allocation).amount <= Value(0);
}

}  // namespace fairdiv
