#pragma once

#include "fairdiv/mechanisms.hpp"
#include "fairdiv/profile.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace fairdiv {

/// Pair (envier, envied) failing alpha-EF1. `removed` is the good whose removal
/// leaves the smallest remainder in the envier's eyes; `compared` is
/// alpha * v_envier(A_envied - removed).
struct Ef1Violation {
  int envier = 0;
  int envied = 0;
  std::optional<int> removed;
  Value own;
  Value compared;
};

struct FairnessReport {
  Rational alpha;
  bool satisfied = true;
  std::vector<Ef1Violation> violations;
};

/// Requires 0 <= alpha <= 1. Lists every failing ordered pair.
FairnessReport is_alpha_ef1(const Profile& profile, const PartialAllocation& bundles, const Rational& alpha);
FairnessReport is_alpha_ef1(const Profile& profile, const Allocation& allocation, const Rational& alpha);

struct EnvyMeasure {
  Value amount;
  int envier = 0;
  int envied = 0;
};

/// Largest v_i(A_j) - v_i(A_i) over ordered pairs; the first maximizing pair
/// in (i, j) order. Throws SingleAgent when n < 2.
EnvyMeasure max_envy(const Profile& profile, const Allocation& allocation);
bool is_envy_free(const Profile& profile, const Allocation& allocation);

}  // namespace fairdiv
