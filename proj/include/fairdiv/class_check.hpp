#pragma once

#include "fairdiv/bundle.hpp"
#include "fairdiv/valuation.hpp"

#include <optional>
#include <string_view>

namespace fairdiv {

enum class ValuationClass { normalized, monotone, additive, subadditive, submodular, cancelable };

std::string_view class_name(ValuationClass c);
/// Throws InvalidArgument for unknown names.
ValuationClass parse_class(std::string_view name);

enum class Exec { serial, parallel };

/// Outcome of a brute-force class check. On failure `s`, `t`, `good` hold a
/// violating instance of the defining condition:
///   normalized   s = ∅ with v(∅) != 0
///   monotone     v(t) < v(s) with t = s + good
///   additive     v(s) differs from the sum of its singletons
///   subadditive  v(s ∪ t) > v(s) + v(t)
///   submodular   v(good | s) < v(good | t) with s ⊆ t, good ∉ t
///   cancelable   v(s + good) > v(t + good) but v(s) <= v(t)
struct ClassCheckResult {
  ValuationClass cls;
  bool holds = true;
  std::optional<Bundle> s;
  std::optional<Bundle> t;
  std::optional<int> good;
};

/// Exhaustive size gates. FAIRDIV_MAX_UNIVERSE, when set, replaces both.
int pair_check_limit();
int triple_check_limit();

/// Throws UniverseTooLarge when the universe exceeds the relevant gate.
ClassCheckResult check_class(const Valuation& v, ValuationClass cls, Exec exec = Exec::parallel);

}  // namespace fairdiv
