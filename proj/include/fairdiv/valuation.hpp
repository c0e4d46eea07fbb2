#pragma once

#include "fairdiv/bundle.hpp"
#include "fairdiv/value.hpp"

#include <memory>
#include <string_view>
#include <variant>
#include <vector>

namespace fairdiv {

enum class ValuationKind { additive, multiplicative, table, coverage, xos, discounted, lifted };

std::string_view kind_name(ValuationKind kind);

/// Largest table support: entries are stored densely, one per subset.
inline constexpr int kTableSupportLimit = 20;

struct AdditiveRep {
  std::vector<Rational> values;  // values[g-1]
  friend bool operator==(const AdditiveRep&, const AdditiveRep&) = default;
};

struct MultiplicativeRep {
  std::vector<Rational> factors;  // each >= 1
  friend bool operator==(const MultiplicativeRep&, const MultiplicativeRep&) = default;
};

/// v(S) = entries[mask of S restricted to support], where bit k of the mask
/// stands for support[k].
struct TableRep {
  int goods = 0;
  std::vector<int> support;
  std::vector<Rational> entries;
  friend bool operator==(const TableRep&, const TableRep&) = default;
};

/// v(S) = weight * |union of sets[g-1] over g in S|; elements are 1..universe.
struct CoverageRep {
  int goods = 0;
  int universe = 0;
  std::vector<std::vector<int>> sets;
  Rational weight = 1;
  friend bool operator==(const CoverageRep&, const CoverageRep&) = default;
};

struct XosRep {
  std::vector<std::vector<Rational>> clauses;
  friend bool operator==(const XosRep&, const XosRep&) = default;
};

/// Additive values, except that holding `trigger` costs `discount` for every
/// held good of `discounted`:  v(S) = u(S) - discount * |D ∩ S| if trigger ∈ S.
struct DiscountedRep {
  std::vector<Rational> values;
  int trigger = 0;
  std::vector<int> discounted;
  Rational discount = 1;
  friend bool operator==(const DiscountedRep&, const DiscountedRep&) = default;
};

/// v(S) = exp(delta * base(S)) for non-empty S, v(∅) = 0.
struct LiftedRep {
  std::vector<Rational> base;
  double delta = 1.0;
  friend bool operator==(const LiftedRep&, const LiftedRep&) = default;
};

using Representation = std::variant<AdditiveRep, MultiplicativeRep, TableRep, CoverageRep, XosRep,
                                    DiscountedRep, LiftedRep>;

/// Immutable valuation oracle over goods 1..goods(). Copies share state.
class Valuation {
 public:
  /// Validates and wraps a representation; throws InvalidValuation.
  explicit Valuation(Representation rep);

  static Valuation additive(std::vector<Rational> values);
  static Valuation multiplicative(std::vector<Rational> factors);
  static Valuation table(int goods, std::vector<int> support, std::vector<Rational> entries);
  static Valuation coverage(int goods, int universe, std::vector<std::vector<int>> sets,
                            Rational weight = 1);
  static Valuation xos(std::vector<std::vector<Rational>> clauses);
  static Valuation discounted(std::vector<Rational> values, int trigger, std::vector<int> discounted,
                              Rational discount = 1);

  int goods() const noexcept { return goods_; }
  ValuationKind kind() const noexcept;
  bool is_exact() const noexcept { return kind() != ValuationKind::lifted; }
  const Representation& representation() const noexcept { return *rep_; }

  Value value(const Bundle& bundle) const;
  Value singleton(int good) const;
  /// v(S + g) - v(S). Throws GoodAlreadyPresent if g ∈ S.
  Value marginal(int good, const Bundle& bundle) const;

  friend bool operator==(const Valuation& a, const Valuation& b) {
    return a.rep_ == b.rep_ || *a.rep_ == *b.rep_;
  }

 private:
  std::shared_ptr<const Representation> rep_;
  int goods_ = 0;
};

/// Exponential lift of an additive valuation. Throws NonPositiveDelta for
/// delta <= 0 and InvalidValuation for a non-additive base.
Valuation lift(const Valuation& base, double delta);

/// Values of all 2^m subsets, indexed by mask (bit k = good k+1).
/// Throws UniverseTooLarge when m exceeds `limit`.
std::vector<Value> value_table(const Valuation& v, int limit);

}  // namespace fairdiv
