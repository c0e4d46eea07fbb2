#include "fairdiv/valuation.hpp"

#include "fairdiv/errors.hpp"

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <cmath>

namespace fairdiv {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidValuation(what);
}

void require_non_negative(const std::vector<Rational>& values, const char* what) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    require(values[i] >= 0, std::string(what) + " for g" + std::to_string(i + 1) + " is negative");
  }
}

void require_goods(const std::vector<int>& goods, int m, const char* what) {
  std::vector<int> sorted = goods;
  std::sort(sorted.begin(), sorted.end());
  for (int g : sorted) {
    require(g >= 1 && g <= m, std::string(what) + " mentions g" + std::to_string(g) +
                                  " outside 1.." + std::to_string(m));
  }
  require(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(),
          std::string(what) + " lists a good twice");
}

int validate(const AdditiveRep& r) {
  require_non_negative(r.values, "additive value");
  return static_cast<int>(r.values.size());
}

int validate(const MultiplicativeRep& r) {
  for (std::size_t i = 0; i < r.factors.size(); ++i) {
    require(r.factors[i] >= 1, "multiplicative factor for g" + std::to_string(i + 1) + " is below 1");
  }
  return static_cast<int>(r.factors.size());
}

int validate(const TableRep& r) {
  require(r.goods >= 0, "negative good count");
  require(static_cast<int>(r.support.size()) <= kTableSupportLimit,
          "table support exceeds " + std::to_string(kTableSupportLimit) + " goods");
  require_goods(r.support, r.goods, "table support");
  const std::size_t expected = std::size_t{1} << r.support.size();
  require(r.entries.size() == expected, "table needs " + std::to_string(expected) + " entries, got " +
                                            std::to_string(r.entries.size()));
  require(r.entries[0] == 0, "table value of the empty bundle must be 0");
  for (std::size_t s = 0; s < expected; ++s) {
    for (std::size_t k = 0; k < r.support.size(); ++k) {
      const std::size_t bit = std::size_t{1} << k;
      if ((s & bit) == 0 && r.entries[s | bit] < r.entries[s]) {
        throw InvalidValuation("table is not monotone: adding g" + std::to_string(r.support[k]) +
                               " lowers the value");
      }
    }
  }
  return r.goods;
}

int validate(const CoverageRep& r) {
  require(r.goods >= 0 && r.universe >= 0, "negative coverage sizes");
  require(static_cast<int>(r.sets.size()) == r.goods,
          "coverage needs one set per good (" + std::to_string(r.goods) + ")");
  require(r.weight >= 0, "coverage weight is negative");
  for (std::size_t g = 0; g < r.sets.size(); ++g) {
    for (int e : r.sets[g]) {
      require(e >= 1 && e <= r.universe, "coverage set of g" + std::to_string(g + 1) +
                                             " has element " + std::to_string(e) +
                                             " outside 1.." + std::to_string(r.universe));
    }
  }
  return r.goods;
}

int validate(const XosRep& r) {
  require(!r.clauses.empty(), "xos valuation needs at least one clause");
  const std::size_t m = r.clauses.front().size();
  for (const auto& c : r.clauses) {
    require(c.size() == m, "xos clauses have different lengths");
    require_non_negative(c, "xos clause value");
  }
  return static_cast<int>(m);
}

int validate(const DiscountedRep& r) {
  const int m = static_cast<int>(r.values.size());
  require_non_negative(r.values, "discounted value");
  require(r.discount >= 0, "discount is negative");
  require(r.trigger >= 1 && r.trigger <= m, "trigger good outside 1.." + std::to_string(m));
  require_goods(r.discounted, m, "discounted set");
  require(std::find(r.discounted.begin(), r.discounted.end(), r.trigger) == r.discounted.end(),
          "trigger good cannot be discounted");
  for (int g : r.discounted) {
    require(r.values[static_cast<std::size_t>(g - 1)] >= r.discount,
            "discount exceeds the value of g" + std::to_string(g) + ", breaking monotonicity");
  }
  require(r.values[static_cast<std::size_t>(r.trigger - 1)] >=
              r.discount * static_cast<long>(r.discounted.size()),
          "total discount exceeds the trigger value, breaking monotonicity");
  return m;
}

int validate(const LiftedRep& r) {
  require_non_negative(r.base, "lifted base value");
  if (!(r.delta > 0) || !std::isfinite(r.delta)) throw NonPositiveDelta("lift requires delta > 0");
  return static_cast<int>(r.base.size());
}

Rational sum_over(const std::vector<Rational>& values, const Bundle& s) {
  Rational total = 0;
  s.for_each([&](int g) { total += values[static_cast<std::size_t>(g - 1)]; });
  return total;
}

}  // namespace

std::string_view kind_name(ValuationKind kind) {
  switch (kind) {
    case ValuationKind::additive: return "additive";
    case ValuationKind::multiplicative: return "multiplicative";
    case ValuationKind::table: return "table";
    case ValuationKind::coverage: return "coverage";
    case ValuationKind::xos: return "xos";
    case ValuationKind::discounted: return "discounted";
    case ValuationKind::lifted: return "lifted";
  }
  return "unknown";
}

Valuation::Valuation(Representation rep) {
  goods_ = std::visit([](const auto& r) { return validate(r); }, rep);
  rep_ = std::make_shared<const Representation>(std::move(rep));
}

Valuation Valuation::additive(std::vector<Rational> values) {
  return Valuation(AdditiveRep{std::move(values)});
}

Valuation Valuation::multiplicative(std::vector<Rational> factors) {
  return Valuation(MultiplicativeRep{std::move(factors)});
}

Valuation Valuation::table(int goods, std::vector<int> support, std::vector<Rational> entries) {
  return Valuation(TableRep{goods, std::move(support), std::move(entries)});
}

Valuation Valuation::coverage(int goods, int universe, std::vector<std::vector<int>> sets,
                              Rational weight) {
  return Valuation(CoverageRep{goods, universe, std::move(sets), std::move(weight)});
}

Valuation Valuation::xos(std::vector<std::vector<Rational>> clauses) {
  return Valuation(XosRep{std::move(clauses)});
}

Valuation Valuation::discounted(std::vector<Rational> values, int trigger,
                                std::vector<int> discounted, Rational discount) {
  return Valuation(DiscountedRep{std::move(values), trigger, std::move(discounted), std::move(discount)});
}

ValuationKind Valuation::kind() const noexcept {
  return static_cast<ValuationKind>(rep_->index());
}

Value Valuation::value(const Bundle& s) const {
  if (s.universe() != goods_) {
    throw InvalidArgument("bundle over " + std::to_string(s.universe()) +
                          " goods evaluated by a valuation over " + std::to_string(goods_));
  }
  return std::visit(
      overloaded{
          [&](const AdditiveRep& r) -> Value { return sum_over(r.values, s); },
          [&](const MultiplicativeRep& r) -> Value {
            if (s.empty()) return 0;
            Rational p = 1;
            s.for_each([&](int g) { p *= r.factors[static_cast<std::size_t>(g - 1)]; });
            return p;
          },
          [&](const TableRep& r) -> Value {
            std::size_t mask = 0;
            for (std::size_t k = 0; k < r.support.size(); ++k) {
              if (s.contains(r.support[k])) mask |= std::size_t{1} << k;
            }
            return r.entries[mask];
          },
          [&](const CoverageRep& r) -> Value {
            boost::dynamic_bitset<> covered(static_cast<std::size_t>(r.universe) + 1);
            s.for_each([&](int g) {
              for (int e : r.sets[static_cast<std::size_t>(g - 1)]) covered.set(static_cast<std::size_t>(e));
            });
            return Rational(r.weight * static_cast<long>(covered.count()));
          },
          [&](const XosRep& r) -> Value {
            Rational best = 0;
            for (const auto& c : r.clauses) {
              Rational x = sum_over(c, s);
              if (x > best) best = x;
            }
            return best;
          },
          [&](const DiscountedRep& r) -> Value {
            Rational u = sum_over(r.values, s);
            if (s.contains(r.trigger)) {
              long held = 0;
              for (int g : r.discounted) held += s.contains(g) ? 1 : 0;
              u -= r.discount * held;
            }
            return u;
          },
          [&](const LiftedRep& r) -> Value {
            if (s.empty()) return 0;
            return Value::real(std::exp(r.delta * sum_over(r.base, s).get_d()));
          },
      },
      *rep_);
}

Value Valuation::singleton(int good) const {
  Bundle s(goods_);
  s.insert(good);
  return value(s);
}

Value Valuation::marginal(int good, const Bundle& bundle) const {
  if (bundle.contains(good)) {
    throw GoodAlreadyPresent("g" + std::to_string(good) + " is already in " + bundle.to_string());
  }
  return value(bundle.with(good)) - value(bundle);
}

Valuation lift(const Valuation& base, double delta) {
  const auto* add = std::get_if<AdditiveRep>(&base.representation());
  if (add == nullptr) {
    throw InvalidValuation(std::string("lift needs an additive base, got ") +
                           std::string(kind_name(base.kind())));
  }
  if (!(delta > 0)) throw NonPositiveDelta("lift requires delta > 0");
  return Valuation(LiftedRep{add->values, delta});
}

std::vector<Value> value_table(const Valuation& v, int limit) {
  const int m = v.goods();
  if (m > limit || m > 30) {
    throw UniverseTooLarge("exhaustive enumeration over " + std::to_string(m) +
                           " goods exceeds the limit of " + std::to_string(std::min(limit, 30)));
  }
  const std::uint64_t count = std::uint64_t{1} << m;
  std::vector<Value> out(count);
#pragma omp parallel for schedule(static)
  for (std::int64_t s = 0; s < static_cast<std::int64_t>(count); ++s) {
    out[static_cast<std::size_t>(s)] = v.value(Bundle::from_mask(m, static_cast<std::uint64_t>(s)));
  }
  return out;
}

}  // namespace fairdiv
