#include <doctest.h>

#include "fairdiv/class_check.hpp"
#include "fairdiv/errors.hpp"
#include "fairdiv/instances.hpp"
#include "fairdiv/random_profiles.hpp"

#include <cmath>
#include <cstdlib>

using namespace fairdiv;

namespace {

// v({g1}) = v({g2}) = v({g3}) = 1, v({g1,g2}) = 2, v({g1,g3}) = 3, v({g2,g3}) = 2, v(G) = 3
Valuation non_cancelable_table() {
  return Valuation::table(3, {1, 2, 3}, {0, 1, 1, 2, 1, 3, 2, 3});
}

}  // namespace

TEST_CASE("value formulas") {
  CHECK(Valuation::multiplicative({2, 3, 4, 5}).value(Bundle(4, {3, 4})) == Value(20));
  CHECK(Valuation::multiplicative({2, 3, 4, 5}).value(Bundle(4)) == Value(0));
  CHECK(Valuation::coverage(2, 4, {{1, 2}, {3, 4}}).value(Bundle::full(2)) == Value(4));
  CHECK(Valuation::coverage(2, 4, {{1, 2}, {3, 4}}, ratio(1, 2)).value(Bundle::full(2)) == Value(2));
  const Valuation xos = Valuation::xos({{1, 0, 0, 0, 0}, {0, 0, 1, 1, 1}});
  CHECK(xos.value(Bundle(5, {3, 4, 5})) == Value(3));
  CHECK(xos.value(Bundle(5, {1, 2})) == Value(1));
  // table ignores goods outside its support
  const Valuation t = Valuation::table(4, {2, 3}, {0, 1, 1, ratio(3, 2)});
  CHECK(t.value(Bundle(4, {1, 2, 4})) == Value(1));
  CHECK(t.value(Bundle(4, {2, 3})) == Value(ratio(3, 2)));
}

TEST_CASE("marginal values") {
  CHECK(Valuation::additive({1, 2, 3}).marginal(3, Bundle(3, {1})) == Value(3));
  CHECK(Valuation::coverage(2, 3, {{1, 2}, {2, 3}}).marginal(2, Bundle(2, {1})) == Value(1));
  // hard submodular instance, n = 2, w = 2: agent 2 holds the trigger g1, so
  // g4 in its discount set only adds 1
  const HardInstance inst = submodular_hard_instance(2, 2, 8);
  CHECK(inst.profile.valuation(1).marginal(4, Bundle(12, {1})) == Value(1));
  CHECK(inst.profile.valuation(1).marginal(4, Bundle(12)) == Value(2));
  CHECK(inst.profile.valuation(1).singleton(1) == Value(2));
  CHECK_THROWS_AS(Valuation::additive({1, 2}).marginal(1, Bundle(2, {1})), GoodAlreadyPresent);
}

TEST_CASE("construction validation") {
  CHECK_THROWS_AS(Valuation::additive({1, -1}), InvalidValuation);
  CHECK_THROWS_AS(Valuation::multiplicative({ratio(1, 2)}), InvalidValuation);
  CHECK_THROWS_AS(Valuation::table(2, {1, 2}, {0, 2, 1, 1}), InvalidValuation);  // not monotone
  CHECK_THROWS_AS(Valuation::table(2, {1, 2}, {1, 2, 2, 2}), InvalidValuation);  // v(empty) != 0
  CHECK_THROWS_AS(Valuation::table(2, {1, 2}, {0, 1, 1}), InvalidValuation);     // missing entry
  CHECK_THROWS_AS(Valuation::coverage(1, 2, {{3}}), InvalidValuation);
  CHECK_THROWS_AS(Valuation::xos({}), InvalidValuation);
}

TEST_CASE("lift") {
  const Valuation base = Valuation::additive({1, 2});
  const Valuation l = lift(base, 1.0);
  CHECK(std::abs(l.value(Bundle::full(2)).to_double() - std::exp(3.0)) < 1e-9);
  CHECK(l.value(Bundle(2)) == Value(0));
  CHECK_FALSE(l.is_exact());
  const Valuation zero = lift(Valuation::additive({0, 0}), 3.0);
  CHECK(zero.value(Bundle(2, {1})) == Value(1));
  CHECK(zero.value(Bundle::full(2)) == Value(1));
  CHECK_THROWS_AS(lift(base, 0.0), NonPositiveDelta);
  CHECK_THROWS_AS(lift(base, -1.0), NonPositiveDelta);
  CHECK_THROWS_AS(lift(Valuation::multiplicative({2, 2}), 1.0), InvalidValuation);
}

TEST_CASE("class checks on the cancelable chain's cardinality table") {
  const ProfileChain chain = lower_bound_chain_cancelable(5, ratio(1, 100));
  const Valuation& v2 = chain.profiles[0].valuation(1);
  CHECK(check_class(v2, ValuationClass::subadditive).holds);
  CHECK(check_class(v2, ValuationClass::cancelable).holds);
  CHECK(check_class(v2, ValuationClass::monotone).holds);
  const ClassCheckResult add = check_class(v2, ValuationClass::additive);
  CHECK_FALSE(add.holds);
  REQUIRE(add.s);
}

TEST_CASE("class checks on the submodular hard instance") {
  const HardInstance inst = submodular_hard_instance(2, 2, 8);
  const Valuation& u = inst.profile.valuation(1);
  CHECK(check_class(u, ValuationClass::submodular).holds);
  CHECK_FALSE(check_class(u, ValuationClass::additive).holds);
  const Valuation cov = submodular_hard_coverage(2, 2, 8, 1);
  CHECK(check_class(cov, ValuationClass::submodular).holds);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << 12); mask += 7) {
    const Bundle s = Bundle::from_mask(12, mask);
    CHECK(cov.value(s) == u.value(s));
  }
}

TEST_CASE("non-cancelable table yields the first (S, T, g) counterexample") {
  const ClassCheckResult r = check_class(non_cancelable_table(), ValuationClass::cancelable);
  CHECK_FALSE(r.holds);
  REQUIRE(r.s);
  REQUIRE(r.t);
  REQUIRE(r.good);
  CHECK(r.s->goods() == std::vector<int>{3});
  CHECK(r.t->goods() == std::vector<int>{2});
  CHECK(*r.good == 1);
  const ClassCheckResult serial = check_class(non_cancelable_table(), ValuationClass::cancelable, Exec::serial);
  CHECK(*serial.s == *r.s);
  CHECK(*serial.t == *r.t);
}

TEST_CASE("subclass memberships on random valuations") {
  ProfileSampler rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const int m = rng.uniform(1, 8);
    const Valuation a = rng.additive(m);
    for (auto c : {ValuationClass::normalized, ValuationClass::monotone, ValuationClass::additive,
                   ValuationClass::subadditive, ValuationClass::submodular, ValuationClass::cancelable}) {
      CHECK(check_class(a, c).holds);
    }
    const Valuation mul = rng.multiplicative(m);
    CHECK(check_class(mul, ValuationClass::cancelable).holds);
    CHECK(check_class(mul, ValuationClass::monotone).holds);
  }
  for (int trial = 0; trial < 10; ++trial) {
    const Valuation cov = rng.coverage(rng.uniform(1, 12), rng.uniform(1, 12));
    CHECK(check_class(cov, ValuationClass::submodular).holds);
    CHECK(check_class(cov, ValuationClass::subadditive, Exec::serial).holds ==
          check_class(cov, ValuationClass::subadditive).holds);
  }
}

TEST_CASE("multiplicative valuations need not be subadditive") {
  const ClassCheckResult r = check_class(Valuation::multiplicative({3, 3}), ValuationClass::subadditive);
  CHECK_FALSE(r.holds);
}

TEST_CASE("serial and parallel class checks agree") {
  ProfileSampler rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const int m = rng.uniform(2, 7);
    // XOS over random clauses: mixes holding and failing checks
    std::vector<std::vector<Rational>> clauses;
    for (int k = 0; k < 3; ++k) {
      std::vector<Rational> c;
      for (int g = 0; g < m; ++g) c.emplace_back(rng.uniform(0, 3));
      clauses.push_back(std::move(c));
    }
    const Valuation v = Valuation::xos(std::move(clauses));
    for (auto c : {ValuationClass::additive, ValuationClass::subadditive, ValuationClass::submodular,
                   ValuationClass::cancelable}) {
      const ClassCheckResult p = check_class(v, c, Exec::parallel);
      const ClassCheckResult s = check_class(v, c, Exec::serial);
      CHECK(p.holds == s.holds);
      CHECK(p.s == s.s);
      CHECK(p.t == s.t);
      CHECK(p.good == s.good);
    }
  }
}

TEST_CASE("xos marginal never exceeds the singleton value") {
  const HardInstance inst = xos_hard_instance(2, 6);
  for (int agent = 0; agent < 2; ++agent) {
    const Valuation& v = inst.profile.valuation(agent);
    const int m = v.goods();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
      const Bundle s = Bundle::from_mask(m, mask);
      for (int g = 1; g <= m; ++g) {
        if (!s.contains(g)) CHECK(v.marginal(g, s) <= v.singleton(g));
      }
    }
  }
}

TEST_CASE("size gates") {
  const Valuation big = Valuation::additive(std::vector<Rational>(17, 1));
  CHECK_THROWS_AS(check_class(big, ValuationClass::subadditive), UniverseTooLarge);
  const Valuation mid = Valuation::additive(std::vector<Rational>(13, 1));
  CHECK_THROWS_AS(check_class(mid, ValuationClass::cancelable), UniverseTooLarge);
  CHECK(check_class(mid, ValuationClass::subadditive).holds);

  ::setenv("FAIRDIV_MAX_UNIVERSE", "8", 1);
  CHECK(pair_check_limit() == 8);
  CHECK(triple_check_limit() == 8);
  CHECK_THROWS_AS(check_class(Valuation::additive(std::vector<Rational>(9, 1)), ValuationClass::monotone),
                  UniverseTooLarge);
  ::unsetenv("FAIRDIV_MAX_UNIVERSE");
  CHECK(pair_check_limit() == 16);
  CHECK(triple_check_limit() == 12);
}

TEST_CASE("class names round-trip") {
  for (auto c : {ValuationClass::normalized, ValuationClass::monotone, ValuationClass::additive,
                 ValuationClass::subadditive, ValuationClass::submodular, ValuationClass::cancelable}) {
    CHECK(parse_class(class_name(c)) == c);
  }
  CHECK_THROWS_AS(parse_class("convex"), InvalidArgument);
}
