#include <doctest.h>

#include "fairdiv/analysis.hpp"
#include "fairdiv/errors.hpp"
#include "fairdiv/incentives.hpp"
#include "fairdiv/sweeps.hpp"

using namespace fairdiv;

namespace {

Profile additive_profile(int m, std::vector<std::vector<Rational>> rows) {
  std::vector<Valuation> vs;
  for (auto& r : rows) vs.push_back(Valuation::additive(std::move(r)));
  return Profile(m, std::move(vs));
}

struct Runs {
  Trace truthful;
  Trace manipulated;
};

Runs run_pair(const Profile& p, const std::vector<int>& order) {
  Runs r;
  round_robin(p, &r.truthful);
  round_robin(p.with_valuation(0, order_report(order)), &r.manipulated);
  return r;
}

}  // namespace

TEST_CASE("dominance check") {
  const Valuation mul = Valuation::multiplicative({2, 3, 4, 5});
  CHECK(dominance_check(mul, {3, 4}, {1, 2}));
  CHECK(dominance_check(mul, {1, 2}, {1, 2}));
  const Valuation add = Valuation::additive({1, 2, 3, 4});
  CHECK(dominance_check(add, {4, 2}, {3, 1}));
  CHECK_THROWS_AS(dominance_check(add, {1}, {2}), PreconditionViolation);
  CHECK_THROWS_AS(dominance_check(add, {4, 3}, {2}), PreconditionViolation);
  CHECK_THROWS_AS(dominance_check(add, {4, 4}, {1, 2}), PreconditionViolation);
}

TEST_CASE("stage mappings on the 19/18 instance") {
  const Profile p = additive_profile(4, {{10, 9, 8, 0}, {0, 10, 0, 9}});
  const Runs r = run_pair(p, {2, 1, 3, 4});
  const auto maps = build_stage_mappings(p.valuation(0), r.truthful, r.manipulated);
  REQUIRE(maps.size() == 5);
  CHECK(maps[0].image.empty());
  const StageMapping& last = maps.back();
  CHECK(last.domain.goods() == std::vector<int>{1, 2});
  CHECK(last.image == std::map<int, int>{{1, 1}, {2, 1}});

  const FactorTwoResult f = verify_factor_two_bound(p.valuation(0), maps, r.truthful, r.manipulated);
  CHECK(f.r1.goods() == std::vector<int>{1});
  CHECK(f.r2.goods() == std::vector<int>{2});
  CHECK(f.truthful_utility == Value(18));
  CHECK(f.manipulated_utility == Value(19));
  CHECK(f.r1_dominated);
  CHECK(f.r2_dominated);
  CHECK(f.split_bounds);
  CHECK(f.bound_holds);
}

TEST_CASE("identical traces map the bundle onto itself") {
  const Profile p = additive_profile(5, {{5, 4, 3, 2, 1}, {1, 2, 3, 4, 5}});
  const Runs r = run_pair(p, {1, 2, 3, 4, 5});
  const auto maps = build_stage_mappings(p.valuation(0), r.truthful, r.manipulated);
  const StageMapping& last = maps.back();
  CHECK(last.domain == last.target);
  for (const auto& [g, h] : last.image) CHECK(g == h);
  const FactorTwoResult f = verify_factor_two_bound(p.valuation(0), maps, r.truthful, r.manipulated);
  CHECK(f.r2.empty());
  CHECK(f.manipulated_utility == f.truthful_utility);
  CHECK(f.bound_holds);
}

TEST_CASE("empty universe") {
  const Profile p = additive_profile(0, {{}, {}});
  const Runs r = run_pair(p, {});
  const auto maps = build_stage_mappings(p.valuation(0), r.truthful, r.manipulated);
  CHECK(maps.size() == 1);
}

TEST_CASE("trace mismatches") {
  const Profile p = additive_profile(4, {{10, 9, 8, 0}, {0, 10, 0, 9}});
  const Runs r = run_pair(p, {2, 1, 3, 4});
  Trace other;
  round_robin(additive_profile(4, {{10, 9, 8, 0}, {9, 0, 10, 0}}), &other);
  CHECK_THROWS_AS(build_stage_mappings(p.valuation(0), r.truthful, other), TraceMismatch);
  Trace eg;
  envy_graph_fixed(p, {}, &eg);
  CHECK_THROWS_AS(build_stage_mappings(p.valuation(0), r.truthful, eg), TraceMismatch);
  Trace shortened = r.manipulated;
  shortened.stages.pop_back();
  shortened.snapshots.pop_back();
  CHECK_THROWS_AS(build_stage_mappings(p.valuation(0), r.truthful, shortened), TraceMismatch);
}

TEST_CASE("truncated hard submodular instance with additive agent 1 under round robin") {
  // first 7 goods of the n = 2, w = 2, T = 8 instance, agent 2 as its additive upper part
  const Profile p = additive_profile(7, {{1, 1, 1, 1, 0, 0, 0}, {2, 2, 0, 2, 2, 2, 2}});
  const MisreportFamily f = MisreportFamily::all_orders(7);
  Trace truthful;
  round_robin(p, &truthful);
  for (std::uint64_t k = 0; k < f.size(); ++k) {
    Trace manipulated;
    round_robin(p.with_valuation(0, f.member(k).valuation), &manipulated);
    const auto maps = build_stage_mappings(p.valuation(0), truthful, manipulated);
    CHECK(verify_factor_two_bound(p.valuation(0), maps, truthful, manipulated).bound_holds);
  }
}

TEST_CASE("factor-two sweep on additive profiles, serial and parallel") {
  const UpperBoundSweep par = upper_bound_sweep(77, 150, 0, SampleShape{2, 3, 1, 6, 1}, Exec::parallel);
  const UpperBoundSweep ser = upper_bound_sweep(77, 150, 0, SampleShape{2, 3, 1, 6, 1}, Exec::serial);
  CHECK(par.passed());
  CHECK(par.additive.profiles == 150);
  CHECK(par.additive.runs == ser.additive.runs);
  CHECK(par.additive.max_ratio == ser.additive.max_ratio);
  CHECK(par.additive.max_ratio <= ExtendedRatio(Value(2)));
}

TEST_CASE("multiplicative valuations can exceed the factor-two bound") {
  // not subadditive: the split v(B') <= v(R1) + v(R2) is not implied
  const Profile p(4, {Valuation::multiplicative({ratio(11, 4), 3, 1, ratio(7, 4)}),
                      Valuation::multiplicative({ratio(5, 4), ratio(7, 4), ratio(7, 4), 2}),
                      Valuation::multiplicative({3, ratio(5, 4), ratio(3, 2), 3})});
  const Witness w = best_manipulation(make_mechanism(MechanismKind::round_robin), p, 0,
                                      MisreportFamily::all_orders(4));
  CHECK(w.ratio == ExtendedRatio(Value(ratio(11, 4))));
  const Runs r = run_pair(p, w.misreport.order);
  const auto maps = build_stage_mappings(p.valuation(0), r.truthful, r.manipulated);
  const FactorTwoResult f = verify_factor_two_bound(p.valuation(0), maps, r.truthful, r.manipulated);
  CHECK(f.r1_dominated);
  CHECK(f.r2_dominated);
  CHECK_FALSE(f.split_bounds);
  CHECK_FALSE(f.bound_holds);
}
