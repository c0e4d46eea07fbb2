#include <doctest.h>

#include "fairdiv/errors.hpp"
#include "fairdiv/instances.hpp"
#include "fairdiv/mechanisms.hpp"
#include "fairdiv/random_profiles.hpp"

using namespace fairdiv;

namespace {

using Goods = std::vector<int>;

std::vector<Goods> bundles_of(const Allocation& a) {
  std::vector<Goods> out;
  for (const auto& b : a.bundles()) out.push_back(b.goods());
  return out;
}

Profile additive_profile(int m, std::vector<std::vector<Rational>> rows) {
  std::vector<Valuation> vs;
  for (auto& r : rows) vs.push_back(Valuation::additive(std::move(r)));
  return Profile(m, std::move(vs));
}

const Rational kEps = ratio(1, 100);

Profile fixed_order_instance() { return additive_profile(3, {{0, 0, 0}, {kEps, kEps, 1}}); }

Profile favorite_instance(bool manipulated) {
  std::vector<Rational> v2 = manipulated ? std::vector<Rational>{1, kEps, 0, 0} : std::vector<Rational>{1, 0, 0, kEps};
  return additive_profile(4, {{1, ratio(3, 5), 0, ratio(3, 5)}, v2, {0, 1, 1, 1}});
}

}  // namespace

TEST_CASE("round robin examples") {
  CHECK(bundles_of(round_robin(additive_profile(4, {{1, 1, 1, 1}, {1, 1, 1, 1}}))) ==
        std::vector<Goods>{{1, 3}, {2, 4}});
  CHECK(bundles_of(round_robin(additive_profile(0, {{}, {}}))) == std::vector<Goods>{{}, {}});
  const Profile p = additive_profile(4, {{10, 9, 8, 0}, {0, 10, 0, 9}});
  const Allocation a = round_robin(p);
  CHECK(bundles_of(a) == std::vector<Goods>{{1, 3}, {2, 4}});
  CHECK(utility(p, a, 0) == Value(18));
}

TEST_CASE("round robin trace") {
  const Profile p = additive_profile(4, {{10, 9, 8, 0}, {0, 10, 0, 9}});
  Trace t;
  round_robin(p, &t);
  REQUIRE(t.stages.size() == 4);
  REQUIRE(t.snapshots.size() == 4);
  CHECK(t.stages[0].agent == 0);
  CHECK(t.stages[0].good == 1);
  CHECK(t.stages[0].remaining_before == Bundle::full(4));
  CHECK(t.stages[1].agent == 1);
  CHECK(t.stages[1].good == 2);
  CHECK(t.stages[3].remaining_before.goods() == Goods{4});
  CHECK(t.snapshots[1][1].goods() == Goods{2});
  CHECK(t.iterations.empty());
}

TEST_CASE("round robin bundle sizes are ceil((m - i + 1)/n)") {
  ProfileSampler rng(3);
  SampleShape shape{2, 4, 0, 10, 6};
  for (int trial = 0; trial < 200; ++trial) {
    const Profile p = trial % 2 ? rng.additive_profile(shape) : rng.coverage_profile(shape);
    const int n = p.agents();
    const int m = p.goods();
    const Allocation a = round_robin(p);
    const Allocation b = round_robin_marginal(p);
    for (int i = 1; i <= n; ++i) {
      const int expect = (m - i + 1 + n - 1) / n;
      CHECK(a.bundle(i - 1).size() == std::max(0, expect));
      CHECK(b.bundle(i - 1).size() == std::max(0, expect));
    }
  }
}

TEST_CASE("marginal round robin on the hard submodular instance") {
  const HardInstance inst = submodular_hard_instance(2, 2, 8);
  const Allocation truthful = round_robin_marginal(inst.profile);
  CHECK(truthful.bundle(0).goods() == Goods{1, 3, 5, 7, 9, 11});
  CHECK(utility(inst.profile, truthful, 0) == Value(2));
  const Allocation manipulated = round_robin_marginal(inst.profile.with_valuation(0, inst.misreport));
  CHECK(inst.profile.valuation(0).value(manipulated.bundle(0)) == Value(3));
}

TEST_CASE("marginal round robin equals round robin on additive profiles") {
  ProfileSampler rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    const Profile p = rng.additive_profile(SampleShape{1, 4, 0, 9, 1});
    CHECK(round_robin(p) == round_robin_marginal(p));
  }
}

TEST_CASE("envy graph with a fixed good order") {
  const Profile truthful = fixed_order_instance();
  Trace t;
  const Allocation a = envy_graph_fixed(truthful, {}, &t);
  CHECK(bundles_of(a) == std::vector<Goods>{{1, 3}, {2}});
  CHECK(utility(truthful, a, 1) == Value(kEps));
  // after the first iteration agent 2 envies agent 1
  REQUIRE(t.iterations.size() == 3);
  CHECK(t.iterations[0].before_elimination.edges == std::vector<std::pair<int, int>>{{1, 0}});

  const Profile lie = truthful.with_valuation(1, Valuation::additive({1, 0, 0}));
  const Allocation b = envy_graph_fixed(lie);
  CHECK(bundles_of(b) == std::vector<Goods>{{1}, {2, 3}});
  CHECK(truthful.valuation(1).value(b.bundle(1)) == Value(1 + kEps));

  CHECK(bundles_of(envy_graph_fixed(additive_profile(3, {{1, 2, 3}}))) == std::vector<Goods>{{1, 2, 3}});
  CHECK_THROWS_AS(envy_graph_fixed(truthful, {1, 1, 2}), InvalidArgument);
  CHECK_THROWS_AS(envy_graph_fixed(truthful, {1, 2}), InvalidArgument);
}

TEST_CASE("envy graph fixed order follows the given order") {
  // one agent receives goods in the given sequence
  const Profile p = additive_profile(3, {{1, 2, 3}});
  Trace t;
  envy_graph_fixed(p, {3, 1, 2}, &t);
  REQUIRE(t.stages.size() == 3);
  CHECK(t.stages[0].good == 3);
  CHECK(t.stages[1].good == 1);
  CHECK(t.stages[2].good == 2);
}

TEST_CASE("envy graph with favorite goods") {
  const Profile truthful = favorite_instance(false);
  const Allocation a = envy_graph_favorite(truthful);
  CHECK(bundles_of(a) == std::vector<Goods>{{1}, {3, 4}, {2}});
  CHECK(utility(truthful, a, 1) == Value(kEps));

  Trace t;
  const Allocation b = envy_graph_favorite(favorite_instance(true), &t);
  CHECK(bundles_of(b) == std::vector<Goods>{{2, 4}, {1}, {3}});
  CHECK(truthful.valuation(1).value(b.bundle(1)) == Value(1));
  // iteration 4: edges 2->1, 1->2, 3->2 before elimination, then swap of agents 1 and 2
  REQUIRE(t.iterations.size() == 4);
  CHECK(t.iterations[3].before_elimination.edges == std::vector<std::pair<int, int>>{{0, 1}, {1, 0}, {2, 1}});
  CHECK(t.iterations[3].rotations == std::vector<Rotation>{{0, 1}});
  CHECK(t.iterations[3].after_elimination.edges.size() < 3);

  // identical valuations, m = n: one good each
  const Allocation c = envy_graph_favorite(additive_profile(3, {{3, 2, 1}, {3, 2, 1}, {3, 2, 1}}));
  CHECK(bundles_of(c) == std::vector<Goods>{{1}, {2}, {3}});
}

TEST_CASE("build_envy_graph") {
  const Profile p = fixed_order_instance();
  const EnvyGraph g = build_envy_graph(p, PartialAllocation{Bundle(3, {1}), Bundle(3)});
  CHECK(g.edges == std::vector<std::pair<int, int>>{{1, 0}});
  CHECK(g.first_source() == 1);
  CHECK(g.has_edge(1, 0));
  CHECK_FALSE(g.has_edge(0, 1));
  const Profile same = additive_profile(2, {{1, 1}, {1, 1}});
  CHECK(build_envy_graph(same, make_allocation(2, 2, {Bundle(2, {1}), Bundle(2, {2})})).edges.empty());
}

TEST_CASE("eliminate_envy_cycles") {
  // each agent values only the next agent's bundle
  const Profile p = additive_profile(3, {{0, 1, 0}, {0, 0, 1}, {1, 0, 0}});
  const auto [bundles, rotations] = eliminate_envy_cycles(p, {Bundle(3, {1}), Bundle(3, {2}), Bundle(3, {3})});
  CHECK(rotations == std::vector<Rotation>{{0, 1, 2}});
  CHECK(bundles[0].goods() == Goods{2});
  CHECK(bundles[1].goods() == Goods{3});
  CHECK(bundles[2].goods() == Goods{1});
  CHECK(build_envy_graph(p, bundles).edges.empty());

  const auto [same, none] = eliminate_envy_cycles(p, {Bundle(3, {2}), Bundle(3, {3}), Bundle(3, {1})});
  CHECK(none.empty());
  CHECK(same[0].goods() == Goods{2});
}

TEST_CASE("rotation count stays within n(n-1)/2 and mechanisms partition the goods") {
  ProfileSampler rng(21);
  for (int trial = 0; trial < 150; ++trial) {
    const Profile p = rng.additive_profile(SampleShape{1, 4, 0, 8, 1});
    const int n = p.agents();
    for (auto kind : {MechanismKind::envy_graph_fixed, MechanismKind::envy_graph_favorite}) {
      Trace t;
      const Allocation a = run_mechanism(kind, p, {}, &t);
      CHECK(a.goods() == p.goods());
      for (const auto& it : t.iterations) {
        CHECK(static_cast<int>(it.rotations.size()) <= n * (n - 1) / 2);
        CHECK(it.after_elimination.first_source() >= 0);
      }
      Trace again;
      CHECK(run_mechanism(kind, p, {}, &again) == a);
      CHECK(again.stages.size() == t.stages.size());
    }
  }
}

TEST_CASE("mechanism names") {
  for (auto k : {MechanismKind::round_robin, MechanismKind::round_robin_marginal, MechanismKind::envy_graph_fixed,
                 MechanismKind::envy_graph_favorite}) {
    CHECK(parse_mechanism(mechanism_name(k)) == k);
  }
  CHECK(mechanism_name(MechanismKind::round_robin) == "rr");
  CHECK_THROWS_AS(parse_mechanism("mnw"), InvalidArgument);
}
