#include <doctest.h>

#include "fairdiv/errors.hpp"
#include "fairdiv/fairness.hpp"
#include "fairdiv/instances.hpp"
#include "fairdiv/random_profiles.hpp"
#include "fairdiv/sweeps.hpp"

using namespace fairdiv;

namespace {

Profile ones(int n, int m) {
  std::vector<Valuation> vs(static_cast<std::size_t>(n), Valuation::additive(std::vector<Rational>(m, 1)));
  return Profile(m, std::move(vs));
}

}  // namespace

TEST_CASE("alpha-EF1 examples") {
  const Profile p = ones(2, 4);
  const Allocation a = make_allocation(2, 4, {Bundle(4, {1}), Bundle(4, {2, 3, 4})});
  const FairnessReport r = is_alpha_ef1(p, a, 1);
  CHECK_FALSE(r.satisfied);
  REQUIRE(r.violations.size() == 1);
  CHECK(r.violations[0].envier == 0);
  CHECK(r.violations[0].envied == 1);
  CHECK(r.violations[0].removed == 2);
  CHECK(r.violations[0].own == Value(1));
  CHECK(r.violations[0].compared == Value(2));

  CHECK(is_alpha_ef1(p, a, ratio(1, 2)).satisfied);

  const Profile q = ones(3, 3);
  CHECK(is_alpha_ef1(q, make_allocation(3, 3, {Bundle(3, {2}), Bundle(3, {3}), Bundle(3, {1})}), 1).satisfied);
}

TEST_CASE("alpha-EF1 edge cases") {
  const Profile p = ones(2, 4);
  const Allocation all = make_allocation(2, 4, {Bundle(4), Bundle::full(4)});
  CHECK(is_alpha_ef1(p, all, 0).satisfied);
  const FairnessReport r = is_alpha_ef1(p, all, 1);
  CHECK_FALSE(r.satisfied);
  CHECK(r.violations.size() == 1);
  CHECK_THROWS_AS(is_alpha_ef1(p, all, ratio(3, 2)), InvalidArgument);
  CHECK_THROWS_AS(is_alpha_ef1(p, all, -1), InvalidArgument);
  // empty own bundle passes when removal zeroes the remainder
  const Profile z(2, {Valuation::additive({5, 0}), Valuation::additive({1, 1})});
  CHECK(is_alpha_ef1(z, make_allocation(2, 2, {Bundle(2), Bundle(2, {1, 2})}), 1).satisfied);
}

TEST_CASE("alpha-EF1 is monotone in alpha") {
  ProfileSampler rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const Profile p = rng.additive_profile(SampleShape{2, 4, 1, 8, 1});
    // a lopsided allocation: everything to the last agent except one good
    std::vector<Bundle> bundles(static_cast<std::size_t>(p.agents()), Bundle(p.goods()));
    for (int g = 1; g <= p.goods(); ++g) bundles[static_cast<std::size_t>(g == 1 ? 0 : p.agents() - 1)].insert(g);
    const Allocation a = make_allocation(p.agents(), p.goods(), bundles);
    bool prev = true;
    for (int k = 0; k <= 10; ++k) {
      const bool now = is_alpha_ef1(p, a, ratio(k, 10)).satisfied;
      CHECK((prev || !now));
      prev = now;
    }
    CHECK(is_alpha_ef1(p, a, 0).satisfied);
    if (is_envy_free(p, a)) CHECK(is_alpha_ef1(p, a, 1).satisfied);
  }
}

TEST_CASE("max envy") {
  const HardInstance xos = xos_hard_instance(2, 9);
  const Allocation a = round_robin_marginal(xos.profile);
  const EnvyMeasure e = max_envy(xos.profile, a);
  CHECK(e.amount == Value(3));
  CHECK(e.envier == 0);
  CHECK(e.envied == 1);

  const std::vector<HardInstance> eg = envy_graph_hard_instances(ratio(1, 100));
  const Allocation t = envy_graph_fixed(eg[0].profile);
  const EnvyMeasure f = max_envy(eg[0].profile, t);
  CHECK(f.amount == Value(1));
  CHECK(f.envier == 1);
  CHECK_FALSE(is_envy_free(eg[0].profile, t));

  const Profile p = ones(2, 2);
  const Allocation even = make_allocation(2, 2, {Bundle(2, {1}), Bundle(2, {2})});
  CHECK(max_envy(p, even).amount <= Value(0));
  CHECK(is_envy_free(p, even));

  const Profile one_good(1, {Valuation::additive({3}), Valuation::additive({2})});
  CHECK_FALSE(is_envy_free(one_good, make_allocation(2, 1, {Bundle(1, {1}), Bundle(1)})));

  const Profile single(1, {Valuation::additive({1})});
  CHECK_THROWS_AS(max_envy(single, make_allocation(1, 1, {Bundle(1, {1})})), SingleAgent);
}

TEST_CASE("round robin is EF1 on random additive and multiplicative profiles") {
  const FairnessSweep s = round_robin_fairness_sweep(101, 500, 500, SampleShape{2, 4, 0, 10, 1});
  CHECK(s.profiles == 1000);
  CHECK(s.ef1_failures == 0);
}

TEST_CASE("marginal round robin is 1/2-EF1 and proportional for agent 1 on coverage profiles") {
  const FairnessSweep s = marginal_fairness_sweep(102, 1000, SampleShape{2, 4, 0, 10, 12});
  CHECK(s.profiles == 1000);
  CHECK(s.ef1_failures == 0);
  CHECK(s.share_failures == 0);
}
