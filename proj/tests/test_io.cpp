#include <doctest.h>

#include "fairdiv/errors.hpp"
#include "fairdiv/instances.hpp"
#include "fairdiv/io.hpp"
#include "fairdiv/random_profiles.hpp"

#include <string>

using namespace fairdiv;
using io::json;

namespace {

std::string error_of(const json& j) {
  try {
    io::profile_from_json(j, "in.json");
  } catch (const FormatError& e) {
    return e.what();
  }
  return "";
}

Profile round_trip(const Profile& p) { return io::profile_from_json(json::parse(io::to_json(p).dump()), "x"); }

}  // namespace

TEST_CASE("rationals") {
  CHECK(io::rational_from_json(json("3/2"), "f", "/x") == ratio(3, 2));
  CHECK(io::rational_from_json(json(4), "f", "/x") == 4);
  CHECK(io::to_json(ratio(6, 4)) == json("3/2"));
  CHECK_THROWS_AS(io::rational_from_json(json(1.5), "f", "/x"), FormatError);
  CHECK_THROWS_AS(io::rational_from_json(json("x/2"), "f", "/x"), FormatError);
}

TEST_CASE("profile parsing") {
  const json j = json::parse(R"({"m": 3, "agents": [
      {"kind": "additive", "values": ["1", "1/2", 0]},
      {"kind": "multiplicative", "factors": [1, 2, "3/2"]},
      {"kind": "xos", "clauses": [[1, 0, 0], [0, 1, 1]]},
      {"kind": "coverage", "universe": 3, "sets": [[1], [1, 2], [3]]},
      {"kind": "table", "support": [1, 3], "entries": {"": 0, "1": 1, "3": 1, "1,3": "3/2"}}]})");
  const Profile p = io::profile_from_json(j, "in.json");
  CHECK(p.agents() == 5);
  CHECK(p.valuation(0).value(Bundle::full(3)) == Value(ratio(3, 2)));
  CHECK(p.valuation(1).value(Bundle(3, {2, 3})) == Value(3));
  CHECK(p.valuation(2).value(Bundle::full(3)) == Value(2));
  CHECK(p.valuation(3).value(Bundle(3, {1, 2})) == Value(2));
  CHECK(p.valuation(4).value(Bundle::full(3)) == Value(ratio(3, 2)));
}

TEST_CASE("format errors name the first offending field") {
  CHECK(error_of(json::parse(R"({"agents": []})")) == "in.json: /m: missing field");
  CHECK(error_of(json::parse(R"({"m": 2, "agents": [{"kind": "additive", "values": [1, "x"]}]})"))
            .rfind("in.json: /agents/0/values/1: ", 0) == 0);
  CHECK(error_of(json::parse(R"({"m": 2, "agents": [{"kind": "additive", "values": [1]}]})")) ==
        "in.json: /agents/0/values: expected 2 entries, got 1");
  CHECK(error_of(json::parse(R"({"m": 1, "agents": [{"kind": "wavy"}]})")) ==
        "in.json: /agents/0/kind: unknown valuation kind 'wavy'");
  CHECK(error_of(json::parse(R"({"m": 2, "agents": [{"kind": "table", "support": [1, 2],
        "entries": {"1": 1, "2": 1}}]})")) == "in.json: /agents/0/entries: missing entry for subset '1,2'");
  const std::string neg = error_of(json::parse(R"({"m": 1, "agents": [{"kind": "additive", "values": [-1]}]})"));
  CHECK(neg.rfind("in.json: /agents/0: ", 0) == 0);
}

TEST_CASE("allocations") {
  const json j = json::parse(R"({"bundles": [[1, 3], [2, 4]]})");
  const Allocation a = io::allocation_from_json(j, 2, 4, "a.json");
  CHECK(a.bundle(0).goods() == std::vector<int>{1, 3});
  CHECK(io::to_json(a) == j);
  CHECK_THROWS_AS(io::allocation_from_json(json::parse(R"({"bundles": [[1], [1, 2]]})"), 2, 2, "a"), FormatError);
  CHECK_THROWS_AS(io::allocation_from_json(json::parse(R"({"bundles": [[1], [3]]})"), 2, 2, "a"), FormatError);
  CHECK_THROWS_AS(io::allocation_from_json(json::parse(R"({"bundles": [[1, 2]]})"), 2, 2, "a"), FormatError);
}

TEST_CASE("generated instances round-trip") {
  CHECK(round_trip(submodular_hard_instance(2, 2, 8).profile) == submodular_hard_instance(2, 2, 8).profile);
  CHECK(round_trip(xos_hard_instance(3, 7).profile) == xos_hard_instance(3, 7).profile);
  for (const auto& inst : envy_graph_hard_instances(ratio(1, 100))) CHECK(round_trip(inst.profile) == inst.profile);
  for (const auto& p : lower_bound_chain_cancelable(5, ratio(1, 100), true).profiles) CHECK(round_trip(p) == p);
  ProfileSampler rng(3);
  for (int i = 0; i < 50; ++i) {
    const Profile p = rng.coverage_profile(SampleShape{});
    CHECK(round_trip(p) == p);
    const Profile q = rng.multiplicative_profile(SampleShape{});
    CHECK(round_trip(q) == q);
  }
}

TEST_CASE("lifted valuations serialize their base and delta") {
  const Profile p(2, {lift(Valuation::additive({1, 2}), 0.5)});
  const json j = io::to_json(p);
  CHECK(j["agents"][0]["kind"] == "lifted");
  const Profile q = io::profile_from_json(j, "x");
  CHECK(q.valuation(0).value(Bundle::full(2)) == p.valuation(0).value(Bundle::full(2)));
}
