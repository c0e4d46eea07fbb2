#pragma once

#include "fairdiv/fairness.hpp"
#include "fairdiv/incentives.hpp"
#include "fairdiv/mechanisms.hpp"
#include "fairdiv/profile.hpp"

#include <string>
#include <variant>
#include <vector>

namespace fairdiv {

/// A deviation from profile `from` to profile `to` by `agent`, who gains at
/// least `claimed` in the proof's argument. The two profiles differ only in
/// that agent's valuation.
struct DeviationEdge {
  int from = 0;
  int to = 0;
  int agent = 0;
  Rational claimed;
};

struct ProfileChain {
  std::vector<std::string> names;
  std::vector<Profile> profiles;
  std::vector<DeviationEdge> edges;
};

/// Two-agent chain over four effective goods built from unit, delta and
/// 1.5 delta additive values. `pad` appends three zero-value goods (m = 7).
/// Throws ParameterOutOfRange for delta < 5.
ProfileChain lower_bound_chain_additive(const Rational& delta, bool pad = false);

/// The same chain with the golden ratio in place of 1.5 and agent 2's
/// original valuation replaced by a size-based table (0, 1, phi+eps, phi^2,
/// phi^2+eps). Requires delta >= 5 and 0 < eps < 1/10.
ProfileChain lower_bound_chain_cancelable(const Rational& delta, const Rational& epsilon, bool pad = false);

/// Table valuation over `goods` goods whose value on S ∩ support depends only
/// on its size: by_size[|S ∩ support|].
Valuation size_table(int goods, const std::vector<int>& support, const std::vector<Rational>& by_size);

/// Swaps agents 1 and 2 in every profile and edge.
ProfileChain swap_agents(const ProfileChain& chain);

struct ChainFairnessFailure {
  int profile = 0;
  FairnessReport report;
};

struct ChainWitness {
  int edge = 0;
  Witness witness;
};

struct AuditResult {
  std::variant<ChainFairnessFailure, ChainWitness> outcome;
  /// True when the finding came from the agent-swapped chain.
  bool swapped = false;
};

/// Runs the mechanism on every profile, reports the first alpha-EF1 failure,
/// otherwise the first edge whose realized ratio reaches the threshold. Falls
/// back to the agent-swapped chain. Throws NoWitness if both come up empty.
AuditResult audit_chain(const Mechanism& mechanism, const ProfileChain& chain, const Rational& alpha_fair,
                        const Rational& ratio_threshold);

/// A profile, a profitable report for one agent and the ratio it should achieve.
struct HardInstance {
  std::string name;
  Profile profile;
  int agent = 0;
  Valuation misreport;
  MechanismKind mechanism = MechanismKind::round_robin;
  Rational expected;
};

/// Marginal Round-Robin instance with m = wn + T goods. Agent 1 is additive
/// on the first wn goods; agent i >= 2 has the discounted valuation with
/// trigger g_{i-1} and discount set {g_i, g_{n+i}, ...}. Expected ratio
/// (wn - n + 1)/w. Requires n >= 2, w >= 2 and T >= w n^2.
HardInstance submodular_hard_instance(int n, int w, int t);

/// Coverage representation of agent i's valuation (i >= 1, 0-based) in the
/// instance above; equal to it on every bundle.
Valuation submodular_hard_coverage(int n, int w, int t, int agent);

/// XOS instance for marginal Round-Robin; expected ratio ceil(m/n).
/// Requires n >= 2 and m >= n.
HardInstance xos_hard_instance(int n, int m);

/// Group sizes s_i = ceil((m - i + 1)/n).
std::vector<int> xos_group_sizes(int n, int m);

/// Fixed-order (ratio (1+eps)/eps) and favorite-good (ratio 1/eps)
/// envy-graph instances. Requires 0 < eps < 1.
std::vector<HardInstance> envy_graph_hard_instances(const Rational& epsilon);

struct Replay {
  Allocation truthful;
  Allocation manipulated;
  Value truthful_utility;
  Value manipulated_utility;
  ExtendedRatio ratio;
  bool matches = false;  // ratio == expected exactly
};

Replay replay(const HardInstance& instance);

}  // namespace fairdiv
