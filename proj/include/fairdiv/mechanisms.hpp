#pragma once

#include "fairdiv/bundle.hpp"
#include "fairdiv/profile.hpp"

#include <functional>
#include <string_view>
#include <utility>
#include <vector>

namespace fairdiv {

enum class MechanismKind { round_robin, round_robin_marginal, envy_graph_fixed, envy_graph_favorite };

/// Short names used on the command line: rr, rr-marginal, eg-fixed, eg-favorite.
std::string_view mechanism_name(MechanismKind kind);
MechanismKind parse_mechanism(std::string_view name);

/// Bundles indexed by agent that need not cover every good yet.
using PartialAllocation = std::vector<Bundle>;

struct EnvyGraph {
  int agents = 0;
  /// (i, j): agent i strictly prefers A_j to A_i. Sorted lexicographically.
  std::vector<std::pair<int, int>> edges;

  bool has_edge(int i, int j) const;
  std::vector<int> successors(int i) const;
  /// Smallest-index agent nobody envies, or -1 if every vertex has an in-edge.
  int first_source() const;
  friend bool operator==(const EnvyGraph&, const EnvyGraph&) = default;
};

/// One cycle rotation: cycle[t] receives the bundle previously held by
/// cycle[(t + 1) % size].
using Rotation = std::vector<int>;

struct Stage {
  int index = 0;  // 1-based
  int agent = 0;  // 0-based
  int good = 0;
  Bundle remaining_before;
};

struct Iteration {
  EnvyGraph before_elimination;  // after the good is handed out
  std::vector<Rotation> rotations;
  EnvyGraph after_elimination;
};

struct Trace {
  MechanismKind mechanism = MechanismKind::round_robin;
  std::vector<Stage> stages;
  /// Bundles after each stage (after cycle elimination for envy-graph runs).
  std::vector<PartialAllocation> snapshots;
  /// Envy-graph mechanisms only; one entry per stage.
  std::vector<Iteration> iterations;
};

EnvyGraph build_envy_graph(const Profile& profile, const PartialAllocation& bundles);
EnvyGraph build_envy_graph(const Profile& profile, const Allocation& allocation);

/// Rotates bundles along envy cycles until the graph is acyclic. Each cycle is
/// the first one closed by a depth-first search that starts at the
/// lowest-index vertex and visits successors in increasing order.
std::pair<PartialAllocation, std::vector<Rotation>> eliminate_envy_cycles(const Profile& profile,
                                                                         PartialAllocation bundles);

/// Agents 1..n pick in turn; each takes the remaining good of highest value,
/// the smallest index on ties.
Allocation round_robin(const Profile& profile, Trace* trace = nullptr);

/// As round_robin, but the pick maximizes the marginal value over the
/// agent's current bundle.
Allocation round_robin_marginal(const Profile& profile, Trace* trace = nullptr);

/// Each iteration gives the next good of `order` (default g1..gm) to the
/// smallest-index unenvied agent, then removes envy cycles.
Allocation envy_graph_fixed(const Profile& profile, const std::vector<int>& order = {},
                            Trace* trace = nullptr);

/// As envy_graph_fixed, but the chosen agent takes its favorite remaining good.
Allocation envy_graph_favorite(const Profile& profile, Trace* trace = nullptr);

using Mechanism = std::function<Allocation(const Profile&)>;

Mechanism make_mechanism(MechanismKind kind, std::vector<int> order = {});
Allocation run_mechanism(MechanismKind kind, const Profile& profile, const std::vector<int>& order = {},
                         Trace* trace = nullptr);

}  // namespace fairdiv
