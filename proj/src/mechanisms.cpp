#include "fairdiv/mechanisms.hpp"

#include "fairdiv/errors.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace fairdiv {

namespace {

PartialAllocation empty_bundles(const Profile& p) {
  return PartialAllocation(static_cast<std::size_t>(p.agents()), Bundle(p.goods()));
}

// Goods by decreasing singleton value, smallest index first among equals.
std::vector<int> preference_list(const Valuation& v) {
  const int m = v.goods();
  std::vector<Rational> single;
  single.reserve(static_cast<std::size_t>(m));
  for (int g = 1; g <= m; ++g) single.push_back(v.singleton(g).exact());
  std::vector<int> order(static_cast<std::size_t>(m));
  std::iota(order.begin(), order.end(), 1);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const int c = cmp(single[static_cast<std::size_t>(a - 1)], single[static_cast<std::size_t>(b - 1)]);
    return c > 0 || (c == 0 && a < b);
  });
  return order;
}

// First good of `candidates` with the strictly largest score.
template <typename Score>
int argmax_good(const Bundle& candidates, Score score) {
  int best = 0;
  Value best_value;
  candidates.for_each([&](int g) {
    Value x = score(g);
    if (best == 0 || x > best_value) {
      best = g;
      best_value = std::move(x);
    }
  });
  return best;
}

void record_stage(Trace* trace, int index, int agent, int good, const Bundle& remaining,
                  const PartialAllocation& bundles) {
  if (trace == nullptr) return;
  trace->stages.push_back(Stage{index, agent, good, remaining});
  trace->snapshots.push_back(bundles);
}

std::vector<int> find_cycle(const EnvyGraph& g) {
  const int n = g.agents;
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (const auto& [i, j] : g.edges) adj[static_cast<std::size_t>(i)].push_back(j);
  std::vector<int> color(static_cast<std::size_t>(n), 0);  // 0 white, 1 on stack, 2 done
  std::vector<int> stack;
  std::vector<int> cycle;

  std::function<bool(int)> dfs = [&](int u) {
    color[static_cast<std::size_t>(u)] = 1;
    stack.push_back(u);
    for (int w : adj[static_cast<std::size_t>(u)]) {
      if (color[static_cast<std::size_t>(w)] == 1) {
        const auto it = std::find(stack.begin(), stack.end(), w);
        cycle.assign(it, stack.end());
        return true;
      }
      if (color[static_cast<std::size_t>(w)] == 0 && dfs(w)) return true;
    }
    color[static_cast<std::size_t>(u)] = 2;
    stack.pop_back();
    return false;
  };

  for (int s = 0; s < n; ++s) {
    if (color[static_cast<std::size_t>(s)] == 0 && dfs(s)) return cycle;
  }
  return {};
}

template <typename Choose>
Allocation envy_graph_run(const Profile& p, MechanismKind kind, Trace* trace, Choose choose) {
  const int m = p.goods();
  PartialAllocation bundles = empty_bundles(p);
  Bundle remaining = Bundle::full(m);
  if (trace != nullptr) *trace = Trace{kind, {}, {}, {}};
  for (int it = 1; it <= m; ++it) {
    const EnvyGraph graph = build_envy_graph(p, bundles);
    const int source = graph.first_source();
    if (source < 0) throw std::logic_error("envy graph has no source after cycle elimination");
    const int good = choose(it, source, remaining);
    const Bundle before = remaining;
    remaining.erase(good);
    bundles[static_cast<std::size_t>(source)].insert(good);

    Iteration record;
    if (trace != nullptr) record.before_elimination = build_envy_graph(p, bundles);
    auto [next, rotations] = eliminate_envy_cycles(p, std::move(bundles));
    bundles = std::move(next);
    if (trace != nullptr) {
      record.rotations = std::move(rotations);
      record.after_elimination = build_envy_graph(p, bundles);
      trace->iterations.push_back(std::move(record));
    }
    record_stage(trace, it, source, good, before, bundles);
  }
  return make_allocation(p.agents(), m, std::move(bundles));
}

}  // namespace

std::string_view mechanism_name(MechanismKind kind) {
  switch (kind) {
    case MechanismKind::round_robin: return "rr";
    case MechanismKind::round_robin_marginal: return "rr-marginal";
    case MechanismKind::envy_graph_fixed: return "eg-fixed";
    case MechanismKind::envy_graph_favorite: return "eg-favorite";
  }
  return "unknown";
}

MechanismKind parse_mechanism(std::string_view name) {
  for (auto k : {MechanismKind::round_robin, MechanismKind::round_robin_marginal,
                 MechanismKind::envy_graph_fixed, MechanismKind::envy_graph_favorite}) {
    if (mechanism_name(k) == name) return k;
  }
  throw InvalidArgument("unknown mechanism '" + std::string(name) +
                        "' (expected rr, rr-marginal, eg-fixed or eg-favorite)");
}

bool EnvyGraph::has_edge(int i, int j) const {
  return std::binary_search(edges.begin(), edges.end(), std::pair{i, j});
}

std::vector<int> EnvyGraph::successors(int i) const {
  std::vector<int> out;
  for (const auto& [a, b] : edges) {
    if (a == i) out.push_back(b);
  }
  return out;
}

int EnvyGraph::first_source() const {
  std::vector<bool> envied(static_cast<std::size_t>(agents), false);
  for (const auto& e : edges) envied[static_cast<std::size_t>(e.second)] = true;
  for (int i = 0; i < agents; ++i) {
    if (!envied[static_cast<std::size_t>(i)]) return i;
  }
  return -1;
}

EnvyGraph build_envy_graph(const Profile& p, const PartialAllocation& bundles) {
  const int n = p.agents();
  if (static_cast<int>(bundles.size()) != n) throw InvalidArgument("one bundle per agent expected");
  EnvyGraph g{n, {}};
  for (int i = 0; i < n; ++i) {
    const Valuation& v = p.valuation(i);
    const Value own = v.value(bundles[static_cast<std::size_t>(i)]);
    for (int j = 0; j < n; ++j) {
      if (i != j && v.value(bundles[static_cast<std::size_t>(j)]) > own) g.edges.emplace_back(i, j);
    }
  }
  return g;
}

EnvyGraph build_envy_graph(const Profile& p, const Allocation& a) {
  return build_envy_graph(p, a.bundles());
}

std::pair<PartialAllocation, std::vector<Rotation>> eliminate_envy_cycles(const Profile& p,
                                                                         PartialAllocation bundles) {
  const int n = p.agents();
  const int cap = n * (n - 1) / 2;
  std::vector<Rotation> log;
  for (;;) {
    Rotation cycle = find_cycle(build_envy_graph(p, bundles));
    if (cycle.empty()) break;
    if (static_cast<int>(log.size()) >= cap) {
      throw std::logic_error("cycle elimination exceeded n(n-1)/2 rotations");
    }
    const PartialAllocation old = bundles;
    for (std::size_t t = 0; t < cycle.size(); ++t) {
      bundles[static_cast<std::size_t>(cycle[t])] = old[static_cast<std::size_t>(cycle[(t + 1) % cycle.size()])];
    }
    log.push_back(std::move(cycle));
  }
  return {std::move(bundles), std::move(log)};
}

Allocation round_robin(const Profile& p, Trace* trace) {
  const int n = p.agents();
  const int m = p.goods();
  PartialAllocation bundles = empty_bundles(p);
  Bundle remaining = Bundle::full(m);
  if (trace != nullptr) *trace = Trace{MechanismKind::round_robin, {}, {}, {}};

  std::vector<std::vector<int>> pref(static_cast<std::size_t>(n));
  std::vector<std::size_t> cursor(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    if (p.valuation(i).is_exact()) pref[static_cast<std::size_t>(i)] = preference_list(p.valuation(i));
  }

  for (int k = 1; k <= m; ++k) {
    const int i = (k - 1) % n;
    const auto ui = static_cast<std::size_t>(i);
    int good;
    if (!pref[ui].empty()) {
      while (!remaining.contains(pref[ui][cursor[ui]])) ++cursor[ui];
      good = pref[ui][cursor[ui]];
    } else {
      const Valuation& v = p.valuation(i);
      good = argmax_good(remaining, [&](int g) { return v.singleton(g); });
    }
    if (trace != nullptr) trace->stages.push_back(Stage{k, i, good, remaining});
    remaining.erase(good);
    bundles[ui].insert(good);
    if (trace != nullptr) trace->snapshots.push_back(bundles);
  }
  return make_allocation(n, m, std::move(bundles));
}

Allocation round_robin_marginal(const Profile& p, Trace* trace) {
  const int n = p.agents();
  const int m = p.goods();
  PartialAllocation bundles = empty_bundles(p);
  Bundle remaining = Bundle::full(m);
  if (trace != nullptr) *trace = Trace{MechanismKind::round_robin_marginal, {}, {}, {}};

  for (int k = 1; k <= m; ++k) {
    const int i = (k - 1) % n;
    const auto ui = static_cast<std::size_t>(i);
    const Valuation& v = p.valuation(i);
    const Value base = v.value(bundles[ui]);
    const int good = argmax_good(remaining, [&](int g) { return v.value(bundles[ui].with(g)) - base; });
    const Bundle before = remaining;
    remaining.erase(good);
    bundles[ui].insert(good);
    record_stage(trace, k, i, good, before, bundles);
  }
  return make_allocation(n, m, std::move(bundles));
}

Allocation envy_graph_fixed(const Profile& p, const std::vector<int>& order, Trace* trace) {
  const int m = p.goods();
  std::vector<int> seq = order;
  if (seq.empty()) {
    seq.resize(static_cast<std::size_t>(m));
    std::iota(seq.begin(), seq.end(), 1);
  }
  std::vector<int> check = seq;
  std::sort(check.begin(), check.end());
  std::vector<int> identity(static_cast<std::size_t>(m));
  std::iota(identity.begin(), identity.end(), 1);
  if (check != identity) throw InvalidArgument("good order must be a permutation of 1.." + std::to_string(m));
  return envy_graph_run(p, MechanismKind::envy_graph_fixed, trace,
                        [&](int it, int, const Bundle&) { return seq[static_cast<std::size_t>(it - 1)]; });
}

Allocation envy_graph_favorite(const Profile& p, Trace* trace) {
  return envy_graph_run(p, MechanismKind::envy_graph_favorite, trace, [&](int, int source, const Bundle& remaining) {
    const Valuation& v = p.valuation(source);
    return argmax_good(remaining, [&](int g) { return v.singleton(g); });
  });
}

Mechanism make_mechanism(MechanismKind kind, std::vector<int> order) {
  return [kind, order = std::move(order)](const Profile& p) { return run_mechanism(kind, p, order); };
}

Allocation run_mechanism(MechanismKind kind, const Profile& p, const std::vector<int>& order, Trace* trace) {
  switch (kind) {
    case MechanismKind::round_robin: return round_robin(p, trace);
    case MechanismKind::round_robin_marginal: return round_robin_marginal(p, trace);
    case MechanismKind::envy_graph_fixed: return envy_graph_fixed(p, order, trace);
    case MechanismKind::envy_graph_favorite: return envy_graph_favorite(p, trace);
  }
  throw InvalidArgument("unknown mechanism");
}

}  // namespace fairdiv
