#include "fairdiv/instances.hpp"

#include "fairdiv/errors.hpp"

#include <numeric>

namespace fairdiv {

namespace {

using Row = std::vector<Rational>;

Row padded(Row values, bool pad) {
  if (pad) values.resize(values.size() + 3, Rational(0));
  return values;
}

Valuation additive_row(Row values, bool pad) { return Valuation::additive(padded(std::move(values), pad)); }

// Six profiles over agents (1, 2):
//   0: (a1, b1)  1: (a2, b1)  2: (a3, b1)  3: (a2, b2)  4: (a3, b3)  5: (a3, b2)
ProfileChain assemble_chain(int m, const Valuation& a1, const Valuation& a2, const Valuation& a3,
                            const Valuation& b1, const Valuation& b2, const Valuation& b3,
                            const std::vector<Rational>& claimed) {
  ProfileChain c;
  c.names = {"v0", "v1", "v2", "v3", "v4", "v5"};
  c.profiles = {Profile(m, {a1, b1}), Profile(m, {a2, b1}), Profile(m, {a3, b1}),
                Profile(m, {a2, b2}), Profile(m, {a3, b3}), Profile(m, {a3, b2})};
  c.edges = {{1, 0, 0, claimed[0]}, {2, 0, 0, claimed[1]}, {3, 1, 1, claimed[2]},
             {1, 3, 1, claimed[3]}, {5, 3, 0, claimed[4]}, {5, 4, 1, claimed[5]}};
  return c;
}

}  // namespace

ProfileChain lower_bound_chain_additive(const Rational& delta, bool pad) {
  if (delta < 5) throw ParameterOutOfRange("delta must be at least 5");
  const int m = pad ? 7 : 4;
  const Rational d = delta;
  const Rational d15 = d * 3 / 2;
  const Valuation ones = additive_row({1, 1, 1, 1}, pad);
  return assemble_chain(m, ones, additive_row({d, d15, 0, 0}, pad), additive_row({d15, d, 0, 0}, pad), ones,
                        additive_row({0, d, 1, 1}, pad), additive_row({d, d, 1, 1}, pad),
                        {ratio(5, 3), ratio(5, 3), 2, ratio(3, 2), ratio(5, 3), Rational(d / 2)});
}

Valuation size_table(int goods, const std::vector<int>& support, const std::vector<Rational>& by_size) {
  if (by_size.size() != support.size() + 1) throw InvalidArgument("one value per bundle size expected");
  const std::size_t count = std::size_t{1} << support.size();
  std::vector<Rational> entries(count);
  for (std::size_t s = 0; s < count; ++s) {
    entries[s] = by_size[static_cast<std::size_t>(__builtin_popcountll(s))];
  }
  return Valuation::table(goods, support, std::move(entries));
}

ProfileChain lower_bound_chain_cancelable(const Rational& delta, const Rational& epsilon, bool pad) {
  if (delta < 5) throw ParameterOutOfRange("delta must be at least 5");
  if (epsilon <= 0 || epsilon >= ratio(1, 10)) throw ParameterOutOfRange("epsilon must lie in (0, 1/10)");
  const int m = pad ? 7 : 4;
  const Rational& phi = golden_ratio();
  const Rational phi2 = phi * phi;
  const Rational d = delta;
  const Rational dphi = d * phi;
  const Valuation table = size_table(m, {1, 2, 3, 4}, {0, 1, phi + epsilon, phi2, phi2 + epsilon});
  return assemble_chain(m, additive_row({1, 1, 1, 1}, pad), additive_row({d, dphi, 0, 0}, pad),
                        additive_row({dphi, d, 0, 0}, pad), table, additive_row({0, d, 1, 1}, pad),
                        additive_row({d, d, 1, 1}, pad),
                        {phi, phi, 2, Rational(phi2 / (phi + epsilon)), phi, Rational(d / 2)});
}

ProfileChain swap_agents(const ProfileChain& chain) {
  ProfileChain out;
  out.names = chain.names;
  for (const Profile& p : chain.profiles) {
    if (p.agents() != 2) throw InvalidArgument("agent swap needs two-agent profiles");
    out.profiles.emplace_back(p.goods(), std::vector<Valuation>{p.valuation(1), p.valuation(0)});
  }
  for (DeviationEdge e : chain.edges) {
    e.agent = 1 - e.agent;
    out.edges.push_back(std::move(e));
  }
  return out;
}

AuditResult audit_chain(const Mechanism& mechanism, const ProfileChain& chain, const Rational& alpha_fair,
                        const Rational& ratio_threshold) {
  const ExtendedRatio threshold{Value(ratio_threshold)};
  auto attempt = [&](const ProfileChain& c) -> std::optional<std::variant<ChainFairnessFailure, ChainWitness>> {
    std::vector<Allocation> outcomes;
    for (std::size_t k = 0; k < c.profiles.size(); ++k) {
      outcomes.push_back(mechanism(c.profiles[k]));
      FairnessReport r = is_alpha_ef1(c.profiles[k], outcomes.back(), alpha_fair);
      if (!r.satisfied) return ChainFairnessFailure{static_cast<int>(k), std::move(r)};
    }
    for (std::size_t e = 0; e < c.edges.size(); ++e) {
      const DeviationEdge& edge = c.edges[e];
      const Profile& from = c.profiles[static_cast<std::size_t>(edge.from)];
      const Profile& to = c.profiles[static_cast<std::size_t>(edge.to)];
      const Valuation& truth = from.valuation(edge.agent);
      const Allocation& a = outcomes[static_cast<std::size_t>(edge.from)];
      const Allocation& b = outcomes[static_cast<std::size_t>(edge.to)];
      Value before = truth.value(a.bundle(edge.agent));
      Value after = truth.value(b.bundle(edge.agent));
      ExtendedRatio ratio = ExtendedRatio::of(after, before);
      if (ratio >= threshold) {
        Misreport report{to.valuation(edge.agent), {}, static_cast<std::uint64_t>(edge.to)};
        return ChainWitness{static_cast<int>(e),
                            Witness{edge.agent, truth, std::move(report), std::move(before), std::move(after),
                                    std::move(ratio), a, b}};
      }
    }
    return std::nullopt;
  };
  if (auto found = attempt(chain)) return AuditResult{std::move(*found), false};
  if (auto found = attempt(swap_agents(chain))) return AuditResult{std::move(*found), true};
  throw NoWitness("no fairness violation and no deviation reaching ratio " + format_rational(ratio_threshold) +
                  " on the chain or its agent-swapped copy; the chain argument guarantees one, so this indicates a bug");
}

HardInstance submodular_hard_instance(int n, int w, int t) {
  if (n < 2) throw ParameterOutOfRange("n must be at least 2");
  if (w < 2) throw ParameterOutOfRange("w must be at least 2");
  if (static_cast<long>(t) < static_cast<long>(w) * n * n) throw ParameterOutOfRange("T must be at least w n^2");
  const int head = w * n;
  const int m = head + t;
  std::vector<Valuation> vs;
  Row v1(static_cast<std::size_t>(m), 0);
  for (int g = 1; g <= head; ++g) v1[static_cast<std::size_t>(g - 1)] = 1;
  vs.push_back(Valuation::additive(v1));
  for (int i = 2; i <= n; ++i) {
    Row u(static_cast<std::size_t>(m), 0);
    std::vector<int> c;
    for (int k = 0; k < w; ++k) c.push_back(k * n + i);
    u[static_cast<std::size_t>(i - 2)] = w;
    for (int g : c) u[static_cast<std::size_t>(g - 1)] = 2;
    for (int g = head + 1; g <= m; ++g) u[static_cast<std::size_t>(g - 1)] = 2;
    vs.push_back(Valuation::discounted(std::move(u), i - 1, std::move(c), 1));
  }
  Row report(static_cast<std::size_t>(m), 0);
  for (int g = n; g <= head; ++g) report[static_cast<std::size_t>(g - 1)] = 1;
  return HardInstance{"submodular n=" + std::to_string(n) + " w=" + std::to_string(w) + " T=" + std::to_string(t),
                      Profile(m, std::move(vs)),
                      0,
                      Valuation::additive(std::move(report)),
                      MechanismKind::round_robin_marginal,
                      ratio(w * n - n + 1, w)};
}

Valuation submodular_hard_coverage(int n, int w, int t, int agent) {
  if (agent < 1 || agent >= n) throw InvalidArgument("coverage view exists for agents 2..n only");
  const int i = agent + 1;
  const int head = w * n;
  const int m = head + t;
  // Elements 1..w belong to the trigger good; each discounted good shares one
  // of them and owns one more; every tail good owns two.
  std::vector<std::vector<int>> sets(static_cast<std::size_t>(m));
  std::vector<int> trigger(static_cast<std::size_t>(w));
  std::iota(trigger.begin(), trigger.end(), 1);
  sets[static_cast<std::size_t>(i - 2)] = trigger;
  int next = w + 1;
  for (int k = 0; k < w; ++k) sets[static_cast<std::size_t>(k * n + i - 1)] = {k + 1, next++};
  for (int g = head + 1; g <= m; ++g) {
    sets[static_cast<std::size_t>(g - 1)] = {next, next + 1};
    next += 2;
  }
  return Valuation::coverage(m, next - 1, std::move(sets), 1);
}

std::vector<int> xos_group_sizes(int n, int m) {
  std::vector<int> s;
  for (int i = 1; i <= n; ++i) s.push_back((m - i + 1 + n - 1) / n);
  return s;
}

HardInstance xos_hard_instance(int n, int m) {
  if (n < 2) throw ParameterOutOfRange("n must be at least 2");
  if (m < n) throw ParameterOutOfRange("m must be at least n");
  const std::vector<int> s = xos_group_sizes(n, m);
  std::vector<int> start{1};
  for (int x : s) start.push_back(start.back() + x);
  auto in_group = [&](int g, int i) { return g >= start[static_cast<std::size_t>(i)] && g < start[static_cast<std::size_t>(i) + 1]; };
  const int s1 = s[0];
  auto row = [&](auto f) {
    Row r(static_cast<std::size_t>(m));
    for (int g = 1; g <= m; ++g) r[static_cast<std::size_t>(g - 1)] = f(g);
    return r;
  };
  std::vector<Valuation> vs;
  vs.push_back(Valuation::xos({row([&](int g) { return Rational(g == 1 ? 1 : 0); }),
                               row([&](int g) { return Rational(in_group(g, 1) || g == s1 ? 1 : 0); })}));
  vs.push_back(Valuation::xos({row([&](int g) { return Rational(in_group(g, 0) ? 1 : 0); }),
                               row([&](int g) { return Rational(g == s1 + 1 ? 2 : in_group(g, 1) ? 1 : 0); })}));
  for (int i = 2; i < n; ++i) {
    vs.push_back(Valuation::additive(row([&](int g) { return Rational(in_group(g, i) ? 1 : 0); })));
  }
  Valuation report = Valuation::additive(row([&](int g) { return Rational(in_group(g, 1) ? 2 : g == s1 ? 1 : 0); }));
  return HardInstance{"xos n=" + std::to_string(n) + " m=" + std::to_string(m), Profile(m, std::move(vs)), 0,
                      std::move(report), MechanismKind::round_robin_marginal, Rational((m + n - 1) / n)};
}

std::vector<HardInstance> envy_graph_hard_instances(const Rational& epsilon) {
  if (epsilon <= 0 || epsilon >= 1) throw ParameterOutOfRange("epsilon must lie in (0, 1)");
  const Rational& e = epsilon;
  std::vector<HardInstance> out;
  out.push_back(HardInstance{"envy-graph fixed order eps=" + format_rational(e),
                             Profile(3, {Valuation::additive({0, 0, 0}), Valuation::additive({e, e, 1})}), 1,
                             Valuation::additive({1, 0, 0}), MechanismKind::envy_graph_fixed,
                             Rational((1 + e) / e)});
  out.push_back(HardInstance{"envy-graph favorite good eps=" + format_rational(e),
                             Profile(4, {Valuation::additive({1, ratio(3, 5), 0, ratio(3, 5)}),
                                         Valuation::additive({1, 0, 0, e}), Valuation::additive({0, 1, 1, 1})}),
                             1, Valuation::additive({1, e, 0, 0}), MechanismKind::envy_graph_favorite,
                             Rational(1 / e)});
  return out;
}

Replay replay(const HardInstance& inst) {
  Allocation truthful = run_mechanism(inst.mechanism, inst.profile);
  Allocation manipulated = run_mechanism(inst.mechanism, inst.profile.with_valuation(inst.agent, inst.misreport));
  const Valuation& truth = inst.profile.valuation(inst.agent);
  Value before = truth.value(truthful.bundle(inst.agent));
  Value after = truth.value(manipulated.bundle(inst.agent));
  ExtendedRatio ratio = ExtendedRatio::of(after, before);
  const bool matches = !ratio.is_infinite() && ratio.value().is_exact() && ratio.value().exact() == inst.expected;
  return Replay{std::move(truthful), std::move(manipulated), std::move(before), std::move(after), std::move(ratio),
                matches};
}

}  // namespace fairdiv
