#include "fairdiv/io.hpp"

#include "fairdiv/errors.hpp"

#include <fstream>
#include <sstream>

namespace fairdiv::io {

namespace {

std::string at(const std::string& field, const std::string& key) { return field + "/" + key; }
std::string at(const std::string& field, std::size_t index) { return field + "/" + std::to_string(index); }

const json& member(const json& j, const char* key, const std::string& path, const std::string& field) {
  if (!j.is_object()) throw FormatError(path, field, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) throw FormatError(path, at(field, key), "missing field");
  return *it;
}

int integer(const json& j, const std::string& path, const std::string& field) {
  if (!j.is_number_integer()) throw FormatError(path, field, "expected an integer");
  return j.get<int>();
}

std::vector<Rational> rationals(const json& j, const std::string& path, const std::string& field) {
  if (!j.is_array()) throw FormatError(path, field, "expected an array");
  std::vector<Rational> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(rational_from_json(j[i], path, at(field, i)));
  return out;
}

std::vector<int> integers(const json& j, const std::string& path, const std::string& field) {
  if (!j.is_array()) throw FormatError(path, field, "expected an array");
  std::vector<int> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(integer(j[i], path, at(field, i)));
  return out;
}

void expect_length(const std::vector<Rational>& v, int goods, const std::string& path, const std::string& field) {
  if (static_cast<int>(v.size()) != goods) {
    throw FormatError(path, field, "expected " + std::to_string(goods) + " entries, got " + std::to_string(v.size()));
  }
}

std::string subset_key(const std::vector<int>& goods) {
  std::string key;
  for (std::size_t i = 0; i < goods.size(); ++i) {
    if (i > 0) key += ",";
    key += std::to_string(goods[i]);
  }
  return key;
}

std::vector<int> parse_subset_key(const std::string& key, const std::string& path, const std::string& field) {
  std::vector<int> out;
  if (key.empty()) return out;
  std::stringstream ss(key);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      std::size_t used = 0;
      const int g = std::stoi(part, &used);
      if (used != part.size()) throw std::invalid_argument(part);
      out.push_back(g);
    } catch (const std::exception&) {
      throw FormatError(path, field, "malformed subset key '" + key + "'");
    }
  }
  return out;
}

Valuation build(const json& j, int goods, const std::string& path, const std::string& field) {
  const json& kind_j = member(j, "kind", path, field);
  if (!kind_j.is_string()) throw FormatError(path, at(field, "kind"), "expected a string");
  const std::string kind = kind_j.get<std::string>();

  if (kind == "additive") {
    auto values = rationals(member(j, "values", path, field), path, at(field, "values"));
    expect_length(values, goods, path, at(field, "values"));
    return Valuation::additive(std::move(values));
  }
  if (kind == "multiplicative") {
    auto factors = rationals(member(j, "factors", path, field), path, at(field, "factors"));
    expect_length(factors, goods, path, at(field, "factors"));
    return Valuation::multiplicative(std::move(factors));
  }
  if (kind == "xos") {
    const json& cj = member(j, "clauses", path, field);
    if (!cj.is_array()) throw FormatError(path, at(field, "clauses"), "expected an array");
    std::vector<std::vector<Rational>> clauses;
    for (std::size_t c = 0; c < cj.size(); ++c) {
      clauses.push_back(rationals(cj[c], path, at(at(field, "clauses"), c)));
      expect_length(clauses.back(), goods, path, at(at(field, "clauses"), c));
    }
    return Valuation::xos(std::move(clauses));
  }
  if (kind == "coverage") {
    const int universe = integer(member(j, "universe", path, field), path, at(field, "universe"));
    const json& sj = member(j, "sets", path, field);
    if (!sj.is_array() || static_cast<int>(sj.size()) != goods) {
      throw FormatError(path, at(field, "sets"), "expected one element list per good");
    }
    std::vector<std::vector<int>> sets;
    for (std::size_t g = 0; g < sj.size(); ++g) sets.push_back(integers(sj[g], path, at(at(field, "sets"), g)));
    Rational weight = 1;
    if (j.contains("weight")) weight = rational_from_json(j["weight"], path, at(field, "weight"));
    return Valuation::coverage(goods, universe, std::move(sets), std::move(weight));
  }
  if (kind == "table") {
    const std::vector<int> support = integers(member(j, "support", path, field), path, at(field, "support"));
    if (static_cast<int>(support.size()) > kTableSupportLimit) {
      throw FormatError(path, at(field, "support"), "support larger than " + std::to_string(kTableSupportLimit));
    }
    const json& ej = member(j, "entries", path, field);
    if (!ej.is_object()) throw FormatError(path, at(field, "entries"), "expected an object");
    const std::size_t count = std::size_t{1} << support.size();
    std::vector<Rational> entries(count);
    std::vector<bool> seen(count, false);
    for (const auto& [key, value] : ej.items()) {
      const std::string efield = at(at(field, "entries"), key);
      std::size_t mask = 0;
      for (int g : parse_subset_key(key, path, efield)) {
        const auto pos = std::find(support.begin(), support.end(), g);
        if (pos == support.end()) throw FormatError(path, efield, "g" + std::to_string(g) + " is not in the support");
        const std::size_t bit = std::size_t{1} << (pos - support.begin());
        if (mask & bit) throw FormatError(path, efield, "subset key repeats g" + std::to_string(g));
        mask |= bit;
      }
      if (seen[mask]) throw FormatError(path, efield, "subset listed twice");
      seen[mask] = true;
      entries[mask] = rational_from_json(value, path, efield);
    }
    seen[0] = true;
    for (std::size_t s = 0; s < count; ++s) {
      if (!seen[s]) {
        std::vector<int> members;
        for (std::size_t k = 0; k < support.size(); ++k) {
          if (s & (std::size_t{1} << k)) members.push_back(support[k]);
        }
        throw FormatError(path, at(field, "entries"), "missing entry for subset '" + subset_key(members) + "'");
      }
    }
    return Valuation::table(goods, support, std::move(entries));
  }
  if (kind == "discounted") {
    auto values = rationals(member(j, "values", path, field), path, at(field, "values"));
    expect_length(values, goods, path, at(field, "values"));
    const int trigger = integer(member(j, "trigger", path, field), path, at(field, "trigger"));
    auto discounted = integers(member(j, "discounted", path, field), path, at(field, "discounted"));
    Rational discount = 1;
    if (j.contains("discount")) discount = rational_from_json(j["discount"], path, at(field, "discount"));
    return Valuation::discounted(std::move(values), trigger, std::move(discounted), std::move(discount));
  }
  if (kind == "lifted") {
    auto base = rationals(member(j, "base", path, field), path, at(field, "base"));
    expect_length(base, goods, path, at(field, "base"));
    const json& dj = member(j, "delta", path, field);
    if (!dj.is_number()) throw FormatError(path, at(field, "delta"), "expected a number");
    return lift(Valuation::additive(std::move(base)), dj.get<double>());
  }
  throw FormatError(path, at(field, "kind"), "unknown valuation kind '" + kind + "'");
}

json rational_list(const std::vector<Rational>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

json agent_list(const std::vector<int>& agents) {
  json out = json::array();
  for (int a : agents) out.push_back(a + 1);
  return out;
}

}  // namespace

Rational rational_from_json(const json& j, const std::string& path, const std::string& field) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const InvalidArgument& e) {
      throw FormatError(path, field, e.what());
    }
  }
  throw FormatError(path, field, "expected a rational string such as \"3/2\" or an integer");
}

json to_json(const Rational& r) { return format_rational(r); }

json to_json(const Value& v) { return v.to_string(); }

Valuation valuation_from_json(const json& j, int goods, const std::string& path, const std::string& field) {
  try {
    return build(j, goods, path, field);
  } catch (const FormatError&) {
    throw;
  } catch (const Error& e) {
    throw FormatError(path, field, e.what());
  }
}

json to_json(const Valuation& v) {
  json out;
  out["kind"] = std::string(kind_name(v.kind()));
  std::visit(
      [&](const auto& r) {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, AdditiveRep>) {
          out["values"] = rational_list(r.values);
        } else if constexpr (std::is_same_v<T, MultiplicativeRep>) {
          out["factors"] = rational_list(r.factors);
        } else if constexpr (std::is_same_v<T, TableRep>) {
          out["support"] = r.support;
          json entries = json::object();
          for (std::size_t s = 0; s < r.entries.size(); ++s) {
            std::vector<int> members;
            for (std::size_t k = 0; k < r.support.size(); ++k) {
              if (s & (std::size_t{1} << k)) members.push_back(r.support[k]);
            }
            std::sort(members.begin(), members.end());
            entries[subset_key(members)] = to_json(r.entries[s]);
          }
          out["entries"] = std::move(entries);
        } else if constexpr (std::is_same_v<T, CoverageRep>) {
          out["universe"] = r.universe;
          out["sets"] = r.sets;
          out["weight"] = to_json(r.weight);
        } else if constexpr (std::is_same_v<T, XosRep>) {
          json clauses = json::array();
          for (const auto& c : r.clauses) clauses.push_back(rational_list(c));
          out["clauses"] = std::move(clauses);
        } else if constexpr (std::is_same_v<T, DiscountedRep>) {
          out["values"] = rational_list(r.values);
          out["trigger"] = r.trigger;
          out["discounted"] = r.discounted;
          out["discount"] = to_json(r.discount);
        } else if constexpr (std::is_same_v<T, LiftedRep>) {
          out["base"] = rational_list(r.base);
          out["delta"] = r.delta;
        }
      },
      v.representation());
  return out;
}

Profile profile_from_json(const json& j, const std::string& path) {
  const int m = integer(member(j, "m", path, ""), path, "/m");
  if (m < 0) throw FormatError(path, "/m", "must be non-negative");
  const json& agents = member(j, "agents", path, "");
  if (!agents.is_array() || agents.empty()) throw FormatError(path, "/agents", "expected a non-empty array");
  std::vector<Valuation> vs;
  for (std::size_t i = 0; i < agents.size(); ++i) vs.push_back(valuation_from_json(agents[i], m, path, at("/agents", i)));
  return Profile(m, std::move(vs));
}

json to_json(const Profile& p) {
  json out;
  out["m"] = p.goods();
  json agents = json::array();
  for (const auto& v : p.valuations()) agents.push_back(to_json(v));
  out["agents"] = std::move(agents);
  return out;
}

Allocation allocation_from_json(const json& j, int agents, int goods, const std::string& path) {
  const json& bj = member(j, "bundles", path, "");
  if (!bj.is_array()) throw FormatError(path, "/bundles", "expected an array");
  if (static_cast<int>(bj.size()) != agents) {
    throw FormatError(path, "/bundles", "expected " + std::to_string(agents) + " bundles, got " + std::to_string(bj.size()));
  }
  std::vector<Bundle> bundles;
  for (std::size_t i = 0; i < bj.size(); ++i) {
    const std::vector<int> members = integers(bj[i], path, at("/bundles", i));
    Bundle b(goods);
    for (std::size_t k = 0; k < members.size(); ++k) {
      const int g = members[k];
      if (g < 1 || g > goods) throw FormatError(path, at(at("/bundles", i), k), "good outside 1.." + std::to_string(goods));
      b.insert(g);
    }
    bundles.push_back(std::move(b));
  }
  try {
    return make_allocation(agents, goods, std::move(bundles));
  } catch (const Error& e) {
    throw FormatError(path, "/bundles", e.what());
  }
}

json bundle_json(const Bundle& b) { return b.goods(); }

json to_json(const Allocation& a) {
  json bundles = json::array();
  for (const auto& b : a.bundles()) bundles.push_back(bundle_json(b));
  return json{{"bundles", std::move(bundles)}};
}

json to_json(const EnvyGraph& g) {
  json edges = json::array();
  for (const auto& [i, j] : g.edges) edges.push_back(json::array({i + 1, j + 1}));
  return edges;
}

json to_json(const Trace& t) {
  json out;
  out["mechanism"] = std::string(mechanism_name(t.mechanism));
  json stages = json::array();
  for (std::size_t k = 0; k < t.stages.size(); ++k) {
    const Stage& s = t.stages[k];
    json st;
    st["stage"] = s.index;
    st["agent"] = s.agent + 1;
    st["good"] = s.good;
    st["remaining_before"] = bundle_json(s.remaining_before);
    json snap = json::array();
    for (const auto& b : t.snapshots[k]) snap.push_back(bundle_json(b));
    st["bundles_after"] = std::move(snap);
    if (k < t.iterations.size()) {
      const Iteration& it = t.iterations[k];
      st["envy_edges_before_elimination"] = to_json(it.before_elimination);
      json rots = json::array();
      for (const auto& r : it.rotations) rots.push_back(agent_list(r));
      st["rotations"] = std::move(rots);
      st["envy_edges_after_elimination"] = to_json(it.after_elimination);
    }
    stages.push_back(std::move(st));
  }
  out["stages"] = std::move(stages);
  return out;
}

json to_json(const FairnessReport& r) {
  json out;
  out["alpha"] = to_json(r.alpha);
  out["satisfied"] = r.satisfied;
  json vs = json::array();
  for (const auto& v : r.violations) {
    json x;
    x["envier"] = v.envier + 1;
    x["envied"] = v.envied + 1;
    x["removed"] = v.removed ? json(*v.removed) : json(nullptr);
    x["own_value"] = to_json(v.own);
    x["alpha_times_remainder"] = to_json(v.compared);
    vs.push_back(std::move(x));
  }
  out["violations"] = std::move(vs);
  return out;
}

json to_json(const Witness& w) {
  json out;
  out["agent"] = w.agent + 1;
  out["true_valuation"] = to_json(w.true_valuation);
  json report;
  report["index"] = w.misreport.index;
  if (!w.misreport.order.empty()) report["order"] = w.misreport.order;
  report["valuation"] = to_json(w.misreport.valuation);
  out["misreport"] = std::move(report);
  out["truthful_utility"] = to_json(w.truthful_utility);
  out["manipulated_utility"] = to_json(w.manipulated_utility);
  out["ratio"] = w.ratio.to_string();
  out["truthful_allocation"] = to_json(w.truthful_allocation)["bundles"];
  out["manipulated_allocation"] = to_json(w.manipulated_allocation)["bundles"];
  return out;
}

json to_json(const ClassCheckResult& r) {
  json out;
  out["class"] = std::string(class_name(r.cls));
  out["holds"] = r.holds;
  if (!r.holds) {
    json cx;
    if (r.s) cx["S"] = bundle_json(*r.s);
    if (r.t) cx["T"] = bundle_json(*r.t);
    if (r.good) cx["g"] = *r.good;
    out["counterexample"] = std::move(cx);
  }
  return out;
}

json to_json(const StageMapping& m) {
  json out;
  out["stage"] = m.stage;
  out["domain"] = bundle_json(m.domain);
  out["target"] = bundle_json(m.target);
  json image = json::array();
  for (const auto& [g, h] : m.image) image.push_back(json::array({g, h}));
  out["mapping"] = std::move(image);
  return out;
}

json to_json(const FactorTwoResult& r) {
  json out;
  out["R1"] = bundle_json(r.r1);
  out["R2"] = bundle_json(r.r2);
  out["truthful_utility"] = to_json(r.truthful_utility);
  out["manipulated_utility"] = to_json(r.manipulated_utility);
  out["R1_value"] = to_json(r.r1_value);
  out["R2_value"] = to_json(r.r2_value);
  out["R1_dominated"] = r.r1_dominated;
  out["R2_dominated"] = r.r2_dominated;
  out["split_bounds"] = r.split_bounds;
  out["bound_holds"] = r.bound_holds;
  return out;
}

json to_json(const ProfileChain& c) {
  json out;
  json profiles = json::array();
  for (std::size_t k = 0; k < c.profiles.size(); ++k) {
    json p = to_json(c.profiles[k]);
    p["name"] = c.names[k];
    profiles.push_back(std::move(p));
  }
  out["profiles"] = std::move(profiles);
  json edges = json::array();
  for (const auto& e : c.edges) {
    edges.push_back(json{{"from", c.names[static_cast<std::size_t>(e.from)]},
                         {"to", c.names[static_cast<std::size_t>(e.to)]},
                         {"agent", e.agent + 1},
                         {"claimed_ratio", to_json(e.claimed)}});
  }
  out["edges"] = std::move(edges);
  return out;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError(path, "", "cannot open file");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw FormatError(path, "", std::string("invalid JSON: ") + e.what());
  }
}

Profile load_profile(const std::string& path) { return profile_from_json(read_json_file(path), path); }

std::vector<Valuation> load_reports(const std::string& path, int goods) {
  const json j = read_json_file(path);
  const json* list = &j;
  std::string field;
  if (j.is_object()) {
    list = &member(j, "reports", path, "");
    field = "/reports";
  }
  if (!list->is_array()) throw FormatError(path, field, "expected an array of valuations");
  std::vector<Valuation> out;
  for (std::size_t i = 0; i < list->size(); ++i) out.push_back(valuation_from_json((*list)[i], goods, path, at(field, i)));
  return out;
}

}  // namespace fairdiv::io
