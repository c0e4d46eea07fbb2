#include "fairdiv/analysis.hpp"

#include "fairdiv/errors.hpp"

#include <algorithm>
#include <set>

namespace fairdiv {

namespace {

std::string stage_text(int k) { return "stage " + std::to_string(k); }

void check_trace(const Trace& t, const char* which) {
  if (t.mechanism != MechanismKind::round_robin) {
    throw TraceMismatch(std::string(which) + " trace does not come from Round-Robin");
  }
  if (t.snapshots.size() != t.stages.size()) {
    throw TraceMismatch(std::string(which) + " trace has " + std::to_string(t.stages.size()) + " stages but " +
                        std::to_string(t.snapshots.size()) + " snapshots");
  }
}

void check_properties(const StageMapping& mk, const std::vector<Value>& single) {
  std::map<int, int> preimages;
  for (const auto& [g, h] : mk.image) {
    if (!mk.target.contains(h)) {
      throw InvalidMapping(stage_text(mk.stage) + ": g" + std::to_string(g) + " maps outside B");
    }
    if (single[static_cast<std::size_t>(g - 1)] > single[static_cast<std::size_t>(h - 1)]) {
      throw InvalidMapping(stage_text(mk.stage) + ": g" + std::to_string(g) + " is worth more than its image g" +
                           std::to_string(h));
    }
    if (++preimages[h] > 2) {
      throw InvalidMapping(stage_text(mk.stage) + ": g" + std::to_string(h) + " has three preimages");
    }
  }
}

}  // namespace

bool dominance_check(const Valuation& v, const std::vector<int>& x, const std::vector<int>& y) {
  if (x.size() != y.size()) throw PreconditionViolation("sequences differ in length");
  const int m = v.goods();
  for (const auto* seq : {&x, &y}) {
    std::set<int> seen(seq->begin(), seq->end());
    if (seen.size() != seq->size()) throw PreconditionViolation("a sequence repeats a good");
  }
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (v.singleton(x[j]) < v.singleton(y[j])) {
      throw PreconditionViolation("v(g" + std::to_string(x[j]) + ") < v(g" + std::to_string(y[j]) +
                                  ") at position " + std::to_string(j + 1));
    }
  }
  return v.value(Bundle(m, x)) >= v.value(Bundle(m, y));
}

std::vector<StageMapping> build_stage_mappings(const Valuation& v, const Trace& truthful, const Trace& manipulated) {
  check_trace(truthful, "truthful");
  check_trace(manipulated, "manipulated");
  const int m = v.goods();
  if (truthful.stages.size() != manipulated.stages.size() || static_cast<int>(truthful.stages.size()) != m) {
    throw TraceMismatch("traces must both have one stage per good (" + std::to_string(m) + ")");
  }
  std::vector<Value> single;
  for (int g = 1; g <= m; ++g) single.push_back(v.singleton(g));

  std::vector<StageMapping> out;
  out.push_back(StageMapping{0, Bundle(m), Bundle(m), {}});
  for (int k = 1; k <= m; ++k) {
    const Stage& s = truthful.stages[static_cast<std::size_t>(k - 1)];
    const Stage& sp = manipulated.stages[static_cast<std::size_t>(k - 1)];
    if (s.agent != sp.agent || s.index != k || sp.index != k) {
      throw TraceMismatch(stage_text(k) + ": traces disagree on the acting agent");
    }
    const int gk = s.good;
    const int gpk = sp.good;
    const Bundle g_prev = s.remaining_before;
    const Bundle gp_prev = sp.remaining_before;
    const Bundle g_now = g_prev.without(gk);
    const Bundle gp_now = gp_prev.without(gpk);
    const Bundle& b_now = truthful.snapshots[static_cast<std::size_t>(k - 1)].at(0);
    const Bundle& bp_now = manipulated.snapshots[static_cast<std::size_t>(k - 1)].at(0);

    const StageMapping& prev = out.back();
    StageMapping cur{k, bp_now | (gp_now - g_now), b_now, {}};
    const Bundle fresh = cur.domain - prev.domain;
    cur.domain.for_each([&](int g) {
      if (!fresh.contains(g)) cur.image[g] = prev.image.at(g);
    });

    if (s.agent == 0) {
      fresh.for_each([&](int g) {
        if (g != gk && g != gpk) {
          throw TraceMismatch(stage_text(k) + ": unexpected new good g" + std::to_string(g));
        }
        cur.image[g] = gk;
      });
    } else {
      if (g_prev == gp_prev && gk != gpk) {
        throw TraceMismatch(stage_text(k) + ": agent " + std::to_string(s.agent + 1) +
                            " picked differently from identical remaining goods");
      }
      if (!fresh.empty()) {
        const bool expected = fresh.size() == 1 && fresh.contains(gk) && prev.domain.contains(gpk) &&
                              !cur.domain.contains(gpk);
        if (!expected) throw TraceMismatch(stage_text(k) + ": new goods " + fresh.to_string() + " cannot be mapped");
        cur.image[gk] = prev.image.at(gpk);
      }
    }
    check_properties(cur, single);
    out.push_back(std::move(cur));
  }
  return out;
}

FactorTwoResult verify_factor_two_bound(const Valuation& v, const std::vector<StageMapping>& mappings,
                                        const Trace& truthful, const Trace& manipulated) {
  const int m = v.goods();
  if (mappings.empty() || mappings.back().stage != m) throw InvalidMapping("mapping list does not reach the last stage");
  const StageMapping& last = mappings.back();
  const Bundle b = m == 0 ? Bundle(0) : truthful.snapshots.back().at(0);
  const Bundle bp = m == 0 ? Bundle(0) : manipulated.snapshots.back().at(0);
  if (last.domain != bp) throw InvalidMapping("final domain differs from the manipulated bundle");
  if (last.target != b) throw InvalidMapping("final targets differ from the truthful bundle");

  FactorTwoResult r{Bundle(m), Bundle(m), v.value(b), v.value(bp), {}, {}, false, false, false, false};
  std::map<int, int> used;
  for (const auto& [g, h] : last.image) {
    const int seen = used[h]++;
    if (seen == 0) {
      r.r1.insert(g);
    } else if (seen == 1) {
      r.r2.insert(g);
    } else {
      throw InvalidMapping("g" + std::to_string(h) + " has three preimages");
    }
  }
  if ((r.r1 | r.r2) != last.domain) throw InvalidMapping("mapping does not cover its domain");
  r.r1_value = v.value(r.r1);
  r.r2_value = v.value(r.r2);
  r.r1_dominated = r.r1_value <= r.truthful_utility;
  r.r2_dominated = r.r2_value <= r.truthful_utility;
  r.split_bounds = r.manipulated_utility <= r.r1_value + r.r2_value;
  r.bound_holds = r.manipulated_utility <= Value(2) * r.truthful_utility;
  return r;
}

}  // namespace fairdiv
