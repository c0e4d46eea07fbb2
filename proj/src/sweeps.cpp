#include "fairdiv/sweeps.hpp"

#include "fairdiv/analysis.hpp"
#include "fairdiv/errors.hpp"
#include "fairdiv/fairness.hpp"

#include <cmath>
#include <cstddef>

namespace fairdiv {

namespace {

constexpr std::size_t kMaxNotes = 5;

void note(std::vector<std::string>& notes, std::string text) {
  if (notes.size() < kMaxNotes) notes.push_back(std::move(text));
}

struct ProfileOutcome {
  std::uint64_t runs = 0;
  ExtendedRatio max_ratio;
  int ratio_violations = 0;
  int mapping_failures = 0;
  int bound_failures = 0;
  std::string first;
};

ProfileOutcome audit_profile(const Profile& p, int index) {
  ProfileOutcome out;
  const Valuation& v = p.valuation(0);
  Trace truthful;
  const Allocation a = round_robin(p, &truthful);
  const Value u = v.value(a.bundle(0));
  const MisreportFamily family = MisreportFamily::all_orders(p.goods());
  const std::string where = "profile " + std::to_string(index);
  for (std::uint64_t k = 0; k < family.size(); ++k) {
    const Misreport r = family.member(k);
    Trace manipulated;
    const Allocation b = round_robin(p.with_valuation(0, r.valuation), &manipulated);
    ++out.runs;
    const ExtendedRatio ratio = ExtendedRatio::of(v.value(b.bundle(0)), u);
    if (ratio > out.max_ratio) out.max_ratio = ratio;
    if (ratio > ExtendedRatio(Value(2))) {
      ++out.ratio_violations;
      if (out.first.empty()) out.first = where + ", report " + std::to_string(k) + ": ratio " + ratio.to_string();
    }
    try {
      const auto maps = build_stage_mappings(v, truthful, manipulated);
      const FactorTwoResult f = verify_factor_two_bound(v, maps, truthful, manipulated);
      if (!(f.r1_dominated && f.r2_dominated && f.split_bounds && f.bound_holds)) {
        ++out.bound_failures;
        if (out.first.empty()) out.first = where + ", report " + std::to_string(k) + ": split bound fails";
      }
    } catch (const Error& e) {
      ++out.mapping_failures;
      if (out.first.empty()) out.first = where + ", report " + std::to_string(k) + ": " + e.what();
    }
  }
  return out;
}

}  // namespace

UpperBoundSweep upper_bound_sweep(std::uint64_t seed, int additive, int multiplicative, const SampleShape& shape,
                                  Exec exec) {
  ProfileSampler sampler(seed);
  std::vector<Profile> profiles;
  for (int i = 0; i < additive; ++i) profiles.push_back(sampler.additive_profile(shape));
  for (int i = 0; i < multiplicative; ++i) profiles.push_back(sampler.multiplicative_profile(shape));

  const auto count = static_cast<long>(profiles.size());
  std::vector<ProfileOutcome> outcomes(profiles.size());
  if (exec == Exec::serial) {
    for (long i = 0; i < count; ++i) outcomes[i] = audit_profile(profiles[i], static_cast<int>(i));
  } else {
#pragma omp parallel for schedule(dynamic, 4)
    for (long i = 0; i < count; ++i) outcomes[i] = audit_profile(profiles[i], static_cast<int>(i));
  }

  UpperBoundSweep s;
  for (long i = 0; i < count; ++i) {
    const ProfileOutcome& o = outcomes[static_cast<std::size_t>(i)];
    SweepTally& t = i < additive ? s.additive : s.multiplicative;
    ++t.profiles;
    t.runs += o.runs;
    if (o.max_ratio > t.max_ratio) t.max_ratio = o.max_ratio;
    t.ratio_violations += o.ratio_violations;
    t.mapping_failures += o.mapping_failures;
    t.bound_failures += o.bound_failures;
    if (!o.first.empty()) note(s.notes, o.first);
  }
  return s;
}

FairnessSweep round_robin_fairness_sweep(std::uint64_t seed, int additive, int multiplicative,
                                         const SampleShape& shape) {
  ProfileSampler sampler(seed);
  FairnessSweep s;
  for (int i = 0; i < additive + multiplicative; ++i) {
    const Profile p = i < additive ? sampler.additive_profile(shape) : sampler.multiplicative_profile(shape);
    ++s.profiles;
    const FairnessReport r = is_alpha_ef1(p, round_robin(p), Rational(1));
    if (!r.satisfied) {
      ++s.ef1_failures;
      note(s.notes, "profile " + std::to_string(i) + " is not EF1");
    }
  }
  return s;
}

FairnessSweep marginal_fairness_sweep(std::uint64_t seed, int coverage, const SampleShape& shape) {
  ProfileSampler sampler(seed);
  FairnessSweep s;
  for (int i = 0; i < coverage; ++i) {
    const Profile p = sampler.coverage_profile(shape);
    ++s.profiles;
    const Allocation a = round_robin_marginal(p);
    if (!is_alpha_ef1(p, a, ratio(1, 2)).satisfied) {
      ++s.ef1_failures;
      note(s.notes, "profile " + std::to_string(i) + " is not 1/2-EF1");
    }
    const Valuation& v = p.valuation(0);
    const Value share = v.value(Bundle::full(p.goods())) / Value(p.agents());
    if (v.value(a.bundle(0)) < share) {
      ++s.share_failures;
      note(s.notes, "profile " + std::to_string(i) + ": agent 1 below v(G)/n");
    }
  }
  return s;
}

LiftSweep lift_sweep(std::uint64_t seed, int count, const Rational& epsilon, const Rational& alpha_bound,
                     const Rational& ef1_alpha, double ratio_limit, const SampleShape& shape, Exec exec) {
  ProfileSampler sampler(seed);
  const Mechanism lifted = lift_mechanism(make_mechanism(MechanismKind::round_robin), epsilon, alpha_bound);
  LiftSweep s;
  for (int i = 0; i < count; ++i) {
    const Profile p = sampler.additive_profile(shape);
    ++s.profiles;
    if (!is_alpha_ef1(p, lifted(p), ef1_alpha).satisfied) {
      ++s.ef1_failures;
      note(s.notes, "profile " + std::to_string(i) + " is not " + format_rational(ef1_alpha) + "-EF1");
    }
    const Witness w = best_manipulation(lifted, p, 0, MisreportFamily::all_orders(p.goods()), exec);
    const double r = w.ratio.is_infinite() ? HUGE_VAL : w.ratio.to_double();
    if (r > s.max_ratio) s.max_ratio = r;
    if (r > ratio_limit + kRealTolerance) {
      ++s.ratio_violations;
      note(s.notes, "profile " + std::to_string(i) + ": ratio " + w.ratio.to_string());
    }
  }
  return s;
}

}  // namespace fairdiv
