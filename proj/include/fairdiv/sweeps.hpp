#pragma once

#include "fairdiv/class_check.hpp"
#include "fairdiv/incentives.hpp"
#include "fairdiv/random_profiles.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace fairdiv {

/// Exhaustive all-orders manipulation of Round-Robin by agent 1 on seeded
/// random additive and multiplicative profiles, with the stage mapping and
/// factor-two check on every misreport.
struct SweepTally {
  int profiles = 0;
  std::uint64_t runs = 0;
  ExtendedRatio max_ratio;
  int ratio_violations = 0;  // ratio > 2
  int mapping_failures = 0;  // TraceMismatch / InvalidMapping
  int bound_failures = 0;    // some inequality of the split failed
  bool passed() const { return ratio_violations == 0 && mapping_failures == 0 && bound_failures == 0; }
};

struct UpperBoundSweep {
  SweepTally additive;
  SweepTally multiplicative;
  std::vector<std::string> notes;  // first few failures
  bool passed() const { return additive.passed() && multiplicative.passed(); }
};

UpperBoundSweep upper_bound_sweep(std::uint64_t seed, int additive, int multiplicative,
                                  const SampleShape& shape = {}, Exec exec = Exec::parallel);

/// Round-Robin EF1 on additive and multiplicative samples; marginal
/// Round-Robin 1/2-EF1 and v_1(B_1) >= v_1(G)/n on coverage samples.
struct FairnessSweep {
  int profiles = 0;
  int ef1_failures = 0;
  int share_failures = 0;
  std::vector<std::string> notes;
  bool passed() const { return ef1_failures == 0 && share_failures == 0; }
};

FairnessSweep round_robin_fairness_sweep(std::uint64_t seed, int additive, int multiplicative,
                                         const SampleShape& shape = {});
FairnessSweep marginal_fairness_sweep(std::uint64_t seed, int coverage, const SampleShape& shape);

/// Lifted Round-Robin on random additive profiles: 9/10-EF1 against the
/// original valuations and all-orders manipulation by agent 1.
struct LiftSweep {
  int profiles = 0;
  int ef1_failures = 0;
  int ratio_violations = 0;  // ratio > limit + 1e-9
  double max_ratio = 1.0;
  std::vector<std::string> notes;
  bool passed() const { return ef1_failures == 0 && ratio_violations == 0; }
};

LiftSweep lift_sweep(std::uint64_t seed, int count, const Rational& epsilon, const Rational& alpha_bound,
                     const Rational& ef1_alpha, double ratio_limit, const SampleShape& shape = {},
                     Exec exec = Exec::parallel);

}  // namespace fairdiv
