#pragma once

#include "fairdiv/mechanisms.hpp"
#include "fairdiv/valuation.hpp"

#include <map>
#include <vector>

namespace fairdiv {

/// Checks v(X) >= v(Y) for equal-length good sequences with v(x_j) >= v(y_j)
/// pointwise. Throws PreconditionViolation when the lengths differ, a sequence
/// repeats a good, or pointwise dominance fails. A false result means v is not
/// cancelable.
bool dominance_check(const Valuation& v, const std::vector<int>& x, const std::vector<int>& y);

/// Mapping from X_k = B'_k ∪ (G'_k \ G_k) into B_k after stage k, where B and
/// G are agent 1's bundle and the remaining goods in the truthful run, and the
/// primed sets come from the manipulated run.
struct StageMapping {
  int stage = 0;
  Bundle domain;
  Bundle target;
  std::map<int, int> image;
};

/// Builds M_0..M_m stage by stage from two Round-Robin traces on profiles
/// that differ only in agent 1's (index 0) report. Checks both mapping
/// properties at every stage: v(g) <= v(M(g)) and at most two preimages per
/// target. Throws TraceMismatch when the traces cannot come from such a pair
/// of runs and InvalidMapping when a property fails.
std::vector<StageMapping> build_stage_mappings(const Valuation& true_valuation, const Trace& truthful,
                                               const Trace& manipulated);

struct FactorTwoResult {
  Bundle r1;
  Bundle r2;
  Value truthful_utility;     // v(B_m)
  Value manipulated_utility;  // v(B'_m)
  Value r1_value;
  Value r2_value;
  bool r1_dominated = false;   // v(R1) <= v(B_m)
  bool r2_dominated = false;   // v(R2) <= v(B_m)
  bool split_bounds = false;   // v(B'_m) <= v(R1) + v(R2)
  bool bound_holds = false;    // v(B'_m) <= 2 v(B_m)
};

/// Splits the final domain into R1 (first preimage of each target, by good
/// index) and R2 (the second), then evaluates the chain of inequalities.
/// Throws InvalidMapping on a malformed mapping list.
FactorTwoResult verify_factor_two_bound(const Valuation& true_valuation, const std::vector<StageMapping>& mappings,
                                        const Trace& truthful, const Trace& manipulated);

}  // namespace fairdiv
