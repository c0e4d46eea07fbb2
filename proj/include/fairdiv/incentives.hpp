#pragma once

#include "fairdiv/class_check.hpp"
#include "fairdiv/mechanisms.hpp"
#include "fairdiv/profile.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fairdiv {

/// Non-negative ratio that may be infinite. x/0 is infinite for x > 0 and 0/0 is 1.
class ExtendedRatio {
 public:
  ExtendedRatio() : value_(1) {}
  explicit ExtendedRatio(Value v) : value_(std::move(v)) {}
  static ExtendedRatio infinity();
  static ExtendedRatio of(const Value& numerator, const Value& denominator);

  bool is_infinite() const noexcept { return infinite_; }
  /// Throws InvalidArgument when infinite.
  const Value& value() const;
  double to_double() const;
  /// "p/q", a 12-digit real, or "inf".
  std::string to_string() const;

  friend std::weak_ordering operator<=>(const ExtendedRatio& a, const ExtendedRatio& b);
  friend bool operator==(const ExtendedRatio& a, const ExtendedRatio& b) {
    return (a <=> b) == std::weak_ordering::equivalent;
  }

 private:
  bool infinite_ = false;
  Value value_;
};

struct Misreport {
  Valuation valuation;
  /// Set for all-orders members: goods from most to least preferred.
  std::vector<int> order;
  std::uint64_t index = 0;
};

enum class FamilyKind { all_orders, explicit_list, grid };

/// Finite, indexable set of candidate reports for one agent.
class MisreportFamily {
 public:
  /// Every strict order on the goods, in lexicographic order, each reported as
  /// additive values m, m-1, ..., 1. Limited to m <= kMaxOrderGoods.
  static MisreportFamily all_orders(int goods);
  static MisreportFamily explicit_list(std::vector<Valuation> members);
  /// Additive reports with every per-good value in {0, step, 2 step, ..., 1}.
  /// Limited to kMaxGridMembers members.
  static MisreportFamily grid(int goods, const Rational& step);

  static constexpr int kMaxOrderGoods = 10;
  static constexpr std::uint64_t kMaxGridMembers = 5'000'000;

  FamilyKind kind() const noexcept { return kind_; }
  int goods() const noexcept { return goods_; }
  std::uint64_t size() const noexcept { return size_; }
  Misreport member(std::uint64_t k) const;

 private:
  FamilyKind kind_ = FamilyKind::explicit_list;
  int goods_ = 0;
  std::uint64_t size_ = 0;
  std::vector<Valuation> members_;
  Rational step_;
};

/// k-th permutation of 1..m in lexicographic order (k < m!).
std::vector<int> nth_order(int goods, std::uint64_t k);
/// Additive report giving value m to order[0], m-1 to order[1], and so on.
Valuation order_report(const std::vector<int>& order);

struct Witness {
  int agent = 0;
  Valuation true_valuation;
  Misreport misreport;
  Value truthful_utility;
  Value manipulated_utility;
  ExtendedRatio ratio;
  Allocation truthful_allocation;
  Allocation manipulated_allocation;
};

/// Family member maximizing the agent's true utility; the earliest member on
/// ties. Throws EmptyFamily.
Witness best_manipulation(const Mechanism& mechanism, const Profile& profile, int agent,
                          const MisreportFamily& family, Exec exec = Exec::parallel);

/// best_manipulation over every agent; the largest ratio, earliest agent on ties.
Witness instance_incentive_ratio(const Mechanism& mechanism, const Profile& profile,
                                 const MisreportFamily& family, Exec exec = Exec::parallel);

/// v({g}) > alpha * v(G - g). Requires alpha >= 1.
bool strongly_desires(const Valuation& v, int good, const Rational& alpha);

struct ControlProbe {
  /// The unique agent that received the good in every tested profile where it
  /// strongly desired it, with at least one such profile; empty if inconclusive.
  std::optional<int> agent;
  std::vector<int> evidence;  // per agent: profiles where it strongly desired the good
  std::vector<bool> consistent;
};

ControlProbe probe_control(const Mechanism& mechanism, int good, const Rational& alpha,
                           const std::vector<Profile>& profiles);

/// 10 * max{ln(1/eps), ln alpha} / (smallest positive per-good value); 1 when
/// the numerator is 0; empty when every value is 0. Requires an additive
/// profile, 0 < eps <= 1 and alpha >= 1.
std::optional<double> lift_delta(const Profile& additive, const Rational& epsilon, const Rational& alpha_bound);

/// Replaces every valuation by its exponential lift with lift_delta before
/// running `inner`; an all-zero profile is passed through unchanged.
Mechanism lift_mechanism(Mechanism inner, Rational epsilon, Rational alpha_bound);

}  // namespace fairdiv
