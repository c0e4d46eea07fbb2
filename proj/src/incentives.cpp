#include "fairdiv/incentives.hpp"

#include "fairdiv/errors.hpp"

#include <cmath>
#include <limits>
#include <numeric>

namespace fairdiv {

ExtendedRatio ExtendedRatio::infinity() {
  ExtendedRatio r;
  r.infinite_ = true;
  return r;
}

ExtendedRatio ExtendedRatio::of(const Value& numerator, const Value& denominator) {
  if (denominator.is_zero()) return numerator.is_zero() ? ExtendedRatio(Value(1)) : infinity();
  return ExtendedRatio(numerator / denominator);
}

const Value& ExtendedRatio::value() const {
  if (infinite_) throw InvalidArgument("ratio is infinite");
  return value_;
}

double ExtendedRatio::to_double() const {
  return infinite_ ? std::numeric_limits<double>::infinity() : value_.to_double();
}

std::string ExtendedRatio::to_string() const { return infinite_ ? "inf" : value_.to_string(); }

std::weak_ordering operator<=>(const ExtendedRatio& a, const ExtendedRatio& b) {
  if (a.infinite_ || b.infinite_) {
    if (a.infinite_ && b.infinite_) return std::weak_ordering::equivalent;
    return a.infinite_ ? std::weak_ordering::greater : std::weak_ordering::less;
  }
  return a.value_ <=> b.value_;
}

std::vector<int> nth_order(int goods, std::uint64_t k) {
  std::vector<int> pool(static_cast<std::size_t>(goods));
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<std::uint64_t> fact(static_cast<std::size_t>(goods) + 1, 1);
  for (int i = 1; i <= goods; ++i) fact[static_cast<std::size_t>(i)] = fact[static_cast<std::size_t>(i - 1)] * static_cast<std::uint64_t>(i);
  if (k >= fact[static_cast<std::size_t>(goods)]) throw InvalidArgument("order index out of range");
  std::vector<int> out;
  out.reserve(pool.size());
  for (int left = goods; left > 0; --left) {
    const std::uint64_t f = fact[static_cast<std::size_t>(left - 1)];
    const auto pick = static_cast<std::size_t>(k / f);
    k %= f;
    out.push_back(pool[pick]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  return out;
}

Valuation order_report(const std::vector<int>& order) {
  const auto m = static_cast<long>(order.size());
  std::vector<Rational> values(order.size());
  for (std::size_t r = 0; r < order.size(); ++r) {
    values[static_cast<std::size_t>(order[r] - 1)] = Rational(m - static_cast<long>(r));
  }
  return Valuation::additive(std::move(values));
}

MisreportFamily MisreportFamily::all_orders(int goods) {
  if (goods < 0 || goods > kMaxOrderGoods) {
    throw InvalidArgument("all-orders family supports at most " + std::to_string(kMaxOrderGoods) + " goods");
  }
  MisreportFamily f;
  f.kind_ = FamilyKind::all_orders;
  f.goods_ = goods;
  f.size_ = 1;
  for (int i = 2; i <= goods; ++i) f.size_ *= static_cast<std::uint64_t>(i);
  return f;
}

MisreportFamily MisreportFamily::explicit_list(std::vector<Valuation> members) {
  MisreportFamily f;
  f.kind_ = FamilyKind::explicit_list;
  f.goods_ = members.empty() ? 0 : members.front().goods();
  for (const auto& v : members) {
    if (v.goods() != f.goods_) throw InvalidArgument("family members cover different universes");
  }
  f.size_ = members.size();
  f.members_ = std::move(members);
  return f;
}

MisreportFamily MisreportFamily::grid(int goods, const Rational& step) {
  if (step <= 0 || step > 1) throw InvalidArgument("grid step must lie in (0, 1]");
  const Rational levels_q = 1 / step;
  if (levels_q.get_den() != 1) throw InvalidArgument("grid step must divide 1");
  const std::uint64_t levels = levels_q.get_num().get_ui() + 1;
  std::uint64_t size = 1;
  for (int i = 0; i < goods; ++i) {
    if (size > kMaxGridMembers / levels) {
      throw InvalidArgument("grid family exceeds " + std::to_string(kMaxGridMembers) + " members");
    }
    size *= levels;
  }
  MisreportFamily f;
  f.kind_ = FamilyKind::grid;
  f.goods_ = goods;
  f.size_ = size;
  f.step_ = step;
  return f;
}

Misreport MisreportFamily::member(std::uint64_t k) const {
  if (k >= size_) throw InvalidArgument("family member index out of range");
  switch (kind_) {
    case FamilyKind::all_orders: {
      std::vector<int> order = nth_order(goods_, k);
      Valuation v = order_report(order);
      return Misreport{std::move(v), std::move(order), k};
    }
    case FamilyKind::explicit_list:
      return Misreport{members_[static_cast<std::size_t>(k)], {}, k};
    case FamilyKind::grid: {
      const std::uint64_t levels = Rational(1 / step_).get_num().get_ui() + 1;
      std::vector<Rational> values(static_cast<std::size_t>(goods_));
      std::uint64_t rest = k;
      for (int g = goods_; g >= 1; --g) {
        values[static_cast<std::size_t>(g - 1)] = step_ * static_cast<unsigned long>(rest % levels);
        rest /= levels;
      }
      return Misreport{Valuation::additive(std::move(values)), {}, k};
    }
  }
  throw InvalidArgument("unknown family kind");
}

namespace {

struct Candidate {
  Value utility;
  std::uint64_t index = std::numeric_limits<std::uint64_t>::max();
  bool set = false;

  void offer(Value u, std::uint64_t k) {
    if (!set || u > utility || (u == utility && k < index)) {
      utility = std::move(u);
      index = k;
      set = true;
    }
  }
};

}  // namespace

Witness best_manipulation(const Mechanism& mechanism, const Profile& profile, int agent,
                          const MisreportFamily& family, Exec exec) {
  if (family.size() == 0) throw EmptyFamily("misreport family is empty");
  if (agent < 0 || agent >= profile.agents()) throw InvalidArgument("agent index out of range");
  if (family.goods() != profile.goods()) throw InvalidArgument("family universe differs from the profile");
  const Valuation& truth = profile.valuation(agent);
  const auto size = static_cast<std::int64_t>(family.size());

  auto evaluate = [&](std::uint64_t k) {
    const Misreport r = family.member(k);
    const Allocation a = mechanism(profile.with_valuation(agent, r.valuation));
    return truth.value(a.bundle(agent));
  };

  Candidate best;
  if (exec == Exec::serial) {
    for (std::int64_t k = 0; k < size; ++k) best.offer(evaluate(static_cast<std::uint64_t>(k)), static_cast<std::uint64_t>(k));
  } else {
#pragma omp parallel
    {
      Candidate local;
#pragma omp for schedule(dynamic, 64) nowait
      for (std::int64_t k = 0; k < size; ++k) {
        local.offer(evaluate(static_cast<std::uint64_t>(k)), static_cast<std::uint64_t>(k));
      }
#pragma omp critical(fairdiv_best_manipulation)
      if (local.set) best.offer(local.utility, local.index);
    }
  }

  Allocation truthful = mechanism(profile);
  Value truthful_u = truth.value(truthful.bundle(agent));
  Misreport chosen = family.member(best.index);
  Allocation manipulated = mechanism(profile.with_valuation(agent, chosen.valuation));
  Value manipulated_u = truth.value(manipulated.bundle(agent));
  ExtendedRatio ratio = ExtendedRatio::of(manipulated_u, truthful_u);
  return Witness{agent,          truth,           std::move(chosen),   std::move(truthful_u),
                 std::move(manipulated_u), std::move(ratio), std::move(truthful), std::move(manipulated)};
}

Witness instance_incentive_ratio(const Mechanism& mechanism, const Profile& profile,
                                 const MisreportFamily& family, Exec exec) {
  std::optional<Witness> best;
  for (int i = 0; i < profile.agents(); ++i) {
    Witness w = best_manipulation(mechanism, profile, i, family, exec);
    if (!best || w.ratio > best->ratio) best = std::move(w);
  }
  return std::move(*best);
}

bool strongly_desires(const Valuation& v, int good, const Rational& alpha) {
  if (alpha < 1) throw InvalidArgument("strong desire requires alpha >= 1");
  const Bundle rest = Bundle::full(v.goods()).without(good);
  return v.singleton(good) > Value(alpha) * v.value(rest);
}

ControlProbe probe_control(const Mechanism& mechanism, int good, const Rational& alpha,
                           const std::vector<Profile>& profiles) {
  ControlProbe probe;
  if (profiles.empty()) return probe;
  const int n = profiles.front().agents();
  probe.evidence.assign(static_cast<std::size_t>(n), 0);
  probe.consistent.assign(static_cast<std::size_t>(n), true);
  for (const Profile& p : profiles) {
    if (p.agents() != n) throw InvalidArgument("probe profiles have different agent counts");
    std::optional<Allocation> a;
    for (int i = 0; i < n; ++i) {
      if (!strongly_desires(p.valuation(i), good, alpha)) continue;
      if (!a) a = mechanism(p);
      ++probe.evidence[static_cast<std::size_t>(i)];
      if (!a->bundle(i).contains(good)) probe.consistent[static_cast<std::size_t>(i)] = false;
    }
  }
  std::vector<int> controllers;
  for (int i = 0; i < n; ++i) {
    if (probe.evidence[static_cast<std::size_t>(i)] > 0 && probe.consistent[static_cast<std::size_t>(i)]) {
      controllers.push_back(i);
    }
  }
  if (controllers.size() == 1) probe.agent = controllers.front();
  return probe;
}

std::optional<double> lift_delta(const Profile& profile, const Rational& epsilon, const Rational& alpha_bound) {
  if (epsilon <= 0 || epsilon > 1) throw InvalidArgument("epsilon must lie in (0, 1]");
  if (alpha_bound < 1) throw InvalidArgument("alpha bound must be at least 1");
  std::optional<Rational> smallest;
  for (const Valuation& v : profile.valuations()) {
    const auto* add = std::get_if<AdditiveRep>(&v.representation());
    if (add == nullptr) throw InvalidValuation("the lifted mechanism needs additive valuations");
    for (const Rational& x : add->values) {
      if (x > 0 && (!smallest || x < *smallest)) smallest = x;
    }
  }
  if (!smallest) return std::nullopt;
  const double numerator = std::max(std::log(1.0 / epsilon.get_d()), std::log(alpha_bound.get_d()));
  if (numerator <= 0) return 1.0;
  return 10.0 * numerator / smallest->get_d();
}

Mechanism lift_mechanism(Mechanism inner, Rational epsilon, Rational alpha_bound) {
  return [inner = std::move(inner), epsilon = std::move(epsilon),
          alpha_bound = std::move(alpha_bound)](const Profile& p) {
    const std::optional<double> delta = lift_delta(p, epsilon, alpha_bound);
    if (!delta) return inner(p);
    std::vector<Valuation> lifted;
    lifted.reserve(static_cast<std::size_t>(p.agents()));
    for (const Valuation& v : p.valuations()) lifted.push_back(lift(v, *delta));
    return inner(Profile(p.goods(), std::move(lifted)));
  };
}

}  // namespace fairdiv
