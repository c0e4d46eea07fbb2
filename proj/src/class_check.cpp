#include "fairdiv/class_check.hpp"

#include "fairdiv/errors.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <string>

namespace fairdiv {

namespace {

constexpr int kDefaultPairLimit = 16;
constexpr int kDefaultTripleLimit = 12;

std::optional<int> env_limit() {
  const char* raw = std::getenv("FAIRDIV_MAX_UNIVERSE");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  char* end = nullptr;
  const long v = std::strtol(raw, &end, 10);
  if (*end != '\0' || v < 0) throw InvalidArgument("FAIRDIV_MAX_UNIVERSE must be a non-negative integer");
  return static_cast<int>(std::min<long>(v, 30));
}

struct Violation {
  std::uint64_t s = 0;
  std::uint64_t t = 0;
  int good = 0;
};

// Evaluates probe(i) for i in [0, count) and returns the violation with the
// smallest i. The parallel path keeps the serial tie-break: a thread skips
// any index above the best one found so far.
template <typename Probe>
std::optional<Violation> first_violation(std::int64_t count, Exec exec, Probe probe) {
  if (exec == Exec::serial) {
    for (std::int64_t i = 0; i < count; ++i) {
      if (auto v = probe(i)) return v;
    }
    return std::nullopt;
  }
  std::atomic<std::int64_t> best{count};
  std::vector<std::optional<Violation>> found(static_cast<std::size_t>(count));
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t i = 0; i < count; ++i) {
    if (i > best.load(std::memory_order_relaxed)) continue;
    if (auto v = probe(i)) {
      found[static_cast<std::size_t>(i)] = v;
      std::int64_t cur = best.load();
      while (i < cur && !best.compare_exchange_weak(cur, i)) {
      }
    }
  }
  const std::int64_t b = best.load();
  if (b == count) return std::nullopt;
  return found[static_cast<std::size_t>(b)];
}

void gate(int m, int limit, ValuationClass cls) {
  if (m > limit) {
    throw UniverseTooLarge("checking " + std::string(class_name(cls)) + " over " + std::to_string(m) +
                           " goods exceeds the limit of " + std::to_string(limit) +
                           " (set FAIRDIV_MAX_UNIVERSE to raise it)");
  }
}

std::optional<Violation> scan_monotone(const std::vector<Value>& tab, int m, Exec exec) {
  return first_violation(static_cast<std::int64_t>(tab.size()), exec, [&](std::int64_t si) -> std::optional<Violation> {
    const auto s = static_cast<std::uint64_t>(si);
    for (int g = 0; g < m; ++g) {
      const std::uint64_t bit = std::uint64_t{1} << g;
      if ((s & bit) == 0 && tab[s | bit] < tab[s]) return Violation{s, s | bit, g + 1};
    }
    return std::nullopt;
  });
}

// Cancelable scan in (g, S, T) lexicographic order over a strict-weak order
// on subset indices.
template <typename Greater>
std::optional<Violation> scan_cancelable(int m, Exec exec, Greater greater) {
  const std::uint64_t subsets = std::uint64_t{1} << m;
  const auto outer = static_cast<std::int64_t>(subsets) * m;
  return first_violation(outer, exec, [&](std::int64_t idx) -> std::optional<Violation> {
    const int g = static_cast<int>(idx / static_cast<std::int64_t>(subsets));
    const auto s = static_cast<std::uint64_t>(idx % static_cast<std::int64_t>(subsets));
    const std::uint64_t bit = std::uint64_t{1} << g;
    if (s & bit) return std::nullopt;
    for (std::uint64_t t = 0; t < subsets; ++t) {
      if (t & bit) continue;
      if (greater(s | bit, t | bit) && !greater(s, t)) return Violation{s, t, g + 1};
    }
    return std::nullopt;
  });
}

}  // namespace

std::string_view class_name(ValuationClass c) {
  switch (c) {
    case ValuationClass::normalized: return "normalized";
    case ValuationClass::monotone: return "monotone";
    case ValuationClass::additive: return "additive";
    case ValuationClass::subadditive: return "subadditive";
    case ValuationClass::submodular: return "submodular";
    case ValuationClass::cancelable: return "cancelable";
  }
  return "unknown";
}

ValuationClass parse_class(std::string_view name) {
  for (auto c : {ValuationClass::normalized, ValuationClass::monotone, ValuationClass::additive,
                 ValuationClass::subadditive, ValuationClass::submodular, ValuationClass::cancelable}) {
    if (class_name(c) == name) return c;
  }
  throw InvalidArgument("unknown valuation class '" + std::string(name) + "'");
}

int pair_check_limit() { return env_limit().value_or(kDefaultPairLimit); }
int triple_check_limit() { return env_limit().value_or(kDefaultTripleLimit); }

ClassCheckResult check_class(const Valuation& v, ValuationClass cls, Exec exec) {
  const int m = v.goods();
  ClassCheckResult result;
  result.cls = cls;
  auto fail = [&](const Violation& x, bool with_t, bool with_good) {
    result.holds = false;
    result.s = Bundle::from_mask(m, x.s);
    if (with_t) result.t = Bundle::from_mask(m, x.t);
    if (with_good) result.good = x.good;
    return result;
  };

  if (cls == ValuationClass::normalized) {
    if (!v.value(Bundle(m)).is_zero()) return fail(Violation{}, false, false);
    return result;
  }

  const int limit = cls == ValuationClass::cancelable ? triple_check_limit() : pair_check_limit();
  gate(m, limit, cls);
  const std::vector<Value> tab = value_table(v, limit);
  const std::uint64_t subsets = tab.size();

  switch (cls) {
    case ValuationClass::normalized:
      break;
    case ValuationClass::monotone:
      if (auto x = scan_monotone(tab, m, exec)) return fail(*x, true, true);
      break;
    case ValuationClass::additive: {
      auto x = first_violation(static_cast<std::int64_t>(subsets), exec, [&](std::int64_t si) -> std::optional<Violation> {
        const auto s = static_cast<std::uint64_t>(si);
        Value sum;
        for (int g = 0; g < m; ++g) {
          if (s & (std::uint64_t{1} << g)) sum += tab[std::uint64_t{1} << g];
        }
        if (tab[s] != sum) return Violation{s, 0, 0};
        return std::nullopt;
      });
      if (x) return fail(*x, false, false);
      break;
    }
    case ValuationClass::subadditive: {
      // Disjoint pairs suffice for monotone valuations; otherwise every pair.
      const bool monotone = !scan_monotone(tab, m, Exec::serial);
      const std::uint64_t full = subsets - 1;
      auto x = first_violation(static_cast<std::int64_t>(subsets), exec, [&](std::int64_t si) -> std::optional<Violation> {
        const auto s = static_cast<std::uint64_t>(si);
        if (monotone) {
          const std::uint64_t rest = full & ~s;
          for (std::uint64_t t = rest;; t = (t - 1) & rest) {
            const std::uint64_t tt = rest & ~t;  // ascending enumeration of subsets of rest
            if (tab[s | tt] > tab[s] + tab[tt]) return Violation{s, tt, 0};
            if (t == 0) break;
          }
        } else {
          for (std::uint64_t t = 0; t < subsets; ++t) {
            if (tab[s | t] > tab[s] + tab[t]) return Violation{s, t, 0};
          }
        }
        return std::nullopt;
      });
      if (x) return fail(*x, true, false);
      break;
    }
    case ValuationClass::submodular: {
      auto x = first_violation(static_cast<std::int64_t>(subsets), exec, [&](std::int64_t si) -> std::optional<Violation> {
        const auto s = static_cast<std::uint64_t>(si);
        for (int g = 0; g < m; ++g) {
          const std::uint64_t gb = std::uint64_t{1} << g;
          if (s & gb) continue;
          for (int h = 0; h < m; ++h) {
            const std::uint64_t hb = std::uint64_t{1} << h;
            if (h == g || (s & hb)) continue;
            if (tab[s | gb] + tab[s | hb] < tab[s | gb | hb] + tab[s]) return Violation{s, s | hb, g + 1};
          }
        }
        return std::nullopt;
      });
      if (x) return fail(*x, true, true);
      break;
    }
    case ValuationClass::cancelable: {
      std::optional<Violation> x;
      if (v.is_exact()) {
        // Replace values by dense ranks so the triple scan compares integers.
        std::vector<Rational> sorted;
        sorted.reserve(subsets);
        for (const auto& val : tab) sorted.push_back(val.exact());
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        std::vector<int> rank(subsets);
        for (std::uint64_t s = 0; s < subsets; ++s) {
          rank[s] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), tab[s].exact()) -
                                     sorted.begin());
        }
        x = scan_cancelable(m, exec, [&](std::uint64_t a, std::uint64_t b) { return rank[a] > rank[b]; });
      } else {
        x = scan_cancelable(m, exec, [&](std::uint64_t a, std::uint64_t b) { return tab[a] > tab[b]; });
      }
      if (x) return fail(*x, true, true);
      break;
    }
  }
  return result;
}

}  // namespace fairdiv
