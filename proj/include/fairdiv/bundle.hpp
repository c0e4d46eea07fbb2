#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace fairdiv {

/// A subset of the goods {g_1, ..., g_m}. Goods are 1-indexed throughout.
class Bundle {
 public:
  Bundle() = default;
  explicit Bundle(int universe);
  Bundle(int universe, std::initializer_list<int> goods);
  Bundle(int universe, std::span<const int> goods);

  static Bundle full(int universe);
  /// Bit k of `mask` stands for good k + 1. Requires universe <= 64.
  static Bundle from_mask(int universe, std::uint64_t mask);

  int universe() const noexcept { return static_cast<int>(bits_.size()); }
  bool contains(int good) const;
  int size() const noexcept { return static_cast<int>(bits_.count()); }
  bool empty() const noexcept { return bits_.none(); }

  void insert(int good);
  void erase(int good);
  Bundle with(int good) const;
  Bundle without(int good) const;

  /// Members in increasing index order.
  std::vector<int> goods() const;
  std::uint64_t mask() const;

  /// Smallest member, or 0 if empty; next() returns the next larger member or 0.
  int first() const;
  int next(int good) const;

  template <typename F>
  void for_each(F&& f) const {
    for (auto i = bits_.find_first(); i != Bits::npos; i = bits_.find_next(i)) {
      f(static_cast<int>(i) + 1);
    }
  }

  bool is_subset_of(const Bundle& other) const;
  bool intersects(const Bundle& other) const;

  Bundle& operator|=(const Bundle& rhs);
  Bundle& operator&=(const Bundle& rhs);
  Bundle& operator-=(const Bundle& rhs);
  friend Bundle operator|(Bundle a, const Bundle& b) { return a |= b; }
  friend Bundle operator&(Bundle a, const Bundle& b) { return a &= b; }
  friend Bundle operator-(Bundle a, const Bundle& b) { return a -= b; }
  friend bool operator==(const Bundle& a, const Bundle& b) = default;

  /// "{g1,g3}" style rendering for diagnostics.
  std::string to_string() const;

 private:
  using Bits = boost::dynamic_bitset<std::uint64_t>;
  void check(int good) const;
  Bits bits_;
};

/// A partition of the goods into one bundle per agent. Only make_allocation
/// constructs one, so every instance satisfies the partition invariant.
class Allocation {
 public:
  int agents() const noexcept { return static_cast<int>(bundles_.size()); }
  int goods() const noexcept { return goods_; }
  const Bundle& bundle(int agent) const { return bundles_.at(static_cast<std::size_t>(agent)); }
  const std::vector<Bundle>& bundles() const noexcept { return bundles_; }

  friend bool operator==(const Allocation&, const Allocation&) = default;

 private:
  friend Allocation make_allocation(int agents, int goods, std::vector<Bundle> bundles);
  int goods_ = 0;
  std::vector<Bundle> bundles_;
};

/// Validates that `bundles` partitions {1..goods}. Throws OverlapError when a
/// good appears twice, CoverageError when a good is missing, and
/// InvalidArgument on a size or universe mismatch.
Allocation make_allocation(int agents, int goods, std::vector<Bundle> bundles);

}  // namespace fairdiv
