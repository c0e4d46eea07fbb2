#pragma once

#include "fairdiv/bundle.hpp"
#include "fairdiv/valuation.hpp"

#include <vector>

namespace fairdiv {

/// n valuations over a shared universe of m goods. Agents are 0-based here;
/// files and the command line number them from 1.
class Profile {
 public:
  /// Throws InvalidArgument when a valuation's universe differs from m or the
  /// profile is empty.
  Profile(int goods, std::vector<Valuation> valuations);

  int agents() const noexcept { return static_cast<int>(valuations_.size()); }
  int goods() const noexcept { return goods_; }
  const Valuation& valuation(int agent) const { return valuations_.at(static_cast<std::size_t>(agent)); }
  const std::vector<Valuation>& valuations() const noexcept { return valuations_; }

  /// Copy with one agent's valuation replaced.
  Profile with_valuation(int agent, Valuation v) const;
  bool all_exact() const noexcept;

  friend bool operator==(const Profile&, const Profile&) = default;

 private:
  int goods_ = 0;
  std::vector<Valuation> valuations_;
};

Value utility(const Profile& profile, const Allocation& allocation, int agent);

}  // namespace fairdiv
