#include "fairdiv/profile.hpp"

#include "fairdiv/errors.hpp"

#include <algorithm>

namespace fairdiv {

Profile::Profile(int goods, std::vector<Valuation> valuations)
    : goods_(goods), valuations_(std::move(valuations)) {
  if (goods < 0) throw InvalidArgument("negative good count");
  if (valuations_.empty()) throw InvalidArgument("a profile needs at least one agent");
  for (std::size_t i = 0; i < valuations_.size(); ++i) {
    if (valuations_[i].goods() != goods) {
      throw InvalidArgument("valuation of agent " + std::to_string(i + 1) + " covers " +
                            std::to_string(valuations_[i].goods()) + " goods, expected " +
                            std::to_string(goods));
    }
  }
}

Profile Profile::with_valuation(int agent, Valuation v) const {
  if (agent < 0 || agent >= agents()) throw InvalidArgument("agent index out of range");
  std::vector<Valuation> vs = valuations_;
  vs[static_cast<std::size_t>(agent)] = std::move(v);
  return Profile(goods_, std::move(vs));
}

bool Profile::all_exact() const noexcept {
  return std::all_of(valuations_.begin(), valuations_.end(),
                     [](const Valuation& v) { return v.is_exact(); });
}

Value utility(const Profile& profile, const Allocation& allocation, int agent) {
  if (allocation.agents() != profile.agents() || allocation.goods() != profile.goods()) {
    throw InvalidArgument("allocation does not match the profile's shape");
  }
  return profile.valuation(agent).value(allocation.bundle(agent));
}

}  // namespace fairdiv
