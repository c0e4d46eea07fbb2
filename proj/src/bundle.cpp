#include "fairdiv/bundle.hpp"

#include "fairdiv/errors.hpp"

namespace fairdiv {

Bundle::Bundle(int universe) {
  if (universe < 0) throw InvalidArgument("negative universe size");
  bits_.resize(static_cast<std::size_t>(universe));
}

Bundle::Bundle(int universe, std::initializer_list<int> goods) : Bundle(universe) {
  for (int g : goods) insert(g);
}

Bundle::Bundle(int universe, std::span<const int> goods) : Bundle(universe) {
  for (int g : goods) insert(g);
}

Bundle Bundle::full(int universe) {
  Bundle b(universe);
  b.bits_.set();
  return b;
}

Bundle Bundle::from_mask(int universe, std::uint64_t mask) {
  if (universe > 64) throw InvalidArgument("mask bundles need universe <= 64");
  Bundle b(universe);
  for (int i = 0; i < universe; ++i) {
    if ((mask >> i) & 1U) b.bits_.set(static_cast<std::size_t>(i));
  }
  return b;
}

void Bundle::check(int good) const {
  if (good < 1 || good > universe()) {
    throw InvalidArgument("good g" + std::to_string(good) + " outside universe of size " +
                          std::to_string(universe()));
  }
}

bool Bundle::contains(int good) const {
  check(good);
  return bits_.test(static_cast<std::size_t>(good - 1));
}

void Bundle::insert(int good) {
  check(good);
  bits_.set(static_cast<std::size_t>(good - 1));
}

void Bundle::erase(int good) {
  check(good);
  bits_.reset(static_cast<std::size_t>(good - 1));
}

Bundle Bundle::with(int good) const {
  Bundle b = *this;
  b.insert(good);
  return b;
}

Bundle Bundle::without(int good) const {
  Bundle b = *this;
  b.erase(good);
  return b;
}

std::vector<int> Bundle::goods() const {
  std::vector<int> out;
  out.reserve(bits_.count());
  for_each([&](int g) { out.push_back(g); });
  return out;
}

std::uint64_t Bundle::mask() const {
  if (universe() > 64) throw InvalidArgument("mask needs universe <= 64");
  std::uint64_t m = 0;
  for_each([&](int g) { m |= std::uint64_t{1} << (g - 1); });
  return m;
}

int Bundle::first() const {
  const auto i = bits_.find_first();
  return i == Bits::npos ? 0 : static_cast<int>(i) + 1;
}

int Bundle::next(int good) const {
  const auto i = bits_.find_next(static_cast<std::size_t>(good - 1));
  return i == Bits::npos ? 0 : static_cast<int>(i) + 1;
}

bool Bundle::is_subset_of(const Bundle& other) const {
  if (universe() != other.universe()) throw InvalidArgument("bundle universe mismatch");
  return bits_.is_subset_of(other.bits_);
}

bool Bundle::intersects(const Bundle& other) const {
  if (universe() != other.universe()) throw InvalidArgument("bundle universe mismatch");
  return bits_.intersects(other.bits_);
}

Bundle& Bundle::operator|=(const Bundle& rhs) {
  if (universe() != rhs.universe()) throw InvalidArgument("bundle universe mismatch");
  bits_ |= rhs.bits_;
  return *this;
}

Bundle& Bundle::operator&=(const Bundle& rhs) {
  if (universe() != rhs.universe()) throw InvalidArgument("bundle universe mismatch");
  bits_ &= rhs.bits_;
  return *this;
}

Bundle& Bundle::operator-=(const Bundle& rhs) {
  if (universe() != rhs.universe()) throw InvalidArgument("bundle universe mismatch");
  bits_ -= rhs.bits_;
  return *this;
}

std::string Bundle::to_string() const {
  std::string out = "{";
  bool first_member = true;
  for_each([&](int g) {
    if (!first_member) out += ",";
    out += "g" + std::to_string(g);
    first_member = false;
  });
  return out + "}";
}

Allocation make_allocation(int agents, int goods, std::vector<Bundle> bundles) {
  if (agents < 1) throw InvalidArgument("an allocation needs at least one agent");
  if (goods < 0) throw InvalidArgument("negative good count");
  if (static_cast<int>(bundles.size()) != agents) {
    throw InvalidArgument("expected " + std::to_string(agents) + " bundles, got " +
                          std::to_string(bundles.size()));
  }
  Bundle seen(goods);
  for (std::size_t i = 0; i < bundles.size(); ++i) {
    if (bundles[i].universe() != goods) {
      throw InvalidArgument("bundle of agent " + std::to_string(i + 1) + " has universe " +
                            std::to_string(bundles[i].universe()) + ", expected " +
                            std::to_string(goods));
    }
    if (bundles[i].intersects(seen)) {
      const Bundle dup = bundles[i] & seen;
      throw OverlapError("good g" + std::to_string(dup.first()) + " allocated twice");
    }
    seen |= bundles[i];
  }
  if (seen.size() != goods) {
    const Bundle missing = Bundle::full(goods) - seen;
    throw CoverageError("good g" + std::to_string(missing.first()) + " is unallocated");
  }
  Allocation a;
  a.goods_ = goods;
  a.bundles_ = std::move(bundles);
  return a;
}

}  // namespace fairdiv
