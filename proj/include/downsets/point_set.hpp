#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include "errors.hpp"

namespace downsets {

inline constexpr std::size_t kMaxPoints = 128;

/// Subset of a poset carrier, stored as a 128-bit word. Bit i set means point i
/// is a member. The owning poset is responsible for keeping bits below its size.
class PointSet {
 public:
  using word = unsigned __int128;

  constexpr PointSet() = default;
  constexpr explicit PointSet(word bits) : bits_(bits) {}
  PointSet(std::initializer_list<std::size_t> points) {
    for (auto p : points) bits_ |= word{1} << p;
  }

  static PointSet from_indices(const std::vector<std::size_t>& points) {
    PointSet s;
    for (auto p : points) {
      if (p >= kMaxPoints) throw IndexError("point index " + std::to_string(p) + " exceeds capacity");
      s.bits_ |= word{1} << p;
    }
    return s;
  }

  static constexpr PointSet full(std::size_t n) {
    if (n >= kMaxPoints) return PointSet(~word{0});
    return PointSet((word{1} << n) - 1);
  }
  static constexpr PointSet single(std::size_t i) { return PointSet(word{1} << i); }

  constexpr word bits() const { return bits_; }
  constexpr std::uint64_t low() const { return static_cast<std::uint64_t>(bits_); }
  constexpr std::uint64_t high() const { return static_cast<std::uint64_t>(bits_ >> 64); }

  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(std::size_t i) const { return (bits_ >> i) & 1U; }
  constexpr std::size_t size() const {
    return static_cast<std::size_t>(std::popcount(low()) + std::popcount(high()));
  }
  /// Lowest member; undefined for the empty set.
  constexpr std::size_t first() const {
    return low() != 0 ? static_cast<std::size_t>(std::countr_zero(low()))
                      : 64 + static_cast<std::size_t>(std::countr_zero(high()));
  }

  constexpr PointSet with(std::size_t i) const { return PointSet(bits_ | (word{1} << i)); }
  constexpr PointSet without(std::size_t i) const { return PointSet(bits_ & ~(word{1} << i)); }
  constexpr bool subset_of(const PointSet& o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(const PointSet& o) const { return (bits_ & o.bits_) != 0; }
  constexpr PointSet complement(std::size_t n) const { return PointSet(~bits_ & full(n).bits_); }

  constexpr PointSet operator|(const PointSet& o) const { return PointSet(bits_ | o.bits_); }
  constexpr PointSet operator&(const PointSet& o) const { return PointSet(bits_ & o.bits_); }
  constexpr PointSet operator-(const PointSet& o) const { return PointSet(bits_ & ~o.bits_); }
  constexpr PointSet& operator|=(const PointSet& o) { bits_ |= o.bits_; return *this; }
  constexpr PointSet& operator&=(const PointSet& o) { bits_ &= o.bits_; return *this; }
  constexpr PointSet& operator-=(const PointSet& o) { bits_ &= ~o.bits_; return *this; }

  friend constexpr bool operator==(const PointSet&, const PointSet&) = default;
  friend constexpr std::strong_ordering operator<=>(const PointSet& a, const PointSet& b) {
    return a.bits_ <=> b.bits_;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::uint64_t w = low(); w != 0; w &= w - 1) f(static_cast<std::size_t>(std::countr_zero(w)));
    for (std::uint64_t w = high(); w != 0; w &= w - 1) f(64 + static_cast<std::size_t>(std::countr_zero(w)));
  }

  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    out.reserve(size());
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  /// Lower-case hex without leading zeros ("0" for the empty set).
  std::string to_hex() const {
    if (bits_ == 0) return "0";
    static constexpr char digits[] = "0123456789abcdef";
    std::string s;
    for (word w = bits_; w != 0; w >>= 4) s.insert(s.begin(), digits[static_cast<unsigned>(w & 0xF)]);
    return s;
  }

 private:
  word bits_ = 0;
};

struct PointSetHash {
  std::size_t operator()(const PointSet& s) const noexcept {
    std::uint64_t h = s.low() * 0x9E3779B97F4A7C15ULL;
    h ^= s.high() + 0x632BE59BD9B4E019ULL + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h ^ (h >> 31));
  }
};

/// Visit every subset of `s` (including empty and `s` itself).
template <typename F>
void for_each_subset(const PointSet& s, F&& f) {
  PointSet::word all = s.bits();
  PointSet::word sub = 0;
  while (true) {
    f(PointSet(sub));
    if (sub == all) break;
    sub = (sub - all) & all;
  }
}

}  // namespace downsets
