#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

#include "errors.hpp"

namespace downsets {

/// Exact non-negative count. Backed by 128-bit arithmetic; every operation is
/// overflow-checked and throws OverflowError rather than wrapping.
class Count {
 public:
  using value_type = unsigned __int128;

  constexpr Count() = default;
  constexpr Count(std::uint64_t v) : v_(v) {}  // NOLINT: implicit from literals

  static constexpr Count from_raw(value_type v) {
    Count c;
    c.v_ = v;
    return c;
  }

  static Count pow2(unsigned e) {
    if (e >= 128) throw OverflowError("2^" + std::to_string(e) + " exceeds 128-bit count");
    return from_raw(value_type{1} << e);
  }

  constexpr value_type raw() const { return v_; }

  bool fits_u64() const { return v_ <= UINT64_MAX; }
  std::uint64_t to_u64() const {
    if (!fits_u64()) throw OverflowError("count does not fit in 64 bits");
    return static_cast<std::uint64_t>(v_);
  }

  Count& operator+=(const Count& o) {
    if (v_ + o.v_ < v_) throw OverflowError("count addition overflow");
    v_ += o.v_;
    return *this;
  }
  Count& operator-=(const Count& o) {
    if (o.v_ > v_) throw OverflowError("count subtraction underflow");
    v_ -= o.v_;
    return *this;
  }
  Count& operator*=(const Count& o) {
    if (v_ != 0 && o.v_ > ~value_type{0} / v_) throw OverflowError("count multiplication overflow");
    v_ *= o.v_;
    return *this;
  }
  friend Count operator+(Count a, const Count& b) { return a += b; }
  friend Count operator-(Count a, const Count& b) { return a -= b; }
  friend Count operator*(Count a, const Count& b) { return a *= b; }

  friend constexpr bool operator==(const Count&, const Count&) = default;
  friend constexpr auto operator<=>(const Count& a, const Count& b) {
    return a.v_ <=> b.v_;
  }

  std::string to_string() const {
    if (v_ == 0) return "0";
    std::string s;
    for (value_type x = v_; x != 0; x /= 10) s.push_back(static_cast<char>('0' + static_cast<int>(x % 10)));
    std::reverse(s.begin(), s.end());
    return s;
  }

  static Count parse(const std::string& text) {
    if (text.empty()) throw ParseError("empty count");
    Count c;
    for (char ch : text) {
      if (ch < '0' || ch > '9') throw ParseError("bad digit in count: " + text);
      c = c * Count(10) + Count(static_cast<std::uint64_t>(ch - '0'));
    }
    return c;
  }

  friend std::ostream& operator<<(std::ostream& os, const Count& c) { return os << c.to_string(); }

 private:
  value_type v_ = 0;
};

inline Count binomial(unsigned n, unsigned k) {
  if (k > n) return Count(0);
  k = std::min(k, n - k);
  Count r(1);
  for (unsigned i = 1; i <= k; ++i) {
    // exact at every step: r * (n - k + i) is divisible by i
    r = Count::from_raw(r.raw() * (n - k + i) / i);
  }
  return r;
}

}  // namespace downsets
