// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <charconv>
#include <cstdint>
#include <limits>
#include <numeric>
#include <string>
#include <string_view>

#include "aligndof/errors.hpp"

namespace aligndof {

namespace detail {

inline std::int64_t narrow_i128(__int128 v, const char* ctx) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    fail(Errc::Overflow, ctx);
  return static_cast<std::int64_t>(v);
}

}  // namespace detail

/// Exact signed rational on int64 with overflow-checked arithmetic.
/// Always stored reduced with a positive denominator. The DoF planner does
/// all of its bookkeeping in this type; no floating point enters until a
/// value is printed.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t value) : num_(value) {}  // NOLINT: implicit by design
  Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) fail(Errc::InvalidArgument, "rational with zero denominator");
    if (den < 0) {
      num = detail::narrow_i128(-static_cast<__int128>(num), "rational negate");
      den = detail::narrow_i128(-static_cast<__int128>(den), "rational negate");
    }
    const std::int64_t g = std::gcd(num, den);
    num_ = num / (g == 0 ? 1 : g);
    den_ = den / (g == 0 ? 1 : g);
  }

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }

  bool is_integer() const noexcept { return den_ == 1; }
  bool is_zero() const noexcept { return num_ == 0; }
  bool is_positive() const noexcept { return num_ > 0; }

  /// Largest integer <= value.
  std::int64_t floor() const noexcept {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
  }

  double to_double() const noexcept {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  /// "p" when integral, "p/q" otherwise.
  std::string str() const {
    std::string s = std::to_string(num_);
    if (den_ != 1) s += "/" + std::to_string(den_);
    return s;
  }

  static Rational parse(std::string_view text) {
    const auto slash = text.find('/');
    std::int64_t num = 0;
    std::int64_t den = 1;
    const auto head = text.substr(0, slash);
    auto res = std::from_chars(head.data(), head.data() + head.size(), num);
    if (res.ec != std::errc{} || res.ptr != head.data() + head.size())
      fail(Errc::InvalidArgument, "cannot parse rational '" + std::string(text) + "'");
    if (slash != std::string_view::npos) {
      const auto tail = text.substr(slash + 1);
      res = std::from_chars(tail.data(), tail.data() + tail.size(), den);
      if (res.ec != std::errc{} || res.ptr != tail.data() + tail.size())
        fail(Errc::InvalidArgument, "cannot parse rational '" + std::string(text) + "'");
    }
    return Rational(num, den);
  }

  Rational operator-() const { return Rational(-num_, den_); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    const __int128 num = static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_;
    const __int128 den = static_cast<__int128>(a.den_) * b.den_;
    return make_reduced(num, den);
  }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
  friend Rational operator*(const Rational& a, const Rational& b) {
    const __int128 num = static_cast<__int128>(a.num_) * b.num_;
    const __int128 den = static_cast<__int128>(a.den_) * b.den_;
    return make_reduced(num, den);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) fail(Errc::InvalidArgument, "rational division by zero");
    const __int128 num = static_cast<__int128>(a.num_) * b.den_;
    const __int128 den = static_cast<__int128>(a.den_) * b.num_;
    return make_reduced(num, den);
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) noexcept { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) noexcept {
    return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
  }
  friend bool operator<=(const Rational& a, const Rational& b) noexcept { return !(b < a); }
  friend bool operator>(const Rational& a, const Rational& b) noexcept { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) noexcept { return !(a < b); }

  static Rational min(const Rational& a, const Rational& b) { return a <= b ? a : b; }
  static Rational max(const Rational& a, const Rational& b) { return a >= b ? a : b; }

 private:
  static Rational make_reduced(__int128 num, __int128 den) {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const __int128 g = gcd_i128(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    Rational r;
    r.num_ = detail::narrow_i128(num, "rational arithmetic");
    r.den_ = detail::narrow_i128(den, "rational arithmetic");
    return r;
  }

  static __int128 gcd_i128(__int128 a, __int128 b) {
    while (b != 0) {
      const __int128 t = a % b;
      a = b;
      b = t;
    }
    return a == 0 ? 1 : a;
  }

  std::int64_t num_{0};
  std::int64_t den_{1};
};

/// Exact binomial coefficient; throws Errc::Overflow rather than wrapping.
inline std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  __int128 acc = 1;
  for (int i = 1; i <= k; ++i) {
    acc = acc * (n - k + i) / i;
    detail::narrow_i128(acc, "binomial");
  }
  return detail::narrow_i128(acc, "binomial");
}

inline std::int64_t lcm_checked(std::int64_t a, std::int64_t b) {
  const std::int64_t g = std::gcd(a, b);
  if (g == 0) return 0;
  return detail::narrow_i128(static_cast<__int128>(a) / g * b, "lcm");
}

}  // namespace aligndof
