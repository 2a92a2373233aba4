#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "hvc/errors.hpp"

namespace hvc {

/// Exact rational on 64-bit numerator/denominator, normalized so that
/// den > 0 and gcd(|num|, den) = 1. Comparisons cross-multiply in 128-bit
/// so they never overflow; arithmetic throws on 64-bit overflow instead
/// of wrapping. Density thresholds and step counts stay exact this way.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(long long value) : num_(value), den_(1) {}  // NOLINT: implicit by design
  Rational(long long num, long long den) : num_(num), den_(den) { normalize(); }

  long long num() const { return num_; }
  long long den() const { return den_; }

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  /// Parses "a/b" or a decimal literal like "0.05" (kept exact: 5/100).
  static Rational parse(const std::string& text);

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(checked(i128(a.num_) * b.den_ + i128(b.num_) * a.den_),
                    checked(i128(a.den_) * b.den_));
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(checked(i128(a.num_) * b.den_ - i128(b.num_) * a.den_),
                    checked(i128(a.den_) * b.den_));
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(checked(i128(a.num_) * b.num_), checked(i128(a.den_) * b.den_));
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw InputError("rational division by zero");
    return Rational(checked(i128(a.num_) * b.den_), checked(i128(a.den_) * b.num_));
  }
  Rational operator-() const { return Rational(-num_, den_); }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

 private:
  using i128 = __int128;

  static long long checked(i128 v) {
    if (v > i128(INT64_MAX) || v < i128(INT64_MIN))
      throw Error("rational arithmetic overflow");
    return static_cast<long long>(v);
  }

  void normalize() {
    if (den_ == 0) throw InputError("rational with zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  long long num_{0};
  long long den_{1};
};

/// C(n, k) as an exact 64-bit integer; throws on overflow.
long long binomial(int n, int k);

}  // namespace hvc
