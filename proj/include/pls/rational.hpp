#pragma once

#include <cassert>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>

namespace pls {

/// Exact non-negative rational used for cost ratios and degeneracy bounds.
/// Comparisons cross-multiply in 128 bits, so ratios derived from doubles
/// (denominators up to 2^53) never hit rounding disputes.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
    assert(d > 0 && n >= 0);
    const std::int64_t g = std::gcd(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  static Rational zero() { return Rational(0, 1); }

  /// Exact conversion: every finite double is a dyadic rational.
  static Rational from_double(double x) {
    assert(x >= 0.0 && std::isfinite(x));
    if (x == 0.0) return zero();
    int exp = 0;
    double m = std::frexp(x, &exp);  // x = m * 2^exp, m in [0.5, 1)
    auto mant = static_cast<std::int64_t>(std::ldexp(m, 53));
    int shift = 53 - exp;
    while (shift > 0 && (mant & 1) == 0) {
      mant >>= 1;
      --shift;
    }
    assert(shift >= 0 && shift < 63);
    return Rational(mant, std::int64_t(1) << shift);
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num) * b.den ==
           static_cast<__int128>(b.num) * a.den;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num) * b.den <
           static_cast<__int128>(b.num) * a.den;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return !(b < a);
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) {
    return !(a < b);
  }

  double to_double() const {
    return static_cast<double>(num) / static_cast<double>(den);
  }

  std::string str() const {
    return std::to_string(num) + "/" + std::to_string(den);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
  }
};

}  // namespace pls
