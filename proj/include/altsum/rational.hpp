#pragma once

// Exact rational scalar on top of GMP.
//
// Every value is kept in canonical form: denominator > 0,
// gcd(|numerator|, denominator) = 1, and zero is 0/1. All operations are
// pure and exact; nothing in this type touches floating point. The one
// conversion to double is explicit (to_double) and rounds to nearest with
// ties to even, so the float64 backend sees the closest representable
// value of each exact quantity.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace altsum {

// Largest supported fractional-digit count for decimal rendering.
inline constexpr unsigned kMaxDecimalDigits = 1000;

class Rational {
 public:
  Rational() : q_(0) {}
  Rational(long n) : q_(n) {}  // NOLINT: implicit by design, small ints read naturally
  Rational(long num, long den);
  Rational(mpz_class num, mpz_class den);
  explicit Rational(mpq_class q);

  // Accepts "p", "p/q", or a decimal literal with optional exponent
  // ("0.25", "5e-5", "-1.5E2"). Decimal literals parse exactly.
  static Rational parse(std::string_view text);

  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_negative() const { return sgn(q_) < 0; }
  bool is_positive() const { return sgn(q_) > 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);  // throws division_by_zero

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& lhs, const Rational& rhs) {
    return mpq_equal(lhs.q_.get_mpq_t(), rhs.q_.get_mpq_t()) != 0;
  }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    int c = mpq_cmp(lhs.q_.get_mpq_t(), rhs.q_.get_mpq_t());
    return c <=> 0;
  }

  Rational abs() const;
  Rational reciprocal() const;      // throws division_by_zero on zero
  Rational div_pow2(unsigned k) const;  // exact division by 2^k

  // "p" when the value is an integer, "p/q" otherwise.
  std::string to_string() const;

  // Fixed-point rendering with exactly `digits` fractional digits,
  // rounded half to even. digits = 0 renders an integer with no point.
  // A magnitude that rounds to zero never carries a minus sign.
  std::string decimal_string(unsigned digits) const;

  // Nearest-even conversion, correct in normal, subnormal and overflow
  // ranges (overflow saturates to +/-inf like any IEEE operation).
  double to_double() const;

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  mpq_class q_;  // invariant: canonical
};

inline Rational abs(const Rational& r) { return r.abs(); }

// Three-way comparison of |a - b| against eps (eps >= 0) performed on raw
// cross products. Avoids canonicalizing the difference, which matters when
// a and b carry very large denominators (long partial sums).
std::strong_ordering compare_abs_diff(const Rational& a, const Rational& b,
                                      const Rational& eps);

// 10^k as an exact rational; k may be negative.
Rational pow10(long k);

}  // namespace altsum
