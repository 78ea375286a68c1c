#pragma once

// Certified remainder enclosures for alternating series, the corrected
// partial-sum ladder behind them, and first-n solvers.
//
// Writing R_n = L - S_n, the enclosures are
//   order tag leibniz:  0 <= |R_n| <= a_{n+1}
//   order k >= 0:       sum_{r=0..k} Delta^r a_{n+1} / 2^(r+1)
//                         < |R_n| <
//                       a_n/2 - sum_{r=1..k} Delta^r a_n / 2^(r+1)
// with R_n carrying the sign (-1)^n. Every endpoint records whether its
// inequality is strict; the solvers honor that bookkeeping exactly, which
// is what decides boundary cases like eps = upper.
//
// All operations here require the exact backend and refuse sources whose
// monotone-difference hypotheses cannot be certified (by family) or
// verified (window check for sampled data).

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

#include "altsum/constants.hpp"
#include "altsum/differences.hpp"
#include "altsum/rational.hpp"
#include "altsum/series.hpp"

namespace altsum {

struct BoundMethod {
  enum class Kind { leibniz, johnsonbaugh };
  Kind kind = Kind::johnsonbaugh;
  int k = 0;  // meaningful for johnsonbaugh only

  static BoundMethod leibniz() { return {Kind::leibniz, 0}; }
  static BoundMethod johnsonbaugh(int k) { return {Kind::johnsonbaugh, k}; }

  std::string to_string() const;              // "leibniz" or "jb:<k>"
  static BoundMethod parse(std::string_view); // accepts the same spellings

  friend bool operator==(const BoundMethod&, const BoundMethod&) = default;
};

// Certified enclosure of |R_n|, with sign(R_n) = (-1)^n.
// Invariant: 0 <= lower < upper, and lower > 0 unless method is leibniz.
struct RemainderInterval {
  std::int64_t n = 0;
  BoundMethod method;
  Rational lower;
  Rational upper;
  bool lower_strict = false;  // true: lower < |R_n|; false: lower <= |R_n|
  bool upper_strict = false;  // true: |R_n| < upper; false: |R_n| <= upper
  int sign = 1;               // (-1)^n

  bool certifies_below(const Rational& eps) const {
    return upper_strict ? upper <= eps : upper < eps;
  }
};

// One rung of the corrected partial-sum ladder:
// value = S_n + (-1)^n * sum_{r=0..k} Delta^r a_{n+1} / 2^(r+1).
struct TValue {
  std::int64_t n = 0;
  int k = 0;
  Rational value;
};

RemainderInterval leibniz_bound(const TermSource& src, std::int64_t n);

RemainderInterval johnsonbaugh_interval(const TermSource& src, std::int64_t n, int k);

TValue t_value(const TermSource& src, std::int64_t n, int k);

// The closed interval [T^(k)_{2r}, T^(k)_{2r-1}], r >= 1. Successive
// intervals nest in both r and k, and each contains the series limit.
std::pair<Rational, Rational> t_interval(const TermSource& src, std::int64_t r, int k);

// L_hat - S_n where L_hat approximates the series limit with the table
// constant's certified error bound (well under 10^-40).
struct TrueRemainder {
  Rational value;
  Rational error_bound;
};

TrueRemainder true_remainder(const TermSource& src, std::int64_t n,
                             const ConstantTable& table = ConstantTable::builtin());

// Index guard shared by the solvers.
inline constexpr std::int64_t kSolveGuard = 1'000'000;

// Smallest n whose interval certifies |R_n| < eps, i.e.
// (upper_strict and upper <= eps) or (not upper_strict and upper < eps).
// Family-certified sources use galloping + binary search (the upper bound
// is monotone non-increasing for completely monotone families); sampled
// sources are scanned linearly over the available window.
std::int64_t first_n_guaranteed(const TermSource& src, const Rational& eps,
                                BoundMethod method);

// Smallest n with |true_remainder(n)| < eps, exact comparison. Requires a
// known limit and eps > 10^-40.
std::int64_t first_n_true(const TermSource& src, const Rational& eps,
                          const ConstantTable& table = ConstantTable::builtin());

}  // namespace altsum
