#pragma once

// Euler's series transformation and the head+tail hybrid scheme.
//
// For an alternating series with completely monotone terms, the transformed
// partial sum
//   E_n = sum_{r=0..n-1} Delta^r a_1 / 2^(r+1)
// converges to the same limit L, underestimates it, and satisfies
//   0 < L - E_n <= Delta^n a_1 / 2^n,
// usually collapsing thousands of original terms into a handful. The hybrid
// scheme sums the first m terms exactly and applies the transform to the
// shifted tail b_i = a_{m+i}, which is what one does in practice.
//
// Certified results require the exact backend; *_f64 variants exist for
// demonstration and never feed certified output. For sampled sources the
// hypothesis certificate is window-scoped: it checks the finitely many
// differences the computation touches and says nothing about the infinite
// tail, so treat such results as conditional on the sequence continuing
// to behave.

#include <cstdint>
#include <string>
#include <utility>

#include "altsum/differences.hpp"
#include "altsum/rational.hpp"
#include "altsum/series.hpp"

namespace altsum {

struct AccelMethod {
  enum class Kind { euler, hybrid };
  Kind kind = Kind::euler;
  std::int64_t head = 0;  // exact-summing prefix length m (0 for pure euler)
  std::int64_t tail = 0;  // transform order n (euler) or j (hybrid)

  std::string to_string() const;  // "euler(n)" or "hybrid(m,j)"
};

struct AccelerationResult {
  AccelMethod method;
  Rational value;
  Rational error_upper;      // > 0
  bool underestimates = true;  // value < L when true, value > L when false
  std::int64_t terms_consumed = 0;
  Backend backend = Backend::exact;
};

struct AccelerationResultF64 {
  AccelMethod method;
  double value = 0.0;
  double error_upper = 0.0;
  bool underestimates = true;
  std::int64_t terms_consumed = 0;
  Backend backend = Backend::float64;
};

// E_n with its error bound Delta^n a_1 / 2^n; n >= 1.
AccelerationResult euler_partial_sum(const TermSource& src, std::int64_t n);

// (E_n, E_n + Delta^n a_1 / 2^n): an open enclosure of L for certified sources.
std::pair<Rational, Rational> euler_enclosure(const TermSource& src, std::int64_t n);

// Smallest n with Delta^n a_1 / 2^n <= eps (non-strict on purpose: the bound
// itself certifies |L - E_n| <= eps). Linear scan under the order guard.
std::int64_t first_n_euler(const TermSource& src, const Rational& eps);

// S_m summed exactly plus the transform of the tail:
// value = S_m + (-1)^m E_j[b],  b_i = a_{m+i},  error_upper = Delta^j a_{m+1} / 2^j.
// Even m underestimates L, odd m overestimates.
AccelerationResult hybrid_sum(const TermSource& src, std::int64_t head, std::int64_t tail);

// Demonstration float64 path (same formulas, double arithmetic).
AccelerationResultF64 euler_partial_sum_f64(const TermSource& src, std::int64_t n);

}  // namespace altsum
