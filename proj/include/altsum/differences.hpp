#pragma once

// Forward differences of a positive term sequence, with Delta a_n defined
// as a_n - a_{n+1} (so completely monotone sequences keep every order
// nonnegative and decreasing).

#include <cstdint>
#include <vector>

#include "altsum/rational.hpp"
#include "altsum/series.hpp"

namespace altsum {

// Order guard. In exact arithmetic higher orders stay exact but cost grows
// combinatorially; 64 covers every desk-scale use.
inline constexpr int kMaxDifferenceOrder = 64;

// Delta^r a_n via the recurrence Delta^r a_n = Delta^(r-1) a_n - Delta^(r-1) a_{n+1},
// Delta^0 a_n = a_n. Exact backend.
Rational forward_difference(const TermSource& src, int order, std::int64_t n);

// Same recurrence in double arithmetic. Advisory only: relative accuracy
// decays with the order because the recurrence cancels; certification
// always goes through the exact path.
double forward_difference_f64(const TermSource& src, int order, std::int64_t n);

// Dense triangular cache: rows[r][j] = Delta^r a_{n_start+j},
// 0 <= r <= max_order, 0 <= j <= width - r. Immutable after construction.
class DifferenceTable {
 public:
  static DifferenceTable build(const TermSource& src, std::int64_t n_start,
                               std::int64_t width, int max_order);

  const Rational& at(int order, std::int64_t n) const;  // n is an absolute index
  const std::vector<std::vector<Rational>>& rows() const { return rows_; }

  std::int64_t n_start() const { return n_start_; }
  std::int64_t width() const { return width_; }
  int max_order() const { return max_order_; }

 private:
  DifferenceTable() = default;
  std::int64_t n_start_ = 1;
  std::int64_t width_ = 0;
  int max_order_ = 0;
  std::vector<std::vector<Rational>> rows_;
};

// Closed form for the pi4 series (a_n = 1/(2n-1)):
// Delta^n a_1 = 2^n * n! / (1*3*5*...*(2n+1)).
Rational closed_form_delta_pi4(int n);

struct Window {
  std::int64_t lo = 1;  // inclusive
  std::int64_t hi = 1;  // inclusive
};

struct MonotoneVerdict {
  enum class Kind { certified_by_family, window_pass, window_fail };
  Kind kind = Kind::window_pass;
  int fail_order = -1;        // set when kind == window_fail
  std::int64_t fail_index = -1;
  bool passed() const { return kind != Kind::window_fail; }
};

// Finite-window surrogate for "all difference orders decrease monotonically
// to zero": verifies Delta^r a_n >= Delta^r a_{n+1} >= 0 for every r <=
// max_order and n in the window, reporting the first failure in (r, n)
// order. Built-in families are certified without inspection. The verdict is
// scoped to the window — it proves nothing about terms beyond it.
MonotoneVerdict check_monotone_decreasing(const TermSource& src, int max_order,
                                          Window window);

}  // namespace altsum
