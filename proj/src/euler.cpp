#include "altsum/euler.hpp"

#include <string>
#include <vector>

#include "altsum/error.hpp"

namespace altsum {

std::string AccelMethod::to_string() const {
  if (kind == Kind::euler) {
    return "euler(" + std::to_string(tail) + ")";
  }
  return "hybrid(" + std::to_string(head) + "," + std::to_string(tail) + ")";
}

namespace {

void check_transform_order(std::int64_t n) {
  if (n < 1) {
    raise(errc::invalid_argument, "transform order must be >= 1",
          "n=" + std::to_string(n));
  }
  if (n > kMaxDifferenceOrder) {
    raise(errc::guard_exceeded, "transform order is limited to 64",
          "n=" + std::to_string(n));
  }
}

// Window surrogate for "all orders r <= max_order decrease monotonically":
// one pair per order, anchored at the first tail index. Touches exactly the
// terms the transform and its error bound consume, plus one.
void require_orders(const TermSource& src, std::int64_t first_index, int max_order) {
  MonotoneVerdict verdict =
      check_monotone_decreasing(src, max_order, Window{first_index, first_index});
  if (!verdict.passed()) {
    raise(errc::hypothesis_failed,
          "monotone-difference hypothesis failed on the checked window",
          "order=" + std::to_string(verdict.fail_order) +
              " n=" + std::to_string(verdict.fail_index));
  }
}

// Delta^r a_{first} for r = 0..max_order, one triangular fold.
std::vector<Rational> difference_column(const TermSource& src, std::int64_t first,
                                        int max_order) {
  std::vector<Rational> level;
  level.reserve(static_cast<std::size_t>(max_order) + 1);
  for (int j = 0; j <= max_order; ++j) {
    level.push_back(term(src, first + j));
  }
  std::vector<Rational> column;
  column.reserve(static_cast<std::size_t>(max_order) + 1);
  for (int r = 0;; ++r) {
    column.push_back(level[0]);
    if (r == max_order) break;
    for (std::size_t j = 0; j + 1 < level.size(); ++j) {
      level[j] -= level[j + 1];
    }
    level.pop_back();
  }
  return column;
}

}  // namespace

AccelerationResult euler_partial_sum(const TermSource& src, std::int64_t n) {
  return hybrid_sum(src, 0, n);
}

std::pair<Rational, Rational> euler_enclosure(const TermSource& src, std::int64_t n) {
  AccelerationResult r = euler_partial_sum(src, n);
  Rational upper = r.value + r.error_upper;
  return {std::move(r.value), std::move(upper)};
}

std::int64_t first_n_euler(const TermSource& src, const Rational& eps) {
  if (!eps.is_positive()) {
    raise(errc::invalid_argument, "eps must be > 0", eps.to_string());
  }
  for (int n = 1; n <= kMaxDifferenceOrder; ++n) {
    require_orders(src, 1, n);
    Rational bound = forward_difference(src, n, 1).div_pow2(static_cast<unsigned>(n));
    if (bound <= eps) return n;
  }
  raise(errc::unreachable_eps, "eps not reachable within the order-64 guard",
        "eps=" + eps.to_string());
}

AccelerationResult hybrid_sum(const TermSource& src, std::int64_t head, std::int64_t tail) {
  if (head < 0) {
    raise(errc::invalid_argument, "head length must be >= 0",
          "m=" + std::to_string(head));
  }
  check_transform_order(tail);
  require_orders(src, head + 1, static_cast<int>(tail));

  // Differences of the shifted tail b_i = a_{head+i} are differences of a
  // evaluated at head+1; no shifted source is needed.
  std::vector<Rational> column =
      difference_column(src, head + 1, static_cast<int>(tail));
  Rational transform;
  for (std::int64_t r = 0; r < tail; ++r) {
    transform += column[static_cast<std::size_t>(r)].div_pow2(static_cast<unsigned>(r + 1));
  }

  const bool head_even = head % 2 == 0;
  Rational value = partial_sum(src, head);
  if (head_even) {
    value += transform;
  } else {
    value -= transform;
  }

  AccelerationResult out;
  out.method = {head == 0 ? AccelMethod::Kind::euler : AccelMethod::Kind::hybrid,
                head, tail};
  out.value = std::move(value);
  out.error_upper = column[static_cast<std::size_t>(tail)].div_pow2(static_cast<unsigned>(tail));
  out.underestimates = head_even;
  out.terms_consumed = head + tail;
  out.backend = Backend::exact;

  if (!out.error_upper.is_positive()) {
    raise(errc::hypothesis_failed, "error bound degenerated to zero",
          "m=" + std::to_string(head) + " j=" + std::to_string(tail));
  }
  return out;
}

AccelerationResultF64 euler_partial_sum_f64(const TermSource& src, std::int64_t n) {
  check_transform_order(n);
  require_orders(src, 1, static_cast<int>(n));

  std::vector<double> level;
  level.reserve(static_cast<std::size_t>(n) + 1);
  for (std::int64_t j = 0; j <= n; ++j) {
    level.push_back(term_f64(src, 1 + j));
  }
  double value = 0.0;
  double scale = 0.5;
  double top = 0.0;
  for (std::int64_t r = 0;; ++r) {
    top = level[0];
    if (r == n) break;
    value += top * scale;
    scale *= 0.5;
    for (std::size_t j = 0; j + 1 < level.size(); ++j) {
      level[j] -= level[j + 1];
    }
    level.pop_back();
  }

  AccelerationResultF64 out;
  out.method = {AccelMethod::Kind::euler, 0, n};
  out.value = value;
  out.error_upper = top * scale * 2.0;  // Delta^n a_1 / 2^n
  out.underestimates = true;
  out.terms_consumed = n;
  out.backend = Backend::float64;
  return out;
}

}  // namespace altsum
