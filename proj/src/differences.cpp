#include "altsum/differences.hpp"

#include <string>

#include "altsum/error.hpp"

namespace altsum {

namespace {

void check_order(int order) {
  if (order < 0) {
    raise(errc::invalid_argument, "difference order must be >= 0",
          "order=" + std::to_string(order));
  }
  if (order > kMaxDifferenceOrder) {
    raise(errc::guard_exceeded, "difference order is limited to 64",
          "order=" + std::to_string(order));
  }
}

}  // namespace

Rational forward_difference(const TermSource& src, int order, std::int64_t n) {
  check_order(order);
  std::vector<Rational> row;
  row.reserve(static_cast<std::size_t>(order) + 1);
  for (int j = 0; j <= order; ++j) {
    row.push_back(term(src, n + j));
  }
  for (int r = 0; r < order; ++r) {
    for (std::size_t j = 0; j + 1 < row.size() - static_cast<std::size_t>(r); ++j) {
      row[j] -= row[j + 1];
    }
  }
  return row.front();
}

double forward_difference_f64(const TermSource& src, int order, std::int64_t n) {
  check_order(order);
  std::vector<double> row;
  row.reserve(static_cast<std::size_t>(order) + 1);
  for (int j = 0; j <= order; ++j) {
    row.push_back(term_f64(src, n + j));
  }
  for (int r = 0; r < order; ++r) {
    for (std::size_t j = 0; j + 1 < row.size() - static_cast<std::size_t>(r); ++j) {
      row[j] -= row[j + 1];
    }
  }
  return row.front();
}

DifferenceTable DifferenceTable::build(const TermSource& src, std::int64_t n_start,
                                       std::int64_t width, int max_order) {
  check_order(max_order);
  if (n_start < 1) {
    raise(errc::out_of_range, "table must start at n >= 1",
          "n_start=" + std::to_string(n_start));
  }
  if (width <= max_order) {
    raise(errc::invalid_argument, "table width must exceed max_order",
          "width=" + std::to_string(width) + " max_order=" + std::to_string(max_order));
  }

  DifferenceTable table;
  table.n_start_ = n_start;
  table.width_ = width;
  table.max_order_ = max_order;
  table.rows_.resize(static_cast<std::size_t>(max_order) + 1);

  auto& row0 = table.rows_[0];
  row0.reserve(static_cast<std::size_t>(width) + 1);
  for (std::int64_t j = 0; j <= width; ++j) {
    row0.push_back(term(src, n_start + j));
  }
  for (int r = 1; r <= max_order; ++r) {
    const auto& prev = table.rows_[static_cast<std::size_t>(r) - 1];
    auto& row = table.rows_[static_cast<std::size_t>(r)];
    row.reserve(prev.size() - 1);
    for (std::size_t j = 0; j + 1 < prev.size(); ++j) {
      row.push_back(prev[j] - prev[j + 1]);
    }
  }
  return table;
}

const Rational& DifferenceTable::at(int order, std::int64_t n) const {
  if (order < 0 || order > max_order_) {
    raise(errc::out_of_range, "order outside table", "order=" + std::to_string(order));
  }
  const std::int64_t j = n - n_start_;
  if (j < 0 || j > width_ - order) {
    raise(errc::out_of_range, "index outside table", "n=" + std::to_string(n));
  }
  return rows_[static_cast<std::size_t>(order)][static_cast<std::size_t>(j)];
}

Rational closed_form_delta_pi4(int n) {
  check_order(n);
  mpz_class num;
  mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(n));
  mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(n));
  mpz_class den = 1;
  for (long i = 1; i <= 2 * n + 1; i += 2) {
    den *= i;
  }
  return Rational(std::move(num), std::move(den));
}

MonotoneVerdict check_monotone_decreasing(const TermSource& src, int max_order,
                                          Window window) {
  check_order(max_order);
  if (window.lo < 1 || window.hi < window.lo) {
    raise(errc::invalid_argument, "window must satisfy 1 <= lo <= hi",
          "window=[" + std::to_string(window.lo) + "," + std::to_string(window.hi) + "]");
  }
  if (src.spec.completely_monotone_family()) {
    return {MonotoneVerdict::Kind::certified_by_family, -1, -1};
  }

  // One dense pass: level r holds Delta^r a_n for n = lo .. hi + 1
  // (each fold consumes one trailing entry).
  const std::int64_t span = window.hi - window.lo + 1;
  std::vector<Rational> level;
  level.reserve(static_cast<std::size_t>(span + max_order + 1));
  for (std::int64_t j = 0; j <= span + max_order; ++j) {
    level.push_back(detail::exact_term_of_spec(src.spec, window.lo + j));
  }
  for (int r = 0; r <= max_order; ++r) {
    for (std::int64_t n = window.lo; n <= window.hi; ++n) {
      const auto& cur = level[static_cast<std::size_t>(n - window.lo)];
      const auto& next = level[static_cast<std::size_t>(n - window.lo) + 1];
      if (next.is_negative() || cur < next) {
        return {MonotoneVerdict::Kind::window_fail, r, n};
      }
    }
    if (r == max_order) break;
    for (std::size_t j = 0; j + 1 < level.size(); ++j) {
      level[j] -= level[j + 1];
    }
    level.pop_back();
  }
  return {MonotoneVerdict::Kind::window_pass, -1, -1};
}

}  // namespace altsum
