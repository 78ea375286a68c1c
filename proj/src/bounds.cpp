#include "altsum/bounds.hpp"

#include <charconv>

#include "altsum/error.hpp"

namespace altsum {

std::string BoundMethod::to_string() const {
  return kind == Kind::leibniz ? "leibniz" : "jb:" + std::to_string(k);
}

BoundMethod BoundMethod::parse(std::string_view text) {
  if (text == "leibniz") return leibniz();
  if (text == "jb") return johnsonbaugh(0);
  if (text.starts_with("jb:")) {
    std::string_view digits = text.substr(3);
    int k = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
    if (ec == std::errc() && ptr == digits.data() + digits.size() && k >= 0) {
      return johnsonbaugh(k);
    }
  }
  raise(errc::parse_error, "expected method leibniz or jb:<k>", std::string(text));
}

namespace {

std::string window_context(int order, std::int64_t n) {
  return "order=" + std::to_string(order) + " n=" + std::to_string(n);
}

// Window surrogate for the theorem hypotheses around index n at order k:
// verify orders <= k+1 over [max(1, n), n+k+2]. Family-certified sources
// skip the scan.
void require_hypothesis(const TermSource& src, std::int64_t n, int k) {
  Window window{std::max<std::int64_t>(1, n), n + k + 2};
  MonotoneVerdict verdict = check_monotone_decreasing(src, k + 1, window);
  if (!verdict.passed()) {
    raise(errc::hypothesis_failed,
          "monotone-difference hypothesis failed on the checked window",
          window_context(verdict.fail_order, verdict.fail_index));
  }
}

// Leibniz needs only the terms themselves to decrease: order 0 around n.
void require_leibniz_hypothesis(const TermSource& src, std::int64_t n) {
  const std::int64_t lo = std::max<std::int64_t>(1, n);
  Window window{lo, lo};
  MonotoneVerdict verdict = check_monotone_decreasing(src, 0, window);
  if (!verdict.passed()) {
    raise(errc::hypothesis_failed,
          "terms are not monotonically decreasing on the checked window",
          window_context(verdict.fail_order, verdict.fail_index));
  }
}

void check_order_k(int k) {
  if (k < 0) {
    raise(errc::invalid_argument, "order k must be >= 0", "k=" + std::to_string(k));
  }
  if (k > kMaxDifferenceOrder) {
    raise(errc::guard_exceeded, "order k is limited to 64", "k=" + std::to_string(k));
  }
}

// Delta^r a_n and Delta^r a_{n+1} for r = 0..k, one triangular fold.
struct DifferencePair {
  std::vector<Rational> at_n;       // Delta^r a_n
  std::vector<Rational> at_n_plus;  // Delta^r a_{n+1}
};

DifferencePair difference_pair(const TermSource& src, std::int64_t n, int k) {
  std::vector<Rational> level;
  level.reserve(static_cast<std::size_t>(k) + 2);
  for (int j = 0; j <= k + 1; ++j) {
    level.push_back(term(src, n + j));
  }
  DifferencePair out;
  out.at_n.reserve(static_cast<std::size_t>(k) + 1);
  out.at_n_plus.reserve(static_cast<std::size_t>(k) + 1);
  for (int r = 0;; ++r) {
    out.at_n.push_back(level[0]);
    out.at_n_plus.push_back(level[1]);
    if (r == k) break;
    for (std::size_t j = 0; j + 1 < level.size(); ++j) {
      level[j] -= level[j + 1];
    }
    level.pop_back();
  }
  return out;
}

int parity_sign(std::int64_t n) { return n % 2 == 0 ? 1 : -1; }

}  // namespace

RemainderInterval leibniz_bound(const TermSource& src, std::int64_t n) {
  if (n < 0) {
    raise(errc::out_of_range, "leibniz bound needs n >= 0", "n=" + std::to_string(n));
  }
  require_leibniz_hypothesis(src, n);

  RemainderInterval out;
  out.n = n;
  out.method = BoundMethod::leibniz();
  out.lower = Rational(0);
  out.upper = term(src, n + 1);
  // |R_n| > 0 holds whenever the tail genuinely alternates with strictly
  // decreasing terms, which the built-in families guarantee; a finite
  // sample cannot, so the claim stays non-strict there.
  out.lower_strict = src.spec.completely_monotone_family();
  out.upper_strict = false;  // the classical bound is <=
  out.sign = parity_sign(n);
  return out;
}

RemainderInterval johnsonbaugh_interval(const TermSource& src, std::int64_t n, int k) {
  check_order_k(k);
  if (n < 1) {
    raise(errc::out_of_range, "johnsonbaugh interval needs n >= 1",
          "n=" + std::to_string(n));
  }
  require_hypothesis(src, n, k);

  DifferencePair d = difference_pair(src, n, k);
  Rational lower;
  for (int r = 0; r <= k; ++r) {
    lower += d.at_n_plus[static_cast<std::size_t>(r)].div_pow2(static_cast<unsigned>(r + 1));
  }
  Rational upper = d.at_n[0].div_pow2(1);
  for (int r = 1; r <= k; ++r) {
    upper -= d.at_n[static_cast<std::size_t>(r)].div_pow2(static_cast<unsigned>(r + 1));
  }

  if (!(lower < upper)) {
    // Degenerate data (e.g. a constant sampled tail) collapses the
    // enclosure to an empty set; refuse rather than hand out a bogus
    // certificate.
    raise(errc::hypothesis_failed, "enclosure is degenerate (lower >= upper)",
          "n=" + std::to_string(n) + " k=" + std::to_string(k));
  }

  RemainderInterval out;
  out.n = n;
  out.method = BoundMethod::johnsonbaugh(k);
  out.lower = std::move(lower);
  out.upper = std::move(upper);
  out.lower_strict = true;
  out.upper_strict = true;
  out.sign = parity_sign(n);
  return out;
}

TValue t_value(const TermSource& src, std::int64_t n, int k) {
  check_order_k(k);
  if (n < 0) {
    raise(errc::out_of_range, "t_value needs n >= 0", "n=" + std::to_string(n));
  }
  require_hypothesis(src, n, k);

  DifferencePair d = difference_pair(src, n + 1, k);  // differences at n+1
  Rational correction;
  for (int r = 0; r <= k; ++r) {
    correction += d.at_n[static_cast<std::size_t>(r)].div_pow2(static_cast<unsigned>(r + 1));
  }
  Rational value = partial_sum(src, n);
  if (parity_sign(n) > 0) {
    value += correction;
  } else {
    value -= correction;
  }
  return {n, k, std::move(value)};
}

std::pair<Rational, Rational> t_interval(const TermSource& src, std::int64_t r, int k) {
  if (r < 1) {
    raise(errc::out_of_range, "t_interval needs r >= 1", "r=" + std::to_string(r));
  }
  Rational left = t_value(src, 2 * r, k).value;
  Rational right = t_value(src, 2 * r - 1, k).value;
  if (!(left <= right)) {
    raise(errc::hypothesis_failed, "T-interval is inverted; hypotheses do not hold",
          "r=" + std::to_string(r) + " k=" + std::to_string(k));
  }
  return {std::move(left), std::move(right)};
}

TrueRemainder true_remainder(const TermSource& src, std::int64_t n,
                             const ConstantTable& table) {
  if (!src.spec.known_limit) {
    raise(errc::no_known_limit, "series has no known limit", src.spec.id);
  }
  const ReferenceConstant& constant = table.get(*src.spec.known_limit);
  return {constant.value - partial_sum(src, n), constant.abs_error_bound};
}

namespace {

RemainderInterval bound_at(const TermSource& src, std::int64_t n, const BoundMethod& method) {
  return method.kind == BoundMethod::Kind::leibniz ? leibniz_bound(src, n)
                                                   : johnsonbaugh_interval(src, n, method.k);
}

}  // namespace

std::int64_t first_n_guaranteed(const TermSource& src, const Rational& eps,
                                BoundMethod method) {
  if (!eps.is_positive()) {
    raise(errc::invalid_argument, "eps must be > 0", eps.to_string());
  }
  if (method.kind == BoundMethod::Kind::johnsonbaugh) check_order_k(method.k);

  const std::int64_t n_min = method.kind == BoundMethod::Kind::leibniz ? 0 : 1;
  const std::int64_t n_max = kSolveGuard;
  auto certifies = [&](std::int64_t n) {
    return bound_at(src, n, method).certifies_below(eps);
  };

  if (src.spec.family == Family::sampled) {
    // Linear scan until the window outruns the sample. A hypothesis
    // refusal propagates: certification never skips a bad index.
    for (std::int64_t n = n_min; n <= n_max; ++n) {
      try {
        if (certifies(n)) return n;
      } catch (const Error& e) {
        if (e.code() == errc::out_of_range) break;
        throw;
      }
    }
    raise(errc::unreachable_eps, "no sampled index certifies the requested eps",
          "eps=" + eps.to_string());
  }

  // Galloping: the certifying predicate is monotone in n for completely
  // monotone families, so double until success then binary search.
  if (certifies(n_min)) return n_min;
  std::int64_t lo = n_min;                 // known failure
  std::int64_t hi = std::max<std::int64_t>(1, 2 * n_min);
  while (true) {
    if (hi > n_max) {
      if (!certifies(n_max)) {
        raise(errc::unreachable_eps, "eps not certified within the n <= 1000000 guard",
              "eps=" + eps.to_string());
      }
      hi = n_max;
      break;
    }
    if (certifies(hi)) break;
    lo = hi;
    hi *= 2;
  }
  while (hi - lo > 1) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    (certifies(mid) ? hi : lo) = mid;
  }
  return hi;
}

std::int64_t first_n_true(const TermSource& src, const Rational& eps,
                          const ConstantTable& table) {
  if (!src.spec.known_limit) {
    raise(errc::no_known_limit, "series has no known limit", src.spec.id);
  }
  if (!(eps > pow10(-40))) {
    raise(errc::invalid_argument, "eps must exceed 10^-40 for true-remainder search",
          eps.to_string());
  }
  const ReferenceConstant& constant = table.get(*src.spec.known_limit);

  const std::int64_t n_max =
      src.spec.family == Family::sampled
          ? static_cast<std::int64_t>(src.spec.samples.size())
          : kSolveGuard;

  // Incremental scan; the comparison works on raw cross products so the
  // growing partial-sum denominators are never re-canonicalized.
  Rational sum;
  for (std::int64_t n = 0; n <= n_max; ++n) {
    if (n > 0) {
      Rational t = term(src, n);
      if (n % 2 == 0) {
        sum -= t;
      } else {
        sum += t;
      }
    }
    if (compare_abs_diff(constant.value, sum, eps) == std::strong_ordering::less) {
      return n;
    }
  }
  raise(errc::unreachable_eps, "eps not reached within the n <= 1000000 guard",
        "eps=" + eps.to_string());
}

}  // namespace altsum
