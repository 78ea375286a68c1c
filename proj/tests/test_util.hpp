#pragma once

// Shared helpers for the test suites.

#include <cstdint>
#include <random>
#include <string_view>

#include "altsum/rational.hpp"
#include "altsum/series.hpp"

namespace altsum::testing {

inline Rational R(std::string_view text) { return Rational::parse(text); }

inline TermSource src(std::string_view designator, Backend backend = Backend::exact) {
  return {parse_series(designator), backend};
}

inline TermSource sampled_src(std::vector<Rational> values,
                              Backend backend = Backend::exact) {
  return {SeriesSpec::sampled(std::move(values)), backend};
}

// Deterministic generator of small random rationals for property tests.
class RationalGen {
 public:
  explicit RationalGen(std::uint64_t seed) : rng_(seed) {}

  Rational next(long max_abs_num = 1000, long max_den = 1000) {
    std::uniform_int_distribution<long> num(-max_abs_num, max_abs_num);
    std::uniform_int_distribution<long> den(1, max_den);
    return Rational(num(rng_), den(rng_));
  }

  Rational next_positive(long max_num = 1000, long max_den = 1000) {
    std::uniform_int_distribution<long> num(1, max_num);
    std::uniform_int_distribution<long> den(1, max_den);
    return Rational(num(rng_), den(rng_));
  }

  long next_int(long lo, long hi) {
    std::uniform_int_distribution<long> d(lo, hi);
    return d(rng_);
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace altsum::testing
