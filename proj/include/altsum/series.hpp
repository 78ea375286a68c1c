#pragma once

// Catalog of alternating series a_1 - a_2 + a_3 - ... with positive terms,
// and exact partial-sum evaluation.
//
// The built-in families 1/(c + d(n-1)) and 1/n^s are completely monotone:
// every order of forward difference is nonnegative and decreasing, so all
// hypothesis checks downstream are certified by construction. Sampled
// series carry no such guarantee and are verified per window.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "altsum/rational.hpp"

namespace altsum {

enum class Family { reciprocal_linear, reciprocal_power, sampled };

enum class Backend { exact, float64 };

std::string_view to_string(Family family);
std::string_view to_string(Backend backend);

struct SeriesSpec {
  std::string id;
  Family family = Family::reciprocal_linear;
  Rational c;  // reciprocal_linear: a_n = 1/(c + d(n-1)), c, d > 0
  Rational d;
  Rational s;  // reciprocal_power: a_n = 1/n^s, 0 < s <= 4, exact only for integer s
  std::vector<Rational> samples;
  std::string display_name;
  std::optional<std::string> known_limit;  // reference-constant name

  static SeriesSpec reciprocal_linear(Rational c, Rational d);
  static SeriesSpec reciprocal_power(Rational s);
  static SeriesSpec sampled(std::vector<Rational> values);

  // True for the built-in families, whose complete monotonicity certifies
  // the monotone-difference hypotheses at every order.
  bool completely_monotone_family() const { return family != Family::sampled; }
};

struct TermSource {
  SeriesSpec spec;
  Backend backend = Backend::exact;
};

// Always contains `pi4` (a_n = 1/(2n-1), limit pi_over_4) and `ln2`
// (a_n = 1/n, limit ln2), in stable order.
const std::vector<SeriesSpec>& catalog();

// CLI designators: pi4 | ln2 | lin:c,d | pow:s | file:<path>.
// A series file holds one positive rational ("p/q" or decimal) per line;
// blank lines and '#' comments are skipped.
SeriesSpec parse_series(std::string_view designator);

// Syntax-only validation of a designator (no file I/O); throws parse_error.
void validate_series_designator(std::string_view designator);

// Exact-backend guard: partial sums beyond this are refused.
inline constexpr std::int64_t kExactSumGuard = 1'000'000;

// a_n > 0, exact. Requires an exact-backend source.
Rational term(const TermSource& src, std::int64_t n);

// Nearest-even double view of a_n. Requires a float64-backend source.
// Non-integer power exponents evaluate through std::pow and are not
// guaranteed correctly rounded.
double term_f64(const TermSource& src, std::int64_t n);

// S_n = sum_{j=1..n} (-1)^(j-1) a_j, S_0 = 0. Exact backend, n <= guard.
Rational partial_sum(const TermSource& src, std::int64_t n);

// Compensated (Neumaier) float64 partial sum over nearest-even terms.
double partial_sum_f64(const TermSource& src, std::int64_t n);

namespace detail {
// Exact a_n straight off the SeriesSpec, regardless of the TermSource
// backend tag. Hypothesis certification always runs on exact values.
Rational exact_term_of_spec(const SeriesSpec& spec, std::int64_t n);
}  // namespace detail

}  // namespace altsum
