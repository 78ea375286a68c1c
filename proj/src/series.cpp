#include "altsum/series.hpp"

#include <cmath>
#include <fstream>

#include "altsum/error.hpp"

namespace altsum {

std::string_view to_string(Family family) {
  switch (family) {
    case Family::reciprocal_linear: return "reciprocal_linear";
    case Family::reciprocal_power: return "reciprocal_power";
    case Family::sampled: return "sampled";
  }
  return "unknown";
}

std::string_view to_string(Backend backend) {
  return backend == Backend::exact ? "exact" : "float64";
}

SeriesSpec SeriesSpec::reciprocal_linear(Rational c, Rational d) {
  if (!c.is_positive() || !d.is_positive()) {
    raise(errc::invalid_argument, "reciprocal_linear requires c > 0 and d > 0");
  }
  SeriesSpec spec;
  spec.family = Family::reciprocal_linear;
  spec.id = "lin:" + c.to_string() + "," + d.to_string();
  spec.display_name = "1/(" + c.to_string() + " + " + d.to_string() + "(n-1))";
  spec.c = std::move(c);
  spec.d = std::move(d);
  return spec;
}

SeriesSpec SeriesSpec::reciprocal_power(Rational s) {
  if (!s.is_positive() || s > Rational(4)) {
    raise(errc::invalid_argument, "reciprocal_power requires 0 < s <= 4");
  }
  SeriesSpec spec;
  spec.family = Family::reciprocal_power;
  spec.id = "pow:" + s.to_string();
  spec.display_name = "1/n^" + s.to_string();
  spec.s = std::move(s);
  return spec;
}

SeriesSpec SeriesSpec::sampled(std::vector<Rational> values) {
  if (values.empty()) {
    raise(errc::invalid_argument, "sampled series needs at least one term");
  }
  for (const auto& v : values) {
    if (!v.is_positive()) {
      raise(errc::invalid_argument, "sampled series terms must be strictly positive");
    }
  }
  SeriesSpec spec;
  spec.family = Family::sampled;
  spec.id = "sampled";
  spec.display_name = "sampled(" + std::to_string(values.size()) + " terms)";
  spec.samples = std::move(values);
  return spec;
}

const std::vector<SeriesSpec>& catalog() {
  static const std::vector<SeriesSpec> entries = [] {
    std::vector<SeriesSpec> out;

    SeriesSpec pi4 = SeriesSpec::reciprocal_linear(Rational(1), Rational(2));
    pi4.id = "pi4";
    pi4.display_name = "1 - 1/3 + 1/5 - 1/7 + ... = pi/4";
    pi4.known_limit = "pi_over_4";
    out.push_back(std::move(pi4));

    SeriesSpec ln2 = SeriesSpec::reciprocal_linear(Rational(1), Rational(1));
    ln2.id = "ln2";
    ln2.display_name = "1 - 1/2 + 1/3 - 1/4 + ... = ln 2";
    ln2.known_limit = "ln2";
    out.push_back(std::move(ln2));

    return out;
  }();
  return entries;
}

namespace {

Rational parse_positive_rational(std::string_view text, const std::string& what) {
  Rational value = Rational::parse(text);
  if (!value.is_positive()) {
    raise(errc::parse_error, what + " must be strictly positive", std::string(text));
  }
  return value;
}

SeriesSpec load_sampled_file(std::string_view path_view) {
  std::string path(path_view);
  std::ifstream in(path);
  if (!in) {
    raise(errc::io_error, "cannot open series file", path);
  }
  std::vector<Rational> values;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    auto end = line.find_last_not_of(" \t\r");
    std::string token = line.substr(start, end - start + 1);
    if (token.front() == '#') continue;
    Rational value = Rational::parse(token);
    if (!value.is_positive()) {
      raise(errc::parse_error, "series terms must be strictly positive",
            path + ":" + std::to_string(lineno));
    }
    values.push_back(std::move(value));
  }
  if (values.empty()) {
    raise(errc::parse_error, "series file has no terms", path);
  }
  SeriesSpec spec = SeriesSpec::sampled(std::move(values));
  spec.id = "file:" + path;
  return spec;
}

}  // namespace

SeriesSpec parse_series(std::string_view designator) {
  for (const auto& entry : catalog()) {
    if (entry.id == designator) return entry;
  }
  if (designator.starts_with("lin:")) {
    std::string_view args = designator.substr(4);
    auto comma = args.find(',');
    if (comma == std::string_view::npos) {
      raise(errc::parse_error, "expected lin:c,d", std::string(designator));
    }
    return SeriesSpec::reciprocal_linear(
        parse_positive_rational(args.substr(0, comma), "c"),
        parse_positive_rational(args.substr(comma + 1), "d"));
  }
  if (designator.starts_with("pow:")) {
    Rational s = parse_positive_rational(designator.substr(4), "s");
    if (s > Rational(4)) {
      raise(errc::parse_error, "power exponent must satisfy 0 < s <= 4",
            std::string(designator));
    }
    return SeriesSpec::reciprocal_power(std::move(s));
  }
  if (designator.starts_with("file:")) {
    return load_sampled_file(designator.substr(5));
  }
  raise(errc::parse_error,
        "unknown series designator (expected pi4, ln2, lin:c,d, pow:s, or file:<path>)",
        std::string(designator));
}

void validate_series_designator(std::string_view designator) {
  if (designator.starts_with("file:")) {
    if (designator.size() == 5) {
      raise(errc::parse_error, "file: designator needs a path", std::string(designator));
    }
    return;  // content is checked when the file is read
  }
  parse_series(designator);
}

namespace {

void check_term_index(const SeriesSpec& spec, std::int64_t n) {
  if (n < 1) {
    raise(errc::out_of_range, "term index must be >= 1", "n=" + std::to_string(n));
  }
  if (spec.family == Family::sampled &&
      n > static_cast<std::int64_t>(spec.samples.size())) {
    raise(errc::out_of_range,
          "sampled series has only " + std::to_string(spec.samples.size()) + " terms",
          "n=" + std::to_string(n));
  }
}

void check_backend(const TermSource& src, Backend expected) {
  if (src.backend != expected) {
    raise(errc::backend_mismatch,
          std::string("operation requires the ") + std::string(to_string(expected)) +
              " backend, source is " + std::string(to_string(src.backend)));
  }
}

// Exact a_n straight off the SeriesSpec, independent of the source's
// backend tag. Shared by the exact term path and the hypothesis checker.
Rational spec_term(const SeriesSpec& spec, std::int64_t n) {
  check_term_index(spec, n);
  switch (spec.family) {
    case Family::reciprocal_linear:
      return (spec.c + spec.d * Rational(n - 1)).reciprocal();
    case Family::reciprocal_power: {
      if (!spec.s.is_integer()) {
        raise(errc::invalid_argument,
              "exact evaluation of 1/n^s requires integer s", "s=" + spec.s.to_string());
      }
      mpz_class den;
      mpz_class base(n);
      mpz_pow_ui(den.get_mpz_t(), base.get_mpz_t(),
                 spec.s.numerator().get_ui());
      return Rational(1, std::move(den));
    }
    case Family::sampled:
      return spec.samples[static_cast<std::size_t>(n - 1)];
  }
  raise(errc::invalid_argument, "unknown series family");
}

}  // namespace

namespace detail {
Rational exact_term_of_spec(const SeriesSpec& spec, std::int64_t n) {
  return spec_term(spec, n);
}
}  // namespace detail

Rational term(const TermSource& src, std::int64_t n) {
  check_backend(src, Backend::exact);
  return spec_term(src.spec, n);
}

double term_f64(const TermSource& src, std::int64_t n) {
  check_backend(src, Backend::float64);
  const SeriesSpec& spec = src.spec;
  if (spec.family == Family::reciprocal_power && !spec.s.is_integer()) {
    check_term_index(spec, n);
    return std::pow(static_cast<double>(n), -spec.s.to_double());
  }
  return spec_term(spec, n).to_double();
}

Rational partial_sum(const TermSource& src, std::int64_t n) {
  check_backend(src, Backend::exact);
  if (n < 0) {
    raise(errc::out_of_range, "partial sum index must be >= 0", "n=" + std::to_string(n));
  }
  if (n > kExactSumGuard) {
    raise(errc::guard_exceeded,
          "exact partial sums are limited to n <= 1000000; use the float64 backend "
          "for longer sums",
          "n=" + std::to_string(n));
  }
  Rational sum;
  for (std::int64_t j = 1; j <= n; ++j) {
    Rational t = spec_term(src.spec, j);
    if (j % 2 == 0) {
      sum -= t;
    } else {
      sum += t;
    }
  }
  return sum;
}

double partial_sum_f64(const TermSource& src, std::int64_t n) {
  check_backend(src, Backend::float64);
  if (n < 0) {
    raise(errc::out_of_range, "partial sum index must be >= 0", "n=" + std::to_string(n));
  }
  // Neumaier-compensated sum: the correction also captures steps where the
  // incoming term dominates the running sum.
  double sum = 0.0;
  double comp = 0.0;
  for (std::int64_t j = 1; j <= n; ++j) {
    double x = term_f64(src, j);
    if (j % 2 == 0) x = -x;
    const double t = sum + x;
    if (std::fabs(sum) >= std::fabs(x)) {
      comp += (sum - t) + x;
    } else {
      comp += (x - t) + sum;
    }
    sum = t;
  }
  return sum + comp;
}

}  // namespace altsum
