#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <cmath>
#include <cstdint>
#include <fstream>

#include "altsum/error.hpp"
#include "altsum/series.hpp"
#include "test_util.hpp"

using altsum::Backend;
using altsum::Error;
using altsum::Family;
using altsum::Rational;
using altsum::SeriesSpec;
using altsum::TermSource;
using altsum::catalog;
using altsum::errc;
using altsum::parse_series;
using altsum::partial_sum;
using altsum::partial_sum_f64;
using altsum::term;
using altsum::term_f64;
using altsum::testing::R;
using altsum::testing::sampled_src;
using altsum::testing::src;

TEST_CASE("catalog is stable and complete") {
  const auto& entries = catalog();
  REQUIRE(entries.size() >= 2);
  CHECK(entries[0].id == "pi4");
  CHECK(entries[1].id == "ln2");
  CHECK(*entries[0].known_limit == "pi_over_4");
  CHECK(*entries[1].known_limit == "ln2");
  // same object on every call
  CHECK(&catalog() == &entries);
}

TEST_CASE("terms: frozen examples") {
  CHECK(term(src("pi4"), 1) == Rational(1));
  CHECK(term(src("pi4"), 3) == R("1/5"));
  CHECK(term(src("ln2"), 2) == R("1/2"));
  CHECK(term(src("pi4"), 5000) == R("1/9999"));
}

TEST_CASE("partial sums: frozen examples") {
  CHECK(partial_sum(src("pi4"), 0) == Rational(0));
  CHECK(partial_sum(src("pi4"), 2) == R("2/3"));
  CHECK(partial_sum(src("ln2"), 3) == R("5/6"));
}

TEST_CASE("partial sum guard suggests the float backend") {
  CHECK_THROWS_AS(partial_sum(src("ln2"), 1000001), Error);
  try {
    partial_sum(src("ln2"), 1000001);
  } catch (const Error& e) {
    CHECK(e.code() == errc::guard_exceeded);
    CHECK(std::string(e.what()).find("float64") != std::string::npos);
  }
}

TEST_CASE("S_{n+1} - S_n = (-1)^n a_{n+1} exactly") {
  for (const char* id : {"pi4", "ln2"}) {
    TermSource source = src(id);
    Rational sum;
    for (std::int64_t n = 0; n <= 200; ++n) {
      Rational next = sum + (n % 2 == 0 ? term(source, n + 1) : -term(source, n + 1));
      CHECK(next - sum == (n % 2 == 0 ? term(source, n + 1) : -term(source, n + 1)));
      sum = next;
    }
    CHECK(sum == partial_sum(source, 201));
  }
}

TEST_CASE("catalog terms are strictly positive and strictly decreasing") {
  for (const char* id : {"pi4", "ln2"}) {
    TermSource source = src(id);
    Rational prev = term(source, 1);
    CHECK(prev.is_positive());
    for (std::int64_t n = 2; n <= 300; ++n) {
      Rational cur = term(source, n);
      CHECK(cur.is_positive());
      CHECK(cur < prev);
      prev = cur;
    }
  }
}

TEST_CASE("series designators parse") {
  SeriesSpec lin = parse_series("lin:1,2");
  CHECK(lin.family == Family::reciprocal_linear);
  CHECK(term({lin, Backend::exact}, 3) == R("1/5"));  // same family as pi4

  SeriesSpec pow = parse_series("pow:2");
  CHECK(pow.family == Family::reciprocal_power);
  CHECK(term({pow, Backend::exact}, 3) == R("1/9"));

  CHECK_THROWS_AS(parse_series("lin:0,1"), Error);
  CHECK_THROWS_AS(parse_series("lin:1"), Error);
  CHECK_THROWS_AS(parse_series("pow:5"), Error);
  CHECK_THROWS_AS(parse_series("pow:-1"), Error);
  CHECK_THROWS_AS(parse_series("nope"), Error);
  CHECK_THROWS_AS(parse_series("file:/does/not/exist"), Error);
}

TEST_CASE("series file loads sampled terms") {
  std::string path = "series_test_tmp.txt";
  {
    std::ofstream out(path);
    out << "# tail of the pi4 series\n1\n1/3\n0.2\n1/7\n";
  }
  SeriesSpec spec = parse_series("file:" + path);
  CHECK(spec.family == Family::sampled);
  CHECK(spec.samples.size() == 4);
  CHECK(term({spec, Backend::exact}, 3) == R("1/5"));
  CHECK_THROWS_AS(term({spec, Backend::exact}, 5), Error);
  try {
    term({spec, Backend::exact}, 5);
  } catch (const Error& e) {
    CHECK(e.code() == errc::out_of_range);
  }

  {
    std::ofstream out(path);
    out << "1\n-2\n";
  }
  CHECK_THROWS_AS(parse_series("file:" + path), Error);
}

TEST_CASE("sampled specs validate positivity") {
  CHECK_THROWS_AS(SeriesSpec::sampled({}), Error);
  CHECK_THROWS_AS(SeriesSpec::sampled({Rational(1), Rational(0)}), Error);
  CHECK_NOTHROW(SeriesSpec::sampled({R("1/2")}));
}

TEST_CASE("exact evaluation of non-integer powers is refused") {
  SeriesSpec spec = parse_series("pow:3/2");
  CHECK_THROWS_AS(term({spec, Backend::exact}, 2), Error);
  // the float64 view still works
  CHECK(term_f64({spec, Backend::float64}, 4) == doctest::Approx(1.0 / 8.0));
}

TEST_CASE("backend tags are enforced") {
  CHECK_THROWS_AS(term(src("pi4", Backend::float64), 1), Error);
  CHECK_THROWS_AS(term_f64(src("pi4"), 1), Error);
  CHECK_THROWS_AS(partial_sum(src("pi4", Backend::float64), 1), Error);
  CHECK_THROWS_AS(partial_sum_f64(src("pi4"), 1), Error);
  try {
    term(src("pi4", Backend::float64), 1);
  } catch (const Error& e) {
    CHECK(e.code() == errc::backend_mismatch);
  }
}

TEST_CASE("float64 terms are nearest-even conversions") {
  TermSource f64 = src("pi4", Backend::float64);
  TermSource exact = src("pi4");
  for (std::int64_t n : {1, 2, 3, 10, 999, 100001}) {
    CHECK(term_f64(f64, n) == term(exact, n).to_double());
  }
}

namespace {

std::int64_t ulp_distance(double a, double b) {
  auto bits = [](double x) {
    auto u = std::bit_cast<std::uint64_t>(x);
    return (u & 0x8000000000000000ull) ? -static_cast<std::int64_t>(u & 0x7fffffffffffffffull)
                                       : static_cast<std::int64_t>(u);
  };
  return std::abs(bits(a) - bits(b));
}

}  // namespace

TEST_CASE("float64 partial sums stay within 4 ulp of exact, n <= 10^4") {
  for (const char* id : {"pi4", "ln2"}) {
    TermSource exact = src(id);
    TermSource f64 = src(id, Backend::float64);

    // incremental mirrors of both backends, anchored to the real functions
    Rational exact_sum;
    double sum = 0.0;
    double comp = 0.0;
    std::int64_t worst = 0;
    for (std::int64_t n = 1; n <= 10000; ++n) {
      Rational t = term(exact, n);
      exact_sum += (n % 2 == 0) ? -t : t;
      double x = term_f64(f64, n);
      if (n % 2 == 0) x = -x;
      const double s = sum + x;
      if (std::fabs(sum) >= std::fabs(x)) {
        comp += (sum - s) + x;
      } else {
        comp += (x - s) + sum;
      }
      sum = s;
      worst = std::max(worst, ulp_distance(sum + comp, exact_sum.to_double()));
      if (n % 2500 == 0 || n == 1) {
        // mirrors match the public entry points bit for bit
        CHECK(sum + comp == partial_sum_f64(f64, n));
        CHECK(exact_sum == partial_sum(exact, n));
      }
    }
    CHECK(worst <= 4);
  }
}
