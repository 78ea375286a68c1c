#include "altsum/rational.hpp"

#include <cctype>
#include <cmath>
#include <ostream>

#include "altsum/error.hpp"

namespace altsum {

namespace {

mpq_class make_canonical(mpz_class num, mpz_class den) {
  if (sgn(den) == 0) {
    raise(errc::division_by_zero, "rational with zero denominator");
  }
  mpq_class q;
  mpq_set_num(q.get_mpq_t(), num.get_mpz_t());
  mpq_set_den(q.get_mpq_t(), den.get_mpz_t());
  mpq_canonicalize(q.get_mpq_t());
  return q;
}

}  // namespace

Rational::Rational(long num, long den) : q_(make_canonical(mpz_class(num), mpz_class(den))) {}

Rational::Rational(mpz_class num, mpz_class den)
    : q_(make_canonical(std::move(num), std::move(den))) {}

Rational::Rational(mpq_class q) : q_(std::move(q)) {
  mpq_canonicalize(q_.get_mpq_t());
}

Rational Rational::operator-() const {
  Rational out;
  mpq_neg(out.q_.get_mpq_t(), q_.get_mpq_t());
  return out;
}

Rational& Rational::operator+=(const Rational& rhs) {
  q_ += rhs.q_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  q_ -= rhs.q_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  q_ *= rhs.q_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) {
    raise(errc::division_by_zero, "division by zero");
  }
  q_ /= rhs.q_;
  return *this;
}

Rational Rational::abs() const {
  Rational out;
  mpq_abs(out.q_.get_mpq_t(), q_.get_mpq_t());
  return out;
}

Rational Rational::reciprocal() const {
  if (is_zero()) {
    raise(errc::division_by_zero, "reciprocal of zero");
  }
  Rational out;
  mpq_inv(out.q_.get_mpq_t(), q_.get_mpq_t());
  return out;
}

Rational Rational::div_pow2(unsigned k) const {
  Rational out;
  mpq_div_2exp(out.q_.get_mpq_t(), q_.get_mpq_t(), k);
  return out;
}

std::string Rational::to_string() const {
  std::string s = q_.get_num().get_str();
  if (q_.get_den() != 1) {
    s += '/';
    s += q_.get_den().get_str();
  }
  return s;
}

std::string Rational::decimal_string(unsigned digits) const {
  if (digits > kMaxDecimalDigits) {
    raise(errc::guard_exceeded, "decimal rendering limited to 1000 fractional digits");
  }
  mpz_class num = ::abs(q_.get_num());
  const mpz_class& den = q_.get_den();

  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  num *= scale;

  mpz_class quot, rem;
  mpz_fdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());

  // round half to even on the discarded fraction rem/den
  rem *= 2;
  int c = cmp(rem, den);
  if (c > 0 || (c == 0 && mpz_odd_p(quot.get_mpz_t()))) {
    quot += 1;
  }

  std::string body = quot.get_str();
  if (digits > 0) {
    if (body.size() <= digits) {
      body.insert(0, digits + 1 - body.size(), '0');
    }
    body.insert(body.size() - digits, 1, '.');
  }
  if (is_negative() && sgn(quot) != 0) {
    body.insert(0, 1, '-');
  }
  return body;
}

double Rational::to_double() const {
  if (is_zero()) return 0.0;

  mpz_class a = ::abs(q_.get_num());
  mpz_class b = q_.get_den();
  const double sign_mul = is_negative() ? -1.0 : 1.0;

  // Scale so that floor(a/b) carries a couple of bits beyond the target
  // significand, then round on the quotient with the remainder as sticky.
  const long ea = static_cast<long>(mpz_sizeinbase(a.get_mpz_t(), 2));
  const long eb = static_cast<long>(mpz_sizeinbase(b.get_mpz_t(), 2));
  long shift = 55 - (ea - eb);
  if (shift > 0) {
    mpz_mul_2exp(a.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(shift));
  } else if (shift < 0) {
    mpz_mul_2exp(b.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(-shift));
  }

  mpz_class quot, rem;
  mpz_fdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());

  const long qbits = static_cast<long>(mpz_sizeinbase(quot.get_mpz_t(), 2));
  const long exp2 = qbits - 1 - shift;  // floor(log2 |value|)

  // Effective precision: 53 bits in the normal range, fewer once the value
  // sinks into the subnormals.
  long prec = 53;
  if (exp2 < -1022) {
    prec = 53 - (-1022 - exp2);
    if (prec <= 0) {
      // |value| < 2^-1074: nearest is 0 or the minimum subnormal.
      // Compare |value| against 2^-1075 (the midpoint; tie rounds to 0).
      mpz_class lhs = ::abs(q_.get_num());
      mpz_mul_2exp(lhs.get_mpz_t(), lhs.get_mpz_t(), 1075);
      int c = cmp(lhs, q_.get_den());
      return c > 0 ? sign_mul * 0x1p-1074 : sign_mul * 0.0;
    }
  }

  const long drop = qbits - prec;  // >= 2 by the choice of shift
  bool sticky = sgn(rem) != 0;
  for (long i = 0; !sticky && i < drop - 1; ++i) {
    sticky = mpz_tstbit(quot.get_mpz_t(), static_cast<unsigned long>(i)) != 0;
  }
  const bool round_bit = mpz_tstbit(quot.get_mpz_t(), static_cast<unsigned long>(drop - 1)) != 0;
  mpz_fdiv_q_2exp(quot.get_mpz_t(), quot.get_mpz_t(), static_cast<unsigned long>(drop));
  if (round_bit && (sticky || mpz_odd_p(quot.get_mpz_t()))) {
    quot += 1;
  }

  // quot <= 2^prec <= 2^53, exact in a double; ldexp handles overflow.
  return sign_mul * std::ldexp(mpz_get_d(quot.get_mpz_t()), static_cast<int>(drop - shift));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.to_string();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view text, std::string_view whole) {
  bool neg = false;
  std::string_view body = text;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    neg = body.front() == '-';
    body.remove_prefix(1);
  }
  if (!all_digits(body)) {
    raise(errc::parse_error, "invalid rational literal", std::string(whole));
  }
  mpz_class v(std::string(body), 10);
  return neg ? mpz_class(-v) : v;
}

Rational parse_decimal(std::string_view text, std::string_view whole) {
  bool neg = false;
  std::string_view body = text;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    neg = body.front() == '-';
    body.remove_prefix(1);
  }

  long exp10 = 0;
  if (auto epos = body.find_first_of("eE"); epos != std::string_view::npos) {
    std::string_view etext = body.substr(epos + 1);
    body = body.substr(0, epos);
    bool eneg = false;
    if (!etext.empty() && (etext.front() == '+' || etext.front() == '-')) {
      eneg = etext.front() == '-';
      etext.remove_prefix(1);
    }
    if (!all_digits(etext) || etext.size() > 6) {
      raise(errc::parse_error, "invalid exponent in rational literal", std::string(whole));
    }
    exp10 = std::stol(std::string(etext));
    if (eneg) exp10 = -exp10;
  }

  std::string mantissa;
  long frac_digits = 0;
  if (auto dot = body.find('.'); dot != std::string_view::npos) {
    std::string_view ip = body.substr(0, dot);
    std::string_view fp = body.substr(dot + 1);
    if (ip.empty() && fp.empty()) {
      raise(errc::parse_error, "invalid rational literal", std::string(whole));
    }
    if ((!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp))) {
      raise(errc::parse_error, "invalid rational literal", std::string(whole));
    }
    mantissa = std::string(ip) + std::string(fp);
    frac_digits = static_cast<long>(fp.size());
  } else {
    if (!all_digits(body)) {
      raise(errc::parse_error, "invalid rational literal", std::string(whole));
    }
    mantissa = std::string(body);
  }
  if (mantissa.empty()) {
    raise(errc::parse_error, "invalid rational literal", std::string(whole));
  }

  mpz_class m(mantissa, 10);
  if (neg) m = -m;
  const long e = exp10 - frac_digits;
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(e < 0 ? -e : e));
  return e >= 0 ? Rational(m * p, 1) : Rational(std::move(m), std::move(p));
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  if (text.empty()) {
    raise(errc::parse_error, "empty rational literal");
  }
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    mpz_class num = parse_integer(text.substr(0, slash), text);
    mpz_class den = parse_integer(text.substr(slash + 1), text);
    return Rational(std::move(num), std::move(den));
  }
  if (text.find('.') != std::string_view::npos ||
      text.find_first_of("eE") != std::string_view::npos) {
    return parse_decimal(text, text);
  }
  return Rational(parse_integer(text, text), 1);
}

std::strong_ordering compare_abs_diff(const Rational& a, const Rational& b,
                                      const Rational& eps) {
  // |a/b - c/d| vs e/f  <=>  |ad - cb| * f vs e * (bd), with b, d, f > 0.
  mpz_class lhs = a.numerator() * b.denominator() - b.numerator() * a.denominator();
  mpz_abs(lhs.get_mpz_t(), lhs.get_mpz_t());
  lhs *= eps.denominator();
  mpz_class rhs = eps.numerator() * a.denominator() * b.denominator();
  return cmp(lhs, rhs) <=> 0;
}

Rational pow10(long k) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(k < 0 ? -k : k));
  return k >= 0 ? Rational(std::move(p), 1) : Rational(1, std::move(p));
}

}  // namespace altsum
