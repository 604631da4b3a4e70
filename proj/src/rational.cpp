#include "polyinf/rational.hpp"

#include <cmath>
#include <stdexcept>

#include "polyinf/errors.hpp"

namespace polyinf {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw ParseError("empty rational literal");
  auto dot = s.find('.');
  if (dot != std::string::npos) {
    bool negative = s[0] == '-';
    std::string body = negative || s[0] == '+' ? s.substr(1) : s;
    dot = body.find('.');
    std::string whole = body.substr(0, dot);
    std::string frac = body.substr(dot + 1);
    if (whole.empty()) whole = "0";
    if (frac.empty() || frac.find_first_not_of("0123456789") != std::string::npos ||
        whole.find_first_not_of("0123456789") != std::string::npos) {
      throw ParseError("malformed decimal literal '" + s + "'");
    }
    Integer num(whole + frac, 10);
    Integer den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
    Rational r(num, den);
    r.canonicalize();
    return negative ? Rational(-r) : r;
  }
  Rational r;
  if (r.set_str(s, 10) != 0 || r.get_den() == 0) {
    throw ParseError("malformed rational literal '" + s + "'");
  }
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

Rational pow(const Rational& base, long exponent) {
  if (exponent < 0) {
    if (base == 0) throw DegenerateInput("zero raised to a negative power");
    return pow(Rational(1) / base, -exponent);
  }
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(num, den);
}

Rational floor_rational(const Rational& r) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return Rational(q);
}

Rational ceil_rational(const Rational& r) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return Rational(q);
}

Rational simplest_between(const Rational& lo, const Rational& hi) {
  // Continued-fraction descent on [lo, hi].
  if (lo > hi) throw PreconditionError("simplest_between: empty interval");
  if (lo <= 0 && hi >= 0) return Rational(0);
  if (hi < 0) return -simplest_between(-hi, -lo);
  Rational fl = floor_rational(lo);
  if (fl == lo) return lo;
  if (fl + 1 <= hi) return fl + 1;
  // lo and hi share the integer part fl; recurse on reciprocals of the
  // fractional parts (order flips).
  Rational a = lo - fl;
  Rational b = hi - fl;
  Rational inner = simplest_between(Rational(1) / b, Rational(1) / a);
  return fl + Rational(1) / inner;
}

Rational from_double(double value) {
  if (!std::isfinite(value)) throw DegenerateInput("non-finite double");
  Rational r(value);
  return r;
}

}  // namespace polyinf
