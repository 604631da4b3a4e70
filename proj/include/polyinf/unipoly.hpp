#pragma once

#include <string>
#include <utility>
#include <vector>

#include "polyinf/interval.hpp"
#include "polyinf/rational.hpp"

namespace polyinf {

/// Dense univariate polynomial over the rationals. coeffs()[i] multiplies
/// x^i; the highest stored coefficient is nonzero, and the zero polynomial
/// has no coefficients (degree -1).
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);
  UniPoly(std::initializer_list<long> coeffs);

  static UniPoly constant(const Rational& c);
  static UniPoly monomial(const Rational& c, int degree);
  static UniPoly identity() { return monomial(Rational(1), 1); }

  [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  [[nodiscard]] bool is_constant() const { return coeffs_.size() <= 1; }
  [[nodiscard]] const std::vector<Rational>& coeffs() const { return coeffs_; }
  [[nodiscard]] Rational coeff(int i) const;
  [[nodiscard]] const Rational& leading() const { return coeffs_.back(); }

  [[nodiscard]] Rational eval(const Rational& x) const;
  [[nodiscard]] Interval eval(const Interval& x) const;
  [[nodiscard]] double eval(double x) const;

  [[nodiscard]] UniPoly derivative() const;
  /// p(q(x)).
  [[nodiscard]] UniPoly compose(const UniPoly& q) const;
  /// p(x + a), by Taylor shift.
  [[nodiscard]] UniPoly shifted(const Rational& a) const;
  /// p(s x).
  [[nodiscard]] UniPoly scaled(const Rational& s) const;
  /// x^deg p(1/x).
  [[nodiscard]] UniPoly reversed() const;
  /// Integer coefficients with gcd 1 and positive leading coefficient.
  [[nodiscard]] UniPoly primitive() const;
  [[nodiscard]] UniPoly monic() const;
  /// Least common multiple of the coefficient denominators times p.
  [[nodiscard]] UniPoly cleared() const;

  [[nodiscard]] std::string to_string(const std::string& var = "x") const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const Rational& s);

  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

UniPoly operator+(UniPoly a, const UniPoly& b);
UniPoly operator-(UniPoly a, const UniPoly& b);
UniPoly operator-(const UniPoly& a);
UniPoly operator*(const UniPoly& a, const UniPoly& b);
UniPoly operator*(const Rational& s, UniPoly a);
UniPoly pow(const UniPoly& p, int n);

/// Euclidean division over Q. Throws DegenerateInput on zero divisor.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
/// Quotient a / b; the caller asserts the division is exact.
UniPoly exact_quotient(const UniPoly& a, const UniPoly& b);
bool divides(const UniPoly& d, const UniPoly& p);

/// Greatest common divisor in primitive normalization; gcd(0, 0) = 0.
UniPoly gcd(const UniPoly& a, const UniPoly& b);

struct ExtendedGcd {
  UniPoly gcd;  // monic
  UniPoly s;    // s*a + t*b = gcd
  UniPoly t;
};
ExtendedGcd extended_gcd(const UniPoly& a, const UniPoly& b);

/// p / gcd(p, p'), primitive normalized. Throws DegenerateInput on zero.
UniPoly squarefree_part(const UniPoly& p);

/// Resultant of two univariate polynomials over Q (Sylvester convention).
Rational resultant(const UniPoly& a, const UniPoly& b);

}  // namespace polyinf
