#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "polyinf/rational.hpp"
#include "polyinf/unipoly.hpp"

namespace polyinf {

enum class Var { X, Y };

/// Sparse bivariate polynomial in x, y over Q. Keys are (deg_x, deg_y);
/// zero coefficients are never stored.
class MultiPoly {
 public:
  using Exponent = std::pair<int, int>;
  using Terms = std::map<Exponent, Rational>;

  MultiPoly() = default;
  explicit MultiPoly(Terms terms);

  static MultiPoly constant(const Rational& c);
  static MultiPoly x();
  static MultiPoly y();
  static MultiPoly monomial(const Rational& c, int dx, int dy);
  /// Embed a univariate polynomial in the chosen variable.
  static MultiPoly from_uni(const UniPoly& p, Var v);
  /// sum_j coeffs[j](x) y^j
  static MultiPoly from_coeffs_in_y(const std::vector<UniPoly>& coeffs);

  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] bool is_constant() const;
  [[nodiscard]] Rational coeff(int dx, int dy) const;
  [[nodiscard]] int total_degree() const;
  [[nodiscard]] int degree(Var v) const;
  [[nodiscard]] int degree_x() const { return degree(Var::X); }
  [[nodiscard]] int degree_y() const { return degree(Var::Y); }

  /// Coefficients of y^0, y^1, ... as polynomials in x.
  [[nodiscard]] std::vector<UniPoly> coeffs_in_y() const;
  [[nodiscard]] std::vector<UniPoly> coeffs_in(Var v) const;

  [[nodiscard]] MultiPoly derivative(Var v) const;
  [[nodiscard]] MultiPoly swapped() const;

  [[nodiscard]] Rational eval(const Rational& x, const Rational& y) const;
  [[nodiscard]] double eval(double x, double y) const;
  /// f(x0, y) as a polynomial in y (v = X) or f(x, y0) in x (v = Y).
  [[nodiscard]] UniPoly substitute(Var v, const Rational& value) const;
  /// f(a x + b y + c, d x + e y + g); used for rotations and shifts.
  [[nodiscard]] MultiPoly affine_substitute(const Rational& a, const Rational& b, const Rational& c,
                                            const Rational& d, const Rational& e,
                                            const Rational& g) const;

  /// Integer coefficients with gcd 1 and a positive leading coefficient in
  /// graded-lex order (total degree first, then deg_x).
  [[nodiscard]] MultiPoly normalized() const;
  [[nodiscard]] Rational leading_coefficient() const;

  [[nodiscard]] std::string to_string() const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& s);

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

MultiPoly operator+(MultiPoly a, const MultiPoly& b);
MultiPoly operator-(MultiPoly a, const MultiPoly& b);
MultiPoly operator-(const MultiPoly& a);
MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
MultiPoly operator*(const Rational& s, MultiPoly a);
MultiPoly pow(const MultiPoly& p, int n);

}  // namespace polyinf
