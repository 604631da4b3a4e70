#pragma once

#include <memory>
#include <string>
#include <vector>

#include "polyinf/interval.hpp"
#include "polyinf/multipoly.hpp"
#include "polyinf/real_algebraic.hpp"
#include "polyinf/unipoly.hpp"

namespace polyinf {

class NumberField;
using FieldPtr = std::shared_ptr<NumberField>;

/// Q(theta) for one fixed real root theta of a square-free modulus m.
///
/// Zero tests use dynamic evaluation: when an element a shares a factor
/// with m, m is replaced by whichever of gcd(a, m) and m / gcd(a, m) still
/// vanishes at theta. The modulus and the isolating interval of theta are
/// therefore a cache that only ever tightens; the field they describe does
/// not change. Not safe for concurrent mutation.
class NumberField {
 public:
  /// The rational field (modulus x, theta = 0).
  static FieldPtr rationals();
  /// theta = the root of m inside iv (point interval for rational theta).
  static FieldPtr create(const UniPoly& m, const Interval& iv);
  static FieldPtr from_real(const RealAlgebraic& a);

  [[nodiscard]] const UniPoly& modulus() const { return modulus_; }
  [[nodiscard]] const Interval& theta_interval() const { return theta_; }
  [[nodiscard]] int degree() const { return modulus_.degree(); }
  [[nodiscard]] bool is_rational() const { return modulus_.degree() <= 1; }

  [[nodiscard]] UniPoly reduce(const UniPoly& a) const;
  /// Exact sign of a(theta); may tighten the modulus.
  int sign(const UniPoly& a);
  /// Enclosure of a(theta) no wider than `width` (relative for large values).
  Interval enclose(const UniPoly& a, const Rational& width);
  Interval enclose_once(const UniPoly& a) const;
  void refine_theta();
  /// Inverse of a nonzero element.
  UniPoly inverse(const UniPoly& a);
  /// a(theta) as a standalone real algebraic number.
  RealAlgebraic to_real(const UniPoly& a);

 private:
  NumberField(UniPoly m, Interval iv) : modulus_(std::move(m)), theta_(std::move(iv)) {}
  void split_on(const UniPoly& g);
  UniPoly modulus_;
  Interval theta_;
};

/// Element of a NumberField, as a polynomial in theta.
class Elem {
 public:
  Elem() = default;
  Elem(FieldPtr k, UniPoly rep) : field_(std::move(k)), rep_(std::move(rep)) {}
  Elem(FieldPtr k, const Rational& r) : field_(std::move(k)), rep_(UniPoly::constant(r)) {}

  [[nodiscard]] const FieldPtr& field() const { return field_; }
  [[nodiscard]] UniPoly rep() const { return field_->reduce(rep_); }
  [[nodiscard]] const UniPoly& raw_rep() const { return rep_; }

  [[nodiscard]] bool is_rational() const;
  [[nodiscard]] Rational rational_value() const;
  [[nodiscard]] int sign() const { return field_->sign(rep_); }
  [[nodiscard]] bool is_zero() const { return sign() == 0; }
  [[nodiscard]] RealAlgebraic to_real() const { return field_->to_real(rep_); }
  [[nodiscard]] double to_double() const;
  [[nodiscard]] Interval enclose(const Rational& width) const { return field_->enclose(rep_, width); }
  [[nodiscard]] Elem inverse() const { return {field_, field_->inverse(rep_)}; }
  [[nodiscard]] std::string to_string() const { return to_real().to_string(); }

  Elem& operator+=(const Elem& o);
  Elem& operator-=(const Elem& o);
  Elem& operator*=(const Elem& o);

 private:
  FieldPtr field_;
  UniPoly rep_;
};

Elem operator+(Elem a, const Elem& b);
Elem operator-(Elem a, const Elem& b);
Elem operator-(const Elem& a);
Elem operator*(Elem a, const Elem& b);
Elem operator*(const Rational& s, const Elem& a);
Elem operator/(const Elem& a, const Elem& b);
Elem pow(const Elem& a, int n);

/// The generator theta of k.
Elem generator(const FieldPtr& k);

/// prod (z - a(theta_i)) over the roots of the square-free m, monic.
UniPoly characteristic_polynomial(const UniPoly& a, const UniPoly& m);

/// A field homomorphism Q(theta) -> Q(gamma), given by the image of theta.
struct Embedding {
  FieldPtr target;
  UniPoly theta_image;  // polynomial in gamma
  [[nodiscard]] Elem apply(const Elem& a) const;
};

/// Dense polynomial over a number field; index = degree.
using KPoly = std::vector<Elem>;

void kpoly_trim(KPoly& p);  // removes leading coefficients that are exactly zero
int kpoly_degree(const KPoly& p);
KPoly kpoly_derivative(const KPoly& p);
KPoly kpoly_monic(const KPoly& p);
std::pair<KPoly, KPoly> kpoly_divmod(const KPoly& a, const KPoly& b);
/// Monic gcd over the field.
KPoly kpoly_gcd(KPoly a, KPoly b);
Elem kpoly_eval(const KPoly& p, const Elem& x);
KPoly kpoly_from_rational(const FieldPtr& k, const UniPoly& p);
/// f(x0, y) as a polynomial in y (v = X, x0 given) or f(x, y0) in x (v = Y).
KPoly substitute(const MultiPoly& f, Var v, const Elem& value);
Elem evaluate(const MultiPoly& f, const Elem& x, const Elem& y);

/// A real root of a polynomial over K, living in an extension field.
struct ExtRoot {
  Embedding embedding;  // K -> field containing the root
  Elem root;
};

/// The distinct real roots of p over K, ascending.
std::vector<ExtRoot> real_roots(const KPoly& p, const FieldPtr& k);

}  // namespace polyinf

namespace polyinf {
/// Resultant over the field (Euclidean remainder sequence).
Elem kpoly_resultant(const KPoly& a, const KPoly& b, const FieldPtr& k);
}  // namespace polyinf
