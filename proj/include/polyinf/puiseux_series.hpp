#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polyinf/number_field.hpp"
#include "polyinf/rational.hpp"

namespace polyinf {

struct SeriesTerm {
  Rational exponent;
  Elem coeff;
};

/// Puiseux series in a parameter t -> +inf: terms with strictly decreasing
/// rational exponents and nonzero coefficients in one number field. When
/// `truncation` is set, every exponent >= truncation is known exactly and
/// nothing is known below it; without it the series is an exact finite sum.
class PuiseuxSeries {
 public:
  PuiseuxSeries() : field_(NumberField::rationals()) {}
  explicit PuiseuxSeries(FieldPtr k) : field_(std::move(k)) {}
  PuiseuxSeries(FieldPtr k, std::vector<SeriesTerm> terms, std::optional<Rational> truncation);

  static PuiseuxSeries monomial(const Elem& c, const Rational& exponent);
  static PuiseuxSeries constant(const Elem& c) { return monomial(c, Rational(0)); }

  [[nodiscard]] const FieldPtr& field() const { return field_; }
  [[nodiscard]] const std::vector<SeriesTerm>& terms() const { return terms_; }
  [[nodiscard]] const std::optional<Rational>& truncation() const { return trunc_; }
  [[nodiscard]] bool is_exact() const { return !trunc_.has_value(); }
  /// Exactly zero (no terms, no truncation).
  [[nodiscard]] bool is_zero() const { return terms_.empty() && !trunc_; }
  /// lcm of the exponent denominators.
  [[nodiscard]] Integer ramification() const;
  [[nodiscard]] std::optional<SeriesTerm> leading() const;
  /// Coefficient of t^e when e is at or above the truncation order.
  [[nodiscard]] std::optional<Elem> coefficient(const Rational& e) const;

  /// Drop terms below `order` and record it as the truncation.
  [[nodiscard]] PuiseuxSeries truncated(const Rational& order) const;
  [[nodiscard]] PuiseuxSeries embedded(const Embedding& e) const;
  [[nodiscard]] double eval(double t) const;
  [[nodiscard]] std::string to_string(const std::string& var = "t") const;

 private:
  FieldPtr field_;
  std::vector<SeriesTerm> terms_;
  std::optional<Rational> trunc_;
};

PuiseuxSeries operator+(const PuiseuxSeries& a, const PuiseuxSeries& b);
PuiseuxSeries operator-(const PuiseuxSeries& a, const PuiseuxSeries& b);
PuiseuxSeries operator*(const PuiseuxSeries& a, const PuiseuxSeries& b);
PuiseuxSeries operator*(const Elem& c, const PuiseuxSeries& a);

std::string exponent_string(const Rational& e);

}  // namespace polyinf
