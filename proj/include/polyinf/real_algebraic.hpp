#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polyinf/interval.hpp"
#include "polyinf/unipoly.hpp"

namespace polyinf {

enum class Ordering { Less, Equal, Greater };

/// A real root of a square-free primitive polynomial, selected by an
/// isolating interval. Rational values always carry a degree-1 polynomial
/// and a point interval.
class RealAlgebraic {
 public:
  RealAlgebraic() : RealAlgebraic(Rational(0)) {}
  RealAlgebraic(const Rational& r);  // NOLINT: rationals convert implicitly
  RealAlgebraic(long v) : RealAlgebraic(Rational(v)) {}  // NOLINT

  /// The unique root of p in iv. p need not be square-free; iv must isolate
  /// one root of p's square-free part and either be a point or have a sign
  /// change at its endpoints.
  static RealAlgebraic from_root(const UniPoly& p, const Interval& iv);
  /// All real roots of p, ascending.
  static std::vector<RealAlgebraic> roots_of(const UniPoly& p);

  [[nodiscard]] const UniPoly& polynomial() const { return poly_; }
  [[nodiscard]] const Interval& interval() const { return iv_; }
  [[nodiscard]] bool is_rational() const { return iv_.is_point(); }
  [[nodiscard]] const Rational& rational_value() const { return iv_.lo; }

  [[nodiscard]] int sign() const;
  /// Enclosure of width at most `width`.
  [[nodiscard]] Interval approx(const Rational& width) const;
  [[nodiscard]] double to_double(double width = 1e-17) const;
  [[nodiscard]] std::string to_string() const;

  /// Square root of a positive value.
  [[nodiscard]] RealAlgebraic sqrt() const;
  [[nodiscard]] RealAlgebraic negated() const;

 private:
  RealAlgebraic(UniPoly p, Interval iv) : poly_(std::move(p)), iv_(std::move(iv)) {}
  UniPoly poly_;
  Interval iv_;
};

Ordering compare(const RealAlgebraic& a, const RealAlgebraic& b);
inline bool operator==(const RealAlgebraic& a, const RealAlgebraic& b) { return compare(a, b) == Ordering::Equal; }
inline bool operator<(const RealAlgebraic& a, const RealAlgebraic& b) { return compare(a, b) == Ordering::Less; }
inline int sign(const RealAlgebraic& a) { return a.sign(); }

/// Element of the extended real line: -inf, a real algebraic number, +inf.
class ExtendedValue {
 public:
  enum class Kind { NegInf, Finite, PosInf };
  ExtendedValue() : kind_(Kind::PosInf) {}
  ExtendedValue(RealAlgebraic v) : kind_(Kind::Finite), value_(std::move(v)) {}  // NOLINT
  static ExtendedValue pos_inf() { return ExtendedValue(Kind::PosInf); }
  static ExtendedValue neg_inf() { return ExtendedValue(Kind::NegInf); }

  [[nodiscard]] Kind kind() const { return kind_; }
  [[nodiscard]] bool is_finite() const { return kind_ == Kind::Finite; }
  [[nodiscard]] bool is_pos_inf() const { return kind_ == Kind::PosInf; }
  [[nodiscard]] bool is_neg_inf() const { return kind_ == Kind::NegInf; }
  [[nodiscard]] const RealAlgebraic& value() const { return *value_; }
  [[nodiscard]] std::string to_string() const;
  [[nodiscard]] double to_double() const;

 private:
  explicit ExtendedValue(Kind k) : kind_(k) {}
  Kind kind_;
  std::optional<RealAlgebraic> value_;
};

Ordering compare(const ExtendedValue& a, const ExtendedValue& b);
inline bool operator==(const ExtendedValue& a, const ExtendedValue& b) { return compare(a, b) == Ordering::Equal; }
inline bool operator<(const ExtendedValue& a, const ExtendedValue& b) { return compare(a, b) == Ordering::Less; }
inline bool operator<=(const ExtendedValue& a, const ExtendedValue& b) { return compare(a, b) != Ordering::Greater; }

/// Least element; +inf for the empty list.
ExtendedValue min_of_set(const std::vector<ExtendedValue>& values);
ExtendedValue max_of_set(const std::vector<ExtendedValue>& values);

/// Append v unless an equal value is already present.
void insert_unique(std::vector<RealAlgebraic>& set, const RealAlgebraic& v);

}  // namespace polyinf
