#pragma once

#include <algorithm>

#include "polyinf/rational.hpp"

namespace polyinf {

/// Closed rational interval [lo, hi] with outward-exact arithmetic.
struct Interval {
  Rational lo;
  Rational hi;

  Interval() = default;
  explicit Interval(const Rational& point) : lo(point), hi(point) {}
  Interval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {}

  [[nodiscard]] bool contains_zero() const { return lo <= 0 && hi >= 0; }
  [[nodiscard]] bool is_point() const { return lo == hi; }
  [[nodiscard]] Rational width() const { return hi - lo; }
  [[nodiscard]] Rational midpoint() const { return (lo + hi) / 2; }
  [[nodiscard]] bool overlaps(const Interval& o) const { return lo <= o.hi && o.lo <= hi; }
  [[nodiscard]] bool inside_open(const Interval& o) const { return o.lo < lo && hi < o.hi; }
};

inline Interval operator+(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }
inline Interval operator-(const Interval& a, const Interval& b) { return {a.lo - b.hi, a.hi - b.lo}; }
inline Interval operator-(const Interval& a) { return {-a.hi, -a.lo}; }

inline Interval operator*(const Interval& a, const Interval& b) {
  if (a.is_point() && b.is_point()) return Interval(a.lo * b.lo);
  Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  return {std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4})};
}

inline Interval operator*(const Rational& s, const Interval& a) {
  if (s >= 0) return {s * a.lo, s * a.hi};
  return {s * a.hi, s * a.lo};
}

}  // namespace polyinf
