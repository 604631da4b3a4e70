#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "polyinf/interval.hpp"
#include "polyinf/multipoly.hpp"
#include "polyinf/real_algebraic.hpp"

namespace polyinf {

struct FeasibleSet {
  enum class Mode { Plane, Curve };
  Mode mode = Mode::Plane;
  MultiPoly g;  // Curve mode only

  static FeasibleSet plane() { return {}; }
  static FeasibleSet curve(MultiPoly g) { return {Mode::Curve, std::move(g)}; }
  [[nodiscard]] bool is_plane() const { return mode == Mode::Plane; }
};

/// A point of the critical set, given by rational boxes around its
/// coordinates, with the value of f there.
struct CriticalWitness {
  Interval x, y;
  RealAlgebraic value;
  bool on_positive_dimensional_part = false;
};

struct CriticalData {
  std::vector<RealAlgebraic> values;  // ascending, duplicate-free
  bool sigma_nonempty = false;
  bool has_positive_dimensional_part = false;
  std::vector<CriticalWitness> witnesses;  // one per value
};

/// f is a polynomial in x^2 + y^2: the tangency polynomial vanishes.
struct RadialFlag {};

/// Square-free tangency polynomial, or RadialFlag. Curve mode returns the
/// square-free part of g after checking that its zero set is unbounded
/// (UnsupportedInput otherwise).
std::variant<MultiPoly, RadialFlag> tangency_curve(const MultiPoly& f, const FeasibleSet& s);

/// No real point with g = g_x = g_y = 0.
bool licq_check(const MultiPoly& g);
/// A real point where g and its gradient vanish, if there is one.
std::optional<CriticalWitness> licq_violation(const MultiPoly& g);

/// f(Sigma(f, S)) exactly. Plane mode: grad f = 0. Curve mode: g = 0 and
/// f_x g_y - f_y g_x = 0 (LICQ assumed).
CriticalData critical_values(const MultiPoly& f, const FeasibleSet& s);

/// P with f(x, y) = P(x^2 + y^2); InternalConsistency if there is none.
UniPoly radial_profile(const MultiPoly& f);

std::string box_string(const Interval& x, const Interval& y);

}  // namespace polyinf
