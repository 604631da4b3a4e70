#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "polyinf/multipoly.hpp"
#include "polyinf/number_field.hpp"
#include "polyinf/puiseux_series.hpp"
#include "polyinf/real_algebraic.hpp"

namespace polyinf {

namespace detail {
struct ExpansionState;
}

/// One real branch of a plane curve at infinity. The parameter coordinate
/// equals sigma * t with t -> +inf, and `coordinate` gives the other one as
/// a Puiseux series in t. The Euclidean norm grows like kappa * t^d.
struct BranchAtInfinity {
  Var parameter = Var::X;
  int sigma = 1;
  PuiseuxSeries coordinate;
  Rational norm_exponent{1};
  RealAlgebraic kappa{1};
  std::shared_ptr<const detail::ExpansionState> state;

  [[nodiscard]] std::string describe() const;
  /// Point of the branch at parameter t (double precision, truncated series).
  [[nodiscard]] std::pair<double, double> point(double t) const;
};

/// Every real branch at infinity of a square-free curve, each coordinate
/// series expanded at least to `max_order`. Throws PreconditionError for a
/// non-square-free or zero curve and TruncationExhausted when branches fail
/// to separate within the depth cap.
std::vector<BranchAtInfinity> branches_at_infinity(const MultiPoly& curve, const Rational& max_order);

/// The coordinate series recomputed to at least `order`.
PuiseuxSeries expand_coordinate(const BranchAtInfinity& branch, const Rational& order);

/// f along the branch as a series in the branch parameter, correct down to
/// max_order (re-expanding the branch as needed).
PuiseuxSeries compose_objective(const MultiPoly& f, const BranchAtInfinity& branch, const Rational& max_order);

/// Objective series deep enough to decide the leading behaviour: either a
/// known term with nonzero exponent exists, or the series is constant.
struct ObjectiveExpansion {
  PuiseuxSeries series;
  std::optional<Elem> constant;  // set iff f is constant on the branch
  Rational order_used;
};
ObjectiveExpansion expand_objective(const MultiPoly& curve, const MultiPoly& f, const BranchAtInfinity& branch);

/// The constant value of f on the branch, if f is constant there. The
/// verdict is certified by a degree bound on the objective series and then
/// checked against the resultant m(x, z) = Res(curve, z - f).
std::optional<RealAlgebraic> is_constant_on_branch(const MultiPoly& curve_sqfree, const MultiPoly& f,
                                                   const BranchAtInfinity& branch);

struct BranchAsymptotics {
  Rational alpha;           // leading exponent in the norm scale
  RealAlgebraic a;          // leading coefficient in the parameter scale
  int a_sign = 0;
  double a_norm_numeric = 0.0;  // leading coefficient in the norm scale
  ExtendedValue lambda;
  bool is_constant = false;
  Rational param_exponent;  // leading exponent in the parameter scale
  // f - lambda ~ approach_coeff * t^approach_exponent when lambda is finite
  std::optional<Rational> approach_exponent;
  std::optional<RealAlgebraic> approach_coeff;
  /// The norm-scale series is a single exact term a * r^alpha.
  bool single_exact_term = false;
};

BranchAsymptotics to_norm_asymptotics(const BranchAtInfinity& branch, const PuiseuxSeries& objective,
                                      const std::optional<RealAlgebraic>& constant);

}  // namespace polyinf
