#pragma once

#include <optional>
#include <vector>

#include "polyinf/multipoly.hpp"
#include "polyinf/unipoly.hpp"

namespace polyinf {

/// Res_v(p, q) as a polynomial in the other variable (subresultant PRS).
/// If one input is constant in v the other's degree is used as its power.
/// Throws DegenerateInput when both inputs are zero.
UniPoly resultant(const MultiPoly& p, const MultiPoly& q, Var eliminate);

/// Subresultant remainder sequence in the main variable, starting with the
/// input of larger degree. A member of degree d whose predecessor has degree
/// d + 1 is the d-th subresultant up to sign.
std::vector<MultiPoly> subresultant_sequence(const MultiPoly& p, const MultiPoly& q, Var main);

/// gcd up to a rational scalar, normalized; gcd(p, 0) = p.
MultiPoly bivariate_gcd(const MultiPoly& p, const MultiPoly& q);

/// j / h when h divides j exactly, nullopt otherwise. Throws on h = 0.
std::optional<MultiPoly> exact_divide(const MultiPoly& j, const MultiPoly& h);
bool divides(const MultiPoly& h, const MultiPoly& j);

/// p / gcd(p, p_x, p_y), normalized. Throws DegenerateInput on zero.
MultiPoly squarefree_part(const MultiPoly& p);

/// gcd of the coefficients of p viewed in Q[other][v]; a polynomial in the
/// other variable, primitive normalized.
UniPoly content(const MultiPoly& p, Var v);

}  // namespace polyinf
