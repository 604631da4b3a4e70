#pragma once

#include <optional>
#include <vector>

#include "polyinf/interval.hpp"
#include "polyinf/unipoly.hpp"

namespace polyinf {

/// One isolating interval per distinct real root of p, sorted ascending and
/// pairwise disjoint. A root hit exactly during bisection comes back as a
/// point interval; every other interval is open with a sign change of the
/// square-free part at its endpoints. Throws DegenerateInput for p = 0.
std::vector<Interval> isolate_real_roots(const UniPoly& p);

/// Number of distinct real roots of p in (a, b], by Sturm sequence.
int sturm_count(const UniPoly& p, const Rational& a, const Rational& b);

/// Strict bound: every complex root z of p has |z| < cauchy_bound(p).
Rational cauchy_bound(const UniPoly& p);

/// One bisection step on an isolating interval of the square-free p.
void bisect_root(const UniPoly& sqfree, Interval& iv);

/// Bisect until the width is at most `width`.
void refine_root(const UniPoly& sqfree, Interval& iv, const Rational& width);

/// If the root of the square-free integer polynomial p isolated by iv is
/// rational, return it. Shrinks iv as a side effect.
std::optional<Rational> rational_root_in(const UniPoly& sqfree, Interval& iv);

/// Number of sign variations in a coefficient sequence (zeros skipped).
int sign_variations(const std::vector<Rational>& c);

}  // namespace polyinf
