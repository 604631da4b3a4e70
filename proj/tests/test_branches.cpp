#include <cmath>
#include <random>
#include <set>

#include "doctest.h"
#include "polyinf/branches.hpp"
#include "polyinf/elimination.hpp"
#include "polyinf/errors.hpp"
#include "polyinf/parser.hpp"
#include "polyinf/rational.hpp"

using namespace polyinf;

namespace {

MultiPoly P(const char* s) { return parse_poly(s); }

MultiPoly tangency(const MultiPoly& f) {
  return squarefree_part(MultiPoly::y() * f.derivative(Var::X) - MultiPoly::x() * f.derivative(Var::Y));
}

// point of the curve near the branch, found by Newton in the free coordinate
std::pair<double, double> traced(const MultiPoly& curve, const BranchAtInfinity& b, double t) {
  const MultiPoly c = b.parameter == Var::X ? curve : curve.swapped();
  const MultiPoly dc = c.derivative(Var::Y);
  const double p = b.sigma * t;
  double s = b.coordinate.eval(t);
  for (int i = 0; i < 30; ++i) {
    double v = c.eval(p, s);
    double d = dc.eval(p, s);
    if (d == 0) break;
    double step = v / d;
    s -= step;
    if (std::abs(step) <= 1e-15 * (1 + std::abs(s))) break;
  }
  return b.parameter == Var::X ? std::make_pair(p, s) : std::make_pair(s, p);
}

std::vector<Rational> exponents(const PuiseuxSeries& s) {
  std::vector<Rational> e;
  for (const auto& t : s.terms()) e.push_back(t.exponent);
  return e;
}

std::vector<double> coeffs(const PuiseuxSeries& s) {
  std::vector<double> c;
  for (const auto& t : s.terms()) c.push_back(t.coeff.to_double());
  return c;
}

const BranchAtInfinity* find(const std::vector<BranchAtInfinity>& bs, Var param, int sigma, double lead) {
  for (const auto& b : bs) {
    if (b.parameter != param || b.sigma != sigma) continue;
    auto l = b.coordinate.leading();
    double v = l && l->exponent == 1 ? l->coeff.to_double() : 0.0;
    if (std::abs(v - lead) < 1e-9) return &b;
  }
  return nullptr;
}

}  // namespace

TEST_CASE("parser") {
  CHECK(P("3*x^2*y + 6*x*y").to_string() == "3*x^2*y + 6*x*y");
  CHECK(P("(x - y)^2") == P("x^2 - 2*x*y + y^2"));
  CHECK(P("x/2 + 0.25*y") == MultiPoly::monomial(Rational(1, 2), 1, 0) + MultiPoly::monomial(Rational(1, 4), 0, 1));
  CHECK(P("-(x)^3 - -1") == P("1 - x^3"));
  CHECK_THROWS_AS(P("2x"), ParseError);
  CHECK_THROWS_AS(P("x^y"), ParseError);
  CHECK_THROWS_AS(P("x/y"), ParseError);
  CHECK_THROWS_AS(P("(x+1"), ParseError);
  CHECK_THROWS_AS(P("x + z"), UnsupportedInput);
  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational("0.05") == Rational(1, 20));
  CHECK(P("0.075*x") == MultiPoly::monomial(Rational(3, 40), 1, 0));
  std::mt19937 rng(3);
  for (int it = 0; it < 100; ++it) {
    MultiPoly f;
    for (int i = 0; i < 5; ++i) {
      Rational q(static_cast<long>(rng() % 21) - 10, 1 + rng() % 4);
      q.canonicalize();
      f += MultiPoly::monomial(q, rng() % 4, rng() % 4);
    }
    CHECK(parse_poly(f.to_string()) == f);
  }
}

TEST_CASE("branches of x*y*(x+2) and the cubic objective") {
  MultiPoly f = P("x^3 - 3*y^2");
  MultiPoly c = tangency(f);
  CHECK(c.normalized() == P("x*y*(x+2)").normalized());
  auto bs = branches_at_infinity(c, Rational(-4));
  REQUIRE(bs.size() == 6);
  std::multiset<std::string> seen;
  for (const auto& b : bs) {
    CHECK(b.coordinate.is_exact());
    auto e = expand_objective(c, f, b);
    CHECK_FALSE(e.constant);
    seen.insert(b.describe() + " : " + e.series.to_string());
  }
  std::multiset<std::string> want = {
      "x = t, y = 0 : t^3",          "x = -t, y = 0 : -t^3",         "y = t, x = 0 : -3*t^2",
      "y = -t, x = 0 : -3*t^2",      "y = t, x = -2 : -3*t^2 - 8",   "y = -t, x = -2 : -3*t^2 - 8"};
  CHECK(seen == want);
}

TEST_CASE("Motzkin tangency branches") {
  MultiPoly f = P("x^2*y^4 + x^4*y^2 - 3*x^2*y^2 + 1");
  MultiPoly c = tangency(f);
  CHECK(c.normalized() == P("x*y*(x^2 - y^2)*(3 - x^2 - y^2)").normalized());
  auto bs = branches_at_infinity(c, Rational(-4));
  REQUIRE(bs.size() == 8);
  int constant = 0;
  for (const auto& b : bs) {
    auto k = is_constant_on_branch(c, f, b);
    if (k) {
      ++constant;
      CHECK(*k == RealAlgebraic(1));
      auto a = to_norm_asymptotics(b, expand_objective(c, f, b).series, k);
      CHECK(a.is_constant);
      CHECK(a.alpha == 0);
      CHECK(a.lambda == ExtendedValue(RealAlgebraic(1)));
    } else {
      PuiseuxSeries s = compose_objective(f, b, Rational(-10));
      CHECK(s.is_exact());
      CHECK(s.to_string() == "2*t^6 - 3*t^4 + 1");
      CHECK(b.kappa == RealAlgebraic(2).sqrt());
      auto a = to_norm_asymptotics(b, s, std::nullopt);
      CHECK(a.alpha == 6);
      CHECK(a.a_sign == 1);
      CHECK(a.lambda.is_pos_inf());
      CHECK(a.a_norm_numeric == doctest::Approx(2.0 / 8.0));
    }
  }
  CHECK(constant == 4);
}

TEST_CASE("tangency branches of (xy - 1)^2 + y^2") {
  MultiPoly f = P("(x*y - 1)^2 + y^2");
  MultiPoly c = tangency(f);
  CHECK(c.normalized() == P("-x^3*y + x*y^3 + x^2 - x*y - y^2").normalized());
  auto bs = branches_at_infinity(c, Rational(-5));
  REQUIRE(bs.size() == 8);

  // y along x = t; the t^-1 coefficient of the y ~ -t branch is -1/2 by
  // direct substitution (the t^2 balance reads 2a + 1 = 0)
  const BranchAtInfinity* g1 = find(bs, Var::X, 1, -1);
  const BranchAtInfinity* g2 = find(bs, Var::X, 1, 1);
  REQUIRE(g1);
  REQUIRE(g2);
  CHECK(exponents(g1->coordinate) == std::vector<Rational>{1, -1, -3, -5});
  CHECK(coeffs(g1->coordinate) == std::vector<double>{-1, -0.5, 0.625, -17.0 / 16});
  CHECK(coeffs(g2->coordinate) == std::vector<double>{1, 0.5, 0.375, 1.0 / 16});
  PuiseuxSeries f1 = compose_objective(f, *g1, Rational(-2));
  CHECK(f1.to_string() == "t^4 + 4*t^2 + 2 - 3/4*t^-2 + O(t^-2)");
  PuiseuxSeries f2 = compose_objective(f, *g2, Rational(-2));
  CHECK(f2.to_string() == "t^4 + 2 + 3/4*t^-2 + O(t^-2)");

  int small = 0;
  for (const auto& b : bs) {
    auto e = expand_objective(c, f, b);
    CHECK_FALSE(e.constant);
    auto a = to_norm_asymptotics(b, e.series, std::nullopt);
    if (a.alpha < 0) {
      ++small;
      CHECK(b.parameter == Var::X);
      CHECK(a.alpha == -2);
      CHECK(a.lambda == ExtendedValue(RealAlgebraic(0)));
      CHECK(exponents(b.coordinate).front() == -1);
    } else {
      CHECK(a.lambda.is_pos_inf());
    }
  }
  CHECK(small == 2);
}

TEST_CASE("parabola with f = x") {
  MultiPoly c = P("y - x^2");
  MultiPoly f = P("x");
  auto bs = branches_at_infinity(c, Rational(-3));
  REQUIRE(bs.size() == 2);
  std::set<int> signs;
  for (const auto& b : bs) {
    CHECK(b.parameter == Var::Y);
    CHECK(b.sigma == 1);
    CHECK(b.coordinate.ramification() == 2);
    auto a = to_norm_asymptotics(b, expand_objective(c, f, b).series, std::nullopt);
    CHECK(a.alpha == Rational(1, 2));
    signs.insert(a.a_sign);
  }
  CHECK(signs == std::set<int>{-1, 1});
}

TEST_CASE("norm rescaling with d = 2") {
  BranchAtInfinity b;
  b.norm_exponent = 2;
  PuiseuxSeries s(NumberField::rationals(), {{Rational(1), Elem(NumberField::rationals(), Rational(-3))}}, std::nullopt);
  auto a = to_norm_asymptotics(b, s, std::nullopt);
  CHECK(a.alpha == Rational(1, 2));
  CHECK(a.a_sign == -1);
  CHECK(a.lambda.is_neg_inf());
}

TEST_CASE("substitution and numeric tracing on random tangency curves") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coef(-5, 5);
  int checked = 0;
  for (int it = 0; it < 40; ++it) {
    MultiPoly f;
    int deg = 2 + it % 4;
    for (int i = 0; i <= deg; ++i)
      for (int j = 0; i + j <= deg; ++j)
        if (rng() % 2) f += MultiPoly::monomial(Rational(coef(rng)), i, j);
    MultiPoly g = MultiPoly::y() * f.derivative(Var::X) - MultiPoly::x() * f.derivative(Var::Y);
    if (g.is_zero() || f.is_constant()) continue;
    MultiPoly c = squarefree_part(g);
    std::vector<BranchAtInfinity> bs;
    try {
      bs = branches_at_infinity(c, Rational(-4));
    } catch (const TruncationExhausted&) {
      continue;
    }
    for (const auto& b : bs) {
      // the curve itself along the branch has no known nonzero term
      PuiseuxSeries z = compose_objective(c, b, Rational(-3));
      CHECK(z.terms().empty());
      const double t = 1e3;
      auto [px, py] = traced(c, b, t);
      auto [qx, qy] = b.point(t);
      CHECK(std::hypot(px - qx, py - qy) < 1e-4 * std::hypot(px, py));
      PuiseuxSeries fs = compose_objective(f, b, Rational(-2));
      double fv = f.eval(px, py);
      CHECK(std::abs(fs.eval(t) - fv) <= 1e-4 * (1 + std::abs(fv)));
      ++checked;
    }
  }
  CHECK(checked > 20);
}

TEST_CASE("branch errors") {
  CHECK_THROWS_AS(branches_at_infinity(P("(x - y)^2*(x + 1)"), Rational(-2)), PreconditionError);
  CHECK(branches_at_infinity(P("x^2 + y^2 - 1"), Rational(-2)).empty());
  CHECK(branches_at_infinity(P("x^2 + y^2 + 1"), Rational(-2)).empty());
}
