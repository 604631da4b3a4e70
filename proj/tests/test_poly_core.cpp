#include <random>

#include "doctest.h"
#include "polyinf/elimination.hpp"
#include "polyinf/errors.hpp"
#include "polyinf/multipoly.hpp"
#include "polyinf/roots.hpp"

using namespace polyinf;

namespace {

MultiPoly X() { return MultiPoly::x(); }
MultiPoly Y() { return MultiPoly::y(); }
MultiPoly C(long c) { return MultiPoly::constant(Rational(c)); }

// Sylvester determinant by fraction-free Gaussian elimination; the oracle
// for the subresultant code.
Rational sylvester(const UniPoly& a, const UniPoly& b) {
  const int m = a.degree(), n = b.degree();
  const int size = m + n;
  if (size == 0) return Rational(1);
  std::vector<std::vector<Rational>> s(size, std::vector<Rational>(size));
  for (int r = 0; r < n; ++r)
    for (int i = 0; i <= m; ++i) s[r][r + (m - i)] = a.coeff(i);
  for (int r = 0; r < m; ++r)
    for (int i = 0; i <= n; ++i) s[n + r][r + (n - i)] = b.coeff(i);
  Rational det(1);
  for (int c = 0; c < size; ++c) {
    int piv = -1;
    for (int r = c; r < size; ++r)
      if (s[r][c] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return Rational(0);
    if (piv != c) {
      std::swap(s[piv], s[c]);
      det = -det;
    }
    det *= s[c][c];
    for (int r = c + 1; r < size; ++r) {
      Rational f = s[r][c] / s[c][c];
      for (int k = c; k < size; ++k) s[r][k] -= f * s[c][k];
    }
  }
  return det;
}

MultiPoly random_poly(std::mt19937& rng, int deg) {
  std::uniform_int_distribution<int> coef(-5, 5);
  MultiPoly p;
  for (int i = 0; i <= deg; ++i)
    for (int j = 0; i + j <= deg; ++j) p += MultiPoly::monomial(Rational(coef(rng)), i, j);
  return p;
}

}  // namespace

TEST_CASE("resultant: worked examples") {
  CHECK(resultant(Y() * Y() - X(), Y(), Var::Y) == UniPoly{0, -1});
  MultiPoly circle = X() * X() + Y() * Y() - C(1);
  CHECK(resultant(circle, X() - Y(), Var::Y) == UniPoly{-1, 0, 2});
  MultiPoly p = X() * Y() * Y() + C(3) * X() - Y();
  CHECK(resultant(p, p, Var::Y).is_zero());
  CHECK_THROWS_AS(resultant(MultiPoly{}, MultiPoly{}, Var::Y), DegenerateInput);
}

TEST_CASE("resultant matches the Sylvester determinant at sample points") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    MultiPoly p = random_poly(rng, 1 + trial % 4);
    MultiPoly q = random_poly(rng, 1 + (trial / 4) % 4);
    if (p.degree_y() < 1 || q.degree_y() < 1) continue;
    UniPoly r = resultant(p, q, Var::Y);
    for (long x0 : {-3L, -1L, 0L, 2L, 5L}) {
      UniPoly a = p.substitute(Var::X, Rational(x0));
      UniPoly b = q.substitute(Var::X, Rational(x0));
      // the determinant specializes only when leading coefficients survive
      if (a.degree() != p.degree_y() || b.degree() != q.degree_y()) continue;
      CHECK(r.eval(Rational(x0)) == sylvester(a, b));
    }
  }
}

TEST_CASE("resultant vanishes over shared real roots") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    MultiPoly common = X() - Y() * Y() + MultiPoly::monomial(Rational(trial % 3), 0, 1);
    MultiPoly p = common * random_poly(rng, 1);
    MultiPoly q = common * random_poly(rng, 2) + MultiPoly::monomial(Rational(0), 0, 0);
    if (p.is_zero() || q.is_zero()) continue;
    CHECK(resultant(p, q, Var::Y).is_zero());
  }
}

TEST_CASE("real root isolation") {
  auto r = isolate_real_roots(UniPoly{-2, 0, 1});
  REQUIRE(r.size() == 2);
  CHECK(r[0].lo < Rational(-1) * Rational(141421, 100000));
  CHECK(r[0].hi > Rational(-1) * Rational(141422, 100000));
  for (const auto& iv : r) CHECK(sgn(UniPoly({-2, 0, 1}).eval(iv.lo)) * sgn(UniPoly({-2, 0, 1}).eval(iv.hi)) < 0);
  CHECK(isolate_real_roots(UniPoly{0, -3, 0, 1}).size() == 3);
  CHECK(isolate_real_roots(UniPoly{1, 0, 1}).empty());
  CHECK_THROWS_AS(isolate_real_roots(UniPoly{}), DegenerateInput);
  // exact roots at bisection midpoints come back as points
  auto e = isolate_real_roots(UniPoly{0, -1, 0, 1});
  REQUIRE(e.size() == 3);
  CHECK(e[1].is_point());
  CHECK(e[1].lo == 0);
}

TEST_CASE("isolation count agrees with Sturm on random polynomials") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> coef(-9, 9);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Rational> c;
    int d = 1 + trial % 9;
    for (int i = 0; i <= d; ++i) c.emplace_back(coef(rng));
    UniPoly p(c);
    if (p.degree() < 1) continue;
    // repeated factors too
    if (trial % 5 == 0) p = p * p * UniPoly{1, -1};
    Rational b = cauchy_bound(p);
    auto roots = isolate_real_roots(p);
    CHECK(static_cast<int>(roots.size()) == sturm_count(p, -b, b));
    for (size_t i = 1; i < roots.size(); ++i) CHECK(roots[i - 1].hi <= roots[i].lo);
    for (const auto& iv : roots) {
      INFO(p.to_string(), " ", iv.lo.get_str(), " ", iv.hi.get_str());
      CHECK(sturm_count(p, iv.lo - (iv.is_point() ? Rational(1, 1000000) : Rational(0)), iv.hi) == 1);
    }
  }
}

TEST_CASE("divides and exact division") {
  CHECK(divides(X(), X() * Y() + X()));
  CHECK(divides(X() + Y(), X() * X() - Y() * Y()));
  CHECK_FALSE(divides(X() + Y(), X() * X() + Y() * Y()));
  CHECK_THROWS_AS(divides(MultiPoly{}, X()), DegenerateInput);
  std::mt19937 rng(5);
  for (int i = 0; i < 20; ++i) {
    MultiPoly h = random_poly(rng, 2), q = random_poly(rng, 2);
    if (h.is_zero()) continue;
    auto d = exact_divide(h * q, h);
    REQUIRE(d.has_value());
    CHECK(*d * h == h * q);
  }
}

TEST_CASE("square-free parts") {
  MultiPoly xy = X() * Y();
  CHECK(squarefree_part(xy * xy) == xy.normalized());
  CHECK(squarefree_part(UniPoly{1, -2, 1}) == UniPoly{-1, 1});
  MultiPoly s = X() * X() + Y() - C(3);
  CHECK(squarefree_part(s) == s.normalized());
  CHECK_THROWS_AS(squarefree_part(MultiPoly{}), DegenerateInput);
  CHECK_THROWS_AS(squarefree_part(UniPoly{}), DegenerateInput);
  std::mt19937 rng(9);
  for (int i = 0; i < 15; ++i) {
    MultiPoly a = random_poly(rng, 2);
    if (a.total_degree() < 1) continue;
    MultiPoly sq = squarefree_part(a * a * X());
    MultiPoly s2 = squarefree_part(sq);
    CHECK(s2 == sq);
    if (sq.total_degree() > 0) CHECK_FALSE(divides(sq * sq, sq));
  }
}

TEST_CASE("bivariate gcd") {
  MultiPoly px = C(2) * X() * Y() * Y() * (Y() * Y() + C(2) * X() * X() - C(3));
  MultiPoly py = C(2) * X() * X() * Y() * (C(2) * Y() * Y() + X() * X() - C(3));
  CHECK(bivariate_gcd(px, py) == (X() * Y()).normalized());
  MultiPoly p = X() * X() - Y() + C(1);
  CHECK(bivariate_gcd(p, MultiPoly{}) == p.normalized());
  CHECK(bivariate_gcd(X() + C(1), Y() - C(1)).is_constant());
  std::mt19937 rng(13);
  for (int i = 0; i < 15; ++i) {
    MultiPoly g = random_poly(rng, 2), a = random_poly(rng, 2), b = random_poly(rng, 1);
    if (g.total_degree() < 1 || a.is_zero() || b.is_zero()) continue;
    MultiPoly d = bivariate_gcd(g * a, g * b);
    CHECK(divides(g, d));
    CHECK(divides(d, g * a));
    CHECK(divides(d, g * b));
  }
}

TEST_CASE("multipoly printing and normalization") {
  MultiPoly p = C(3) * X() * X() * Y() + C(6) * X() * Y();
  CHECK(p.to_string() == "3*x^2*y + 6*x*y");
  CHECK(p.normalized().to_string() == "x^2*y + 2*x*y");
  CHECK((-p).normalized() == p.normalized());
  CHECK(UniPoly{1, 0, -3}.to_string() == "-3*x^2 + 1");
}
