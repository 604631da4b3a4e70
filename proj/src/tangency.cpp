#include "polyinf/tangency.hpp"

#include <algorithm>

#include "polyinf/branches.hpp"
#include "polyinf/elimination.hpp"
#include "polyinf/errors.hpp"
#include "polyinf/number_field.hpp"
#include "polyinf/roots.hpp"

namespace polyinf {

namespace {

struct PlanePoint {
  Elem x, y;
};

const Rational kBoxWidth(1, 1 << 20);

KPoly trimmed(KPoly p) {
  kpoly_trim(p);
  return p;
}

bool is_zero_kpoly(const KPoly& p) { return p.empty(); }

// Real points on the line x = x0 where the polynomial in y vanishes.
std::vector<PlanePoint> points_on_line(const Elem& x0, const KPoly& h) {
  std::vector<PlanePoint> out;
  if (kpoly_degree(h) < 1) return out;
  for (const ExtRoot& r : real_roots(h, x0.field())) out.push_back({r.embedding.apply(x0), r.root});
  return out;
}

struct ValuedPoint {
  Interval x, y;
  RealAlgebraic value;
};

UniPoly mod(const UniPoly& p, const UniPoly& m) { return divmod(p, m).second; }

// Values of v at all real roots of the square-free r, with boxes for x and
// y(x). One characteristic polynomial serves every root.
std::vector<ValuedPoint> values_at_roots(const UniPoly& r, const UniPoly& v, const UniPoly& y) {
  std::vector<ValuedPoint> out;
  std::vector<Interval> xs = isolate_real_roots(r);
  if (xs.empty()) return out;
  std::vector<RealAlgebraic> cands = RealAlgebraic::roots_of(squarefree_part(characteristic_polynomial(v, r)));
  for (Interval x : xs) {
    std::vector<Interval> boxes;
    for (const auto& c : cands) boxes.push_back(c.interval());
    std::vector<size_t> alive(cands.size());
    for (size_t i = 0; i < alive.size(); ++i) alive[i] = i;
    while (true) {
      Interval e = x.is_point() ? Interval(v.eval(x.lo)) : v.eval(x);
      std::vector<size_t> next;
      for (size_t i : alive)
        if (boxes[i].overlaps(e)) next.push_back(i);
      alive = std::move(next);
      if (alive.size() == 1) break;
      if (alive.empty()) throw InternalConsistency("critical value matches no characteristic root");
      if (!x.is_point()) bisect_root(r, x);
      for (size_t i : alive) bisect_root(cands[i].polynomial(), boxes[i]);
    }
    if (!x.is_point()) refine_root(r, x, kBoxWidth);
    out.push_back({x, x.is_point() ? Interval(y.eval(x.lo)) : y.eval(x), cands[alive[0]]});
  }
  return out;
}

// f(x, y(x)) mod r
UniPoly compose_mod(const MultiPoly& f, const UniPoly& y, const UniPoly& r) {
  UniPoly acc;
  const auto cs = f.coeffs_in_y();
  for (auto it = cs.rbegin(); it != cs.rend(); ++it) acc = mod(acc * y + *it, r);
  return acc;
}

// Real solutions of a = b = 0 for coprime a, b. Where the first
// subresultant specializes to the gcd, y is a polynomial in x modulo the
// eliminant; the remaining roots get a field of their own.
void isolated_values(const MultiPoly& f, const MultiPoly& a, const MultiPoly& b, std::vector<ValuedPoint>& out,
                     std::vector<PlanePoint>& special) {
  if (a.is_constant() || b.is_constant()) return;
  if (a.degree_y() == 0 && b.degree_y() == 0) return;
  UniPoly r = resultant(a, b, Var::Y);
  if (r.is_zero()) throw InternalConsistency("resultant of coprime polynomials vanished");
  if (r.is_constant()) return;
  r = squarefree_part(r);
  std::vector<MultiPoly> chain = subresultant_sequence(a, b, Var::Y);
  UniPoly bad = r;
  if (chain[0].degree_y() >= 2) {
    for (size_t i = 1; i < chain.size(); ++i) {
      if (chain[i].degree_y() != 1 || chain[i - 1].degree_y() != 2) continue;
      auto c = chain[i].coeffs_in_y();
      const UniPoly lead = chain[0].coeffs_in_y().back();
      bad = gcd(r, lead * c[1]);
      UniPoly good = exact_quotient(r, bad);
      if (good.degree() >= 1) {
        ExtendedGcd eg = extended_gcd(mod(c[1], good), good);
        if (eg.gcd.degree() != 0) throw InternalConsistency("subresultant coefficient not invertible");
        UniPoly y = mod(-(c[0] * eg.s), good);
        for (auto& p : values_at_roots(good, compose_mod(f, y, good), y)) out.push_back(std::move(p));
      }
      break;
    }
  }
  if (bad.degree() < 1) return;
  for (const RealAlgebraic& x0 : RealAlgebraic::roots_of(bad)) {
    FieldPtr k = NumberField::from_real(x0);
    Elem xe = generator(k);
    KPoly pa = trimmed(substitute(a, Var::X, xe));
    KPoly pb = trimmed(substitute(b, Var::X, xe));
    KPoly h;
    if (is_zero_kpoly(pa))
      h = pb;
    else if (is_zero_kpoly(pb))
      h = pa;
    else
      h = kpoly_gcd(pa, pb);
    for (auto& p : points_on_line(xe, h)) special.push_back(std::move(p));
  }
}

struct CurveSamples {
  std::vector<PlanePoint> points;
  std::vector<RealAlgebraic> vertical_lines;  // x = x0 contained in the curve
  bool has_arc = false;
};

// At least one point on every connected component of the real curve q = 0.
// The curve is cut by vertical lines: one through every critical x value
// and one inside every open interval between them.
CurveSamples sample_curve(const MultiPoly& q) {
  CurveSamples out;
  if (q.is_constant()) return out;
  UniPoly cont = content(q, Var::Y);
  MultiPoly q1 = q;
  if (cont.degree() > 0) {
    q1 = *exact_divide(q, MultiPoly::from_uni(cont, Var::X));
    out.vertical_lines = RealAlgebraic::roots_of(squarefree_part(cont));
    if (!out.vertical_lines.empty()) out.has_arc = true;
  }
  if (q1.degree_y() < 1) return out;
  const std::vector<UniPoly> cy = q1.coeffs_in_y();
  UniPoly crit = cy.back() * resultant(q1, q1.derivative(Var::Y), Var::Y);
  std::vector<RealAlgebraic> xs;
  if (!crit.is_zero() && crit.degree() > 0) xs = RealAlgebraic::roots_of(squarefree_part(crit));
  std::vector<Rational> cells;
  if (xs.empty()) {
    cells.emplace_back(0);
  } else {
    cells.push_back(floor_rational(xs.front().interval().lo) - 1);
    for (size_t i = 0; i + 1 < xs.size(); ++i) cells.push_back((xs[i].interval().hi + xs[i + 1].interval().lo) / 2);
    cells.push_back(ceil_rational(xs.back().interval().hi) + 1);
  }
  FieldPtr qf = NumberField::rationals();
  for (const Rational& r : cells) {
    Elem xe(qf, r);
    auto pts = points_on_line(xe, trimmed(substitute(q1, Var::X, xe)));
    if (!pts.empty()) out.has_arc = true;
    for (auto& p : pts) out.points.push_back(std::move(p));
  }
  for (const RealAlgebraic& x0 : xs) {
    FieldPtr k = NumberField::from_real(x0);
    Elem xe = generator(k);
    for (auto& p : points_on_line(xe, trimmed(substitute(q1, Var::X, xe)))) out.points.push_back(std::move(p));
  }
  return out;
}

void add_value(CriticalData& d, const RealAlgebraic& v, const Interval& bx, const Interval& by, bool pos_dim) {
  d.sigma_nonempty = true;
  for (const auto& w : d.values)
    if (w == v) return;
  d.values.push_back(v);
  d.witnesses.push_back({bx, by, v, pos_dim});
}

void add_point(CriticalData& d, const MultiPoly& f, const PlanePoint& p, bool pos_dim) {
  RealAlgebraic v = evaluate(f, p.x, p.y).to_real();
  add_value(d, v, p.x.enclose(kBoxWidth), p.y.enclose(kBoxWidth), pos_dim);
}

CriticalData solve_system(const MultiPoly& f, const MultiPoly& a, const MultiPoly& b) {
  CriticalData d;
  MultiPoly q = bivariate_gcd(a, b);
  MultiPoly a1 = a, b1 = b;
  if (!q.is_constant()) {
    a1 = a.is_zero() ? a : *exact_divide(a, q);
    b1 = b.is_zero() ? b : *exact_divide(b, q);
    CurveSamples cs = sample_curve(squarefree_part(q));
    d.has_positive_dimensional_part = cs.has_arc;
    for (const RealAlgebraic& x0 : cs.vertical_lines) {
      FieldPtr k = NumberField::from_real(x0);
      PlanePoint p{generator(k), Elem(k, Rational(0))};
      add_point(d, f, p, true);
    }
    for (const auto& p : cs.points) add_point(d, f, p, cs.has_arc);
  }
  std::vector<ValuedPoint> generic;
  std::vector<PlanePoint> special;
  isolated_values(f, a1, b1, generic, special);
  for (const auto& p : generic) add_value(d, p.value, p.x, p.y, false);
  for (const auto& p : special) add_point(d, f, p, false);
  std::vector<size_t> order(d.values.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](size_t i, size_t j) { return d.values[i] < d.values[j]; });
  CriticalData sorted;
  sorted.sigma_nonempty = d.sigma_nonempty;
  sorted.has_positive_dimensional_part = d.has_positive_dimensional_part;
  for (size_t i : order) {
    sorted.values.push_back(d.values[i]);
    sorted.witnesses.push_back(d.witnesses[i]);
  }
  return sorted;
}

}  // namespace

std::string box_string(const Interval& x, const Interval& y) {
  return "[" + x.lo.get_str() + ", " + x.hi.get_str() + "] x [" + y.lo.get_str() + ", " + y.hi.get_str() + "]";
}

std::variant<MultiPoly, RadialFlag> tangency_curve(const MultiPoly& f, const FeasibleSet& s) {
  if (s.is_plane()) {
    MultiPoly t = MultiPoly::y() * f.derivative(Var::X) - MultiPoly::x() * f.derivative(Var::Y);
    if (t.is_zero()) return RadialFlag{};
    return squarefree_part(t);
  }
  if (s.g.is_zero()) throw UnsupportedInput("constraint polynomial is zero");
  if (s.g.is_constant()) throw UnsupportedInput("constraint has no real points");
  MultiPoly g = squarefree_part(s.g);
  if (branches_at_infinity(g, Rational(-1)).empty())
    throw UnsupportedInput("constraint curve " + s.g.to_string() + " is bounded");
  return g;
}

std::optional<CriticalWitness> licq_violation(const MultiPoly& g) {
  if (g.is_constant()) return std::nullopt;
  CriticalData d = solve_system(g, g.derivative(Var::X), g.derivative(Var::Y));
  for (const auto& w : d.witnesses)
    if (w.value.sign() == 0) return w;
  return std::nullopt;
}

bool licq_check(const MultiPoly& g) { return !licq_violation(g).has_value(); }

CriticalData critical_values(const MultiPoly& f, const FeasibleSet& s) {
  if (s.is_plane()) return solve_system(f, f.derivative(Var::X), f.derivative(Var::Y));
  MultiPoly g = squarefree_part(s.g);
  MultiPoly det = f.derivative(Var::X) * g.derivative(Var::Y) - f.derivative(Var::Y) * g.derivative(Var::X);
  return solve_system(f, g, det);
}

UniPoly radial_profile(const MultiPoly& f) {
  UniPoly fx = f.substitute(Var::Y, Rational(0));
  std::vector<Rational> c;
  for (int i = 0; i <= fx.degree(); ++i) {
    if (i % 2 == 1) {
      if (fx.coeff(i) != 0) throw InternalConsistency("radial flag set for a non-radial polynomial");
      continue;
    }
    c.push_back(fx.coeff(i));
  }
  UniPoly p(c);
  MultiPoly r2 = MultiPoly::x() * MultiPoly::x() + MultiPoly::y() * MultiPoly::y();
  MultiPoly back;
  for (int i = p.degree(); i >= 0; --i) back = back * r2 + MultiPoly::constant(p.coeff(i));
  if (!(back == f)) throw InternalConsistency("radial flag set for a non-radial polynomial");
  return p;
}

}  // namespace polyinf
