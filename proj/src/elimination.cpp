#include "polyinf/elimination.hpp"

#include "polyinf/errors.hpp"

namespace polyinf {

namespace {

// Polynomial in the main variable with Q[t] coefficients; index = degree.
using Poly = std::vector<UniPoly>;

void trim(Poly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int deg(const Poly& p) { return static_cast<int>(p.size()) - 1; }

Poly scale(const Poly& p, const UniPoly& s) {
  Poly out(p.size());
  for (size_t i = 0; i < p.size(); ++i) out[i] = p[i] * s;
  trim(out);
  return out;
}

Poly pseudo_rem(Poly a, const Poly& b) {
  const int db = deg(b);
  const UniPoly& lb = b.back();
  int da = deg(a);
  int e = da - db + 1;
  while (da >= db && !a.empty()) {
    UniPoly la = a.back();
    for (auto& c : a) c = c * lb;
    const int shift = da - db;
    for (int j = 0; j <= db; ++j) a[static_cast<size_t>(j + shift)] -= la * b[static_cast<size_t>(j)];
    trim(a);
    da = deg(a);
    --e;
  }
  if (e > 0 && !a.empty()) a = scale(a, pow(lb, e));
  return a;
}

UniPoly poly_content(const Poly& p) {
  UniPoly g;
  for (const auto& c : p) {
    g = gcd(g, c);
    if (g.degree() == 0) return UniPoly::constant(Rational(1));
  }
  return g;
}

Poly primitive_part(const Poly& p) {
  UniPoly c = poly_content(p);
  Poly out(p.size());
  for (size_t i = 0; i < p.size(); ++i) out[i] = exact_quotient(p[i], c);
  return out;
}

UniPoly subresultant(Poly a, Poly b) {
  if (a.empty() || b.empty()) return {};
  int sgn_flip = 1;
  if (deg(a) < deg(b)) {
    if (deg(a) % 2 == 1 && deg(b) % 2 == 1) sgn_flip = -1;
    std::swap(a, b);
  }
  if (deg(b) == 0) return pow(b[0], deg(a)) * UniPoly::constant(Rational(sgn_flip));
  UniPoly g = UniPoly::constant(Rational(1));
  UniPoly h = UniPoly::constant(Rational(1));
  while (true) {
    const int delta = deg(a) - deg(b);
    if (deg(a) % 2 == 1 && deg(b) % 2 == 1) sgn_flip = -sgn_flip;
    Poly r = pseudo_rem(a, b);
    a = std::move(b);
    if (r.empty()) return {};
    UniPoly div = g * pow(h, delta);
    for (auto& c : r) c = exact_quotient(c, div);
    b = std::move(r);
    g = a.back();
    if (delta == 0) {
      // h unchanged
    } else if (delta == 1) {
      h = g;
    } else {
      h = exact_quotient(pow(g, delta), pow(h, delta - 1));
    }
    if (deg(b) <= 0) break;
  }
  const int da = deg(a);
  UniPoly res = exact_quotient(pow(b.back(), da), da >= 1 ? pow(h, da - 1) : UniPoly::constant(Rational(1)));
  if (sgn_flip < 0) res = -res;
  return res;
}

// The remainder sequence of the loop above, without the final resultant step.
std::vector<Poly> subresultant_chain(Poly a, Poly b) {
  std::vector<Poly> out;
  if (a.empty() || b.empty()) return out;
  if (deg(a) < deg(b)) std::swap(a, b);
  out.push_back(a);
  out.push_back(b);
  if (deg(b) == 0) return out;
  UniPoly g = UniPoly::constant(Rational(1));
  UniPoly h = UniPoly::constant(Rational(1));
  while (true) {
    const int delta = deg(a) - deg(b);
    Poly r = pseudo_rem(a, b);
    a = std::move(b);
    if (r.empty()) break;
    UniPoly div = g * pow(h, delta);
    for (auto& c : r) c = exact_quotient(c, div);
    b = std::move(r);
    out.push_back(b);
    g = a.back();
    if (delta == 1)
      h = g;
    else if (delta > 1)
      h = exact_quotient(pow(g, delta), pow(h, delta - 1));
    if (deg(b) <= 0) break;
  }
  return out;
}

MultiPoly to_multi(const Poly& p, Var main) {
  MultiPoly out = MultiPoly::from_coeffs_in_y(p);
  return main == Var::Y ? out : out.swapped();
}

}  // namespace

UniPoly resultant(const MultiPoly& p, const MultiPoly& q, Var eliminate) {
  if (p.is_zero() && q.is_zero()) throw DegenerateInput("resultant: both inputs are zero");
  if (p.is_zero() || q.is_zero()) return {};
  return subresultant(p.coeffs_in(eliminate), q.coeffs_in(eliminate));
}

std::vector<MultiPoly> subresultant_sequence(const MultiPoly& p, const MultiPoly& q, Var main) {
  std::vector<MultiPoly> out;
  for (const Poly& r : subresultant_chain(p.coeffs_in(main), q.coeffs_in(main))) out.push_back(to_multi(r, main));
  return out;
}

UniPoly content(const MultiPoly& p, Var v) { return poly_content(p.coeffs_in(v)); }

MultiPoly bivariate_gcd(const MultiPoly& p, const MultiPoly& q) {
  if (p.is_zero() && q.is_zero()) return {};
  if (p.is_zero()) return q.normalized();
  if (q.is_zero()) return p.normalized();
  Poly a = p.coeffs_in_y();
  Poly b = q.coeffs_in_y();
  UniPoly c = gcd(poly_content(a), poly_content(b));
  a = primitive_part(a);
  b = primitive_part(b);
  if (deg(a) < deg(b)) std::swap(a, b);
  Poly g;
  while (true) {
    if (b.empty()) {
      g = a;
      break;
    }
    if (deg(b) == 0) {
      g = Poly{UniPoly::constant(Rational(1))};
      break;
    }
    Poly r = pseudo_rem(a, b);
    a = std::move(b);
    b = r.empty() ? Poly{} : primitive_part(r);
  }
  g = primitive_part(g);
  MultiPoly out = to_multi(g, Var::Y) * MultiPoly::from_uni(c, Var::X);
  return out.normalized();
}

std::optional<MultiPoly> exact_divide(const MultiPoly& j, const MultiPoly& h) {
  if (h.is_zero()) throw DegenerateInput("divides: zero divisor");
  Poly num = j.coeffs_in_y();
  const Poly den = h.coeffs_in_y();
  const int dh = deg(den);
  Poly quo(num.size() >= den.size() ? num.size() - den.size() + 1 : 0);
  while (!num.empty()) {
    const int dn = deg(num);
    if (dn < dh) return std::nullopt;
    auto [qc, rc] = divmod(num.back(), den.back());
    if (!rc.is_zero()) return std::nullopt;
    const int shift = dn - dh;
    quo[static_cast<size_t>(shift)] = qc;
    for (int i = 0; i <= dh; ++i) num[static_cast<size_t>(i + shift)] -= qc * den[static_cast<size_t>(i)];
    if (!num.back().is_zero()) throw InternalConsistency("exact_divide: leading term survived");
    trim(num);
  }
  return MultiPoly::from_coeffs_in_y(quo);
}

bool divides(const MultiPoly& h, const MultiPoly& j) { return exact_divide(j, h).has_value(); }

MultiPoly squarefree_part(const MultiPoly& p) {
  if (p.is_zero()) throw DegenerateInput("squarefree_part of the zero polynomial");
  if (p.is_constant()) return MultiPoly::constant(Rational(1));
  MultiPoly g = bivariate_gcd(bivariate_gcd(p, p.derivative(Var::X)), p.derivative(Var::Y));
  auto q = exact_divide(p, g);
  if (!q) throw InternalConsistency("squarefree_part: gcd does not divide input");
  return q->normalized();
}

}  // namespace polyinf
