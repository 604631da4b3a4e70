#include "polyinf/real_algebraic.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "polyinf/errors.hpp"
#include "polyinf/roots.hpp"

namespace polyinf {

namespace {

UniPoly linear_for(const Rational& r) {
  // den*x - num
  return UniPoly(std::vector<Rational>{Rational(-r.get_num()), Rational(r.get_den())});
}

bool root_of(const UniPoly& g, const Interval& iv) {
  if (g.degree() < 1) return false;
  if (iv.is_point()) return g.eval(iv.lo) == 0;
  return sgn(g.eval(iv.lo)) * sgn(g.eval(iv.hi)) < 0;
}

}  // namespace

RealAlgebraic::RealAlgebraic(const Rational& r) : poly_(linear_for(r)), iv_(r) {}

RealAlgebraic RealAlgebraic::from_root(const UniPoly& p, const Interval& iv) {
  if (p.is_zero()) throw DegenerateInput("RealAlgebraic: zero defining polynomial");
  if (iv.is_point()) return RealAlgebraic(iv.lo);
  UniPoly s = squarefree_part(p);
  if (s.degree() == 1) return RealAlgebraic(Rational(-s.coeff(0) / s.coeff(1)));
  Interval w = iv;
  if (sgn(s.eval(w.lo)) * sgn(s.eval(w.hi)) >= 0)
    throw PreconditionError("RealAlgebraic: interval is not isolating");
  if (auto r = rational_root_in(s, w)) return RealAlgebraic(*r);
  return RealAlgebraic(std::move(s), std::move(w));
}

std::vector<RealAlgebraic> RealAlgebraic::roots_of(const UniPoly& p) {
  std::vector<RealAlgebraic> out;
  if (p.degree() < 1) return out;
  UniPoly s = squarefree_part(p);
  for (const auto& iv : isolate_real_roots(s)) out.push_back(from_root(s, iv));
  return out;
}

int RealAlgebraic::sign() const {
  if (iv_.is_point()) return sgn(iv_.lo);
  // non-rational values are never zero; endpoints bracket the root
  Interval w = iv_;
  while (w.contains_zero()) bisect_root(poly_, w);
  return sgn(w.lo);
}

Interval RealAlgebraic::approx(const Rational& width) const {
  Interval w = iv_;
  refine_root(poly_, w, width);
  return w;
}

double RealAlgebraic::to_double(double width) const {
  if (iv_.is_point()) return iv_.lo.get_d();
  Rational wr = from_double(width);
  // relative width for large magnitudes
  Rational mag = std::max(abs(iv_.lo), abs(iv_.hi));
  if (mag > 1) wr *= mag;
  return approx(wr).midpoint().get_d();
}

std::string RealAlgebraic::to_string() const {
  if (is_rational()) return iv_.lo.get_str();
  std::ostringstream os;
  os << "root of " << poly_.to_string() << " in [" << iv_.lo.get_str() << ", " << iv_.hi.get_str() << "]";
  return os.str();
}

RealAlgebraic RealAlgebraic::negated() const {
  if (is_rational()) return RealAlgebraic(Rational(-iv_.lo));
  return RealAlgebraic(poly_.scaled(Rational(-1)).primitive(), Interval(-iv_.hi, -iv_.lo));
}

RealAlgebraic RealAlgebraic::sqrt() const {
  if (sign() <= 0) throw PreconditionError("sqrt of a non-positive algebraic number");
  // q(x) = p(x^2); positive roots of q map monotonically onto positive roots of p
  UniPoly q;
  {
    std::vector<Rational> c(static_cast<size_t>(2 * poly_.degree() + 1));
    for (int i = 0; i <= poly_.degree(); ++i) c[static_cast<size_t>(2 * i)] = poly_.coeff(i);
    q = UniPoly(std::move(c));
  }
  auto roots_p = roots_of(poly_);
  auto roots_q = roots_of(q);
  std::vector<RealAlgebraic> pos_p, pos_q;
  for (auto& r : roots_p)
    if (r.sign() > 0) pos_p.push_back(r);
  for (auto& r : roots_q)
    if (r.sign() > 0) pos_q.push_back(r);
  if (pos_p.size() != pos_q.size()) throw InternalConsistency("sqrt: root count mismatch");
  for (size_t i = 0; i < pos_p.size(); ++i)
    if (compare(pos_p[i], *this) == Ordering::Equal) return pos_q[i];
  throw InternalConsistency("sqrt: value not among the roots of its polynomial");
}

Ordering compare(const RealAlgebraic& a, const RealAlgebraic& b) {
  if (a.is_rational() && b.is_rational()) {
    int c = cmp(a.rational_value(), b.rational_value());
    return c < 0 ? Ordering::Less : (c > 0 ? Ordering::Greater : Ordering::Equal);
  }
  Interval ia = a.interval(), ib = b.interval();
  auto separated = [&]() -> std::optional<Ordering> {
    if (ia.hi < ib.lo) return Ordering::Less;
    if (ib.hi < ia.lo) return Ordering::Greater;
    return std::nullopt;
  };
  for (int round = 0; round < 24; ++round) {
    if (auto s = separated()) return *s;
    bisect_root(a.polynomial(), ia);
    bisect_root(b.polynomial(), ib);
  }
  if (auto s = separated()) return *s;
  UniPoly g = gcd(a.polynomial(), b.polynomial());
  if (root_of(g, ia)) {
    // a is a root of b's polynomial; equal iff it is the one b isolates
    while (true) {
      if (ia.lo >= ib.lo && ia.hi <= ib.hi) return Ordering::Equal;
      if (auto s = separated()) return *s;
      bisect_root(a.polynomial(), ia);
      if (ia.is_point() && ib.is_point()) {
        int c = cmp(ia.lo, ib.lo);
        return c < 0 ? Ordering::Less : (c > 0 ? Ordering::Greater : Ordering::Equal);
      }
    }
  }
  while (true) {
    if (auto s = separated()) return *s;
    bisect_root(a.polynomial(), ia);
    bisect_root(b.polynomial(), ib);
  }
}

std::string ExtendedValue::to_string() const {
  switch (kind_) {
    case Kind::NegInf: return "-inf";
    case Kind::PosInf: return "+inf";
    default: return value_->to_string();
  }
}

double ExtendedValue::to_double() const {
  switch (kind_) {
    case Kind::NegInf: return -std::numeric_limits<double>::infinity();
    case Kind::PosInf: return std::numeric_limits<double>::infinity();
    default: return value_->to_double();
  }
}

Ordering compare(const ExtendedValue& a, const ExtendedValue& b) {
  auto rank = [](ExtendedValue::Kind k) { return k == ExtendedValue::Kind::NegInf ? 0 : (k == ExtendedValue::Kind::Finite ? 1 : 2); };
  int ra = rank(a.kind()), rb = rank(b.kind());
  if (ra != rb) return ra < rb ? Ordering::Less : Ordering::Greater;
  if (ra != 1) return Ordering::Equal;
  return compare(a.value(), b.value());
}

ExtendedValue min_of_set(const std::vector<ExtendedValue>& values) {
  ExtendedValue best = ExtendedValue::pos_inf();
  for (const auto& v : values)
    if (compare(v, best) == Ordering::Less) best = v;
  return best;
}

ExtendedValue max_of_set(const std::vector<ExtendedValue>& values) {
  ExtendedValue best = ExtendedValue::neg_inf();
  for (const auto& v : values)
    if (compare(v, best) == Ordering::Greater) best = v;
  return best;
}

void insert_unique(std::vector<RealAlgebraic>& set, const RealAlgebraic& v) {
  for (const auto& s : set)
    if (compare(s, v) == Ordering::Equal) return;
  set.push_back(v);
}

}  // namespace polyinf
