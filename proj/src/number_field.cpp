#include "polyinf/number_field.hpp"

#include <algorithm>

#include "polyinf/elimination.hpp"
#include "polyinf/errors.hpp"
#include "polyinf/roots.hpp"

namespace polyinf {

namespace {

bool has_root_in(const UniPoly& g, const Interval& iv) {
  if (g.degree() < 1) return false;
  if (iv.is_point()) return g.eval(iv.lo) == 0;
  return sgn(g.eval(iv.lo)) * sgn(g.eval(iv.hi)) < 0;
}

void check_same(const FieldPtr& a, const FieldPtr& b) {
  if (a != b) throw InternalConsistency("arithmetic between elements of different number fields");
}

// Characteristic polynomial of multiplication by a in Q[t]/(m), from the
// power sums of m's roots and Newton's identities.
UniPoly char_poly(const UniPoly& a, const UniPoly& m) {
  const int n = m.degree();
  UniPoly mm = m.monic();
  std::vector<Rational> s(static_cast<size_t>(n));  // power sums s_0 .. s_{n-1}
  s[0] = n;
  for (int k = 1; k < n; ++k) {
    Rational acc = -Rational(k) * mm.coeff(n - k);
    for (int i = 1; i < k; ++i) acc -= mm.coeff(n - i) * s[static_cast<size_t>(k - i)];
    s[static_cast<size_t>(k)] = acc;
  }
  auto trace = [&](const UniPoly& b) {
    Rational t(0);
    for (int i = 0; i <= b.degree(); ++i) t += b.coeff(i) * s[static_cast<size_t>(i)];
    return t;
  };
  std::vector<Rational> p(static_cast<size_t>(n) + 1);
  UniPoly power = UniPoly::constant(Rational(1));
  for (int k = 1; k <= n; ++k) {
    power = divmod(power * a, m).second;
    p[static_cast<size_t>(k)] = trace(power);
  }
  std::vector<Rational> e(static_cast<size_t>(n) + 1);
  e[0] = 1;
  for (int k = 1; k <= n; ++k) {
    Rational acc(0);
    for (int i = 1; i <= k; ++i) {
      Rational term = e[static_cast<size_t>(k - i)] * p[static_cast<size_t>(i)];
      if (i % 2 == 1)
        acc += term;
      else
        acc -= term;
    }
    e[static_cast<size_t>(k)] = acc / k;
  }
  std::vector<Rational> c(static_cast<size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) c[static_cast<size_t>(n - k)] = (k % 2 == 0) ? e[static_cast<size_t>(k)] : Rational(-e[static_cast<size_t>(k)]);
  return UniPoly(std::move(c));
}

}  // namespace

FieldPtr NumberField::rationals() {
  static FieldPtr q(new NumberField(UniPoly::identity(), Interval(Rational(0))));
  return q;
}

FieldPtr NumberField::create(const UniPoly& m, const Interval& iv) {
  if (m.degree() < 1) throw PreconditionError("NumberField: modulus must have positive degree");
  if (iv.is_point()) {
    const Rational& r = iv.lo;
    UniPoly lin(std::vector<Rational>{Rational(-r.get_num()), Rational(r.get_den())});
    return FieldPtr(new NumberField(lin, iv));
  }
  UniPoly s = squarefree_part(m);
  if (s.degree() == 1) {
    Rational r = -s.coeff(0) / s.coeff(1);
    return create(s, Interval(r));
  }
  return FieldPtr(new NumberField(std::move(s), iv));
}

FieldPtr NumberField::from_real(const RealAlgebraic& a) {
  if (a.is_rational()) return create(a.polynomial(), Interval(a.rational_value()));
  return create(a.polynomial(), a.interval());
}

UniPoly NumberField::reduce(const UniPoly& a) const {
  if (a.degree() < modulus_.degree()) return a;
  if (modulus_.degree() == 1) return UniPoly::constant(a.eval(theta_.lo));
  return divmod(a, modulus_).second;
}

void NumberField::refine_theta() { bisect_root(modulus_, theta_); }

Interval NumberField::enclose_once(const UniPoly& a) const { return reduce(a).eval(theta_); }

Interval NumberField::enclose(const UniPoly& a, const Rational& width) {
  UniPoly r = reduce(a);
  if (r.degree() <= 0) return Interval(r.coeff(0));
  while (true) {
    Interval e = r.eval(theta_);
    Rational scale = std::max({Rational(1), Rational(abs(e.lo)), Rational(abs(e.hi))});
    if (e.width() <= width * scale || theta_.is_point()) return e;
    refine_theta();
  }
}

void NumberField::split_on(const UniPoly& g) {
  if (g.degree() < 1 || g.degree() >= modulus_.degree()) return;
  if (has_root_in(g, theta_))
    modulus_ = g.primitive();
  else
    modulus_ = exact_quotient(modulus_, g).primitive();
  if (modulus_.degree() == 1) {
    Rational r = -modulus_.coeff(0) / modulus_.coeff(1);
    theta_ = Interval(r);
  }
}

int NumberField::sign(const UniPoly& a) {
  UniPoly r = reduce(a);
  for (int round = 0;; ++round) {
    if (r.is_zero()) return 0;
    if (r.degree() == 0) return sgn(r.coeff(0));
    if (theta_.is_point()) return sgn(r.eval(theta_.lo));
    Interval e = r.eval(theta_);
    if (e.lo > 0) return 1;
    if (e.hi < 0) return -1;
    if (round == 2) {
      UniPoly g = gcd(r, modulus_);
      if (g.degree() >= 1) {
        split_on(g);
        r = reduce(r);
        continue;
      }
    }
    refine_theta();
  }
}

UniPoly NumberField::inverse(const UniPoly& a) {
  UniPoly r = reduce(a);
  for (int attempt = 0; attempt < 2; ++attempt) {
    if (r.is_zero()) throw DegenerateInput("inverse of zero in a number field");
    if (r.degree() == 0) return UniPoly::constant(Rational(1) / r.coeff(0));
    ExtendedGcd eg = extended_gcd(r, modulus_);
    if (eg.gcd.degree() == 0) return reduce(eg.s);
    split_on(eg.gcd);
    r = reduce(r);
  }
  throw InternalConsistency("inverse: modulus split did not make the element a unit");
}

RealAlgebraic NumberField::to_real(const UniPoly& a) {
  UniPoly r = reduce(a);
  if (r.degree() <= 0) return RealAlgebraic(r.coeff(0));
  if (theta_.is_point()) return RealAlgebraic(r.eval(theta_.lo));
  UniPoly cp = char_poly(r, modulus_);
  std::vector<RealAlgebraic> cands = RealAlgebraic::roots_of(cp);
  std::vector<Interval> boxes;
  for (const auto& c : cands) boxes.push_back(c.interval());
  std::vector<size_t> alive(cands.size());
  for (size_t i = 0; i < alive.size(); ++i) alive[i] = i;
  while (true) {
    Interval e = r.eval(theta_);
    std::vector<size_t> next;
    for (size_t i : alive)
      if (boxes[i].overlaps(e)) next.push_back(i);
    alive = std::move(next);
    if (alive.size() == 1) return cands[alive[0]];
    if (alive.empty()) throw InternalConsistency("to_real: no characteristic root matches the enclosure");
    refine_theta();
    for (size_t i : alive) bisect_root(cands[i].polynomial(), boxes[i]);
  }
}

bool Elem::is_rational() const { return rep().degree() <= 0; }

Rational Elem::rational_value() const {
  UniPoly r = rep();
  if (r.degree() > 0) throw PreconditionError("element is not known to be rational");
  return r.coeff(0);
}

double Elem::to_double() const {
  UniPoly r = rep();
  if (r.degree() <= 0) return r.coeff(0).get_d();
  return field_->enclose(r, Rational(1, 1) / (Integer(1) << 60)).midpoint().get_d();
}

Elem& Elem::operator+=(const Elem& o) {
  check_same(field_, o.field_);
  rep_ += o.rep_;
  return *this;
}

Elem& Elem::operator-=(const Elem& o) {
  check_same(field_, o.field_);
  rep_ -= o.rep_;
  return *this;
}

Elem& Elem::operator*=(const Elem& o) {
  check_same(field_, o.field_);
  rep_ = field_->reduce(rep_ * o.rep_);
  return *this;
}

Elem operator+(Elem a, const Elem& b) { return a += b; }
Elem operator-(Elem a, const Elem& b) { return a -= b; }
Elem operator-(const Elem& a) { return {a.field(), -a.raw_rep()}; }
Elem operator*(Elem a, const Elem& b) { return a *= b; }
Elem operator*(const Rational& s, const Elem& a) { return {a.field(), s * a.raw_rep()}; }
Elem operator/(const Elem& a, const Elem& b) { return a * b.inverse(); }

Elem pow(const Elem& a, int n) {
  Elem result(a.field(), Rational(1));
  Elem base = a;
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return result;
}

UniPoly characteristic_polynomial(const UniPoly& a, const UniPoly& m) { return char_poly(divmod(a, m).second, m); }

Elem generator(const FieldPtr& k) { return Elem(k, k->reduce(UniPoly::identity())); }

Elem Embedding::apply(const Elem& a) const {
  if (a.field() == target) return a;
  UniPoly r = a.rep();
  UniPoly acc;
  for (int i = r.degree(); i >= 0; --i) {
    acc = target->reduce(acc * theta_image);
    acc += UniPoly::constant(r.coeff(i));
  }
  return Elem(target, acc);
}

// ---------------------------------------------------------------------------
// polynomials over a number field

void kpoly_trim(KPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int kpoly_degree(const KPoly& p) { return static_cast<int>(p.size()) - 1; }

KPoly kpoly_derivative(const KPoly& p) {
  KPoly d;
  for (size_t i = 1; i < p.size(); ++i) d.push_back(Rational(static_cast<long>(i)) * p[i]);
  return d;
}

KPoly kpoly_monic(const KPoly& p) {
  if (p.empty()) return p;
  Elem inv = p.back().inverse();
  KPoly out;
  out.reserve(p.size());
  for (const auto& c : p) out.push_back(c * inv);
  return out;
}

std::pair<KPoly, KPoly> kpoly_divmod(const KPoly& a, const KPoly& b) {
  if (b.empty()) throw DegenerateInput("kpoly_divmod: zero divisor");
  KPoly r = a;
  kpoly_trim(r);
  const int db = kpoly_degree(b);
  if (kpoly_degree(r) < db) return {KPoly{}, r};
  const FieldPtr& k = b.back().field();
  Elem inv = b.back().inverse();
  KPoly q(static_cast<size_t>(kpoly_degree(r) - db + 1), Elem(k, Rational(0)));
  for (int i = kpoly_degree(r) - db; i >= 0; --i) {
    Elem f = r[static_cast<size_t>(i + db)] * inv;
    q[static_cast<size_t>(i)] = f;
    for (int j = 0; j <= db; ++j) r[static_cast<size_t>(i + j)] -= f * b[static_cast<size_t>(j)];
  }
  r.resize(static_cast<size_t>(db));
  kpoly_trim(r);
  return {q, r};
}

KPoly kpoly_gcd(KPoly a, KPoly b) {
  kpoly_trim(a);
  kpoly_trim(b);
  while (!b.empty()) {
    KPoly r = kpoly_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return kpoly_monic(a);
}

Elem kpoly_eval(const KPoly& p, const Elem& x) {
  Elem acc(x.field(), Rational(0));
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

KPoly kpoly_from_rational(const FieldPtr& k, const UniPoly& p) {
  KPoly out;
  for (const auto& c : p.coeffs()) out.emplace_back(k, c);
  return out;
}

KPoly substitute(const MultiPoly& f, Var v, const Elem& value) {
  // coefficients of the remaining variable, each a polynomial in the substituted one
  std::vector<UniPoly> cs = f.coeffs_in(v == Var::X ? Var::Y : Var::X);
  KPoly out;
  out.reserve(cs.size());
  for (const auto& c : cs) {
    Elem acc(value.field(), Rational(0));
    for (int i = c.degree(); i >= 0; --i) acc = acc * value + Elem(value.field(), c.coeff(i));
    out.push_back(acc);
  }
  return out;
}

Elem evaluate(const MultiPoly& f, const Elem& x, const Elem& y) {
  check_same(x.field(), y.field());
  return kpoly_eval(substitute(f, Var::X, x), y);
}

// ---------------------------------------------------------------------------
// real roots over a number field

namespace {

bool all_rational(const KPoly& p) {
  for (const auto& c : p)
    if (!c.is_rational()) return false;
  return true;
}

UniPoly to_rational_poly(const KPoly& p) {
  std::vector<Rational> c;
  for (const auto& e : p) c.push_back(e.rational_value());
  return UniPoly(std::move(c));
}

Embedding identity_embedding(const FieldPtr& k) { return {k, UniPoly::identity()}; }

// Roots of a monic square-free polynomial over a non-rational K, via a
// primitive element gamma = u + k*theta of K(u).
std::vector<ExtRoot> roots_by_norm(const KPoly& chi, const FieldPtr& K) {
  const UniPoly m = K->modulus();
  MultiPoly m_theta = MultiPoly::from_uni(m, Var::Y);
  const int d = kpoly_degree(chi);
  for (int attempt = 0; attempt < 64; ++attempt) {
    // shifts 0, 1, -1, 2, -2, ...
    const long shift = attempt == 0 ? 0 : ((attempt % 2 == 1) ? (attempt + 1) / 2 : -(attempt / 2));
    MultiPoly u = MultiPoly::x() - MultiPoly::monomial(Rational(shift), 0, 1);
    MultiPoly c;
    MultiPoly upow = MultiPoly::constant(Rational(1));
    for (int j = 0; j <= d; ++j) {
      c += MultiPoly::from_uni(chi[static_cast<size_t>(j)].rep(), Var::Y) * upow;
      upow = upow * u;
    }
    UniPoly norm = resultant(m_theta, c, Var::Y);
    if (norm.degree() != m.degree() * d) continue;
    if (gcd(norm, norm.derivative()).degree() != 0) continue;

    std::vector<ExtRoot> out;
    for (const Interval& iv : isolate_real_roots(norm)) {
      FieldPtr F = NumberField::create(norm, iv);
      Elem gamma = generator(F);
      KPoly a = kpoly_from_rational(F, m);
      KPoly b = substitute(c, Var::X, gamma);
      KPoly g = kpoly_gcd(a, b);
      if (kpoly_degree(g) != 1) throw InternalConsistency("primitive element: gcd is not linear");
      Elem theta_img = -g[0];
      // keep the root only if theta_img is our theta (and not a conjugate)
      bool keep = false;
      while (true) {
        Interval e = F->enclose_once(theta_img.rep());
        const Interval& box = K->theta_interval();
        if (e.inside_open(box)) {
          keep = true;
          break;
        }
        if (e.hi < box.lo || e.lo > box.hi) break;
        if (F->theta_interval().is_point()) break;
        F->refine_theta();
      }
      if (!keep) continue;
      Elem root = gamma - Rational(shift) * theta_img;
      out.push_back({Embedding{F, theta_img.rep()}, root});
    }
    return out;
  }
  throw InternalConsistency("primitive element: no separating shift found");
}

bool less_than(const ExtRoot& a, const ExtRoot& b) {
  Rational w(1);
  for (int i = 0; i < 4000; ++i) {
    Interval ea = a.root.enclose(w), eb = b.root.enclose(w);
    if (ea.hi < eb.lo) return true;
    if (eb.hi < ea.lo) return false;
    w /= 4;
  }
  throw InternalConsistency("real_roots: could not separate two roots");
}

}  // namespace

std::vector<ExtRoot> real_roots(const KPoly& p, const FieldPtr& K) {
  KPoly chi = p;
  kpoly_trim(chi);
  if (kpoly_degree(chi) < 1) return {};
  {
    KPoly g = kpoly_gcd(chi, kpoly_derivative(chi));
    if (kpoly_degree(g) > 0) chi = kpoly_divmod(chi, g).first;
  }
  chi = kpoly_monic(chi);
  std::vector<ExtRoot> out;
  if (kpoly_degree(chi) == 1) {
    out.push_back({identity_embedding(K), -chi[0]});
    return out;
  }
  if (all_rational(chi)) {
    UniPoly q = to_rational_poly(chi);
    UniPoly rest = q;
    std::vector<Interval> irr;
    for (Interval iv : isolate_real_roots(q)) {
      if (auto r = rational_root_in(q, iv)) {
        out.push_back({identity_embedding(K), Elem(K, *r)});
        rest = exact_quotient(rest, UniPoly(std::vector<Rational>{Rational(-*r), Rational(1)}));
      } else {
        irr.push_back(iv);
      }
    }
    if (!irr.empty()) {
      if (K->is_rational()) {
        Rational theta_value = K->theta_interval().lo;
        for (const auto& iv : irr) {
          FieldPtr F = NumberField::create(rest, iv);
          out.push_back({Embedding{F, UniPoly::constant(theta_value)}, generator(F)});
        }
      } else {
        for (auto& r : roots_by_norm(kpoly_from_rational(K, rest), K)) out.push_back(r);
      }
    }
  } else {
    out = roots_by_norm(chi, K);
  }
  std::sort(out.begin(), out.end(), less_than);
  return out;
}

}  // namespace polyinf

namespace polyinf {

Elem kpoly_resultant(const KPoly& a_in, const KPoly& b_in, const FieldPtr& k) {
  KPoly a = a_in, b = b_in;
  kpoly_trim(a);
  kpoly_trim(b);
  Elem result(k, Rational(1));
  if (a.empty() || b.empty()) return Elem(k, Rational(0));
  while (true) {
    const int m = kpoly_degree(a), n = kpoly_degree(b);
    if (n == 0) return result * pow(b[0], m);
    if (m == 0) return result * pow(a[0], n);
    KPoly r = kpoly_divmod(a, b).second;
    if (r.empty()) return Elem(k, Rational(0));
    result *= pow(b.back(), m - kpoly_degree(r));
    if ((m * n) % 2 == 1) result = -result;
    a = std::move(b);
    b = std::move(r);
  }
}

}  // namespace polyinf
