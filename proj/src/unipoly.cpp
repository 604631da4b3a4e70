#include "polyinf/unipoly.hpp"

#include <sstream>

#include "polyinf/errors.hpp"

namespace polyinf {

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UniPoly::UniPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

UniPoly UniPoly::constant(const Rational& c) { return UniPoly(std::vector<Rational>{c}); }

UniPoly UniPoly::monomial(const Rational& c, int degree) {
  std::vector<Rational> v(static_cast<size_t>(degree) + 1);
  v.back() = c;
  return UniPoly(std::move(v));
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational UniPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return Rational(0);
  return coeffs_[static_cast<size_t>(i)];
}

Rational UniPoly::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Interval UniPoly::eval(const Interval& x) const {
  if (x.is_point()) return Interval(eval(x.lo));
  Interval acc(Rational(0));
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x;
    acc.lo += *it;
    acc.hi += *it;
  }
  return acc;
}

double UniPoly::eval(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
  return UniPoly(std::move(d));
}

UniPoly UniPoly::compose(const UniPoly& q) const {
  UniPoly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * q;
    acc += UniPoly::constant(*it);
  }
  return acc;
}

UniPoly UniPoly::shifted(const Rational& a) const {
  std::vector<Rational> c = coeffs_;
  const int n = degree();
  if (a == 0 || n <= 0) return *this;
  for (int i = 0; i < n; ++i) {
    for (int j = n - 1; j >= i; --j) c[static_cast<size_t>(j)] += a * c[static_cast<size_t>(j) + 1];
  }
  return UniPoly(std::move(c));
}

UniPoly UniPoly::scaled(const Rational& s) const {
  std::vector<Rational> c = coeffs_;
  Rational power(1);
  for (auto& ci : c) {
    ci *= power;
    power *= s;
  }
  return UniPoly(std::move(c));
}

UniPoly UniPoly::reversed() const {
  std::vector<Rational> c(coeffs_.rbegin(), coeffs_.rend());
  return UniPoly(std::move(c));
}

UniPoly UniPoly::cleared() const {
  Integer l(1);
  for (const auto& c : coeffs_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  UniPoly r = *this;
  r *= Rational(l);
  return r;
}

UniPoly UniPoly::primitive() const {
  if (is_zero()) return {};
  UniPoly r = cleared();
  Integer g(0);
  for (const auto& c : r.coeffs_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
  if (r.leading() < 0) g = -g;
  for (auto& c : r.coeffs_) c /= g;
  return r;
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return {};
  UniPoly r = *this;
  Rational inv = Rational(1) / leading();
  r *= inv;
  return r;
}

std::string UniPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[static_cast<size_t>(i)];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const Rational& s) {
  if (s == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= s;
  return *this;
}

UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
UniPoly operator-(const UniPoly& a) { return Rational(-1) * a; }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(static_cast<size_t>(a.degree() + b.degree()) + 1);
  const auto& ac = a.coeffs();
  const auto& bc = b.coeffs();
  for (size_t i = 0; i < ac.size(); ++i) {
    if (ac[i] == 0) continue;
    for (size_t j = 0; j < bc.size(); ++j) c[i + j] += ac[i] * bc[j];
  }
  return UniPoly(std::move(c));
}

UniPoly operator*(const Rational& s, UniPoly a) { return a *= s; }

UniPoly pow(const UniPoly& p, int n) {
  UniPoly result = UniPoly::constant(Rational(1));
  UniPoly base = p;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw DegenerateInput("polynomial division by zero");
  if (a.degree() < b.degree()) return {UniPoly{}, a};
  std::vector<Rational> r = a.coeffs();
  std::vector<Rational> q(static_cast<size_t>(a.degree() - b.degree()) + 1);
  const auto& bc = b.coeffs();
  const Rational inv = Rational(1) / b.leading();
  const int db = b.degree();
  for (int k = a.degree() - db; k >= 0; --k) {
    Rational f = r[static_cast<size_t>(k + db)] * inv;
    q[static_cast<size_t>(k)] = f;
    if (f == 0) continue;
    for (int j = 0; j <= db; ++j) r[static_cast<size_t>(k + j)] -= f * bc[static_cast<size_t>(j)];
  }
  r.resize(static_cast<size_t>(db));
  return {UniPoly(std::move(q)), UniPoly(std::move(r))};
}

UniPoly exact_quotient(const UniPoly& a, const UniPoly& b) { return divmod(a, b).first; }

bool divides(const UniPoly& d, const UniPoly& p) {
  if (d.is_zero()) throw DegenerateInput("divides: zero divisor");
  return divmod(p, d).second.is_zero();
}

namespace {

// Pseudo-remainder over Z for integer-coefficient inputs.
UniPoly pseudo_remainder(const UniPoly& a, const UniPoly& b) {
  std::vector<Rational> r = a.coeffs();
  const auto& bc = b.coeffs();
  const int db = b.degree();
  const Rational& lb = b.leading();
  int dr = static_cast<int>(r.size()) - 1;
  while (dr >= db) {
    Rational lr = r[static_cast<size_t>(dr)];
    for (auto& c : r) c *= lb;
    for (int j = 0; j <= db; ++j) r[static_cast<size_t>(dr - db + j)] -= lr * bc[static_cast<size_t>(j)];
    r.pop_back();
    while (!r.empty() && r.back() == 0) r.pop_back();
    dr = static_cast<int>(r.size()) - 1;
  }
  return UniPoly(std::move(r));
}

}  // namespace

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero()) return b.primitive();
  if (b.is_zero()) return a.primitive();
  UniPoly u = a.primitive();
  UniPoly v = b.primitive();
  if (u.degree() < v.degree()) std::swap(u, v);
  while (!v.is_zero()) {
    if (v.degree() == 0) return UniPoly::constant(Rational(1));
    UniPoly r = pseudo_remainder(u, v);
    u = std::move(v);
    v = r.primitive();
  }
  return u.primitive();
}

ExtendedGcd extended_gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly r0 = a, r1 = b;
  UniPoly s0 = UniPoly::constant(Rational(1)), s1;
  UniPoly t0, t1 = UniPoly::constant(Rational(1));
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    UniPoly s2 = s0 - q * s1;
    UniPoly t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {UniPoly{}, UniPoly{}, UniPoly{}};
  Rational inv = Rational(1) / r0.leading();
  r0 *= inv;
  s0 *= inv;
  t0 *= inv;
  return {std::move(r0), std::move(s0), std::move(t0)};
}

UniPoly squarefree_part(const UniPoly& p) {
  if (p.is_zero()) throw DegenerateInput("squarefree_part of the zero polynomial");
  if (p.degree() == 0) return UniPoly::constant(Rational(1));
  UniPoly g = gcd(p, p.derivative());
  return exact_quotient(p.primitive(), g).primitive();
}

Rational resultant(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return Rational(0);
  if (a.degree() == 0) return pow(a.leading(), b.degree());
  if (b.degree() == 0) return pow(b.leading(), a.degree());
  const int m = a.degree();
  const int n = b.degree();
  UniPoly r = divmod(a, b).second;
  if (r.is_zero()) return Rational(0);
  Rational factor = pow(b.leading(), m - r.degree());
  if ((m * n) % 2 == 1) factor = -factor;
  return factor * resultant(b, r);
}

}  // namespace polyinf
