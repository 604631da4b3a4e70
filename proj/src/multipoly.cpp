#include "polyinf/multipoly.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace polyinf {

MultiPoly::MultiPoly(Terms terms) : terms_(std::move(terms)) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second == 0)
      it = terms_.erase(it);
    else
      ++it;
  }
}

MultiPoly MultiPoly::constant(const Rational& c) { return monomial(c, 0, 0); }
MultiPoly MultiPoly::x() { return monomial(Rational(1), 1, 0); }
MultiPoly MultiPoly::y() { return monomial(Rational(1), 0, 1); }

MultiPoly MultiPoly::monomial(const Rational& c, int dx, int dy) {
  MultiPoly p;
  if (c != 0) p.terms_[{dx, dy}] = c;
  return p;
}

MultiPoly MultiPoly::from_uni(const UniPoly& p, Var v) {
  MultiPoly out;
  for (int i = 0; i <= p.degree(); ++i) {
    const Rational& c = p.coeffs()[static_cast<size_t>(i)];
    if (c == 0) continue;
    if (v == Var::X)
      out.terms_[{i, 0}] = c;
    else
      out.terms_[{0, i}] = c;
  }
  return out;
}

MultiPoly MultiPoly::from_coeffs_in_y(const std::vector<UniPoly>& coeffs) {
  MultiPoly out;
  for (size_t j = 0; j < coeffs.size(); ++j) {
    const auto& cj = coeffs[j];
    for (int i = 0; i <= cj.degree(); ++i) {
      const Rational& c = cj.coeffs()[static_cast<size_t>(i)];
      if (c != 0) out.terms_[{i, static_cast<int>(j)}] = c;
    }
  }
  return out;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponent{0, 0});
}

Rational MultiPoly::coeff(int dx, int dy) const {
  auto it = terms_.find({dx, dy});
  return it == terms_.end() ? Rational(0) : it->second;
}

int MultiPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.first + e.second);
  return d;
}

int MultiPoly::degree(Var v) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, v == Var::X ? e.first : e.second);
  return d;
}

std::vector<UniPoly> MultiPoly::coeffs_in(Var v) const {
  const int dv = degree(v);
  if (dv < 0) return {};
  const int other = degree(v == Var::X ? Var::Y : Var::X);
  std::vector<std::vector<Rational>> raw(static_cast<size_t>(dv) + 1,
                                         std::vector<Rational>(static_cast<size_t>(other) + 1));
  for (const auto& [e, c] : terms_) {
    int j = v == Var::X ? e.first : e.second;
    int i = v == Var::X ? e.second : e.first;
    raw[static_cast<size_t>(j)][static_cast<size_t>(i)] = c;
  }
  std::vector<UniPoly> out;
  out.reserve(raw.size());
  for (auto& r : raw) out.emplace_back(std::move(r));
  return out;
}

std::vector<UniPoly> MultiPoly::coeffs_in_y() const { return coeffs_in(Var::Y); }

MultiPoly MultiPoly::derivative(Var v) const {
  MultiPoly out;
  for (const auto& [e, c] : terms_) {
    int k = v == Var::X ? e.first : e.second;
    if (k == 0) continue;
    Exponent ne = v == Var::X ? Exponent{e.first - 1, e.second} : Exponent{e.first, e.second - 1};
    out.terms_[ne] = c * k;
  }
  return out;
}

MultiPoly MultiPoly::swapped() const {
  MultiPoly out;
  for (const auto& [e, c] : terms_) out.terms_[{e.second, e.first}] = c;
  return out;
}

Rational MultiPoly::eval(const Rational& x, const Rational& y) const {
  Rational acc(0);
  for (const auto& [e, c] : terms_) acc += c * pow(x, e.first) * pow(y, e.second);
  return acc;
}

double MultiPoly::eval(double x, double y) const {
  // Horner in y over Horner-in-x coefficients keeps large radii accurate enough
  const int dy = degree_y();
  if (dy < 0) return 0.0;
  std::vector<double> cy(static_cast<size_t>(dy) + 1, 0.0);
  const int dx = degree_x();
  std::vector<std::vector<double>> grid(static_cast<size_t>(dy) + 1,
                                        std::vector<double>(static_cast<size_t>(dx) + 1, 0.0));
  for (const auto& [e, c] : terms_) grid[static_cast<size_t>(e.second)][static_cast<size_t>(e.first)] = c.get_d();
  double acc = 0.0;
  for (int j = dy; j >= 0; --j) {
    double cj = 0.0;
    const auto& row = grid[static_cast<size_t>(j)];
    for (int i = dx; i >= 0; --i) cj = cj * x + row[static_cast<size_t>(i)];
    acc = acc * y + cj;
  }
  return acc;
}

UniPoly MultiPoly::substitute(Var v, const Rational& value) const {
  std::vector<UniPoly> cs = coeffs_in(v == Var::X ? Var::Y : Var::X);
  std::vector<Rational> out(cs.size());
  for (size_t j = 0; j < cs.size(); ++j) out[j] = cs[j].eval(value);
  return UniPoly(std::move(out));
}

MultiPoly MultiPoly::affine_substitute(const Rational& a, const Rational& b, const Rational& c,
                                       const Rational& d, const Rational& e,
                                       const Rational& g) const {
  MultiPoly X = monomial(a, 1, 0) + monomial(b, 0, 1) + constant(c);
  MultiPoly Y = monomial(d, 1, 0) + monomial(e, 0, 1) + constant(g);
  const int dx = degree_x(), dy = degree_y();
  std::vector<MultiPoly> xp{constant(Rational(1))}, yp{constant(Rational(1))};
  for (int i = 1; i <= dx; ++i) xp.push_back(xp.back() * X);
  for (int i = 1; i <= dy; ++i) yp.push_back(yp.back() * Y);
  MultiPoly out;
  for (const auto& [ex, co] : terms_)
    out += co * (xp[static_cast<size_t>(ex.first)] * yp[static_cast<size_t>(ex.second)]);
  return out;
}

Rational MultiPoly::leading_coefficient() const {
  if (terms_.empty()) return Rational(0);
  const Exponent* best = nullptr;
  const Rational* val = nullptr;
  for (const auto& [e, c] : terms_) {
    if (!best || e.first + e.second > best->first + best->second ||
        (e.first + e.second == best->first + best->second && e.first > best->first)) {
      best = &e;
      val = &c;
    }
  }
  return *val;
}

MultiPoly MultiPoly::normalized() const {
  if (terms_.empty()) return {};
  Integer l(1), g(0);
  for (const auto& [e, c] : terms_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  MultiPoly out = *this;
  for (auto& [e, c] : out.terms_) {
    c *= l;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
  }
  if (out.leading_coefficient() < 0) g = -g;
  for (auto& [e, c] : out.terms_) c /= g;
  return out;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Exponent, Rational>> ordered(terms_.begin(), terms_.end());
  std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
    int ta = a.first.first + a.first.second, tb = b.first.first + b.first.second;
    if (ta != tb) return ta > tb;
    return a.first.first > b.first.first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : ordered) {
    Rational mag = abs(c);
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    bool need_star = false;
    if (mag != 1 || (e.first == 0 && e.second == 0)) {
      os << mag.get_str();
      need_star = true;
    }
    auto emit = [&](const char* v, int k) {
      if (k == 0) return;
      if (need_star) os << "*";
      os << v;
      if (k > 1) os << "^" << k;
      need_star = true;
    };
    emit("x", e.first);
    emit("y", e.second);
  }
  return os.str();
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [e, c] : o.terms_) {
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (const auto& [e, c] : o.terms_) {
    auto [it, inserted] = terms_.try_emplace(e, -c);
    if (!inserted) {
      it->second -= c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
MultiPoly operator-(const MultiPoly& a) { return Rational(-1) * a; }
MultiPoly operator*(const Rational& s, MultiPoly a) { return a *= s; }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly::Terms out;
  for (const auto& [ea, ca] : a.terms())
    for (const auto& [eb, cb] : b.terms()) out[{ea.first + eb.first, ea.second + eb.second}] += ca * cb;
  return MultiPoly(std::move(out));
}

MultiPoly pow(const MultiPoly& p, int n) {
  MultiPoly result = MultiPoly::constant(Rational(1));
  MultiPoly base = p;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

}  // namespace polyinf
