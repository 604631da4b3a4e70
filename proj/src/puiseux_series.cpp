#include "polyinf/puiseux_series.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <sstream>

#include "polyinf/errors.hpp"

namespace polyinf {

namespace {

using TermMap = std::map<Rational, Elem, std::greater<>>;

PuiseuxSeries from_map(const FieldPtr& k, const TermMap& m, const std::optional<Rational>& trunc) {
  std::vector<SeriesTerm> terms;
  for (const auto& [e, c] : m) {
    if (trunc && e < *trunc) break;
    if (c.is_zero()) continue;
    terms.push_back({e, c});
  }
  return PuiseuxSeries(k, std::move(terms), trunc);
}

// Exponent bound for the size of a: leading exponent, or the truncation
// order when no known term survives; nullopt for the exact zero series.
std::optional<Rational> size_bound(const PuiseuxSeries& a) {
  if (!a.terms().empty()) return a.terms().front().exponent;
  return a.truncation();
}

std::optional<Rational> max_opt(const std::optional<Rational>& a, const std::optional<Rational>& b) {
  if (!a) return b;
  if (!b) return a;
  return std::max(*a, *b);
}

}  // namespace

PuiseuxSeries::PuiseuxSeries(FieldPtr k, std::vector<SeriesTerm> terms, std::optional<Rational> truncation)
    : field_(std::move(k)), terms_(std::move(terms)), trunc_(std::move(truncation)) {}

PuiseuxSeries PuiseuxSeries::monomial(const Elem& c, const Rational& exponent) {
  if (c.is_zero()) return PuiseuxSeries(c.field());
  return PuiseuxSeries(c.field(), {{exponent, c}}, std::nullopt);
}

Integer PuiseuxSeries::ramification() const {
  Integer l(1);
  for (const auto& t : terms_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.exponent.get_den_mpz_t());
  return l;
}

std::optional<SeriesTerm> PuiseuxSeries::leading() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.front();
}

std::optional<Elem> PuiseuxSeries::coefficient(const Rational& e) const {
  if (trunc_ && e < *trunc_) return std::nullopt;
  for (const auto& t : terms_)
    if (t.exponent == e) return t.coeff;
  return Elem(field_, Rational(0));
}

PuiseuxSeries PuiseuxSeries::truncated(const Rational& order) const {
  std::vector<SeriesTerm> kept;
  for (const auto& t : terms_)
    if (t.exponent >= order) kept.push_back(t);
  Rational tr = trunc_ ? std::max(*trunc_, order) : order;
  return PuiseuxSeries(field_, std::move(kept), tr);
}

PuiseuxSeries PuiseuxSeries::embedded(const Embedding& e) const {
  std::vector<SeriesTerm> mapped;
  mapped.reserve(terms_.size());
  for (const auto& t : terms_) mapped.push_back({t.exponent, e.apply(t.coeff)});
  return PuiseuxSeries(e.target, std::move(mapped), trunc_);
}

double PuiseuxSeries::eval(double t) const {
  double acc = 0.0;
  for (const auto& term : terms_) acc += term.coeff.to_double() * std::pow(t, term.exponent.get_d());
  return acc;
}

std::string exponent_string(const Rational& e) {
  if (e.get_den() == 1) return e.get_str();
  return "(" + e.get_str() + ")";
}

std::string PuiseuxSeries::to_string(const std::string& var) const {
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    RealAlgebraic c = t.coeff.to_real();
    std::string cs;
    bool negative = c.sign() < 0;
    if (c.is_rational()) {
      Rational mag = abs(c.rational_value());
      cs = mag.get_str();
      if (mag == 1 && t.exponent != 0) cs.clear();
    } else {
      cs = "[" + (negative ? c.negated() : c).to_string() + "]";
    }
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    os << cs;
    if (t.exponent != 0) {
      if (!cs.empty()) os << "*";
      os << var;
      if (t.exponent != 1) os << "^" << exponent_string(t.exponent);
    }
  }
  if (trunc_) {
    os << (first ? "" : " + ") << "O(" << var << "^" << exponent_string(*trunc_) << ")";
  } else if (first) {
    os << "0";
  }
  return os.str();
}

PuiseuxSeries operator+(const PuiseuxSeries& a, const PuiseuxSeries& b) {
  TermMap m;
  for (const auto& t : a.terms()) m.emplace(t.exponent, t.coeff);
  for (const auto& t : b.terms()) {
    auto [it, inserted] = m.try_emplace(t.exponent, t.coeff);
    if (!inserted) it->second += t.coeff;
  }
  const FieldPtr& k = a.terms().empty() ? b.field() : a.field();
  return from_map(k, m, max_opt(a.truncation(), b.truncation()));
}

PuiseuxSeries operator-(const PuiseuxSeries& a, const PuiseuxSeries& b) {
  return a + Elem(b.field(), Rational(-1)) * b;
}

PuiseuxSeries operator*(const Elem& c, const PuiseuxSeries& a) {
  if (c.is_zero()) return PuiseuxSeries(c.field());
  std::vector<SeriesTerm> terms;
  for (const auto& t : a.terms()) terms.push_back({t.exponent, c * t.coeff});
  return PuiseuxSeries(c.field(), std::move(terms), a.truncation());
}

PuiseuxSeries operator*(const PuiseuxSeries& a, const PuiseuxSeries& b) {
  if (a.is_zero() || b.is_zero()) return PuiseuxSeries(a.field());
  std::optional<Rational> trunc;
  auto la = size_bound(a), lb = size_bound(b);
  if (a.truncation()) trunc = max_opt(trunc, *a.truncation() + *lb);
  if (b.truncation()) trunc = max_opt(trunc, *b.truncation() + *la);
  TermMap m;
  for (const auto& s : a.terms())
    for (const auto& t : b.terms()) {
      Rational e = s.exponent + t.exponent;
      if (trunc && e < *trunc) continue;
      auto [it, inserted] = m.try_emplace(e, s.coeff * t.coeff);
      if (!inserted) it->second += s.coeff * t.coeff;
    }
  return from_map(a.field(), m, trunc);
}

}  // namespace polyinf
