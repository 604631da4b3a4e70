#include "polyinf/roots.hpp"

#include <algorithm>

#include "polyinf/errors.hpp"

namespace polyinf {

namespace {

using IntVec = std::vector<Integer>;

int variations(const IntVec& c) {
  int count = 0;
  int last = 0;
  for (const auto& v : c) {
    int s = sgn(v);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

void taylor_shift_one(IntVec& c) {
  const size_t n = c.size();
  for (size_t i = 0; i + 1 < n; ++i)
    for (size_t j = n - 1; j-- > i;) c[j] += c[j + 1];
}

// Variation count of (1+x)^n r(1/(1+x)); bounds the roots of r in (0, 1).
int descartes_bound(const IntVec& r) {
  IntVec rev(r.rbegin(), r.rend());
  taylor_shift_one(rev);
  return variations(rev);
}

// 2^n r(x/2)
IntVec half_scale(const IntVec& r) {
  IntVec out(r.size());
  const size_t n = r.size() - 1;
  for (size_t i = 0; i <= n; ++i) {
    Integer v = r[i];
    mpz_mul_2exp(v.get_mpz_t(), v.get_mpz_t(), static_cast<mp_bitcnt_t>(n - i));
    out[i] = v;
  }
  return out;
}

void make_primitive(IntVec& r) {
  Integer g(0);
  for (const auto& v : r) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  if (g > 1)
    for (auto& v : r) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

IntVec to_ints(const UniPoly& p) {
  UniPoly q = p.primitive();
  IntVec out;
  out.reserve(q.coeffs().size());
  for (const auto& c : q.coeffs()) out.push_back(c.get_num());
  return out;
}

struct Task {
  IntVec r;
  Rational lo, hi;
};

}  // namespace

int sign_variations(const std::vector<Rational>& c) {
  int count = 0, last = 0;
  for (const auto& v : c) {
    int s = sgn(v);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

Rational cauchy_bound(const UniPoly& p) {
  if (p.degree() < 1) return Rational(1);
  Rational m(0);
  Rational lc = abs(p.leading());
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, Rational(abs(p.coeff(i)) / lc));
  // round up to a power of two so the bisection points stay dyadic
  Rational b(1);
  while (b < m + 1) b *= 2;
  return b;
}

std::vector<Interval> isolate_real_roots(const UniPoly& p) {
  if (p.is_zero()) throw DegenerateInput("isolate_real_roots: zero polynomial");
  std::vector<Interval> out;
  if (p.degree() < 1) return out;
  UniPoly s = squarefree_part(p);
  if (s.degree() == 1) {
    out.emplace_back(Rational(-s.coeff(0) / s.coeff(1)));
    return out;
  }
  const Rational bound = cauchy_bound(s);
  // r(x) = s(-B + 2B x), roots of s in (-B, B) <-> roots of r in (0, 1).
  UniPoly r0 = s.scaled(2 * bound).shifted(Rational(-1, 2));
  std::vector<Task> stack;
  stack.push_back({to_ints(r0), -bound, bound});
  while (!stack.empty()) {
    Task t = std::move(stack.back());
    stack.pop_back();
    int v = descartes_bound(t.r);
    if (v == 0) continue;
    if (v == 1) {
      out.emplace_back(t.lo, t.hi);
      continue;
    }
    Rational mid = (t.lo + t.hi) / 2;
    IntVec left = half_scale(t.r);
    IntVec right = left;
    taylor_shift_one(right);
    if (right[0] == 0) {
      // exact root at the midpoint: divide it out of both children
      out.emplace_back(mid);
      right.erase(right.begin());
      IntVec q(left.size() - 1);
      Integer carry(0);
      for (size_t i = left.size() - 1; i-- > 0;) {
        carry += left[i + 1];
        q[i] = carry;
      }
      left = std::move(q);
    }
    make_primitive(left);
    make_primitive(right);
    stack.push_back({std::move(right), mid, t.hi});
    stack.push_back({std::move(left), t.lo, mid});
  }
  // An open interval may end at an exact root found at a parent's midpoint;
  // move such endpoints inward so every open interval has a sign change.
  for (auto& iv : out) {
    if (iv.is_point()) continue;
    UniPoly q = s;
    for (const Rational* e : {&iv.lo, &iv.hi})
      if (s.eval(*e) == 0) q = exact_quotient(q, UniPoly(std::vector<Rational>{Rational(-*e), Rational(1)}));
    while (s.eval(iv.lo) == 0 || s.eval(iv.hi) == 0) {
      Rational mid = iv.midpoint();
      if (s.eval(mid) == 0) {
        iv = Interval(mid);
        break;
      }
      if (sgn(q.eval(iv.lo)) * sgn(q.eval(mid)) < 0)
        iv.hi = mid;
      else
        iv.lo = mid;
    }
  }
  std::sort(out.begin(), out.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  return out;
}

int sturm_count(const UniPoly& p, const Rational& a, const Rational& b) {
  if (p.is_zero()) throw DegenerateInput("sturm_count: zero polynomial");
  if (p.degree() < 1) return 0;
  std::vector<UniPoly> seq;
  seq.push_back(squarefree_part(p));
  seq.push_back(seq.back().derivative());
  while (seq.back().degree() > 0) {
    UniPoly r = divmod(seq[seq.size() - 2], seq.back()).second;
    if (r.is_zero()) break;
    seq.push_back(-r);
  }
  auto count_at = [&](const Rational& x) {
    std::vector<Rational> vals;
    vals.reserve(seq.size());
    for (const auto& q : seq) vals.push_back(q.eval(x));
    return sign_variations(vals);
  };
  return count_at(a) - count_at(b);
}

void bisect_root(const UniPoly& sqfree, Interval& iv) {
  if (iv.is_point()) return;
  Rational mid = iv.midpoint();
  int sm = sgn(sqfree.eval(mid));
  if (sm == 0) {
    iv = Interval(mid);
    return;
  }
  if (sm == sgn(sqfree.eval(iv.lo)))
    iv.lo = mid;
  else
    iv.hi = mid;
}

void refine_root(const UniPoly& sqfree, Interval& iv, const Rational& width) {
  while (!iv.is_point() && iv.width() > width) bisect_root(sqfree, iv);
}

std::optional<Rational> rational_root_in(const UniPoly& sqfree, Interval& iv) {
  if (iv.is_point()) return iv.lo;
  UniPoly p = sqfree.primitive();
  // a rational root a/b has b | lc; two such differ by at least 1/lc^2
  Rational lc = abs(p.leading());
  Rational w = Rational(1) / (lc * lc * 2);
  refine_root(p, iv, w);
  if (iv.is_point()) return iv.lo;
  Rational cand = simplest_between(iv.lo, iv.hi);
  if (p.eval(cand) == 0) {
    iv = Interval(cand);
    return cand;
  }
  return std::nullopt;
}

}  // namespace polyinf
