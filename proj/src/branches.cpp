#include "polyinf/branches.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <sstream>

#include "polyinf/elimination.hpp"
#include "polyinf/errors.hpp"

namespace polyinf {

namespace detail {

using TSeries = std::map<Rational, Elem, std::greater<>>;

// P(t, y) = sum_j c[j](t) y^j with rational t-exponents.
struct NPPoly {
  FieldPtr field;
  std::vector<TSeries> c;
};

struct ExpansionState {
  NPPoly poly;  // untruncated polynomial of the simple node
  std::vector<SeriesTerm> prefix;
  Rational bound;  // later exponents are below this (or equal, if inclusive)
  bool inclusive = false;
  bool exact = false;
};

}  // namespace detail

namespace {

using detail::ExpansionState;
using detail::NPPoly;
using detail::TSeries;

constexpr int kMaxDepth = 48;

struct Cut {
  Rational threshold;
  Rational mu_max;
};

NPPoly embed(const NPPoly& p, const Embedding& e) {
  NPPoly out{e.target, {}};
  out.c.reserve(p.c.size());
  for (const auto& s : p.c) {
    TSeries m;
    for (const auto& [a, v] : s) m.emplace(a, e.apply(v));
    out.c.push_back(std::move(m));
  }
  return out;
}

std::vector<SeriesTerm> embed(const std::vector<SeriesTerm>& terms, const Embedding& e) {
  std::vector<SeriesTerm> out;
  for (const auto& t : terms) out.push_back({t.exponent, e.apply(t.coeff)});
  return out;
}

void prune(TSeries& s) {
  for (auto it = s.begin(); it != s.end();) {
    if (it->second.is_zero())
      it = s.erase(it);
    else
      ++it;
  }
}

// y -> c t^mu + y
NPPoly shift(const NPPoly& p, const Elem& c, const Rational& mu, const std::optional<Cut>& cut, bool& dropped) {
  const size_t n = p.c.size();
  NPPoly q{p.field, std::vector<TSeries>(n)};
  std::vector<Elem> cpow{Elem(p.field, Rational(1))};
  for (size_t k = 1; k < n; ++k) cpow.push_back(cpow.back() * c);
  std::vector<std::vector<Integer>> binom(n, std::vector<Integer>(n));
  for (size_t j = 0; j < n; ++j) {
    binom[j][0] = 1;
    for (size_t i = 1; i <= j; ++i) binom[j][i] = binom[j - 1][i - 1] + (i < j ? binom[j - 1][i] : Integer(0));
  }
  for (size_t j = 0; j < n; ++j) {
    for (const auto& [a, v] : p.c[j]) {
      for (size_t i = 0; i <= j; ++i) {
        Rational e = a + mu * static_cast<long>(j - i);
        if (cut && e + cut->mu_max * static_cast<long>(i) < cut->threshold) {
          dropped = true;
          continue;
        }
        Elem term = Rational(binom[j][i]) * (cpow[j - i] * v);
        auto [it, inserted] = q.c[i].try_emplace(e, term);
        if (!inserted) it->second += term;
      }
    }
  }
  for (auto& s : q.c) prune(s);
  return q;
}

void apply_cut(NPPoly& p, const Cut& cut, bool& dropped) {
  for (size_t j = 0; j < p.c.size(); ++j) {
    auto& s = p.c[j];
    for (auto it = s.begin(); it != s.end();) {
      if (it->first + cut.mu_max * static_cast<long>(j) < cut.threshold) {
        dropped = true;
        it = s.erase(it);
      } else {
        ++it;
      }
    }
  }
}

struct Edge {
  int j0, j1;
  Rational mu;
};

// Edges of the upper Newton hull starting at j = 0 whose slope mu stays
// below the bound (or at it, when inclusive).
std::vector<Edge> relevant_edges(const NPPoly& p, const Rational& bound, bool inclusive) {
  std::vector<Edge> edges;
  int j0 = 0;
  const int n = static_cast<int>(p.c.size()) - 1;
  while (j0 < n) {
    const Rational a0 = p.c[static_cast<size_t>(j0)].begin()->first;
    int best = -1;
    Rational best_mu;
    for (int j = j0 + 1; j <= n; ++j) {
      const auto& s = p.c[static_cast<size_t>(j)];
      if (s.empty()) continue;
      Rational mu = (a0 - s.begin()->first) / (j - j0);
      if (best < 0 || mu <= best_mu) {
        best = j;
        best_mu = mu;
      }
    }
    if (best < 0) break;
    if (best_mu > bound || (!inclusive && best_mu == bound)) break;
    edges.push_back({j0, best, best_mu});
    j0 = best;
  }
  return edges;
}

std::string prefix_string(const std::vector<SeriesTerm>& prefix, const FieldPtr& k) {
  return PuiseuxSeries(k, prefix, std::nullopt).to_string();
}

struct RawBranch {
  std::shared_ptr<ExpansionState> state;
};

void explore(NPPoly p, std::vector<SeriesTerm> prefix, const Rational& bound, bool inclusive, int depth,
             std::vector<RawBranch>& out) {
  if (depth > kMaxDepth)
    throw TruncationExhausted("branches do not separate within the depth cap; colliding prefix y = " +
                              prefix_string(prefix, p.field));
  while (!p.c.empty() && p.c.back().empty()) p.c.pop_back();
  if (p.c.empty()) throw PreconditionError("branch expansion reached the zero polynomial (curve not square-free?)");
  if (p.c[0].empty()) {
    // the prefix itself is an exact root
    auto st = std::make_shared<ExpansionState>();
    st->poly.field = p.field;
    st->prefix = prefix;
    st->bound = bound;
    st->exact = true;
    out.push_back({st});
    size_t k = 0;
    while (k < p.c.size() && p.c[k].empty()) ++k;
    if (k > 1) throw PreconditionError("repeated root in branch expansion (curve not square-free)");
    p.c.erase(p.c.begin(), p.c.begin() + static_cast<long>(k));
  }
  std::vector<Edge> edges = relevant_edges(p, bound, inclusive);
  if (edges.empty()) return;
  if (edges.back().j1 == 1) {
    auto st = std::make_shared<ExpansionState>();
    st->poly = std::move(p);
    st->prefix = std::move(prefix);
    st->bound = bound;
    st->inclusive = inclusive;
    out.push_back({st});
    return;
  }
  for (const Edge& e : edges) {
    const Rational level = p.c[static_cast<size_t>(e.j0)].begin()->first + e.mu * e.j0;
    KPoly phi;
    for (int j = e.j0; j <= e.j1; ++j) {
      const auto& s = p.c[static_cast<size_t>(j)];
      if (!s.empty() && s.begin()->first + e.mu * j == level)
        phi.push_back(s.begin()->second);
      else
        phi.emplace_back(p.field, Rational(0));
    }
    for (const ExtRoot& r : real_roots(phi, p.field)) {
      NPPoly q = embed(p, r.embedding);
      std::vector<SeriesTerm> pre = embed(prefix, r.embedding);
      pre.push_back({e.mu, r.root});
      bool dropped = false;
      q = shift(q, r.root, e.mu, std::nullopt, dropped);
      explore(std::move(q), std::move(pre), e.mu, false, depth + 1, out);
    }
  }
}

PuiseuxSeries expand_state(const ExpansionState& st, const Rational& order) {
  const FieldPtr& k = st.poly.field;
  if (st.exact) return PuiseuxSeries(k, st.prefix, std::nullopt);
  const Rational omega = std::min(order, st.bound);
  NPPoly p = st.poly;
  std::vector<SeriesTerm> terms = st.prefix;
  const Rational a1 = p.c.at(1).begin()->first;
  Cut cut{a1 + omega, st.bound};
  bool dropped = false;
  apply_cut(p, cut, dropped);
  bool exact = false;
  Rational mu_prev = st.bound;
  bool allow_equal = st.inclusive;
  while (true) {
    if (p.c[0].empty()) {
      exact = !dropped;
      break;
    }
    const auto& lead0 = *p.c[0].begin();
    const auto& lead1 = *p.c[1].begin();
    if (lead1.first != a1) throw InternalConsistency("simple branch: the linear coefficient changed order");
    Rational mu = lead0.first - a1;
    if (mu > mu_prev || (mu == mu_prev && !allow_equal)) throw InternalConsistency("simple branch: exponents failed to decrease");
    if (mu < omega) break;
    Elem c = -(lead0.second / lead1.second);
    terms.push_back({mu, c});
    cut.mu_max = mu;
    p = shift(p, c, mu, cut, dropped);
    mu_prev = mu;
    allow_equal = false;
  }
  if (exact) return PuiseuxSeries(k, std::move(terms), std::nullopt);
  std::vector<SeriesTerm> kept;
  for (auto& t : terms)
    if (t.exponent >= omega) kept.push_back(t);
  return PuiseuxSeries(k, std::move(kept), omega);
}

NPPoly root_poly(const MultiPoly& curve, int sigma) {
  NPPoly p{NumberField::rationals(), {}};
  FieldPtr q = p.field;
  for (const UniPoly& cj : curve.coeffs_in_y()) {
    TSeries s;
    for (int i = 0; i <= cj.degree(); ++i) {
      Rational v = cj.coeff(i);
      if (v == 0) continue;
      if (sigma < 0 && i % 2 == 1) v = -v;
      s.emplace(Rational(i), Elem(q, v));
    }
    p.c.push_back(std::move(s));
  }
  return p;
}

RealAlgebraic norm_constant(const PuiseuxSeries& coordinate) {
  auto lead = coordinate.leading();
  if (!lead || lead->exponent != 1) return RealAlgebraic(1);
  Elem k2 = Elem(lead->coeff.field(), Rational(1)) + lead->coeff * lead->coeff;
  return k2.to_real().sqrt();
}

}  // namespace

std::string BranchAtInfinity::describe() const {
  const char* p = parameter == Var::X ? "x" : "y";
  const char* o = parameter == Var::X ? "y" : "x";
  std::ostringstream os;
  os << p << " = " << (sigma > 0 ? "t" : "-t") << ", " << o << " = " << coordinate.to_string();
  return os.str();
}

std::pair<double, double> BranchAtInfinity::point(double t) const {
  double s = coordinate.eval(t);
  double p = sigma * t;
  return parameter == Var::X ? std::make_pair(p, s) : std::make_pair(s, p);
}

std::vector<BranchAtInfinity> branches_at_infinity(const MultiPoly& curve, const Rational& max_order) {
  if (curve.is_zero()) throw PreconditionError("branches_at_infinity: zero curve");
  if (curve.total_degree() > 0 && squarefree_part(curve).total_degree() != curve.total_degree())
    throw PreconditionError("branches_at_infinity: curve is not square-free");
  std::vector<BranchAtInfinity> out;
  if (curve.is_constant()) return out;
  for (Var param : {Var::X, Var::Y}) {
    const MultiPoly c = param == Var::X ? curve : curve.swapped();
    for (int sigma : {1, -1}) {
      std::vector<RawBranch> raw;
      // x-parametrized branches take |y| = O(|x|); the rest must have |x| = o(|y|)
      explore(root_poly(c, sigma), {}, Rational(1), param == Var::X, 0, raw);
      for (auto& r : raw) {
        BranchAtInfinity b;
        b.parameter = param;
        b.sigma = sigma;
        b.state = r.state;
        b.coordinate = expand_state(*r.state, max_order);
        b.kappa = norm_constant(b.coordinate);
        out.push_back(std::move(b));
      }
    }
  }
  return out;
}

PuiseuxSeries expand_coordinate(const BranchAtInfinity& branch, const Rational& order) {
  if (!branch.state) return branch.coordinate;
  return expand_state(*branch.state, order);
}

PuiseuxSeries compose_objective(const MultiPoly& f, const BranchAtInfinity& branch, const Rational& max_order) {
  const MultiPoly g = branch.parameter == Var::X ? f : f.swapped();
  const std::vector<UniPoly> cs = g.coeffs_in_y();
  Rational omega = max_order;
  for (int attempt = 0; attempt < 6; ++attempt) {
    PuiseuxSeries s = expand_coordinate(branch, omega);
    const FieldPtr& k = s.field();
    PuiseuxSeries acc(k);
    for (auto it = cs.rbegin(); it != cs.rend(); ++it) {
      std::vector<SeriesTerm> terms;
      for (int i = it->degree(); i >= 0; --i) {
        Rational v = it->coeff(i);
        if (v == 0) continue;
        if (branch.sigma < 0 && i % 2 == 1) v = -v;
        terms.push_back({Rational(i), Elem(k, v)});
      }
      acc = acc * s + PuiseuxSeries(k, std::move(terms), std::nullopt);
    }
    if (acc.is_exact() || *acc.truncation() <= max_order) return acc;
    if (s.is_exact()) return acc;
    omega -= *acc.truncation() - max_order;
  }
  throw TruncationExhausted("objective series undetermined at order " + max_order.get_str() + " along " +
                            branch.describe());
}

namespace {

bool constant_consistent(const MultiPoly& curve, const MultiPoly& f, const BranchAtInfinity& b, const Elem& c) {
  const MultiPoly C = b.parameter == Var::X ? curve : curve.swapped();
  const MultiPoly F = b.parameter == Var::X ? f : f.swapped();
  const int D = std::max(0, f.total_degree()) * std::max(0, curve.total_degree());
  const FieldPtr& k = c.field();
  const UniPoly lc_c = C.coeffs_in_y().back();
  const UniPoly lc_f = F.degree_y() >= 1 ? F.coeffs_in_y().back() : UniPoly::constant(Rational(1));
  MultiPoly shifted = MultiPoly::constant(Rational(0)) - F;
  int used = 0;
  for (long x0 = 1; used <= D; ++x0) {
    if (lc_c.eval(Rational(x0)) == 0 || lc_f.eval(Rational(x0)) == 0) continue;
    KPoly a = kpoly_from_rational(k, C.substitute(Var::X, Rational(x0)));
    KPoly bpoly = kpoly_from_rational(k, shifted.substitute(Var::X, Rational(x0)));
    if (bpoly.empty()) bpoly.emplace_back(k, Rational(0));
    bpoly[0] += c;
    if (!kpoly_resultant(a, bpoly, k).is_zero()) return false;
    ++used;
  }
  return true;
}

}  // namespace

ObjectiveExpansion expand_objective(const MultiPoly& curve, const MultiPoly& f, const BranchAtInfinity& branch) {
  const int D = std::max(0, f.total_degree()) * std::max(0, curve.total_degree());
  Rational order(-2);
  while (true) {
    PuiseuxSeries s = compose_objective(f, branch, order);
    for (const auto& t : s.terms())
      if (t.exponent != 0) return {s, std::nullopt, order};
    if (s.is_exact() || *s.truncation() <= -D) {
      Elem c = *s.coefficient(Rational(0));
      if (!constant_consistent(curve, f, branch, c))
        throw InternalConsistency("constant branch value fails the resultant check along " + branch.describe());
      return {s, c, order};
    }
    order = std::min(Rational(order * 2), Rational(-D));
  }
}

std::optional<RealAlgebraic> is_constant_on_branch(const MultiPoly& curve_sqfree, const MultiPoly& f,
                                                   const BranchAtInfinity& branch) {
  ObjectiveExpansion e = expand_objective(curve_sqfree, f, branch);
  if (!e.constant) return std::nullopt;
  return e.constant->to_real();
}

BranchAsymptotics to_norm_asymptotics(const BranchAtInfinity& branch, const PuiseuxSeries& objective,
                                      const std::optional<RealAlgebraic>& constant) {
  BranchAsymptotics r;
  const Rational& d = branch.norm_exponent;
  if (constant) {
    r.alpha = 0;
    r.param_exponent = 0;
    r.a = *constant;
    r.a_sign = constant->sign();
    r.a_norm_numeric = constant->to_double();
    r.lambda = *constant;
    r.is_constant = true;
    r.single_exact_term = true;
    return r;
  }
  auto lead = objective.leading();
  if (!lead) throw PreconditionError("to_norm_asymptotics: objective series has no known term");
  r.param_exponent = lead->exponent;
  r.alpha = lead->exponent / d;
  r.a = lead->coeff.to_real();
  r.a_sign = r.a.sign();
  const double kappa = branch.kappa.to_double();
  r.a_norm_numeric = r.a.to_double() * std::pow(kappa, -r.alpha.get_d());
  if (r.alpha > 0) {
    r.lambda = r.a_sign > 0 ? ExtendedValue::pos_inf() : ExtendedValue::neg_inf();
  } else if (r.alpha == 0) {
    r.lambda = r.a;
    if (objective.terms().size() > 1) {
      r.approach_exponent = objective.terms()[1].exponent;
      r.approach_coeff = objective.terms()[1].coeff.to_real();
    }
  } else {
    r.lambda = RealAlgebraic(0);
    r.approach_exponent = lead->exponent;
    r.approach_coeff = r.a;
  }
  r.single_exact_term = objective.is_exact() && objective.terms().size() == 1 && branch.coordinate.is_zero();
  return r;
}

}  // namespace polyinf
