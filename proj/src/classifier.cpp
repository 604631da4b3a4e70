#include "polyinf/classifier.hpp"

#include <algorithm>
#include <cmath>

#include "polyinf/elimination.hpp"
#include "polyinf/errors.hpp"

namespace polyinf {

namespace {

const Rational kDisplayOrder(-2);

ExtendedValue min_ext(const std::vector<ExtendedValue>& v) {
  ExtendedValue m = ExtendedValue::pos_inf();
  for (const auto& x : v)
    if (x < m) m = x;
  return m;
}

ExtendedValue max_ext(const std::vector<ExtendedValue>& v) {
  ExtendedValue m = ExtendedValue::neg_inf();
  for (const auto& x : v)
    if (m < x) m = x;
  return m;
}

// Verdicts shared by the branch and the radial pipelines.
void finish(AnalysisReport& r) {
  std::vector<ExtendedValue> lambdas, lambdas_k, lambdas_not_k;
  for (size_t i = 0; i < r.branches.size(); ++i) {
    const BranchAsymptotics& a = r.branches[i].asymptotics;
    lambdas.push_back(a.lambda);
    if (a.is_constant) {
      lambdas_not_k.push_back(a.lambda);
    } else {
      r.K.push_back(i);
      lambdas_k.push_back(a.lambda);
    }
    if (a.lambda.is_finite()) insert_unique(r.T_infinity, a.lambda.value());
  }
  std::sort(r.T_infinity.begin(), r.T_infinity.end());
  r.lambda_star = min_ext(lambdas);
  r.lambda_max = max_ext(lambdas);
  r.bounded_below = !r.lambda_star.is_neg_inf();
  r.bounded_above = !r.lambda_max.is_pos_inf();

  // growth-exponent form of the same statement
  bool growth_ok = true;
  for (size_t k : r.K) {
    const auto& a = r.branches[k].asymptotics;
    if (a.alpha > 0 && a.a_sign < 0) growth_ok = false;
  }
  if (growth_ok != r.bounded_below)
    throw InternalConsistency("boundedness from below disagrees between branch limits and growth exponents");

  r.alpha_star = 0;
  for (size_t i = 0; i < r.branches.size(); ++i) {
    const auto& a = r.branches[i].asymptotics;
    Rational ak = a.is_constant ? Rational(0) : a.alpha;
    if (i == 0 || ak < r.alpha_star) r.alpha_star = ak;
  }

  bool by_growth = !r.branches.empty();
  for (const auto& b : r.branches) {
    const auto& a = b.asymptotics;
    if (a.is_constant || a.alpha <= 0 || a.a_sign <= 0) by_growth = false;
  }
  const bool by_growthi = r.lambda_star.is_pos_inf();
  const bool by_values = r.bounded_below && r.T_infinity.empty();
  if (by_growth != by_growthi || by_growthi != by_values)
    throw InternalConsistency("coercivity tests disagree: growth " + std::to_string(by_growth) + ", lambda_* " +
                              std::to_string(by_growthi) + ", tangency values " + std::to_string(by_values));
  r.coercive = by_growthi;

  if (!r.critical_computed) {
    r.notes.push_back("critical values not computed; infimum and attainment left undecided");
    r.infimum = r.bounded_below ? ExtendedValue::pos_inf() : ExtendedValue::neg_inf();
    return;
  }
  const auto& vals = r.critical.values;
  if (!r.bounded_below) {
    r.infimum = ExtendedValue::neg_inf();
  } else {
    std::vector<ExtendedValue> cands;
    for (const auto& v : vals) cands.emplace_back(v);
    for (const auto& v : r.T_infinity) cands.emplace_back(v);
    if (cands.empty()) throw InternalConsistency("bounded below but no critical value and no tangency value");
    r.infimum = min_ext(cands);
  }
  if (r.critical.sigma_nonempty && vals.empty())
    throw InternalConsistency("critical set reported nonempty without values");
  if (r.bounded_below && !vals.empty()) {
    ExtendedValue mins(vals.front());
    r.attained = mins <= min_ext(lambdas_k);
    r.argmin_nonempty_compact = r.attained && mins < min_ext(lambdas_not_k);
    // the same attainment test phrased with tangency values
    ExtendedValue mint = ExtendedValue::pos_inf();
    if (!r.T_infinity.empty()) mint = ExtendedValue(r.T_infinity.front());
    if ((mins <= mint) != r.attained)
      throw InternalConsistency("attainment disagrees between branch limits and tangency values");
    if (r.attained && !(r.infimum == mins)) throw InternalConsistency("attained infimum is not the least critical value");
  }
}

RealAlgebraic rational_value(const Rational& q) { return RealAlgebraic(q); }

}  // namespace

AnalysisReport analyze(const MultiPoly& f, const FeasibleSet& s, const AnalysisConfig& config) {
  AnalysisReport r;
  r.f = f;
  r.feasible = s;
  if (!s.is_plane()) {
    if (s.g.is_zero()) throw UnsupportedInput("constraint polynomial is zero");
    if (s.g.is_constant()) throw UnsupportedInput("constraint has no real points");
    MultiPoly g = squarefree_part(s.g);
    if (auto w = licq_violation(g))
      throw LicqFailure("constraint gradient vanishes on the feasible set at a point in " + box_string(w->x, w->y));
    r.notes.push_back("on a plane curve the tangency variety is the whole feasible set; every branch of g is a component");
  }
  auto t = tangency_curve(f, s);
  if (std::holds_alternative<RadialFlag>(t)) {
    AnalysisReport rr = analyze_radial(f, config);
    return rr;
  }
  const MultiPoly& c = std::get<MultiPoly>(t);
  r.tangency = c;
  const Rational order = config.max_order.value_or(kDisplayOrder);
  for (const BranchAtInfinity& b : branches_at_infinity(c, order)) {
    ObjectiveExpansion e = expand_objective(c, f, b);
    std::optional<RealAlgebraic> k;
    if (e.constant) k = e.constant->to_real();
    BranchReport br;
    br.description = b.describe();
    br.parameter = b.parameter;
    br.sigma = b.sigma;
    br.coordinate = b.coordinate;
    br.norm_exponent = b.norm_exponent;
    br.objective = e.series;
    if (!e.constant && order < e.order_used) br.objective = compose_objective(f, b, order);
    br.asymptotics = to_norm_asymptotics(b, e.series, k);
    if (br.asymptotics.alpha > 0 && br.asymptotics.alpha.get_d() > f.total_degree())
      throw InternalConsistency("growth exponent exceeds the degree of f on " + br.description);
    r.branches.push_back(std::move(br));
  }
  r.critical_computed = config.compute_critical;
  if (config.compute_critical) r.critical = critical_values(f, s);
  finish(r);
  return r;
}

AnalysisReport analyze_radial(const MultiPoly& f, const AnalysisConfig& config) {
  AnalysisReport r;
  r.f = f;
  r.radial = true;
  r.notes.push_back("f depends on x^2 + y^2 only; one radial component");
  UniPoly p = radial_profile(f);
  FieldPtr q = NumberField::rationals();
  std::vector<SeriesTerm> terms;
  for (int i = p.degree(); i >= 0; --i)
    if (p.coeff(i) != 0) terms.push_back({Rational(2 * i), Elem(q, p.coeff(i))});
  PuiseuxSeries obj(q, terms, std::nullopt);
  BranchAtInfinity b;
  BranchReport br;
  br.description = "radial: |(x, y)| = t";
  br.objective = obj;
  std::optional<RealAlgebraic> k;
  if (p.degree() <= 0) k = rational_value(p.is_zero() ? Rational(0) : p.coeff(0));
  br.asymptotics = to_norm_asymptotics(b, obj, k);
  r.branches.push_back(br);

  r.critical_computed = config.compute_critical;
  if (config.compute_critical) {
    // grad f = 2 P'(x^2 + y^2) (x, y): the origin and the circles P'(s) = 0, s > 0
    CriticalData& d = r.critical;
    d.sigma_nonempty = true;
    Rational p0 = p.is_zero() ? Rational(0) : p.coeff(0);
    d.values.emplace_back(p0);
    d.witnesses.push_back({Interval(Rational(0)), Interval(Rational(0)), RealAlgebraic(p0), p.degree() <= 0});
    UniPoly dp = p.derivative();
    if (dp.is_zero()) {
      d.has_positive_dimensional_part = true;
    } else if (dp.degree() >= 1) {
      for (const RealAlgebraic& s0 : RealAlgebraic::roots_of(squarefree_part(dp))) {
        if (s0.sign() <= 0) continue;
        d.has_positive_dimensional_part = true;
        FieldPtr k0 = NumberField::from_real(s0);
        RealAlgebraic v = kpoly_eval(kpoly_from_rational(k0, p), generator(k0)).to_real();
        RealAlgebraic rad = s0.sqrt();
        size_t before = d.values.size();
        insert_unique(d.values, v);
        if (d.values.size() > before) d.witnesses.push_back({rad.approx(Rational(1, 1 << 20)), Interval(Rational(0)), v, true});
      }
    }
    std::vector<size_t> order(d.values.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t i, size_t j) { return d.values[i] < d.values[j]; });
    CriticalData sorted;
    sorted.sigma_nonempty = true;
    sorted.has_positive_dimensional_part = d.has_positive_dimensional_part;
    for (size_t i : order) {
      sorted.values.push_back(d.values[i]);
      sorted.witnesses.push_back(d.witnesses[i]);
    }
    d = std::move(sorted);
  }
  finish(r);
  return r;
}

Sublevel sublevel_compactness(const AnalysisReport& r, const RealAlgebraic& level) {
  if (!r.bounded_below) throw PreconditionError("sublevel classification needs f bounded below on S");
  ExtendedValue lv(level);
  if (lv < r.lambda_star) return Sublevel::Compact;
  if (r.lambda_star < lv) return Sublevel::Unbounded;
  // level equals lambda_*: compact iff psi decreases strictly to it, i.e.
  // every branch with that limit approaches it from above
  for (const auto& b : r.branches) {
    const auto& a = b.asymptotics;
    if (!(a.lambda == r.lambda_star)) continue;
    if (a.is_constant) return Sublevel::Unbounded;
    if (!a.approach_exponent || !a.approach_coeff)
      throw InternalConsistency("branch at the limit level carries no approach term: " + b.description);
    if (*a.approach_exponent >= 0 || a.approach_coeff->sign() <= 0) return Sublevel::Unbounded;
  }
  return Sublevel::Compact;
}

namespace {

// Rational u >= k^alpha for k >= 1 given as an upper bound, alpha > 0.
Rational power_upper(const Rational& k, const Rational& alpha) {
  const long p = alpha.get_num().get_si();
  const unsigned long q = alpha.get_den().get_ui();
  double est = std::pow(k.get_d(), alpha.get_d()) * (1 + 1e-9) + 1e-300;
  Rational u(est);
  Rational kp(1), uq(1);
  for (long i = 0; i < p; ++i) kp *= k;
  while (true) {
    uq = 1;
    for (unsigned long i = 0; i < q; ++i) uq *= u;
    if (uq >= kp) return u;
    u *= Rational(1000001, 1000000);
  }
}

// Rational c with f_k(t) >= c t^alpha_* eventually on every branch.
std::optional<Rational> growth_constant(const AnalysisReport& r) {
  std::optional<Rational> c;
  for (const auto& b : r.branches) {
    const auto& a = b.asymptotics;
    if (a.is_constant || a.alpha != r.alpha_star) continue;
    if (a.a_sign <= 0) return std::nullopt;
    Rational ck;
    if (a.single_exact_term && a.a.is_rational() && b.parameter == Var::X && a.param_exponent == a.alpha &&
        b.coordinate.is_zero()) {
      ck = a.a.rational_value();
    } else {
      Interval ai = a.a.approx(Rational(1, 1 << 30));
      if (ai.lo <= 0) return std::nullopt;
      // kappa^alpha bounded above; kappa = 1 unless the branch is oblique
      Rational kap_hi(1);
      if (!b.coordinate.is_zero()) {
        auto lead = b.coordinate.leading();
        if (lead && lead->exponent == 1) {
          Interval li = lead->coeff.enclose(Rational(1, 1 << 30));
          Rational m = std::max(Rational(abs(li.lo)), Rational(abs(li.hi)));
          Rational cb = Rational(1) + m * m;
          kap_hi = power_upper(cb, a.alpha / 2);
        }
      }
      ck = ai.lo / kap_hi * Rational(1048575, 1048576);
    }
    if (!c || ck < *c) c = ck;
  }
  if (!c) c = Rational(1);  // no branch at alpha_*: none constrains c
  return c;
}

std::optional<size_t> minimal_branch(const AnalysisReport& r) {
  for (size_t i = 0; i < r.branches.size(); ++i) {
    const auto& a = r.branches[i].asymptotics;
    Rational ak = a.is_constant ? Rational(0) : a.alpha;
    if (ak == r.alpha_star) return i;
  }
  return std::nullopt;
}

}  // namespace

StabilityReport stability_report(const AnalysisReport& r, const Rational& epsilon, const Rational& alpha) {
  if (epsilon <= 0) throw PreconditionError("epsilon must be positive");
  if (!r.bounded_below && !r.coercive) throw PreconditionError("stability needs f bounded below (or coercive) on S");
  StabilityReport out;
  const Rational& as = r.alpha_star;
  const Rational floor0 = std::max(Rational(0), as);

  if (r.bounded_below) {
    StabilityVerdict v;
    v.property = StabilityVerdict::Property::BoundedBelow;
    if (alpha <= 0) {
      v.kind = StabilityVerdict::Kind::Stable;
      v.explanation = "a perturbation of order |x|^alpha with alpha <= 0 is bounded at infinity";
    } else if (alpha <= as) {
      auto c = growth_constant(r);
      if (c) v.epsilon_threshold = *c / 2;
      if (c && epsilon <= *c / 2) {
        v.kind = StabilityVerdict::Kind::Stable;
        v.explanation = "f_k(t) >= c t^alpha_* on every branch with c = " + c->get_str();
      } else {
        v.kind = StabilityVerdict::Kind::Indeterminate;
        v.explanation = "epsilon exceeds the certified threshold";
      }
    } else {
      v.kind = StabilityVerdict::Kind::UnstableWitness;
      v.beta = (floor0 + alpha) / 2;
      v.witness_branch = minimal_branch(r);
      v.explanation = "f - eps |x|^beta tends to -inf along the branch attaining alpha_*";
    }
    out.boundedness = v;
  }
  if (r.coercive) {
    StabilityVerdict v;
    v.property = StabilityVerdict::Property::Coercive;
    if (alpha <= as) {
      auto c = growth_constant(r);
      if (c) v.epsilon_threshold = *c / 2;
      if (c && epsilon <= *c / 2) {
        v.kind = StabilityVerdict::Kind::Stable;
        v.explanation = "f_k(t) >= c t^alpha_* on every branch with c = " + c->get_str();
      } else {
        v.kind = StabilityVerdict::Kind::Indeterminate;
        v.explanation = "epsilon exceeds the certified threshold";
      }
    } else {
      v.kind = StabilityVerdict::Kind::UnstableWitness;
      v.beta = (as + alpha) / 2;
      v.witness_branch = minimal_branch(r);
      v.explanation = "f - eps |x|^beta is unbounded below along the branch attaining alpha_*";
    }
    out.coercivity = v;
  }
  return out;
}

std::string to_string(Sublevel s) { return s == Sublevel::Compact ? "Compact" : "Unbounded"; }

std::string to_string(StabilityVerdict::Kind k) {
  switch (k) {
    case StabilityVerdict::Kind::Stable:
      return "Stable";
    case StabilityVerdict::Kind::UnstableWitness:
      return "UnstableWitness";
    case StabilityVerdict::Kind::Indeterminate:
      break;
  }
  return "Indeterminate";
}

}  // namespace polyinf
