#include "polyinf/report.hpp"

#include <sstream>

#include "polyinf/errors.hpp"
#include "polyinf/parser.hpp"

namespace polyinf {

namespace {

std::string value_text(const RealAlgebraic& v, int digits) {
  if (v.is_rational()) return v.rational_value().get_str();
  return approx_string(v, digits) + "... (" + v.to_string() + ")";
}

std::string value_text(const ExtendedValue& v, int digits) {
  if (!v.is_finite()) return v.to_string();
  return value_text(v.value(), digits);
}

std::string mode_name(const FeasibleSet& s) { return s.is_plane() ? "plane" : "curve"; }

const char* yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

std::string decimal_string(const Rational& q, int digits) {
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::max(digits, 0)));
  Rational a = abs(q) * scale + Rational(1, 2);
  Integer n = a.get_num() / a.get_den();
  std::string s = n.get_str();
  if (digits > 0) {
    if (s.size() <= static_cast<size_t>(digits)) s.insert(0, digits + 1 - s.size(), '0');
    s.insert(s.size() - digits, ".");
  }
  bool zero = n == 0;
  return (q < 0 && !zero ? "-" : "") + s;
}

std::string approx_string(const RealAlgebraic& v, int digits) {
  Rational w(1);
  for (int i = 0; i < digits + 2; ++i) w /= 10;
  return decimal_string(v.approx(w).midpoint(), digits);
}

Json algebraic_json(const RealAlgebraic& v, int digits) {
  Interval iv = v.interval();
  UniPoly p = v.polynomial();
  return Json{{"defining_polynomial", p.to_string("x")},
              {"interval", Json::array({iv.lo.get_str(), iv.hi.get_str()})},
              {"approx", approx_string(v, digits)}};
}

Json extended_json(const ExtendedValue& v, int digits) {
  if (v.is_pos_inf()) return "+inf";
  if (v.is_neg_inf()) return "-inf";
  return algebraic_json(v.value(), digits);
}

RealAlgebraic algebraic_from_json(const Json& j) {
  MultiPoly m = parse_poly(j.at("defining_polynomial").get<std::string>());
  if (m.degree(Var::Y) > 0) throw ParseError("defining polynomial must be univariate in x");
  UniPoly p = m.substitute(Var::Y, Rational(0));
  Interval iv(parse_rational(j.at("interval").at(0).get<std::string>()),
              parse_rational(j.at("interval").at(1).get<std::string>()));
  return RealAlgebraic::from_root(p, iv);
}

ExtendedValue extended_from_json(const Json& j) {
  if (j.is_string()) {
    if (j == "+inf") return ExtendedValue::pos_inf();
    if (j == "-inf") return ExtendedValue::neg_inf();
    throw ParseError("bad extended value " + j.get<std::string>());
  }
  return ExtendedValue(algebraic_from_json(j));
}

Json series_json(const PuiseuxSeries& s, int digits) {
  Json terms = Json::array();
  for (const auto& t : s.terms())
    terms.push_back({{"exponent", t.exponent.get_str()}, {"coefficient", algebraic_json(t.coeff.to_real(), digits)}});
  return Json{{"text", s.to_string()},
              {"terms", terms},
              {"truncation", s.truncation() ? Json(s.truncation()->get_str()) : Json(nullptr)}};
}

Json report_json(const AnalysisReport& r, int digits) {
  Json j;
  j["schema"] = "polyinf-report/1";
  j["input"] = {{"f", r.f.to_string()},
                {"mode", mode_name(r.feasible)},
                {"constraint", r.feasible.is_plane() ? Json(nullptr) : Json(r.feasible.g.to_string())}};
  j["radial"] = r.radial;
  j["tangency"] = r.tangency ? Json(r.tangency->to_string()) : Json(nullptr);
  Json bs = Json::array();
  for (size_t i = 0; i < r.branches.size(); ++i) {
    const auto& b = r.branches[i];
    const auto& a = b.asymptotics;
    Json e;
    e["index"] = i;
    e["description"] = b.description;
    e["parameter"] = b.parameter == Var::X ? "x" : "y";
    e["sigma"] = b.sigma;
    e["norm_exponent"] = b.norm_exponent.get_str();
    e["coordinate"] = series_json(b.coordinate, digits);
    e["objective"] = series_json(b.objective, digits);
    e["is_constant"] = a.is_constant;
    e["alpha"] = a.alpha.get_str();
    e["param_exponent"] = a.param_exponent.get_str();
    e["leading_coefficient"] = algebraic_json(a.a, digits);
    e["sign"] = a.a_sign;
    e["norm_coefficient_approx"] = a.a_norm_numeric;
    e["lambda"] = extended_json(a.lambda, digits);
    e["approach_exponent"] = a.approach_exponent ? Json(a.approach_exponent->get_str()) : Json(nullptr);
    e["approach_coefficient"] = a.approach_coeff ? algebraic_json(*a.approach_coeff, digits) : Json(nullptr);
    bs.push_back(e);
  }
  j["branches"] = bs;
  j["K"] = r.K;
  Json ts = Json::array();
  for (const auto& v : r.T_infinity) ts.push_back(algebraic_json(v, digits));
  j["T_infinity"] = ts;
  Json crit;
  crit["computed"] = r.critical_computed;
  Json vals = Json::array(), wit = Json::array();
  for (const auto& v : r.critical.values) vals.push_back(algebraic_json(v, digits));
  for (const auto& w : r.critical.witnesses)
    wit.push_back({{"x", Json::array({w.x.lo.get_str(), w.x.hi.get_str()})},
                   {"y", Json::array({w.y.lo.get_str(), w.y.hi.get_str()})},
                   {"value", algebraic_json(w.value, digits)},
                   {"on_positive_dimensional_part", w.on_positive_dimensional_part}});
  crit["values"] = vals;
  crit["sigma_nonempty"] = r.critical.sigma_nonempty;
  crit["has_positive_dimensional_part"] = r.critical.has_positive_dimensional_part;
  crit["witnesses"] = wit;
  j["critical"] = crit;
  j["bounded_below"] = r.bounded_below;
  j["bounded_above"] = r.bounded_above;
  j["infimum"] = r.critical_computed || !r.bounded_below ? extended_json(r.infimum, digits) : Json(nullptr);
  j["attained"] = r.attained;
  j["argmin_nonempty_compact"] = r.argmin_nonempty_compact;
  j["lambda_star"] = extended_json(r.lambda_star, digits);
  j["lambda_max"] = extended_json(r.lambda_max, digits);
  j["coercive"] = r.coercive;
  j["alpha_star"] = r.alpha_star.get_str();
  j["notes"] = r.notes;
  return j;
}

namespace {

Json verdict_json(const StabilityVerdict& v, const AnalysisReport& r) {
  Json j;
  j["property"] = v.property == StabilityVerdict::Property::BoundedBelow ? "bounded_below" : "coercive";
  j["verdict"] = to_string(v.kind);
  j["epsilon_threshold"] = v.epsilon_threshold ? Json(v.epsilon_threshold->get_str()) : Json(nullptr);
  j["beta"] = v.beta ? Json(v.beta->get_str()) : Json(nullptr);
  if (v.witness_branch) {
    j["witness_branch"] = *v.witness_branch;
    j["witness_branch_description"] = r.branches[*v.witness_branch].description;
    j["witness"] = "g(x) = -eps * |x|^" + v.beta->get_str();
  } else {
    j["witness_branch"] = nullptr;
  }
  j["explanation"] = v.explanation;
  return j;
}

}  // namespace

Json stability_json(const StabilityReport& s, const AnalysisReport& r) {
  Json j;
  j["boundedness"] = s.boundedness ? verdict_json(*s.boundedness, r) : Json(nullptr);
  j["coercivity"] = s.coercivity ? verdict_json(*s.coercivity, r) : Json(nullptr);
  return j;
}

Json profile_json(const numeric::PsiProfile& p, const numeric::BranchModel* model) {
  Json rows = Json::array();
  for (const auto& row : p.rows) {
    Json e{{"t", row.t}, {"psi", row.psi}, {"argmin_theta", row.theta}};
    if (model) e["branch_min"] = model->min_at_radius(row.t);
    rows.push_back(e);
  }
  return Json{{"rows", rows},
              {"angular_samples", p.config.angular_samples},
              {"refine_steps", p.config.refine_steps},
              {"reference", p.reference ? Json(*p.reference) : Json(nullptr)},
              {"fitted_exponent", p.fitted_exponent ? Json(*p.fitted_exponent) : Json(nullptr)},
              {"limit_estimate", p.limit_estimate}};
}

Json discrepancies_json(const std::vector<numeric::Discrepancy>& d) {
  Json a = Json::array();
  for (const auto& x : d) a.push_back({{"field", x.field}, {"claim", x.claim}, {"evidence", x.evidence}});
  return a;
}

std::string report_text(const AnalysisReport& r, int digits) {
  std::ostringstream os;
  os << "f = " << r.f.to_string() << "\n";
  if (r.feasible.is_plane())
    os << "feasible set: R^2\n";
  else
    os << "feasible set: " << r.feasible.g.to_string() << " = 0\n";
  if (r.radial)
    os << "f is a polynomial in x^2 + y^2\n";
  else if (r.tangency)
    os << (r.feasible.is_plane() ? "tangency curve: " : "branch curve: ") << r.tangency->to_string() << " = 0\n";
  os << "branches at infinity: " << r.branches.size() << "\n";
  for (size_t i = 0; i < r.branches.size(); ++i) {
    const auto& b = r.branches[i];
    const auto& a = b.asymptotics;
    os << "  [" << i << "] " << b.description << "\n";
    os << "      f = " << b.objective.to_string();
    if (a.is_constant) os << "  (constant)";
    os << "\n      alpha = " << a.alpha.get_str() << ", sign " << (a.a_sign > 0 ? "+" : a.a_sign < 0 ? "-" : "0")
       << ", lambda = " << value_text(a.lambda, digits) << "\n";
  }
  os << "T_inf = {";
  for (size_t i = 0; i < r.T_infinity.size(); ++i) os << (i ? ", " : "") << value_text(r.T_infinity[i], digits);
  os << "}\n";
  if (r.critical_computed) {
    os << "critical values = {";
    for (size_t i = 0; i < r.critical.values.size(); ++i)
      os << (i ? ", " : "") << value_text(r.critical.values[i], digits);
    os << "}";
    if (r.critical.has_positive_dimensional_part) os << " (critical set has a positive-dimensional part)";
    os << "\n";
  } else {
    os << "critical values: not computed\n";
  }
  os << "lambda_* = " << value_text(r.lambda_star, digits) << "\n";
  os << "alpha_* = " << r.alpha_star.get_str() << "\n";
  os << "bounded below: " << yes_no(r.bounded_below) << "\n";
  os << "bounded above: " << yes_no(r.bounded_above) << "\n";
  if (r.critical_computed || !r.bounded_below) os << "infimum = " << value_text(r.infimum, digits) << "\n";
  if (r.critical_computed) {
    os << "infimum attained: " << yes_no(r.attained) << "\n";
    os << "argmin nonempty and compact: " << yes_no(r.argmin_nonempty_compact) << "\n";
  }
  os << "coercive: " << yes_no(r.coercive) << "\n";
  for (const auto& n : r.notes) os << "note: " << n << "\n";
  return os.str();
}

std::string stability_text(const StabilityReport& s, const AnalysisReport& r) {
  std::ostringstream os;
  auto one = [&](const char* name, const StabilityVerdict& v) {
    os << "stability of " << name << ": " << to_string(v.kind);
    if (v.epsilon_threshold) os << " (threshold eps <= " << v.epsilon_threshold->get_str() << ")";
    if (v.beta) os << "; witness g = -eps*|x|^" << v.beta->get_str();
    if (v.witness_branch) os << " along [" << *v.witness_branch << "] " << r.branches[*v.witness_branch].description;
    os << "\n  " << v.explanation << "\n";
  };
  if (s.boundedness) one("boundedness from below", *s.boundedness);
  if (s.coercivity) one("coercivity", *s.coercivity);
  return os.str();
}

}  // namespace polyinf
