#include "polyinf/cli.hpp"

#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "polyinf/errors.hpp"
#include "polyinf/parser.hpp"
#include "polyinf/report.hpp"

namespace polyinf {

namespace {

struct Options {
  std::string poly;
  std::optional<std::string> constraint;
  std::optional<std::string> sublevel;
  std::optional<std::string> stability;
  bool json = false;
  std::vector<double> psi_check;
  std::optional<int> max_order;
  int precision = 12;
};

MultiPoly parse_constraint(const std::string& text) {
  for (const char* bad : {"<", ">", "≤", "≥"})
    if (text.find(bad) != std::string::npos) throw UnsupportedInput("inequality constraints are not supported");
  auto eq = text.find('=');
  if (eq == std::string::npos) return parse_poly(text);
  if (text.find('=', eq + 1) != std::string::npos) throw ParseError("more than one '=' in the constraint");
  return parse_poly(text.substr(0, eq)) - parse_poly(text.substr(eq + 1));
}

std::pair<Rational, Rational> parse_pair(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos) throw ParseError("--stability expects <eps>,<alpha>");
  return {parse_rational(text.substr(0, comma)), parse_rational(text.substr(comma + 1))};
}

int analyze_command(const Options& o, std::ostream& out) {
  MultiPoly f = parse_poly(o.poly);
  FeasibleSet s = o.constraint ? FeasibleSet::curve(parse_constraint(*o.constraint)) : FeasibleSet::plane();
  std::optional<Rational> level;
  if (o.sublevel) level = parse_rational(*o.sublevel);
  std::optional<std::pair<Rational, Rational>> stab;
  if (o.stability) stab = parse_pair(*o.stability);
  if (o.psi_check.size() == 3 && !(o.psi_check[0] > 0 && o.psi_check[0] < o.psi_check[1] && o.psi_check[2] >= 2))
    throw PreconditionError("--psi-check needs 0 < t_min < t_max and n >= 2");

  AnalysisConfig config;
  if (o.max_order) {
    if (*o.max_order >= 0) throw PreconditionError("--max-order must be negative");
    config.max_order = Rational(*o.max_order);
  }
  const int digits = std::clamp(o.precision, 1, 200);
  AnalysisReport r = analyze(f, s, config);

  Json j;
  std::string text;
  if (o.json)
    j = report_json(r, digits);
  else
    text = report_text(r, digits);

  if (level) {
    Sublevel v = sublevel_compactness(r, RealAlgebraic(*level));
    if (o.json)
      j["sublevel"] = {{"level", level->get_str()}, {"verdict", to_string(v)}};
    else
      text += "sublevel set {f <= " + level->get_str() + "}: " + to_string(v) + "\n";
  }
  if (stab) {
    StabilityReport sr = stability_report(r, stab->first, stab->second);
    if (o.json) {
      j["stability"] = stability_json(sr, r);
      j["stability"]["epsilon"] = stab->first.get_str();
      j["stability"]["alpha"] = stab->second.get_str();
    } else {
      text += "perturbations |g| <= " + stab->first.get_str() + " |x|^" + stab->second.get_str() + "\n";
      text += stability_text(sr, r);
    }
  }
  if (o.psi_check.size() == 3) {
    std::optional<double> ref;
    if (r.lambda_star.is_finite()) ref = r.lambda_star.value().to_double();
    auto prof = numeric::psi_profile(f, s, o.psi_check[0], o.psi_check[1], static_cast<int>(o.psi_check[2]), {}, ref);
    numeric::BranchModel model(r);
    auto disc = numeric::check_report(r, f, s);
    if (o.json) {
      j["psi_check"] = profile_json(prof, &model);
      j["psi_check"]["discrepancies"] = discrepancies_json(disc);
    } else {
      text += "psi profile:\n" + numeric::profile_csv(prof);
      if (prof.fitted_exponent) text += "fitted exponent: " + std::to_string(*prof.fitted_exponent) + "\n";
      if (disc.empty()) text += "numeric check: no discrepancies\n";
      for (const auto& d : disc) text += "discrepancy in " + d.field + ": claimed " + d.claim + ", " + d.evidence + "\n";
    }
  }
  if (o.json)
    out << j.dump(2) << "\n";
  else
    out << text;
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact boundedness, attainment and coercivity analysis of bivariate polynomials", "polyinf"};
  app.require_subcommand(1);
  Options o;
  auto* an = app.add_subcommand("analyze", "analyze a polynomial objective on R^2 or on a plane curve");
  an->add_option("poly", o.poly, "objective polynomial in x, y")->required();
  an->add_option("--constraint", o.constraint, "feasible curve g = 0");
  an->add_option("--sublevel", o.sublevel, "classify the sublevel set {f <= level}");
  an->add_option("--stability", o.stability, "stability under |g| <= eps |x|^alpha, given as eps,alpha");
  an->add_flag("--json", o.json, "machine-readable report");
  an->add_option("--psi-check", o.psi_check, "numeric profile of psi on [t_min, t_max] with n radii")->expected(3);
  an->add_option("--max-order", o.max_order, "series depth of the branch listing (negative)");
  an->add_option("--precision", o.precision, "decimal places of approximations");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  }

  try {
    return analyze_command(o, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const UnsupportedInput& e) {
    err << "unsupported input: " << e.what() << "\n";
    return kExitUnsupported;
  } catch (const LicqFailure& e) {
    err << "LICQ failure: " << e.what() << "\n";
    return kExitLicq;
  } catch (const TruncationExhausted& e) {
    err << "truncation exhausted: " << e.what() << "\n";
    return kExitTruncation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitOther;
  }
}

}  // namespace polyinf
