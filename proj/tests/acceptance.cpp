// One PASS/FAIL line per acceptance criterion.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "polyinf/classifier.hpp"
#include "polyinf/elimination.hpp"
#include "polyinf/errors.hpp"
#include "polyinf/numeric.hpp"
#include "polyinf/parser.hpp"

using namespace polyinf;

namespace {

const char* kCubic = "x^3 - 3*y^2";
const char* kMotzkin = "x^4*y^2 + x^2*y^4 - 3*x^2*y^2 + 1";
const char* kValley = "(x*y - 1)^2 + y^2";

struct Check {
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

using Clock = std::chrono::steady_clock;

int failed = 0;

void criterion(int n, const char* title, double limit_seconds, const std::function<void(Check&)>& body) {
  Check c;
  auto t0 = Clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.failures.push_back(std::string("exception: ") + e.what());
  }
  double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  if (limit_seconds > 0 && secs >= limit_seconds) {
    std::ostringstream os;
    os << "runtime " << secs << " s exceeds " << limit_seconds << " s";
    c.failures.push_back(os.str());
  }
  std::printf("%s criterion %d: %s (%.2f s)\n", c.failures.empty() ? "PASS" : "FAIL", n, title, secs);
  for (const auto& f : c.failures) std::printf("    - %s\n", f.c_str());
  if (!c.failures.empty()) ++failed;
  std::fflush(stdout);
}

RealAlgebraic q(long n, long d = 1) {
  Rational r(n, d);
  r.canonicalize();
  return RealAlgebraic(r);
}

std::vector<std::pair<Rational, double>> terms(const PuiseuxSeries& s) {
  std::vector<std::pair<Rational, double>> out;
  for (const auto& t : s.terms()) out.emplace_back(t.exponent, t.coeff.to_double());
  return out;
}

// the first printed terms of s; exact rationals compared exactly
bool starts_with(const PuiseuxSeries& s, const std::vector<std::pair<Rational, Rational>>& want) {
  const auto& ts = s.terms();
  if (ts.size() < want.size()) return false;
  for (size_t i = 0; i < want.size(); ++i) {
    if (ts[i].exponent != want[i].first) return false;
    RealAlgebraic c = ts[i].coeff.to_real();
    if (!(c == RealAlgebraic(want[i].second))) return false;
  }
  return true;
}

std::string series_text(const PuiseuxSeries& s) { return s.to_string(); }

const BranchReport* find_branch(const AnalysisReport& r, Var param, int sigma, const Rational& lead_exp,
                                const Rational& lead) {
  for (const auto& b : r.branches) {
    if (b.parameter != param || b.sigma != sigma) continue;
    auto l = b.coordinate.leading();
    if (l && l->exponent == lead_exp && l->coeff.to_real() == RealAlgebraic(lead)) return &b;
  }
  return nullptr;
}

RealAlgebraic shifted(const RealAlgebraic& v, const Rational& c) {
  if (v.is_rational()) return RealAlgebraic(Rational(v.rational_value() + c));
  UniPoly p = v.polynomial().compose(UniPoly(std::vector<Rational>{Rational(-c), Rational(1)}));
  return RealAlgebraic::from_root(p, Interval(v.interval().lo + c, v.interval().hi + c));
}

RealAlgebraic scaled(const RealAlgebraic& v, const Rational& c) {
  if (v.is_rational()) return RealAlgebraic(Rational(v.rational_value() * c));
  UniPoly p = v.polynomial().compose(UniPoly(std::vector<Rational>{Rational(0), Rational(1 / c)}));
  return RealAlgebraic::from_root(p, Interval(v.interval().lo * c, v.interval().hi * c));
}

ExtendedValue map_ext(const ExtendedValue& v, const std::function<RealAlgebraic(const RealAlgebraic&)>& fn) {
  return v.is_finite() ? ExtendedValue(fn(v.value())) : v;
}

MultiPoly random_poly(std::mt19937& rng, int deg) {
  std::uniform_int_distribution<int> coef(-5, 5);
  MultiPoly f;
  for (int i = 0; i <= deg; ++i)
    for (int j = 0; i + j <= deg; ++j) f += MultiPoly::monomial(Rational(coef(rng)), i, j);
  return f;
}

std::string verdicts(const AnalysisReport& r) {
  std::string s;
  for (bool b : {r.bounded_below, r.bounded_above, r.attained, r.argmin_nonempty_compact, r.coercive})
    s += b ? '1' : '0';
  return s;
}

}  // namespace

int main() {
  const FeasibleSet plane = FeasibleSet::plane();

  criterion(1, "cubic x^3 - 3y^2 golden test", 1.0, [&](Check& c) {
    MultiPoly f = parse_poly(kCubic);
    AnalysisReport r = analyze(f, plane);
    c.expect(r.tangency && r.tangency->normalized() == parse_poly("x*y*(x + 2)").normalized(),
             "tangency polynomial is not x*y*(x+2) up to scalar");
    c.expect(r.branches.size() == 6, "expected 6 branches, got " + std::to_string(r.branches.size()));
    std::vector<std::string> got, want = {"-3*t^2", "-3*t^2", "-3*t^2 - 8", "-3*t^2 - 8", "-t^3", "t^3"};
    std::vector<std::string> alph, alph_want = {"2-", "2-", "2-", "2-", "3+", "3-"};
    for (const auto& b : r.branches) {
      got.push_back(series_text(b.objective));
      alph.push_back(b.asymptotics.alpha.get_str() + (b.asymptotics.a_sign > 0 ? "+" : "-"));
    }
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    std::sort(alph.begin(), alph.end());
    c.expect(got == want, "objective series multiset differs");
    c.expect(alph == alph_want, "alpha/sign multiset differs");
    c.expect(!r.bounded_below && !r.bounded_above, "expected bounded neither below nor above");
  });

  criterion(2, "Motzkin golden test", 5.0, [&](Check& c) {
    MultiPoly f = parse_poly(kMotzkin);
    AnalysisReport r = analyze(f, plane);
    MultiPoly expect = squarefree_part(parse_poly("x*y*(x^2 - y^2)*(3 - x^2 - y^2)"));
    c.expect(r.tangency && r.tangency->normalized() == expect.normalized(), "tangency zero set differs");
    c.expect(r.branches.size() == 8, "expected 8 branches");
    int constant = 0, diag = 0;
    for (const auto& b : r.branches) {
      const auto& a = b.asymptotics;
      if (a.is_constant) {
        ++constant;
        c.expect(a.lambda == ExtendedValue(q(1)), "constant branch not at value 1");
      } else {
        ++diag;
        c.expect(b.objective.is_exact() && series_text(b.objective) == "2*t^6 - 3*t^4 + 1",
                 "diagonal series is " + series_text(b.objective));
        c.expect(a.alpha == 6, "diagonal alpha is " + a.alpha.get_str());
      }
    }
    c.expect(constant == 4 && diag == 4, "expected 4 constant and 4 diagonal branches");
    c.expect(r.T_infinity.size() == 1 && r.T_infinity[0] == q(1), "T_inf != {1}");
    c.expect(r.critical.values.size() == 2 && r.critical.values[0] == q(0) && r.critical.values[1] == q(1),
             "critical values != {0, 1}");
    c.expect(r.critical.has_positive_dimensional_part, "axes component missing");
    c.expect(r.infimum == ExtendedValue(q(0)), "infimum != 0");
    c.expect(r.attained, "infimum should be attained");
    c.expect(r.argmin_nonempty_compact, "argmin should be nonempty compact");
    c.expect(!r.coercive, "should not be coercive");
    c.expect(r.lambda_star == ExtendedValue(q(1)), "lambda_* != 1");
    c.expect(sublevel_compactness(r, q(1, 2)) == Sublevel::Compact, "level 1/2 should be Compact");
    c.expect(sublevel_compactness(r, q(1)) == Sublevel::Unbounded, "level 1 should be Unbounded");
    c.expect(sublevel_compactness(r, q(2)) == Sublevel::Unbounded, "level 2 should be Unbounded");
  });

  criterion(3, "(xy - 1)^2 + y^2 golden test", 5.0, [&](Check& c) {
    MultiPoly f = parse_poly(kValley);
    AnalysisConfig deep;
    deep.max_order = Rational(-4);  // printed depth reaches t^-3
    AnalysisReport r = analyze(f, plane, deep);
    const Rational one(1), m1(-1), m3(-3);
    auto R = [](long n, long d) {
      Rational v(n, d);
      v.canonicalize();
      return v;
    };
    const BranchReport* g1 = find_branch(r, Var::X, 1, one, Rational(-1));
    const BranchReport* g2 = find_branch(r, Var::X, 1, one, Rational(1));
    const BranchReport* g3 = find_branch(r, Var::X, 1, m1, Rational(1));
    const BranchReport* g4 = find_branch(r, Var::Y, 1, m1, Rational(1));
    c.expect(g1 && g2 && g3 && g4, "missing one of the printed branches");
    if (g1 && g2 && g3 && g4) {
      c.expect(starts_with(g1->coordinate, {{one, R(-1, 1)}, {m1, R(1, 2)}, {m3, R(5, 8)}}),
               "G1 y-series: printed -t + 1/2 t^-1 + 5/8 t^-3, computed " + series_text(g1->coordinate));
      c.expect(starts_with(g2->coordinate, {{one, R(1, 1)}, {m1, R(1, 2)}, {m3, R(3, 8)}}),
               "G2 y-series: printed t + 1/2 t^-1 + 3/8 t^-3, computed " + series_text(g2->coordinate));
      c.expect(starts_with(g3->coordinate, {{m1, R(1, 1)}, {m3, R(-1, 1)}}),
               "G3 y-series: printed t^-1 - t^-3, computed " + series_text(g3->coordinate));
      c.expect(starts_with(g4->coordinate, {{m1, R(1, 1)}}), "G4 x-series: printed t^-1, computed " +
                                                              series_text(g4->coordinate));
      c.expect(starts_with(g1->objective,
                           {{Rational(4), R(1, 1)}, {Rational(2), R(4, 1)}, {Rational(0), R(2, 1)}, {Rational(-2), R(-23, 8)}}),
               "G1 objective: printed t^4 + 4t^2 + 2 - 23/8 t^-2, computed " + series_text(g1->objective));
    }
    c.expect(r.T_infinity.size() == 1 && r.T_infinity[0] == q(0), "T_inf != {0}");
    c.expect(r.critical.values.size() == 1 && r.critical.values[0] == q(1) && !r.critical.has_positive_dimensional_part,
             "Sigma is not one point with value 1");
    c.expect(r.infimum == ExtendedValue(q(0)), "infimum != 0");
    c.expect(!r.attained, "infimum should not be attained");
    c.expect(r.lambda_star == ExtendedValue(q(0)), "lambda_* != 0");
    c.expect(r.alpha_star == -2, "alpha_* != -2");
    c.expect(sublevel_compactness(r, q(0)) == Sublevel::Compact, "level 0 should be Compact");
  });

  criterion(4, "coercivity conditions agree on fixtures and 200 random polynomials", 600.0, [&](Check& c) {
    std::mt19937 rng(20240601);
    std::vector<MultiPoly> inputs = {parse_poly(kCubic), parse_poly(kMotzkin), parse_poly(kValley)};
    std::uniform_int_distribution<int> deg(1, 6);
    while (inputs.size() < 203) inputs.push_back(random_poly(rng, deg(rng)));
    int skipped = 0, consistency = 0, other = 0;
    for (const auto& f : inputs) {
      try {
        analyze(f, plane);
      } catch (const TruncationExhausted&) {
        ++skipped;
      } catch (const InternalConsistency& e) {
        ++consistency;
        c.expect(false, "internal consistency on " + f.to_string() + ": " + e.what());
      } catch (const std::exception& e) {
        ++other;
        c.expect(false, "error on " + f.to_string() + ": " + e.what());
      }
    }
    std::printf("    (%zu inputs, %d skipped for truncation, %d consistency errors, %d other errors)\n", inputs.size(),
                skipped, consistency, other);
  });

  criterion(5, "numeric cross-validation of psi", 0, [&](Check& c) {
    for (const char* s : {kCubic, kMotzkin, kValley}) {
      MultiPoly f = parse_poly(s);
      AnalysisReport r = analyze(f, plane);
      numeric::BranchModel model(r);
      for (double t : {10.0, 50.0, 200.0}) {
        double p = numeric::psi(f, plane, t), m = model.min_at_radius(t);
        double err = std::abs(p - m) / (1 + std::abs(p));
        char buf[200];
        std::snprintf(buf, sizeof buf, "%s at t=%g: psi %.12g vs branch series %.12g (rel %.2e)", s, t, p, m, err);
        c.expect(err < 1e-4, buf);
      }
      auto d = numeric::check_report(r, f, plane);
      for (const auto& x : d) c.expect(false, std::string(s) + ": discrepancy in " + x.field + ": " + x.evidence);
    }
    auto prof = numeric::psi_profile(parse_poly(kValley), plane, 10, 1000, 12, {}, 0.0);
    c.expect(prof.fitted_exponent && std::abs(*prof.fitted_exponent + 2) <= 0.1, "valley fitted exponent not within 0.1 of -2");
    if (prof.fitted_exponent) std::printf("    (valley fitted exponent %.4f)\n", *prof.fitted_exponent);
  });

  criterion(6, "brute-force oracle against reported infima", 0, [&](Check& c) {
    for (const char* s : {kCubic, kMotzkin, kValley}) {
      MultiPoly f = parse_poly(s);
      AnalysisReport r = analyze(f, plane);
      double inf = r.infimum.to_double();
      double last = 0;
      for (double h : {5.0, 20.0, 80.0}) {
        last = numeric::brute_force_min(f, plane, h, 801);
        c.expect(last >= inf - 1e-9, std::string(s) + ": brute force below the reported infimum");
        std::printf("    (%s, half width %g: %.9g)\n", s, h, last);
      }
      if (std::string(s) != kCubic) c.expect(std::abs(last - inf) < 1e-3, std::string(s) + ": no convergence to the infimum");
    }
  });

  criterion(7, "invariance under rotation, swap, shift and scaling", 0, [&](Check& c) {
    std::mt19937 rng(77);
    std::uniform_int_distribution<int> deg(1, 4);
    const Rational cs(3, 5), sn(4, 5), shift(7, 3), scale(5, 2);
    int done = 0;
    while (done < 50) {
      MultiPoly f = random_poly(rng, deg(rng));
      AnalysisReport base;
      try {
        base = analyze(f, plane);
      } catch (const TruncationExhausted&) {
        continue;
      }
      ++done;
      struct Variant {
        const char* name;
        MultiPoly g;
        std::function<RealAlgebraic(const RealAlgebraic&)> map;
      };
      std::vector<Variant> vs = {
          {"rotation", f.affine_substitute(cs, -sn, Rational(0), sn, cs, Rational(0)), [](const RealAlgebraic& v) { return v; }},
          {"swap", f.swapped(), [](const RealAlgebraic& v) { return v; }},
          {"shift", f + MultiPoly::constant(shift), [&](const RealAlgebraic& v) { return shifted(v, shift); }},
          {"scale", scale * f, [&](const RealAlgebraic& v) { return scaled(v, scale); }},
      };
      for (const auto& v : vs) {
        AnalysisReport r = analyze(v.g, plane);
        std::string tag = std::string(v.name) + " of " + f.to_string();
        c.expect(verdicts(r) == verdicts(base), tag + ": boolean verdicts changed");
        c.expect(r.infimum == map_ext(base.infimum, v.map), tag + ": infimum");
        c.expect(r.lambda_star == map_ext(base.lambda_star, v.map), tag + ": lambda_*");
        bool same = r.T_infinity.size() == base.T_infinity.size();
        for (size_t i = 0; same && i < r.T_infinity.size(); ++i) {
          RealAlgebraic want = v.map(base.T_infinity[i]);
          same = std::any_of(r.T_infinity.begin(), r.T_infinity.end(), [&](const RealAlgebraic& x) { return x == want; });
        }
        c.expect(same, tag + ": T_inf");
      }
    }
  });

  criterion(8, "stability witnesses and thresholds", 0, [&](Check& c) {
    MultiPoly f = parse_poly(kMotzkin);
    AnalysisReport r = analyze(f, plane);
    StabilityReport s = stability_report(r, Rational(1, 10), Rational(1));
    c.expect(s.boundedness && s.boundedness->kind == StabilityVerdict::Kind::UnstableWitness, "Motzkin: expected an unstable witness");
    if (s.boundedness && s.boundedness->beta && s.boundedness->witness_branch) {
      c.expect(*s.boundedness->beta == Rational(1, 2), "beta is " + s.boundedness->beta->get_str());
      const BranchReport& b = r.branches[*s.boundedness->witness_branch];
      c.expect(b.asymptotics.is_constant, "witness branch is not a constant branch");
      // f + g along the branch, g = -eps |x|^beta
      const double eps = 0.1, beta = s.boundedness->beta->get_d();
      numeric::DoublePoly fd(f);
      double prev = INFINITY, crossing = -1;
      bool decreasing = true;
      for (double t = 1; t <= 1e4; t *= 1.25) {
        double x = b.parameter == Var::X ? b.sigma * t : b.coordinate.eval(t);
        double y = b.parameter == Var::X ? b.coordinate.eval(t) : b.sigma * t;
        double v = fd(x, y) - eps * std::pow(std::hypot(x, y), beta);
        if (!(v < prev)) decreasing = false;
        if (v < 0 && crossing < 0) crossing = t;
        prev = v;
      }
      c.expect(decreasing, "f + g is not decreasing along the witness branch");
      c.expect(crossing > 0 && crossing < 1e4, "f + g does not cross below 0 before t = 1e4");
      std::printf("    (Motzkin: beta %s, f + g < 0 from t = %.1f)\n", s.boundedness->beta->get_str().c_str(), crossing);
    } else {
      c.expect(false, "Motzkin witness lacks beta or branch");
    }

    MultiPoly g = parse_poly("x^2 + y^2");
    AnalysisReport rg = analyze(g, plane);
    StabilityReport sg = stability_report(rg, Rational(1, 4), Rational(2));
    c.expect(sg.coercivity && sg.coercivity->kind == StabilityVerdict::Kind::Stable, "x^2 + y^2: coercivity not Stable");
    c.expect(sg.boundedness && sg.boundedness->kind == StabilityVerdict::Kind::Stable, "x^2 + y^2: boundedness not Stable");
    c.expect(sg.coercivity && sg.coercivity->epsilon_threshold && *sg.coercivity->epsilon_threshold == Rational(1, 2),
             "x^2 + y^2: threshold is not 1/2");
    MultiPoly pert = g - Rational(1, 4) * parse_poly("x^2 + y^2");
    auto prof = numeric::psi_profile(pert, plane, 0.1, 1e4, 25);
    bool nonneg = std::all_of(prof.rows.begin(), prof.rows.end(), [](const numeric::PsiSample& p) { return p.psi >= 0; });
    c.expect(nonneg, "f - (1/4)|x|^2 goes negative");
  });

  std::printf("%s: %d criteria failed\n", failed ? "FAIL" : "PASS", failed);
  return failed ? 1 : 0;
}
