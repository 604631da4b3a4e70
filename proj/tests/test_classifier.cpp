#include <chrono>

#include "doctest.h"
#include "polyinf/classifier.hpp"
#include "polyinf/errors.hpp"
#include "polyinf/parser.hpp"

using namespace polyinf;

namespace {

const char* kMotzkin = "x^4*y^2 + x^2*y^4 - 3*x^2*y^2 + 1";
const char* kValley = "(x*y - 1)^2 + y^2";

AnalysisReport run(const char* f) { return analyze(parse_poly(f), FeasibleSet::plane()); }

RealAlgebraic q(long n, long d = 1) {
  Rational r(n, d);
  r.canonicalize();
  return RealAlgebraic(r);
}

}  // namespace

TEST_CASE("cubic x^3 - 3y^2") {
  auto r = run("x^3 - 3*y^2");
  CHECK(r.branches.size() == 6);
  CHECK(!r.bounded_below);
  CHECK(!r.bounded_above);
  CHECK(r.infimum.is_neg_inf());
  CHECK(!r.attained);
  CHECK(!r.coercive);
  CHECK(r.K.size() == 6);
  CHECK(r.T_infinity.empty());
  CHECK_THROWS_AS(sublevel_compactness(r, q(0)), PreconditionError);
}

TEST_CASE("Motzkin verdicts") {
  auto t0 = std::chrono::steady_clock::now();
  auto r = run(kMotzkin);
  CHECK(r.branches.size() == 8);
  CHECK(r.K.size() == 4);
  REQUIRE(r.T_infinity.size() == 1);
  CHECK(r.T_infinity[0] == q(1));
  CHECK(r.bounded_below);
  CHECK(!r.bounded_above);
  CHECK(r.infimum == ExtendedValue(q(0)));
  CHECK(r.attained);
  CHECK(r.argmin_nonempty_compact);
  CHECK(!r.coercive);
  CHECK(r.lambda_star == ExtendedValue(q(1)));
  CHECK(r.alpha_star == 0);
  CHECK(r.critical.has_positive_dimensional_part);
  CHECK(to_string(sublevel_compactness(r, q(1, 2))) == "Compact");
  CHECK(to_string(sublevel_compactness(r, q(1))) == "Unbounded");
  CHECK(to_string(sublevel_compactness(r, q(2))) == "Unbounded");

  auto s = stability_report(r, Rational(1, 10), Rational(1));
  REQUIRE(s.boundedness);
  CHECK(!s.coercivity);
  CHECK(s.boundedness->kind == StabilityVerdict::Kind::UnstableWitness);
  REQUIRE(s.boundedness->beta);
  CHECK(*s.boundedness->beta == Rational(1, 2));
  REQUIRE(s.boundedness->witness_branch);
  CHECK(r.branches[*s.boundedness->witness_branch].asymptotics.is_constant);

  s = stability_report(r, Rational(5), Rational(0));
  CHECK(s.boundedness->kind == StabilityVerdict::Kind::Stable);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  CHECK(secs < 5.0);
}

TEST_CASE("valley (xy - 1)^2 + y^2") {
  auto r = run(kValley);
  CHECK(r.branches.size() == 8);
  REQUIRE(r.T_infinity.size() == 1);
  CHECK(r.T_infinity[0] == q(0));
  REQUIRE(r.critical.values.size() == 1);
  CHECK(r.critical.values[0] == q(1));
  CHECK(r.infimum == ExtendedValue(q(0)));
  CHECK(!r.attained);
  CHECK(!r.argmin_nonempty_compact);
  CHECK(r.lambda_star == ExtendedValue(q(0)));
  CHECK(r.alpha_star == -2);
  CHECK(!r.coercive);
  CHECK(sublevel_compactness(r, q(0)) == Sublevel::Compact);
  CHECK(sublevel_compactness(r, q(-1)) == Sublevel::Compact);
  CHECK(sublevel_compactness(r, q(1, 100)) == Sublevel::Unbounded);
  auto s = stability_report(r, Rational(1, 100), Rational(-3));
  CHECK(s.boundedness->kind == StabilityVerdict::Kind::Stable);
  s = stability_report(r, Rational(1, 100), Rational(1, 3));
  CHECK(s.boundedness->kind == StabilityVerdict::Kind::UnstableWitness);
  CHECK(*s.boundedness->beta == Rational(1, 6));
}

TEST_CASE("radial objectives") {
  auto r = run("x^2 + y^2");
  CHECK(r.radial);
  CHECK(r.coercive);
  CHECK(r.bounded_below);
  CHECK(r.attained);
  CHECK(r.argmin_nonempty_compact);
  CHECK(r.infimum == ExtendedValue(q(0)));
  CHECK(r.alpha_star == 2);
  CHECK(r.T_infinity.empty());
  CHECK(sublevel_compactness(r, q(100)) == Sublevel::Compact);
  auto s = stability_report(r, Rational(1, 4), Rational(2));
  REQUIRE(s.coercivity);
  CHECK(s.coercivity->kind == StabilityVerdict::Kind::Stable);
  REQUIRE(s.coercivity->epsilon_threshold);
  CHECK(*s.coercivity->epsilon_threshold == Rational(1, 2));
  CHECK(s.boundedness->kind == StabilityVerdict::Kind::Stable);
  s = stability_report(r, Rational(1), Rational(2));
  CHECK(s.coercivity->kind == StabilityVerdict::Kind::Indeterminate);
  s = stability_report(r, Rational(1), Rational(3));
  CHECK(s.coercivity->kind == StabilityVerdict::Kind::UnstableWitness);
  CHECK(*s.coercivity->beta == Rational(5, 2));

  r = run("-(x^2 + y^2)");
  CHECK(!r.bounded_below);
  CHECK(r.bounded_above);
  CHECK(r.infimum.is_neg_inf());

  r = run("(x^2 + y^2 - 1)^2");
  CHECK(r.coercive);
  CHECK(r.infimum == ExtendedValue(q(0)));
  CHECK(r.attained);
  CHECK(r.critical.has_positive_dimensional_part);
  REQUIRE(r.critical.values.size() == 2);
  CHECK(r.critical.values[1] == q(1));

  r = run("7");
  CHECK(r.bounded_below);
  CHECK(r.bounded_above);
  CHECK(r.attained);
  CHECK(!r.argmin_nonempty_compact);
  CHECK(!r.coercive);
  REQUIRE(r.T_infinity.size() == 1);
  CHECK(r.T_infinity[0] == q(7));
}

TEST_CASE("x^2 on the plane: bounded, attained, argmin unbounded") {
  auto r = run("x^2");
  CHECK(r.bounded_below);
  CHECK(r.attained);
  CHECK(!r.argmin_nonempty_compact);
  CHECK(r.alpha_star == 0);
  auto s = stability_report(r, Rational(1, 2), Rational(0));
  CHECK(s.boundedness->kind == StabilityVerdict::Kind::Stable);
  CHECK(!s.coercivity);
}

TEST_CASE("curve mode") {
  auto r = analyze(parse_poly("x"), FeasibleSet::curve(parse_poly("y - x^2")));
  CHECK(r.branches.size() == 2);
  CHECK(!r.bounded_below);
  CHECK(!r.bounded_above);
  CHECK(r.critical.values.empty());

  r = analyze(parse_poly("y"), FeasibleSet::curve(parse_poly("y - x^2")));
  CHECK(r.bounded_below);
  CHECK(r.coercive);
  CHECK(r.attained);
  CHECK(r.infimum == ExtendedValue(q(0)));

  CHECK_THROWS_AS(analyze(parse_poly("x"), FeasibleSet::curve(parse_poly("y^2 - x^3"))), LicqFailure);
  CHECK_THROWS_AS(analyze(parse_poly("x"), FeasibleSet::curve(parse_poly("x^2 + y^2 - 1"))), UnsupportedInput);
}

TEST_CASE("sublevel verdicts are monotone in the level") {
  for (const char* f : {kMotzkin, kValley, "x^2", "x^4 + y^2 - 2*x*y"}) {
    auto r = run(f);
    if (!r.bounded_below) continue;
    bool seen_unbounded = false;
    for (int n = -8; n <= 8; ++n) {
      auto v = sublevel_compactness(r, q(n, 4));
      if (v == Sublevel::Unbounded) seen_unbounded = true;
      if (seen_unbounded) CHECK(v == Sublevel::Unbounded);
    }
  }
}
