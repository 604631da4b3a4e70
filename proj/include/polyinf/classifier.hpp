#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polyinf/branches.hpp"
#include "polyinf/tangency.hpp"

namespace polyinf {

struct AnalysisConfig {
  std::optional<Rational> max_order;  // listing depth, default -2; objectives deepen on their own
  bool compute_critical = true;       // skip Sigma (coercivity-only runs)
};

struct BranchReport {
  std::string description;
  Var parameter = Var::X;
  int sigma = 1;
  PuiseuxSeries coordinate;
  Rational norm_exponent{1};  // |(x, y)| ~ kappa t^d
  PuiseuxSeries objective;
  BranchAsymptotics asymptotics;
};

struct AnalysisReport {
  MultiPoly f;
  FeasibleSet feasible;
  bool radial = false;
  std::optional<MultiPoly> tangency;  // unset in the radial case
  std::vector<BranchReport> branches;
  std::vector<size_t> K;  // non-constant branches
  std::vector<RealAlgebraic> T_infinity;
  bool critical_computed = true;
  CriticalData critical;
  bool bounded_below = false;
  bool bounded_above = false;
  ExtendedValue infimum;
  bool attained = false;
  bool argmin_nonempty_compact = false;
  ExtendedValue lambda_star;
  ExtendedValue lambda_max;  // max over branches, for boundedness above
  bool coercive = false;
  Rational alpha_star;
  std::vector<std::string> notes;
};

AnalysisReport analyze(const MultiPoly& f, const FeasibleSet& s, const AnalysisConfig& config = {});

/// The radial case f = P(x^2 + y^2).
AnalysisReport analyze_radial(const MultiPoly& f, const AnalysisConfig& config = {});

enum class Sublevel { Compact, Unbounded };
Sublevel sublevel_compactness(const AnalysisReport& report, const RealAlgebraic& level);

struct StabilityVerdict {
  enum class Kind { Stable, UnstableWitness, Indeterminate };
  enum class Property { BoundedBelow, Coercive };
  Property property = Property::BoundedBelow;
  Kind kind = Kind::Indeterminate;
  std::optional<Rational> epsilon_threshold;  // Stable below this (inclusive); unset means any epsilon
  std::optional<Rational> beta;               // witness g = -eps * |x|^beta
  std::optional<size_t> witness_branch;
  std::string explanation;
};

struct StabilityReport {
  std::optional<StabilityVerdict> boundedness;  // when f is bounded below
  std::optional<StabilityVerdict> coercivity;   // when f is coercive
};

/// Stability of boundedness from below and of coercivity under
/// perturbations g with |g| <= eps * |x|^alpha at infinity. Throws
/// PreconditionError when f is neither bounded below nor coercive.
StabilityReport stability_report(const AnalysisReport& report, const Rational& epsilon, const Rational& alpha);

std::string to_string(Sublevel s);
std::string to_string(StabilityVerdict::Kind k);

}  // namespace polyinf
