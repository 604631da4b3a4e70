#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polyinf/classifier.hpp"
#include "polyinf/multipoly.hpp"
#include "polyinf/tangency.hpp"

// Floating-point cross-checks. Nothing here feeds back into exact verdicts.

namespace polyinf::numeric {

/// Dense double copy of a MultiPoly for fast evaluation.
class DoublePoly {
 public:
  DoublePoly() = default;
  explicit DoublePoly(const MultiPoly& p);
  [[nodiscard]] double operator()(double x, double y) const;
  [[nodiscard]] int degree() const { return deg_; }

 private:
  int deg_ = -1;
  std::vector<std::vector<double>> c_;  // c_[j][i] multiplies x^i y^j
};

struct PsiConfig {
  int angular_samples = 1 << 14;
  int refine_steps = 80;
};

struct PsiSample {
  double t = 0;
  double psi = 0;    // +inf when S meets the circle nowhere
  double theta = 0;  // angle of the best point found
};

struct PsiProfile {
  std::vector<PsiSample> rows;
  PsiConfig config;
  std::optional<double> reference;        // lambda used in the fit
  std::optional<double> fitted_exponent;  // slope of log|psi - reference| against log t
  double limit_estimate = 0;              // psi at the largest radius
};

double psi(const MultiPoly& f, const FeasibleSet& s, double t, const PsiConfig& config = {});
PsiSample psi_sample(const MultiPoly& f, const FeasibleSet& s, double t, const PsiConfig& config = {});
/// Log-spaced radii; reference defaults to 0 (raw growth of |psi|).
PsiProfile psi_profile(const MultiPoly& f, const FeasibleSet& s, double t_min, double t_max, int n,
                       const PsiConfig& config = {}, std::optional<double> reference = std::nullopt);

/// Least value found over a grid x grid lattice of [-h, h]^2, polished by a
/// damped Newton descent from the best lattice points. Curve mode samples the
/// curve instead: roots of g on every lattice row and column.
double brute_force_min(const MultiPoly& f, const FeasibleSet& s, double half_width, int grid);

/// The same kernels without OpenMP; kept as the reference.
namespace serial {
PsiSample psi_sample(const MultiPoly& f, const FeasibleSet& s, double t, const PsiConfig& config = {});
PsiProfile psi_profile(const MultiPoly& f, const FeasibleSet& s, double t_min, double t_max, int n,
                       const PsiConfig& config = {}, std::optional<double> reference = std::nullopt);
double brute_force_min(const MultiPoly& f, const FeasibleSet& s, double half_width, int grid);
}  // namespace serial

/// min_k f_k at Euclidean radius t, from the report's branches re-expanded
/// to `order`.
class BranchModel {
 public:
  explicit BranchModel(const AnalysisReport& report, const Rational& order = Rational(-8));
  [[nodiscard]] double min_at_radius(double t) const;
  [[nodiscard]] double max_at_radius(double t) const;
  [[nodiscard]] size_t size() const;

 private:
  struct Entry {
    BranchAtInfinity branch;
    PuiseuxSeries objective;
  };
  [[nodiscard]] double value_at_radius(size_t k, double t) const;
  bool radial_ = false;
  PuiseuxSeries radial_objective_;
  std::vector<Entry> entries_;
};

struct Discrepancy {
  std::string field;
  std::string claim;
  std::string evidence;
};

struct CheckTolerances {
  std::vector<double> radii{10, 50, 200};
  double relative = 1e-4;  // psi against the branch series
  double exponent = 0.1;   // fitted exponent against the minimal branch
  double limit = 0.1;      // |psi(far) - lambda_*| / (1 + |lambda_*|)
  double far_radius = 1e4;
  double box = 20;
  int grid = 401;
  double slack = 1e-9;
  double attained_gap = 1e-2;
  PsiConfig psi;
};

std::vector<Discrepancy> check_report(const AnalysisReport& report, const MultiPoly& f, const FeasibleSet& s,
                                      const CheckTolerances& tol = {});

/// CSV with columns t, psi, argmin_theta.
std::string profile_csv(const PsiProfile& profile);

}  // namespace polyinf::numeric
