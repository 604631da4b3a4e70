#include "polyinf/numeric.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "polyinf/branches.hpp"

namespace polyinf::numeric {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kTwoPi = 2 * std::numbers::pi;

template <bool Par, class Fn>
void for_each_index(long n, Fn&& fn) {
  if constexpr (Par) {
#pragma omp parallel for schedule(static)
    for (long i = 0; i < n; ++i) fn(i);
  } else {
    for (long i = 0; i < n; ++i) fn(i);
  }
}

template <class Fn>
std::pair<double, double> golden(Fn&& fn, double a, double b, int steps) {
  const double r = (std::sqrt(5.0) - 1) / 2;
  double c = b - r * (b - a), d = a + r * (b - a);
  double fc = fn(c), fd = fn(d);
  for (int i = 0; i < steps; ++i) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - r * (b - a);
      fc = fn(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + r * (b - a);
      fd = fn(d);
    }
  }
  return fc <= fd ? std::make_pair(fc, c) : std::make_pair(fd, d);
}

template <class Fn>
double bisect(Fn&& fn, double a, double b, double fa, int steps) {
  for (int i = 0; i < steps; ++i) {
    double m = (a + b) / 2;
    double fm = fn(m);
    if (fm == 0) return m;
    if ((fm < 0) == (fa < 0)) {
      a = m;
      fa = fm;
    } else {
      b = m;
    }
  }
  return (a + b) / 2;
}

struct Prepared {
  DoublePoly f;
  std::optional<DoublePoly> g;
  Prepared(const MultiPoly& fp, const FeasibleSet& s) : f(fp) {
    if (!s.is_plane()) g.emplace(s.g);
  }
};

template <bool Par>
PsiSample psi_kernel(const Prepared& p, double t, const PsiConfig& c) {
  const long n = std::max(8, c.angular_samples);
  const double h = kTwoPi / n;
  auto at = [&](const DoublePoly& q, double th) { return q(t * std::cos(th), t * std::sin(th)); };
  PsiSample out{t, kInf, 0.0};
  std::vector<double> vals(n);

  if (!p.g) {
    for_each_index<Par>(n, [&](long i) { vals[i] = at(p.f, i * h); });
    std::vector<long> minima;
    for (long i = 0; i < n; ++i) {
      if (vals[i] < out.psi) out = {t, vals[i], i * h};
      if (vals[i] <= vals[(i + n - 1) % n] && vals[i] <= vals[(i + 1) % n]) minima.push_back(i);
    }
    std::sort(minima.begin(), minima.end(), [&](long a, long b) { return vals[a] < vals[b] || (vals[a] == vals[b] && a < b); });
    if (minima.size() > 4) minima.resize(4);
    std::vector<std::pair<double, double>> refined(minima.size());
    for_each_index<Par>(static_cast<long>(minima.size()), [&](long k) {
      double th = minima[k] * h;
      refined[k] = golden([&](double u) { return at(p.f, u); }, th - h, th + h, c.refine_steps);
    });
    for (auto [v, th] : refined)
      if (v < out.psi) out = {t, v, std::fmod(th + kTwoPi, kTwoPi)};
    return out;
  }

  // curve mode: sign changes of g along the circle
  for_each_index<Par>(n, [&](long i) { vals[i] = at(*p.g, i * h); });
  std::vector<double> best(n, kNaN), arg(n, 0.0);
  for_each_index<Par>(n, [&](long i) {
    double a = vals[i], b = vals[(i + 1) % n];
    double th;
    if (a == 0)
      th = i * h;
    else if ((a < 0) != (b < 0) && b != 0)
      th = bisect([&](double u) { return at(*p.g, u); }, i * h, (i + 1) * h, a, c.refine_steps);
    else
      return;
    best[i] = at(p.f, th);
    arg[i] = th;
  });
  for (long i = 0; i < n; ++i)
    if (!std::isnan(best[i]) && best[i] < out.psi) out = {t, best[i], arg[i]};
  return out;
}

std::optional<double> fit_exponent(const std::vector<PsiSample>& rows, double ref) {
  std::vector<double> xs, ys;
  for (const auto& r : rows) {
    double d = std::abs(r.psi - ref);
    if (!std::isfinite(d) || d <= 1e-12 * (1 + std::abs(ref))) continue;
    xs.push_back(std::log(r.t));
    ys.push_back(std::log(d));
  }
  if (xs.size() < 2) return std::nullopt;
  double mx = 0, my = 0;
  for (size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= xs.size();
  my /= xs.size();
  double sxy = 0, sxx = 0;
  for (size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  if (sxx == 0) return std::nullopt;
  return sxy / sxx;
}

template <bool Par>
PsiProfile profile_kernel(const Prepared& p, double t_min, double t_max, int n, const PsiConfig& c,
                          std::optional<double> reference) {
  PsiProfile out;
  out.config = c;
  out.reference = reference;
  n = std::max(n, 1);
  out.rows.resize(n);
  for_each_index<Par>(n, [&](long i) {
    double t = n == 1 ? t_min : t_min * std::pow(t_max / t_min, static_cast<double>(i) / (n - 1));
    out.rows[i] = psi_kernel<false>(p, t, c);
  });
  out.limit_estimate = out.rows.back().psi;
  out.fitted_exponent = fit_exponent(out.rows, reference.value_or(0.0));
  return out;
}

struct Deriv {
  DoublePoly fx, fy, fxx, fxy, fyy;
  explicit Deriv(const MultiPoly& f)
      : fx(f.derivative(Var::X)),
        fy(f.derivative(Var::Y)),
        fxx(f.derivative(Var::X).derivative(Var::X)),
        fxy(f.derivative(Var::X).derivative(Var::Y)),
        fyy(f.derivative(Var::Y).derivative(Var::Y)) {}
};

// Levenberg-Marquardt descent clipped to the box
double polish(const DoublePoly& f, const Deriv& d, double x, double y, double h) {
  double v = f(x, y), mu = 1e-3;
  for (int it = 0; it < 300; ++it) {
    double gx = d.fx(x, y), gy = d.fy(x, y);
    double a = d.fxx(x, y), b = d.fxy(x, y), c = d.fyy(x, y);
    double scale = std::abs(a) + std::abs(c) + 1e-300;
    bool moved = false;
    for (int k = 0; k < 30 && !moved; ++k) {
      double m = mu * scale;
      double aa = a + m, cc = c + m, det = aa * cc - b * b;
      double dx, dy;
      if (det > 0) {
        dx = -(cc * gx - b * gy) / det;
        dy = -(aa * gy - b * gx) / det;
      } else {
        dx = -gx / m;
        dy = -gy / m;
      }
      double nx = std::clamp(x + dx, -h, h), ny = std::clamp(y + dy, -h, h);
      double nv = f(nx, ny);
      if (nv < v) {
        moved = nx != x || ny != y;
        x = nx;
        y = ny;
        v = nv;
        mu = std::max(mu / 3, 1e-12);
      } else {
        mu *= 4;
      }
    }
    if (!moved) break;
  }
  return v;
}

template <bool Par>
double brute_kernel(const MultiPoly& fp, const FeasibleSet& s, double h, int grid) {
  grid = std::max(grid, 2);
  const DoublePoly f(fp);
  auto coord = [&](long i) { return -h + 2 * h * static_cast<double>(i) / (grid - 1); };
  std::vector<double> row_best(grid, kInf), row_arg(grid, 0.0);
  if (s.is_plane()) {
    for_each_index<Par>(grid, [&](long i) {
      double x = coord(i);
      for (long j = 0; j < grid; ++j) {
        double v = f(x, coord(j));
        if (v < row_best[i]) {
          row_best[i] = v;
          row_arg[i] = coord(j);
        }
      }
    });
    std::vector<long> order(grid);
    for (long i = 0; i < grid; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](long a, long b) { return row_best[a] < row_best[b] || (row_best[a] == row_best[b] && a < b); });
    order.resize(std::min<long>(8, grid));
    double best = row_best[order[0]];
    const Deriv d(fp);
    std::vector<double> pol(order.size());
    for_each_index<Par>(static_cast<long>(order.size()),
                        [&](long k) { pol[k] = polish(f, d, coord(order[k]), row_arg[order[k]], h); });
    for (double v : pol) best = std::min(best, v);
    return best;
  }
  // curve mode: roots of g on every row (y free) and column (x free)
  const DoublePoly g(s.g);
  std::vector<double> col_best(grid, kInf);
  auto scan = [&](double fixed, bool row) {
    double best = kInf;
    auto gv = [&](double u) { return row ? g(fixed, u) : g(u, fixed); };
    double prev = gv(coord(0));
    for (long j = 0; j + 1 < grid; ++j) {
      double a = coord(j), b = coord(j + 1), gb = gv(b);
      double r;
      if (prev == 0)
        r = a;
      else if ((prev < 0) != (gb < 0) && gb != 0)
        r = bisect(gv, a, b, prev, 80);
      else {
        prev = gb;
        continue;
      }
      best = std::min(best, row ? f(fixed, r) : f(r, fixed));
      prev = gb;
    }
    if (prev == 0) best = std::min(best, row ? f(fixed, h) : f(h, fixed));
    return best;
  };
  for_each_index<Par>(grid, [&](long i) {
    row_best[i] = scan(coord(i), true);
    col_best[i] = scan(coord(i), false);
  });
  double best = kInf;
  for (long i = 0; i < grid; ++i) best = std::min({best, row_best[i], col_best[i]});
  return best;
}

}  // namespace

DoublePoly::DoublePoly(const MultiPoly& p) {
  deg_ = p.is_zero() ? -1 : p.total_degree();
  int dy = p.is_zero() ? 0 : p.degree_y();
  int dx = p.is_zero() ? 0 : p.degree_x();
  c_.assign(dy + 1, std::vector<double>(dx + 1, 0.0));
  for (const auto& [e, c] : p.terms()) c_[e.second][e.first] = c.get_d();
}

double DoublePoly::operator()(double x, double y) const {
  double r = 0;
  for (size_t j = c_.size(); j-- > 0;) {
    double s = 0;
    const auto& row = c_[j];
    for (size_t i = row.size(); i-- > 0;) s = s * x + row[i];
    r = r * y + s;
  }
  return r;
}

PsiSample psi_sample(const MultiPoly& f, const FeasibleSet& s, double t, const PsiConfig& config) {
  return psi_kernel<true>(Prepared(f, s), t, config);
}

double psi(const MultiPoly& f, const FeasibleSet& s, double t, const PsiConfig& config) {
  return psi_sample(f, s, t, config).psi;
}

PsiProfile psi_profile(const MultiPoly& f, const FeasibleSet& s, double t_min, double t_max, int n,
                       const PsiConfig& config, std::optional<double> reference) {
  return profile_kernel<true>(Prepared(f, s), t_min, t_max, n, config, reference);
}

double brute_force_min(const MultiPoly& f, const FeasibleSet& s, double half_width, int grid) {
  return brute_kernel<true>(f, s, half_width, grid);
}

namespace serial {

PsiSample psi_sample(const MultiPoly& f, const FeasibleSet& s, double t, const PsiConfig& config) {
  return psi_kernel<false>(Prepared(f, s), t, config);
}

PsiProfile psi_profile(const MultiPoly& f, const FeasibleSet& s, double t_min, double t_max, int n,
                       const PsiConfig& config, std::optional<double> reference) {
  return profile_kernel<false>(Prepared(f, s), t_min, t_max, n, config, reference);
}

double brute_force_min(const MultiPoly& f, const FeasibleSet& s, double half_width, int grid) {
  return brute_kernel<false>(f, s, half_width, grid);
}

}  // namespace serial

BranchModel::BranchModel(const AnalysisReport& report, const Rational& order) {
  if (report.radial) {
    radial_ = true;
    radial_objective_ = report.branches.at(0).objective;
    return;
  }
  if (!report.tangency) return;
  for (auto& b : branches_at_infinity(*report.tangency, order)) {
    PuiseuxSeries obj = compose_objective(report.f, b, order);
    entries_.push_back({std::move(b), std::move(obj)});
  }
}

size_t BranchModel::size() const { return radial_ ? 1 : entries_.size(); }

double BranchModel::value_at_radius(size_t k, double t) const {
  const Entry& e = entries_[k];
  auto norm = [&](double s) {
    auto [x, y] = e.branch.point(s);
    return std::hypot(x, y);
  };
  double d = e.branch.norm_exponent.get_d();
  double s0 = std::pow(t / e.branch.kappa.to_double(), 1 / d);
  double lo = s0 / 2, hi = s0 * 2;
  for (int i = 0; i < 60 && norm(lo) > t; ++i) lo /= 2;
  for (int i = 0; i < 60 && norm(hi) < t; ++i) hi *= 2;
  for (int i = 0; i < 200; ++i) {
    double m = (lo + hi) / 2;
    if (norm(m) < t)
      lo = m;
    else
      hi = m;
  }
  return e.objective.eval((lo + hi) / 2);
}

double BranchModel::min_at_radius(double t) const {
  if (radial_) return radial_objective_.eval(t);
  double m = kInf;
  for (size_t k = 0; k < entries_.size(); ++k) m = std::min(m, value_at_radius(k, t));
  return m;
}

double BranchModel::max_at_radius(double t) const {
  if (radial_) return radial_objective_.eval(t);
  double m = -kInf;
  for (size_t k = 0; k < entries_.size(); ++k) m = std::max(m, value_at_radius(k, t));
  return m;
}

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

std::string fmt(const ExtendedValue& v) {
  if (v.is_pos_inf()) return "+inf";
  if (v.is_neg_inf()) return "-inf";
  return fmt(v.value().to_double());
}

// Expected behaviour of psi - lambda_*: an exponent in the norm scale, or
// nullopt when psi equals lambda_* eventually.
std::optional<double> expected_exponent(const AnalysisReport& r) {
  if (r.branches.empty()) return std::nullopt;
  const auto& ls = r.lambda_star;
  std::optional<double> from_below, from_above, inf_growth;
  bool constant_at_limit = false;
  for (const auto& b : r.branches) {
    const auto& a = b.asymptotics;
    if (!(a.lambda == ls)) continue;
    double d = b.norm_exponent.get_d();
    if (!ls.is_finite()) {
      double al = a.alpha.get_d();
      if (ls.is_neg_inf())
        inf_growth = inf_growth ? std::max(*inf_growth, al) : al;
      else
        inf_growth = inf_growth ? std::min(*inf_growth, al) : al;
      continue;
    }
    if (a.is_constant) {
      constant_at_limit = true;
      continue;
    }
    if (!a.approach_exponent || !a.approach_coeff) continue;
    double e = a.approach_exponent->get_d() / d;
    if (a.approach_coeff->sign() < 0)
      from_below = from_below ? std::max(*from_below, e) : e;
    else
      from_above = from_above ? std::min(*from_above, e) : e;
  }
  if (!ls.is_finite()) return inf_growth;
  if (from_below) return from_below;
  if (constant_at_limit) return std::nullopt;
  return from_above;
}

}  // namespace

std::vector<Discrepancy> check_report(const AnalysisReport& report, const MultiPoly& f, const FeasibleSet& s,
                                      const CheckTolerances& tol) {
  std::vector<Discrepancy> out;
  const Prepared p(f, s);
  const Prepared pneg(-f, s);
  auto psi_at = [&](double t) { return psi_kernel<true>(p, t, tol.psi).psi; };
  auto max_at = [&](double t) { return -psi_kernel<true>(pneg, t, tol.psi).psi; };

  if (!report.branches.empty()) {
    BranchModel model(report);
    for (double t : tol.radii) {
      double v = psi_at(t), m = model.min_at_radius(t);
      if (!(std::abs(v - m) / (1 + std::abs(v)) < tol.relative))
        out.push_back({"branches", "psi(" + fmt(t) + ") = min_k f_k = " + fmt(m), "sampled psi = " + fmt(v)});
    }
  }

  const double far = tol.far_radius;
  const ExtendedValue& ls = report.lambda_star;
  if (!report.branches.empty()) {
    const size_t before = out.size();
    double a = psi_at(far / 100), b = psi_at(far / 10), c = psi_at(far);
    if (ls.is_finite()) {
      double l = ls.value().to_double();
      if (!(std::abs(c - l) <= tol.limit * (1 + std::abs(l))))
        out.push_back({"lambda_star", fmt(ls), "psi(" + fmt(far) + ") = " + fmt(c)});
    } else if (ls.is_pos_inf() && !(a < b && b < c)) {
      out.push_back({"lambda_star", "+inf", "psi not increasing: " + fmt(a) + ", " + fmt(b) + ", " + fmt(c)});
    } else if (ls.is_neg_inf() && !(a > b && b > c)) {
      out.push_back({"lambda_star", "-inf", "psi not decreasing: " + fmt(a) + ", " + fmt(b) + ", " + fmt(c)});
    }

    // the fit is taken against lambda_*, so it says nothing once that is off
    const bool limit_ok = out.size() == before;

    const ExtendedValue& lm = report.lambda_max;
    double ma = max_at(far / 100), mb = max_at(far / 10), mc = max_at(far);
    if (lm.is_finite()) {
      double l = lm.value().to_double();
      if (!(std::abs(mc - l) <= tol.limit * (1 + std::abs(l))))
        out.push_back({"bounded_above", "max limit " + fmt(lm), "circle max at " + fmt(far) + " = " + fmt(mc)});
    } else if (lm.is_pos_inf() && !(ma < mb && mb < mc)) {
      out.push_back({"bounded_above", "false", "circle max not increasing: " + fmt(ma) + ", " + fmt(mb) + ", " + fmt(mc)});
    }

    auto expected = expected_exponent(report);
    std::optional<double> ref;
    if (ls.is_finite()) ref = ls.value().to_double();
    PsiProfile prof = profile_kernel<true>(p, 10, 1000, 12, tol.psi, ref);
    if (limit_ok && expected) {
      if (!prof.fitted_exponent || std::abs(*prof.fitted_exponent - *expected) > tol.exponent)
        out.push_back({"alpha", "psi - lambda_* ~ t^" + fmt(*expected),
                       prof.fitted_exponent ? "fitted exponent " + fmt(*prof.fitted_exponent) : "no fit"});
    } else if (limit_ok && ls.is_finite()) {
      double l = ls.value().to_double();
      for (const auto& row : prof.rows)
        if (std::abs(row.psi - l) > 1e-6 * (1 + std::abs(l))) {
          out.push_back({"alpha", "psi equals lambda_* at large radii", "psi(" + fmt(row.t) + ") = " + fmt(row.psi)});
          break;
        }
    }
  }

  if (report.critical_computed) {
    double bf = brute_kernel<true>(f, s, tol.box, tol.grid);
    if (report.bounded_below && report.infimum.is_finite()) {
      double inf = report.infimum.value().to_double();
      if (bf < inf - tol.slack * (1 + std::abs(inf)))
        out.push_back({"infimum", fmt(report.infimum), "brute force found " + fmt(bf)});
      if (report.attained && !report.critical.witnesses.empty()) {
        const auto& w = report.critical.witnesses.front();
        bool inside = std::abs(w.x.midpoint().get_d()) <= tol.box && std::abs(w.y.midpoint().get_d()) <= tol.box;
        if (inside && bf > inf + tol.attained_gap * (1 + std::abs(inf)))
          out.push_back({"attained", "minimum " + fmt(report.infimum), "brute force reached only " + fmt(bf)});
      }
    }
  }
  return out;
}

std::string profile_csv(const PsiProfile& profile) {
  std::ostringstream os;
  os.precision(17);
  os << "t,psi,argmin_theta\n";
  for (const auto& r : profile.rows) os << r.t << ',' << r.psi << ',' << r.theta << '\n';
  return os.str();
}

}  // namespace polyinf::numeric
