#include "polyh/blowup.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "polyh/boundary.hpp"
#include "polyh/errors.hpp"
#include "polyh/fit.hpp"

namespace polyh {

void BlowupConfig::validate() const {
  if (!(bounded_alpha >= 0.0)) throw DomainError("bounded_alpha must be >= 0");
  if (min_points < 3) throw DomainError("min_points must be >= 3");
  if (!(residual_threshold > 0.0)) throw DomainError("residual_threshold must be > 0");
  if (beta_grid.empty()) throw DomainError("beta_grid is empty");
  for (double b : beta_grid)
    if (!(b > 1.0) || !std::isfinite(b)) throw DomainError("beta_grid entries must be > 1");
  if (!(model_ratio > 0.0 && model_ratio <= 1.0)) throw DomainError("model_ratio must lie in (0, 1]");
  if (p_min < 0 || p_max < p_min || p_max > 50) throw DomainError("need 0 <= p_min <= p_max <= 50");
  if (n_theta < 0) throw DomainError("n_theta must be >= 0");
  if (!(resolve_tol > 0.0)) throw DomainError("resolve_tol must be > 0");
}

std::string to_string(BlowupFit::Model model) {
  switch (model) {
    case BlowupFit::Model::PowerLaw: return "PowerLaw";
    case BlowupFit::Model::ExpStretched: return "ExpStretched";
    case BlowupFit::Model::Bounded: return "Bounded";
  }
  return "?";
}

namespace {

struct Points {
  std::vector<double> r, logv;
  bool all_zero = false;
};

Points usable_points(const NormProfile& profile) {
  profile.validate();
  Points pts;
  bool any_positive = false;
  for (std::size_t i = 0; i < profile.radii.size(); ++i) {
    if (profile.values[i] > 0.0) {
      any_positive = true;
      pts.r.push_back(profile.radii[i]);
      pts.logv.push_back(std::log(profile.values[i]));
    }
  }
  pts.all_zero = !profile.radii.empty() && !any_positive;
  return pts;
}

void set_window(BlowupFit& fit, const Points& pts) {
  fit.points = static_cast<int>(pts.r.size());
  if (!pts.r.empty()) {
    fit.r_min = pts.r.front();
    fit.r_max = pts.r.back();
  }
}

struct ExpCandidate {
  double alpha = 0.0;
  double residual = std::numeric_limits<double>::infinity();
};

ExpCandidate fit_exp_at(const Points& pts, double beta) {
  const double q = 1.0 / (beta - 1.0);
  std::vector<double> x(pts.r.size());
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = std::pow(1.0 - pts.r[i], -q);
  const auto lf = linear_fit(x, pts.logv, 2);
  if (lf.slope >= 0.0) return {lf.slope, lf.residual};
  // alpha >= 0: the constrained optimum is the constant model.
  double mean = 0.0;
  for (double y : pts.logv) mean += y;
  mean /= static_cast<double>(pts.logv.size());
  double ss = 0.0;
  for (double y : pts.logv) ss += (y - mean) * (y - mean);
  return {0.0, std::sqrt(ss / static_cast<double>(pts.logv.size()))};
}

}  // namespace

BlowupFit fit_power_blowup(const NormProfile& profile, const BlowupConfig& cfg) {
  const auto pts = usable_points(profile);
  BlowupFit out;
  if (pts.all_zero) {
    out.model = BlowupFit::Model::Bounded;
    out.points = static_cast<int>(profile.radii.size());
    out.accepted = true;
    return out;
  }
  if (static_cast<int>(pts.r.size()) < cfg.min_points)
    throw InsufficientData("power blow-up fit needs at least " + std::to_string(cfg.min_points) +
                           " profile points");
  std::vector<double> x(pts.r.size());
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = -std::log1p(-pts.r[i]);
  const auto lf = linear_fit(x, pts.logv, cfg.min_points);
  out.alpha = lf.slope;
  out.residual = lf.residual;
  out.model = lf.slope <= cfg.bounded_alpha ? BlowupFit::Model::Bounded : BlowupFit::Model::PowerLaw;
  out.accepted = out.residual <= cfg.residual_threshold;
  set_window(out, pts);
  return out;
}

BlowupFit fit_exp_blowup(const NormProfile& profile, const BlowupConfig& cfg) {
  const auto pts = usable_points(profile);
  if (static_cast<int>(pts.r.size()) < cfg.min_points)
    throw InsufficientData("stretched blow-up fit needs at least " + std::to_string(cfg.min_points) +
                           " profile points");
  auto grid = cfg.beta_grid;
  std::sort(grid.begin(), grid.end());
  std::size_t best = 0;
  std::vector<ExpCandidate> cands;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    cands.push_back(fit_exp_at(pts, grid[i]));
    if (cands[i].residual < cands[best].residual) best = i;
  }
  double beta = grid[best];
  ExpCandidate cand = cands[best];
  if (cfg.refine_beta && grid.size() > 1) {
    double lo = best == 0 ? std::max(1.0 + 1e-3, grid[0] - (grid[1] - grid[0])) : grid[best - 1];
    double hi = best + 1 == grid.size() ? grid[best] + (grid[best] - grid[best - 1]) : grid[best + 1];
    const double g = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = hi - g * (hi - lo), b = lo + g * (hi - lo);
    double fa = fit_exp_at(pts, a).residual, fb = fit_exp_at(pts, b).residual;
    for (int it = 0; it < 60 && hi - lo > 1e-6; ++it) {
      if (fa < fb) {
        hi = b; b = a; fb = fa;
        a = hi - g * (hi - lo);
        fa = fit_exp_at(pts, a).residual;
      } else {
        lo = a; a = b; fa = fb;
        b = lo + g * (hi - lo);
        fb = fit_exp_at(pts, b).residual;
      }
    }
    const double mid = 0.5 * (lo + hi);
    const auto refined = fit_exp_at(pts, mid);
    if (refined.residual < cand.residual) {
      beta = mid;
      cand = refined;
    }
  }
  BlowupFit out;
  out.model = BlowupFit::Model::ExpStretched;
  out.alpha = cand.alpha;
  out.beta = beta;
  out.q = 1.0 / (beta - 1.0);
  out.residual = cand.residual;
  out.accepted = out.residual <= cfg.residual_threshold;
  set_window(out, pts);
  return out;
}

ResolvedProfile resolved_sup_profile(const PolyharmonicRep& rep, const BlowupConfig& cfg) {
  cfg.validate();
  ResolvedProfile out;
  int n = cfg.n_theta;
  if (n == 0) {
    n = 64;
    while (n < 2 * rep.K() + 1) n *= 2;
  }
  out.n_theta = n;
  const auto grid = dyadic_grid(cfg.p_min, cfg.p_max);
  const auto full = sup_abs_profile(rep, grid, n);
  const auto half = sup_abs_profile(rep.resized(rep.K() / 2), grid, n);
  out.profile.kind = NormKind::SupAbs;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double v = full.values[i];
    if (std::abs(v - half.values[i]) > cfg.resolve_tol * v) break;
    out.profile.radii.push_back(grid[i]);
    out.profile.values.push_back(v);
  }
  out.dropped = static_cast<int>(grid.size() - out.profile.radii.size());
  return out;
}

}  // namespace polyh
