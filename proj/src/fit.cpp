#include "polyh/fit.hpp"

#include <cmath>
#include <string>

#include "polyh/errors.hpp"

namespace polyh {

void FitConfig::validate() const {
  if (!(tail_fraction > 0.0 && tail_fraction <= 1.0))
    throw DomainError("tail_fraction must lie in (0, 1]");
  if (min_modes < 2) throw DomainError("min_modes must be at least 2");
  if (!(zero_floor >= 0.0)) throw DomainError("zero_floor must be nonnegative");
  if (!(residual_threshold > 0.0)) throw DomainError("residual_threshold must be positive");
  if (!(alpha_max > 0.0)) throw DomainError("alpha_max must be positive");
  for (double b : beta_grid)
    if (!(b > 1.0)) throw DomainError("beta_grid entries must exceed 1");
  if (!(tie_ratio >= 1.0)) throw DomainError("tie_ratio must be at least 1");
  if (!(stability_tol > 0.0)) throw DomainError("stability_tol must be positive");
}

LinearFit linear_fit(std::span<const double> x, std::span<const double> y, int min_points) {
  if (x.size() != y.size()) throw DomainError("linear_fit: x and y lengths differ");
  const auto n = static_cast<int>(x.size());
  if (n < min_points || n < 2)
    throw InsufficientData("need at least " + std::to_string(std::max(min_points, 2)) +
                           " points, have " + std::to_string(n));
  double mx = 0.0, my = 0.0;
  for (int i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0;
  for (int i = 0; i < n; ++i) {
    const double dx = x[i] - mx;
    sxx += dx * dx;
    sxy += dx * (y[i] - my);
  }
  if (!(sxx > 0.0)) throw InsufficientData("regressor is constant over the fit window");
  LinearFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double ss = 0.0;
  for (int i = 0; i < n; ++i) {
    const double r = y[i] - my - fit.slope * (x[i] - mx);
    ss += r * r;
  }
  fit.residual = std::sqrt(ss / n);
  fit.points = n;
  return fit;
}

int tail_start(int K, double tail_fraction) {
  return static_cast<int>(std::ceil((1.0 - tail_fraction) * K - 1e-12));
}

namespace {

// Collects (transform(|k|), log|c_k|) over the tail window and regresses.
template <class Transform>
LinearFit tail_regression(const CoeffSeq& seq, const FitConfig& cfg, bool skip_zero_mode,
                          Transform transform) {
  cfg.validate();
  const int K = seq.K();
  const int lo = tail_start(K, cfg.tail_fraction);
  std::vector<double> xs, ys;
  for (int k = -K; k <= K; ++k) {
    const int a = std::abs(k);
    if (a < lo || (skip_zero_mode && a == 0)) continue;
    const double mag = std::abs(seq[k]);
    if (!(mag > cfg.zero_floor)) continue;
    xs.push_back(transform(static_cast<double>(a)));
    ys.push_back(std::log(mag));
  }
  if (static_cast<int>(xs.size()) < cfg.min_modes)
    throw InsufficientData("tail window holds " + std::to_string(xs.size()) +
                           " usable coefficients, need " + std::to_string(cfg.min_modes));
  return linear_fit(xs, ys, cfg.min_modes);
}

}  // namespace

RateFit fit_exponential_rate(const CoeffSeq& seq, const FitConfig& cfg) {
  const auto f = tail_regression(seq, cfg, false, [](double a) { return a; });
  return {-f.slope, f.residual, f.points};
}

RateFit fit_polynomial_order(const CoeffSeq& seq, const FitConfig& cfg) {
  const auto f = tail_regression(seq, cfg, true, [](double a) { return std::log(a); });
  return {f.slope, f.residual, f.points};
}

RateFit fit_stretched_exponential(const CoeffSeq& seq, double beta, const FitConfig& cfg) {
  if (!(beta > 1.0)) throw DomainError("beta must exceed 1");
  const double p = 1.0 / beta;
  const auto f = tail_regression(seq, cfg, false, [p](double a) { return std::pow(a, p); });
  return {-f.slope, f.residual, f.points};
}

}  // namespace polyh
