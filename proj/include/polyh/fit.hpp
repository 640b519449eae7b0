#pragma once

#include <span>
#include <vector>

#include "polyh/coeff_seq.hpp"

namespace polyh {

/// Tail-window and decision thresholds for the coefficient-decay fits.
struct FitConfig {
  double tail_fraction = 0.5;      // fit |k| in [ceil((1 - tail_fraction) K), K]
  int min_modes = 8;               // minimum usable points per regression
  double zero_floor = 1e-300;      // |c_k| at or below this is excluded from log fits
  double residual_threshold = 0.1; // RMS residual in log units for "model holds"
  double alpha_max = 8.0;          // polynomial slope below -alpha_max reads as smooth
  std::vector<double> beta_grid{1.25, 1.5, 2.0, 3.0, 4.0};
  double tie_ratio = 1.5;          // a model is in contention if res <= tie_ratio * best + tie_abs
  double tie_abs = 1e-8;
  double rate_epsilon = 1e-8;      // |rate| below this counts as zero
  double hyperfunction_growth_tol = 0.1;
  double stability_tol = 0.01;     // relative change allowed when K halves

  /// Throws DomainError when a field violates its range.
  void validate() const;
};

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double residual = 0.0;  // RMS of y - (intercept + slope x)
  int points = 0;
};

/// Ordinary least squares y ~ a + b x. Throws InsufficientData when fewer than
/// `min_points` samples or all x coincide.
LinearFit linear_fit(std::span<const double> x, std::span<const double> y, int min_points = 2);

struct RateFit {
  double rate = 0.0;
  double residual = 0.0;
  int points = 0;
};

/// Negated slope of log|c_k| against |k| over the tail window.
RateFit fit_exponential_rate(const CoeffSeq& seq, const FitConfig& cfg = {});

/// Slope of log|c_k| against log|k| over the tail window, k = 0 excluded.
RateFit fit_polynomial_order(const CoeffSeq& seq, const FitConfig& cfg = {});

/// Negated slope of log|c_k| against |k|^{1/beta}. Negative rate means growth.
RateFit fit_stretched_exponential(const CoeffSeq& seq, double beta, const FitConfig& cfg = {});

/// Lowest |k| in the tail window.
int tail_start(int K, double tail_fraction);

}  // namespace polyh
