#pragma once

#include <functional>
#include <vector>

#include "polyh/circle_samples.hpp"
#include "polyh/coeff_seq.hpp"
#include "polyh/polyrep.hpp"

namespace polyh {

/// c_k(r) = (1/n) sum_j u(r, t_j) e^{-ik t_j} for |k| <= K.
/// AliasError when n_theta < 2K+1, IndexError for a bad circle index.
CoeffSeq circle_fft(const CircleSamples& samples, int circle_index, int K);

struct DecomposeOptions {
  double underflow_guard = 1e-280;
  double condition_warning = 1e10;
};

struct ModeCondition {
  int k = 0;
  double condition = 0.0;
};

struct DecomposeResult {
  PolyharmonicRep rep;
  double max_condition = 0.0;
  std::vector<ModeCondition> conditioning_warnings;  // modes whose condition exceeds the limit
  std::vector<int> underflow_modes;                  // returned as zero
};

/// Per-mode solve of sum_j (r_i^2-1)^{j-1} r_i^{|k|} c_k(F_j) = c_k(r_i).
///
/// With exactly m usable circles the rows are divided by r_i^{|k|}, leaving a
/// Vandermonde system in x_i = r_i^2 - 1. With more circles the least-squares
/// problem keeps the natural row weights (r_i / r_max)^{|k|}, so that circles
/// where the mode has decayed into rounding noise do not dominate. Circles with
/// r_i^{|k|} below the underflow guard are dropped for that mode.
DecomposeResult decompose(const CircleSamples& samples, int m, int K,
                          const DecomposeOptions& opts = {});

/// Circle-trace coefficients c_k(u)(r) of some interior function.
using TraceSource = std::function<CoeffSeq(double r)>;

/// Exact coefficient-side trace of a representation.
TraceSource trace_source(const PolyharmonicRep& rep);
/// Trace obtained by sampling `rep` on an n_theta grid and transforming back.
TraceSource sampled_trace_source(const PolyharmonicRep& rep, int n_theta);
/// Trace read from stored samples; only the stored radii are available.
TraceSource samples_trace_source(const CircleSamples& samples, int K);

struct RadialLimitOptions {
  double tolerance = 1e-6;  // allowed |P_n - P_{n-1}| / max(1, |P_n|)
  int max_degree = 4;
  double underflow_guard = 1e-280;
};

struct RadialLimitResult {
  CoeffSeq limit;
  std::vector<int> diverged_modes;
  double max_change = 0.0;
};

/// Extracts F_j as the r -> 1 limit of
///   [c_k(u)(r) - sum_{p<j} (r^2-1)^{p-1} r^{|k|} c_k(F_p)] / (r^2-1)^{j-1}
/// mode by mode. The r^{|k|} factor is divided out first, which leaves a
/// polynomial in x = r^2 - 1; it is extrapolated to x = 0 through the nodes
/// closest to the boundary (at most max_degree + 1 of them).
RadialLimitResult radial_limit(const TraceSource& source, int K, int j,
                               const std::vector<CoeffSeq>& previously_extracted,
                               const std::vector<double>& r_sequence,
                               const RadialLimitOptions& opts = {});

/// Default radii: {0.5, 0.7, 0.9}, then 1 - 0.5 * 2^{-i} for circle index i >= 3.
std::vector<double> default_radii(int circles);

}  // namespace polyh
