#include "polyh/recon.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <limits>
#include <numbers>

#include "polyh/errors.hpp"
#include "polyh/fourier.hpp"
#include "polyh/parallel.hpp"

namespace polyh {

CoeffSeq circle_fft(const CircleSamples& samples, int circle_index, int K) {
  if (circle_index < 0 || circle_index >= static_cast<int>(samples.radii.size()))
    throw IndexError("circle index " + std::to_string(circle_index) + " outside [0, " +
                     std::to_string(samples.radii.size()) + ")");
  if (K < 0) throw DomainError("K must be nonnegative");
  const int n = samples.n_theta;
  if (n < 2 * K + 1)
    throw AliasError("n_theta = " + std::to_string(n) + " cannot resolve K = " + std::to_string(K) +
                     " (needs n_theta >= 2K+1)");
  const auto& row = samples.values[static_cast<std::size_t>(circle_index)];
  if (static_cast<int>(row.size()) != n) throw DomainError("sample row length differs from n_theta");

  return analyze_uniform(row, K);
}

std::vector<double> default_radii(int circles) {
  std::vector<double> radii;
  const double base[] = {0.5, 0.7, 0.9};
  for (int i = 0; i < circles; ++i) {
    if (i < 3)
      radii.push_back(base[i]);
    else
      radii.push_back(1.0 - 0.5 * std::ldexp(1.0, -i));
  }
  return radii;
}

DecomposeResult decompose(const CircleSamples& samples, int m, int K,
                          const DecomposeOptions& opts) {
  samples.validate();
  if (m < 1) throw DomainError("decompose needs order m >= 1");
  const int circles = static_cast<int>(samples.radii.size());
  if (circles < m)
    throw DomainError("decompose needs at least m = " + std::to_string(m) + " circles, have " +
                      std::to_string(circles));

  std::vector<CoeffSeq> traces;
  traces.reserve(static_cast<std::size_t>(circles));
  for (int i = 0; i < circles; ++i) traces.push_back(circle_fft(samples, i, K));

  const double log_guard = std::log(opts.underflow_guard);
  const std::size_t modes = static_cast<std::size_t>(2 * K + 1);
  std::vector<std::vector<cplx>> solution(modes, std::vector<cplx>(static_cast<std::size_t>(m)));
  std::vector<double> condition(modes, 0.0);
  std::vector<char> underflow(modes, 0);
  std::vector<char> singular(modes, 0);

  parallel_for(modes, [&](std::size_t idx) {
    const int k = static_cast<int>(idx) - K;
    const int a = std::abs(k);
    std::vector<int> rows;
    double log_rmax = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < circles; ++i) {
      const double r = samples.radii[static_cast<std::size_t>(i)];
      const double log_scale = a == 0 ? 0.0 : (r > 0.0 ? a * std::log(r) : -INFINITY);
      if (log_scale >= log_guard) {
        rows.push_back(i);
        log_rmax = std::max(log_rmax, log_scale);
      }
    }
    if (static_cast<int>(rows.size()) < m) {
      underflow[idx] = 1;
      return;
    }
    const bool square = static_cast<int>(rows.size()) == m;
    const auto n_rows = static_cast<Eigen::Index>(rows.size());
    Eigen::MatrixXcd M(n_rows, m);
    Eigen::VectorXcd b(n_rows);
    for (Eigen::Index row = 0; row < n_rows; ++row) {
      const int i = rows[static_cast<std::size_t>(row)];
      const double r = samples.radii[static_cast<std::size_t>(i)];
      const double x = r * r - 1.0;
      const double log_scale = a == 0 ? 0.0 : a * std::log(r);
      // square: divide by r^{|k|}; least squares: divide by r_max^{|k|} only
      const double weight = square ? 1.0 : std::exp(log_scale - log_rmax);
      const double rhs_scale = square ? std::exp(-log_scale) : std::exp(-log_rmax);
      double power = weight;
      for (int j = 0; j < m; ++j) {
        M(row, j) = power;
        power *= x;
      }
      b(row) = traces[static_cast<std::size_t>(i)][k] * rhs_scale;
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(M, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    const double smax = sv(0);
    const double smin = sv(sv.size() - 1);
    if (!(smin > 0.0)) {
      singular[idx] = 1;
      return;
    }
    condition[idx] = smax / smin;
    svd.setThreshold(0.0);
    const Eigen::VectorXcd x = svd.solve(b);
    for (int j = 0; j < m; ++j) solution[idx][static_cast<std::size_t>(j)] = x(j);
  });

  DecomposeResult out;
  std::vector<CoeffSeq> F(static_cast<std::size_t>(m), CoeffSeq(K));
  for (std::size_t idx = 0; idx < modes; ++idx) {
    const int k = static_cast<int>(idx) - K;
    if (singular[idx])
      throw SingularSystem("mode " + std::to_string(k) + ": radii coincide after scaling");
    if (underflow[idx]) {
      out.underflow_modes.push_back(k);
      continue;
    }
    for (int j = 0; j < m; ++j) F[static_cast<std::size_t>(j)].set(k, solution[idx][static_cast<std::size_t>(j)]);
    out.max_condition = std::max(out.max_condition, condition[idx]);
    if (condition[idx] > opts.condition_warning) out.conditioning_warnings.push_back({k, condition[idx]});
  }
  out.rep = PolyharmonicRep(K, std::move(F));
  return out;
}

TraceSource trace_source(const PolyharmonicRep& rep) {
  return [rep](double r) { return rep.trace_coefficients(r); };
}

TraceSource sampled_trace_source(const PolyharmonicRep& rep, int n_theta) {
  if (n_theta < 2 * rep.K() + 1) throw AliasError("n_theta must be at least 2K+1");
  return [rep, n_theta](double r) {
    const auto samples = evaluate_circles(rep, {r}, n_theta);
    return circle_fft(samples, 0, rep.K());
  };
}

TraceSource samples_trace_source(const CircleSamples& samples, int K) {
  samples.validate();
  return [samples, K](double r) {
    for (std::size_t i = 0; i < samples.radii.size(); ++i)
      if (samples.radii[i] == r) return circle_fft(samples, static_cast<int>(i), K);
    throw DomainError("no stored circle at r = " + std::to_string(r));
  };
}

namespace {

// Neville evaluation at x = 0 of the interpolant through (xs, ys).
cplx extrapolate_to_zero(const std::vector<double>& xs, std::vector<cplx> ys) {
  const std::size_t n = xs.size();
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = 0; i + level < n; ++i)
      ys[i] = (ys[i + 1] * xs[i] - ys[i] * xs[i + level]) / (xs[i] - xs[i + level]);
  return ys[0];
}

}  // namespace

RadialLimitResult radial_limit(const TraceSource& source, int K, int j,
                               const std::vector<CoeffSeq>& previously_extracted,
                               const std::vector<double>& r_sequence,
                               const RadialLimitOptions& opts) {
  if (j < 1) throw DomainError("radial_limit needs j >= 1");
  if (static_cast<int>(previously_extracted.size()) != j - 1)
    throw DomainError("radial_limit for F_" + std::to_string(j) + " needs F_1..F_" +
                      std::to_string(j - 1) + " (" + std::to_string(j - 1) + " sequences), got " +
                      std::to_string(previously_extracted.size()));
  if (r_sequence.size() < 2) throw DomainError("radial_limit needs at least 2 radii");
  for (std::size_t i = 0; i < r_sequence.size(); ++i) {
    if (!(r_sequence[i] > 0.0 && r_sequence[i] < 1.0))
      throw DomainError("radial_limit radii must lie in (0, 1)");
    if (i > 0 && !(r_sequence[i] > r_sequence[i - 1]))
      throw DomainError("radial_limit radii must increase toward 1");
  }
  if (opts.max_degree < 1) throw DomainError("max_degree must be at least 1");

  const std::size_t keep = std::min<std::size_t>(r_sequence.size(), static_cast<std::size_t>(opts.max_degree) + 1);
  const std::vector<double> radii(r_sequence.end() - static_cast<std::ptrdiff_t>(keep), r_sequence.end());
  std::vector<CoeffSeq> traces;
  for (double r : radii) {
    auto c = source(r);
    if (c.K() < K) c = c.resized(K);
    traces.push_back(std::move(c));
  }

  RadialLimitResult out;
  out.limit = CoeffSeq(K);
  const double log_guard = std::log(opts.underflow_guard);
  for (int k = -K; k <= K; ++k) {
    const int a = std::abs(k);
    std::vector<double> xs;
    std::vector<cplx> ys;
    for (std::size_t i = 0; i < radii.size(); ++i) {
      const double r = radii[i];
      if (a > 0 && a * std::log(r) < log_guard) continue;
      const double x = r * r - 1.0;
      cplx g = traces[i][k] / std::pow(r, a);
      double xp = 1.0;
      for (int p = 1; p < j; ++p) {
        const auto& Fp = previously_extracted[static_cast<std::size_t>(p - 1)];
        if (a <= Fp.K()) g -= xp * Fp[k];
        xp *= x;
      }
      xs.push_back(x);
      ys.push_back(g / xp);
    }
    if (xs.size() < 2) {
      out.diverged_modes.push_back(k);
      continue;
    }
    const cplx full = extrapolate_to_zero(xs, ys);
    // drop the node farthest from the boundary for the comparison extrapolant
    const std::vector<double> xs_short(xs.begin() + 1, xs.end());
    const std::vector<cplx> ys_short(ys.begin() + 1, ys.end());
    const cplx reduced = xs_short.size() >= 2 ? extrapolate_to_zero(xs_short, ys_short) : ys_short[0];
    const double change = std::abs(full - reduced) / std::max(1.0, std::abs(full));
    out.max_change = std::max(out.max_change, change);
    if (!std::isfinite(full.real()) || !std::isfinite(full.imag()) || change > opts.tolerance) {
      out.diverged_modes.push_back(k);
      if (!std::isfinite(full.real()) || !std::isfinite(full.imag())) continue;
    }
    out.limit.set(k, full);
  }
  return out;
}

}  // namespace polyh
