#include "polyh/boundary.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "polyh/errors.hpp"
#include "polyh/fourier.hpp"
#include "polyh/parallel.hpp"

namespace polyh {

std::string to_string(NormKind kind) { return kind == NormKind::L2 ? "L2" : "SupAbs"; }

void NormProfile::validate() const {
  if (radii.size() != values.size()) throw DomainError("profile radii and values differ in length");
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (!(radii[i] >= 0.0 && radii[i] < 1.0)) throw DomainError("profile radius outside [0, 1)");
    if (i > 0 && !(radii[i] > radii[i - 1])) throw DomainError("profile radii must increase");
    if (!(values[i] >= 0.0) || !std::isfinite(values[i]))
      throw DomainError("profile values must be finite and nonnegative");
  }
}

std::vector<double> dyadic_grid(int p_min, int p_max) {
  if (p_min < 0 || p_max < p_min) throw DomainError("dyadic grid needs 0 <= p_min <= p_max");
  std::vector<double> out;
  for (int p = p_min; p <= p_max; ++p) out.push_back(1.0 - std::ldexp(1.0, -p));
  return out;
}

namespace {

void check_grid(const std::vector<double>& r_grid) {
  if (r_grid.empty()) throw DomainError("radial grid is empty");
  for (double r : r_grid)
    if (!(r >= 0.0 && r < 1.0)) throw DomainError("radial grid point outside [0, 1)");
}

// sum_k r^{2|k|} |c_k|^2, high modes first.
double damped_energy(const CoeffSeq& seq, double r) {
  const int K = seq.K();
  const double r2 = r * r;
  std::vector<double> w(static_cast<std::size_t>(K) + 1, 0.0);
  w[0] = 1.0;
  for (int a = 1; a <= K && w[static_cast<std::size_t>(a - 1)] > 0.0; ++a)
    w[static_cast<std::size_t>(a)] = w[static_cast<std::size_t>(a - 1)] * r2;
  double sum = 0.0;
  for (int a = K; a >= 1; --a) {
    const double wa = w[static_cast<std::size_t>(a)];
    if (wa != 0.0) sum += wa * (std::norm(seq[a]) + std::norm(seq[-a]));
  }
  return sum + std::norm(seq[0]);
}

}  // namespace

double bj_norm(const CoeffSeq& seq, int j, const std::vector<double>& r_grid) {
  if (j < 1) throw DomainError("B_j needs j >= 1");
  check_grid(r_grid);
  std::vector<double> values(r_grid.size());
  parallel_for(r_grid.size(), [&](std::size_t i) {
    const double r = r_grid[i];
    values[i] = std::pow(1.0 - r * r, j) * std::sqrt(damped_energy(seq, r));
  });
  return *std::max_element(values.begin(), values.end());
}

BjArgmax single_mode_bj_argmax(int k, int j) {
  if (k < 1) throw DomainError("single-mode argmax needs k >= 1");
  if (j < 1) throw DomainError("single-mode argmax needs j >= 1");
  const double denom = static_cast<double>(k) + 2.0 * j;
  const double z = k / denom;
  const double log_value = j * std::log(2.0 * j / denom) + 0.5 * k * std::log(z);
  return {z, std::exp(log_value)};
}

std::vector<double> bj_default_grid(const CoeffSeq& seq, int j, int dominant) {
  std::vector<double> grid{0.0};
  const auto dyadic = dyadic_grid(1, 20);
  grid.insert(grid.end(), dyadic.begin(), dyadic.end());
  if (j >= 1) {
    std::vector<std::pair<double, int>> contrib;
    for (int a = 1; a <= seq.K(); ++a) {
      const double mag = std::sqrt(std::norm(seq[a]) + std::norm(seq[-a]));
      if (mag > 0.0) contrib.emplace_back(mag * single_mode_bj_argmax(a, j).value, a);
    }
    std::sort(contrib.begin(), contrib.end(), [](const auto& x, const auto& y) {
      return x.first > y.first || (x.first == y.first && x.second < y.second);
    });
    for (std::size_t i = 0; i < contrib.size() && static_cast<int>(i) < dominant; ++i)
      grid.push_back(std::sqrt(single_mode_bj_argmax(contrib[i].second, j).r_star_sq));
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

double embedding_constant(int j, int K) {
  if (j < 1) throw DomainError("embedding constant needs j >= 1");
  double c2 = std::max(1.0, std::pow(2.0 * j / std::exp(1.0), 2.0 * j));
  for (int k = 1; k <= K; ++k) {
    const double v = single_mode_bj_argmax(k, j).value;
    c2 = std::max(c2, std::pow(static_cast<double>(k), 2.0 * j) * v * v);
  }
  return std::sqrt(c2);
}

NormProfile l2_profile(const PolyharmonicRep& rep, const std::vector<double>& r_grid) {
  check_grid(r_grid);
  NormProfile out;
  out.kind = NormKind::L2;
  out.radii = r_grid;
  out.values.assign(r_grid.size(), 0.0);
  parallel_for(r_grid.size(), [&](std::size_t i) {
    out.values[i] = rep.order() == 0 ? 0.0 : l2_norm(rep.trace_coefficients(r_grid[i]));
  });
  return out;
}

NormProfile sup_abs_profile(const PolyharmonicRep& rep, const std::vector<double>& r_grid,
                            int n_theta) {
  check_grid(r_grid);
  if (n_theta < 1) throw DomainError("n_theta must be positive");
  NormProfile out;
  out.kind = NormKind::SupAbs;
  out.radii = r_grid;
  out.values.assign(r_grid.size(), 0.0);
  parallel_for(r_grid.size(), [&](std::size_t i) {
    if (rep.order() == 0) return;
    const auto values = synthesize_uniform(rep.trace_coefficients(r_grid[i]), n_theta);
    double best = 0.0;
    for (const auto& v : values) best = std::max(best, std::abs(v));
    out.values[i] = best;
  });
  return out;
}

namespace {

bool stable(double full, double half, double tol) {
  if (full == 0.0 && half == 0.0) return true;
  return std::abs(full - half) <= tol * std::abs(full);
}

}  // namespace

L2BoundaryReport l2_boundary_check(const PolyharmonicRep& rep, const std::vector<double>& r_grid,
                                   double stability_tol) {
  check_grid(r_grid);
  L2BoundaryReport out;
  const int m = rep.order();
  const int half_K = rep.K() / 2;
  const auto half = rep.resized(half_K);
  auto sup_of = [](const NormProfile& p) {
    return p.values.empty() ? 0.0 : *std::max_element(p.values.begin(), p.values.end());
  };
  out.profile_sup = sup_of(l2_profile(rep, r_grid));
  out.profile_sup_half = sup_of(l2_profile(half, r_grid));
  out.profile_bounded = stable(out.profile_sup, out.profile_sup_half, stability_tol);

  if (m >= 1) {
    out.f1_norm = l2_norm(rep.F(1));
    out.f1_stable = stable(out.f1_norm, l2_norm(half.F(1)), stability_tol);
  } else {
    out.f1_stable = true;
  }
  bool all_ok = out.f1_stable;
  for (int j = 2; j <= m; ++j) {
    const double full = bj_norm(rep.F(j), j - 1, r_grid);
    const double reduced = bj_norm(half.F(j), j - 1, r_grid);
    out.bj_norms.push_back(full);
    out.bj_stable.push_back(stable(full, reduced, stability_tol));
    all_ok = all_ok && out.bj_stable.back();
  }
  out.coefficients_ok = all_ok;
  out.consistent = out.coefficients_ok == out.profile_bounded;
  if (!out.profile_bounded) out.notes.push_back("L2 profile sup changes by more than the tolerance when K halves");
  if (!out.f1_stable) out.notes.push_back("l2 norm of F_1 not stable under K-halving");
  for (std::size_t i = 0; i < out.bj_stable.size(); ++i)
    if (!out.bj_stable[i])
      out.notes.push_back("B_" + std::to_string(i + 1) + " norm of F_" + std::to_string(i + 2) +
                          " not stable under K-halving");
  if (!out.consistent) out.notes.push_back("profile and coefficient sides disagree");
  return out;
}

double weak_l2_limit_check(const PolyharmonicRep& rep, const std::vector<int>& k_set,
                           double r_probe) {
  if (!(r_probe >= 0.0 && r_probe < 1.0)) throw DomainError("r_probe must lie in [0, 1)");
  const int m = rep.order();
  if (m == 0) return 0.0;
  const double x = r_probe * r_probe - 1.0;
  double worst = 0.0;
  for (int k : k_set) {
    if (std::abs(k) > rep.K()) continue;
    cplx acc{};
    for (int j = m; j >= 1; --j) acc = acc * x + rep.F(j)[k];
    const cplx pairing = std::pow(r_probe, std::abs(k)) * acc;
    worst = std::max(worst, std::abs(pairing - rep.F(1)[k]));
  }
  return worst;
}

double beta_moment(int n, double delta) {
  if (!(delta > 0.0) || !std::isfinite(delta)) throw DomainError("beta_moment needs delta > 0");
  if (n < 0) throw DomainError("beta_moment needs n >= 0");
  double log_a = -std::log(delta);
  if (n <= 4096) {
    for (int i = 1; i <= n; ++i) log_a -= std::log1p(delta / i);
  } else {
    log_a = std::lgamma(n + 1.0) + std::lgamma(delta) - std::lgamma(n + 1.0 + delta);
  }
  return std::exp(log_a);
}

EmbeddingReport embedding_check(const CoeffSeq& seq, int j, double epsilon, double stability_tol) {
  if (j < 1) throw DomainError("embedding check needs j >= 1");
  if (!(epsilon > 0.0)) throw DomainError("embedding check needs epsilon > 0");
  EmbeddingReport out;
  out.j = j;
  out.epsilon = epsilon;
  out.bj = bj_norm(seq, j, bj_default_grid(seq, j));
  out.sobolev = sobolev_norm(seq, -j);
  out.constant = embedding_constant(j, seq.K());
  out.inequality_holds = out.bj <= out.constant * out.sobolev * (1.0 + 1e-12);

  const auto half = seq.resized(seq.K() / 2);
  const double bj_half = bj_norm(half, j, bj_default_grid(half, j));
  out.bj_stable = stable(out.bj, bj_half, stability_tol);
  const double s_full = sobolev_norm(seq, -j - epsilon);
  const double s_half = sobolev_norm(half, -j - epsilon);
  out.sobolev_eps_change = s_full == 0.0 ? 0.0 : std::abs(s_full - s_half) / s_full;
  out.sobolev_eps_cauchy = out.sobolev_eps_change <= stability_tol;
  out.upper_inclusion_ok = !out.bj_stable || out.sobolev_eps_cauchy;
  return out;
}

}  // namespace polyh
