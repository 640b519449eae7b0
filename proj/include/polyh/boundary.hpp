#pragma once

#include <string>
#include <vector>

#include "polyh/coeff_seq.hpp"
#include "polyh/polyrep.hpp"
#include "polyh/profile.hpp"

namespace polyh {

/// Grid surrogate of sup_r (1-r^2)^j (sum_k r^{2|k|} |c_k|^2)^{1/2}.
double bj_norm(const CoeffSeq& seq, int j, const std::vector<double>& r_grid);

/// r = 0, the dyadic radii 1 - 2^{-p} (p = 1..20), and the single-mode argmax
/// radii r^2 = k/(k+2j) of the `dominant` modes with the largest single-mode
/// contribution |c_k| max_r (1-r^2)^j r^{|k|}.
std::vector<double> bj_default_grid(const CoeffSeq& seq, int j, int dominant = 8);

struct BjArgmax {
  double r_star_sq = 0.0;
  double value = 0.0;  // max_r (1-r^2)^j r^k
};

/// Closed-form maximiser of (1-r^2)^j r^k: r^2 = k/(k+2j),
/// value (2j/(k+2j))^j (k/(k+2j))^{k/2}.
BjArgmax single_mode_bj_argmax(int k, int j);

/// c_j with c_j^2 = sup_k k^{2j} max_r (1-r^2)^{2j} r^{2k} (and >= 1 for the
/// k = 0 weight), so that bj_norm <= c_j * sobolev_norm(., -j).
double embedding_constant(int j, int K);

/// Per-radius l2 norm of the circle-trace coefficients (Parseval, no quadrature).
NormProfile l2_profile(const PolyharmonicRep& rep, const std::vector<double>& r_grid);

/// Per-radius max over t_j = 2 pi j / n_theta of |u(r, t_j)|.
NormProfile sup_abs_profile(const PolyharmonicRep& rep, const std::vector<double>& r_grid,
                            int n_theta);

/// Finite-data check of: sup_r ||u(r,.)||_{L2} < inf  <=>  F_1 in L2 and
/// F_j in B_{j-1} (j >= 2). "Finite" means stable under K-halving.
struct L2BoundaryReport {
  double profile_sup = 0.0;
  double profile_sup_half = 0.0;  // same quantity after truncating to K/2
  bool profile_bounded = false;
  double f1_norm = 0.0;
  bool f1_stable = false;
  std::vector<double> bj_norms;  // F_j in B_{j-1}, j = 2..m
  std::vector<bool> bj_stable;
  bool coefficients_ok = false;
  bool consistent = false;
  std::vector<std::string> notes;
};

L2BoundaryReport l2_boundary_check(const PolyharmonicRep& rep, const std::vector<double>& r_grid,
                                   double stability_tol = 0.01);

/// max over k in k_set of |<u(r,.), e_k> - c_k(F_1)|, computed coefficient-side.
double weak_l2_limit_check(const PolyharmonicRep& rep, const std::vector<int>& k_set,
                           double r_probe);

/// n! / (delta (delta+1) ... (delta+n)) = int_0^1 (1-z)^{delta-1} z^n dz, in log space.
double beta_moment(int n, double delta);

struct EmbeddingReport {
  int j = 0;
  double epsilon = 0.0;
  double bj = 0.0;
  double sobolev = 0.0;   // norm with weight |k|^{-2j}
  double constant = 0.0;  // c_j
  bool inequality_holds = false;
  bool bj_stable = false;
  double sobolev_eps_change = 0.0;  // relative change of the |k|^{-2j-2eps} norm under K-halving
  bool sobolev_eps_cauchy = false;
  bool upper_inclusion_ok = false;  // vacuous when bj is not stable
};

/// Instance check of W_2^{-j} in B_j in W_2^{-j-eps}.
EmbeddingReport embedding_check(const CoeffSeq& seq, int j, double epsilon,
                                double stability_tol = 0.01);

}  // namespace polyh
