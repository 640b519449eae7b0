#pragma once

#include <string>
#include <vector>

#include "polyh/polyrep.hpp"
#include "polyh/profile.hpp"

namespace polyh {

struct BlowupConfig {
  double bounded_alpha = 0.05;      // power exponent at or below this reads as bounded
  int min_points = 4;
  double residual_threshold = 0.1;  // sets BlowupFit::accepted
  std::vector<double> beta_grid{1.25, 1.5, 2.0, 3.0, 4.0};
  bool refine_beta = true;          // golden-section search around the best grid beta
  double model_ratio = 0.5;         // winner residual must be <= model_ratio * loser residual
  int p_min = 2;                    // profile radii 1 - 2^{-p}
  int p_max = 20;
  int n_theta = 0;                  // 0 picks a power of two >= max(64, 2K+1)
  double resolve_tol = 1e-3;        // K vs K/2 agreement for a radius to count as resolved

  void validate() const;
};

struct BlowupFit {
  enum class Model { PowerLaw, ExpStretched, Bounded };
  Model model = Model::Bounded;
  double alpha = 0.0;
  double q = 0.0;     // ExpStretched only
  double beta = 0.0;  // 1 + 1/q, ExpStretched only
  double residual = 0.0;
  int points = 0;
  double r_min = 0.0;
  double r_max = 0.0;
  bool accepted = false;
};

std::string to_string(BlowupFit::Model model);

/// log v ~ c + alpha * (-log(1 - r)).
BlowupFit fit_power_blowup(const NormProfile& profile, const BlowupConfig& cfg = {});

/// log v ~ c + alpha * (1 - r)^{-q}, q = 1/(beta - 1), alpha >= 0, best residual over beta.
BlowupFit fit_exp_blowup(const NormProfile& profile, const BlowupConfig& cfg = {});

struct ResolvedProfile {
  NormProfile profile;  // radii where the K and K/2 truncations agree
  int dropped = 0;      // radii of the requested grid that were cut off
  int n_theta = 0;
};

/// Sup-abs profile restricted to the leading run of radii that the truncation
/// resolves: |v_K(r) - v_{K/2}(r)| <= resolve_tol * v_K(r).
ResolvedProfile resolved_sup_profile(const PolyharmonicRep& rep, const BlowupConfig& cfg = {});

}  // namespace polyh
