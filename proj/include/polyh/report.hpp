#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polyh/blowup.hpp"
#include "polyh/boundary.hpp"
#include "polyh/classify.hpp"
#include "polyh/fit.hpp"
#include "polyh/polyrep.hpp"

namespace polyh {

struct BoundaryConfig {
  FitConfig fit;
  BlowupConfig blowup;
  double beta_match_tol = 0.15;  // relative agreement of coefficient and blow-up beta
  int l2_p_min = 1;              // l2 profile radii 1 - 2^{-p}
  int l2_p_max = 20;

  void validate() const;
};

/// Combined boundary-value verdict for a polyharmonic function.
struct RegularityReport {
  int m = 0;
  int K = 0;
  std::vector<CoefficientReport> per_F;  // F_1 .. F_m
  RegularityClass weakest = RegularityClass::analytic(std::numeric_limits<double>::infinity());

  NormProfile l2_profile;
  NormProfile sup_profile;  // resolved radii only
  int sup_dropped = 0;
  std::optional<BlowupFit> power_fit;
  std::optional<BlowupFit> exp_fit;
  std::string growth_model;  // Bounded | PowerLaw | ExpStretched | AMBIGUOUS | UNRESOLVED

  L2BoundaryReport l2_check;

  bool l2_boundary = false;
  bool dprime_boundary = false;
  bool gevrey_boundary = false;
  std::optional<double> gevrey_beta;  // empty when every beta applies or none does
  bool hyperfunction_boundary = true;
  bool consistent = true;
  std::vector<std::string> notes;
};

RegularityReport classify_boundary(const PolyharmonicRep& rep, const BoundaryConfig& cfg = {});

}  // namespace polyh
