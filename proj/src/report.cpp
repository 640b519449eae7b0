#include "polyh/report.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "polyh/errors.hpp"

namespace polyh {

void BoundaryConfig::validate() const {
  fit.validate();
  blowup.validate();
  if (!(beta_match_tol > 0.0)) throw DomainError("beta_match_tol must be > 0");
  if (l2_p_min < 0 || l2_p_max < l2_p_min || l2_p_max > 50)
    throw DomainError("need 0 <= l2_p_min <= l2_p_max <= 50");
}

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(4);
  os << v;
  return os.str();
}

}  // namespace

RegularityReport classify_boundary(const PolyharmonicRep& rep, const BoundaryConfig& cfg) {
  cfg.validate();
  RegularityReport out;
  out.m = rep.order();
  out.K = rep.K();

  // Coefficient route.
  std::optional<double> coef_beta;
  for (int j = 1; j <= out.m; ++j) {
    out.per_F.push_back(classify(rep.F(j), cfg.fit));
    const auto& cls = out.per_F.back().cls;
    if (cls.strength_rank() > out.weakest.strength_rank()) out.weakest = cls;
    if (cls.kind() == RegularityClass::Kind::GevreyDual)
      coef_beta = coef_beta ? std::min(*coef_beta, cls.parameter()) : cls.parameter();
  }
  const int weakest_rank = out.weakest.strength_rank();
  const bool coef_dprime = weakest_rank <= RegularityClass::distribution(0.0).strength_rank();
  const bool coef_gevrey = weakest_rank == RegularityClass::gevrey_dual(2.0).strength_rank();

  // L2 route.
  const auto l2_grid = dyadic_grid(cfg.l2_p_min, cfg.l2_p_max);
  out.l2_profile = l2_profile(rep, l2_grid);
  out.l2_check = l2_boundary_check(rep, l2_grid, cfg.fit.stability_tol);
  out.l2_boundary = out.l2_check.profile_bounded;
  if (!out.l2_check.consistent) {
    out.consistent = false;
    for (const auto& n : out.l2_check.notes) out.notes.push_back("L2 check: " + n);
  }

  // Blow-up route.
  const auto resolved = resolved_sup_profile(rep, cfg.blowup);
  out.sup_profile = resolved.profile;
  out.sup_dropped = resolved.dropped;
  if (resolved.dropped > 0)
    out.notes.push_back(std::to_string(resolved.dropped) +
                        " profile radii dropped: sup differs between K and K/2 truncations");

  bool blow_dprime = false;
  std::optional<double> blow_beta;
  if (static_cast<int>(out.sup_profile.radii.size()) < cfg.blowup.min_points) {
    out.growth_model = "UNRESOLVED";
    out.notes.push_back("too few resolved radii for a blow-up fit; verdict from coefficients only");
  } else {
    out.power_fit = fit_power_blowup(out.sup_profile, cfg.blowup);
    if (out.power_fit->model == BlowupFit::Model::Bounded) {
      out.growth_model = "Bounded";
      blow_dprime = true;
    } else {
      out.exp_fit = fit_exp_blowup(out.sup_profile, cfg.blowup);
      const double rp = out.power_fit->residual;
      const double re = out.exp_fit->residual;
      if (rp <= cfg.blowup.model_ratio * re) {
        out.growth_model = "PowerLaw";
        blow_dprime = true;
      } else if (re <= cfg.blowup.model_ratio * rp) {
        out.growth_model = "ExpStretched";
        blow_beta = out.exp_fit->beta;
      } else {
        out.growth_model = "AMBIGUOUS";
        out.consistent = false;
        out.notes.push_back("power and stretched blow-up residuals too close to separate (" +
                            fmt(rp) + " vs " + fmt(re) + ")");
      }
    }
  }

  const bool blow_known = out.growth_model == "Bounded" || out.growth_model == "PowerLaw" ||
                          out.growth_model == "ExpStretched";
  if (blow_known) {
    out.dprime_boundary = blow_dprime;
    if (blow_dprime != coef_dprime) {
      out.consistent = false;
      out.notes.push_back(std::string("coefficient class ") + out.weakest.name() +
                          (coef_dprime ? " is" : " is not") + " of finite order but the blow-up is " +
                          out.growth_model);
    }
    if (blow_beta) {
      out.gevrey_beta = blow_beta;
      if (!coef_beta) {
        out.consistent = false;
        out.notes.push_back("stretched blow-up without a GevreyDual coefficient class");
      } else if (std::abs(*blow_beta - *coef_beta) > cfg.beta_match_tol * *coef_beta) {
        out.consistent = false;
        out.notes.push_back("blow-up beta " + fmt(*blow_beta) + " does not match coefficient beta " +
                            fmt(*coef_beta));
      }
    }
  } else {
    out.dprime_boundary = coef_dprime;
    if (coef_gevrey) out.gevrey_beta = coef_beta;
  }
  out.gevrey_boundary = out.dprime_boundary || out.gevrey_beta.has_value();
  if (out.gevrey_beta)
    out.notes.push_back("beta is the fitted growth scale; membership is certain for every beta' < beta");

  if (!out.dprime_boundary && !out.gevrey_boundary)
    out.notes.push_back("boundary value exists only as a hyperfunction");
  for (std::size_t j = 0; j < out.per_F.size(); ++j)
    for (const auto& n : out.per_F[j].notes) out.notes.push_back("F_" + std::to_string(j + 1) + ": " + n);
  return out;
}

}  // namespace polyh
