#include "polyh/classify.hpp"

#include <cmath>
#include <limits>

#include "polyh/errors.hpp"

namespace polyh {

RegularityClass RegularityClass::analytic(double rate) {
  if (!(rate > 0.0)) throw DomainError("Analytic rate must be positive");
  return RegularityClass(Kind::Analytic, rate);
}

RegularityClass RegularityClass::sobolev(double order) {
  if (!std::isfinite(order)) throw DomainError("Sobolev order must be finite");
  return RegularityClass(Kind::SobolevL2, order);
}

RegularityClass RegularityClass::distribution(double order) {
  if (!(order >= 0.0) || !std::isfinite(order))
    throw DomainError("distribution order must be finite and nonnegative");
  return RegularityClass(Kind::DistributionD, order);
}

RegularityClass RegularityClass::gevrey_dual(double beta) {
  if (!(beta > 1.0) || !std::isfinite(beta)) throw DomainError("Gevrey beta must exceed 1");
  return RegularityClass(Kind::GevreyDual, beta);
}

bool RegularityClass::has_parameter() const noexcept {
  switch (kind_) {
    case Kind::Analytic:
    case Kind::SobolevL2:
    case Kind::DistributionD:
    case Kind::GevreyDual:
      return true;
    default:
      return false;
  }
}

std::string RegularityClass::name() const {
  switch (kind_) {
    case Kind::Analytic: return "Analytic";
    case Kind::Smooth: return "Smooth";
    case Kind::SobolevL2: return "SobolevL2";
    case Kind::L2: return "L2";
    case Kind::DistributionD: return "DistributionD";
    case Kind::GevreyDual: return "GevreyDual";
    case Kind::HyperfunctionOnly: return "HyperfunctionOnly";
    case Kind::Indeterminate: return "Indeterminate";
  }
  return "Indeterminate";
}

RegularityClass::Kind RegularityClass::kind_from_name(const std::string& name) {
  for (int i = 0; i <= static_cast<int>(Kind::Indeterminate); ++i) {
    const RegularityClass c(static_cast<Kind>(i));
    if (c.name() == name) return c.kind();
  }
  throw DomainError("unknown regularity class '" + name + "'");
}

double l2_halving_change(const CoeffSeq& seq) {
  const double full = l2_norm(seq);
  if (full == 0.0) return 0.0;
  const double half = l2_norm(seq.resized(seq.K() / 2));
  return std::abs(full - half) / full;
}

namespace {

template <class F>
std::optional<RateFit> try_fit(F&& f) {
  try {
    return f();
  } catch (const InsufficientData&) {
    return std::nullopt;
  }
}

// Local log-log slope steepens across the tail: evidence of faster-than-power decay.
bool steepening(const CoeffSeq& seq, const FitConfig& cfg) {
  const int K = seq.K();
  const int lo = std::max(1, tail_start(K, cfg.tail_fraction));
  const int mid = (lo + K) / 2;
  auto slope_over = [&](int a, int b) -> std::optional<double> {
    std::vector<double> xs, ys;
    for (int k = a; k <= b; ++k) {
      for (int s : {-1, 1}) {
        const double mag = std::abs(seq[s * k]);
        if (mag > cfg.zero_floor) {
          xs.push_back(std::log(static_cast<double>(k)));
          ys.push_back(std::log(mag));
        }
      }
    }
    try {
      return linear_fit(xs, ys, 4).slope;
    } catch (const InsufficientData&) {
      return std::nullopt;
    }
  };
  const auto lower = slope_over(lo, mid);
  const auto upper = slope_over(mid, K);
  if (!lower || !upper) return false;
  return *upper < *lower - 0.05 * std::abs(*lower);
}

}  // namespace

CoefficientReport classify(const CoeffSeq& seq, const FitConfig& cfg) {
  cfg.validate();
  CoefficientReport rep;
  const int K = seq.K();
  const int lo = tail_start(K, cfg.tail_fraction);

  bool tail_zero = true;
  for (int k = -K; k <= K && tail_zero; ++k)
    if (std::abs(k) >= lo && std::abs(seq[k]) > cfg.zero_floor) tail_zero = false;
  if (tail_zero) {
    rep.cls = RegularityClass::analytic(std::numeric_limits<double>::infinity());
    rep.rate = std::numeric_limits<double>::infinity();
    rep.zero_tail = true;
    rep.notes.push_back("tail coefficients vanish below zero_floor; exact truncated trigonometric polynomial");
    return rep;
  }

  rep.exponential = try_fit([&] { return fit_exponential_rate(seq, cfg); });
  rep.polynomial = try_fit([&] { return fit_polynomial_order(seq, cfg); });
  for (double beta : cfg.beta_grid) {
    const auto f = try_fit([&] { return fit_stretched_exponential(seq, beta, cfg); });
    if (f && (!rep.stretched || f->residual < rep.stretched->fit.residual))
      rep.stretched = StretchedFit{beta, *f};
  }
  if (K >= 2) rep.l2_relative_change = l2_halving_change(seq);

  if (!rep.exponential && !rep.polynomial && !rep.stretched) {
    rep.notes.push_back("fewer than min_modes usable tail coefficients");
    return rep;
  }

  double best = std::numeric_limits<double>::infinity();
  if (rep.exponential) best = std::min(best, rep.exponential->residual);
  if (rep.polynomial) best = std::min(best, rep.polynomial->residual);
  if (rep.stretched) best = std::min(best, rep.stretched->fit.residual);

  auto eligible = [&](const std::optional<RateFit>& f) {
    return f && f->residual <= cfg.residual_threshold &&
           f->residual <= cfg.tie_ratio * best + cfg.tie_abs;
  };
  const std::optional<RateFit> stretched_fit =
      rep.stretched ? std::optional<RateFit>(rep.stretched->fit) : std::nullopt;
  const bool l2_stable = rep.l2_relative_change && *rep.l2_relative_change < cfg.stability_tol;

  auto decide = [&](RegularityClass c, const RateFit& f, double rate) {
    rep.cls = c;
    rep.rate = rate;
    rep.residual = f.residual;
  };

  if (eligible(rep.exponential) && rep.exponential->rate > cfg.rate_epsilon) {
    decide(RegularityClass::analytic(rep.exponential->rate), *rep.exponential,
           rep.exponential->rate);
    return rep;
  }
  if (eligible(stretched_fit) && stretched_fit->rate > cfg.rate_epsilon) {
    rep.notes.push_back("stretched-exponential decay (Gevrey class) implies smoothness");
    decide(RegularityClass::smooth(), *stretched_fit, stretched_fit->rate);
    return rep;
  }
  if (rep.polynomial && rep.polynomial->rate < -cfg.alpha_max && steepening(seq, cfg)) {
    rep.notes.push_back("log-log slope below -alpha_max and steepening across the tail");
    decide(RegularityClass::smooth(), *rep.polynomial, rep.polynomial->rate);
    return rep;
  }
  if (eligible(rep.polynomial) && rep.polynomial->rate < -0.5) {
    if (l2_stable) {
      decide(RegularityClass::sobolev(-rep.polynomial->rate - 0.5), *rep.polynomial,
             rep.polynomial->rate);
      return rep;
    }
    rep.notes.push_back("power-law decay but l2 partial sums not stable under K-halving");
  } else if (l2_stable && !eligible(rep.polynomial) && !eligible(stretched_fit)) {
    decide(RegularityClass::l2(), rep.polynomial ? *rep.polynomial : RateFit{}, 0.0);
    rep.notes.push_back("l2 partial sums stable; no power law isolated");
    return rep;
  }
  if (eligible(rep.polynomial)) {
    decide(RegularityClass::distribution(std::max(0.0, rep.polynomial->rate)), *rep.polynomial,
           rep.polynomial->rate);
    return rep;
  }
  if (eligible(stretched_fit) && stretched_fit->rate < -cfg.rate_epsilon) {
    rep.notes.push_back(
        "dual Gevrey class tested as the growth bound |c_k| <= c e^{a|k|^{1/beta}}");
    decide(RegularityClass::gevrey_dual(rep.stretched->beta), *stretched_fit,
           -stretched_fit->rate);
    return rep;
  }
  if (rep.exponential && -rep.exponential->rate <= cfg.hyperfunction_growth_tol) {
    rep.notes.push_back("exponential growth rate near zero; only the hyperfunction bound holds");
    decide(RegularityClass::hyperfunction(), *rep.exponential, -rep.exponential->rate);
    return rep;
  }
  rep.notes.push_back("no model fits within the residual threshold");
  return rep;
}

}  // namespace polyh
