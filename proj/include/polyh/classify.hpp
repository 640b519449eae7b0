#pragma once

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "polyh/coeff_seq.hpp"
#include "polyh/fit.hpp"

namespace polyh {

/// Regularity class of a boundary datum read off its Fourier coefficients,
/// ordered from strongest to weakest.
///
///   Analytic(rate)          |c_k| <= c e^{-rate |k|}
///   Smooth                  faster than every power of |k|
///   SobolevL2(order)        sum |k|^{2 order} |c_k|^2 < inf
///   L2                      square summable, no clean power law
///   DistributionD(order)    |c_k| <= c |k|^{order}
///   GevreyDual(beta)        |c_k| <= c e^{a |k|^{1/beta}} for every a > 0
///   HyperfunctionOnly       sub-exponential growth, no weaker model fits
///   Indeterminate
class RegularityClass {
 public:
  enum class Kind {
    Analytic,
    Smooth,
    SobolevL2,
    L2,
    DistributionD,
    GevreyDual,
    HyperfunctionOnly,
    Indeterminate,
  };

  static RegularityClass analytic(double rate);  // rate may be +inf for an all-zero tail
  static RegularityClass smooth() { return RegularityClass(Kind::Smooth); }
  static RegularityClass sobolev(double order);
  static RegularityClass l2() { return RegularityClass(Kind::L2); }
  static RegularityClass distribution(double order);
  static RegularityClass gevrey_dual(double beta);
  static RegularityClass hyperfunction() { return RegularityClass(Kind::HyperfunctionOnly); }
  static RegularityClass indeterminate() { return RegularityClass(Kind::Indeterminate); }

  Kind kind() const noexcept { return kind_; }
  /// Rate, order or beta depending on the kind; NaN for parameterless kinds.
  double parameter() const noexcept { return parameter_; }
  bool has_parameter() const noexcept;

  /// 0 for Analytic ... 7 for Indeterminate.
  int strength_rank() const noexcept { return static_cast<int>(kind_); }

  std::string name() const;
  static Kind kind_from_name(const std::string& name);

  friend bool operator==(const RegularityClass&, const RegularityClass&) = default;

 private:
  explicit RegularityClass(Kind k, double p = std::numeric_limits<double>::quiet_NaN())
      : kind_(k), parameter_(p) {}
  Kind kind_;
  double parameter_;
};

struct StretchedFit {
  double beta = 0.0;
  RateFit fit;
};

/// One coefficient sequence's verdict together with the evidence behind it.
struct CoefficientReport {
  RegularityClass cls = RegularityClass::indeterminate();
  double rate = 0.0;      // fitted rate of the deciding model (growth rate for GevreyDual)
  double residual = 0.0;  // residual of the deciding model
  std::optional<RateFit> exponential;
  std::optional<RateFit> polynomial;
  std::optional<StretchedFit> stretched;  // best residual over cfg.beta_grid
  std::optional<double> l2_relative_change;  // |norm_K - norm_{K/2}| / norm_K
  bool zero_tail = false;
  std::vector<std::string> notes;
};

/// Decay/growth ladder from Analytic down to Indeterminate. Never throws on a
/// valid sequence; unusable data yields Indeterminate.
CoefficientReport classify(const CoeffSeq& seq, const FitConfig& cfg = {});

/// Relative change of the l2 norm when the sequence is truncated to K/2.
double l2_halving_change(const CoeffSeq& seq);

}  // namespace polyh
