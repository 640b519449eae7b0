#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "polyh/circle_samples.hpp"
#include "polyh/coeff_seq.hpp"

namespace polyh {

/// An m-harmonic function on the unit disk stored by its boundary data:
///
///   u(r, t) = sum_{j=1}^{m} (r^2 - 1)^{j-1} sum_{|k|<=K} c_k(F_j) r^{|k|} e^{ikt}.
///
/// Order 0 is the empty representation of the zero function (what the
/// Laplacian of a harmonic representation returns).
class PolyharmonicRep {
 public:
  PolyharmonicRep() = default;
  /// All sequences must share `K`.
  PolyharmonicRep(int K, std::vector<CoeffSeq> F);

  static PolyharmonicRep zero(int m, int K);

  int order() const noexcept { return static_cast<int>(F_.size()); }
  int K() const noexcept { return K_; }

  /// F_j, 1-based.
  const CoeffSeq& F(int j) const;
  std::span<const CoeffSeq> terms() const noexcept { return F_; }

  PolyharmonicRep resized(int K_new) const;
  /// Pads with zero sequences up to order `m` (never shrinks).
  PolyharmonicRep with_order(int m) const;

  /// Trace coefficients c_k(u)(r) = r^{|k|} sum_j (r^2-1)^{j-1} c_k(F_j).
  CoeffSeq trace_coefficients(double r) const;

  PolyharmonicRep& operator+=(const PolyharmonicRep& other);
  PolyharmonicRep& operator*=(cplx s);

  friend bool operator==(const PolyharmonicRep&, const PolyharmonicRep&) = default;

 private:
  int K_ = 0;
  std::vector<CoeffSeq> F_;
};

/// Sum of two representations; orders and K are padded to the larger.
PolyharmonicRep operator+(const PolyharmonicRep& a, const PolyharmonicRep& b);
PolyharmonicRep operator*(cplx s, PolyharmonicRep a);

/// Right-hand side E_1..E_{m-1} of Delta u = sum (r^2-1)^{j-1} E_j-series.
class IntermediateRep {
 public:
  IntermediateRep() = default;
  explicit IntermediateRep(PolyharmonicRep terms) : terms_(std::move(terms)) {}
  const PolyharmonicRep& terms() const noexcept { return terms_; }
  int order() const noexcept { return terms_.order(); }
  int K() const noexcept { return terms_.K(); }

 private:
  PolyharmonicRep terms_;
};

/// Truncated double sum, k summed from +-K inward with Horner in r.
/// Throws DomainError unless 0 <= r < 1.
cplx evaluate(const PolyharmonicRep& rep, double r, double t);

/// values[i][j] = evaluate(rep, radii[i], 2 pi j / n_theta). A warning is
/// appended to `warnings` when n_theta < 2K + 1.
CircleSamples evaluate_circles(const PolyharmonicRep& rep, const std::vector<double>& radii,
                               int n_theta, std::vector<std::string>* warnings = nullptr);

/// Exact coefficient-space Laplacian; order drops by one.
PolyharmonicRep laplacian(const PolyharmonicRep& rep);

/// Particular solution of Delta u = e with F_1 = 0; order rises by one.
PolyharmonicRep anti_laplacian(const IntermediateRep& e);

struct AlmansiTerm {
  int power = 0;  // exponent of (r^2 - 1)
  CoeffSeq harmonic;
};

/// u = sum_j (r^2-1)^{j-1} u_j with u_j the harmonic extension of F_j.
std::vector<AlmansiTerm> almansi_terms(const PolyharmonicRep& rep);

/// (r^2-1)^{power} u_j(r, t).
cplx evaluate_term(const AlmansiTerm& term, double r, double t);

struct ProbePoint {
  double r = 0.0;
  double t = 0.0;
};

struct ProbeResidual {
  ProbePoint probe;
  double top = 0.0;    // |Lap_h^m u|
  double below = 0.0;  // |Lap_h^{m-1} u|
};

struct PolyharmonicResidual {
  int order = 0;
  double h = 0.0;
  double max_top = 0.0;
  double max_below = 0.0;
  double min_below = 0.0;
  std::vector<ProbeResidual> probes;
};

/// Second-order central-difference polar Laplacian
///   u_rr + u_r / r + u_tt / r^2   (step h in r and t)
/// applied `times` times at (r, t). Stencil values are computed in 113-bit
/// floating point so that roundoff stays far below the O(h^2) truncation
/// error even for repeated application. Requires times*h < r < 1 - times*h.
cplx fd_polar_laplacian(const PolyharmonicRep& rep, double r, double t, double h, int times = 1);

/// max over probes of |Lap_h^m u| and |Lap_h^{m-1} u|.
PolyharmonicResidual verify_polyharmonic(const PolyharmonicRep& rep,
                                         const std::vector<ProbePoint>& probes, double h);

}  // namespace polyh
