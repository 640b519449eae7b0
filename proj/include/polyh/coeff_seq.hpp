#pragma once

#include <complex>
#include <span>
#include <vector>

namespace polyh {

using cplx = std::complex<double>;

/// Truncated two-sided Fourier coefficient sequence c_{-K}..c_K.
///
/// Storage index of mode k is k + K. Every entry is finite; the constructor
/// rejects NaN/inf and length mismatches with DomainError.
class CoeffSeq {
 public:
  CoeffSeq() = default;
  explicit CoeffSeq(int K);
  CoeffSeq(int K, std::vector<cplx> values);

  static CoeffSeq zeros(int K) { return CoeffSeq(K); }

  int K() const noexcept { return K_; }
  std::size_t size() const noexcept { return values_.size(); }

  const cplx& at(int k) const;
  void set(int k, cplx v);
  cplx operator[](int k) const { return values_[static_cast<std::size_t>(k + K_)]; }

  std::span<const cplx> values() const noexcept { return values_; }

  /// Zero-padded (K' > K) or truncated (K' < K) copy.
  CoeffSeq resized(int K_new) const;

  bool all_zero() const noexcept;

  CoeffSeq& operator+=(const CoeffSeq& other);
  CoeffSeq& operator*=(cplx s);

  friend bool operator==(const CoeffSeq&, const CoeffSeq&) = default;

 private:
  int K_ = 0;
  std::vector<cplx> values_{cplx{}};
};

CoeffSeq operator+(CoeffSeq a, const CoeffSeq& b);
CoeffSeq operator*(cplx s, CoeffSeq a);

/// Plain l2 norm, summed in storage order.
double l2_norm(const CoeffSeq& seq);

/// (sum_k w_k |c_k|^2)^{1/2} with w_k = |k|^{2 alpha}, w_0 = 1.
double sobolev_norm(const CoeffSeq& seq, double alpha);

}  // namespace polyh
