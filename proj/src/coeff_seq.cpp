#include "polyh/coeff_seq.hpp"

#include <cmath>
#include <string>

#include "polyh/errors.hpp"

namespace polyh {

namespace {

void check_finite(const std::vector<cplx>& values) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i].real()) || !std::isfinite(values[i].imag()))
      throw DomainError("coefficient at storage index " + std::to_string(i) + " is not finite");
  }
}

}  // namespace

CoeffSeq::CoeffSeq(int K) : K_(K) {
  if (K < 0) throw DomainError("truncation order K must be nonnegative");
  values_.assign(static_cast<std::size_t>(2 * K + 1), cplx{});
}

CoeffSeq::CoeffSeq(int K, std::vector<cplx> values) : K_(K), values_(std::move(values)) {
  if (K < 0) throw DomainError("truncation order K must be nonnegative");
  if (values_.size() != static_cast<std::size_t>(2 * K + 1))
    throw DomainError("coefficient array must have 2K+1 = " + std::to_string(2 * K + 1) +
                      " entries, got " + std::to_string(values_.size()));
  check_finite(values_);
}

const cplx& CoeffSeq::at(int k) const {
  if (k < -K_ || k > K_) throw IndexError("mode " + std::to_string(k) + " outside [-K, K]");
  return values_[static_cast<std::size_t>(k + K_)];
}

void CoeffSeq::set(int k, cplx v) {
  if (k < -K_ || k > K_) throw IndexError("mode " + std::to_string(k) + " outside [-K, K]");
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
    throw DomainError("coefficient for mode " + std::to_string(k) + " is not finite");
  values_[static_cast<std::size_t>(k + K_)] = v;
}

CoeffSeq CoeffSeq::resized(int K_new) const {
  CoeffSeq out(K_new);
  const int lim = std::min(K_, K_new);
  for (int k = -lim; k <= lim; ++k) out.values_[static_cast<std::size_t>(k + K_new)] = (*this)[k];
  return out;
}

bool CoeffSeq::all_zero() const noexcept {
  for (const auto& v : values_)
    if (v != cplx{}) return false;
  return true;
}

CoeffSeq& CoeffSeq::operator+=(const CoeffSeq& other) {
  if (other.K_ != K_) throw DomainError("cannot add sequences with different K");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
  return *this;
}

CoeffSeq& CoeffSeq::operator*=(cplx s) {
  for (auto& v : values_) v *= s;
  return *this;
}

CoeffSeq operator+(CoeffSeq a, const CoeffSeq& b) { return a += b; }
CoeffSeq operator*(cplx s, CoeffSeq a) { return a *= s; }

double l2_norm(const CoeffSeq& seq) { return sobolev_norm(seq, 0.0); }

double sobolev_norm(const CoeffSeq& seq, double alpha) {
  double sum = 0.0;
  const int K = seq.K();
  for (int k = -K; k <= K; ++k) {
    const double mag2 = std::norm(seq[k]);
    if (k == 0 || alpha == 0.0) {
      sum += mag2;
    } else {
      sum += std::pow(static_cast<double>(std::abs(k)), 2.0 * alpha) * mag2;
    }
  }
  return std::sqrt(sum);
}

}  // namespace polyh
