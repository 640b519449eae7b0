#include "polyh/polyrep.hpp"

#include <cmath>
#include <numbers>

#include "polyh/detail/laplacian_kernels.hpp"
#include "polyh/errors.hpp"
#include "polyh/parallel.hpp"

namespace polyh {

PolyharmonicRep::PolyharmonicRep(int K, std::vector<CoeffSeq> F) : K_(K), F_(std::move(F)) {
  if (K < 0) throw DomainError("truncation order K must be nonnegative");
  for (std::size_t j = 0; j < F_.size(); ++j)
    if (F_[j].K() != K)
      throw DomainError("F_" + std::to_string(j + 1) + " has K = " + std::to_string(F_[j].K()) +
                        ", expected " + std::to_string(K));
}

PolyharmonicRep PolyharmonicRep::zero(int m, int K) {
  if (m < 0) throw DomainError("order must be nonnegative");
  return PolyharmonicRep(K, std::vector<CoeffSeq>(static_cast<std::size_t>(m), CoeffSeq(K)));
}

const CoeffSeq& PolyharmonicRep::F(int j) const {
  if (j < 1 || j > order())
    throw IndexError("F_" + std::to_string(j) + " requested from an order-" +
                     std::to_string(order()) + " representation");
  return F_[static_cast<std::size_t>(j - 1)];
}

PolyharmonicRep PolyharmonicRep::resized(int K_new) const {
  std::vector<CoeffSeq> out;
  out.reserve(F_.size());
  for (const auto& f : F_) out.push_back(f.resized(K_new));
  return PolyharmonicRep(K_new, std::move(out));
}

PolyharmonicRep PolyharmonicRep::with_order(int m) const {
  auto out = F_;
  while (static_cast<int>(out.size()) < m) out.emplace_back(K_);
  return PolyharmonicRep(K_, std::move(out));
}

CoeffSeq PolyharmonicRep::trace_coefficients(double r) const {
  if (!(r >= 0.0 && r <= 1.0)) throw DomainError("trace radius must lie in [0, 1]");
  const double x = r * r - 1.0;
  CoeffSeq out(K_);
  for (int k = -K_; k <= K_; ++k) {
    cplx acc{};
    for (int j = order(); j >= 1; --j) acc = acc * x + F_[static_cast<std::size_t>(j - 1)][k];
    out.set(k, std::pow(r, std::abs(k)) * acc);
  }
  return out;
}

PolyharmonicRep& PolyharmonicRep::operator+=(const PolyharmonicRep& other) {
  *this = *this + other;
  return *this;
}

PolyharmonicRep& PolyharmonicRep::operator*=(cplx s) {
  for (auto& f : F_) f *= s;
  return *this;
}

PolyharmonicRep operator+(const PolyharmonicRep& a, const PolyharmonicRep& b) {
  const int K = std::max(a.K(), b.K());
  const int m = std::max(a.order(), b.order());
  const auto pa = a.resized(K).with_order(m);
  const auto pb = b.resized(K).with_order(m);
  std::vector<CoeffSeq> out;
  for (int j = 1; j <= m; ++j) out.push_back(pa.F(j) + pb.F(j));
  return PolyharmonicRep(K, std::move(out));
}

PolyharmonicRep operator*(cplx s, PolyharmonicRep a) { return a *= s; }

namespace {

void check_radius(double r) {
  if (!(r >= 0.0 && r < 1.0))
    throw DomainError("interior evaluation needs 0 <= r < 1, got r = " + std::to_string(r));
}

// Horner in r over n = K..0 of b_n = a_n e^{int} + a_{-n} e^{-int}, where
// a_k = sum_j x^{j-1} c_k(F_j) is itself Horner in x = r^2 - 1.
cplx evaluate_unchecked(const PolyharmonicRep& rep, double r, double t) {
  const int K = rep.K();
  const int m = rep.order();
  if (m == 0) return {};
  const double x = r * r - 1.0;
  auto combined = [&](int k) {
    cplx acc{};
    for (int j = m; j >= 1; --j) acc = acc * x + rep.F(j)[k];
    return acc;
  };
  cplx sum{};
  for (int n = K; n >= 1; --n) {
    const cplx phase = std::polar(1.0, static_cast<double>(n) * t);
    const cplx b = combined(n) * phase + combined(-n) * std::conj(phase);
    sum = sum * r + b;
  }
  return sum * r + combined(0);
}

}  // namespace

cplx evaluate(const PolyharmonicRep& rep, double r, double t) {
  check_radius(r);
  if (!std::isfinite(t)) throw DomainError("angle must be finite");
  return evaluate_unchecked(rep, r, t);
}

CircleSamples evaluate_circles(const PolyharmonicRep& rep, const std::vector<double>& radii,
                               int n_theta, std::vector<std::string>* warnings) {
  if (n_theta < 1) throw DomainError("n_theta must be positive");
  for (double r : radii) check_radius(r);
  CircleSamples out;
  out.radii = radii;
  out.n_theta = n_theta;
  out.values.assign(radii.size(), std::vector<cplx>(static_cast<std::size_t>(n_theta)));
  if (n_theta < 2 * rep.K() + 1 && warnings)
    warnings->push_back("AliasWarning: n_theta = " + std::to_string(n_theta) + " < 2K+1 = " +
                        std::to_string(2 * rep.K() + 1));
  const std::size_t total = radii.size() * static_cast<std::size_t>(n_theta);
  parallel_for(total, [&](std::size_t idx) {
    const std::size_t i = idx / static_cast<std::size_t>(n_theta);
    const int j = static_cast<int>(idx % static_cast<std::size_t>(n_theta));
    out.values[i][static_cast<std::size_t>(j)] = evaluate_unchecked(rep, radii[i], out.angle(j));
  });
  out.validate();
  return out;
}

namespace {

detail::Table<cplx> to_table(const PolyharmonicRep& rep) {
  detail::Table<cplx> t;
  for (const auto& f : rep.terms()) t.emplace_back(f.values().begin(), f.values().end());
  return t;
}

PolyharmonicRep from_table(detail::Table<cplx> table, int K) {
  std::vector<CoeffSeq> F;
  F.reserve(table.size());
  for (auto& row : table) F.emplace_back(K, std::move(row));
  return PolyharmonicRep(K, std::move(F));
}

}  // namespace

PolyharmonicRep laplacian(const PolyharmonicRep& rep) {
  return from_table(detail::laplacian_table(to_table(rep), rep.K()), rep.K());
}

PolyharmonicRep anti_laplacian(const IntermediateRep& e) {
  return from_table(detail::anti_laplacian_table(to_table(e.terms()), e.K()), e.K());
}

std::vector<AlmansiTerm> almansi_terms(const PolyharmonicRep& rep) {
  std::vector<AlmansiTerm> out;
  for (int j = 1; j <= rep.order(); ++j) out.push_back({j - 1, rep.F(j)});
  return out;
}

cplx evaluate_term(const AlmansiTerm& term, double r, double t) {
  check_radius(r);
  const PolyharmonicRep harmonic(term.harmonic.K(), {term.harmonic});
  return std::pow(r * r - 1.0, term.power) * evaluate_unchecked(harmonic, r, t);
}

}  // namespace polyh
