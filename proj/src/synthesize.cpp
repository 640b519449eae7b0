#include "polyh/synthesize.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "polyh/errors.hpp"

namespace polyh {

DecayLaw DecayLaw::from_name(const std::string& name, double alpha, double beta) {
  DecayLaw law;
  law.alpha = alpha;
  law.beta = beta;
  if (name == "exponential") {
    law.kind = Kind::Exponential;
  } else if (name == "polynomial") {
    law.kind = Kind::Polynomial;
  } else if (name == "stretched_exponential") {
    law.kind = Kind::StretchedExponential;
    if (!(beta > 1.0)) throw DomainError("stretched_exponential needs beta > 1");
  } else if (name == "constant") {
    law.kind = Kind::Constant;
  } else {
    throw UnknownProfile("unknown decay law '" + name +
                         "' (expected exponential, polynomial, stretched_exponential, constant)");
  }
  if (!std::isfinite(alpha)) throw DomainError("decay law alpha must be finite");
  return law;
}

std::string DecayLaw::name() const {
  switch (kind) {
    case Kind::Exponential: return "exponential";
    case Kind::Polynomial: return "polynomial";
    case Kind::StretchedExponential: return "stretched_exponential";
    case Kind::Constant: return "constant";
  }
  return "constant";
}

double DecayLaw::magnitude(int k) const {
  const double a = std::abs(static_cast<double>(k));
  switch (kind) {
    case Kind::Exponential: return std::exp(-alpha * a);
    case Kind::Polynomial: return std::pow(1.0 + a, alpha);
    case Kind::StretchedExponential: return std::exp(-alpha * std::pow(a, 1.0 / beta));
    case Kind::Constant: return 1.0;
  }
  return 1.0;
}

CoeffSeq synthesize(const DecayLaw& law, int K, std::uint64_t seed, bool random_phase) {
  if (K < 1) throw DomainError("synthesize needs K >= 1");
  std::mt19937_64 gen(seed);
  std::vector<cplx> values(static_cast<std::size_t>(2 * K + 1));
  for (int k = -K; k <= K; ++k) {
    const double mag = law.magnitude(k);
    if (!std::isfinite(mag))
      throw DomainError("decay law overflows at mode " + std::to_string(k));
    double phase = 0.0;
    if (random_phase) {
      // 53 high bits -> [0, 1)
      const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
      phase = 2.0 * std::numbers::pi * u;
    }
    values[static_cast<std::size_t>(k + K)] = random_phase ? std::polar(mag, phase) : cplx(mag, 0.0);
  }
  return CoeffSeq(K, std::move(values));
}

}  // namespace polyh
