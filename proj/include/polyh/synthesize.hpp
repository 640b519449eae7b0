#pragma once

#include <cstdint>
#include <string>

#include "polyh/coeff_seq.hpp"

namespace polyh {

/// Magnitude law for synthetic coefficient sequences.
///
///   exponential            |c_k| = e^{-alpha |k|}
///   polynomial             |c_k| = (1 + |k|)^alpha
///   stretched_exponential  |c_k| = e^{-alpha |k|^{1/beta}}   (alpha < 0 grows)
///   constant               |c_k| = 1
struct DecayLaw {
  enum class Kind { Exponential, Polynomial, StretchedExponential, Constant };

  Kind kind = Kind::Constant;
  double alpha = 0.0;
  double beta = 2.0;

  /// Throws UnknownProfile for names outside the menu above.
  static DecayLaw from_name(const std::string& name, double alpha = 0.0, double beta = 2.0);
  std::string name() const;

  double magnitude(int k) const;
};

/// Sequence with |c_k| following `law` and phases uniform on [0, 2 pi) drawn
/// from a mt19937_64 stream seeded with `seed` (zero phases when
/// `random_phase` is false). Deterministic across platforms.
CoeffSeq synthesize(const DecayLaw& law, int K, std::uint64_t seed, bool random_phase = true);

}  // namespace polyh
