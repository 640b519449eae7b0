#pragma once

#include <vector>

#include "polyh/coeff_seq.hpp"

namespace polyh {

/// Values of u on concentric circles at angles t_j = 2 pi j / n_theta.
struct CircleSamples {
  std::vector<double> radii;              // strictly increasing, in [0, 1)
  int n_theta = 0;
  std::vector<std::vector<cplx>> values;  // [circle][angle]

  /// Throws DomainError on shape, ordering or finiteness violations.
  void validate() const;

  double angle(int j) const;

  friend bool operator==(const CircleSamples&, const CircleSamples&) = default;
};

}  // namespace polyh
