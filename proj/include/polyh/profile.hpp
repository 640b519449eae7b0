#pragma once

#include <string>
#include <vector>

namespace polyh {

enum class NormKind { L2, SupAbs };

std::string to_string(NormKind kind);

/// r -> norm of u(r, .) on a radial grid.
struct NormProfile {
  std::vector<double> radii;   // increasing, in [0, 1)
  std::vector<double> values;  // finite, nonnegative
  NormKind kind = NormKind::L2;

  void validate() const;

  friend bool operator==(const NormProfile&, const NormProfile&) = default;
};

/// r_p = 1 - 2^{-p} for p = p_min .. p_max.
std::vector<double> dyadic_grid(int p_min, int p_max);

}  // namespace polyh
