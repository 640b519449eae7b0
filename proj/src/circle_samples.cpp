#include "polyh/circle_samples.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "polyh/errors.hpp"

namespace polyh {

void CircleSamples::validate() const {
  if (n_theta < 1) throw DomainError("n_theta must be positive");
  if (values.size() != radii.size())
    throw DomainError("values has " + std::to_string(values.size()) + " rows for " +
                      std::to_string(radii.size()) + " radii");
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (!(radii[i] >= 0.0 && radii[i] < 1.0))
      throw DomainError("radius " + std::to_string(i) + " outside [0, 1)");
    if (i > 0 && !(radii[i] > radii[i - 1]))
      throw DomainError("radii must be strictly increasing");
    if (values[i].size() != static_cast<std::size_t>(n_theta))
      throw DomainError("row " + std::to_string(i) + " has " + std::to_string(values[i].size()) +
                        " samples, expected n_theta = " + std::to_string(n_theta));
    for (const auto& v : values[i])
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
        throw DomainError("row " + std::to_string(i) + " holds a non-finite sample");
  }
}

double CircleSamples::angle(int j) const {
  return 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n_theta);
}

}  // namespace polyh
