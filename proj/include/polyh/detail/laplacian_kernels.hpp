#pragma once

// Coefficient-level Laplacian and anti-Laplacian on the representation
// u = sum_{j=1}^{m} (r^2-1)^{j-1} sum_k c_k(F_j) r^{|k|} e^{ikt}.
//
// Templated on the scalar so the same recurrences run in double complex
// arithmetic and in exact rationals. F[j][k + K] holds c_k(F_{j+1}).

#include <cstdlib>
#include <vector>

namespace polyh::detail {

template <class T>
using Table = std::vector<std::vector<T>>;

// Delta((r^2-1)^p H) = 4p(|k|+p)(r^2-1)^{p-1} H + 4p(p-1)(r^2-1)^{p-2} H
// collected by powers q of (r^2-1):
//   c_k(E_{q+1}) = 4(q+1)(|k|+q+1) c_k(F_{q+2}) + 4(q+2)(q+1) c_k(F_{q+3})
template <class T>
Table<T> laplacian_table(const Table<T>& F, int K) {
  const int m = static_cast<int>(F.size());
  if (m <= 1) return {};
  const std::size_t width = static_cast<std::size_t>(2 * K + 1);
  Table<T> E(static_cast<std::size_t>(m - 1), std::vector<T>(width));
  for (int q = 0; q + 1 < m; ++q) {
    const auto& next = F[static_cast<std::size_t>(q + 1)];
    for (int k = -K; k <= K; ++k) {
      const auto i = static_cast<std::size_t>(k + K);
      const long long a = std::abs(k);
      T value = T(4LL * (q + 1) * (a + q + 1)) * next[i];
      if (q + 2 < m) value += T(4LL * (q + 2) * (q + 1)) * F[static_cast<std::size_t>(q + 2)][i];
      E[static_cast<std::size_t>(q)][i] = value;
    }
  }
  return E;
}

// Particular solution with F_1 = 0, descending s = n-1 .. 0 where n = |E|:
//   c_k(F_{s+2}) = c_k(E_{s+1}) / (4(s+1)(|k|+s+1))
//   c_k(E_s)    -= s c_k(E_{s+1}) / (|k|+s+1)
template <class T>
Table<T> anti_laplacian_table(const Table<T>& E, int K) {
  const int n = static_cast<int>(E.size());
  const std::size_t width = static_cast<std::size_t>(2 * K + 1);
  Table<T> F(static_cast<std::size_t>(n + 1), std::vector<T>(width));
  Table<T> work = E;
  for (int s = n - 1; s >= 0; --s) {
    auto& top = work[static_cast<std::size_t>(s)];
    for (int k = -K; k <= K; ++k) {
      const auto i = static_cast<std::size_t>(k + K);
      const long long a = std::abs(k);
      F[static_cast<std::size_t>(s + 1)][i] = top[i] / T(4LL * (s + 1) * (a + s + 1));
      if (s >= 1) work[static_cast<std::size_t>(s - 1)][i] -= T(static_cast<long long>(s)) * top[i] / T(a + s + 1);
    }
  }
  return F;
}

}  // namespace polyh::detail
