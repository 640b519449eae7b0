#pragma once

#include <vector>

#include "polyh/coeff_seq.hpp"

namespace polyh {

/// Values sum_k b_k e^{i k t_j} at t_j = 2 pi j / n, j = 0..n-1.
std::vector<cplx> synthesize_uniform(const CoeffSeq& b, int n);

/// Coefficients (1/n) sum_j v_j e^{-i k t_j} for |k| <= K. Requires n >= 2K+1.
CoeffSeq analyze_uniform(const std::vector<cplx>& values, int K);

}  // namespace polyh
