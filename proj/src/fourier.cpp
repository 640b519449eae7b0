#include "polyh/fourier.hpp"

#include <fftw3.h>

#include <mutex>

#include "polyh/errors.hpp"

namespace polyh {

namespace {

// FFTW planning is not thread-safe; execution on a private plan is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

void transform(std::vector<cplx>& data, int sign) {
  const int n = static_cast<int>(data.size());
  auto* buf = reinterpret_cast<fftw_complex*>(data.data());
  fftw_plan plan;
  {
    std::lock_guard lock(planner_mutex());
    plan = fftw_plan_dft_1d(n, buf, buf, sign, FFTW_ESTIMATE);
  }
  if (plan == nullptr) throw Error("FFTW could not create a plan for n = " + std::to_string(n));
  fftw_execute(plan);
  std::lock_guard lock(planner_mutex());
  fftw_destroy_plan(plan);
}

}  // namespace

std::vector<cplx> synthesize_uniform(const CoeffSeq& b, int n) {
  if (n < 1) throw DomainError("synthesis needs n >= 1");
  const int K = b.K();
  std::vector<cplx> data(static_cast<std::size_t>(n));
  for (int k = -K; k <= K; ++k) data[static_cast<std::size_t>(((k % n) + n) % n)] += b[k];
  transform(data, FFTW_BACKWARD);
  return data;
}

CoeffSeq analyze_uniform(const std::vector<cplx>& values, int K) {
  const int n = static_cast<int>(values.size());
  if (K < 0) throw DomainError("K must be nonnegative");
  if (n < 2 * K + 1)
    throw AliasError("n_theta = " + std::to_string(n) + " cannot resolve K = " + std::to_string(K) +
                     " (needs n_theta >= 2K+1)");
  std::vector<cplx> data = values;
  transform(data, FFTW_FORWARD);
  CoeffSeq out(K);
  for (int k = -K; k <= K; ++k)
    out.set(k, data[static_cast<std::size_t>(((k % n) + n) % n)] / static_cast<double>(n));
  return out;
}

}  // namespace polyh
