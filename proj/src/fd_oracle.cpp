#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <vector>

#include "polyh/errors.hpp"
#include "polyh/polyrep.hpp"

namespace polyh {

namespace {

using Quad = boost::multiprecision::cpp_bin_float_quad;

struct QComplex {
  Quad re = 0;
  Quad im = 0;
};

QComplex operator+(const QComplex& a, const QComplex& b) { return {a.re + b.re, a.im + b.im}; }
QComplex operator-(const QComplex& a, const QComplex& b) { return {a.re - b.re, a.im - b.im}; }
QComplex operator*(const QComplex& a, const QComplex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
QComplex operator*(const Quad& s, const QComplex& a) { return {s * a.re, s * a.im}; }

// u(r, t) in quad precision; same summation structure as the double path.
QComplex evaluate_quad(const PolyharmonicRep& rep, const Quad& r, const Quad& t) {
  const int K = rep.K();
  const int m = rep.order();
  QComplex sum;
  if (m == 0) return sum;
  const Quad x = r * r - 1;
  auto combined = [&](int k) {
    QComplex acc;
    for (int j = m; j >= 1; --j) {
      const cplx c = rep.F(j)[k];
      acc = x * acc + QComplex{Quad(c.real()), Quad(c.imag())};
    }
    return acc;
  };
  // e^{int} by recurrence; error grows like n * 1e-34.
  std::vector<QComplex> phase(static_cast<std::size_t>(K + 1));
  phase[0] = {1, 0};
  if (K >= 1) phase[1] = {cos(t), sin(t)};
  for (int n = 2; n <= K; ++n)
    phase[static_cast<std::size_t>(n)] = phase[static_cast<std::size_t>(n - 1)] * phase[1];
  for (int n = K; n >= 1; --n) {
    const QComplex& p = phase[static_cast<std::size_t>(n)];
    const QComplex pc{p.re, -p.im};
    sum = r * sum + (combined(n) * p + combined(-n) * pc);
  }
  return r * sum + combined(0);
}

// Applies the 5-point polar Laplacian `times` times. Grid node (a, b) sits
// at (r + a h, t + b h); level n is needed on the diamond |a| + |b| <= times - n.
QComplex repeated_laplacian(const PolyharmonicRep& rep, double r0, double t0, double h,
                            int times) {
  const int w = times;
  const int side = 2 * w + 1;
  auto idx = [&](int a, int b) { return static_cast<std::size_t>((a + w) * side + (b + w)); };
  const Quad r(r0), t(t0), step(h);
  std::vector<QComplex> cur(static_cast<std::size_t>(side * side));
  for (int a = -w; a <= w; ++a)
    for (int b = -w; b <= w; ++b)
      if (std::abs(a) + std::abs(b) <= w) cur[idx(a, b)] = evaluate_quad(rep, r + a * step, t + b * step);
  const Quad inv_h2 = 1 / (step * step);
  for (int level = 1; level <= times; ++level) {
    const int reach = w - level;
    std::vector<QComplex> next(cur.size());
    for (int a = -reach; a <= reach; ++a) {
      const Quad ra = r + a * step;
      for (int b = -reach; b <= reach; ++b) {
        if (std::abs(a) + std::abs(b) > reach) continue;
        const QComplex& c = cur[idx(a, b)];
        const QComplex& rp = cur[idx(a + 1, b)];
        const QComplex& rm = cur[idx(a - 1, b)];
        const QComplex& tp = cur[idx(a, b + 1)];
        const QComplex& tm = cur[idx(a, b - 1)];
        const QComplex two_c = Quad(2) * c;
        const QComplex d_rr = inv_h2 * (rp - two_c + rm);
        const QComplex d_r = (1 / (2 * step * ra)) * (rp - rm);
        const QComplex d_tt = (inv_h2 / (ra * ra)) * (tp - two_c + tm);
        next[idx(a, b)] = d_rr + d_r + d_tt;
      }
    }
    cur = std::move(next);
  }
  return cur[idx(0, 0)];
}

void check_probe(double r, double t, double h, int times) {
  if (!(h > 0.0)) throw DomainError("finite-difference step must be positive");
  if (!std::isfinite(t)) throw DomainError("probe angle must be finite");
  const int reach = std::max(times, 1);
  if (!(r - reach * h > 0.0 && r + reach * h < 1.0))
    throw DomainError("probe r = " + std::to_string(r) + " needs " + std::to_string(reach) +
                      "h < r < 1 - " + std::to_string(reach) + "h for the stencil");
}

cplx to_cplx(const QComplex& z) {
  return {static_cast<double>(z.re), static_cast<double>(z.im)};
}

}  // namespace

cplx fd_polar_laplacian(const PolyharmonicRep& rep, double r, double t, double h, int times) {
  if (times < 0) throw DomainError("times must be nonnegative");
  check_probe(r, t, h, times);
  return to_cplx(repeated_laplacian(rep, r, t, h, times));
}

PolyharmonicResidual verify_polyharmonic(const PolyharmonicRep& rep,
                                         const std::vector<ProbePoint>& probes, double h) {
  const int m = rep.order();
  for (const auto& p : probes) check_probe(p.r, p.t, h, m);
  PolyharmonicResidual out;
  out.order = m;
  out.h = h;
  out.probes.resize(probes.size());
  bool first = true;
  for (std::size_t i = 0; i < probes.size(); ++i) {
    const auto& p = probes[i];
    ProbeResidual pr{p, std::abs(to_cplx(repeated_laplacian(rep, p.r, p.t, h, m))), 0.0};
    pr.below = m >= 1 ? std::abs(to_cplx(repeated_laplacian(rep, p.r, p.t, h, m - 1))) : 0.0;
    out.max_top = std::max(out.max_top, pr.top);
    out.max_below = std::max(out.max_below, pr.below);
    out.min_below = first ? pr.below : std::min(out.min_below, pr.below);
    first = false;
    out.probes[i] = pr;
  }
  return out;
}

}  // namespace polyh
