// One line per acceptance criterion: PASS/FAIL, the measured quantity, the bound.

#include <boost/multiprecision/cpp_int.hpp>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

#include "oracles.hpp"
#include "polyh/blowup.hpp"
#include "polyh/boundary.hpp"
#include "polyh/classify.hpp"
#include "polyh/detail/laplacian_kernels.hpp"
#include "polyh/io.hpp"
#include "polyh/polyrep.hpp"
#include "polyh/recon.hpp"
#include "polyh/synthesize.hpp"

using namespace polyh;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void report(int id, const char* name, const std::function<Outcome()>& body) {
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  if (!out.pass) ++failures;
  std::printf("%s [%2d] %s: %s\n", out.pass ? "PASS" : "FAIL", id, name, out.detail.c_str());
  std::fflush(stdout);
}

CoeffSeq law_seq(const char* name, double alpha, int K, std::uint64_t seed, double beta = 2.0,
                 bool random_phase = true) {
  return synthesize(DecayLaw::from_name(name, alpha, beta), K, seed, random_phase);
}

PolyharmonicRep exp_rep(int m, int K, double alpha, std::uint64_t seed) {
  std::vector<CoeffSeq> F;
  for (int j = 0; j < m; ++j) F.push_back(law_seq("exponential", alpha, K, seed * 1000 + j));
  return PolyharmonicRep(K, std::move(F));
}

CoeffSeq from_magnitude(int K, const std::function<double(int)>& f) {
  CoeffSeq s(K);
  for (int k = -K; k <= K; ++k) s.set(k, f(std::abs(k)));
  return s;
}

PolyharmonicRep harmonic(CoeffSeq f) {
  const int K = f.K();
  return PolyharmonicRep(K, {std::move(f)});
}

// normwise relative error of F_j restricted to |k| <= kmax
double seq_error(const CoeffSeq& got, const CoeffSeq& want, int kmax) {
  double err = 0.0, scale = 0.0;
  for (int k = -kmax; k <= kmax; ++k) {
    err = std::max(err, std::abs(got[k] - want[k]));
    scale = std::max(scale, std::abs(want[k]));
  }
  return scale == 0.0 ? err : err / scale;
}

// Finite W_2^{-j} data for the embedding and weak-limit criteria.
CoeffSeq finite_sobolev_sequence(int j, std::uint64_t seed, int K) {
  switch (seed % 4) {
    case 0: return law_seq("polynomial", j - 0.6 - 0.05 * static_cast<double>(seed % 10), K, seed);
    case 1: return law_seq("exponential", 0.05 + 0.01 * static_cast<double>(seed % 50), K, seed);
    case 2: return law_seq("stretched_exponential", 0.5 + 0.05 * static_cast<double>(seed % 10), K, seed, 2.0);
    default: return law_seq("polynomial", -1.0 * static_cast<double>(seed % 3), K, seed);
  }
}

int run_cli(const std::string& args) {
  const int status = std::system((std::string(POLYH_CLI_PATH) + " " + args + " > /dev/null 2>&1").c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

int main() {
  report(1, "representation round trip", [] {
    const auto t0 = Clock::now();
    const int K = 64;
    double worst[4] = {0, 0, 0, 0};
    for (int i = 0; i < 50; ++i) {
      const int m = 1 + i % 3;
      const auto rep = exp_rep(m, K, 0.5, static_cast<std::uint64_t>(i));
      const auto samples = evaluate_circles(rep, {0.5, 0.7, 0.9}, 256);
      const auto back = decompose(samples, m, K).rep;
      for (int j = 1; j <= m; ++j) worst[m] = std::max(worst[m], seq_error(back.F(j), rep.F(j), 32));
    }
    const double secs = seconds_since(t0);
    const double w = std::max({worst[1], worst[2], worst[3]});
    return Outcome{w <= 1e-8 && secs <= 5.0,
                   fmt("max normwise rel err over |k|<=32: m=1 %.2e, m=2 %.2e, m=3 %.2e (bound 1e-8); %.2f s (bound 5 s)",
                       worst[1], worst[2], worst[3], secs)};
  });

  report(2, "Laplacian calculus", [] {
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
      const int order = 1 + i % 4;
      const auto e = exp_rep(order, 64, 0.1, static_cast<std::uint64_t>(100 + i));
      const auto back = laplacian(anti_laplacian(IntermediateRep(e)));
      if (back.order() != order) return Outcome{false, "order changed"};
      for (int j = 1; j <= order; ++j)
        for (int k = -64; k <= 64; ++k) worst = std::max(worst, oracle::rel_err(back.F(j)[k], e.F(j)[k]));
    }
    using boost::multiprecision::cpp_rational;
    std::mt19937 gen(17);
    std::uniform_int_distribution<int> num(-99, 99), den(1, 97);
    bool exact = true;
    for (int trial = 0; trial < 20; ++trial) {
      detail::Table<cpp_rational> E(2, std::vector<cpp_rational>(9));
      for (auto& row : E)
        for (auto& v : row) v = cpp_rational(num(gen), den(gen));
      exact = exact && detail::laplacian_table(detail::anti_laplacian_table(E, 4), 4) == E;
    }
    return Outcome{worst <= 1e-12 && exact,
                   fmt("max per-coefficient rel err %.2e (bound 1e-12); rational K=4 order 2: %s", worst,
                       exact ? "exact" : "MISMATCH")};
  });

  // m = 1 has a zero Laplacian, so the relative comparison uses m = 2, 3.
  report(3, "analytic vs finite-difference Laplacian", [] {
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
      const int m = 2 + i % 2;
      const auto rep = exp_rep(m, 32, 0.5, static_cast<std::uint64_t>(300 + i));
      const auto lap = laplacian(rep);
      for (double r : {0.3, 0.6})
        for (double t : {0.0, 1.0, 2.0})
          worst = std::max(worst, oracle::rel_err(fd_polar_laplacian(rep, r, t, 1e-3), evaluate(lap, r, t)));
    }
    return Outcome{worst <= 1e-4, fmt("max rel err %.2e at h=1e-3 (bound 1e-4)", worst)};
  });

  report(4, "repeated Laplacian annihilates", [] {
    bool exact = true;
    double worst = 0.0;
    const std::vector<ProbePoint> probes{{0.3, 0.0}, {0.3, 1.0}, {0.3, 2.0}, {0.6, 0.0}, {0.6, 1.0}, {0.6, 2.0}};
    double worst_by_m[4] = {0, 0, 0, 0};
    for (int i = 0; i < 20; ++i) {
      const int m = 1 + i % 3;
      const auto rep = exp_rep(m, 32, 0.5, static_cast<std::uint64_t>(300 + i));
      auto l = rep;
      for (int s = 0; s < m; ++s) l = laplacian(l);
      exact = exact && l.order() == 0 && l == PolyharmonicRep::zero(0, 32);
      const double res = verify_polyharmonic(rep, probes, 1e-3).max_top;
      worst_by_m[m] = std::max(worst_by_m[m], res);
      worst = std::max(worst, res);
    }
    return Outcome{exact && worst <= 1e-5,
                   fmt("Delta^m exact zero: %s; FD residual m=1 %.2e, m=2 %.2e, m=3 %.2e (bound 1e-5)",
                       exact ? "yes" : "NO", worst_by_m[1], worst_by_m[2], worst_by_m[3])};
  });

  report(5, "Poisson closed form", [] {
    const auto t0 = Clock::now();
    const auto rep = harmonic(from_magnitude(512, [](int) { return 1.0; }));
    double worst_norm = 0.0, worst_point = 0.0;
    for (double r : {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.95}) {
      double err = 0.0, scale = 0.0;
      for (int j = 0; j < 64; ++j) {
        const double t = 2 * std::numbers::pi * j / 64;
        const double want = oracle::poisson(r, t);
        const double diff = std::abs(evaluate(rep, r, t) - want);
        err = std::max(err, diff);
        scale = std::max(scale, std::abs(want));
        worst_point = std::max(worst_point, diff / std::abs(want));
      }
      worst_norm = std::max(worst_norm, err / scale);
    }
    const double secs = seconds_since(t0);
    return Outcome{worst_norm <= 1e-10 && secs <= 1.0,
                   fmt("max rel err per circle (sup norm) %.2e (bound 1e-10); pointwise %.2e; %.3f s (bound 1 s)",
                       worst_norm, worst_point, secs)};
  });

  report(6, "B_j single-mode exactness", [] {
    double worst = 0.0;
    for (int j = 1; j <= 4; ++j)
      for (int k = 1; k <= 64; ++k) {
        CoeffSeq s(64);
        s.set(k, 1.0);
        const double want = single_mode_bj_argmax(k, j).value;
        worst = std::max(worst, std::abs(bj_norm(s, j, bj_default_grid(s, j)) - want) / want);
      }
    return Outcome{worst <= 1e-6, fmt("max rel err %.2e over k<=64, j<=4 (bound 1e-6)", worst)};
  });

  report(7, "W_2^{-j} into B_j instance check", [] {
    int violations = 0, checks = 0;
    double tightest = 0.0;
    for (int j = 1; j <= 3; ++j)
      for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const auto r = embedding_check(finite_sobolev_sequence(j, seed, 256), j, 0.1);
        ++checks;
        if (!r.inequality_holds) ++violations;
        if (r.sobolev > 0) tightest = std::max(tightest, r.bj / (r.constant * r.sobolev));
      }
    return Outcome{violations == 0, fmt("%d violations in %d checks; largest bj / (c_j * norm) = %.3f", violations,
                                        checks, tightest)};
  });

  report(8, "blow-up classification", [] {
    BlowupConfig cfg;
    const int K = 65536;
    const auto poisson = resolved_sup_profile(harmonic(from_magnitude(K, [](int) { return 1.0; })), cfg);
    const auto fp = fit_power_blowup(poisson.profile, cfg);
    const auto square =
        resolved_sup_profile(harmonic(from_magnitude(K, [](int k) { return std::pow(1.0 + k, 2); })), cfg);
    const auto fs2 = fit_power_blowup(square.profile, cfg);
    const auto root =
        resolved_sup_profile(harmonic(from_magnitude(K, [](int k) { return std::exp(std::sqrt(k)); })), cfg);
    const auto fe = fit_exp_blowup(root.profile, cfg);
    const auto fpr = fit_power_blowup(root.profile, cfg);
    CoeffSeq c(16);
    c.set(0, 1.0);
    const auto constant = resolved_sup_profile(harmonic(c), cfg);
    const auto fc = fit_power_blowup(constant.profile, cfg);

    const bool ok1 = fp.model == BlowupFit::Model::PowerLaw && std::abs(fp.alpha - 1.0) <= 0.05;
    const bool ok2 = fs2.model == BlowupFit::Model::PowerLaw && std::abs(fs2.alpha - 3.0) <= 0.1;
    const bool ok3 = fe.beta >= 1.8 && fe.beta <= 2.2 && fe.residual < fpr.residual;
    const bool ok4 = fc.model == BlowupFit::Model::Bounded;
    return Outcome{ok1 && ok2 && ok3 && ok4,
                   fmt("Poisson alpha %.4f; (1+k)^2 alpha %.4f; e^sqrt(k) beta %.3f residual %.3f vs power %.3f; "
                       "constant %s",
                       fp.alpha, fs2.alpha, fe.beta, fe.residual, fpr.residual, to_string(fc.model).c_str())};
  });

  report(9, "coefficient class recovery", [] {
    using Kind = RegularityClass::Kind;
    int correct = 0, total = 0, rate_ok = 0;
    double worst_rate = 0.0;
    std::string first_miss;
    auto tally = [&](const CoefficientReport& r, Kind want, double want_rate, double got_rate, double tol,
                     const std::string& label) {
      ++total;
      const bool cls_ok = r.cls.kind() == want;
      const double dev = want_rate == 0.0 ? std::abs(got_rate) : std::abs(got_rate - want_rate) / std::abs(want_rate);
      const bool rate_good = dev <= tol;
      correct += cls_ok;
      rate_ok += rate_good;
      if (want_rate != 0.0) worst_rate = std::max(worst_rate, dev);
      if ((!cls_ok || !rate_good) && first_miss.empty())
        first_miss = label + " -> " + r.cls.name() + fmt(" rate %.4f", got_rate);
    };
    for (int s = 0; s < 20; ++s) {
      const auto seed = static_cast<std::uint64_t>(900 + s);
      const double u = s / 19.0;
      const double a_exp = 0.2 + 1.3 * u;
      const auto re = classify(law_seq("exponential", a_exp, 256, seed));
      tally(re, Kind::Analytic, a_exp, re.rate, 0.05, fmt("exponential %.3f", a_exp));

      const double a_grow = 0.5 + 3.5 * u;
      const auto rg = classify(law_seq("polynomial", a_grow, 256, seed));
      tally(rg, Kind::DistributionD, a_grow, rg.cls.parameter(), 0.05, fmt("polynomial %.3f", a_grow));

      const double a_decay = -1.0 - 5.0 * u;
      const auto rd = classify(law_seq("polynomial", a_decay, 256, seed));
      tally(rd, Kind::SobolevL2, a_decay, rd.polynomial ? rd.polynomial->rate : NAN, 0.05,
            fmt("polynomial %.3f", a_decay));

      const auto rc = classify(law_seq("constant", 0.0, 256, seed));
      tally(rc, Kind::DistributionD, 0.0, rc.cls.parameter(), 0.05, "constant");

      const double beta = std::array<double, 3>{1.5, 2.0, 3.0}[static_cast<std::size_t>(s % 3)];
      const double a_str = 0.5 + 1.5 * u;
      const auto rs = classify(law_seq("stretched_exponential", -a_str, 256, seed, beta));
      tally(rs, Kind::GevreyDual, a_str, rs.rate, 0.05, fmt("stretched growth %.3f beta %.1f", a_str, beta));
      if (rs.cls.kind() == Kind::GevreyDual && rs.cls.parameter() != beta && first_miss.empty())
        first_miss = fmt("beta %.2f recovered as %.2f", beta, rs.cls.parameter());
    }
    const bool ok = correct == total && rate_ok == total && first_miss.empty();
    return Outcome{ok, fmt("class accuracy %d/%d, rates within 5%%: %d/%d, worst relative rate error %.4f%s%s", correct,
                           total, rate_ok, total, worst_rate, first_miss.empty() ? "" : "; first miss: ",
                           first_miss.c_str())};
  });

  report(10, "weak L2 limit", [] {
    std::vector<int> ks;
    for (int k = -8; k <= 8; ++k) ks.push_back(k);
    double worst_dev = 0.0, worst_slope_gap = 0.0;
    bool monotone = true;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const auto f1 = law_seq("polynomial", -1.0 - 0.1 * static_cast<double>(seed % 5), 256, seed);
      const auto f2 = finite_sobolev_sequence(1, seed, 256);
      const PolyharmonicRep rep(256, {f1, f2});
      worst_dev = std::max(worst_dev, weak_l2_limit_check(rep, ks, 1 - 1e-4));
      std::vector<double> x, y;
      double prev = INFINITY;
      for (int p = 4; p <= 14; ++p) {
        const double h = std::ldexp(1.0, -p);
        const double dev = weak_l2_limit_check(rep, ks, 1 - h);
        monotone = monotone && dev < prev;
        prev = dev;
        x.push_back(std::log(h));
        y.push_back(std::log(dev));
      }
      const double slope = static_cast<double>(oracle::ols_slope(x, y));
      worst_slope_gap = std::max(worst_slope_gap, std::abs(slope - 1.0));
    }
    return Outcome{worst_dev <= 1e-3 && monotone && worst_slope_gap <= 0.05,
                   fmt("max deviation at r=1-1e-4: %.2e (bound 1e-3); monotone in p: %s; log-log slope within %.3f of 1",
                       worst_dev, monotone ? "yes" : "NO", worst_slope_gap)};
  });

  report(11, "Beta moment", [] {
    const double exact = std::abs(beta_moment(5, 1.0) - 1.0 / 6) * 6;
    double spread = 0.0;
    for (double d : {0.5, 1.5}) {
      double lo = INFINITY, hi = 0.0;
      for (int n = 100000; n <= 1000000; n += 50000) {
        const double v = std::pow(static_cast<double>(n), d) * beta_moment(n, d);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
      }
      spread = std::max(spread, (hi - lo) / lo);
    }
    return Outcome{exact <= 1e-15 && spread < 0.02,
                   fmt("rel err at (delta=1, n=5) %.1e (bound 1e-15); n^delta a_n spread %.2e (bound 0.02)", exact,
                       spread)};
  });

  report(12, "CLI round trip", [] {
    const fs::path dir = fs::temp_directory_path() / ("polyh_accept_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    auto path = [&](const std::string& n) { return (dir / n).string(); };
    bool ok = true;
    std::string detail;
    for (const char* tag : {"a", "b"}) {
      ok = ok && run_cli("synth --m 2 --law polynomial --alpha 1.5 --K 128 --seed 21 -o " + path(std::string(tag) + "_rep.json")) == 0;
      const int rc = run_cli("classify -i " + path(std::string(tag) + "_rep.json") + " -o " +
                             path(std::string(tag) + "_report.json"));
      ok = ok && (rc == 0 || rc == 1) && fs::exists(path(std::string(tag) + "_report.json"));
    }
    const bool same = ok && io::read_file(path("a_rep.json")) == io::read_file(path("b_rep.json")) &&
                      io::read_file(path("a_report.json")) == io::read_file(path("b_report.json"));
    const auto rep = io::rep_from_json(io::read_json_file(path("a_rep.json")));
    const bool reread = io::dump(io::to_json(rep)) == io::read_file(path("a_rep.json"));

    io::write_file_atomic(path("bad.json"), "{\"m\": 2, \"K\": 128, \"F\": [[[1, 0]]]}");
    io::write_file_atomic(path("bad.csv"), "0.5,0,1,0\n0.5,3,1,0\n");
    const int bad1 = run_cli("classify -i " + path("bad.json") + " -o " + path("bad_out.json"));
    const int bad2 = run_cli("decompose -i " + path("bad.csv") + " --m 1 --K 0 -o " + path("bad_out.json"));
    const int bad3 = run_cli("laplacian -i " + path("nonexistent.json") + " -o " + path("bad_out.json"));
    const bool rejected = bad1 == 2 && bad2 == 2 && bad3 == 2 && !fs::exists(path("bad_out.json"));
    fs::remove_all(dir);
    return Outcome{same && reread && rejected,
                   fmt("two runs byte-identical: %s; re-serialization identical: %s; malformed exit codes %d %d %d "
                       "(expected 2)",
                       same ? "yes" : "NO", reread ? "yes" : "NO", bad1, bad2, bad3)};
  });

  std::printf("%d of 12 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
