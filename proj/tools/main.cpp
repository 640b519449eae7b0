#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "polyh/errors.hpp"
#include "polyh/io.hpp"
#include "polyh/polyrep.hpp"
#include "polyh/recon.hpp"
#include "polyh/report.hpp"
#include "polyh/synthesize.hpp"

namespace fs = std::filesystem;
using namespace polyh;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNumerical = 1;
constexpr int kExitValidation = 2;

struct Args {
  std::string config;
  std::string input;
  std::string output;
  int m = 0;
  int K = 0;
  std::string law = "constant";
  double alpha = 0.0;
  double beta = 2.0;
  std::uint64_t seed = 0;
  std::string phase = "auto";
  std::vector<double> radii{0.5, 0.7, 0.9};
  int n_theta = 0;
  double h = 1e-3;
  double tol = 1e-5;
  std::vector<double> probe_r{0.3, 0.6};
  std::vector<double> probe_t{0.0, 1.0, 2.0};
  double tail_fraction = 0.5;
  double residual_threshold = 0.1;
  double stability_tol = 0.01;
};

void require(bool ok, const std::string& field, const std::string& what) {
  if (!ok) throw ParseError(field, what);
}

void write_output(const std::string& path, const std::string& content) {
  require(!path.empty(), "output", "an output path is required");
  io::write_file_atomic(path, content);
}

PolyharmonicRep load_rep(const std::string& path) {
  require(!path.empty(), "input", "an input path is required");
  return io::rep_from_json(io::read_json_file(path));
}

CircleSamples load_samples(const std::string& path) {
  require(!path.empty(), "input", "an input path is required");
  if (fs::path(path).extension() == ".csv") return io::samples_from_csv(io::read_file(path));
  return io::samples_from_json(io::read_json_file(path));
}

int cmd_synth(const Args& a) {
  require(a.m >= 1, "m", "order m must be >= 1");
  require(a.K >= 1, "K", "truncation K must be >= 1");
  require(a.phase == "auto" || a.phase == "zero" || a.phase == "random", "phase",
          "expected auto, zero or random");
  const auto law = DecayLaw::from_name(a.law, a.alpha, a.beta);
  const bool random_phase =
      a.phase == "random" || (a.phase == "auto" && law.kind != DecayLaw::Kind::Constant);
  std::vector<CoeffSeq> F;
  for (int j = 0; j < a.m; ++j)
    F.push_back(synthesize(law, a.K, a.seed + static_cast<std::uint64_t>(j), random_phase));
  write_output(a.output, io::dump(io::to_json(PolyharmonicRep(a.K, std::move(F)))));
  return kExitOk;
}

int cmd_eval(const Args& a) {
  const auto rep = load_rep(a.input);
  require(a.n_theta >= 0, "n_theta", "must be >= 0");
  const int n = a.n_theta == 0 ? 2 * rep.K() + 1 : a.n_theta;
  std::vector<std::string> warnings;
  const auto samples = evaluate_circles(rep, a.radii, n, &warnings);
  for (const auto& w : warnings) std::cerr << w << "\n";
  write_output(a.output, io::dump(io::to_json(samples)));
  return kExitOk;
}

int cmd_decompose(const Args& a) {
  const auto samples = load_samples(a.input);
  require(a.m >= 1, "m", "order m must be >= 1");
  require(a.K >= 0, "K", "truncation K must be >= 0");
  const auto result = decompose(samples, a.m, a.K);
  write_output(a.output, io::dump(io::to_json(result.rep)));
  std::cout << io::dump(io::to_json(result));
  return kExitOk;
}

int cmd_laplacian(const Args& a) {
  write_output(a.output, io::dump(io::to_json(laplacian(load_rep(a.input)))));
  return kExitOk;
}

int cmd_antilaplacian(const Args& a) {
  const IntermediateRep e(load_rep(a.input));
  write_output(a.output, io::dump(io::to_json(anti_laplacian(e))));
  return kExitOk;
}

int cmd_verify(const Args& a) {
  const auto rep = load_rep(a.input);
  std::vector<ProbePoint> probes;
  for (double r : a.probe_r)
    for (double t : a.probe_t) probes.push_back({r, t});
  const auto res = verify_polyharmonic(rep, probes, a.h);
  const std::string text = io::dump(io::to_json(res));
  if (!a.output.empty()) write_output(a.output, text);
  std::cout << text;
  if (!(res.max_top <= a.tol)) {
    std::cerr << "residual " << res.max_top << " exceeds tolerance " << a.tol << "\n";
    return kExitNumerical;
  }
  return kExitOk;
}

int cmd_classify(const Args& a) {
  const auto rep = load_rep(a.input);
  BoundaryConfig cfg;
  cfg.fit.tail_fraction = a.tail_fraction;
  cfg.fit.residual_threshold = a.residual_threshold;
  cfg.fit.stability_tol = a.stability_tol;
  const auto report = classify_boundary(rep, cfg);
  const auto j = io::to_json(report);
  if (!a.output.empty()) write_output(a.output, io::dump(j));
  std::cout << io::report_text(j);
  return report.consistent ? kExitOk : kExitNumerical;
}

int cmd_report(const Args& a) {
  require(!a.input.empty(), "input", "an input path is required");
  std::cout << io::report_text(io::read_json_file(a.input));
  return kExitOk;
}

// Fills options that were not given on the command line from a JSON object.
void apply_config(CLI::App* sub, const std::string& path) {
  const auto cfg = io::read_json_file(path);
  require(cfg.is_object(), "config", "expected a JSON object");
  for (const auto& [key, value] : cfg.items()) {
    CLI::Option* opt = sub->get_option_no_throw("--" + key);
    if (opt == nullptr) {
      std::string alt = key;
      for (auto& c : alt)
        if (c == '_') c = '-';
      opt = sub->get_option_no_throw("--" + alt);
    }
    require(opt != nullptr, "config." + key, "not an option of '" + sub->get_name() + "'");
    if (opt->count() > 0) continue;
    std::vector<std::string> values;
    auto render = [&](const io::json& v) {
      if (v.is_string()) return v.get<std::string>();
      if (v.is_number_integer()) return std::to_string(v.get<long long>());
      if (v.is_number()) {
        std::ostringstream os;
        os.precision(17);
        os << v.get<double>();
        return os.str();
      }
      if (v.is_boolean()) return std::string(v.get<bool>() ? "true" : "false");
      throw ParseError("config." + key, "unsupported value type");
    };
    if (value.is_array())
      for (const auto& v : value) values.push_back(render(v));
    else
      values.push_back(render(value));
    opt->clear();
    for (const auto& v : values) opt->add_result(v);
    try {
      opt->run_callback();
    } catch (const CLI::Error& e) {
      throw ParseError("config." + key, e.what());
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"polyh: polyharmonic functions in the unit disk and their boundary values"};
  app.require_subcommand(1);
  Args a;
  app.add_option("--config", a.config, "JSON file with option values; flags override it");

  auto* synth = app.add_subcommand("synth", "Synthesize a representation from a decay law");
  auto* eval = app.add_subcommand("eval", "Evaluate a representation on concentric circles");
  auto* dec = app.add_subcommand("decompose", "Recover a representation from circle samples");
  auto* lap = app.add_subcommand("laplacian", "Apply the Laplacian in representation form");
  auto* alap = app.add_subcommand("antilaplacian", "Invert the Laplacian on an intermediate representation");
  auto* ver = app.add_subcommand("verify", "Finite-difference check of the polyharmonic order");
  auto* cls = app.add_subcommand("classify", "Classify the boundary value of a representation");
  auto* rep = app.add_subcommand("report", "Print the summary of a saved classification report");

  for (auto* sub : {synth, eval, dec, lap, alap, ver, cls, rep}) {
    sub->fallthrough();
    sub->add_option("-i,--input", a.input, "Input file");
  }
  for (auto* sub : {synth, eval, dec, lap, alap, ver, cls}) sub->add_option("-o,--output", a.output, "Output file");

  synth->add_option("--m", a.m, "Polyharmonic order");
  synth->add_option("--K", a.K, "Truncation order");
  synth->add_option("--law", a.law, "exponential | polynomial | stretched_exponential | constant");
  synth->add_option("--alpha", a.alpha, "Law parameter alpha");
  synth->add_option("--beta", a.beta, "Law parameter beta (stretched_exponential)");
  synth->add_option("--seed", a.seed, "Phase seed; F_j uses seed + j - 1");
  synth->add_option("--phase", a.phase, "auto | zero | random (auto: zero for constant)");

  eval->add_option("--radii", a.radii, "Circle radii in [0, 1)");
  eval->add_option("--n-theta", a.n_theta, "Angles per circle (0: 2K+1)");

  dec->add_option("--m", a.m, "Polyharmonic order");
  dec->add_option("--K", a.K, "Truncation order");

  ver->add_option("--step", a.h, "Finite-difference step");
  ver->add_option("--tol", a.tol, "Residual threshold for exit status 0");
  ver->add_option("--probe-r", a.probe_r, "Probe radii");
  ver->add_option("--probe-t", a.probe_t, "Probe angles");

  cls->add_option("--tail-fraction", a.tail_fraction, "Fraction of modes in the fit window");
  cls->add_option("--residual-threshold", a.residual_threshold, "RMS log residual for a model to hold");
  cls->add_option("--stability-tol", a.stability_tol, "Relative change allowed under K-halving");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitValidation;
  }

  try {
    CLI::App* sub = app.get_subcommands().front();
    if (!a.config.empty()) apply_config(sub, a.config);
    const std::string name = sub->get_name();
    if (name == "synth") return cmd_synth(a);
    if (name == "eval") return cmd_eval(a);
    if (name == "decompose") return cmd_decompose(a);
    if (name == "laplacian") return cmd_laplacian(a);
    if (name == "antilaplacian") return cmd_antilaplacian(a);
    if (name == "verify") return cmd_verify(a);
    if (name == "classify") return cmd_classify(a);
    return cmd_report(a);
  } catch (const ParseError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitValidation;
  } catch (const SingularSystem& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const InsufficientData& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const Error& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
}
