#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "polyh/io.hpp"

namespace fs = std::filesystem;
using namespace polyh;

namespace {

struct Workdir {
  fs::path dir;
  Workdir() {
    dir = fs::temp_directory_path() / ("polyh_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir);
  }
  ~Workdir() { fs::remove_all(dir); }
  std::string operator/(const std::string& name) const { return (dir / name).string(); }
};

int run(const std::string& args, std::string* out = nullptr) {
  const std::string cmd = std::string(POLYH_CLI_PATH) + " " + args;
  if (out == nullptr) {
    const int status = std::system((cmd + " > /dev/null 2>&1").c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }
  FILE* pipe = ::popen((cmd + " 2>/dev/null").c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  out->clear();
  while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) out->append(buf, n);
  const int status = ::pclose(pipe);
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

void write(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

}  // namespace

TEST_CASE("synth writes the requested representation") {
  Workdir w;
  REQUIRE(run("synth --m 1 --law constant --K 2 -o " + (w / "c.json")) == 0);
  const auto rep = io::rep_from_json(io::read_json_file(w / "c.json"));
  CHECK(rep.order() == 1);
  CHECK(rep.F(1).size() == 5);
  for (const auto& z : rep.F(1).values()) CHECK(z == cplx(1.0, 0.0));

  const std::string args = "synth --m 2 --law exponential --alpha 1 --K 8 --seed 7 -o ";
  REQUIRE(run(args + (w / "a.json")) == 0);
  REQUIRE(run(args + (w / "b.json")) == 0);
  CHECK(io::read_file(w / "a.json") == io::read_file(w / "b.json"));

  CHECK(run("synth --m 0 --law constant --K 2 -o " + (w / "z.json")) == 2);
  CHECK(!fs::exists(w / "z.json"));
  CHECK(run("synth --m 1 --law wavy --K 2 -o " + (w / "z.json")) == 2);
  CHECK(run("synth --m 1 --K 2 --bogus 3 -o " + (w / "z.json")) == 2);
}

TEST_CASE("Poisson pipeline evaluates to the closed form") {
  Workdir w;
  REQUIRE(run("synth --m 1 --law constant --K 256 -o " + (w / "p.json")) == 0);
  REQUIRE(run("eval -i " + (w / "p.json") + " --radii 0.5 --n-theta 8 -o " + (w / "s.json")) == 0);
  const auto s = io::samples_from_json(io::read_json_file(w / "s.json"));
  CHECK(std::abs(s.values[0][0] - 3.0) < 1e-12);
}

TEST_CASE("synth, eval, decompose round trip") {
  Workdir w;
  REQUIRE(run("synth --m 2 --law exponential --alpha 0.5 --K 16 --seed 3 -o " + (w / "r.json")) == 0);
  REQUIRE(run("eval -i " + (w / "r.json") + " --radii 0.5 0.7 0.9 --n-theta 64 -o " + (w / "s.json")) == 0);
  std::string diag;
  REQUIRE(run("decompose -i " + (w / "s.json") + " --m 2 --K 16 -o " + (w / "d.json"), &diag) == 0);
  CHECK(io::parse_json_text(diag).contains("max_condition"));
  const auto a = io::rep_from_json(io::read_json_file(w / "r.json"));
  const auto b = io::rep_from_json(io::read_json_file(w / "d.json"));
  for (int j = 1; j <= 2; ++j)
    for (int k = -16; k <= 16; ++k) CHECK(std::abs(a.F(j)[k] - b.F(j)[k]) <= 1e-8);
}

TEST_CASE("decompose reads CSV samples") {
  Workdir w;
  std::string csv = "r,theta,re,im\n";
  for (double r : {0.3, 0.6})
    for (int j = 0; j < 5; ++j) {
      std::ostringstream os;
      os.precision(17);
      os << r << "," << 2 * 3.14159265358979323846 * j / 5 << ",1,0\n";
      csv += os.str();
    }
  write(w / "s.csv", csv);
  REQUIRE(run("decompose -i " + (w / "s.csv") + " --m 2 --K 2 -o " + (w / "d.json")) == 0);
  const auto d = io::rep_from_json(io::read_json_file(w / "d.json"));
  CHECK(std::abs(d.F(1)[0] - 1.0) < 1e-13);
}

TEST_CASE("laplacian, antilaplacian and verify") {
  Workdir w;
  REQUIRE(run("synth --m 1 --law exponential --alpha 1 --K 8 --seed 1 -o " + (w / "e.json")) == 0);
  REQUIRE(run("antilaplacian -i " + (w / "e.json") + " -o " + (w / "u.json")) == 0);
  REQUIRE(run("laplacian -i " + (w / "u.json") + " -o " + (w / "back.json")) == 0);
  const auto e = io::rep_from_json(io::read_json_file(w / "e.json"));
  const auto back = io::rep_from_json(io::read_json_file(w / "back.json"));
  for (int k = -8; k <= 8; ++k) CHECK(std::abs(back.F(1)[k] - e.F(1)[k]) <= 1e-15);

  std::string out;
  CHECK(run("verify -i " + (w / "e.json") + " --tol 1e-6", &out) == 0);
  CHECK(io::parse_json_text(out)["order"] == 1);
  CHECK(run("verify -i " + (w / "u.json") + " --tol 1e-12") == 1);
  CHECK(run("verify -i " + (w / "u.json") + " --probe-r 0.0") == 2);
}

TEST_CASE("classify reports a distributional boundary value") {
  Workdir w;
  REQUIRE(run("synth --m 1 --law polynomial --alpha 2 --K 256 --seed 4 -o " + (w / "p.json")) == 0);
  std::string text;
  run("classify -i " + (w / "p.json") + " -o " + (w / "rep.json"), &text);
  const auto j = io::read_json_file(w / "rep.json");
  CHECK(j["verdicts"]["dprime_boundary"] == true);
  CHECK(text.find("D'") != std::string::npos);
  std::string again;
  REQUIRE(run("report -i " + (w / "rep.json"), &again) == 0);
  CHECK(again == text);
}

TEST_CASE("config file supplies defaults that flags override") {
  Workdir w;
  write(w / "cfg.json", R"({"m": 2, "K": 4, "law": "exponential", "alpha": 1.0, "seed": 9})");
  REQUIRE(run("--config " + (w / "cfg.json") + " synth -o " + (w / "a.json")) == 0);
  REQUIRE(run("synth --m 2 --K 4 --law exponential --alpha 1 --seed 9 -o " + (w / "b.json")) == 0);
  CHECK(io::read_file(w / "a.json") == io::read_file(w / "b.json"));
  REQUIRE(run("--config " + (w / "cfg.json") + " synth --K 6 -o " + (w / "c.json")) == 0);
  CHECK(io::rep_from_json(io::read_json_file(w / "c.json")).K() == 6);
  write(w / "bad.json", R"({"colour": 3})");
  CHECK(run("--config " + (w / "bad.json") + " synth -o " + (w / "d.json")) == 2);
}

TEST_CASE("malformed inputs exit with status 2 and write nothing") {
  Workdir w;
  write(w / "broken.json", R"({"m": 1, "K": 2, "F": [[[1,0],[1,0]]]})");
  for (const char* cmd : {"eval", "laplacian", "antilaplacian", "classify"}) {
    CHECK(run(std::string(cmd) + " -i " + (w / "broken.json") + " -o " + (w / "out.json")) == 2);
    CHECK(!fs::exists(w / "out.json"));
  }
  write(w / "trunc.json", R"({"m": 1, "K": )");
  CHECK(run("laplacian -i " + (w / "trunc.json") + " -o " + (w / "out.json")) == 2);
  CHECK(run("laplacian -i " + (w / "missing.json") + " -o " + (w / "out.json")) == 2);
  write(w / "s.json", R"({"radii": [0.5], "n_theta": 3, "values": [[[1,0],[1,0]]]})");
  CHECK(run("decompose -i " + (w / "s.json") + " --m 1 --K 1 -o " + (w / "out.json")) == 2);
  CHECK(!fs::exists(w / "out.json"));
}
