#include "polyh/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>

#include "polyh/errors.hpp"

namespace polyh::io {

namespace {

json pair(cplx z) { return json::array({z.real(), z.imag()}); }

json number_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json array_of(const std::vector<double>& v) {
  json out = json::array();
  for (double x : v) out.push_back(number_or_null(x));
  return out;
}

const json& field(const json& obj, const char* name, const std::string& where) {
  if (!obj.is_object()) throw ParseError(where.empty() ? "<root>" : where, "expected a JSON object");
  auto it = obj.find(name);
  if (it == obj.end()) throw ParseError(where.empty() ? name : where + "." + name, "missing field");
  return *it;
}

int as_int(const json& v, const std::string& where) {
  if (!v.is_number_integer()) throw ParseError(where, "expected an integer");
  const auto x = v.get<long long>();
  if (x < 0 || x > (1LL << 30)) throw ParseError(where, "integer out of range");
  return static_cast<int>(x);
}

double as_double(const json& v, const std::string& where) {
  if (!v.is_number()) throw ParseError(where, "expected a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw ParseError(where, "expected a finite number");
  return x;
}

cplx as_pair(const json& v, const std::string& where) {
  if (!v.is_array() || v.size() != 2) throw ParseError(where, "expected [re, im]");
  return {as_double(v[0], where + "[0]"), as_double(v[1], where + "[1]")};
}

CoeffSeq coeffs_from_array(const json& arr, int K, const std::string& where) {
  if (!arr.is_array()) throw ParseError(where, "expected an array");
  if (arr.size() != static_cast<std::size_t>(2 * K + 1))
    throw ParseError(where, "expected 2K+1 = " + std::to_string(2 * K + 1) + " entries, found " +
                                std::to_string(arr.size()));
  std::vector<cplx> values(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i)
    values[i] = as_pair(arr[i], where + "[" + std::to_string(i) + "]");
  return CoeffSeq(K, std::move(values));
}

json coeffs_array(const CoeffSeq& seq) {
  json arr = json::array();
  for (const auto& z : seq.values()) arr.push_back(pair(z));
  return arr;
}

json fit_json(const std::optional<RateFit>& fit) {
  if (!fit) return nullptr;
  return {{"rate", number_or_null(fit->rate)}, {"residual", number_or_null(fit->residual)},
          {"points", fit->points}};
}

json blowup_json(const std::optional<BlowupFit>& fit) {
  if (!fit) return nullptr;
  json out{{"model", to_string(fit->model)},
           {"alpha", number_or_null(fit->alpha)},
           {"q", nullptr},
           {"beta", nullptr},
           {"residual", number_or_null(fit->residual)},
           {"points", fit->points},
           {"r_min", fit->r_min},
           {"r_max", fit->r_max},
           {"accepted", fit->accepted}};
  if (fit->model == BlowupFit::Model::ExpStretched) {
    out["q"] = number_or_null(fit->q);
    out["beta"] = number_or_null(fit->beta);
  }
  return out;
}

json profile_json(const NormProfile& p) {
  return {{"kind", to_string(p.kind)}, {"radii", array_of(p.radii)}, {"values", array_of(p.values)}};
}

}  // namespace

json to_json(const CoeffSeq& seq) { return {{"K", seq.K()}, {"coeffs", coeffs_array(seq)}}; }

json to_json(const PolyharmonicRep& rep) {
  json F = json::array();
  for (const auto& seq : rep.terms()) F.push_back(coeffs_array(seq));
  return {{"m", rep.order()}, {"K", rep.K()}, {"F", F}};
}

json to_json(const CircleSamples& samples) {
  json values = json::array();
  for (const auto& row : samples.values) {
    json r = json::array();
    for (const auto& z : row) r.push_back(pair(z));
    values.push_back(std::move(r));
  }
  return {{"radii", samples.radii}, {"n_theta", samples.n_theta}, {"values", values}};
}

json to_json(const PolyharmonicResidual& res) {
  json probes = json::array();
  for (const auto& p : res.probes)
    probes.push_back({{"r", p.probe.r}, {"t", p.probe.t}, {"top", p.top}, {"below", p.below}});
  return {{"order", res.order},       {"h", res.h},
          {"max_top", res.max_top},   {"max_below", res.max_below},
          {"min_below", res.min_below}, {"probes", probes}};
}

json to_json(const DecomposeResult& result) {
  return {{"max_condition", number_or_null(result.max_condition)},
          {"conditioning_warnings", result.conditioning_warnings.size()},
          {"underflow_modes", result.underflow_modes}};
}

json to_json(const RegularityReport& report) {
  json per_F = json::array();
  for (std::size_t j = 0; j < report.per_F.size(); ++j) {
    const auto& c = report.per_F[j];
    json stretched = nullptr;
    if (c.stretched)
      stretched = {{"beta", c.stretched->beta},
                   {"rate", number_or_null(c.stretched->fit.rate)},
                   {"residual", number_or_null(c.stretched->fit.residual)}};
    per_F.push_back({{"j", j + 1},
                     {"class", c.cls.name()},
                     {"parameter", c.cls.has_parameter() ? number_or_null(c.cls.parameter()) : json(nullptr)},
                     {"rate", number_or_null(c.rate)},
                     {"residual", number_or_null(c.residual)},
                     {"zero_tail", c.zero_tail},
                     {"exponential_fit", fit_json(c.exponential)},
                     {"polynomial_fit", fit_json(c.polynomial)},
                     {"stretched_fit", stretched},
                     {"l2_relative_change",
                      c.l2_relative_change ? number_or_null(*c.l2_relative_change) : json(nullptr)},
                     {"notes", c.notes}});
  }
  const auto& l2 = report.l2_check;
  json l2_json{{"profile_sup", number_or_null(l2.profile_sup)},
               {"profile_sup_half", number_or_null(l2.profile_sup_half)},
               {"profile_bounded", l2.profile_bounded},
               {"f1_norm", number_or_null(l2.f1_norm)},
               {"f1_stable", l2.f1_stable},
               {"bj_norms", array_of(l2.bj_norms)},
               {"bj_stable", l2.bj_stable},
               {"consistent", l2.consistent}};
  return {{"m", report.m},
          {"K", report.K},
          {"per_F", per_F},
          {"weakest_class", report.weakest.name()},
          {"profiles", {{"l2", profile_json(report.l2_profile)},
                        {"sup_abs", profile_json(report.sup_profile)},
                        {"sup_abs_dropped", report.sup_dropped}}},
          {"blowup", {{"growth_model", report.growth_model},
                      {"power", blowup_json(report.power_fit)},
                      {"stretched", blowup_json(report.exp_fit)}}},
          {"l2_check", l2_json},
          {"verdicts",
           {{"l2_boundary", report.l2_boundary},
            {"dprime_boundary", report.dprime_boundary},
            {"gevrey_boundary",
             {{"holds", report.gevrey_boundary},
              {"beta", report.gevrey_beta ? json(*report.gevrey_beta) : json(nullptr)}}},
            {"hyperfunction_boundary", report.hyperfunction_boundary},
            {"consistent", report.consistent},
            {"notes", report.notes}}}};
}

CoeffSeq coeff_seq_from_json(const json& j, const std::string& where) {
  const std::string prefix = where.empty() ? "" : where + ".";
  const int K = as_int(field(j, "K", where), prefix + "K");
  return coeffs_from_array(field(j, "coeffs", where), K, prefix + "coeffs");
}

PolyharmonicRep rep_from_json(const json& j) {
  const int m = as_int(field(j, "m", ""), "m");
  const int K = as_int(field(j, "K", ""), "K");
  const json& F = field(j, "F", "");
  if (!F.is_array()) throw ParseError("F", "expected an array");
  if (F.size() != static_cast<std::size_t>(m))
    throw ParseError("F", "expected m = " + std::to_string(m) + " sequences, found " +
                              std::to_string(F.size()));
  std::vector<CoeffSeq> terms;
  for (int i = 0; i < m; ++i)
    terms.push_back(coeffs_from_array(F[static_cast<std::size_t>(i)], K, "F[" + std::to_string(i) + "]"));
  return PolyharmonicRep(K, std::move(terms));
}

CircleSamples samples_from_json(const json& j) {
  CircleSamples s;
  const json& radii = field(j, "radii", "");
  if (!radii.is_array()) throw ParseError("radii", "expected an array");
  for (std::size_t i = 0; i < radii.size(); ++i) {
    const std::string where = "radii[" + std::to_string(i) + "]";
    const double r = as_double(radii[i], where);
    if (!(r >= 0.0 && r < 1.0)) throw ParseError(where, "radius outside [0, 1)");
    if (i > 0 && !(r > s.radii.back())) throw ParseError(where, "radii must be strictly increasing");
    s.radii.push_back(r);
  }
  s.n_theta = as_int(field(j, "n_theta", ""), "n_theta");
  if (s.n_theta < 1) throw ParseError("n_theta", "must be positive");
  const json& values = field(j, "values", "");
  if (!values.is_array()) throw ParseError("values", "expected an array");
  if (values.size() != s.radii.size())
    throw ParseError("values", "expected one row per radius (" + std::to_string(s.radii.size()) + ")");
  for (std::size_t i = 0; i < values.size(); ++i) {
    const std::string where = "values[" + std::to_string(i) + "]";
    const json& row = values[i];
    if (!row.is_array()) throw ParseError(where, "expected an array");
    if (row.size() != static_cast<std::size_t>(s.n_theta))
      throw ParseError(where, "expected n_theta = " + std::to_string(s.n_theta) + " values");
    std::vector<cplx> out(row.size());
    for (std::size_t k = 0; k < row.size(); ++k)
      out[k] = as_pair(row[k], where + "[" + std::to_string(k) + "]");
    s.values.push_back(std::move(out));
  }
  return s;
}

CircleSamples samples_from_csv(const std::string& text) {
  struct Row {
    double theta;
    cplx value;
  };
  std::map<double, std::vector<Row>> circles;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  bool first = true;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    std::vector<std::string> cells;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    const std::string where = "line " + std::to_string(line_no);
    auto num = [&](std::size_t i, const char* name) {
      try {
        std::size_t used = 0;
        const double v = std::stod(cells[i], &used);
        if (cells[i].find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument("");
        if (!std::isfinite(v)) throw std::invalid_argument("");
        return v;
      } catch (const std::exception&) {
        throw ParseError(where + "." + name, "expected a finite number, got '" + cells[i] + "'");
      }
    };
    if (first) {
      first = false;
      if (!cells.empty() && cells[0].find_first_of("0123456789.-+") != 0 &&
          cells[0].find('r') != std::string::npos)
        continue;  // header
    }
    if (cells.size() != 4) throw ParseError(where, "expected 4 columns r,theta,re,im");
    const double r = num(0, "r");
    if (!(r >= 0.0 && r < 1.0)) throw ParseError(where + ".r", "radius outside [0, 1)");
    circles[r].push_back({num(1, "theta"), {num(2, "re"), num(3, "im")}});
  }
  if (circles.empty()) throw ParseError("csv", "no data rows");
  CircleSamples s;
  s.n_theta = static_cast<int>(circles.begin()->second.size());
  for (auto& [r, rows] : circles) {
    const std::string where = "r=" + std::to_string(r);
    if (static_cast<int>(rows.size()) != s.n_theta)
      throw ParseError(where, "circle has " + std::to_string(rows.size()) + " angles, expected " +
                                  std::to_string(s.n_theta));
    std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) { return a.theta < b.theta; });
    std::vector<cplx> out(rows.size());
    for (int j = 0; j < s.n_theta; ++j) {
      const double expected = 2.0 * std::numbers::pi * j / s.n_theta;
      if (std::abs(rows[static_cast<std::size_t>(j)].theta - expected) > 1e-9)
        throw ParseError(where + ".theta", "angles do not form the uniform grid 2 pi j / " +
                                               std::to_string(s.n_theta));
      out[static_cast<std::size_t>(j)] = rows[static_cast<std::size_t>(j)].value;
    }
    s.radii.push_back(r);
    s.values.push_back(std::move(out));
  }
  return s;
}

std::string report_text(const json& report) {
  std::ostringstream os;
  auto num = [](const json& v) {
    if (v.is_null()) return std::string("n/a");
    std::ostringstream s;
    s.precision(6);
    s << v.get<double>();
    return s.str();
  };
  try {
    os << "order m = " << report.at("m").get<int>() << ", truncation K = " << report.at("K").get<int>()
       << "\n";
    for (const auto& f : report.at("per_F")) {
      os << "  F_" << f.at("j").get<int>() << ": " << f.at("class").get<std::string>();
      if (!f.at("parameter").is_null()) os << "(" << num(f.at("parameter")) << ")";
      os << "  rate " << num(f.at("rate")) << "  residual " << num(f.at("residual")) << "\n";
    }
    const auto& b = report.at("blowup");
    os << "growth of sup|u(r,.)|: " << b.at("growth_model").get<std::string>();
    if (!b.at("power").is_null())
      os << "  [power alpha " << num(b.at("power").at("alpha")) << ", residual "
         << num(b.at("power").at("residual")) << "]";
    if (!b.at("stretched").is_null())
      os << "  [stretched beta " << num(b.at("stretched").at("beta")) << ", alpha "
         << num(b.at("stretched").at("alpha")) << ", residual " << num(b.at("stretched").at("residual"))
         << "]";
    os << "\n";
    const auto& v = report.at("verdicts");
    auto yn = [](const json& x) { return x.get<bool>() ? "yes" : "no"; };
    os << "boundary value in L2:      " << yn(v.at("l2_boundary")) << "\n";
    os << "boundary value in D':      " << yn(v.at("dprime_boundary")) << "\n";
    os << "boundary value in G'_beta: " << yn(v.at("gevrey_boundary").at("holds"));
    if (!v.at("gevrey_boundary").at("beta").is_null())
      os << " (beta " << num(v.at("gevrey_boundary").at("beta")) << ")";
    os << "\n";
    os << "hyperfunction boundary:    " << yn(v.at("hyperfunction_boundary")) << "\n";
    os << (v.at("consistent").get<bool>() ? "CONSISTENT" : "INCONSISTENT") << "\n";
    for (const auto& n : v.at("notes")) os << "  note: " << n.get<std::string>() << "\n";
  } catch (const json::exception& e) {
    throw ParseError("report", e.what());
  }
  return os.str();
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("<json>", e.what());
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path.string(), "cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json read_json_file(const std::filesystem::path& path) { return parse_json_text(read_file(path)); }

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot open " + tmp.string() + " for writing");
    out << content;
    out.flush();
    if (!out) throw Error("write to " + tmp.string() + " failed");
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace polyh::io
