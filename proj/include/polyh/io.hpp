#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "polyh/circle_samples.hpp"
#include "polyh/coeff_seq.hpp"
#include "polyh/polyrep.hpp"
#include "polyh/recon.hpp"
#include "polyh/report.hpp"

namespace polyh::io {

using nlohmann::json;

json to_json(const CoeffSeq& seq);
json to_json(const PolyharmonicRep& rep);
json to_json(const CircleSamples& samples);
json to_json(const RegularityReport& report);
json to_json(const PolyharmonicResidual& residual);
json to_json(const DecomposeResult& result);

/// Parsers throw ParseError naming the first offending field (e.g. "F[1][3]").
CoeffSeq coeff_seq_from_json(const json& j, const std::string& where = "");
PolyharmonicRep rep_from_json(const json& j);
CircleSamples samples_from_json(const json& j);

/// Rows "r,theta,re,im" (optional header) forming a complete uniform grid.
CircleSamples samples_from_csv(const std::string& text);

/// Human-readable summary of a serialized RegularityReport.
std::string report_text(const json& report);

/// Canonical text form: two-space indent, trailing newline.
std::string dump(const json& j);

json parse_json_text(const std::string& text);
std::string read_file(const std::filesystem::path& path);
json read_json_file(const std::filesystem::path& path);
/// Writes to a sibling temporary file and renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace polyh::io
