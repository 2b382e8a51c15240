#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "normtori/patch_graph.hpp"

namespace normtori::cli {

/// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitMismatch = 2;
inline constexpr int kExitPrecision = 3;

struct Report {
  std::string command;
  std::string status;  // ok, infeasible, mismatch, error
  nlohmann::json payload = nlohmann::json::object();
  std::vector<std::string> text;
};

std::string render_json(const Report& r);
std::string render_text(const Report& r);
/// Inverse of render_json; throws ParseError.
Report parse_report(const std::string& json_text);

/// Model JSON: {"components": [...], "points": [{"name", "on"}], "edge_moduli": {...}}.
ModelDescription parse_model_text(const std::string& text);
ModelDescription parse_model(const std::string& path);
/// Target JSON: {"edges": {"P1:X2": 1, ...}}; unlisted branches get 0.
std::vector<std::int64_t> parse_target_text(const std::string& text, const PatchGraph& g);
std::vector<std::int64_t> parse_target(const std::string& path, const PatchGraph& g);

/// Parses args (without the program name), runs the command and writes the
/// report to out (errors to err). Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace normtori::cli
