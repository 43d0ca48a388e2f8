#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qsem/scenarios.hpp"
#include "qsem/semantics.hpp"

namespace qsem::cli {

/// Exit codes: success, evaluation/config error, syntax error. Exhaustive
/// and mutually exclusive.
inline constexpr int kExitOk = 0;
inline constexpr int kExitEvalError = 1;
inline constexpr int kExitSyntaxError = 2;

enum class Format { text, json, csv };
std::optional<Format> format_from_string(const std::string& name);

struct CliConfig {
  std::string scenario_path;
  std::optional<Semantics> semantics;
  std::vector<std::string> formulas;
  std::string state_name;
  std::string assign_text;
  Format format = Format::text;
  double tol = 1e-9;
  // timeline only
  double t_rest = 0.0;
  double t_observe = 1.0;
  std::string grid_text;
  std::string state_before;
  std::string state_after;
  std::string assign_before_text;
  std::string assign_after_text;
};

/// Parses "name=value" pairs separated by commas; values are 0, 1, 0.5 or u
/// (undefined). Throws std::invalid_argument on anything else.
Assignment parse_assignment(const std::string& text);

/// Parses "start:stop:step" into the sample times start, start+step, ...
/// up to stop (inclusive within a half-ulp of step).
std::vector<double> parse_grid(const std::string& text);

/// Lossless tagged encoding: {"type":"bit","value":b},
/// {"type":"scalar","value":r}, {"type":"undefined"}, {"type":"null"}.
nlohmann::json truth_value_to_json(const TruthValue& v);
TruthValue truth_value_from_json(const nlohmann::json& j);

int cmd_eval(const CliConfig& config, std::ostream& out, std::ostream& err);
int cmd_compare(const CliConfig& config, std::ostream& out, std::ostream& err);
int cmd_timeline(const CliConfig& config, std::ostream& out,
                 std::ostream& err);
int cmd_census(const CliConfig& config, std::ostream& out, std::ostream& err);

/// One-shot reproduction of the ideal-coin results on the built-in fixture;
/// prints one PASS/FAIL line per check and succeeds only if all pass.
int cmd_demo_coin(std::ostream& out, std::ostream& err);

/// Full argv front end.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace qsem::cli
