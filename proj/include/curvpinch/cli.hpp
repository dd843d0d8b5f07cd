#pragma once

// Command-line front end. Every command builds one JSON report; the text
// format renders the same report as indented "key: value" lines.
//
// Exit codes: 0 success, 2 when the computation ran but a hypothesis or an
// inequality check failed, 1 on usage, input or numerical errors.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "curvpinch/models.hpp"
#include "curvpinch/planescan.hpp"

namespace curvpinch::cli {

enum class OutputFormat { Text, Json };

struct RunConfig {
  std::string command;     // decompose, scan, weitzenbock, check, ...
  std::string subcommand;  // check / verdict / model target
  std::optional<std::string> input_path;
  std::optional<std::string> model_name;
  ModelParams params;
  int samples = 1000;
  int frames = 100;
  double tol = 1e-9;
  std::uint64_t seed = 1;
  std::optional<double> lambda1;
  std::optional<double> delta;
  double scale = 1.0;
  bool statement_variant = false;
  ScanBudget budget;
  OutputFormat output_format = OutputFormat::Text;
};

/// Parses argv-style arguments (without the program name). Returns nullopt
/// when parsing already settled the outcome (help or a usage error), with
/// exit_code set.
std::optional<RunConfig> parse_args(const std::vector<std::string>& args, std::ostream& out,
                                    std::ostream& err, int& exit_code);

int execute(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_args followed by execute.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace curvpinch::cli
