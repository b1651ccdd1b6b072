#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "gwex/thermo.hpp"

namespace gwex::cli {

// Configuration problem: reported with exit code 1, as opposed to
// computation failures (exit code 2).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class OutputFormat { csv, json };

WorkMethod parse_method(const std::string& name);
OutputFormat parse_format(const std::string& name);
std::string to_string(OutputFormat format);

struct SweepConfig {
  std::vector<double> beta_values;
  std::vector<double> r_values;
  std::vector<double> lambda_values{1.0};
  std::vector<WorkMethod> methods{WorkMethod::exact, WorkMethod::closed_form};
  OutputFormat format = OutputFormat::csv;
  std::string output_path;  // empty = stdout
};

// Flag-supplied values; unset fields fall back to the config file, then to
// defaults (flags override file, field by field).
struct SweepOverrides {
  std::vector<double> beta;
  std::vector<double> r;
  std::vector<double> lambda;
  std::vector<std::string> methods;
  std::string format;  // empty = unset
  std::string out;     // empty = unset
};

SweepConfig sweep_config_from_json(const nlohmann::json& j);
nlohmann::json to_json(const SweepConfig& cfg);

// Reads config_path (if non-empty), applies overrides, returns the resolved
// config. Throws ConfigError for unreadable/invalid files.
SweepConfig resolve_sweep_config(const std::string& config_path,
                                 const SweepOverrides& overrides);

// Structural checks: non-empty lists, domains, the oracle grid bound
// (n_bar <= 0.5 and r <= 1.5), and lambda != 1 restricted to the exact
// method. Throws ConfigError.
void validate_sweep_config(const SweepConfig& cfg);

}  // namespace gwex::cli
