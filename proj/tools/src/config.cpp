#include "gwex/cli/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace gwex::cli {
namespace {

using nlohmann::json;

std::vector<double> number_list(const json& v, const std::string& key) {
  std::vector<double> out;
  if (v.is_number()) {
    out.push_back(v.get<double>());
  } else if (v.is_array()) {
    for (const auto& e : v) {
      if (!e.is_number()) {
        throw ConfigError("config key '" + key + "': expected numbers");
      }
      out.push_back(e.get<double>());
    }
  } else {
    throw ConfigError("config key '" + key + "': expected number or array");
  }
  return out;
}

std::vector<std::string> string_list(const json& v, const std::string& key) {
  std::vector<std::string> out;
  if (v.is_string()) {
    out.push_back(v.get<std::string>());
  } else if (v.is_array()) {
    for (const auto& e : v) {
      if (!e.is_string()) {
        throw ConfigError("config key '" + key + "': expected strings");
      }
      out.push_back(e.get<std::string>());
    }
  } else {
    throw ConfigError("config key '" + key + "': expected string or array");
  }
  return out;
}

std::vector<WorkMethod> parse_methods(const std::vector<std::string>& names) {
  std::vector<WorkMethod> out;
  for (const auto& n : names) {
    WorkMethod m = parse_method(n);
    if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(m);
  }
  return out;
}

void check_list(const std::vector<double>& v, const char* name, double lo,
                bool strict) {
  if (v.empty()) {
    throw ConfigError(std::string(name) + " list must be non-empty");
  }
  for (double x : v) {
    bool ok = std::isfinite(x) && (strict ? x > lo : x >= lo);
    if (!ok) {
      std::ostringstream msg;
      msg << name << " value " << x << " out of range (must be "
          << (strict ? "> " : ">= ") << lo << " and finite)";
      throw ConfigError(msg.str());
    }
  }
}

}  // namespace

WorkMethod parse_method(const std::string& name) {
  if (name == "exact") return WorkMethod::exact;
  if (name == "closed_form") return WorkMethod::closed_form;
  if (name == "low_t_approx") return WorkMethod::low_t_approx;
  if (name == "invariant_form") return WorkMethod::invariant_form;
  if (name == "oracle") return WorkMethod::oracle;
  throw ConfigError("unknown method '" + name +
                    "' (expected exact, closed_form, low_t_approx, "
                    "invariant_form or oracle)");
}

OutputFormat parse_format(const std::string& name) {
  if (name == "csv") return OutputFormat::csv;
  if (name == "json") return OutputFormat::json;
  throw ConfigError("unknown format '" + name + "' (expected csv or json)");
}

std::string to_string(OutputFormat format) {
  return format == OutputFormat::csv ? "csv" : "json";
}

SweepConfig sweep_config_from_json(const nlohmann::json& j) {
  if (!j.is_object()) {
    throw ConfigError("config root must be a JSON object");
  }
  SweepConfig cfg;
  for (const auto& [key, value] : j.items()) {
    if (key == "beta") {
      cfg.beta_values = number_list(value, key);
    } else if (key == "r") {
      cfg.r_values = number_list(value, key);
    } else if (key == "lambda") {
      cfg.lambda_values = number_list(value, key);
    } else if (key == "methods") {
      cfg.methods = parse_methods(string_list(value, key));
    } else if (key == "format") {
      if (!value.is_string()) {
        throw ConfigError("config key 'format': expected string");
      }
      cfg.format = parse_format(value.get<std::string>());
    } else if (key == "out") {
      if (!value.is_string()) {
        throw ConfigError("config key 'out': expected string");
      }
      cfg.output_path = value.get<std::string>();
    } else {
      throw ConfigError("unknown config key '" + key + "'");
    }
  }
  return cfg;
}

nlohmann::json to_json(const SweepConfig& cfg) {
  json j;
  j["beta"] = cfg.beta_values;
  j["r"] = cfg.r_values;
  j["lambda"] = cfg.lambda_values;
  std::vector<std::string> methods;
  methods.reserve(cfg.methods.size());
  for (WorkMethod m : cfg.methods) methods.push_back(gwex::to_string(m));
  j["methods"] = methods;
  j["format"] = to_string(cfg.format);
  if (!cfg.output_path.empty()) j["out"] = cfg.output_path;
  return j;
}

SweepConfig resolve_sweep_config(const std::string& config_path,
                                 const SweepOverrides& overrides) {
  SweepConfig cfg;
  if (!config_path.empty()) {
    std::ifstream in(config_path);
    if (!in) {
      throw ConfigError("cannot read config file '" + config_path + "'");
    }
    json j;
    try {
      in >> j;
    } catch (const json::exception& e) {
      throw ConfigError("config file '" + config_path + "': " + e.what());
    }
    cfg = sweep_config_from_json(j);
  }
  if (!overrides.beta.empty()) cfg.beta_values = overrides.beta;
  if (!overrides.r.empty()) cfg.r_values = overrides.r;
  if (!overrides.lambda.empty()) cfg.lambda_values = overrides.lambda;
  if (!overrides.methods.empty()) cfg.methods = parse_methods(overrides.methods);
  if (!overrides.format.empty()) cfg.format = parse_format(overrides.format);
  if (!overrides.out.empty()) cfg.output_path = overrides.out;
  return cfg;
}

void validate_sweep_config(const SweepConfig& cfg) {
  check_list(cfg.beta_values, "beta", 0.0, /*strict=*/true);
  check_list(cfg.r_values, "r", 0.0, /*strict=*/false);
  check_list(cfg.lambda_values, "lambda", 0.0, /*strict=*/true);
  if (cfg.methods.empty()) {
    throw ConfigError("methods list must be non-empty");
  }

  bool has_oracle = std::find(cfg.methods.begin(), cfg.methods.end(),
                              WorkMethod::oracle) != cfg.methods.end();
  if (has_oracle) {
    for (double beta : cfg.beta_values) {
      double n_bar = 1.0 / std::expm1(beta);
      if (n_bar > 0.5) {
        std::ostringstream msg;
        msg << "oracle method requires n_bar <= 0.5, but beta = " << beta
            << " gives n_bar = " << n_bar << " (need beta >= ln 3)";
        throw ConfigError(msg.str());
      }
    }
    for (double r : cfg.r_values) {
      if (r > 1.5) {
        std::ostringstream msg;
        msg << "oracle method requires r <= 1.5, got r = " << r;
        throw ConfigError(msg.str());
      }
    }
  }

  bool lambda_is_unit =
      cfg.lambda_values.size() == 1 && cfg.lambda_values[0] == 1.0;
  if (!lambda_is_unit) {
    for (WorkMethod m : cfg.methods) {
      if (m != WorkMethod::exact) {
        throw ConfigError(
            "method '" + gwex::to_string(m) +
            "' is heterodyne-only (lambda = 1); lambda sweeps are limited to "
            "methods=[exact]");
      }
    }
  }
}

}  // namespace gwex::cli
