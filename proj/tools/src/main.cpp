#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gwex/cli/config.hpp"
#include "gwex/cli/showlaw.hpp"
#include "gwex/cli/sweep.hpp"
#include "gwex/cli/validate.hpp"
#include "gwex/errors.hpp"

#ifndef GWEX_VERSION
#define GWEX_VERSION "0.0.0"
#endif

int main(int argc, char** argv) {
  using namespace gwex::cli;

  CLI::App app{"Work extraction from environment-monitored two-mode Gaussian "
               "states"};
  app.set_version_flag("--version", std::string("gwex ") + GWEX_VERSION);
  app.require_subcommand(1);

  auto* sweep = app.add_subcommand(
      "sweep", "Sweep (beta, r, lambda) x methods, emit CSV or JSON");
  SweepOverrides overrides;
  std::string config_path;
  bool echo_config = false;
  sweep->add_option("--beta", overrides.beta, "Inverse temperatures beta_a")
      ->delimiter(',');
  sweep->add_option("--r", overrides.r, "Squeezing parameters r >= 0")
      ->delimiter(',');
  sweep->add_option("--lambda", overrides.lambda,
                    "Measurement strengths (heterodyne = 1)")
      ->delimiter(',');
  sweep
      ->add_option("--methods", overrides.methods,
                   "Any of: exact, closed_form, low_t_approx, invariant_form, "
                   "oracle")
      ->delimiter(',');
  sweep->add_option("--out", overrides.out, "Output path (default: stdout)");
  sweep->add_option("--format", overrides.format, "csv (default) or json");
  sweep->add_option("--config", config_path,
                    "JSON config file; flags override its fields");
  sweep->add_flag("--echo-config", echo_config,
                  "Print the resolved config as JSON and exit");

  auto* validate = app.add_subcommand(
      "validate", "Cross-validate the Gaussian pipeline against the Fock "
                  "oracle and the invariant identities");
  std::string grid = "full";
  bool mutate = false;
  validate->add_option("--grid", grid, "full (default) or small")
      ->check(CLI::IsMember({"full", "small"}));
  validate->add_flag(
      "--self-check-mutate", mutate,
      "Perturb the reference work by 1e-3 to prove the harness notices "
      "(validation must then fail)");

  auto* law = app.add_subcommand(
      "show-law", "Print the work-equals-xi(r)-times-thermal-energy table");
  ShowLawOptions law_opt;
  law->add_option("--beta", law_opt.beta, "Inverse temperature (>= 10)");
  law->add_option("--r-max", law_opt.r_max, "Largest squeezing in the table");
  law->add_option("--steps", law_opt.steps, "Number of rows (>= 2)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;  // help/version exit 0; bad usage is a config error
  }

  try {
    if (sweep->parsed()) {
      SweepConfig cfg = resolve_sweep_config(config_path, overrides);
      validate_sweep_config(cfg);
      if (echo_config) {
        std::cout << to_json(cfg).dump(2) << "\n";
        return 0;
      }
      return run_sweep(cfg, std::cout, std::cerr);
    }
    if (validate->parsed()) {
      return run_validate({grid == "small", mutate}, std::cout);
    }
    return run_show_law(law_opt, std::cout);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 1;
  } catch (const gwex::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
