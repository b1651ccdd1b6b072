#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "gwex/cli/config.hpp"
#include "gwex/cli/format.hpp"
#include "gwex/cli/showlaw.hpp"
#include "gwex/cli/sweep.hpp"
#include "gwex/cli/validate.hpp"
#include "gwex/thermo.hpp"

using namespace gwex;
using namespace gwex::cli;

TEST_CASE("float formatting is fixed at 12 significant digits") {
  CHECK(format_g12(0.0) == "0");
  CHECK(format_g12(-0.0) == "0");
  CHECK(format_g12(1.0) == "1");
  CHECK(format_g12(1.0 / 3.0) == "0.333333333333");
  CHECK(format_g12(3.7200759760208356e-44) == "3.72007597602e-44");
  CHECK(format_g12(std::numeric_limits<double>::quiet_NaN()) == "nan");
  CHECK(format_g12(std::numeric_limits<double>::infinity()) == "inf");
}

TEST_CASE("method and format names parse and reject unknowns") {
  CHECK(parse_method("exact") == WorkMethod::exact);
  CHECK(parse_method("oracle") == WorkMethod::oracle);
  CHECK_THROWS_AS(parse_method("bogus"), ConfigError);
  CHECK(parse_format("csv") == OutputFormat::csv);
  CHECK(parse_format("json") == OutputFormat::json);
  CHECK_THROWS_AS(parse_format("xml"), ConfigError);
}

TEST_CASE("config json accepts scalars and lists, rejects unknown keys") {
  auto cfg = sweep_config_from_json(
      nlohmann::json{{"beta", 50.0}, {"r", {0.0, 1.0}}, {"methods", "exact"}});
  CHECK(cfg.beta_values == std::vector<double>{50.0});
  CHECK(cfg.r_values == std::vector<double>{0.0, 1.0});
  CHECK(cfg.methods == std::vector<WorkMethod>{WorkMethod::exact});
  CHECK(cfg.lambda_values == std::vector<double>{1.0});

  CHECK_THROWS_AS(sweep_config_from_json(nlohmann::json{{"betas", 50.0}}),
                  ConfigError);
}

TEST_CASE("config round-trips through its json echo") {
  SweepConfig cfg;
  cfg.beta_values = {20.0, 50.0};
  cfg.r_values = {0.0, 0.5, 1.0};
  cfg.lambda_values = {0.5, 1.0};
  cfg.methods = {WorkMethod::exact};
  cfg.format = OutputFormat::json;
  cfg.output_path = "out.json";

  auto back = sweep_config_from_json(to_json(cfg));
  CHECK(back.beta_values == cfg.beta_values);
  CHECK(back.r_values == cfg.r_values);
  CHECK(back.lambda_values == cfg.lambda_values);
  CHECK(back.methods == cfg.methods);
  CHECK(back.format == cfg.format);
  CHECK(back.output_path == cfg.output_path);
}

TEST_CASE("config validation enforces the supported domain") {
  SweepConfig cfg;
  cfg.beta_values = {50.0};
  cfg.r_values = {1.0};
  CHECK_NOTHROW(validate_sweep_config(cfg));

  SweepConfig empty = cfg;
  empty.r_values.clear();
  CHECK_THROWS_AS(validate_sweep_config(empty), ConfigError);

  SweepConfig neg = cfg;
  neg.beta_values = {-2.0};
  CHECK_THROWS_AS(validate_sweep_config(neg), ConfigError);

  SweepConfig negr = cfg;
  negr.r_values = {-0.5};
  CHECK_THROWS_AS(validate_sweep_config(negr), ConfigError);

  // The brute-force comparator is only offered inside its convergence
  // envelope: n_bar <= 1/2 (beta >= ln 3) and r <= 3/2.
  SweepConfig hot = cfg;
  hot.methods = {WorkMethod::oracle};
  hot.beta_values = {1.0};
  CHECK_THROWS_AS(validate_sweep_config(hot), ConfigError);

  SweepConfig deep = cfg;
  deep.methods = {WorkMethod::oracle};
  deep.r_values = {2.0};
  CHECK_THROWS_AS(validate_sweep_config(deep), ConfigError);

  SweepConfig inside = cfg;
  inside.methods = {WorkMethod::oracle};
  inside.beta_values = {2.0};
  inside.r_values = {1.5};
  CHECK_NOTHROW(validate_sweep_config(inside));

  // Apparatus sweeps away from lambda = 1 are exact-method only.
  SweepConfig lam = cfg;
  lam.lambda_values = {0.5};
  lam.methods = {WorkMethod::exact, WorkMethod::closed_form};
  CHECK_THROWS_AS(validate_sweep_config(lam), ConfigError);
  lam.methods = {WorkMethod::exact};
  CHECK_NOTHROW(validate_sweep_config(lam));
}

TEST_CASE("sweep rows agree across methods at low temperature") {
  SweepConfig cfg;
  cfg.beta_values = {50.0};
  cfg.r_values = {1.0};
  cfg.methods = {WorkMethod::exact, WorkMethod::closed_form};
  std::vector<std::string> notes;
  auto rows = compute_sweep(cfg, notes);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].method == WorkMethod::exact);
  CHECK(rows[1].method == WorkMethod::closed_form);
  CHECK_FALSE(rows[0].failed);
  double rel = std::abs(rows[0].w_over_hw - rows[1].w_over_hw) /
               std::abs(rows[0].w_over_hw);
  CHECK(rel < 0.02);
  CHECK(rows[0].xi_r == doctest::Approx(xi(1.0)).epsilon(1e-15));
  CHECK(rows[0].n_bar == doctest::Approx(occupation(50.0)).epsilon(1e-15));
}

TEST_CASE("zero squeezing yields zero work for every method") {
  SweepConfig cfg;
  cfg.beta_values = {5.0};
  cfg.r_values = {0.0};
  cfg.methods = {WorkMethod::exact, WorkMethod::closed_form,
                 WorkMethod::low_t_approx, WorkMethod::invariant_form,
                 WorkMethod::oracle};
  std::vector<std::string> notes;
  auto rows = compute_sweep(cfg, notes);
  REQUIRE(rows.size() == 5);
  for (const auto& row : rows) {
    CHECK_FALSE(row.failed);
    CHECK(std::abs(row.w_over_hw) <= 1e-12);
  }
}

TEST_CASE("row order is the nested input order") {
  SweepConfig cfg;
  cfg.beta_values = {20.0, 10.0};
  cfg.r_values = {1.0, 0.5};
  cfg.methods = {WorkMethod::exact};
  std::vector<std::string> notes;
  auto rows = compute_sweep(cfg, notes);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].beta == 20.0);
  CHECK(rows[0].r == 1.0);
  CHECK(rows[1].r == 0.5);
  CHECK(rows[2].beta == 10.0);
}

TEST_CASE("csv output is deterministic with the pinned header") {
  SweepConfig cfg;
  cfg.beta_values = {50.0, 5.0};
  cfg.r_values = {0.0, 1.0};
  std::vector<std::string> notes;
  auto rows = compute_sweep(cfg, notes);

  std::ostringstream a, b;
  write_rows_csv(a, rows);
  write_rows_csv(b, rows);
  CHECK(a.str() == b.str());
  CHECK(a.str().substr(0, a.str().find('\n')) ==
        "beta,n_bar,r,lambda,xi,s_ther,s_meas,w_over_hw,method");

  auto again = compute_sweep(cfg, notes);
  std::ostringstream c;
  write_rows_csv(c, again);
  CHECK(a.str() == c.str());
}

TEST_CASE("json output carries schema, metadata and config") {
  SweepConfig cfg;
  cfg.beta_values = {50.0};
  cfg.r_values = {1.0};
  cfg.format = OutputFormat::json;
  std::vector<std::string> notes;
  auto rows = compute_sweep(cfg, notes);
  std::ostringstream os;
  write_rows_json(os, cfg, rows, notes);

  auto doc = nlohmann::json::parse(os.str());
  CHECK(doc["schema"] == "gwex.sweep/1");
  CHECK(doc["metadata"]["tool"] == "gwex");
  std::string conv = doc["metadata"]["convention"];
  CHECK(conv.find("vacuum variance 1/2") != std::string::npos);
  REQUIRE(doc["rows"].size() == rows.size());
  CHECK(doc["rows"][0]["failed"] == false);
  CHECK(doc["rows"][0]["method"] == "exact");
  CHECK(doc["config"]["beta"][0] == 50.0);
}

TEST_CASE("run_sweep writes to the fallback stream and reports success") {
  SweepConfig cfg;
  cfg.beta_values = {50.0};
  cfg.r_values = {0.5};
  std::ostringstream out, err;
  CHECK(run_sweep(cfg, out, err) == 0);
  CHECK(out.str().rfind("beta,", 0) == 0);
}

TEST_CASE("law table ends on the saturated ratio") {
  std::ostringstream os;
  CHECK(run_show_law({100.0, 3.0, 7}, os) == 0);
  std::string text = os.str();

  std::vector<std::string> lines;
  std::istringstream is(text);
  for (std::string l; std::getline(is, l);) {
    if (!l.empty() && l[0] != '#') lines.push_back(l);
  }
  REQUIRE(lines.size() == 8);  // header + 7 rows

  // r = 0 row carries dashes in the ratio columns.
  CHECK(lines[1].find('-') != std::string::npos);

  std::istringstream last(lines.back());
  double r, xi_col, en, wn, ratio, band;
  last >> r >> xi_col >> en >> wn >> ratio >> band;
  CHECK(r == doctest::Approx(3.0));
  CHECK(xi_col == doctest::Approx(xi(3.0)).epsilon(1e-7));
  CHECK(en == doctest::Approx(6.0).epsilon(1e-6));
  CHECK(ratio == doctest::Approx(1.0095397810456246).epsilon(1e-8));
  CHECK(std::abs(ratio - 1.0) < band * 1.2);

  std::ostringstream sink;
  CHECK_THROWS_AS(run_show_law({5.0, 3.0, 7}, sink), ConfigError);
  CHECK_THROWS_AS(run_show_law({100.0, 3.0, 1}, sink), ConfigError);
  CHECK_THROWS_AS(run_show_law({100.0, -1.0, 7}, sink), ConfigError);
}

TEST_CASE("validation passes on the small grid") {
  auto results = run_validation(ValidateOptions{.small_grid = true});
  REQUIRE(results.size() == 9);
  for (const auto& res : results) {
    INFO(res.name, ": ", res.detail);
    CHECK(res.pass);
  }
  auto has = [&](const char* name) {
    return std::any_of(results.begin(), results.end(),
                       [&](const CheckResult& c) { return c.name == name; });
  };
  CHECK(has("oracle_vs_exact_work"));
  CHECK(has("outcome_independence"));
  CHECK(has("heterodyne_fixing"));
  CHECK(has("symplectic_invariance"));
  CHECK(has("conditional_determinant_reduction"));
  CHECK(has("correlation_invariant_identity"));
  CHECK(has("work_limits"));
  CHECK(has("discrete_comparators"));
  CHECK(has("low_t_error_chain"));
}

TEST_CASE("a perturbed reference makes validation fail") {
  auto results =
      run_validation(ValidateOptions{.small_grid = true, .self_check_mutate = true});
  bool oracle_failed = false;
  for (const auto& res : results) {
    if (res.name == "oracle_vs_exact_work") oracle_failed = !res.pass;
  }
  CHECK(oracle_failed);

  std::ostringstream os;
  CHECK(run_validate(ValidateOptions{.small_grid = true, .self_check_mutate = true},
                     os) == 2);
  CHECK(run_validate(ValidateOptions{.small_grid = true}, os) == 0);
}
