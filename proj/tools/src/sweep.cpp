#include "gwex/cli/sweep.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <ostream>

#include "gwex/cli/format.hpp"
#include "gwex/fock.hpp"

#ifndef GWEX_VERSION
#define GWEX_VERSION "0.0.0"
#endif

namespace gwex::cli {
namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

WorkResult evaluate(WorkMethod method, const ThermalContext& ctx, double r,
                    double lambda) {
  switch (method) {
    case WorkMethod::exact:
      return extracted_work_exact(ctx, r, GaussianMeasurement(lambda, 0.0));
    case WorkMethod::closed_form:
      return extracted_work_closed_form(ctx, r);
    case WorkMethod::low_t_approx: {
      LowTApproximations approx = low_t_approximations(ctx, r);
      double w = ctx.zero_temperature()
                     ? 0.0
                     : (approx.s_ther_approx - approx.s_meas_approx) /
                           ctx.beta();
      std::string warning;
      if (ctx.beta() < 10.0) {
        warning = "low_t_approx derived for beta_a >= 10; smaller beta_a is "
                  "outside the validity window";
      }
      return {w, approx.s_meas_approx, approx.s_ther_approx,
              WorkMethod::low_t_approx, warning};
    }
    case WorkMethod::invariant_form:
      return extracted_work_invariant_form(build_tms_thermal(ctx.n_bar(), r),
                                           ctx);
    case WorkMethod::oracle:
      return fock::oracle_work(ctx.n_bar(), r);
  }
  throw DomainError("evaluate: unknown WorkMethod");
}

}  // namespace

std::vector<SweepRow> compute_sweep(const SweepConfig& cfg,
                                    std::vector<std::string>& notes) {
  auto add_note = [&notes](const std::string& n) {
    if (std::find(notes.begin(), notes.end(), n) == notes.end()) {
      notes.push_back(n);
    }
  };

  std::vector<SweepRow> rows;
  rows.reserve(cfg.beta_values.size() * cfg.r_values.size() *
               cfg.lambda_values.size() * cfg.methods.size());
  for (double beta : cfg.beta_values) {
    ThermalContext ctx = ThermalContext::from_beta(beta);
    for (double r : cfg.r_values) {
      for (double lambda : cfg.lambda_values) {
        if (lambda != 1.0) {
          add_note("rows with lambda != 1 describe a counterfactual "
                   "apparatus; environmental monitoring is lambda = 1");
        }
        for (WorkMethod method : cfg.methods) {
          SweepRow row{beta, ctx.n_bar(), r,    lambda, xi(r),
                       kNan, kNan,        kNan, method};
          try {
            WorkResult res = evaluate(method, ctx, r, lambda);
            row.s_ther = res.s_ther;
            row.s_meas = res.s_meas;
            row.w_over_hw = res.w_over_hw;
            if (!res.warning.empty()) add_note(res.warning);
          } catch (const Error& e) {
            row.failed = true;
            row.error = e.what();
          }
          rows.push_back(std::move(row));
        }
      }
    }
  }
  return rows;
}

void write_rows_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
  os << "beta,n_bar,r,lambda,xi,s_ther,s_meas,w_over_hw,method\n";
  for (const auto& row : rows) {
    os << format_g12(row.beta) << ',' << format_g12(row.n_bar) << ','
       << format_g12(row.r) << ',' << format_g12(row.lambda) << ','
       << format_g12(row.xi_r) << ',' << format_g12(row.s_ther) << ','
       << format_g12(row.s_meas) << ',' << format_g12(row.w_over_hw) << ','
       << gwex::to_string(row.method) << '\n';
  }
}

void write_rows_json(std::ostream& os, const SweepConfig& cfg,
                     const std::vector<SweepRow>& rows,
                     const std::vector<std::string>& notes) {
  nlohmann::json doc;
  doc["schema"] = "gwex.sweep/1";
  doc["metadata"] = {
      {"tool", "gwex"},
      {"version", GWEX_VERSION},
      {"convention",
       "vacuum variance 1/2, entropies in nats, work in units of hbar "
       "omega_a"}};
  doc["config"] = to_json(cfg);
  doc["notes"] = notes;
  nlohmann::json out_rows = nlohmann::json::array();
  for (const auto& row : rows) {
    nlohmann::json r = {
        {"beta", row.beta},       {"n_bar", row.n_bar},
        {"r", row.r},             {"lambda", row.lambda},
        {"xi", row.xi_r},         {"s_ther", row.s_ther},
        {"s_meas", row.s_meas},   {"w_over_hw", row.w_over_hw},
        {"method", gwex::to_string(row.method)}, {"failed", row.failed}};
    if (row.failed) r["error"] = row.error;
    out_rows.push_back(std::move(r));
  }
  doc["rows"] = std::move(out_rows);
  os << doc.dump(2) << '\n';
}

int run_sweep(const SweepConfig& cfg, std::ostream& fallback_out,
              std::ostream& err) {
  std::vector<std::string> notes;
  std::vector<SweepRow> rows = compute_sweep(cfg, notes);

  std::ofstream file;
  if (!cfg.output_path.empty()) {
    file.open(cfg.output_path);
    if (!file) {
      throw ConfigError("cannot open output path '" + cfg.output_path + "'");
    }
  }
  std::ostream& os = cfg.output_path.empty() ? fallback_out : file;
  if (cfg.format == OutputFormat::csv) {
    write_rows_csv(os, rows);
  } else {
    write_rows_json(os, cfg, rows, notes);
  }
  os.flush();

  for (const auto& n : notes) err << "note: " << n << '\n';
  int failed = 0;
  for (const auto& row : rows) {
    if (!row.failed) continue;
    ++failed;
    err << "error: row (beta=" << format_g12(row.beta)
        << ", r=" << format_g12(row.r)
        << ", lambda=" << format_g12(row.lambda)
        << ", method=" << gwex::to_string(row.method)
        << ") failed: " << row.error << '\n';
  }
  if (failed > 0) {
    err << failed << " of " << rows.size() << " rows failed\n";
    return 2;
  }
  return 0;
}

}  // namespace gwex::cli
