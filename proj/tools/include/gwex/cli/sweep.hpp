#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "gwex/cli/config.hpp"

namespace gwex::cli {

struct SweepRow {
  double beta;
  double n_bar;
  double r;
  double lambda;
  double xi_r;
  double s_ther;
  double s_meas;
  double w_over_hw;
  WorkMethod method;
  bool failed = false;
  std::string error;
};

// One row per (beta, r, lambda, method), nested in input order. Failed rows
// (oracle convergence and the like) carry nan result cells and the error
// message; warnings are collected into notes, deduplicated.
std::vector<SweepRow> compute_sweep(const SweepConfig& cfg,
                                    std::vector<std::string>& notes);

void write_rows_csv(std::ostream& os, const std::vector<SweepRow>& rows);
void write_rows_json(std::ostream& os, const SweepConfig& cfg,
                     const std::vector<SweepRow>& rows,
                     const std::vector<std::string>& notes);

// Computes, writes to cfg.output_path (or fallback_out when empty), reports
// notes and failed rows on err. Returns 0, or 2 if any row failed.
int run_sweep(const SweepConfig& cfg, std::ostream& fallback_out,
              std::ostream& err);

}  // namespace gwex::cli
