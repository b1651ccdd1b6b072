#include "gwex/cli/validate.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "gwex/gwex.hpp"

namespace gwex::cli {
namespace {

struct NamedCheck {
  std::string name;
  std::function<std::pair<bool, std::string>()> run;
};

struct Grids {
  std::vector<double> oracle_nbar;
  std::vector<double> oracle_r;
  int symplectic_trials;
  int reduction_trials;
  int phases;
  std::vector<double> limit_betas;
};

Grids make_grids(bool small) {
  if (small) {
    return {{0.05, 0.3}, {0.5, 1.0}, 200, 100, 100, {10.0, 50.0}};
  }
  return {{0.0, 0.05, 0.1, 0.3},
          {0.0, 0.5, 1.0, 1.5},
          1000,
          500,
          100,
          {10.0, 20.0, 50.0, 100.0}};
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

std::pair<bool, std::string> oracle_vs_exact_work(const Grids& g,
                                                  bool mutate) {
  double worst_rel = 0.0, worst_abs = 0.0;
  for (double nb : g.oracle_nbar) {
    for (double r : g.oracle_r) {
      ThermalContext ctx = ThermalContext::from_occupation(nb);
      double w_ref = extracted_work_exact(ctx, r,
                                          GaussianMeasurement::heterodyne())
                         .w_over_hw;
      if (mutate) w_ref *= 1.0 + 1e-3;  // harness sensitivity self-check
      double w_oracle = fock::oracle_work(nb, r).w_over_hw;
      double diff = std::abs(w_oracle - w_ref);
      if (std::abs(w_ref) < 1e-6) {
        worst_abs = std::max(worst_abs, diff);
        if (diff > 1e-8) {
          return {false, "|dW| = " + fmt(diff) + " > 1e-8 at n_bar = " +
                             fmt(nb) + ", r = " + fmt(r)};
        }
      } else {
        double rel = diff / std::abs(w_ref);
        worst_rel = std::max(worst_rel, rel);
        if (rel > 1e-4) {
          return {false, "relative dW = " + fmt(rel) + " > 1e-4 at n_bar = " +
                             fmt(nb) + ", r = " + fmt(r)};
        }
      }
    }
  }
  return {true, "max relative dW = " + fmt(worst_rel) + ", max |dW| = " +
                    fmt(worst_abs) + " on " +
                    std::to_string(g.oracle_nbar.size() * g.oracle_r.size()) +
                    " grid points"};
}

std::pair<bool, std::string> outcome_independence() {
  fock::OracleConfig cfg;
  cfg.n_cut = 48;
  fock::TwoModeFockState state = fock::build_tms_thermal_fock(0.1, 1.0, cfg);
  std::vector<Eigen::Matrix2d> covs;
  for (const auto& beta : cfg.beta_samples) {
    covs.push_back(fock::heterodyne_project_b(state, beta).covariance());
  }
  double pairwise = 0.0;
  for (size_t i = 0; i < covs.size(); ++i) {
    for (size_t j = i + 1; j < covs.size(); ++j) {
      pairwise = std::max(pairwise,
                          (covs[i] - covs[j]).cwiseAbs().maxCoeff());
    }
  }
  TwoModeCovariance sigma = build_tms_thermal(0.1, 1.0);
  Eigen::Matrix2d gauss = conditional_state_after_b_measurement(
                              sigma, GaussianMeasurement::heterodyne())
                              .matrix();
  double vs_gauss = 0.0;
  for (const auto& c : covs) {
    vs_gauss = std::max(vs_gauss, (c - gauss).cwiseAbs().maxCoeff());
  }
  bool pass = pairwise < 1e-6 && vs_gauss < 1e-6;
  return {pass, "pairwise cov spread = " + fmt(pairwise) +
                    ", vs Gaussian update = " + fmt(vs_gauss)};
}

std::pair<bool, std::string> heterodyne_fixing(const Grids& g) {
  std::mt19937_64 rng(0x9e3779b97f4a7c15ull);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  TwoModeCovariance sigma = build_tms_thermal(0.2, 0.8);
  Eigen::Matrix2d ref = conditional_state_after_b_measurement(
                            sigma, GaussianMeasurement::heterodyne())
                            .matrix();
  for (int i = 0; i < g.phases; ++i) {
    double phi = angle(rng);
    GaussianMeasurement meas(1.0, phi);
    Eigen::Matrix2d cov = meas.covariance().matrix();
    bool exact = cov(0, 0) == 0.5 && cov(1, 1) == 0.5 && cov(0, 1) == 0.0 &&
                 cov(1, 0) == 0.0;
    if (!exact) {
      return {false, "apparatus covariance not exactly diag(1/2, 1/2) at "
                     "phi = " + fmt(phi)};
    }
    Eigen::Matrix2d cond =
        conditional_state_after_b_measurement(sigma, meas).matrix();
    if (cond != ref) {
      return {false, "conditional state depends on phi at lambda = 1"};
    }
  }
  return {true, std::to_string(g.phases) +
                    " random phases, apparatus and backaction exactly "
                    "phase-free"};
}

std::pair<bool, std::string> symplectic_invariance(const Grids& g) {
  std::mt19937_64 rng(0x2545f4914f6cdd1dull);
  TwoModeCovariance base = build_tms_thermal(0.3, 0.7);
  SymplecticInvariants ref = symplectic_invariants(base);
  double worst = 0.0;
  for (int i = 0; i < g.symplectic_trials; ++i) {
    Eigen::Matrix2d sa = random_local_symplectic(rng);
    Eigen::Matrix2d sb = random_local_symplectic(rng);
    TwoModeCovariance out = apply_local_symplectic(base, sa, sb);
    SymplecticInvariants inv = symplectic_invariants(out);
    double rel_det = std::abs(inv.det_sigma - ref.det_sigma) /
                     std::abs(ref.det_sigma);
    double rel_delta = std::abs(inv.delta - ref.delta) / std::abs(ref.delta);
    worst = std::max({worst, rel_det, rel_delta});
    if (rel_det > 1e-9 || rel_delta > 1e-9) {
      return {false, "invariant drift " + fmt(std::max(rel_det, rel_delta)) +
                         " > 1e-9 at trial " + std::to_string(i)};
    }
  }
  return {true, "max invariant drift = " + fmt(worst) + " over " +
                    std::to_string(g.symplectic_trials) + " local symplectics"};
}

// Random state of the symmetric class (equal diagonal blocks, opposite-sign
// correlation diagonal): both symplectic eigenvalues equal sqrt(a^2 - c^2),
// so every physical member has c^2 <= a^2 - 1/4.
StandardFormParams random_symmetric_params(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> a_dist(0.5, 5.0);
  std::uniform_real_distribution<double> u_dist(-0.999, 0.999);
  double a = a_dist(rng);
  double c = u_dist(rng) * std::sqrt(a * a - 0.25);
  return {a, a, c, -c};
}

std::pair<bool, std::string> conditional_determinant_reduction(
    const Grids& g) {
  std::mt19937_64 rng(0xda942042e4dd58b5ull);
  double worst = 0.0;
  for (int i = 0; i < g.reduction_trials; ++i) {
    StandardFormParams p = random_symmetric_params(rng);
    TwoModeCovariance sigma = build_symmetric_state(p);
    double via_invariants = conditional_determinant_invariant_form(
        symplectic_invariants(sigma), p.a);
    double direct = conditional_state_after_b_measurement(
                        sigma, GaussianMeasurement::heterodyne())
                        .determinant();
    double rel = std::abs(via_invariants - direct) / std::abs(direct);
    worst = std::max(worst, rel);
    if (rel > 1e-10) {
      return {false, "reduction mismatch " + fmt(rel) + " > 1e-10 at a = " +
                         fmt(p.a) + ", c1 = " + fmt(p.c1)};
    }
  }
  return {true, "max |det reduction - direct Schur| rel = " + fmt(worst) +
                    " over " + std::to_string(g.reduction_trials) +
                    " class states"};
}

std::pair<bool, std::string> correlation_invariant_identity(const Grids& g) {
  std::mt19937_64 rng(0x94d049bb133111ebull);
  double worst = 0.0;
  for (int i = 0; i < g.reduction_trials; ++i) {
    StandardFormParams p = random_symmetric_params(rng);
    TwoModeCovariance sigma = build_symmetric_state(p);
    SymplecticInvariants inv = symplectic_invariants(sigma);
    double lhs = 2.0 * p.a * p.a - p.c1 * p.c1 - p.c2 * p.c2;
    double err = std::abs(lhs - inv.delta) / std::max(1.0, std::abs(inv.delta));
    worst = std::max(worst, err);
    if (err > 1e-12) {
      return {false,
              "identity residue " + fmt(err) + " > 1e-12 at a = " + fmt(p.a)};
    }
  }
  return {true, "max identity residue = " + fmt(worst) + " over " +
                    std::to_string(g.reduction_trials) + " class states"};
}

std::pair<bool, std::string> work_limits(const Grids& g) {
  GaussianMeasurement het = GaussianMeasurement::heterodyne();
  // n_bar = 0 extracts nothing at any squeezing.
  for (double r : {0.5, 2.0}) {
    if (extracted_work_exact(ThermalContext::from_occupation(0.0), r, het)
            .w_over_hw != 0.0) {
      return {false, "W(n_bar = 0) != 0"};
    }
  }
  for (double beta : g.limit_betas) {
    ThermalContext ctx = ThermalContext::from_beta(beta);
    double prev = -1.0;
    for (int i = 0; i <= 30; ++i) {
      double r = 0.1 * i;
      WorkResult res = extracted_work_exact(ctx, r, het);
      if (r == 0.0 && res.w_over_hw != 0.0) {
        return {false, "W(r = 0) != 0 at beta = " + fmt(beta)};
      }
      if (res.w_over_hw < 0.0) {
        return {false, "W < 0 at beta = " + fmt(beta) + ", r = " + fmt(r)};
      }
      if (res.w_over_hw < prev) {
        return {false,
                "W not monotone in r at beta = " + fmt(beta) + ", r = " +
                    fmt(r)};
      }
      double bound = res.s_ther / ctx.beta();
      if (res.w_over_hw > bound * (1.0 + 1e-12)) {
        return {false, "W above k_B T S_ther at beta = " + fmt(beta) +
                           ", r = " + fmt(r)};
      }
      prev = res.w_over_hw;
    }
  }
  return {true, "W(0) = 0, monotone in r, 0 <= W <= k_B T S_ther on " +
                    std::to_string(g.limit_betas.size()) + " x 31 grid"};
}

std::pair<bool, std::string> discrete_comparators() {
  double xi_saturated = xi(20.0);  // 1 - 2/(1 + cosh 40), saturated to 1
  for (int i = 0; i <= 9; ++i) {
    double x = 0.1 * i;
    DiscreteCaseParams cavity{x, OmegaKind::cavity, 1};
    DiscreteCaseParams dicke{x, OmegaKind::level_spacing, 3};
    double w = discrete_number_state_work(cavity);
    if (w != x) return {false, "cavity work != x at x = " + fmt(x)};
    // The continuous-variable law at saturated xi with n_bar = x gives the
    // same number.
    if (std::abs(xi_saturated * x - w) > 1e-12) {
      return {false, "cavity work differs from saturated-xi law at x = " +
                         fmt(x)};
    }
    if (dicke_symmetrization_work(dicke) != w) {
      return {false, "Dicke work differs from cavity work at x = " + fmt(x)};
    }
  }
  return {true, "cavity == Dicke == x == saturated-xi law on x grid"};
}

std::pair<bool, std::string> low_t_error_chain() {
  const double r = 1.0;
  std::vector<double> e_mu, e_s10, e_s11, e_s13;
  GaussianMeasurement het = GaussianMeasurement::heterodyne();
  for (double beta : {10.0, 20.0, 50.0, 100.0}) {
    ThermalContext ctx = ThermalContext::from_beta(beta);
    double nb = ctx.n_bar();
    double a = (nb + 0.5) * std::cosh(2.0 * r);
    double s_meas = entropy_after_measurement_exact(ctx, r, het);
    double s_ther = entropy_thermal_exact(ctx);
    // Purity complements: 1 - mu stays resolvable long after mu itself
    // rounds to 1.
    double cmu_exact =
        2.0 * nb * (nb + 1.0) / (2.0 * (nb + 0.5) * (nb + 0.5) + a);
    double cmu_approx = 2.0 * nb / (a + 0.5);
    e_mu.push_back(std::abs(cmu_approx - cmu_exact));
    // Intermediate entropy expansion at the pure boundary,
    // S ~ u ln(1/u) - 2u with u = n_bar/(a + 1/2).
    double u = nb / (a + 0.5);
    double s10 = -u * std::log(u) - 2.0 * u;
    e_s10.push_back(std::abs(s10 - s_meas) / s_meas);
    LowTApproximations approx = low_t_approximations(ctx, r);
    e_s11.push_back(std::abs(approx.s_meas_approx - s_meas) / s_meas);
    e_s13.push_back(std::abs(approx.s_ther_approx - s_ther) / s_ther);
  }
  auto non_increasing = [](const std::vector<double>& e) {
    return std::is_sorted(e.rbegin(), e.rend());
  };
  auto strictly_decreasing = [](const std::vector<double>& e) {
    for (size_t i = 1; i < e.size(); ++i) {
      if (!(e[i] < e[i - 1])) return false;
    }
    return true;
  };
  // The purity-error sequence hits the double-precision floor (exactly 0)
  // from beta = 50 on, so it is only non-strictly decreasing.
  if (!non_increasing(e_mu)) {
    return {false, "purity approximation error not monotone in beta"};
  }
  if (!strictly_decreasing(e_s10) || !strictly_decreasing(e_s11) ||
      !strictly_decreasing(e_s13)) {
    return {false, "entropy approximation error not monotone in beta"};
  }
  return {true, "error chains at beta = {10, 20, 50, 100}: purity " +
                    fmt(e_mu.front()) + " -> " + fmt(e_mu.back()) +
                    ", conditional entropy " + fmt(e_s11.front()) + " -> " +
                    fmt(e_s11.back()) + ", thermal entropy " +
                    fmt(e_s13.front()) + " -> " + fmt(e_s13.back())};
}

std::vector<NamedCheck> make_checks(const ValidateOptions& opt) {
  Grids g = make_grids(opt.small_grid);
  bool mutate = opt.self_check_mutate;
  return {
      {"oracle_vs_exact_work",
       [g, mutate] { return oracle_vs_exact_work(g, mutate); }},
      {"outcome_independence", [] { return outcome_independence(); }},
      {"heterodyne_fixing", [g] { return heterodyne_fixing(g); }},
      {"symplectic_invariance", [g] { return symplectic_invariance(g); }},
      {"conditional_determinant_reduction",
       [g] { return conditional_determinant_reduction(g); }},
      {"correlation_invariant_identity",
       [g] { return correlation_invariant_identity(g); }},
      {"work_limits", [g] { return work_limits(g); }},
      {"discrete_comparators", [] { return discrete_comparators(); }},
      {"low_t_error_chain", [] { return low_t_error_chain(); }},
  };
}

CheckResult execute(const NamedCheck& check) {
  auto start = std::chrono::steady_clock::now();
  bool pass = false;
  std::string detail;
  try {
    std::tie(pass, detail) = check.run();
  } catch (const std::exception& e) {
    pass = false;
    detail = std::string("exception: ") + e.what();
  }
  double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return {check.name, pass, detail, seconds};
}

}  // namespace

std::vector<CheckResult> run_validation(const ValidateOptions& opt) {
  std::vector<CheckResult> results;
  for (const auto& check : make_checks(opt)) {
    results.push_back(execute(check));
  }
  return results;
}

int run_validate(const ValidateOptions& opt, std::ostream& os) {
  if (opt.self_check_mutate) {
    os << "self-check: reference work perturbed by 1e-3; validation must "
          "fail\n";
  }
  bool all_pass = true;
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& check : make_checks(opt)) {
    CheckResult res = execute(check);
    all_pass = all_pass && res.pass;
    os << (res.pass ? "pass" : "FAIL") << "  " << res.name << "  ("
       << fmt(res.seconds) << " s)  " << res.detail << "\n";
    os.flush();
    checks.push_back({{"name", res.name},
                      {"pass", res.pass},
                      {"seconds", res.seconds},
                      {"detail", res.detail}});
  }
  nlohmann::json summary = {{"schema", "gwex.validate/1"},
                            {"grid", opt.small_grid ? "small" : "full"},
                            {"mutated", opt.self_check_mutate},
                            {"all_pass", all_pass},
                            {"checks", checks}};
  os << summary.dump() << "\n";
  return all_pass ? 0 : 2;
}

}  // namespace gwex::cli
