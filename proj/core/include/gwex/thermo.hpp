#pragma once

#include <string>

#include "gwex/covariance.hpp"
#include "gwex/entropy.hpp"
#include "gwex/measurement.hpp"

namespace gwex {

// Bath described by inverse temperature beta_a = hbar w / (k_B T) and the
// matching Bose occupation n_bar = 1/(e^{beta_a} - 1). Work values are
// reported in units of hbar w (per quantum).
class ThermalContext {
 public:
  static ThermalContext from_beta(double beta_a);
  // n_bar = 0 is accepted as the zero-temperature limit (beta_a = +inf).
  static ThermalContext from_occupation(double n_bar);

  double beta() const noexcept { return beta_; }
  double n_bar() const noexcept { return n_bar_; }
  bool zero_temperature() const noexcept { return n_bar_ == 0.0; }

 private:
  ThermalContext(double beta_a, double n_bar) : beta_(beta_a), n_bar_(n_bar) {}

  double beta_;
  double n_bar_;
};

// Bose occupation 1/(e^beta - 1) for finite beta > 0, via expm1.
double occupation(double beta_a);

// Work-efficiency factor xi(r) = 1 - 2/(1 + cosh 2r), in [0, 1).
double xi(double r);

enum class WorkMethod { exact, closed_form, low_t_approx, invariant_form, oracle };

std::string to_string(WorkMethod method);

struct WorkResult {
  double w_over_hw;  // extracted work per quantum hbar w
  double s_meas;     // post-measurement conditional entropy (nats)
  double s_ther;     // thermal entropy of the unmeasured mode (nats)
  WorkMethod method;
  std::string warning;  // empty when the inputs are inside the validity window
};

// Occupation of mode a conditioned on a general-dyne measurement of mode b
// of the squeezed thermal state (n_bar, r). Phase-independent for this
// family. Evaluated through the cancellation-free form
//   n_c = delta / (nu + 1/2),  nu = sqrt(1/4 + delta),
//   delta = n_bar (n_bar+1) (z + 1/4 + a tau) / (a^2 + a tau + 1/4),
// with z = (n_bar+1/2)^2, a = (n_bar+1/2) cosh 2r and
// tau = lambda/2 + 1/(2 lambda), so it stays accurate when the purity
// rounds to 1 (beta >~ 36).
double conditional_occupation(const ThermalContext& ctx, double r,
                              const GaussianMeasurement& meas);

// S(sigma_a^cond) for the squeezed thermal state at the context occupation.
double entropy_after_measurement_exact(const ThermalContext& ctx, double r,
                                       const GaussianMeasurement& meas);

// Thermal entropy of one mode at the context occupation.
double entropy_thermal_exact(const ThermalContext& ctx);

// Exact extracted work W/hbar w = (S_ther - S_meas)/beta_a. r = 0 and
// zero-temperature contexts return exactly zero work.
WorkResult extracted_work_exact(const ThermalContext& ctx, double r,
                                const GaussianMeasurement& meas);

// Leading low-temperature closed form W/hbar w = xi(r) n_bar, with the
// matching entropy approximations S_ther ~ n_bar beta, S_meas ~ (1-xi) n_bar
// beta. Sets a warning (never an error) outside the validity window
// beta >= 10, r <= beta/10.
WorkResult extracted_work_closed_form(const ThermalContext& ctx, double r);

struct LowTApproximations {
  double mu1_approx;     // conditional purity, leading order
  double s_meas_approx;  // conditional entropy, leading order
  double s_ther_approx;  // thermal entropy, leading order
};

// Leading-order expansions for beta >> 1:
//   mu1 ~ 1 - 2 n_bar / (a + 1/2),       a = (n_bar+1/2) cosh 2r,
//   s_meas ~ n_bar beta (1 - xi(r)) = 2 n_bar beta / (1 + cosh 2r),
//   s_ther ~ n_bar beta.
LowTApproximations low_t_approximations(const ThermalContext& ctx, double r);

// Work from the invariant-form reduction for symmetric standard-form states
// (equal diagonal blocks, opposite-sign correlation diagonal) under
// heterodyne: mu_cond = (a + 1/2)/(delta + a). Checks class membership and
// consistency between the state and the context (throws
// UnsupportedStateError / InconsistentContextError).
WorkResult extracted_work_invariant_form(const TwoModeCovariance& sigma,
                                         const ThermalContext& ctx);

// Finite-dimensional comparator cases.
enum class OmegaKind { cavity, level_spacing };

struct DiscreteCaseParams {
  double x;             // Boltzmann weight e^{-beta}, in [0, 1)
  OmegaKind omega_kind;
  int n_particles = 1;
};

// Work per quantum for the projective number-state measurement of a
// two-level cavity pair: W/hbar w = x.
double discrete_number_state_work(const DiscreteCaseParams& p);

// Work per quantum for the symmetrized (Dicke) n-particle variant:
// identical leading behavior, W/hbar w = x, requires n_particles >= 2.
double dicke_symmetrization_work(const DiscreteCaseParams& p);

}  // namespace gwex
