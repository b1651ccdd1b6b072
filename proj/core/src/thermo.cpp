#include "gwex/thermo.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "gwex/symplectic.hpp"

namespace gwex {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_r(double r, const char* who) {
  if (!(r >= 0.0) || !std::isfinite(r)) {
    throw DomainError(std::string(who) + ": r must be >= 0 and finite");
  }
}

// Purity deficit det(sigma_cond) - 1/4 for the squeezed thermal family under
// a general-dyne apparatus, factored so nothing cancels: every term is a
// product of non-negative quantities. tau = lambda/2 + 1/(2 lambda) >= 1.
double conditional_purity_deficit(double n_bar, double r, double tau) {
  double z = (n_bar + 0.5) * (n_bar + 0.5);
  double a = (n_bar + 0.5) * std::cosh(2.0 * r);
  double denom = a * a + a * tau + 0.25;
  return n_bar * (n_bar + 1.0) * (z + 0.25 + a * tau) / denom;
}

}  // namespace

ThermalContext ThermalContext::from_beta(double beta_a) {
  if (!(beta_a > 0.0) || !std::isfinite(beta_a)) {
    throw DomainError("ThermalContext::from_beta: beta_a must be finite, > 0");
  }
  return ThermalContext(beta_a, 1.0 / std::expm1(beta_a));
}

ThermalContext ThermalContext::from_occupation(double n_bar) {
  if (!(n_bar >= 0.0) || !std::isfinite(n_bar)) {
    throw DomainError(
        "ThermalContext::from_occupation: n_bar must be >= 0 and finite");
  }
  if (n_bar == 0.0) return ThermalContext(kInf, 0.0);  // zero-temperature
  return ThermalContext(std::log1p(1.0 / n_bar), n_bar);
}

double occupation(double beta_a) {
  if (!(beta_a > 0.0) || !std::isfinite(beta_a)) {
    throw DomainError("occupation: beta_a must be finite and > 0");
  }
  return 1.0 / std::expm1(beta_a);
}

double xi(double r) {
  require_r(r, "xi");
  return 1.0 - 2.0 / (1.0 + std::cosh(2.0 * r));
}

std::string to_string(WorkMethod method) {
  switch (method) {
    case WorkMethod::exact: return "exact";
    case WorkMethod::closed_form: return "closed_form";
    case WorkMethod::low_t_approx: return "low_t_approx";
    case WorkMethod::invariant_form: return "invariant_form";
    case WorkMethod::oracle: return "oracle";
  }
  throw DomainError("to_string: unknown WorkMethod");
}

double conditional_occupation(const ThermalContext& ctx, double r,
                              const GaussianMeasurement& meas) {
  require_r(r, "conditional_occupation");
  if (ctx.zero_temperature()) return 0.0;
  if (r == 0.0) return ctx.n_bar();  // product state: measurement is a no-op
  double tau = 0.5 * meas.lambda() + 0.5 / meas.lambda();
  double delta = conditional_purity_deficit(ctx.n_bar(), r, tau);
  double nu = std::sqrt(0.25 + delta);
  return delta / (nu + 0.5);
}

double entropy_after_measurement_exact(const ThermalContext& ctx, double r,
                                       const GaussianMeasurement& meas) {
  return thermal_entropy(conditional_occupation(ctx, r, meas));
}

double entropy_thermal_exact(const ThermalContext& ctx) {
  return thermal_entropy(ctx.n_bar());
}

WorkResult extracted_work_exact(const ThermalContext& ctx, double r,
                                const GaussianMeasurement& meas) {
  require_r(r, "extracted_work_exact");
  if (ctx.zero_temperature()) {
    return {0.0, 0.0, 0.0, WorkMethod::exact, ""};
  }
  double s_ther = entropy_thermal_exact(ctx);
  if (r == 0.0) {
    return {0.0, s_ther, s_ther, WorkMethod::exact, ""};
  }
  double s_meas = entropy_after_measurement_exact(ctx, r, meas);
  return {(s_ther - s_meas) / ctx.beta(), s_meas, s_ther, WorkMethod::exact,
          ""};
}

WorkResult extracted_work_closed_form(const ThermalContext& ctx, double r) {
  require_r(r, "extracted_work_closed_form");
  if (ctx.zero_temperature()) {
    return {0.0, 0.0, 0.0, WorkMethod::closed_form, ""};
  }
  std::string warning;
  if (ctx.beta() < 10.0) {
    warning = "closed form derived for beta_a >> 1; beta_a < 10 is outside "
              "the validity window";
  } else if (r > 0.1 * ctx.beta()) {
    warning = "closed form assumes r << beta_a; r > beta_a/10 is outside "
              "the validity window";
  }
  double nb = ctx.n_bar();
  double s_ther = nb * ctx.beta();
  double s_meas = 2.0 * nb * ctx.beta() / (1.0 + std::cosh(2.0 * r));
  return {xi(r) * nb, s_meas, s_ther, WorkMethod::closed_form, warning};
}

LowTApproximations low_t_approximations(const ThermalContext& ctx, double r) {
  require_r(r, "low_t_approximations");
  if (ctx.zero_temperature()) return {1.0, 0.0, 0.0};
  double nb = ctx.n_bar();
  double a = (nb + 0.5) * std::cosh(2.0 * r);
  return {1.0 - 2.0 * nb / (a + 0.5),
          2.0 * nb * ctx.beta() / (1.0 + std::cosh(2.0 * r)),
          nb * ctx.beta()};
}

WorkResult extracted_work_invariant_form(const TwoModeCovariance& sigma,
                                         const ThermalContext& ctx) {
  auto p = standard_form_params(sigma);  // throws if not standard form
  double scale = std::max({1.0, std::abs(p.a), std::abs(p.c1)});
  if (std::abs(p.a - p.b) > 1e-8 * scale) {
    throw UnsupportedStateError(
        "extracted_work_invariant_form: diagonal blocks differ (reduction "
        "requires a symmetric state)");
  }
  auto inv = symplectic_invariants(sigma);
  // For a = b and c2 = -c1, det sigma == (delta/2)^2; this fingerprint
  // rejects states outside the class the reduction is derived for.
  double half_delta = 0.5 * inv.delta;
  if (std::abs(inv.det_sigma - half_delta * half_delta) >
      1e-8 * std::max(1.0, std::abs(inv.det_sigma))) {
    throw UnsupportedStateError(
        "extracted_work_invariant_form: correlation diagonal is not "
        "opposite-signed (det sigma != (delta/2)^2)");
  }
  // Class states have delta/2 = (n_bar + 1/2)^2; the context must agree.
  double z_ctx = (ctx.n_bar() + 0.5) * (ctx.n_bar() + 0.5);
  if (std::abs(half_delta - z_ctx) > 1e-6 * std::max(1.0, z_ctx)) {
    std::ostringstream msg;
    msg << "extracted_work_invariant_form: context occupation " << ctx.n_bar()
        << " inconsistent with state invariant delta/2 = " << half_delta;
    throw InconsistentContextError(msg.str());
  }

  std::string warning;
  if (!ctx.zero_temperature() && ctx.n_bar() < 1e-8) {
    warning = "invariant reduction is precision-limited for n_bar << 1e-8; "
              "prefer the exact method";
  }
  // Heterodyne conditional purity mu = (a + 1/2)/(delta + a), hence
  // occupation n_c = (delta - 1/2)/(2 (a + 1/2)).
  double n_c = std::max(0.0, (inv.delta - 0.5) / (2.0 * (p.a + 0.5)));
  double s_meas = thermal_entropy(n_c);
  double s_ther = entropy_thermal_exact(ctx);
  double w = ctx.zero_temperature() ? 0.0 : (s_ther - s_meas) / ctx.beta();
  return {w, s_meas, s_ther, WorkMethod::invariant_form, warning};
}

double discrete_number_state_work(const DiscreteCaseParams& p) {
  if (!(p.x >= 0.0) || !(p.x < 1.0)) {
    throw DomainError("discrete_number_state_work: x must be in [0, 1)");
  }
  if (p.omega_kind != OmegaKind::cavity) {
    throw DomainError(
        "discrete_number_state_work: defined for the cavity spectrum");
  }
  return p.x;
}

double dicke_symmetrization_work(const DiscreteCaseParams& p) {
  if (!(p.x >= 0.0) || !(p.x < 1.0)) {
    throw DomainError("dicke_symmetrization_work: x must be in [0, 1)");
  }
  if (p.omega_kind != OmegaKind::level_spacing) {
    throw DomainError(
        "dicke_symmetrization_work: defined for the level-spacing spectrum");
  }
  if (p.n_particles < 2) {
    throw DomainError("dicke_symmetrization_work: needs n_particles >= 2");
  }
  return p.x;
}

}  // namespace gwex
