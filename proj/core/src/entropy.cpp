#include "gwex/entropy.hpp"

#include <cmath>

namespace gwex {
namespace {

double purity_from_det(double det, double mode_factor, const char* who) {
  if (!(det > 0.0)) {
    throw DomainError(std::string(who) + ": non-positive determinant");
  }
  double mu = 1.0 / (mode_factor * std::sqrt(det));
  if (mu > 1.0) {
    if (mu <= 1.0 + 1e-9) return 1.0;  // rounding at the pure boundary
    throw UnphysicalStateError(std::string(who) + ": purity above 1", mu);
  }
  return mu;
}

}  // namespace

double purity(const SingleModeCovariance& sigma) {
  return purity_from_det(sigma.determinant(), 2.0, "purity");
}

double purity(const TwoModeCovariance& sigma) {
  return purity_from_det(sigma.determinant(), 4.0, "purity");
}

double von_neumann_entropy(double mu) {
  if (!(mu > 0.0) || mu > 1.0 + 1e-9) {
    throw DomainError("von_neumann_entropy: mu must be in (0, 1]");
  }
  if (mu > 1.0 - 1e-12) return 0.0;
  return (1.0 - mu) / (2.0 * mu) * std::log((1.0 + mu) / (1.0 - mu)) +
         std::log((1.0 + mu) / (2.0 * mu));
}

double von_neumann_entropy_from_nu(double nu) {
  if (!(nu >= 0.5 - 1e-12) || !std::isfinite(nu)) {
    throw DomainError("von_neumann_entropy_from_nu: nu must be >= 1/2");
  }
  double x = nu - 0.5;
  if (x <= 0.0) return 0.0;
  return (nu + 0.5) * std::log(nu + 0.5) - x * std::log(x);
}

double thermal_entropy(double n_occupation) {
  if (!(n_occupation >= 0.0) || !std::isfinite(n_occupation)) {
    throw DomainError("thermal_entropy: occupation must be >= 0 and finite");
  }
  if (n_occupation == 0.0) return 0.0;
  return (n_occupation + 1.0) * std::log1p(n_occupation) -
         n_occupation * std::log(n_occupation);
}

}  // namespace gwex
