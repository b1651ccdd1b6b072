#pragma once

#include <Eigen/Dense>

#include "gwex/covariance.hpp"

namespace gwex {

// General-dyne Gaussian measurement of a single mode, parameterized by the
// apparatus squeezing lambda > 0 and phase phi. lambda = 1 is heterodyne
// (coherent-state projection); lambda -> 0 or infinity approaches homodyne.
class GaussianMeasurement {
 public:
  GaussianMeasurement(double lambda, double phi);

  static GaussianMeasurement heterodyne(double phi = 0.0) {
    return GaussianMeasurement(1.0, phi);
  }

  double lambda() const noexcept { return lambda_; }
  double phi() const noexcept { return phi_; }

  // Apparatus covariance R(phi) diag(lambda/2, 1/(2 lambda)) R(phi)^T.
  // For lambda = 1 this is diag(1/2, 1/2) for every phi, returned exactly.
  SingleModeCovariance covariance() const;

 private:
  double lambda_;
  double phi_;
};

// Rotation matrix [[cos phi, -sin phi], [sin phi, cos phi]].
Eigen::Matrix2d rotation(double phi);

// Covariance of mode a after a general-dyne measurement of mode b:
//   sigma_a - C (sigma_b + gamma)^{-1} C^T
// with gamma the apparatus covariance. Outcome-independent, as for every
// Gaussian measurement. The subtraction loses up to |sigma|^2/|result|
// relative digits for strongly squeezed inputs, so the Schur complement is
// accumulated in extended precision.
SingleModeCovariance conditional_state_after_b_measurement(
    const TwoModeCovariance& sigma, const GaussianMeasurement& meas);

}  // namespace gwex
