#include "gwex/measurement.hpp"

#include <cmath>

namespace gwex {

GaussianMeasurement::GaussianMeasurement(double lambda, double phi)
    : lambda_(lambda), phi_(phi) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw DomainError("GaussianMeasurement: lambda must be finite and > 0");
  }
  if (!std::isfinite(phi)) {
    throw DomainError("GaussianMeasurement: phi must be finite");
  }
}

Eigen::Matrix2d rotation(double phi) {
  double c = std::cos(phi);
  double s = std::sin(phi);
  Eigen::Matrix2d r;
  r << c, -s, s, c;
  return r;
}

SingleModeCovariance GaussianMeasurement::covariance() const {
  if (lambda_ == 1.0) {
    // R diag(1/2, 1/2) R^T == diag(1/2, 1/2) identically; skip the trig so
    // the heterodyne apparatus is exact for every phi.
    return SingleModeCovariance(0.5 * Eigen::Matrix2d::Identity());
  }
  Eigen::Matrix2d d = Eigen::Matrix2d::Zero();
  d(0, 0) = 0.5 * lambda_;
  d(1, 1) = 0.5 / lambda_;
  Eigen::Matrix2d r = rotation(phi_);
  return SingleModeCovariance(r * d * r.transpose());
}

SingleModeCovariance conditional_state_after_b_measurement(
    const TwoModeCovariance& sigma, const GaussianMeasurement& meas) {
  Eigen::Matrix2d a = sigma.block_a();
  Eigen::Matrix2d c = sigma.block_c();
  Eigen::Matrix2d m = sigma.block_b() + meas.covariance().matrix();

  // 2x2 inverse by adjugate, accumulated in long double: the subtraction
  // below cancels almost all digits when the conditional state is nearly
  // pure (e.g. strongly squeezed pure inputs collapse to vacuum).
  long double m00 = m(0, 0), m01 = m(0, 1), m10 = m(1, 0), m11 = m(1, 1);
  long double det = m00 * m11 - m01 * m10;
  if (!(det > 0.0L)) {
    throw UnphysicalStateError(
        "conditional_state_after_b_measurement: singular sigma_b + gamma",
        static_cast<double>(det));
  }
  long double i00 = m11 / det, i01 = -m01 / det;
  long double i10 = -m10 / det, i11 = m00 / det;

  long double c00 = c(0, 0), c01 = c(0, 1), c10 = c(1, 0), c11 = c(1, 1);
  // c * m^{-1} * c^T, upper triangle then mirror (exactly symmetric output).
  long double t00 = c00 * i00 + c01 * i10, t01 = c00 * i01 + c01 * i11;
  long double t10 = c10 * i00 + c11 * i10, t11 = c10 * i01 + c11 * i11;
  long double s00 = a(0, 0) - (t00 * c00 + t01 * c01);
  long double s01 = a(0, 1) - (t00 * c10 + t01 * c11);
  long double s11 = a(1, 1) - (t10 * c10 + t11 * c11);

  Eigen::Matrix2d out;
  out << static_cast<double>(s00), static_cast<double>(s01),
      static_cast<double>(s01), static_cast<double>(s11);
  return SingleModeCovariance(out);
}

}  // namespace gwex
