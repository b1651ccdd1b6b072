#pragma once

#include <Eigen/Dense>

#include "gwex/errors.hpp"

// Conventions used throughout: hbar = 1, vacuum quadrature variance 1/2,
// two-mode quadrature ordering (x_a, p_a, x_b, p_b).

namespace gwex {

// Two-mode symplectic form Omega in the (x_a, p_a, x_b, p_b) ordering.
Eigen::Matrix4d symplectic_form();

struct PhysicalityReport {
  bool physical;
  // Minimum eigenvalue of m + (i/2) Omega; physical iff >= -tolerance.
  double min_eigenvalue;
};

// Uncertainty-principle check on a raw matrix. Non-symmetric input is
// rejected (DomainError) before any eigen-analysis.
PhysicalityReport check_physicality(const Eigen::Matrix4d& m,
                                    double tolerance = 1e-10);
PhysicalityReport check_physicality(const Eigen::Matrix2d& m,
                                    double tolerance = 1e-10);

// Validated single-mode covariance matrix.
class SingleModeCovariance {
 public:
  explicit SingleModeCovariance(const Eigen::Matrix2d& m,
                                double tolerance = 1e-10);

  static SingleModeCovariance vacuum();
  static SingleModeCovariance thermal(double n_bar);

  const Eigen::Matrix2d& matrix() const noexcept { return m_; }
  double determinant() const { return m_.determinant(); }

 private:
  Eigen::Matrix2d m_;
};

// Validated two-mode covariance matrix.
class TwoModeCovariance {
 public:
  explicit TwoModeCovariance(const Eigen::Matrix4d& m,
                             double tolerance = 1e-10);

  const Eigen::Matrix4d& matrix() const noexcept { return m_; }
  double determinant() const { return m_.determinant(); }

  Eigen::Matrix2d block_a() const { return m_.topLeftCorner<2, 2>(); }
  Eigen::Matrix2d block_b() const { return m_.bottomRightCorner<2, 2>(); }
  Eigen::Matrix2d block_c() const { return m_.topRightCorner<2, 2>(); }

 private:
  Eigen::Matrix4d m_;
};

// Parameters of a standard-form state
//   [[a, 0, c1, 0], [0, a', 0, c2], [c1, 0, b, 0], [0, c2, 0, b']]
// with equal diagonal pairs (a' = a, b' = b).
struct StandardFormParams {
  double a;
  double b;
  double c1;
  double c2;

  bool symmetric() const noexcept { return a == b; }
};

// Assembles and validates the standard-form covariance. Throws
// UnphysicalStateError (with the offending eigenvalue) if the parameters
// violate the uncertainty bound, DomainError for out-of-domain entries.
TwoModeCovariance build_symmetric_state(const StandardFormParams& p);

// Two-mode squeezed thermal state: both modes at occupation n_bar, squeezing
// parameter r. Standard form with a = b = (n_bar+1/2) cosh 2r and
// c1 = -c2 = (n_bar+1/2) sinh 2r.
TwoModeCovariance build_tms_thermal(double n_bar, double r);

// Standard-form parameters read back from a covariance matrix; throws
// UnsupportedStateError if the matrix is not in standard form.
StandardFormParams standard_form_params(const TwoModeCovariance& sigma,
                                        double tolerance = 1e-10);

}  // namespace gwex
