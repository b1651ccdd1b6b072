#include "gwex/covariance.hpp"

#include <cmath>
#include <complex>
#include <sstream>

namespace gwex {
namespace {

using complexd = std::complex<double>;

bool is_symmetric(const Eigen::Ref<const Eigen::MatrixXd>& m, double tol) {
  double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  return (m - m.transpose()).cwiseAbs().maxCoeff() <= tol * scale;
}

void require_finite(const Eigen::Ref<const Eigen::MatrixXd>& m,
                    const char* who) {
  if (!m.allFinite()) {
    throw DomainError(std::string(who) + ": non-finite entry");
  }
}

template <int N>
PhysicalityReport physicality_impl(const Eigen::Matrix<double, N, N>& m,
                                   const Eigen::Matrix<double, N, N>& omega,
                                   double tolerance) {
  require_finite(m, "check_physicality");
  if (!is_symmetric(m, 1e-12)) {
    throw DomainError("check_physicality: matrix is not symmetric");
  }
  Eigen::Matrix<complexd, N, N> h =
      m.template cast<complexd>() + complexd(0.0, 0.5) * omega.template cast<complexd>();
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix<complexd, N, N>> solver(h);
  double min_eig = solver.eigenvalues().minCoeff();
  return {min_eig >= -tolerance, min_eig};
}

[[noreturn]] void throw_unphysical(const char* who, double min_eig) {
  std::ostringstream msg;
  msg << who << ": uncertainty bound violated, min eig(m + (i/2) Omega) = "
      << min_eig;
  throw UnphysicalStateError(msg.str(), min_eig);
}

}  // namespace

Eigen::Matrix4d symplectic_form() {
  Eigen::Matrix4d omega = Eigen::Matrix4d::Zero();
  omega(0, 1) = 1.0;
  omega(1, 0) = -1.0;
  omega(2, 3) = 1.0;
  omega(3, 2) = -1.0;
  return omega;
}

PhysicalityReport check_physicality(const Eigen::Matrix4d& m,
                                    double tolerance) {
  return physicality_impl<4>(m, symplectic_form(), tolerance);
}

PhysicalityReport check_physicality(const Eigen::Matrix2d& m,
                                    double tolerance) {
  Eigen::Matrix2d omega;
  omega << 0.0, 1.0, -1.0, 0.0;
  return physicality_impl<2>(m, omega, tolerance);
}

SingleModeCovariance::SingleModeCovariance(const Eigen::Matrix2d& m,
                                           double tolerance)
    : m_(m) {
  auto report = check_physicality(m, tolerance);
  if (!report.physical) {
    throw_unphysical("SingleModeCovariance", report.min_eigenvalue);
  }
}

SingleModeCovariance SingleModeCovariance::vacuum() {
  return SingleModeCovariance(0.5 * Eigen::Matrix2d::Identity());
}

SingleModeCovariance SingleModeCovariance::thermal(double n_bar) {
  if (!(n_bar >= 0.0) || !std::isfinite(n_bar)) {
    throw DomainError("SingleModeCovariance::thermal: n_bar must be >= 0");
  }
  return SingleModeCovariance((n_bar + 0.5) * Eigen::Matrix2d::Identity());
}

TwoModeCovariance::TwoModeCovariance(const Eigen::Matrix4d& m,
                                     double tolerance)
    : m_(m) {
  auto report = check_physicality(m, tolerance);
  if (!report.physical) {
    throw_unphysical("TwoModeCovariance", report.min_eigenvalue);
  }
}

TwoModeCovariance build_symmetric_state(const StandardFormParams& p) {
  for (double v : {p.a, p.b, p.c1, p.c2}) {
    if (!std::isfinite(v)) {
      throw DomainError("build_symmetric_state: non-finite parameter");
    }
  }
  if (p.a < 0.5 || p.b < 0.5) {
    throw DomainError("build_symmetric_state: diagonal entries must be >= 1/2");
  }
  Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
  m(0, 0) = p.a;
  m(1, 1) = p.a;
  m(2, 2) = p.b;
  m(3, 3) = p.b;
  m(0, 2) = m(2, 0) = p.c1;
  m(1, 3) = m(3, 1) = p.c2;
  return TwoModeCovariance(m);
}

TwoModeCovariance build_tms_thermal(double n_bar, double r) {
  if (!(n_bar >= 0.0) || !std::isfinite(n_bar)) {
    throw DomainError("build_tms_thermal: n_bar must be >= 0 and finite");
  }
  if (!std::isfinite(r)) {
    throw DomainError("build_tms_thermal: r must be finite");
  }
  double nu = n_bar + 0.5;
  double c = nu * std::sinh(2.0 * r);
  return build_symmetric_state({nu * std::cosh(2.0 * r),
                                nu * std::cosh(2.0 * r), c, -c});
}

StandardFormParams standard_form_params(const TwoModeCovariance& sigma,
                                        double tolerance) {
  const Eigen::Matrix4d& m = sigma.matrix();
  double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  double off = std::max({std::abs(m(0, 1)), std::abs(m(0, 3)),
                         std::abs(m(1, 2)), std::abs(m(2, 3))});
  double diag_mismatch =
      std::max(std::abs(m(0, 0) - m(1, 1)), std::abs(m(2, 2) - m(3, 3)));
  if (off > tolerance * scale || diag_mismatch > tolerance * scale) {
    throw UnsupportedStateError(
        "standard_form_params: covariance is not in standard form");
  }
  return {m(0, 0), m(2, 2), m(0, 2), m(1, 3)};
}

}  // namespace gwex
