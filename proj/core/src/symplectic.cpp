#include "gwex/symplectic.hpp"

#include <cmath>
#include <numbers>

#include "gwex/measurement.hpp"

namespace gwex {

SymplecticInvariants symplectic_invariants(const TwoModeCovariance& sigma) {
  double det_a = sigma.block_a().determinant();
  double det_b = sigma.block_b().determinant();
  double det_c = sigma.block_c().determinant();
  return {sigma.determinant(), det_a + det_b + 2.0 * det_c};
}

SymplecticSpectrum symplectic_spectrum(const TwoModeCovariance& sigma) {
  auto inv = symplectic_invariants(sigma);
  double disc = inv.delta * inv.delta - 4.0 * inv.det_sigma;
  disc = std::max(disc, 0.0);
  double root = std::sqrt(disc);
  double nu_minus_sq = std::max(0.5 * (inv.delta - root), 0.0);
  double nu_plus_sq = 0.5 * (inv.delta + root);
  return {std::sqrt(nu_minus_sq), std::sqrt(nu_plus_sq)};
}

double conditional_determinant_invariant_form(const SymplecticInvariants& inv,
                                              double a) {
  if (!(a >= 0.5) || !std::isfinite(a)) {
    throw DomainError(
        "conditional_determinant_invariant_form: a must be >= 1/2");
  }
  double denom = a + 0.5;
  return (inv.det_sigma + 0.5 * a * inv.delta + 0.25 * a * a) /
         (denom * denom);
}

double log_negativity(const TwoModeCovariance& sigma) {
  // Partial transpose flips the sign of p_b, so det C flips sign and
  // det sigma is unchanged.
  double det_a = sigma.block_a().determinant();
  double det_b = sigma.block_b().determinant();
  double det_c = sigma.block_c().determinant();
  double delta_tilde = det_a + det_b - 2.0 * det_c;
  double disc = delta_tilde * delta_tilde - 4.0 * sigma.determinant();
  disc = std::max(disc, 0.0);
  double nu_sq = 0.5 * (delta_tilde - std::sqrt(disc));
  if (!(nu_sq > 0.0)) {
    throw DomainError("log_negativity: degenerate partial-transpose spectrum");
  }
  return std::max(0.0, -std::log(2.0 * std::sqrt(nu_sq)));
}

TwoModeCovariance apply_local_symplectic(const TwoModeCovariance& sigma,
                                         const Eigen::Matrix2d& s_a,
                                         const Eigen::Matrix2d& s_b) {
  for (const auto* s : {&s_a, &s_b}) {
    if (!s->allFinite() || std::abs(s->determinant() - 1.0) > 1e-12) {
      throw DomainError(
          "apply_local_symplectic: block must have unit determinant");
    }
  }
  Eigen::Matrix4d big = Eigen::Matrix4d::Zero();
  big.topLeftCorner<2, 2>() = s_a;
  big.bottomRightCorner<2, 2>() = s_b;
  Eigen::Matrix4d out = big * sigma.matrix() * big.transpose();
  out = 0.5 * (out + out.transpose().eval());  // kill rounding asymmetry
  return TwoModeCovariance(out);
}

Eigen::Matrix2d random_local_symplectic(std::mt19937_64& rng,
                                        double max_squeeze) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::uniform_real_distribution<double> squeeze(-max_squeeze, max_squeeze);
  double s = squeeze(rng);
  Eigen::Matrix2d d = Eigen::Matrix2d::Zero();
  d(0, 0) = std::exp(s);
  d(1, 1) = std::exp(-s);
  return rotation(angle(rng)) * d * rotation(angle(rng));
}

}  // namespace gwex
