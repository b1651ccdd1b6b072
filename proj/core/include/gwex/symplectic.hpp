#pragma once

#include <cstdint>
#include <random>

#include <Eigen/Dense>

#include "gwex/covariance.hpp"

namespace gwex {

struct SymplecticInvariants {
  double det_sigma;  // det of the full 4x4 covariance
  double delta;      // det A + det B + 2 det C
};

SymplecticInvariants symplectic_invariants(const TwoModeCovariance& sigma);

// Symplectic eigenvalues (nu_minus <= nu_plus) of a two-mode covariance:
//   2 nu_{+-}^2 = delta +- sqrt(delta^2 - 4 det sigma).
struct SymplecticSpectrum {
  double nu_minus;
  double nu_plus;
};

SymplecticSpectrum symplectic_spectrum(const TwoModeCovariance& sigma);

// Determinant of the post-heterodyne conditional covariance of mode a,
// written in terms of the invariants of a symmetric standard-form state
// (equal diagonal blocks, opposite-sign correlation diagonal):
//   det sigma_a^cond = (det sigma + (a/2) delta + a^2/4) / (a + 1/2)^2.
// Reduction of the Schur complement sigma_a - C (sigma_b + I/2)^{-1} C^T;
// valid only for that class. a is the diagonal block entry, a >= 1/2.
double conditional_determinant_invariant_form(const SymplecticInvariants& inv,
                                              double a);

// Logarithmic negativity E_N = max(0, -ln 2*nu_tilde_minus), with
// nu_tilde_minus the smaller symplectic eigenvalue of the partial transpose.
double log_negativity(const TwoModeCovariance& sigma);

// Applies mode-local symplectic transforms: sigma -> S sigma S^T with
// S = diag(s_a, s_b). Each block must satisfy det s = 1 (tolerance 1e-12);
// the result is revalidated.
TwoModeCovariance apply_local_symplectic(const TwoModeCovariance& sigma,
                                         const Eigen::Matrix2d& s_a,
                                         const Eigen::Matrix2d& s_b);

// Random single-mode symplectic R(theta1) diag(e^s, e^-s) R(theta2) with
// theta uniform on [0, 2pi) and s uniform on [-max_squeeze, max_squeeze].
Eigen::Matrix2d random_local_symplectic(std::mt19937_64& rng,
                                        double max_squeeze = 1.5);

}  // namespace gwex
