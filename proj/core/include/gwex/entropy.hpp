#pragma once

#include "gwex/covariance.hpp"

// Entropies in nats throughout.

namespace gwex {

// Purity mu = 1 / (2^n sqrt(det sigma)). Values in (1, 1+1e-9] are clamped
// to 1 (rounding at the pure boundary); larger values throw
// UnphysicalStateError, non-positive determinants throw DomainError.
double purity(const SingleModeCovariance& sigma);
double purity(const TwoModeCovariance& sigma);

// Von Neumann entropy of a single-mode Gaussian state with purity mu:
//   S = (1-mu)/(2 mu) ln[(1+mu)/(1-mu)] + (1/2) ln[(1-mu^2)/(4 mu^2)]
// mu in (0, 1]; mu > 1 - 1e-12 returns 0 (the branch is singular there).
double von_neumann_entropy(double mu);

// Same entropy from the symplectic eigenvalue nu >= 1/2:
//   S = (nu+1/2) ln(nu+1/2) - (nu-1/2) ln(nu-1/2).
double von_neumann_entropy_from_nu(double nu);

// Same entropy from the thermal occupation n >= 0:
//   S = (n+1) ln(n+1) - n ln n,
// evaluated via log1p so small occupations keep full relative accuracy
// (the other two forms lose everything once the purity rounds to 1).
double thermal_entropy(double n_occupation);

}  // namespace gwex
