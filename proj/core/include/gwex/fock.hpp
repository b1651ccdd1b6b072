#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "gwex/thermo.hpp"

// Truncated Fock-space cross-check of the Gaussian pipeline. Everything here
// is deliberately independent of the covariance-matrix code paths: states are
// built by exponentiating the two-mode squeezing generator in the number
// basis and probed with explicit coherent-state projections.

namespace gwex::fock {

enum class Mode { a, b };

struct OracleConfig {
  // Fock cutoff per mode (basis 0..n_cut). 0 selects the automatic policy:
  // grow from 8 in steps of 8 until converged, ceiling 80.
  int n_cut = 0;
  // Acceptable pre-normalization trace loss to truncation.
  double trace_tolerance = 1e-8;
  // Reported entropies must move less than this under a cutoff step for
  // oracle_work's automatic policy to declare convergence.
  double entropy_stability_tol = 1e-6;
  // Heterodyne outcomes probed by validation sweeps.
  std::vector<std::complex<double>> beta_samples = {
      {0.0, 0.0}, {1.0, 0.0}, {1.0, 1.0}, {0.0, -2.0}};

  static constexpr int kAutoInitial = 8;
  static constexpr int kAutoStep = 8;
  static constexpr int kAutoCeiling = 80;
};

// Squeezed thermal two-mode state in the number basis. The family commutes
// with the number difference d = n1 - n2 (the squeezing generator creates and
// destroys pairs; the thermal input is diagonal), so the density matrix is
// stored as its exact direct-sum blocks over d in [-n_cut, n_cut]:
//   block(d)[i, j] = <n1(i), n2(i)| rho |n1(j), n2(j)>,
//   (n1(k), n2(k)) = (k + d, k) for d >= 0, (k, k - d) for d < 0,
// i.e. index k counts the smaller of the two mode numbers.
// block(-d) == block(d) for this family. Construction takes the raw
// (un-normalized) blocks, records trace_deficit() = 1 - raw trace, and
// normalizes the trace to 1 exactly.
class TwoModeFockState {
 public:
  TwoModeFockState(int n_cut, std::vector<Eigen::MatrixXd> blocks);

  int n_cut() const noexcept { return n_cut_; }
  double trace_deficit() const noexcept { return trace_deficit_; }

  const Eigen::MatrixXd& block(int d) const;

  double trace() const;
  // Max |block - block^T| entry over blocks (the dense matrix is real, so
  // Hermiticity is block symmetry).
  double hermiticity_error() const;
  double min_eigenvalue() const;

  // Marginal number distribution of one mode. The reduced state is diagonal
  // in the number basis (tracing the other mode pins d to a single value per
  // matrix element).
  Eigen::VectorXd reduced_diagonal(Mode mode) const;

  // Second moments extracted by operator averages in the number basis:
  // (x_a, p_a, x_b, p_b) ordering, vacuum variance 1/2. First moments vanish
  // identically (every block entry conserves d, so <a> = <b> = 0).
  Eigen::Matrix4d covariance() const;

  // Materialized dense matrix in the |n1, n2> product basis, for small
  // cutoffs (n_cut <= 32) and cross-checks only.
  Eigen::MatrixXd dense() const;

 private:
  int n_cut_;
  std::vector<Eigen::MatrixXd> blocks_;  // index |d|
  double trace_deficit_;
};

// Mode-a state conditioned on a heterodyne outcome on mode b.
class SingleModeFockState {
 public:
  SingleModeFockState(Eigen::MatrixXcd rho, double outcome_weight);

  const Eigen::MatrixXcd& rho() const noexcept { return rho_; }
  // <beta| rho_ab |beta>_b trace before normalization (the outcome density).
  double outcome_weight() const noexcept { return weight_; }

  double hermiticity_error() const;
  double min_eigenvalue() const;

  Eigen::Vector2d mean() const;        // (<x>, <p>)
  Eigen::Matrix2d covariance() const;  // central second moments

 private:
  Eigen::MatrixXcd rho_;
  double weight_;
};

// Builds the squeezed thermal state by applying expm of the truncated
// pair-creation generator r (a+b+ - ab) to a thermal x thermal input.
// The truncated generator is exactly antisymmetric, so the in-box evolution
// is orthogonal and the trace deficit is exactly the thermal tail mass.
// Automatic cutoff policy here is deficit-driven only; throws
// ConvergenceError (carrying the deficit) at the ceiling.
TwoModeFockState build_tms_thermal_fock(double n_bar, double r,
                                        const OracleConfig& cfg = {});

// Single-mode thermal state at occupation n_bar, renormalized in the box.
SingleModeFockState single_mode_thermal_fock(double n_bar, int n_cut);

// Projects mode b onto the coherent state |beta>. Requires |beta|^2 <=
// n_cut/4 so the coherent state itself is representable in the box.
SingleModeFockState heterodyne_project_b(const TwoModeFockState& state,
                                         std::complex<double> beta);

// Von Neumann entropy from the eigenvalues of rho; eigenvalues below 1e-14
// are clipped before the p ln p sum.
double entropy(const SingleModeFockState& state);

// Entropy of one mode's marginal (Shannon entropy of reduced_diagonal).
double reduced_entropy(const TwoModeFockState& state, Mode mode);

// Work per quantum from the Fock-space pipeline: S_meas is the conditional
// entropy at outcome beta = 0 (outcome-independent up to truncation; the
// validation sweeps probe other outcomes), S_ther the mode-a marginal
// entropy, w = (s_ther - s_meas)/beta_a. With cfg.n_cut = 0 the cutoff grows
// until the trace deficit is inside tolerance AND both reported entropies
// move by less than entropy_stability_tol under a step; ConvergenceError at
// the ceiling.
WorkResult oracle_work(double n_bar, double r, const OracleConfig& cfg = {});

}  // namespace gwex::fock
