#pragma once

#include <stdexcept>
#include <string>

namespace gwex {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside its mathematical domain (negative occupation, purity
// above one, non-finite input, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Covariance matrix violating the uncertainty bound sigma + (i/2)Omega >= 0.
// Carries the offending minimum eigenvalue for diagnostics.
class UnphysicalStateError : public Error {
 public:
  UnphysicalStateError(const std::string& what, double min_eigenvalue)
      : Error(what), min_eigenvalue_(min_eigenvalue) {}

  double min_eigenvalue() const noexcept { return min_eigenvalue_; }

 private:
  double min_eigenvalue_;
};

// State outside the symmetric class a reduction or formula is derived for.
class UnsupportedStateError : public Error {
 public:
  using Error::Error;
};

// Thermal context inconsistent with the state it is paired with.
class InconsistentContextError : public Error {
 public:
  using Error::Error;
};

// Coherent amplitude (or similar object) not representable at the current
// Fock-space cutoff.
class RepresentabilityError : public Error {
 public:
  using Error::Error;
};

// Fock-space cutoff ceiling reached before the convergence targets were met.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, int n_cut, double trace_deficit)
      : Error(what), n_cut_(n_cut), trace_deficit_(trace_deficit) {}

  int n_cut() const noexcept { return n_cut_; }
  double trace_deficit() const noexcept { return trace_deficit_; }

 private:
  int n_cut_;
  double trace_deficit_;
};

}  // namespace gwex
