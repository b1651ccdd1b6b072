#include <doctest.h>

#include <cmath>
#include <random>

#include <Eigen/Dense>

#include "gwex/covariance.hpp"
#include "gwex/errors.hpp"
#include "gwex/measurement.hpp"
#include "gwex/symplectic.hpp"
#include "gwex/thermo.hpp"

using namespace gwex;

TEST_CASE("global invariants of the squeezed thermal family") {
  // det sigma = nu^4 and Delta = 2 nu^2 with nu = n_bar + 1/2, independent
  // of r.
  for (double r : {0.0, 0.4, 1.1}) {
    auto inv = symplectic_invariants(build_tms_thermal(0.1, r));
    CHECK(inv.det_sigma == doctest::Approx(std::pow(0.6, 4)).epsilon(1e-12));
    CHECK(inv.delta == doctest::Approx(2.0 * 0.36).epsilon(1e-13));
  }
}

TEST_CASE("symplectic spectrum of the squeezed thermal family is degenerate") {
  auto spec = symplectic_spectrum(build_tms_thermal(0.1, 0.7));
  CHECK(spec.nu_minus == doctest::Approx(0.6).epsilon(1e-13));
  CHECK(spec.nu_plus == doctest::Approx(0.6).epsilon(1e-13));

  // A thermal product with unequal occupations splits the spectrum.
  StandardFormParams p{0.7, 1.6, 0.0, 0.0};
  auto spec2 = symplectic_spectrum(build_symmetric_state(p));
  CHECK(spec2.nu_minus == doctest::Approx(0.7).epsilon(1e-13));
  CHECK(spec2.nu_plus == doctest::Approx(1.6).epsilon(1e-13));
}

TEST_CASE("invariant form of the conditional determinant matches the update") {
  std::mt19937_64 rng(0x1234abcd5678ef00ULL);
  std::uniform_real_distribution<double> ua(0.51, 4.0);
  std::uniform_real_distribution<double> uc(-0.999, 0.999);
  for (int i = 0; i < 50; ++i) {
    double a = ua(rng);
    double c = uc(rng) * std::sqrt(a * a - 0.25);
    StandardFormParams p{a, a, c, -c};
    auto sigma = build_symmetric_state(p);
    auto cond = conditional_state_after_b_measurement(
        sigma, GaussianMeasurement::heterodyne());
    double direct = cond.determinant();
    double via_inv = conditional_determinant_invariant_form(
        symplectic_invariants(sigma), a);
    CHECK(std::abs(via_inv - direct) <= 1e-10 * direct);
  }
}

TEST_CASE("log negativity of the pure squeezed state is 2r") {
  double nb = occupation(100.0);
  for (double r : {0.25, 0.5, 1.0, 2.0}) {
    CHECK(log_negativity(build_tms_thermal(nb, r)) ==
          doctest::Approx(2.0 * r).epsilon(1e-10));
  }
}

TEST_CASE("thermal noise destroys entanglement at small squeezing") {
  // nu_tilde = (n_bar + 1/2) e^{-2r} >= 1/2 here, so the state is separable.
  CHECK(log_negativity(build_tms_thermal(0.5, 0.1)) == 0.0);
  // More thermal noise means less entanglement at fixed r.
  CHECK(log_negativity(build_tms_thermal(0.05, 0.5)) <
        log_negativity(build_tms_thermal(0.0, 0.5)));
  CHECK(log_negativity(build_tms_thermal(0.05, 0.5)) > 0.0);
}

TEST_CASE("local symplectics preserve the global invariants") {
  auto sigma = build_tms_thermal(0.3, 0.7);
  auto inv0 = symplectic_invariants(sigma);
  std::mt19937_64 rng(42);
  for (int i = 0; i < 50; ++i) {
    auto moved = apply_local_symplectic(sigma, random_local_symplectic(rng),
                                        random_local_symplectic(rng));
    auto inv = symplectic_invariants(moved);
    CHECK(std::abs(inv.det_sigma - inv0.det_sigma) <= 1e-10 * inv0.det_sigma);
    CHECK(std::abs(inv.delta - inv0.delta) <= 1e-10 * inv0.delta);
    // Log negativity is a local invariant too.
    CHECK(log_negativity(moved) ==
          doctest::Approx(log_negativity(sigma)).epsilon(1e-10));
  }
}

TEST_CASE("non-symplectic local maps are rejected") {
  auto sigma = build_tms_thermal(0.1, 0.5);
  Eigen::Matrix2d not_symplectic = 2.0 * Eigen::Matrix2d::Identity();
  CHECK_THROWS_AS(apply_local_symplectic(sigma, not_symplectic,
                                         Eigen::Matrix2d::Identity()),
                  DomainError);
}

TEST_CASE("random local symplectics are reproducible and unit determinant") {
  std::mt19937_64 a(7), b(7);
  for (int i = 0; i < 100; ++i) {
    Eigen::Matrix2d sa = random_local_symplectic(a);
    Eigen::Matrix2d sb = random_local_symplectic(b);
    CHECK((sa - sb).norm() == 0.0);
    CHECK(std::abs(sa.determinant() - 1.0) <= 1e-12);
  }
}
