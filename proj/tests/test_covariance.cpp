#include <doctest.h>

#include <cmath>

#include <Eigen/Dense>

#include "gwex/covariance.hpp"
#include "gwex/errors.hpp"
#include "gwex/measurement.hpp"

using namespace gwex;

TEST_CASE("symplectic form is the direct sum of mode-wise J blocks") {
  Eigen::Matrix4d omega = symplectic_form();
  Eigen::Matrix4d expected = Eigen::Matrix4d::Zero();
  expected(0, 1) = 1.0;
  expected(1, 0) = -1.0;
  expected(2, 3) = 1.0;
  expected(3, 2) = -1.0;
  CHECK((omega - expected).norm() == 0.0);
  CHECK((omega * omega + Eigen::Matrix4d::Identity()).norm() == 0.0);
}

TEST_CASE("vacuum and thermal single-mode covariances") {
  auto vac = SingleModeCovariance::vacuum();
  CHECK(vac.matrix()(0, 0) == 0.5);
  CHECK(vac.matrix()(1, 1) == 0.5);
  CHECK(vac.matrix()(0, 1) == 0.0);

  auto th = SingleModeCovariance::thermal(0.25);
  CHECK(th.matrix()(0, 0) == doctest::Approx(0.75).epsilon(1e-15));
  CHECK(th.matrix()(1, 1) == doctest::Approx(0.75).epsilon(1e-15));

  CHECK_THROWS_AS(SingleModeCovariance::thermal(-0.1), DomainError);
}

TEST_CASE("physicality check finds the minimum eigenvalue of sigma + i/2 Omega") {
  auto ok = check_physicality(Eigen::Matrix2d(0.5 * Eigen::Matrix2d::Identity()));
  CHECK(ok.physical);
  CHECK(std::abs(ok.min_eigenvalue) <= 1e-12);

  // Variance below the vacuum floor: min eigenvalue 0.2 - 0.5 = -0.3.
  auto bad = check_physicality(Eigen::Matrix2d(0.2 * Eigen::Matrix2d::Identity()));
  CHECK_FALSE(bad.physical);
  CHECK(bad.min_eigenvalue == doctest::Approx(-0.3).epsilon(1e-12));

  // A violation inside the tolerance still counts as physical.
  Eigen::Matrix2d grazing = 0.5 * (1.0 - 1e-12) * Eigen::Matrix2d::Identity();
  CHECK(check_physicality(grazing).physical);
  CHECK_FALSE(check_physicality(grazing, 1e-14).physical);
}

TEST_CASE("covariance constructors validate their input") {
  Eigen::Matrix2d asym;
  asym << 0.5, 0.1, -0.1, 0.5;
  CHECK_THROWS_AS(SingleModeCovariance{asym}, DomainError);

  CHECK_THROWS_AS(
      SingleModeCovariance{Eigen::Matrix2d(0.2 * Eigen::Matrix2d::Identity())},
      UnphysicalStateError);
  try {
    SingleModeCovariance m{Eigen::Matrix2d(0.2 * Eigen::Matrix2d::Identity())};
  } catch (const UnphysicalStateError& e) {
    CHECK(e.min_eigenvalue() == doctest::Approx(-0.3).epsilon(1e-12));
  }

  Eigen::Matrix4d nan4 = 0.5 * Eigen::Matrix4d::Identity();
  nan4(2, 2) = std::nan("");
  CHECK_THROWS_AS(TwoModeCovariance{nan4}, DomainError);
}

TEST_CASE("correlations beyond the physical bound are rejected with diagnostics") {
  // a = b = 1 cannot carry |c| = 0.9 in this class (a^2 - c^2 < 1/4).
  StandardFormParams p{1.0, 1.0, 0.9, -0.9};
  CHECK_THROWS_AS(build_symmetric_state(p), UnphysicalStateError);
  try {
    build_symmetric_state(p);
  } catch (const UnphysicalStateError& e) {
    CHECK(e.min_eigenvalue() == doctest::Approx(-0.029563).epsilon(1e-3));
  }

  // Raising the diagonal to a = sqrt(c^2 + 1) restores physicality.
  StandardFormParams fixed{std::sqrt(1.81), std::sqrt(1.81), 0.9, -0.9};
  auto sigma = build_symmetric_state(fixed);
  auto rep = check_physicality(sigma.matrix());
  CHECK(rep.physical);
  CHECK(rep.min_eigenvalue == doctest::Approx(0.315799).epsilon(1e-4));
}

TEST_CASE("squeezed thermal builder produces the standard-form state") {
  auto sigma = build_tms_thermal(0.0, 0.5);
  const auto& m = sigma.matrix();
  // cosh(1)/2 and sinh(1)/2 on the diagonals of A and C.
  CHECK(m(0, 0) == doctest::Approx(0.7715403174076219).epsilon(1e-15));
  CHECK(m(1, 1) == m(0, 0));
  CHECK(m(2, 2) == m(0, 0));
  CHECK(m(0, 2) == doctest::Approx(0.5876005968219007).epsilon(1e-15));
  CHECK(m(1, 3) == doctest::Approx(-0.5876005968219007).epsilon(1e-15));
  CHECK(m(0, 1) == 0.0);
  CHECK(m(0, 3) == 0.0);
  CHECK((m - m.transpose()).norm() == 0.0);

  CHECK_THROWS_AS(build_tms_thermal(-0.2, 0.5), DomainError);
}

TEST_CASE("standard-form parameters round-trip through the builder") {
  auto sigma = build_tms_thermal(0.1, 0.7);
  auto p = standard_form_params(sigma);
  CHECK(p.a == doctest::Approx(0.6 * std::cosh(1.4)).epsilon(1e-14));
  CHECK(p.b == doctest::Approx(p.a).epsilon(1e-14));
  CHECK(p.c1 == doctest::Approx(0.6 * std::sinh(1.4)).epsilon(1e-14));
  CHECK(p.c2 == doctest::Approx(-p.c1).epsilon(1e-14));
  CHECK(p.symmetric());

  auto rebuilt = build_symmetric_state(p);
  CHECK((rebuilt.matrix() - sigma.matrix()).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("non-standard-form states are reported as unsupported") {
  auto sigma = build_tms_thermal(0.1, 0.7);
  // A local rotation on mode a leaves the state physical but moves it out of
  // standard form.
  Eigen::Matrix4d s = Eigen::Matrix4d::Identity();
  s.topLeftCorner<2, 2>() = rotation(0.3);
  TwoModeCovariance rotated{Eigen::Matrix4d(s * sigma.matrix() * s.transpose())};
  CHECK(check_physicality(rotated.matrix()).physical);
  CHECK_THROWS_AS(standard_form_params(rotated), UnsupportedStateError);
}

TEST_CASE("block accessors slice the mode structure") {
  auto sigma = build_tms_thermal(0.2, 0.4);
  auto p = standard_form_params(sigma);
  CHECK(sigma.block_a()(0, 0) == doctest::Approx(p.a).epsilon(1e-15));
  CHECK(sigma.block_b()(1, 1) == doctest::Approx(p.b).epsilon(1e-15));
  CHECK(sigma.block_c()(0, 0) == doctest::Approx(p.c1).epsilon(1e-15));
  CHECK(sigma.block_c()(1, 1) == doctest::Approx(p.c2).epsilon(1e-15));
}
