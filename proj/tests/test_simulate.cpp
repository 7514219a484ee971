#include <doctest.h>

#include <cmath>
#include <numbers>

#include "rz/errors.hpp"
#include "rz/simulate.hpp"
#include "rz/walk_model.hpp"

using namespace rz;

namespace {
constexpr double kPi = std::numbers::pi;
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
}  // namespace

TEST_CASE("matrix weights at small step counts") {
  const CoinMatrix had = qw_coin(kPi / 4, Shift::M);

  const MatrixWeightField w0 = matrix_weight(had, 0);
  CHECK(w0.radius == 0);
  CHECK((w0.at({0}) - Matrix::Identity(2, 2)).cwiseAbs().maxCoeff() == 0.0);

  // one step: site -1 carries P1 A (row 0 of A), site +1 carries P2 A
  const MatrixWeightField w1 = matrix_weight(had, 1);
  CHECK(w1.radius == 1);
  const Matrix& left = w1.at({-1});
  CHECK(left(0, 0) == had.entries()(0, 0));
  CHECK(left(0, 1) == had.entries()(0, 1));
  CHECK(left(1, 0) == Complex(0.0, 0.0));
  CHECK(left(1, 1) == Complex(0.0, 0.0));
  const Matrix& right = w1.at({1});
  CHECK(right(1, 0) == had.entries()(1, 0));
  CHECK(right(1, 1) == had.entries()(1, 1));
  CHECK(right(0, 0) == Complex(0.0, 0.0));
  // odd step count leaves the origin empty
  CHECK(w1.at({0}).cwiseAbs().maxCoeff() == 0.0);

  CHECK_THROWS_AS(matrix_weight(had, -1), domain_error);
  CHECK_THROWS_AS(matrix_weight(had, kMatrixWeightCap + 1), domain_error);
}

TEST_CASE("return traces") {
  // uniform 1D walk: Tr at the origin after 2n steps is the central
  // binomial weight
  CHECK(return_trace(rw_coin(1), 2).real() == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(return_trace(rw_coin(1), 4).real() == doctest::Approx(0.375).epsilon(1e-13));
  CHECK(return_trace(qw_coin(kPi / 4, Shift::M), 2).real() ==
        doctest::Approx(1.0).epsilon(1e-13));
  for (int r : {1, 3, 5})
    CHECK(std::abs(return_trace(qw_coin(kPi / 4, Shift::M), r)) < 1e-14);
  CHECK_THROWS_AS(return_trace(rw_coin(1), 0), domain_error);
}

TEST_CASE("single evolution step of the Hadamard walk") {
  Eigen::VectorXcd amp(2);
  amp << 1.0, 0.0;
  WalkState psi0 = delta_state_lattice(1, amp);
  const WalkState psi1 = evolve(psi0, qw_coin(kPi / 4, Shift::M));
  CHECK(psi1.radius == 1);
  // component 0 at x reads from x+1, component 1 from x-1
  CHECK(std::abs(psi1.values[psi1.site_index({-1})](0) - kInvSqrt2) < 1e-15);
  CHECK(std::abs(psi1.values[psi1.site_index({-1})](1)) < 1e-15);
  CHECK(std::abs(psi1.values[psi1.site_index({1})](1) - kInvSqrt2) < 1e-15);
  CHECK(std::abs(psi1.values[psi1.site_index({1})](0)) < 1e-15);
  CHECK(psi1.values[psi1.site_index({0})].cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("single step of the uniform walk spreads mass evenly") {
  Eigen::VectorXcd amp(2);
  amp << 0.5, 0.5;
  WalkState psi0 = delta_state_lattice(1, amp);
  const WalkState psi1 = evolve(psi0, rw_coin(1));
  const std::vector<double> mu = measure(psi1, 1);
  CHECK(mu[psi1.site_index({-1})] == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(mu[psi1.site_index({1})] == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(mu[psi1.site_index({0})] == doctest::Approx(0.0));
}

TEST_CASE("states and matrix weights stay consistent") {
  // Psi_n = Phi_n psi_0 site by site
  const CoinMatrix coin = qw_coin(kPi / 3, Shift::F);
  Eigen::VectorXcd amp(2);
  amp << Complex(0.6, 0.0), Complex(0.0, 0.8);
  WalkState psi = delta_state_lattice(1, amp);
  const int n = 5;
  for (int i = 0; i < n; ++i) psi = evolve(psi, coin);
  const MatrixWeightField w = matrix_weight(coin, n);
  REQUIRE(psi.radius == w.radius);
  for (long long s = 0; s < w.site_count(); ++s) {
    const Eigen::VectorXcd expect = w.values[s] * amp;
    CHECK((psi.values[s] - expect).cwiseAbs().maxCoeff() < 1e-13);
  }
}

TEST_CASE("measure conservation") {
  const CoinMatrix qw = qw_coin(kPi / 4, Shift::M);
  Eigen::VectorXcd amp(2);
  amp << kInvSqrt2, Complex(0.0, kInvSqrt2);
  WalkState psi = delta_state_lattice(1, amp);
  CHECK(default_measure_exponent(qw.walk_class()) == 2);
  for (int i = 0; i < 10; ++i) {
    psi = evolve(psi, qw);
    CHECK(total_measure(psi, 2) == doctest::Approx(1.0).epsilon(1e-13));
  }

  const CoinMatrix rw = rw_coin(2);
  Eigen::VectorXcd prob(4);
  prob << 0.25, 0.25, 0.25, 0.25;
  WalkState rho = delta_state_lattice(2, prob);
  CHECK(default_measure_exponent(rw.walk_class()) == 1);
  for (int i = 0; i < 6; ++i) {
    rho = evolve(rho, rw);
    CHECK(total_measure(rho, 1) == doctest::Approx(1.0).epsilon(1e-13));
  }
}

TEST_CASE("torus evolution wraps around") {
  const TorusSpec torus(1, 3);
  Eigen::VectorXcd amp(2);
  amp << 1.0, 0.0;
  WalkState psi = delta_state(torus, amp);
  const WalkState out = evolve(psi, qw_coin(kPi / 4, Shift::M));
  // component 0 at x reads site x+1, so x = 2 wraps to (2+1) mod 3 = 0
  // and picks up the initial mass; component 1 at x = 1 reads site 0
  CHECK(std::abs(out.values[out.site_index({2})](0) - kInvSqrt2) < 1e-15);
  CHECK(std::abs(out.values[out.site_index({1})](1) - kInvSqrt2) < 1e-15);
  CHECK(total_measure(out, 2) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("zero states stay zero") {
  WalkState zero = delta_state_lattice(2, Eigen::VectorXcd::Zero(4));
  const WalkState out = evolve(zero, rw_coin(2));
  CHECK(total_measure(out, 1) == 0.0);
}
