#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <numbers>

#include "rz/errors.hpp"
#include "rz/spectral_zeta.hpp"
#include "rz/walk_model.hpp"

using namespace rz;

namespace {
constexpr double kPi = std::numbers::pi;

// site-space oracle: det(I - u M_A)^(-1/N^d) from the explicit matrix
Complex site_space_zeta(const CoinMatrix& coin, const TorusSpec& torus, double u) {
  const Matrix m = site_matrix(coin, torus);
  const Matrix f = Matrix::Identity(m.rows(), m.cols()) - u * m;
  const Complex det = Eigen::PartialPivLU<Matrix>(f).determinant();
  return std::exp(-std::log(det) / static_cast<double>(torus.sites()));
}
}  // namespace

TEST_CASE("finite torus zeta values") {
  CHECK(finite_zeta(rw_coin(1), TorusSpec(1, 2), 0.0).value == Complex(1.0, 0.0));
  CHECK(finite_zeta(qw_coin(kPi / 4, Shift::M), TorusSpec(1, 3), 0.0).value ==
        Complex(1.0, 0.0));

  // N=2 grid {0, pi}: dets (1-u)(1+u) = 0.75 at u = 1/2
  const Complex z = finite_zeta(rw_coin(1), TorusSpec(1, 2), 0.5).value;
  CHECK(z.real() == doctest::Approx(1.0 / std::sqrt(0.75)).epsilon(1e-12));
  CHECK(std::abs(z.imag()) < 1e-13);
}

TEST_CASE("finite zeta matches the site-space determinant") {
  const CoinMatrix had = qw_coin(kPi / 4, Shift::M);
  const Complex spectral = finite_zeta(had, TorusSpec(1, 3), -0.3).value;
  const Complex oracle = site_space_zeta(had, TorusSpec(1, 3), -0.3);
  CHECK(std::abs(spectral - oracle) < 1e-10);

  const Complex spectral2 = finite_zeta(rw_coin(2), TorusSpec(2, 3), 0.4).value;
  const Complex oracle2 = site_space_zeta(rw_coin(2), TorusSpec(2, 3), 0.4);
  CHECK(std::abs(spectral2 - oracle2) < 1e-10);
}

TEST_CASE("pole on the momentum grid is reported") {
  // k = 0 gives det = 1 - u = 0 at u = 1
  CHECK_THROWS_AS(finite_zeta(rw_coin(1), TorusSpec(1, 2), 1.0), domain_error);
}

TEST_CASE("logarithmic zeta against known values") {
  const QuadratureSpec quad(16, 1e-11);
  CHECK(log_zeta(rw_coin(1), 0.0, quad).value == Complex(0.0, 0.0));

  const double rw_expect = std::log((1.0 + std::sqrt(1.0 - 0.25)) / 2.0);
  CHECK(log_zeta(rw_coin(1), 0.5, quad).value.real() ==
        doctest::Approx(rw_expect).epsilon(1e-8));

  // Hadamard M at u = -1/2: log((1 - u^2 + sqrt(1 + u^4)) / 2)
  const double qw_expect = std::log((0.75 + std::sqrt(1.0625)) / 2.0);
  CHECK(log_zeta(qw_coin(kPi / 4, Shift::M), -0.5, quad).value.real() ==
        doctest::Approx(qw_expect).epsilon(1e-8));
}

TEST_CASE("u-range enforcement per walk class") {
  const QuadratureSpec quad(16, 1e-10);
  CHECK_THROWS_AS(log_zeta(rw_coin(1), 1.2, quad), domain_error);
  CHECK_THROWS_AS(log_zeta(rw_coin(1), -1.0, quad), domain_error);
  CHECK_THROWS_AS(log_zeta(qw_coin(kPi / 4, Shift::M), 0.1, quad), domain_error);
  CHECK_THROWS_AS(log_zeta(qw_coin(kPi / 4, Shift::M), -2.0, quad), domain_error);
  CHECK_THROWS_AS(log_zeta(qw_coin(kPi / 4, Shift::F), 0.2, quad), domain_error);
  CHECK_NOTHROW(log_zeta(qw_coin(kPi / 4, Shift::F), -0.8, quad));
}

TEST_CASE("trace moment averages on finite tori") {
  CHECK(std::abs(c_r_finite(rw_coin(1), TorusSpec(1, 4), 1)) < 1e-14);
  CHECK(c_r_finite(rw_coin(1), TorusSpec(1, 8), 2).real() ==
        doctest::Approx(0.5).epsilon(1e-13));
  CHECK_THROWS_AS(c_r_finite(rw_coin(1), TorusSpec(1, 4), 0), domain_error);
}

TEST_CASE("trace moment limits") {
  const QuadratureSpec quad(16, 1e-10);
  CHECK(c_r_limit(rw_coin(1), 2, quad).real() == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(c_r_limit(rw_coin(1), 4, quad).real() == doctest::Approx(0.375).epsilon(1e-12));
  CHECK(c_r_limit(qw_coin(kPi / 4, Shift::M), 2, quad).real() ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(c_r_limit(qw_coin(kPi / 4, Shift::M), 4, quad).real() ==
        doctest::Approx(-0.5).epsilon(1e-12));
  for (int r : {1, 3, 5})
    CHECK(std::abs(c_r_limit(qw_coin(kPi / 3, Shift::F), r, quad)) < 1e-12);
}

TEST_CASE("finite and limit trace moments coincide at matched grids") {
  for (int r : {2, 3, 4, 6}) {
    const Complex finite = c_r_finite(rw_coin(2), TorusSpec(2, 2 * r + 2), r);
    const Complex limit = c_r_limit(rw_coin(2), r, QuadratureSpec(2 * r + 2, 1e-10));
    CHECK(finite == limit);  // same trapezoidal sum, bitwise
  }
}

TEST_CASE("series route to the logarithmic zeta") {
  const QuadratureSpec quad(16, 1e-11);
  CHECK(series_log_zeta(rw_coin(1), 0.0, 20, quad).value == 0.0);

  const double series = series_log_zeta(rw_coin(1), 0.5, 40, quad).value;
  const double direct = log_zeta(rw_coin(1), 0.5, quad).value.real();
  CHECK(series == doctest::Approx(direct).epsilon(1e-8));

  const double qw_series =
      series_log_zeta(qw_coin(kPi / 4, Shift::M), -0.3, 60, quad).value;
  const double qw_closed = std::log((1.0 - 0.09 + std::sqrt(1.0 + 0.0081)) / 2.0);
  CHECK(qw_series == doctest::Approx(qw_closed).epsilon(1e-8));
}

TEST_CASE("finite-N values converge to the limit") {
  const double L = log_zeta(rw_coin(1), 0.95, QuadratureSpec(32, 1e-12)).value.real();
  double prev = 1e9;
  for (long long N : {4, 8, 16, 32}) {
    const double LN =
        -std::log(finite_zeta(rw_coin(1), TorusSpec(1, N), 0.95).value).real();
    const double err = std::abs(LN - L);
    CHECK(err < prev);
    prev = err;
  }
}
