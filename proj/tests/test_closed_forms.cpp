#include <doctest.h>

#include <cmath>
#include <numbers>

#include "rz/closed_forms.hpp"
#include "rz/errors.hpp"
#include "rz/spectral_zeta.hpp"

using namespace rz;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("terminating 2F1") {
  CHECK(hyp2f1_terminating(1, 7.3) == 1.0);
  CHECK(hyp2f1_terminating(3, 0.0) == 1.0);
  CHECK(hyp2f1_terminating(2, -1.0) == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("quantum walk trace moments in closed form") {
  CHECK(qw_c2l(kPi / 4, 1, Shift::M) == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(qw_c2l(kPi / 4, 2, Shift::M) == doctest::Approx(-0.5).epsilon(1e-13));
  CHECK(qw_c2l(kPi / 4, 1, Shift::F) == doctest::Approx(-1.0).epsilon(1e-13));
  CHECK_THROWS_AS(qw_c2l(0.0, 1, Shift::M), domain_error);
  CHECK_THROWS_AS(qw_c2l(kPi / 2, 1, Shift::M), domain_error);

  for (double xi : {kPi / 6, kPi / 3})
    for (Shift s : {Shift::M, Shift::F})
      for (int l = 1; l <= 6; ++l) {
        const Complex quad =
            c_r_limit(qw_coin(xi, s), 2 * l, QuadratureSpec(4 * l + 2, 1e-10));
        CHECK(qw_c2l(xi, l, s) == doctest::Approx(quad.real()).epsilon(1e-10));
      }
}

TEST_CASE("quantum walk logarithmic zeta closed form") {
  const double m_expect = std::log((0.75 + std::sqrt(1.0625)) / 2.0);
  CHECK(qw_log_zeta_closed(kPi / 4, -0.5, Shift::M) ==
        doctest::Approx(m_expect).epsilon(1e-14));
  const double f_expect = std::log((1.25 + std::sqrt(1.0625)) / 2.0);
  CHECK(qw_log_zeta_closed(kPi / 4, -0.5, Shift::F) ==
        doctest::Approx(f_expect).epsilon(1e-14));
  CHECK(qw_log_zeta_closed(kPi / 4, 0.0, Shift::M) == 0.0);

  CHECK_THROWS_AS(qw_log_zeta_closed(kPi / 4, 0.3, Shift::M), domain_error);
  CHECK_THROWS_AS(qw_log_zeta_closed(kPi / 4, qw_m_lower_bound(kPi / 4) - 0.01,
                                     Shift::M),
                  domain_error);
  CHECK_THROWS_AS(qw_log_zeta_closed(kPi / 4, 0.3, Shift::F), domain_error);
}

TEST_CASE("central binomial weights") {
  CHECK(b2n_exact(0) == Rational{1, 1});
  CHECK(b2n_exact(1) == Rational{1, 2});
  CHECK(b2n_exact(2) == Rational{3, 8});
  CHECK(b2n(2) == doctest::Approx(0.375).epsilon(1e-15));
  // the trace moments of the 1D uniform walk are exactly these weights
  for (int n = 1; n <= 6; ++n) {
    const Complex c = c_r_limit(rw_coin(1), 2 * n, QuadratureSpec(4 * n + 2, 1e-10));
    CHECK(c.real() == doctest::Approx(b2n(n)).epsilon(1e-13));
  }
  // 2D: squares of the weights
  for (int n = 1; n <= 8; ++n) {
    const Complex c = c_r_limit(rw_coin(2), 2 * n, QuadratureSpec(4 * n + 2, 1e-10));
    CHECK(c.real() == doctest::Approx(b2n(n) * b2n(n)).epsilon(1e-10));
  }
}

TEST_CASE("uniform walk logarithmic zeta closed forms") {
  CHECK(rw_log_zeta_closed(1, 0.0, 10) == 0.0);
  const double expect = std::log((1.0 + std::sqrt(0.75)) / 2.0);
  CHECK(rw_log_zeta_closed(1, 0.5, 60) == doctest::Approx(expect).epsilon(1e-12));

  const double quad2 = log_zeta(rw_coin(2), 0.5, QuadratureSpec(32, 1e-12)).value.real();
  CHECK(rw_log_zeta_closed(2, 0.5, 50) == doctest::Approx(quad2).epsilon(1e-8));

  CHECK_THROWS_AS(rw_log_zeta_closed(1, 1.0, 60), domain_error);
  CHECK_THROWS_AS(rw_log_zeta_closed(2, -1.1, 60), domain_error);
  CHECK(rw_closed_form_in_stated_domain(-0.5));
  CHECK_FALSE(rw_closed_form_in_stated_domain(0.5));
}

TEST_CASE("4F3 partial sums match the squared-weight series") {
  // -(u^2/8) 4F3(...; u^2) must equal -sum (B_2n)^2 u^2n / (2n)
  for (double u : {0.3, 0.7}) {
    double series = 0.0;
    for (int n = 1; n <= 60; ++n)
      series -= b2n(n) * b2n(n) * std::pow(u, 2 * n) / (2 * n);
    const double hyp = -(u * u / 8.0) * hyp4f3_series(u * u, 59);
    CHECK(hyp == doctest::Approx(series).epsilon(1e-12));
  }
}
