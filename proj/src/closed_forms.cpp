#include "rz/closed_forms.hpp"

#include <cmath>
#include <numbers>

#include "rz/errors.hpp"

namespace rz {

namespace {

constexpr double kCrossCheckTol = 1e-12;
constexpr double kRangeMargin = 1e-14;

void check_xi(double xi) {
  if (!(xi > 0.0 && xi < std::numbers::pi / 2.0))
    throw domain_error("xi must lie in (0, pi/2)");
}

// sum_{m=1}^{l} (1/m) binom(l-1, m-1)^2 t^m, exact term recurrence.
double qw_c2l_sum(int l, double t) {
  double sum = 0.0;
  double term = t;  // m = 1: binom(l-1,0)^2 t / 1
  for (int m = 1; m <= l; ++m) {
    sum += term / m;
    // binom(l-1,m)^2 / binom(l-1,m-1)^2 = ((l-m)/m)^2
    const double ratio = static_cast<double>(l - m) / static_cast<double>(m);
    term *= ratio * ratio * t;
  }
  return sum;
}

}  // namespace

double hyp2f1_terminating(int l, double x) {
  if (l < 1) throw domain_error("hyp2f1_terminating: l must be positive");
  // (1-l)_m vanishes for m >= l, so the series has exactly l terms.
  double sum = 1.0;
  double term = 1.0;
  for (int m = 0; m < l - 1; ++m) {
    const double a = static_cast<double>(1 - l + m);  // (1-l)_m step
    term *= (a * a) / ((2.0 + m) * (m + 1.0)) * x;
    sum += term;
  }
  return sum;
}

double qw_c2l(double xi, int l, Shift shift) {
  check_xi(xi);
  if (l < 1) throw domain_error("qw_c2l: l must be positive");
  const double c2 = std::cos(xi) * std::cos(xi);
  const double s2 = std::sin(xi) * std::sin(xi);

  double sum_form, f_form;
  if (shift == Shift::M) {
    const double t = -s2 / c2;  // -tan^2 xi
    sum_form = 2.0 * l * std::pow(-c2, l) * qw_c2l_sum(l, t);
    f_form = 2.0 * l * std::pow(-c2, l - 1) * s2 * hyp2f1_terminating(l, t);
  } else {
    const double t = -c2 / s2;  // -cot^2 xi
    sum_form = 2.0 * l * std::pow(s2, l) * qw_c2l_sum(l, t);
    f_form = 2.0 * l * std::pow(s2, l - 1) * (-c2) * hyp2f1_terminating(l, t);
  }
  if (std::abs(sum_form - f_form) > kCrossCheckTol * (1.0 + std::abs(f_form)))
    throw accuracy_error("qw_c2l: finite-sum and 2F1 forms disagree");
  return f_form;
}

double qw_log_zeta_closed(double xi, double u, Shift shift) {
  check_xi(xi);
  if (shift == Shift::M) {
    const double lo = std::cos(xi) - std::sqrt(std::cos(xi) * std::cos(xi) + 1.0);
    if (u < lo + kRangeMargin || u > 0.0)
      throw domain_error(
          "qw_log_zeta_closed: M-type requires u in (cos xi - sqrt(cos^2 xi "
          "+ 1), 0]");
  } else if (u > 0.0) {
    throw domain_error("qw_log_zeta_closed: F-type requires u <= 0");
  }
  const double u2 = u * u;
  const double root = std::sqrt(1.0 + 2.0 * std::cos(2.0 * xi) * u2 + u2 * u2);
  const double sign = (shift == Shift::M) ? -1.0 : 1.0;
  return std::log((1.0 + sign * u2 + root) / 2.0);
}

Rational b2n_exact(int n) {
  if (n < 0) throw domain_error("b2n_exact: n must be non-negative");
  if (n > 32) throw domain_error("b2n_exact: exact arithmetic limited to n <= 32");
  // B_{2(n+1)} = B_{2n} * (2n+1)/(2n+2); 128-bit intermediates, reduced
  // every step.
  auto gcd128 = [](unsigned __int128 a, unsigned __int128 b) {
    while (b != 0) {
      unsigned __int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  };
  unsigned __int128 num = 1, den = 1;
  for (int m = 0; m < n; ++m) {
    num *= static_cast<unsigned>(2 * m + 1);
    den *= static_cast<unsigned>(2 * m + 2);
    const unsigned __int128 g = gcd128(num, den);
    num /= g;
    den /= g;
  }
  return Rational::from_parts(static_cast<std::int64_t>(num),
                              static_cast<std::uint64_t>(den));
}

double b2n(int n) {
  if (n < 0) throw domain_error("b2n: n must be non-negative");
  if (n <= 32) return b2n_exact(n).value();
  double v = b2n_exact(32).value();
  for (int m = 32; m < n; ++m) v *= (2.0 * m + 1.0) / (2.0 * m + 2.0);
  return v;
}

double hyp4f3_series(double x, int n_terms) {
  // 4F3(3/2, 3/2, 1, 1; 2, 2, 2; x): term ratio
  // ((m+3/2)^2 (m+1)^2) / ((m+2)^3 (m+1)) * x.
  double sum = 1.0;
  double term = 1.0;
  for (int m = 0; m + 1 < n_terms; ++m) {
    const double a = m + 1.5;
    const double b = m + 1.0;
    const double c = m + 2.0;
    term *= (a * a * b * b) / (c * c * c * b) * x;
    sum += term;
  }
  return sum;
}

bool rw_closed_form_in_stated_domain(double u) { return u > -1.0 && u < 0.0; }

double rw_log_zeta_closed(int d, double u, int n_max) {
  if (d != 1 && d != 2) throw domain_error("rw_log_zeta_closed: d must be 1 or 2");
  if (n_max < 1) throw domain_error("rw_log_zeta_closed: n_max must be positive");
  if (!(u > -1.0 + kRangeMargin && u < 1.0 - kRangeMargin))
    throw domain_error("rw_log_zeta_closed: u must lie in (-1, 1)");
  if (u == 0.0) return 0.0;

  const double u2 = u * u;
  if (d == 1) {
    const double closed = std::log((1.0 + std::sqrt(1.0 - u2)) / 2.0);
    // Series cross-check within its own truncation bound.
    double series = 0.0, last = 0.0;
    for (int n = 1; n <= n_max; ++n) {
      last = b2n(n) * std::pow(u2, n) / (2.0 * n);
      series -= last;
    }
    const double tail_bound = last * u2 / (1.0 - u2) + 1e-12;
    if (std::abs(series - closed) > tail_bound + 1e-10 * (1.0 + std::abs(closed)))
      throw accuracy_error("rw_log_zeta_closed: B_{2n} series disagrees with closed form");
    return closed;
  }

  // d = 2: (B_{2n})^2 series, checked against the 4F3 form at the same order.
  double series = 0.0;
  for (int n = 1; n <= n_max; ++n) {
    const double b = b2n(n);
    series -= b * b * std::pow(u2, n) / (2.0 * n);
  }
  const double f43 = -(u2 / 8.0) * hyp4f3_series(u2, n_max);
  const double last = b2n(n_max) * b2n(n_max) * std::pow(u2, n_max) / (2.0 * n_max);
  if (std::abs(series - f43) > last + 1e-10 * (1.0 + std::abs(series)))
    throw accuracy_error("rw_log_zeta_closed: (B_{2n})^2 series disagrees with 4F3 form");
  return series;
}

}  // namespace rz
