#include "rz/laurent.hpp"

#include <cmath>
#include <numbers>

#include "rz/errors.hpp"

namespace rz {

LaurentPolynomial::LaurentPolynomial(int k) : k_(k) {
  if (k < 1) throw domain_error("Laurent polynomial dimension must be positive");
}

void LaurentPolynomial::set(std::vector<int> exponent, Complex value, Rational valuation) {
  if (static_cast<int>(exponent.size()) != k_)
    throw domain_error("Laurent term exponent has wrong dimension");
  if (value == Complex(0.0, 0.0)) {
    terms_.erase(exponent);
    return;
  }
  terms_[std::move(exponent)] = LaurentCoeff{value, valuation};
}

void LaurentPolynomial::add(std::vector<int> exponent, Complex value) {
  if (static_cast<int>(exponent.size()) != k_)
    throw domain_error("Laurent term exponent has wrong dimension");
  auto it = terms_.find(exponent);
  if (it == terms_.end()) {
    if (value != Complex(0.0, 0.0))
      terms_[std::move(exponent)] = LaurentCoeff{value, Rational{0, 1}};
    return;
  }
  it->second.value += value;
  if (it->second.value == Complex(0.0, 0.0)) terms_.erase(it);
}

const LaurentCoeff* LaurentPolynomial::find(const std::vector<int>& exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? nullptr : &it->second;
}

Complex LaurentPolynomial::eval_log_polar(std::span<const double> x,
                                          std::span<const double> theta) const {
  Complex sum = 0.0;
  for (const auto& [exp, coeff] : terms_) {
    double mag = 0.0, arg = 0.0;
    for (int j = 0; j < k_; ++j) {
      mag += exp[j] * x[j];
      arg += exp[j] * theta[j];
    }
    sum += coeff.value * std::polar(std::exp(mag), arg);
  }
  return sum;
}

Complex LaurentPolynomial::eval(std::span<const Complex> z) const {
  Complex sum = 0.0;
  for (const auto& [exp, coeff] : terms_) {
    Complex mono = 1.0;
    for (int j = 0; j < k_; ++j) {
      if (exp[j] == 0) continue;
      Complex base = exp[j] > 0 ? z[j] : 1.0 / z[j];
      for (int p = 0; p < std::abs(exp[j]); ++p) mono *= base;
    }
    sum += coeff.value * mono;
  }
  return sum;
}

double LaurentPolynomial::magnitude_scale(std::span<const double> x) const {
  double s = 0.0;
  for (const auto& [exp, coeff] : terms_) {
    double mag = 0.0;
    for (int j = 0; j < k_; ++j) mag += exp[j] * x[j];
    s += std::abs(coeff.value) * std::exp(mag);
  }
  return s;
}

std::pair<int, int> LaurentPolynomial::degree_span(int variable) const {
  if (variable < 0 || variable >= k_)
    throw domain_error("degree_span: variable index out of range");
  int lo = 0, hi = 0;
  bool first = true;
  for (const auto& [exp, coeff] : terms_) {
    if (first) {
      lo = hi = exp[variable];
      first = false;
    } else {
      lo = std::min(lo, exp[variable]);
      hi = std::max(hi, exp[variable]);
    }
  }
  return {lo, hi};
}

LaurentPolynomial p_rw(int d, double u) {
  if (d < 1) throw domain_error("p_rw: dimension must be positive");
  LaurentPolynomial p(d);
  p.set(std::vector<int>(d, 0), Complex(1.0, 0.0));
  const double c = -u / (2.0 * d);
  for (int j = 0; j < d; ++j) {
    std::vector<int> e(d, 0);
    e[j] = 1;
    p.set(e, Complex(c, 0.0));
    e[j] = -1;
    p.set(e, Complex(c, 0.0));
  }
  return p;
}

LaurentPolynomial p_qw(double xi, double u, Shift shift) {
  LaurentPolynomial p(1);
  if (shift == Shift::M) {
    p.set({0}, Complex(1.0 - u * u, 0.0));
    p.set({1}, Complex(-std::cos(xi) * u, 0.0));
    p.set({-1}, Complex(std::cos(xi) * u, 0.0));
  } else {
    p.set({0}, Complex(1.0 + u * u, 0.0));
    p.set({1}, Complex(-std::sin(xi) * u, 0.0));
    p.set({-1}, Complex(-std::sin(xi) * u, 0.0));
  }
  return p;
}

LaurentPolynomial p_rw_simplified(int d) {
  if (d < 1) throw domain_error("p_rw_simplified: dimension must be positive");
  LaurentPolynomial p(d);
  p.set(std::vector<int>(d, 0), Complex(-2.0 * d, 0.0));
  for (int j = 0; j < d; ++j) {
    std::vector<int> e(d, 0);
    e[j] = 1;
    p.set(e, Complex(1.0, 0.0));
    e[j] = -1;
    p.set(e, Complex(1.0, 0.0));
  }
  return p;
}

LaurentPolynomial p_qw_simplified(Shift shift, double xi) {
  const double half_pi = std::numbers::pi / 2.0;
  const double m = std::fmod(std::abs(xi), half_pi);
  if (std::min(m, half_pi - m) < 1e-12)
    throw domain_error("p_qw_simplified: xi = n*pi/2 is degenerate");
  LaurentPolynomial p(1);
  if (shift == Shift::M) {
    p.set({1}, Complex(1.0, 0.0));
    p.set({-1}, Complex(-1.0, 0.0));
    p.set({0}, Complex(-1.0 / std::cos(xi), 0.0));
  } else {
    p.set({1}, Complex(1.0, 0.0));
    p.set({-1}, Complex(1.0, 0.0));
    p.set({0}, Complex(-1.0 / std::sin(xi), 0.0));
  }
  return p;
}

}  // namespace rz
