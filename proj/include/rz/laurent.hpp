#pragma once

#include <complex>
#include <map>
#include <span>
#include <vector>

#include "rz/rational.hpp"
#include "rz/walk_model.hpp"

namespace rz {

// Coefficient of one monomial; the valuation rides along for the tropical
// module (complex constants have valuation 0).
struct LaurentCoeff {
  Complex value{0.0, 0.0};
  Rational valuation{0, 1};
};

// Finite map from integer exponent vectors to coefficients. Zero
// coefficients are not stored; exponent vectors are unique; term order is
// lexicographic and therefore deterministic.
class LaurentPolynomial {
 public:
  explicit LaurentPolynomial(int k);

  int dim() const { return k_; }
  bool empty() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<std::vector<int>, LaurentCoeff>& terms() const { return terms_; }

  void set(std::vector<int> exponent, Complex value, Rational valuation = {0, 1});
  // Adds into an existing coefficient, dropping it if it cancels to zero.
  void add(std::vector<int> exponent, Complex value);
  const LaurentCoeff* find(const std::vector<int>& exponent) const;

  // P evaluated at z_j = e^{x_j + i theta_j}.
  Complex eval_log_polar(std::span<const double> x, std::span<const double> theta) const;
  Complex eval(std::span<const Complex> z) const;

  // sum |a_I| e^{<I,x>}: natural magnitude scale of the evaluations at x.
  double magnitude_scale(std::span<const double> x) const;

  // Exponent range in the given variable.
  std::pair<int, int> degree_span(int variable) const;

 private:
  int k_;
  std::map<std::vector<int>, LaurentCoeff> terms_;
};

// 1 - (u/2d) sum_j (z_j + 1/z_j).
LaurentPolynomial p_rw(int d, double u);

// M: 1 - cos xi (z - 1/z) u - u^2;  F: 1 - sin xi (z + 1/z) u + u^2.
LaurentPolynomial p_qw(double xi, double u, Shift shift);

// The u=1 zero-set-equivalent rescalings: sum_j (z_j + 1/z_j) - 2d,
// z - 1/z - 1/cos xi, z + 1/z - 1/sin xi.
LaurentPolynomial p_rw_simplified(int d);
LaurentPolynomial p_qw_simplified(Shift shift, double xi);

}  // namespace rz
