#pragma once

#include <complex>
#include <optional>

#include "rz/quadrature.hpp"
#include "rz/walk_model.hpp"

namespace rz {

struct ZetaResult {
  Complex value;
  double u = 0.0;
  std::optional<TorusSpec> torus;  // empty: infinite torus (quadrature limit)
  QuadratureDiag diag;
};

// Walk-type zeta: [prod_k det(I - u Mhat(ktilde))]^{-1/N^d}, evaluated as
// exp(-(1/N^d) sum log det) with the principal complex log.
ZetaResult finite_zeta(const CoinMatrix& coin, const TorusSpec& torus, double u);

// Logarithmic zeta L(A, T^d_inf, u): periodic trapezoidal quadrature of
// log det(I - u Mhat(Theta)) over [0,2pi)^d with doubling refinement.
// u-ranges enforced per model: RW (-1,1); QW M-type (cos xi - sqrt(cos^2
// xi + 1), 0]; QW F-type u <= 0. General coins get only the branch checks.
ZetaResult log_zeta(const CoinMatrix& coin, double u, const QuadratureSpec& quad);

// C_r on the finite torus: (1/N^d) sum_k Tr(Mhat(ktilde)^r).
Complex c_r_finite(const CoinMatrix& coin, const TorusSpec& torus, int r);

// N -> infinity limit of C_r; exact once the grid has more than 2r nodes
// per dimension (trigonometric-polynomial integrand).
Complex c_r_limit(const CoinMatrix& coin, int r, const QuadratureSpec& quad);

struct SeriesResult {
  double value = 0.0;
  double last_term = 0.0;  // |C_{r_max} u^{r_max} / r_max|, truncation diagnostic
};

// Partial sum -sum_{r<=r_max} C_r(A, T^d_inf) u^r / r (trace-moment route).
SeriesResult series_log_zeta(const CoinMatrix& coin, double u, int r_max,
                             const QuadratureSpec& quad);

// Lower endpoint of the admissible M-type u-range for the qw_coin family.
double qw_m_lower_bound(double xi);

inline constexpr int kSeriesCap = 200;

}  // namespace rz
