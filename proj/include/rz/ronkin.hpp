#pragma once

#include <vector>

#include "rz/laurent.hpp"
#include "rz/quadrature.hpp"
#include "rz/spectral_zeta.hpp"

namespace rz {

struct RonkinEvaluation {
  std::vector<double> x;
  double value = 0.0;
  QuadratureDiag diag;
  bool singular_flag = false;  // integrand vanished within tolerance at a node
  double min_abs = 0.0;        // nearest-to-zero |P| encountered
};

// Ronkin function R(x) = mean over [0,2pi)^k of log|P(e^{x_1} e^{i
// theta_1}, ...)|. Trapezoidal tensor grid with doubling refinement;
// near-zeros of |P| trigger a one-node local subdivision before the
// evaluation is flagged singular.
RonkinEvaluation ronkin_eval(const LaurentPolynomial& p, std::vector<double> x,
                             const QuadratureSpec& quad);

// R^(m)(0) in closed form: (1/2) log((a + sqrt(a^2 - b^2))/2) with
// a = 1 - 2 sin^2 xi u^2 + u^4, b = 2 cos^2 xi u^2.
double qw_ronkin_closed(double xi, double u);

struct CorrespondenceReport {
  double log_zeta_value = 0.0;  // L via the spectral route
  double ronkin_value = 0.0;    // R(0,...,0) via torus quadrature
  double difference = 0.0;
};

CorrespondenceReport correspondence_rw(int d, double u, const QuadratureSpec& quad);
CorrespondenceReport correspondence_qw(double xi, double u, Shift shift,
                                       const QuadratureSpec& quad);

}  // namespace rz
