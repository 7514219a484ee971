#pragma once

#include "rz/rational.hpp"
#include "rz/walk_model.hpp"

namespace rz {

// Terminating 2F1(1-l, 1-l; 2; x) = sum_{m=0}^{l-1} [(1-l)_m]^2 / [(2)_m m!] x^m.
double hyp2f1_terminating(int l, double x);

// C_{2l} for the one-parameter QW coin family: evaluates both the finite-sum
// and the 2F1 form and requires them to agree to 1e-12.
double qw_c2l(double xi, int l, Shift shift);

// log((1 -+ u^2 + sqrt(1 + 2 cos(2 xi) u^2 + u^4)) / 2); minus for M, plus
// for F. Domain checks follow the stated ranges (M: (cos xi - sqrt(cos^2 xi
// + 1), 0]; F: u <= 0) with a 1e-14 endpoint margin.
double qw_log_zeta_closed(double xi, double u, Shift shift);

// B_{2n} = binom(2n, n) / 4^n; exact fraction for n <= 32.
Rational b2n_exact(int n);
double b2n(int n);

// Partial sum of 4F3(3/2, 3/2, 1, 1; 2, 2, 2; x) by term recurrence.
double hyp4f3_series(double x, int n_terms);

// d=1: closed log form, cross-checked against the B_{2n} series partial
// sum within its truncation bound. d=2: (B_{2n})^2-series partial sum,
// cross-checked against the 4F3 form truncated at the same order.
double rw_log_zeta_closed(int d, double u, int n_max);

// True when u lies in the (-1, 0) range where the d<=2 RW closed forms are
// derived; values for u in (0, 1) are still returned but flagged.
bool rw_closed_form_in_stated_domain(double u);

}  // namespace rz
