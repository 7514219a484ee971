#pragma once

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <vector>

#include "rz/errors.hpp"

namespace rz {

// Composite trapezoidal rule on the periodic uniform grid over [0,2pi)^d,
// identical to the finite-torus momentum sum with N = nodes_per_dim.
// Spectrally accurate for periodic analytic integrands; refinement doubles
// the node count per dimension until two successive values agree.
struct QuadratureSpec {
  int nodes_per_dim = 16;
  double tolerance = 1e-10;
  int max_nodes_per_dim = 1 << 16;

  QuadratureSpec() = default;
  QuadratureSpec(int n, double tol) : nodes_per_dim(n), tolerance(tol) {
    if (n < 2) throw config_error("quadrature nodes_per_dim must be >= 2");
    if (tol <= 0.0) throw config_error("quadrature tolerance must be positive");
  }
};

struct QuadratureDiag {
  long long nodes = 0;       // total grid points of the final pass
  double delta = 0.0;        // |value difference| of the last refinement
  bool converged = true;
};

// Number of worker threads: RZ_THREADS caps OpenMP (default: machine).
int thread_count();
void apply_thread_env();

// Mean of f over the uniform n^dim grid. The reduction order is fixed
// (row-major, serial within each inner row, rows combined in index order)
// so results are bit-identical for any thread count. `parallel` switches
// between the OpenMP kernel and the serial reference.
template <class F>
double grid_mean(int dim, int n, F&& f, bool parallel = true) {
  const double step = 2.0 * std::numbers::pi / n;
  long long outer = 1;
  for (int j = 0; j < dim - 1; ++j) outer *= n;

  std::vector<double> row_sum(static_cast<size_t>(outer), 0.0);

  if (parallel) {
#pragma omp parallel for schedule(static)
    for (long long o = 0; o < outer; ++o) {
      std::vector<double> theta(dim);
      long long rem = o;
      for (int j = dim - 2; j >= 0; --j) {
        theta[j] = step * static_cast<double>(rem % n);
        rem /= n;
      }
      double s = 0.0;
      for (int i = 0; i < n; ++i) {
        theta[dim - 1] = step * i;
        s += f(theta.data());
      }
      row_sum[o] = s;
    }
  } else {
    std::vector<double> theta(dim);
    for (long long o = 0; o < outer; ++o) {
      long long rem = o;
      for (int j = dim - 2; j >= 0; --j) {
        theta[j] = step * static_cast<double>(rem % n);
        rem /= n;
      }
      double s = 0.0;
      for (int i = 0; i < n; ++i) {
        theta[dim - 1] = step * i;
        s += f(theta.data());
      }
      row_sum[o] = s;
    }
  }

  double total = 0.0;
  for (long long o = 0; o < outer; ++o) total += row_sum[o];
  double count = 1.0;
  for (int j = 0; j < dim; ++j) count *= n;
  return total / count;
}

// Doubling refinement of grid_mean until |v_{2n} - v_n| < spec.tolerance.
template <class F>
double refine_grid_mean(int dim, const QuadratureSpec& spec, QuadratureDiag& diag,
                        F&& f, bool parallel = true) {
  int cap = spec.max_nodes_per_dim;
  // Keep d=2/3 tensor grids at desk scale.
  if (dim == 2) cap = std::min(cap, 1 << 12);
  if (dim >= 3) cap = std::min(cap, 1 << 8);

  int n = spec.nodes_per_dim;
  double prev = grid_mean(dim, n, f, parallel);
  while (true) {
    if (2LL * n > cap) {
      diag.converged = false;
      long long nodes = 1;
      for (int j = 0; j < dim; ++j) nodes *= n;
      diag.nodes = nodes;
      return prev;
    }
    n *= 2;
    double cur = grid_mean(dim, n, f, parallel);
    diag.delta = std::abs(cur - prev);
    long long nodes = 1;
    for (int j = 0; j < dim; ++j) nodes *= n;
    diag.nodes = nodes;
    if (diag.delta < spec.tolerance) {
      diag.converged = true;
      return cur;
    }
    prev = cur;
  }
}

}  // namespace rz
