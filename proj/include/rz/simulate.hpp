#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "rz/walk_model.hpp"

namespace rz {

// Site-space walk state: one 2d-component vector per site, either on a
// torus or on a growing lattice window [-radius, radius]^d.
struct WalkState {
  int d = 1;
  std::optional<TorusSpec> torus;  // unset: infinite-lattice window
  int radius = 0;                  // lattice window half-width
  std::vector<Eigen::VectorXcd> values;

  long long site_count() const;
  int side() const { return torus ? static_cast<int>(torus->N) : 2 * radius + 1; }
  // site index from coordinates (torus coords in [0,N), lattice in [-radius,radius])
  long long site_index(const std::vector<int>& x) const;
  std::vector<int> site_coords(long long index) const;
};

// delta state at the origin with the given 2d-component amplitude
WalkState delta_state(const TorusSpec& torus, const Eigen::VectorXcd& amplitude);
WalkState delta_state_lattice(int d, const Eigen::VectorXcd& amplitude);

// One step: component 2j reads the coin-rotated state at x+e_j, component
// 2j+1 at x-e_j (0-based components). Lattice windows grow by one.
WalkState evolve(const WalkState& state, const CoinMatrix& coin);

// Per-site matrix weights on the growing lattice window.
struct MatrixWeightField {
  int d = 1;
  int radius = 0;
  std::vector<Matrix> values;  // indexed like a lattice WalkState

  long long site_count() const;
  long long site_index(const std::vector<int>& x) const;
  std::vector<int> site_coords(long long index) const;
  const Matrix& at(const std::vector<int>& x) const { return values[site_index(x)]; }
};

inline constexpr int kMatrixWeightCap = 20;

MatrixWeightField matrix_weight(const CoinMatrix& coin, int n);

// Tr of the step-r matrix weight at the origin.
Complex return_trace(const CoinMatrix& coin, int r);

// Per-site p-norm power of the state (p = 1 or 2).
std::vector<double> measure(const WalkState& state, int p);
double total_measure(const WalkState& state, int p);

// natural measure exponent for a walk class (RW/CRW: 1, otherwise 2)
int default_measure_exponent(WalkClass cls);

}  // namespace rz
