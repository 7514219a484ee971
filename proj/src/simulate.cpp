#include "rz/simulate.hpp"

#include <cmath>

#include "rz/errors.hpp"

namespace rz {

namespace {

long long pow_ll(long long base, int exp) {
  long long v = 1;
  for (int i = 0; i < exp; ++i) v *= base;
  return v;
}

long long index_of(const std::vector<int>& x, int d, int side, int offset) {
  long long idx = 0;
  for (int j = d - 1; j >= 0; --j) {
    const int c = x[j] + offset;
    if (c < 0 || c >= side) throw domain_error("site coordinates outside the window");
    idx = idx * side + c;
  }
  return idx;
}

std::vector<int> coords_of(long long index, int d, int side, int offset) {
  std::vector<int> x(d);
  for (int j = 0; j < d; ++j) {
    x[j] = static_cast<int>(index % side) - offset;
    index /= side;
  }
  return x;
}

}  // namespace

long long WalkState::site_count() const {
  return torus ? torus->sites() : pow_ll(2LL * radius + 1, d);
}

long long WalkState::site_index(const std::vector<int>& x) const {
  return index_of(x, d, side(), torus ? 0 : radius);
}

std::vector<int> WalkState::site_coords(long long index) const {
  return coords_of(index, d, side(), torus ? 0 : radius);
}

long long MatrixWeightField::site_count() const { return pow_ll(2LL * radius + 1, d); }

long long MatrixWeightField::site_index(const std::vector<int>& x) const {
  return index_of(x, d, 2 * radius + 1, radius);
}

std::vector<int> MatrixWeightField::site_coords(long long index) const {
  return coords_of(index, d, 2 * radius + 1, radius);
}

WalkState delta_state(const TorusSpec& torus, const Eigen::VectorXcd& amplitude) {
  if (amplitude.size() != 2 * torus.d)
    throw domain_error("delta_state: amplitude must have 2d components");
  WalkState s;
  s.d = torus.d;
  s.torus = torus;
  s.values.assign(static_cast<std::size_t>(torus.sites()),
                  Eigen::VectorXcd::Zero(2 * torus.d));
  s.values[0] = amplitude;
  return s;
}

WalkState delta_state_lattice(int d, const Eigen::VectorXcd& amplitude) {
  if (amplitude.size() != 2 * d)
    throw domain_error("delta_state_lattice: amplitude must have 2d components");
  WalkState s;
  s.d = d;
  s.radius = 0;
  s.values.assign(1, amplitude);
  return s;
}

WalkState evolve(const WalkState& state, const CoinMatrix& coin) {
  if (coin.d() != state.d) throw domain_error("evolve: coin/state dimension mismatch");
  const int d = state.d;
  const int n = 2 * d;
  const Matrix& A = coin.entries();

  WalkState next;
  next.d = d;
  next.torus = state.torus;
  next.radius = state.torus ? 0 : state.radius + 1;
  next.values.assign(static_cast<std::size_t>(next.site_count()),
                     Eigen::VectorXcd::Zero(n));

  const long long count = next.site_count();
  for (long long idx = 0; idx < count; ++idx) {
    std::vector<int> x = next.site_coords(idx);
    Eigen::VectorXcd& out = next.values[static_cast<std::size_t>(idx)];
    for (int j = 0; j < d; ++j) {
      for (int dir : {+1, -1}) {
        std::vector<int> y = x;
        y[j] += dir;
        if (state.torus) {
          const int N = static_cast<int>(state.torus->N);
          y[j] = ((y[j] % N) + N) % N;
        } else {
          bool outside = false;
          for (int c : y) outside = outside || std::abs(c) > state.radius;
          if (outside) continue;
        }
        const Eigen::VectorXcd& src = state.values[state.site_index(y)];
        const int row = dir > 0 ? 2 * j : 2 * j + 1;
        out[row] += (A.row(row) * src).value();
      }
    }
  }
  return next;
}

MatrixWeightField matrix_weight(const CoinMatrix& coin, int n) {
  if (n < 0) throw domain_error("matrix_weight: n must be non-negative");
  if (n > kMatrixWeightCap)
    throw domain_error("matrix_weight: step count exceeds the window cap");
  const int d = coin.d();
  const int dim = 2 * d;
  const Matrix& A = coin.entries();

  MatrixWeightField cur;
  cur.d = d;
  cur.radius = 0;
  cur.values.assign(1, Matrix::Identity(dim, dim));

  for (int step = 0; step < n; ++step) {
    MatrixWeightField next;
    next.d = d;
    next.radius = cur.radius + 1;
    next.values.assign(static_cast<std::size_t>(next.site_count()),
                       Matrix::Zero(dim, dim));
    const long long count = next.site_count();
    for (long long idx = 0; idx < count; ++idx) {
      std::vector<int> x = next.site_coords(idx);
      Matrix& out = next.values[static_cast<std::size_t>(idx)];
      for (int j = 0; j < d; ++j) {
        for (int dir : {+1, -1}) {
          std::vector<int> y = x;
          y[j] += dir;
          bool outside = false;
          for (int c : y) outside = outside || std::abs(c) > cur.radius;
          if (outside) continue;
          const Matrix& src = cur.values[cur.site_index(y)];
          const int row = dir > 0 ? 2 * j : 2 * j + 1;
          out.row(row) += A.row(row) * src;
        }
      }
    }
    cur = std::move(next);
  }
  return cur;
}

Complex return_trace(const CoinMatrix& coin, int r) {
  if (r < 1) throw domain_error("return_trace: r must be positive");
  const MatrixWeightField field = matrix_weight(coin, r);
  return field.at(std::vector<int>(coin.d(), 0)).trace();
}

std::vector<double> measure(const WalkState& state, int p) {
  if (p != 1 && p != 2) throw domain_error("measure: p must be 1 or 2");
  std::vector<double> mu(state.values.size());
  for (std::size_t i = 0; i < state.values.size(); ++i) {
    double v = 0.0;
    for (Eigen::Index c = 0; c < state.values[i].size(); ++c) {
      const double a = std::abs(state.values[i][c]);
      v += p == 1 ? a : a * a;
    }
    mu[i] = v;
  }
  return mu;
}

double total_measure(const WalkState& state, int p) {
  double total = 0.0;
  for (double v : measure(state, p)) total += v;
  return total;
}

int default_measure_exponent(WalkClass cls) {
  return cls == WalkClass::RW || cls == WalkClass::CRW ? 1 : 2;
}

}  // namespace rz
