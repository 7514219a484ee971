#include "rz/spectral_zeta.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include "rz/errors.hpp"

namespace rz {

namespace {

constexpr double kPoleFloor = 1e-280;
constexpr double kImagTol = 1e-13;
constexpr double kRangeMargin = 1e-14;

void enforce_u_range(const CoinMatrix& coin, double u) {
  switch (coin.walk_class()) {
    case WalkClass::RW:
      if (u <= -1.0 + kRangeMargin || u >= 1.0 - kRangeMargin)
        throw domain_error("RW logarithmic zeta requires u in (-1, 1)");
      break;
    case WalkClass::QW:
      if (coin.qw_angle()) {
        const double xi = *coin.qw_angle();
        if (coin.shift() == Shift::M) {
          const double lo = qw_m_lower_bound(xi);
          if (u < lo + kRangeMargin || u > 0.0)
            throw domain_error(
                "QW M-type logarithmic zeta requires u in (cos xi - "
                "sqrt(cos^2 xi + 1), 0]");
        } else if (u > 0.0) {
          throw domain_error("QW F-type logarithmic zeta requires u <= 0");
        }
      }
      break;
    default:
      break;  // general coins: only the positivity/branch checks below
  }
}

struct LogDetStats {
  bool nonpositive_real = false;
  bool phase_jump = false;
  bool pole = false;
};

// Mean of log det(I - u Mhat) over the n^d grid. Complex principal log per
// node; within each inner row the phase is required to move by less than pi
// between adjacent nodes. Fixed reduction order (rows in index order).
Complex log_det_mean(const CoinMatrix& coin, double u, int n, LogDetStats& stats) {
  const int d = coin.d();
  const double step = 2.0 * std::numbers::pi / n;
  long long outer = 1;
  for (int j = 0; j < d - 1; ++j) outer *= n;

  std::vector<Complex> row_sum(static_cast<size_t>(outer));
  bool nonpos = false, jump = false, pole = false;

#pragma omp parallel for schedule(static) reduction(|| : nonpos, jump, pole)
  for (long long o = 0; o < outer; ++o) {
    std::vector<double> ktilde(d);
    long long rem = o;
    for (int j = d - 2; j >= 0; --j) {
      ktilde[j] = step * static_cast<double>(rem % n);
      rem /= n;
    }
    Complex s = 0.0;
    double prev_arg = 0.0;
    bool have_prev = false;
    for (int i = 0; i < n; ++i) {
      ktilde[d - 1] = step * i;
      const Complex det = char_det(coin, ktilde, u);
      if (std::abs(det) < kPoleFloor) {
        pole = true;
        continue;
      }
      if (std::abs(det.imag()) <= kImagTol * (1.0 + std::abs(det.real()))) {
        if (det.real() <= 0.0) nonpos = true;
      } else {
        const double arg = std::arg(det);
        if (have_prev && std::abs(arg - prev_arg) > std::numbers::pi) jump = true;
        prev_arg = arg;
        have_prev = true;
      }
      s += std::log(det);
    }
    row_sum[o] = s;
  }

  stats.nonpositive_real = nonpos;
  stats.phase_jump = jump;
  stats.pole = pole;

  Complex total = 0.0;
  for (long long o = 0; o < outer; ++o) total += row_sum[o];
  double count = 1.0;
  for (int j = 0; j < d; ++j) count *= n;
  return total / count;
}

// Mean of Tr(Mhat^r) over the n^d grid, row-major fixed order. Shared by
// the finite-torus sum and the quadrature limit so that the two coincide
// bitwise on equal grids.
Complex trace_power_mean(const CoinMatrix& coin, int r, int n) {
  const int d = coin.d();
  const double step = 2.0 * std::numbers::pi / n;
  long long outer = 1;
  for (int j = 0; j < d - 1; ++j) outer *= n;

  std::vector<Complex> row_sum(static_cast<size_t>(outer));

#pragma omp parallel for schedule(static)
  for (long long o = 0; o < outer; ++o) {
    std::vector<double> ktilde(d);
    long long rem = o;
    for (int j = d - 2; j >= 0; --j) {
      ktilde[j] = step * static_cast<double>(rem % n);
      rem /= n;
    }
    Complex s = 0.0;
    for (int i = 0; i < n; ++i) {
      ktilde[d - 1] = step * i;
      const Matrix m = momentum_matrix(coin, ktilde);
      Matrix p = m;
      for (int q = 1; q < r; ++q) p = p * m;
      s += p.trace();
    }
    row_sum[o] = s;
  }

  Complex total = 0.0;
  for (long long o = 0; o < outer; ++o) total += row_sum[o];
  double count = 1.0;
  for (int j = 0; j < d; ++j) count *= n;
  return total / count;
}

}  // namespace

double qw_m_lower_bound(double xi) {
  const double c = std::cos(xi);
  return c - std::sqrt(c * c + 1.0);
}

ZetaResult finite_zeta(const CoinMatrix& coin, const TorusSpec& torus, double u) {
  if (torus.d != coin.d())
    throw domain_error("finite_zeta: torus/coin dimension mismatch");
  const int d = coin.d();
  const long long sites = torus.sites();
  const double step = 2.0 * std::numbers::pi / static_cast<double>(torus.N);

  Complex sum = 0.0;
  std::vector<double> ktilde(d);
  std::vector<long long> idx(d, 0);
  for (long long flat = 0; flat < sites; ++flat) {
    long long rem = flat;
    for (int j = d - 1; j >= 0; --j) {
      idx[j] = rem % torus.N;
      rem /= torus.N;
      ktilde[j] = step * static_cast<double>(idx[j]);
    }
    const Complex det = char_det(coin, ktilde, u);
    if (std::abs(det) < kPoleFloor) {
      std::ostringstream msg;
      msg << "finite_zeta: determinant vanishes at grid point k = (";
      for (int j = 0; j < d; ++j) msg << idx[j] << (j + 1 < d ? "," : ")");
      throw domain_error(msg.str());
    }
    sum += std::log(det);
  }

  ZetaResult res;
  res.u = u;
  res.torus = torus;
  res.diag.nodes = sites;
  res.value = std::exp(-sum / static_cast<double>(sites));
  if (std::abs(res.value.imag()) <= kImagTol * (1.0 + std::abs(res.value.real())))
    res.value = Complex(res.value.real(), 0.0);
  return res;
}

ZetaResult log_zeta(const CoinMatrix& coin, double u, const QuadratureSpec& quad) {
  if (coin.d() > 3)
    throw domain_error("log_zeta: quadrature limited to d <= 3");
  ZetaResult res;
  res.u = u;
  if (u == 0.0) {
    res.value = 0.0;
    return res;
  }
  enforce_u_range(coin, u);

  int cap = quad.max_nodes_per_dim;
  if (coin.d() == 2) cap = std::min(cap, 1 << 12);
  if (coin.d() == 3) cap = std::min(cap, 1 << 8);

  auto evaluate = [&](int n) {
    LogDetStats stats;
    const Complex v = log_det_mean(coin, u, n, stats);
    if (stats.pole)
      throw domain_error("log_zeta: determinant vanishes on the grid (u out of range)");
    if (stats.nonpositive_real)
      throw domain_error(
          "log_zeta: integrand determinant <= 0 on the real branch; u is "
          "outside the model's admissible range");
    if (stats.phase_jump)
      throw domain_error(
          "log_zeta: phase jump > pi between adjacent nodes; complex "
          "branch ill-defined for this u");
    return v;
  };

  int n = quad.nodes_per_dim;
  Complex prev = evaluate(n);
  while (true) {
    if (2LL * n > cap) {
      res.diag.converged = false;
      res.value = prev;
      long long nodes = 1;
      for (int j = 0; j < coin.d(); ++j) nodes *= n;
      res.diag.nodes = nodes;
      throw accuracy_error("log_zeta: node cap reached before convergence");
    }
    n *= 2;
    const Complex cur = evaluate(n);
    res.diag.delta = std::abs(cur - prev);
    long long nodes = 1;
    for (int j = 0; j < coin.d(); ++j) nodes *= n;
    res.diag.nodes = nodes;
    if (res.diag.delta < quad.tolerance) {
      res.value = cur;
      if (std::abs(res.value.imag()) <= 1e-10 * (1.0 + std::abs(res.value.real())))
        res.value = Complex(res.value.real(), 0.0);
      return res;
    }
    prev = cur;
  }
}

Complex c_r_finite(const CoinMatrix& coin, const TorusSpec& torus, int r) {
  if (r < 1) throw domain_error("c_r_finite: r must be positive");
  if (torus.d != coin.d())
    throw domain_error("c_r_finite: torus/coin dimension mismatch");
  return trace_power_mean(coin, r, static_cast<int>(torus.N));
}

Complex c_r_limit(const CoinMatrix& coin, int r, const QuadratureSpec& quad) {
  if (r < 1) throw domain_error("c_r_limit: r must be positive");
  if (coin.d() > 3) throw domain_error("c_r_limit: quadrature limited to d <= 3");
  const int n0 = std::max(quad.nodes_per_dim, 2 * r + 2);
  const Complex value = trace_power_mean(coin, r, n0);
  // The integrand is a trigonometric polynomial of degree r, so the n0
  // grid is already exact; one doubling is kept as a guard.
  const Complex check = trace_power_mean(coin, r, 2 * n0);
  if (std::abs(check - value) > quad.tolerance * (1.0 + std::abs(value)))
    throw accuracy_error("c_r_limit: trapezoidal sums did not stabilize");
  return value;
}

SeriesResult series_log_zeta(const CoinMatrix& coin, double u, int r_max,
                             const QuadratureSpec& quad) {
  if (r_max < 1) throw domain_error("series_log_zeta: r_max must be positive");
  if (r_max > kSeriesCap)
    throw config_error("series_log_zeta: r_max exceeds the cap of 200");
  if (coin.d() > 3)
    throw domain_error("series_log_zeta: quadrature limited to d <= 3");

  const int d = coin.d();
  const int n = std::max(quad.nodes_per_dim, 2 * r_max + 2);
  const double step = 2.0 * std::numbers::pi / n;
  long long outer = 1;
  for (int j = 0; j < d - 1; ++j) outer *= n;

  // All trace moments in one sweep over the finest grid needed.
  std::vector<std::vector<Complex>> row_traces(static_cast<size_t>(outer));

#pragma omp parallel for schedule(static)
  for (long long o = 0; o < outer; ++o) {
    std::vector<double> ktilde(d);
    long long rem = o;
    for (int j = d - 2; j >= 0; --j) {
      ktilde[j] = step * static_cast<double>(rem % n);
      rem /= n;
    }
    std::vector<Complex> acc(static_cast<size_t>(r_max), Complex(0.0));
    for (int i = 0; i < n; ++i) {
      ktilde[d - 1] = step * i;
      const Matrix m = momentum_matrix(coin, ktilde);
      Matrix p = m;
      acc[0] += p.trace();
      for (int r = 2; r <= r_max; ++r) {
        p = p * m;
        acc[static_cast<size_t>(r - 1)] += p.trace();
      }
    }
    row_traces[o] = std::move(acc);
  }

  double count = 1.0;
  for (int j = 0; j < d; ++j) count *= n;

  SeriesResult res;
  double sum = 0.0;
  double upow = 1.0;
  for (int r = 1; r <= r_max; ++r) {
    Complex cr = 0.0;
    for (long long o = 0; o < outer; ++o) cr += row_traces[o][static_cast<size_t>(r - 1)];
    cr /= count;
    upow *= u;
    const double term = cr.real() * upow / r;
    sum -= term;
    if (r == r_max) res.last_term = std::abs(term);
  }
  res.value = sum;
  return res;
}

}  // namespace rz
