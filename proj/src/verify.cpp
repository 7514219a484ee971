#include "rz/verify.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

#include "rz/amoeba.hpp"
#include "rz/closed_forms.hpp"
#include "rz/errors.hpp"
#include "rz/laurent.hpp"
#include "rz/polytope.hpp"
#include "rz/quadrature.hpp"
#include "rz/ronkin.hpp"
#include "rz/simulate.hpp"
#include "rz/spectral_zeta.hpp"
#include "rz/tropical.hpp"
#include "rz/walk_model.hpp"

namespace rz {

CoinMatrix random_qw_coin(int d, std::mt19937& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  const int n = 2 * d;
  Matrix g(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) g(r, c) = Complex(gauss(rng), gauss(rng));
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  // fix the diagonal phases of R so the factorization is unique
  Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int c = 0; c < n; ++c) {
    const Complex rc = r(c, c);
    if (std::abs(rc) > 0) q.col(c) *= rc / std::abs(rc);
  }
  return CoinMatrix(d, q, Shift::M, WalkClass::QW);
}

CoinMatrix random_rw_coin(int d, std::mt19937& rng) {
  std::uniform_real_distribution<double> unif(0.05, 1.0);
  const int n = 2 * d;
  std::vector<double> p(n);
  double total = 0.0;
  for (double& v : p) {
    v = unif(rng);
    total += v;
  }
  Matrix a(n, n);
  for (int r = 0; r < n; ++r) a.row(r).setConstant(Complex(p[r] / total, 0.0));
  return CoinMatrix(d, a, Shift::M, WalkClass::RW);
}

namespace {

constexpr double kPi = std::numbers::pi;

struct Check {
  std::string id;
  std::function<bool(std::ostringstream&)> run;
};

bool close(double a, double b, double tol) { return std::abs(a - b) < tol; }

std::vector<CoinMatrix> reference_coins() {
  return {rw_coin(1), rw_coin(2), qw_coin(kPi / 4, Shift::M),
          qw_coin(kPi / 3, Shift::F)};
}

// ---- walk-model ----

bool check_spectrum_det_product(std::ostringstream& why) {
  std::mt19937 rng(101);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
  for (const auto& coin : reference_coins()) {
    std::vector<double> k(coin.d());
    for (double& v : k) v = angle(rng);
    const double u = 0.37;
    Complex prod(1.0, 0.0);
    for (const Complex& lambda : momentum_spectrum(coin, k)) prod *= 1.0 - u * lambda;
    const Complex det = char_det(coin, k, u);
    if (std::abs(prod - det) > 1e-9) {
      why << "det/eigenvalue-product gap " << std::abs(prod - det);
      return false;
    }
  }
  return true;
}

bool check_qw_unit_modulus(std::ostringstream& why) {
  std::mt19937 rng(102);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
  for (double xi : {kPi / 6, kPi / 4, kPi / 3}) {
    for (Shift shift : {Shift::M, Shift::F}) {
      const CoinMatrix coin = qw_coin(xi, shift);
      const double k[1] = {angle(rng)};
      for (const Complex& lambda : momentum_spectrum(coin, k))
        if (std::abs(std::abs(lambda) - 1.0) > 1e-10) {
          why << "|lambda| = " << std::abs(lambda);
          return false;
        }
    }
  }
  std::mt19937 rng2(103);
  const CoinMatrix coin = random_qw_coin(2, rng2);
  const double k[2] = {angle(rng), angle(rng)};
  for (const Complex& lambda : momentum_spectrum(coin, k))
    if (std::abs(std::abs(lambda) - 1.0) > 1e-10) {
      why << "|lambda| = " << std::abs(lambda) << " (random unitary)";
      return false;
    }
  return true;
}

bool check_flip_flop_involution(std::ostringstream& why) {
  std::mt19937 rng(104);
  for (const CoinMatrix& coin : {qw_coin(kPi / 5, Shift::M), random_qw_coin(2, rng)}) {
    const CoinMatrix f = to_flip_flop(coin);
    Matrix twice(f.size(), f.size());
    for (int j = 0; j < f.d(); ++j) {
      twice.row(2 * j) = f.entries().row(2 * j + 1);
      twice.row(2 * j + 1) = f.entries().row(2 * j);
    }
    if ((twice - coin.entries()).cwiseAbs().maxCoeff() > 1e-15) {
      why << "double swap did not restore the coin";
      return false;
    }
  }
  return true;
}

bool check_site_space_zeta(std::ostringstream& why) {
  struct Case {
    CoinMatrix coin;
    TorusSpec torus;
  };
  const std::vector<Case> cases = {{qw_coin(kPi / 4, Shift::M), TorusSpec(1, 3)},
                                   {rw_coin(1), TorusSpec(1, 4)},
                                   {rw_coin(2), TorusSpec(2, 2)}};
  for (const auto& [coin, torus] : cases) {
    const double u = 0.45;
    const Matrix m = site_matrix(coin, torus);
    const Matrix f = Matrix::Identity(m.rows(), m.cols()) - u * m;
    const Complex det = Eigen::PartialPivLU<Matrix>(f).determinant();
    const Complex direct =
        std::exp(-std::log(det) / static_cast<double>(torus.sites()));
    const Complex spectral = finite_zeta(coin, torus, u).value;
    if (std::abs(direct - spectral) > 1e-9) {
      why << "site-space vs momentum-space zeta gap " << std::abs(direct - spectral);
      return false;
    }
  }
  return true;
}

// ---- spectral-zeta ----

bool check_finite_limit_bitwise(std::ostringstream& why) {
  for (const auto& coin : reference_coins())
    for (int r : {2, 4}) {
      const Complex finite = c_r_finite(coin, TorusSpec(coin.d(), 2 * r + 2), r);
      const Complex limit = c_r_limit(coin, r, QuadratureSpec(2 * r + 2, 1e-10));
      if (finite != limit) {
        why << "C_" << r << " finite/limit differ: " << std::abs(finite - limit);
        return false;
      }
    }
  return true;
}

bool check_n_convergence(std::ostringstream& why) {
  const CoinMatrix coin = rw_coin(1);
  const double u = 0.95;
  const double L = log_zeta(coin, u, QuadratureSpec(32, 1e-12)).value.real();
  double prev_err = -1.0;
  for (long long N : {4, 8, 16, 32}) {
    const double LN = -std::log(finite_zeta(coin, TorusSpec(1, N), u).value).real();
    const double err = std::abs(LN - L);
    if (prev_err >= 0.0 && err >= prev_err) {
      why << "finite-N error not decreasing at N=" << N << " (" << err
          << " >= " << prev_err << ")";
      return false;
    }
    prev_err = err;
  }
  return true;
}

bool check_c_odd_zero(std::ostringstream& why) {
  for (const CoinMatrix& coin :
       {rw_coin(1), qw_coin(kPi / 4, Shift::M), qw_coin(kPi / 3, Shift::F)})
    for (int r : {1, 3, 5, 7, 9}) {
      const Complex c = c_r_limit(coin, r, QuadratureSpec(2 * r + 2, 1e-10));
      if (std::abs(c) > 1e-12) {
        why << "C_" << r << " = " << std::abs(c);
        return false;
      }
    }
  return true;
}

bool check_parallel_deterministic(std::ostringstream& why) {
  const CoinMatrix coin = qw_coin(kPi / 4, Shift::M);
  auto f = [&](const double* theta) {
    return std::log(std::abs(char_det(coin, {theta, 1}, -0.4)));
  };
  // 2D wrapper so the outer loop has work to split
  auto f2 = [&](const double* theta) { return f(theta) + f(theta + 1); };
  const double par = grid_mean(2, 64, f2, true);
  const double ser = grid_mean(2, 64, f2, false);
  if (par != ser) {
    why << "parallel/serial reduction differ by " << par - ser;
    return false;
  }
  return true;
}

bool check_series_consistency(std::ostringstream& why) {
  const CoinMatrix coin = qw_coin(kPi / 4, Shift::M);
  const double u = -0.3;
  const double direct = log_zeta(coin, u, QuadratureSpec(32, 1e-12)).value.real();
  const double series = series_log_zeta(coin, u, 60, QuadratureSpec(16, 1e-12)).value;
  if (!close(direct, series, 1e-8)) {
    why << "series vs quadrature gap " << std::abs(direct - series);
    return false;
  }
  return true;
}

// ---- closed-forms ----

bool check_c2l_quadrature(std::ostringstream& why) {
  for (double xi : {kPi / 6, kPi / 4, kPi / 3})
    for (Shift shift : {Shift::M, Shift::F})
      for (int l = 1; l <= 5; ++l) {
        const double closed = qw_c2l(xi, l, shift);
        const Complex quad =
            c_r_limit(qw_coin(xi, shift), 2 * l, QuadratureSpec(4 * l + 2, 1e-10));
        if (!close(closed, quad.real(), 1e-9) || std::abs(quad.imag()) > 1e-12) {
          why << "C_" << 2 * l << " closed " << closed << " vs quadrature "
              << quad.real();
          return false;
        }
      }
  return true;
}

bool check_b2n_values(std::ostringstream& why) {
  const Rational expect[] = {{1, 1}, {1, 2}, {3, 8}, {5, 16}, {35, 128}};
  for (int n = 0; n <= 4; ++n)
    if (!(b2n_exact(n) == expect[n])) {
      why << "B_" << 2 * n << " = " << b2n_exact(n).str();
      return false;
    }
  double prev = 1.0;
  for (int n = 1; n <= 40; ++n) {
    const double v = b2n(n);
    if (!(v > 0.0 && v < prev)) {
      why << "B_{2n} not positive decreasing at n=" << n;
      return false;
    }
    if (n <= 32 && !close(v, b2n_exact(n).value(), 1e-15)) {
      why << "B_{2n} recurrence/exact mismatch at n=" << n;
      return false;
    }
    prev = v;
  }
  return true;
}

bool check_qw_log_zeta_closed(std::ostringstream& why) {
  for (double xi : {kPi / 6, kPi / 4, kPi / 3})
    for (Shift shift : {Shift::M, Shift::F}) {
      const double lo = shift == Shift::M ? qw_m_lower_bound(xi) + 1e-3 : -0.9;
      for (double u : {lo, lo / 2, -0.1}) {
        const double closed = qw_log_zeta_closed(xi, u, shift);
        const double quad =
            log_zeta(qw_coin(xi, shift), u, QuadratureSpec(32, 1e-12)).value.real();
        if (!close(closed, quad, 1e-8)) {
          why << "xi=" << xi << " u=" << u << " gap " << std::abs(closed - quad);
          return false;
        }
      }
    }
  return true;
}

bool check_rw_log_zeta_closed(std::ostringstream& why) {
  for (int d : {1, 2})
    for (double u : {-0.5, 0.5}) {
      const double closed = rw_log_zeta_closed(d, u, 60);
      const double quad =
          log_zeta(rw_coin(d), u, QuadratureSpec(32, 1e-12)).value.real();
      if (!close(closed, quad, 1e-7)) {
        why << "d=" << d << " u=" << u << " gap " << std::abs(closed - quad);
        return false;
      }
    }
  return true;
}

// ---- ronkin ----

bool check_ronkin_monomial(std::ostringstream& why) {
  LaurentPolynomial mono(2);
  mono.set({2, -1}, Complex(3.0, 0.0));
  std::mt19937 rng(201);
  std::uniform_real_distribution<double> box(-1.0, 1.0);
  for (int s = 0; s < 5; ++s) {
    const std::vector<double> x = {box(rng), box(rng)};
    const double expect = std::log(3.0) + 2 * x[0] - x[1];
    const double got = ronkin_eval(mono, x, QuadratureSpec(8, 1e-10)).value;
    if (!close(got, expect, 1e-10)) {
      why << "monomial Ronkin gap " << std::abs(got - expect);
      return false;
    }
  }
  return true;
}

bool check_ronkin_translation(std::ostringstream& why) {
  const LaurentPolynomial p = p_rw(2, 0.9);
  LaurentPolynomial shifted(2);
  for (const auto& [exp, coeff] : p.terms())
    shifted.set({exp[0] + 1, exp[1] - 2}, coeff.value, coeff.valuation);
  const QuadratureSpec quad(16, 1e-10);
  // both points sit in complement components (no torus zeros): the first
  // inside the central bubble, the second where the z1 term dominates
  for (const std::vector<double> x : {std::vector<double>{0.3, -0.2},
                                      std::vector<double>{3.0, 0.5}}) {
    const double base = ronkin_eval(p, x, quad).value;
    const double moved = ronkin_eval(shifted, x, quad).value;
    const double expect = base + x[0] - 2 * x[1];
    if (!close(moved, expect, 1e-9)) {
      why << "translation covariance gap " << std::abs(moved - expect);
      return false;
    }
  }
  return true;
}

bool check_ronkin_convexity(std::ostringstream& why) {
  std::mt19937 rng(202);
  std::uniform_real_distribution<double> box(-1.5, 1.5);
  // 2D points inside the amoeba make the integrand log-singular, so the
  // 2D pass uses a small node cap plus a coarse tolerance and skips any
  // triple whose quadrature cannot converge there.
  QuadratureSpec quad1(16, 1e-9);
  QuadratureSpec quad2(16, 1e-4);
  quad2.max_nodes_per_dim = 256;
  for (const LaurentPolynomial& p : {p_rw(1, 0.5), p_rw(2, 0.9)}) {
    const int k = p.dim();
    const QuadratureSpec& quad = k == 1 ? quad1 : quad2;
    const double slack = k == 1 ? 1e-8 : 1e-3;
    int tested = 0;
    for (int s = 0; s < 60; ++s) {
      std::vector<double> x(k), y(k), mid(k);
      for (int j = 0; j < k; ++j) {
        x[j] = box(rng);
        y[j] = box(rng);
        mid[j] = (x[j] + y[j]) / 2.0;
      }
      double rx, ry, rm;
      try {
        rx = ronkin_eval(p, x, quad).value;
        ry = ronkin_eval(p, y, quad).value;
        rm = ronkin_eval(p, mid, quad).value;
      } catch (const accuracy_error&) {
        continue;  // a sample landed on the singular locus
      }
      ++tested;
      if (rm > (rx + ry) / 2.0 + slack) {
        why << "midpoint convexity violated by " << rm - (rx + ry) / 2.0;
        return false;
      }
    }
    if (tested < 10) {
      why << "only " << tested << " convergent triples in dimension " << k;
      return false;
    }
  }
  return true;
}

bool check_ronkin_correspondence(std::ostringstream& why) {
  const QuadratureSpec quad(16, 1e-10);
  for (int d : {1, 2})
    for (double u : {-0.5, 0.5}) {
      const CorrespondenceReport rep = correspondence_rw(d, u, quad);
      if (rep.difference > 1e-7) {
        why << "RW d=" << d << " u=" << u << " |L-R| = " << rep.difference;
        return false;
      }
    }
  const CorrespondenceReport rep = correspondence_qw(kPi / 4, -0.5, Shift::M, quad);
  if (rep.difference > 1e-7) {
    why << "QW |L-R| = " << rep.difference;
    return false;
  }
  return true;
}

bool check_ronkin_qw_closed(std::ostringstream& why) {
  const QuadratureSpec quad(32, 1e-11);
  for (double xi : {kPi / 6, kPi / 4, kPi / 3}) {
    const double u = qw_m_lower_bound(xi) / 2.0;
    const double closed = qw_ronkin_closed(xi, u);
    const double numeric = ronkin_eval(p_qw(xi, u, Shift::M), {0.0}, quad).value;
    const double zeta = qw_log_zeta_closed(xi, u, Shift::M);
    if (!close(closed, numeric, 1e-8) || !close(closed, zeta, 1e-8)) {
      why << "xi=" << xi << " closed " << closed << " numeric " << numeric
          << " zeta " << zeta;
      return false;
    }
  }
  return true;
}

// ---- polytope / tropical ----

bool check_np_equals_dp(std::ostringstream& why) {
  for (int d : {1, 2, 3}) {
    const LatticePolytope np = newton_polytope(p_rw_simplified(d));
    const LatticePolytope dp = direction_polytope(d);
    if (!same_point_set(np.vertices, dp.vertices)) {
      why << "RW d=" << d << " Newton/direction vertex sets differ";
      return false;
    }
    if (!same_point_set(np.lattice_points, dp.lattice_points)) {
      why << "RW d=" << d << " lattice point sets differ";
      return false;
    }
  }
  for (Shift shift : {Shift::M, Shift::F}) {
    const LatticePolytope np = newton_polytope(p_qw_simplified(shift, kPi / 4));
    const LatticePolytope dp = direction_polytope(1);
    if (!same_point_set(np.vertices, dp.vertices)) {
      why << "QW Newton/direction vertex sets differ";
      return false;
    }
  }
  return true;
}

bool check_direction_graph_rays(std::ostringstream& why) {
  for (int d : {1, 2, 3}) {
    const PolyhedralComplex trop = trop_hypersurface(tropicalize(p_rw_simplified(d)));
    const PolyhedralComplex graph = direction_graph(d);
    if (!same_ray_set(trop, graph)) {
      why << "ray sets differ at d=" << d;
      return false;
    }
    if (d == 1 && trop.cells.empty()) {
      why << "d=1 hypersurface has no tie point";
      return false;
    }
  }
  return true;
}

bool check_perpendicularity(std::ostringstream& why) {
  for (int d : {1, 2, 3}) {
    long long limit = 1;
    for (int j = 0; j < d; ++j) limit *= 3;
    for (long long code = 1; code < limit; ++code) {
      long long rem = code;
      SignedSet S;
      for (int j = 0; j < d; ++j) {
        const int digit = static_cast<int>(rem % 3);
        rem /= 3;
        if (digit == 1) S.push_back(j + 1);
        if (digit == 2) S.push_back(-(j + 1));
      }
      if (S.empty()) continue;
      if (!perpendicularity_check(S, d)) {
        why << "perpendicularity fails at d=" << d;
        return false;
      }
    }
  }
  return true;
}

bool check_duality_sampling(std::ostringstream& why) {
  const DualityReport rep = duality_check(p_rw_simplified(2), 2000, 1e-9, 12345);
  if (!rep.cone_samples_are_members || !rep.member_samples_near_complex ||
      !rep.matches_direction_graph || rep.mismatch_count != 0) {
    why << rep.mismatch_count << " mismatches of " << rep.sample_count << " samples";
    return false;
  }
  return true;
}

bool check_ekl_raster(std::ostringstream& why) {
  const TropicalPolynomial t = tropicalize(p_rw_simplified(2));
  const PolyhedralComplex complex = trop_hypersurface(t);
  int mismatches = 0;
  for (int i = -12; i <= 12; ++i)
    for (int j = -12; j <= 12; ++j) {
      const double x[2] = {0.25 * i, 0.25 * j};
      const bool member = trop_member(t, x, 1e-9);
      const bool near = complex.distance(x) < 1e-9;
      if (member != near) ++mismatches;
    }
  if (mismatches > 0) {
    why << mismatches << " raster cells disagree";
    return false;
  }
  return true;
}

bool check_amoeba_bubble(std::ostringstream& why) {
  const LaurentPolynomial p = p_rw(2, 0.9);
  const AmoebaRaster raster = amoeba_complement_components(
      p, {-3.0, 3.0, -3.0, 3.0}, 240, QuadratureSpec(16, 1e-9), true);
  if (raster.components.size() != 5) {
    why << raster.components.size() << " complement components (expected 5)";
    return false;
  }
  const LatticePolytope np = newton_polytope(p);
  int bounded = 0;
  std::vector<std::vector<int>> gradients;
  for (const auto& comp : raster.components) {
    if (comp.bounded) ++bounded;
    std::vector<int> nearest(2);
    for (int j = 0; j < 2; ++j)
      nearest[j] = static_cast<int>(std::lround(comp.ronkin_gradient[j]));
    bool is_lattice = false;
    for (const auto& lp : np.lattice_points) is_lattice = is_lattice || lp == nearest;
    const double err = std::hypot(comp.ronkin_gradient[0] - nearest[0],
                                  comp.ronkin_gradient[1] - nearest[1]);
    if (!is_lattice || err > 1e-3) {
      why << "gradient (" << comp.ronkin_gradient[0] << "," << comp.ronkin_gradient[1]
          << ") not a Newton lattice point";
      return false;
    }
    for (const auto& g : gradients)
      if (g == nearest) {
        why << "duplicate component gradient";
        return false;
      }
    gradients.push_back(nearest);
    if (comp.bounded && nearest != std::vector<int>{0, 0}) {
      why << "bounded component gradient is not (0,0)";
      return false;
    }
  }
  if (bounded != 1) {
    why << bounded << " bounded components (expected 1)";
    return false;
  }
  return true;
}

bool check_valuation_zero(std::ostringstream& why) {
  for (const LaurentPolynomial& p :
       {p_rw(2, 0.3), p_qw(kPi / 4, -0.5, Shift::M), p_rw_simplified(3)})
    for (const auto& term : tropicalize(p).terms)
      if (!(term.offset == Rational{0, 1})) {
        why << "nonzero offset " << term.offset.str();
        return false;
      }
  return true;
}

// ---- simulator ----

bool check_conservation(std::ostringstream& why) {
  {
    Eigen::VectorXcd psi(2);
    psi << Complex(1.0, 0.0), Complex(0.0, 0.0);
    WalkState s = delta_state_lattice(1, psi);
    const CoinMatrix coin = qw_coin(kPi / 4, Shift::M);
    for (int n = 0; n < 20; ++n) {
      s = evolve(s, coin);
      if (std::abs(total_measure(s, 2) - 1.0) > 1e-12) {
        why << "QW measure drift at step " << n + 1;
        return false;
      }
    }
  }
  {
    Eigen::VectorXcd psi = Eigen::VectorXcd::Constant(4, Complex(0.25, 0.0));
    WalkState s = delta_state_lattice(2, psi);
    const CoinMatrix coin = rw_coin(2);
    for (int n = 0; n < 20; ++n) {
      s = evolve(s, coin);
      if (std::abs(total_measure(s, 1) - 1.0) > 1e-12) {
        why << "RW measure drift at step " << n + 1;
        return false;
      }
    }
  }
  return true;
}

bool check_return_trace_bridge(std::ostringstream& why) {
  std::vector<CoinMatrix> coins = {rw_coin(1), rw_coin(2)};
  for (double xi : {kPi / 6, kPi / 4, kPi / 3})
    for (Shift shift : {Shift::M, Shift::F}) coins.push_back(qw_coin(xi, shift));
  for (const auto& coin : coins)
    for (int r = 1; r <= (coin.d() == 1 ? 10 : 6); ++r) {
      const Complex trace = return_trace(coin, r);
      const Complex limit = c_r_limit(coin, r, QuadratureSpec(2 * r + 2, 1e-10));
      if (std::abs(trace - limit) > 1e-10) {
        why << "r=" << r << " gap " << std::abs(trace - limit);
        return false;
      }
    }
  return true;
}

bool check_torus_folding(std::ostringstream& why) {
  struct Case {
    CoinMatrix coin;
    int n;
    long long N;
  };
  const std::vector<Case> cases = {{qw_coin(kPi / 4, Shift::M), 5, 12},
                                   {rw_coin(2), 3, 7}};
  for (const auto& [coin, n, N] : cases) {
    const int d = coin.d();
    const int dim = 2 * d;
    const TorusSpec torus(d, N);
    const MatrixWeightField lattice = matrix_weight(coin, n);
    Matrix power = Matrix::Identity(dim * torus.sites(), dim * torus.sites());
    const Matrix m = site_matrix(coin, torus);
    for (int s = 0; s < n; ++s) power = m * power;

    const long long sites = torus.sites();
    std::vector<long long> stride(d);
    stride[0] = 1;
    for (int j = 1; j < d; ++j) stride[j] = stride[j - 1] * N;
    std::vector<Matrix> folded(static_cast<std::size_t>(sites),
                               Matrix::Zero(dim, dim));
    const long long count = lattice.site_count();
    for (long long idx = 0; idx < count; ++idx) {
      const auto x = lattice.site_coords(idx);
      long long site = 0;
      for (int j = 0; j < d; ++j)
        site += ((x[j] % N + N) % N) * stride[j];
      folded[static_cast<std::size_t>(site)] += lattice.values[idx];
    }
    for (long long site = 0; site < sites; ++site) {
      const Matrix block = power.block(site * dim, 0, dim, dim);
      if ((block - folded[static_cast<std::size_t>(site)]).cwiseAbs().maxCoeff() >
          1e-12) {
        why << "folded lattice weight differs from torus weight at site " << site;
        return false;
      }
    }
  }
  return true;
}

bool check_evolve_matches_weights(std::ostringstream& why) {
  const CoinMatrix coin = qw_coin(kPi / 3, Shift::F);
  Eigen::VectorXcd psi(2);
  psi << Complex(0.6, 0.0), Complex(0.0, 0.8);
  WalkState s = delta_state_lattice(1, psi);
  const int n = 4;
  for (int i = 0; i < n; ++i) s = evolve(s, coin);
  const MatrixWeightField field = matrix_weight(coin, n);
  for (long long idx = 0; idx < field.site_count(); ++idx) {
    const Eigen::VectorXcd expect = field.values[idx] * psi;
    const Eigen::VectorXcd got = s.values[s.site_index(field.site_coords(idx))];
    if ((expect - got).cwiseAbs().maxCoeff() > 1e-13) {
      why << "state/weight mismatch";
      return false;
    }
  }
  return true;
}

const std::vector<Check>& registry() {
  static const std::vector<Check> checks = {
      {"walk-model/spectrum-det-product", check_spectrum_det_product},
      {"walk-model/qw-unit-modulus", check_qw_unit_modulus},
      {"walk-model/flip-flop-involution", check_flip_flop_involution},
      {"walk-model/site-space-zeta", check_site_space_zeta},
      {"spectral-zeta/finite-limit-bitwise", check_finite_limit_bitwise},
      {"spectral-zeta/n-convergence", check_n_convergence},
      {"spectral-zeta/c-odd-zero", check_c_odd_zero},
      {"spectral-zeta/parallel-deterministic", check_parallel_deterministic},
      {"spectral-zeta/series-consistency", check_series_consistency},
      {"closed-forms/c2l-quadrature", check_c2l_quadrature},
      {"closed-forms/b2n-values", check_b2n_values},
      {"closed-forms/qw-log-zeta", check_qw_log_zeta_closed},
      {"closed-forms/rw-log-zeta", check_rw_log_zeta_closed},
      {"ronkin/monomial-linear", check_ronkin_monomial},
      {"ronkin/translation-covariance", check_ronkin_translation},
      {"ronkin/midpoint-convexity", check_ronkin_convexity},
      {"ronkin/zeta-correspondence", check_ronkin_correspondence},
      {"ronkin/qw-closed-form", check_ronkin_qw_closed},
      {"polytope/newton-equals-direction", check_np_equals_dp},
      {"tropical/direction-graph-rays", check_direction_graph_rays},
      {"tropical/cone-face-perpendicular", check_perpendicularity},
      {"tropical/duality-sampling", check_duality_sampling},
      {"tropical/membership-raster", check_ekl_raster},
      {"amoeba/complement-components", check_amoeba_bubble},
      {"tropical/constant-valuations", check_valuation_zero},
      {"simulator/measure-conservation", check_conservation},
      {"simulator/return-trace-bridge", check_return_trace_bridge},
      {"simulator/torus-folding", check_torus_folding},
      {"simulator/state-weight-consistency", check_evolve_matches_weights},
  };
  return checks;
}

}  // namespace

std::vector<std::string> verify_check_ids() {
  std::vector<std::string> ids;
  for (const auto& c : registry()) ids.push_back(c.id);
  return ids;
}

CheckResult run_check(const std::string& id) {
  for (const auto& c : registry()) {
    if (c.id != id) continue;
    CheckResult res;
    res.id = id;
    std::ostringstream why;
    try {
      res.passed = c.run(why);
      res.detail = why.str();
    } catch (const std::exception& e) {
      res.passed = false;
      res.detail = std::string("exception: ") + e.what();
    }
    return res;
  }
  throw config_error("unknown check id: " + id);
}

std::vector<CheckResult> run_all_checks() {
  std::vector<CheckResult> out;
  for (const auto& c : registry()) out.push_back(run_check(c.id));
  return out;
}

}  // namespace rz
