// Acceptance suite: ten end-to-end criteria, one pass/fail line each.
#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

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
#include "rz/verify.hpp"
#include "rz/walk_model.hpp"

using namespace rz;

namespace {

constexpr double kPi = std::numbers::pi;

// --- criterion 1: finite-torus zeta vs the explicit site-space matrix ----

bool criterion_finite_zeta(std::ostringstream& why) {
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 10; ++trial) {
    const int d = 1 + trial % 2;
    const long long N = 2 + trial % 3;
    const CoinMatrix coin =
        trial % 2 == 0 ? random_qw_coin(d, rng) : random_rw_coin(d, rng);
    const TorusSpec torus(d, N);
    const Matrix m = site_matrix(coin, torus);
    for (double u : {-0.5, -0.3, 0.3, 0.5}) {
      const Matrix f = Matrix::Identity(m.rows(), m.cols()) - u * m;
      const Complex site_det = Eigen::PartialPivLU<Matrix>(f).determinant();

      Complex momentum_product(1.0, 0.0);
      std::vector<long long> idx(d, 0);
      while (true) {
        std::vector<double> ktilde(d);
        for (int j = 0; j < d; ++j)
          ktilde[j] = 2.0 * kPi * static_cast<double>(idx[j]) / N;
        momentum_product *= char_det(coin, ktilde, u);
        int j = d - 1;
        while (j >= 0 && ++idx[j] == N) idx[j--] = 0;
        if (j < 0) break;
      }

      const Complex oracle =
          std::exp(-std::log(site_det) / static_cast<double>(torus.sites()));
      const Complex spectral = finite_zeta(coin, torus, u).value;
      const double det_gap = std::abs(momentum_product - site_det) /
                             std::max(1.0, std::abs(site_det));
      if (std::abs(spectral - oracle) > 1e-9 || det_gap > 1e-9) {
        why << "trial " << trial << " d=" << d << " N=" << N << " u=" << u
            << " zeta gap " << std::abs(spectral - oracle) << " det gap "
            << det_gap;
        return false;
      }
    }
  }
  return true;
}

// --- criterion 2: quantum walk logarithmic zeta closed form --------------

bool criterion_qw_log_zeta(std::ostringstream& why) {
  const QuadratureSpec quad(32, 1e-12);
  for (double xi : {kPi / 6, kPi / 4, kPi / 3}) {
    const double lb = qw_m_lower_bound(xi);
    const double m_us[5] = {0.95 * lb, 0.6 * lb, 0.3 * lb, 0.1 * lb, -0.02};
    for (double u : m_us) {
      const double got = log_zeta(qw_coin(xi, Shift::M), u, quad).value.real();
      const double want = qw_log_zeta_closed(xi, u, Shift::M);
      if (std::abs(got - want) > 1e-8) {
        why << "M xi=" << xi << " u=" << u << " gap " << std::abs(got - want);
        return false;
      }
    }
    for (double u : {-0.9, -0.6, -0.4, -0.2, -0.05}) {
      const double got = log_zeta(qw_coin(xi, Shift::F), u, quad).value.real();
      const double want = qw_log_zeta_closed(xi, u, Shift::F);
      if (std::abs(got - want) > 1e-8) {
        why << "F xi=" << xi << " u=" << u << " gap " << std::abs(got - want);
        return false;
      }
    }
  }
  return true;
}

// --- criterion 3: uniform walk logarithmic zeta closed forms -------------

bool criterion_rw_log_zeta(std::ostringstream& why) {
  const QuadratureSpec quad(32, 1e-11);
  for (double mag : {0.1, 0.3, 0.5, 0.7, 0.9})
    for (double u : {-mag, mag}) {
      const double quad1 = log_zeta(rw_coin(1), u, quad).value.real();
      const double closed1 = rw_log_zeta_closed(1, u, 120);
      double series1 = 0.0;
      for (int n = 1; n <= 120; ++n)
        series1 -= b2n(n) * std::pow(u, 2 * n) / (2 * n);
      if (std::abs(quad1 - closed1) > 1e-8 || std::abs(quad1 - series1) > 1e-8 ||
          std::abs(closed1 - series1) > 1e-8) {
        why << "d=1 u=" << u << " quad/closed/series " << quad1 << ' ' << closed1
            << ' ' << series1;
        return false;
      }

      const double quad2 = log_zeta(rw_coin(2), u, quad).value.real();
      const double closed2 = rw_log_zeta_closed(2, u, 120);
      const double hyp2 = -(u * u / 8.0) * hyp4f3_series(u * u, 119);
      if (std::abs(quad2 - closed2) > 1e-7 || std::abs(quad2 - hyp2) > 1e-7) {
        why << "d=2 u=" << u << " quad/closed/4F3 " << quad2 << ' ' << closed2
            << ' ' << hyp2;
        return false;
      }
    }
  return true;
}

// --- criterion 4: trace moments by three routes --------------------------

bool criterion_trace_moments(std::ostringstream& why) {
  for (double xi : {kPi / 6, kPi / 4, kPi / 3})
    for (Shift s : {Shift::M, Shift::F}) {
      const CoinMatrix coin = qw_coin(xi, s);
      for (int l = 1; l <= 8; ++l) {
        const double closed = qw_c2l(xi, l, s);
        const Complex limit =
            c_r_limit(coin, 2 * l, QuadratureSpec(4 * l + 2, 1e-10));
        const Complex ret = return_trace(coin, 2 * l);
        if (std::abs(limit.real() - closed) > 1e-9 ||
            std::abs(ret.real() - closed) > 1e-9 ||
            std::abs(limit.imag()) > 1e-12 || std::abs(ret.imag()) > 1e-12) {
          why << "xi=" << xi << " l=" << l << " closed/limit/trace " << closed
              << ' ' << limit.real() << ' ' << ret.real();
          return false;
        }
      }
      for (int r : {1, 3, 5, 7}) {
        if (std::abs(c_r_limit(coin, r, QuadratureSpec(2 * r + 2, 1e-10))) > 1e-12 ||
            std::abs(return_trace(coin, r)) > 1e-12) {
          why << "odd moment r=" << r << " nonzero";
          return false;
        }
      }
    }
  return true;
}

// --- criterion 5: logarithmic zeta equals the Ronkin function at 0 -------

bool criterion_correspondence(std::ostringstream& why) {
  const QuadratureSpec quad(16, 1e-9);
  for (int d : {1, 2, 3})
    for (double u : {-0.9, -0.5, 0.5, 0.9}) {
      const CorrespondenceReport rep = correspondence_rw(d, u, quad);
      if (rep.difference > 1e-7) {
        why << "RW d=" << d << " u=" << u << " |L - R(0)| = " << rep.difference;
        return false;
      }
    }
  const std::pair<double, double> qw_cases[5] = {
      {kPi / 6, -0.4}, {kPi / 4, -0.5}, {kPi / 4, -0.2}, {kPi / 3, -0.7},
      {kPi / 3, -0.1}};
  for (const auto& [xi, u] : qw_cases)
    for (Shift s : {Shift::M, Shift::F}) {
      if (s == Shift::M && u <= qw_m_lower_bound(xi)) continue;
      const CorrespondenceReport rep = correspondence_qw(xi, u, s, quad);
      if (rep.difference > 1e-7) {
        why << "QW xi=" << xi << " u=" << u << " |L - R(0)| = " << rep.difference;
        return false;
      }
    }
  return true;
}

// --- criterion 6: Ronkin convexity and piecewise-linear complement -------

// Mean of log|alpha z^2 + beta z + gamma| - log|z| over the circle
// |z| = e^x, evaluated in closed form through the root magnitudes
// (Jensen's formula). Stable quadratic solve; gamma != 0 keeps both
// roots away from zero.
double jensen_mean(Complex alpha, Complex beta, Complex gamma, double x) {
  const Complex disc = std::sqrt(beta * beta - 4.0 * alpha * gamma);
  const Complex q = std::abs(beta - disc) > std::abs(beta + disc)
                        ? -(beta - disc) / 2.0
                        : -(beta + disc) / 2.0;
  const double lr1 = std::log(std::abs(q / alpha));
  const double lr2 = std::log(std::abs(gamma / q));
  return std::log(std::abs(alpha)) + std::max(lr1, x) + std::max(lr2, x) - x;
}

// Adaptive Simpson rule; the local refinement resolves the square-root
// kinks the integrand picks up where the quadratic's roots collide.
template <class F>
double adaptive_simpson(const F& f, double a, double b, double fa, double fm,
                        double fb, double whole, double tol, int depth) {
  const double m = (a + b) / 2.0;
  const double flm = f((a + m) / 2.0);
  const double frm = f((m + b) / 2.0);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double err = left + right - whole;
  if (depth <= 0 || std::abs(err) < 15.0 * tol)
    return left + right + err / 15.0;
  return adaptive_simpson(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1) +
         adaptive_simpson(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1);
}

// Ronkin function of the uniform-walk polynomial 1 - (u/2k) sum(z_j + 1/z_j):
// the innermost phase average is exact by Jensen's formula, so only one
// outer phase (k = 2) needs quadrature. Unlike the torus rule, this stays
// accurate on and inside the amoeba, where log|p| is singular.
double ronkin_jensen(double u, const std::vector<double>& x) {
  const int k = static_cast<int>(x.size());
  const Complex edge(-u / (2.0 * k), 0.0);
  if (k == 1) return jensen_mean(edge, Complex(1.0, 0.0), edge, x[0]);
  const auto g = [&](double theta) {
    const Complex z1 = std::polar(std::exp(x[0]), theta);
    const Complex beta = Complex(1.0, 0.0) + edge * (z1 + 1.0 / z1);
    return jensen_mean(edge, beta, edge, x[1]);
  };
  // the integrand is even in theta, so the mean over [0, 2pi) equals the
  // mean over [0, pi]
  const double a = 0.0, b = kPi;
  const double fa = g(a), fm = g((a + b) / 2.0), fb = g(b);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return adaptive_simpson(g, a, b, fa, fm, fb, whole, 1e-10, 50) / kPi;
}

bool criterion_convexity(std::ostringstream& why) {
  std::mt19937 rng(606);
  std::uniform_real_distribution<double> box(-1.5, 1.5);

  // 1000 midpoint triples per polynomial over a box that straddles the
  // amoeba; every sample point is evaluated, none are rejected
  const double us[2] = {0.5, 0.9};
  for (int k : {1, 2}) {
    const double u = us[k - 1];
    for (int trial = 0; trial < 1000; ++trial) {
      std::vector<double> x(k), y(k), mid(k);
      for (int j = 0; j < k; ++j) {
        x[j] = box(rng);
        y[j] = box(rng);
        mid[j] = (x[j] + y[j]) / 2.0;
      }
      const double rx = ronkin_jensen(u, x);
      const double ry = ronkin_jensen(u, y);
      const double rm = ronkin_jensen(u, mid);
      if (rm > (rx + ry) / 2.0 + 1e-8) {
        why << k << "D midpoint violation " << rm - (rx + ry) / 2.0;
        return false;
      }
    }
  }

  const LaurentPolynomial p1 = p_rw(1, 0.5);
  const QuadratureSpec quad1(16, 1e-9);

  // the closed-form evaluator agrees with the torus quadrature at points
  // where the latter converges
  const double cross1 =
      std::abs(ronkin_jensen(0.5, {0.4}) - ronkin_eval(p1, {0.4}, quad1).value);
  const double cross2 = std::abs(
      ronkin_jensen(0.9, {3.0, 0.5}) -
      ronkin_eval(p_rw(2, 0.9), {3.0, 0.5}, QuadratureSpec(16, 1e-8)).value);
  if (cross1 > 1e-9 || cross2 > 1e-6) {
    why << "evaluator cross-check gaps " << cross1 << ", " << cross2;
    return false;
  }

  // 1D piecewise structure: flat inside, unit slope matching the Newton
  // vertex outside
  const double inner_sd = ronkin_eval(p1, {0.4 + 1e-3}, quad1).value -
                          2.0 * ronkin_eval(p1, {0.4}, quad1).value +
                          ronkin_eval(p1, {0.4 - 1e-3}, quad1).value;
  if (std::abs(inner_sd) > 1e-5) {
    why << "inner second difference " << inner_sd;
    return false;
  }
  const double h = 0.05;
  for (double sign : {1.0, -1.0}) {
    const double grad = (ronkin_eval(p1, {sign * (2.0 + h)}, quad1).value -
                         ronkin_eval(p1, {sign * (2.0 - h)}, quad1).value) /
                        (2.0 * h * sign);
    if (std::abs(grad - sign) > 1e-3) {
      why << "outer gradient " << grad << " expected " << sign;
      return false;
    }
  }
  return true;
}

// --- criterion 7: Newton polytope / tropical duality ---------------------

bool criterion_duality(std::ostringstream& why) {
  for (int d : {1, 2, 3}) {
    if (!same_point_set(newton_polytope(p_rw_simplified(d)).vertices,
                        direction_polytope(d).vertices)) {
      why << "Newton polytope != direction polytope at d=" << d;
      return false;
    }
  }
  for (Shift s : {Shift::M, Shift::F}) {
    if (!same_point_set(newton_polytope(p_qw_simplified(s, kPi / 3)).vertices,
                        direction_polytope(1).vertices)) {
      why << "1D quantum walk Newton polytope mismatch";
      return false;
    }
  }

  const DualityReport rep = duality_check(p_rw_simplified(2), 10000, 1e-9, 99);
  if (!rep.cone_samples_are_members || !rep.member_samples_near_complex ||
      !rep.matches_direction_graph || rep.mismatch_count != 0) {
    why << "duality sampling mismatches: " << rep.mismatch_count;
    return false;
  }

  for (int d : {1, 2, 3}) {
    // every admissible signed subset of {1..d}
    std::vector<SignedSet> sets;
    std::function<void(int, SignedSet&)> build = [&](int i, SignedSet& cur) {
      if (i > d) {
        if (!cur.empty()) sets.push_back(cur);
        return;
      }
      build(i + 1, cur);
      cur.push_back(i);
      build(i + 1, cur);
      cur.back() = -i;
      build(i + 1, cur);
      cur.pop_back();
    };
    SignedSet cur;
    build(1, cur);
    for (const SignedSet& S : sets)
      if (!perpendicularity_check(S, d)) {
        why << "perpendicularity failure at d=" << d;
        return false;
      }
  }
  return true;
}

// --- criterion 8: amoeba complement census -------------------------------

bool criterion_amoeba(std::ostringstream& why) {
  const LatticePolytope np = newton_polytope(p_rw(2, 0.9));
  const std::size_t lower = np.vertices.size();        // 4
  const std::size_t upper = np.lattice_points.size();  // 5
  const AmoebaRaster raster = amoeba_complement_components(
      p_rw(2, 0.9), {-3.0, 3.0, -3.0, 3.0}, 600, QuadratureSpec(16, 1e-8), true);
  if (raster.components.size() < lower || raster.components.size() > upper) {
    why << raster.components.size() << " components outside [" << lower << ", "
        << upper << "]";
    return false;
  }
  if (raster.components.size() != 5) {
    why << "expected the full census of 5 components, got "
        << raster.components.size();
    return false;
  }
  int bounded = 0;
  for (const auto& comp : raster.components) {
    if (!comp.bounded) continue;
    ++bounded;
    if (std::abs(comp.ronkin_gradient[0]) > 1e-3 ||
        std::abs(comp.ronkin_gradient[1]) > 1e-3) {
      why << "central component gradient (" << comp.ronkin_gradient[0] << ", "
          << comp.ronkin_gradient[1] << ")";
      return false;
    }
  }
  if (bounded != 1) {
    why << bounded << " bounded components";
    return false;
  }
  return true;
}

// --- criterion 9: measure conservation -----------------------------------

bool criterion_conservation(std::ostringstream& why) {
  std::mt19937 rng(17);
  for (int d : {1, 2}) {
    // probability conservation for the uniform walk (p = 1)
    WalkState rho = delta_state_lattice(
        d, Eigen::VectorXcd::Constant(2 * d, Complex(1.0 / (2 * d), 0.0)));
    const CoinMatrix rw = rw_coin(d);
    for (int t = 0; t < 20; ++t) {
      rho = evolve(rho, rw);
      if (std::abs(total_measure(rho, 1) - 1.0) > 1e-12) {
        why << "RW d=" << d << " step " << t + 1 << " total "
            << total_measure(rho, 1);
        return false;
      }
    }

    // 2-norm conservation for a quantum walk (p = 2)
    const CoinMatrix qw = d == 1 ? qw_coin(kPi / 3, Shift::M)
                                 : random_qw_coin(2, rng);
    Eigen::VectorXcd amp = Eigen::VectorXcd::Zero(2 * d);
    amp[0] = Complex(0.6, 0.0);
    amp[1] = Complex(0.0, 0.8);
    WalkState psi = delta_state_lattice(d, amp);
    for (int t = 0; t < 20; ++t) {
      psi = evolve(psi, qw);
      if (std::abs(total_measure(psi, 2) - 1.0) > 1e-12) {
        why << "QW d=" << d << " step " << t + 1 << " total "
            << total_measure(psi, 2);
        return false;
      }
    }
  }
  return true;
}

// --- criterion 10: matrix weights vs explicit path enumeration -----------

// Phi_n(y) as a sum over the 2^n step sequences; component c of a step
// keeps row c of the coin and moves by -1 (c = 0) or +1 (c = 1).
std::map<int, Matrix> path_sum(const CoinMatrix& coin, int n) {
  const Matrix& a = coin.entries();
  std::map<int, Matrix> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    Matrix prod = Matrix::Identity(2, 2);
    int y = 0;
    for (int step = 0; step < n; ++step) {
      const int c = (mask >> step) & 1;
      Matrix projected = Matrix::Zero(2, 2);
      projected.row(c) = a.row(c) * prod;
      prod = projected;
      y += c == 0 ? -1 : 1;
    }
    auto [it, fresh] = out.try_emplace(y, Matrix::Zero(2, 2));
    it->second += prod;
  }
  return out;
}

bool criterion_path_sum(std::ostringstream& why) {
  std::mt19937 rng(31);
  const CoinMatrix coins[3] = {qw_coin(kPi / 4, Shift::M),
                               qw_coin(kPi / 4, Shift::F), random_qw_coin(1, rng)};
  for (const CoinMatrix& coin : coins)
    for (int n = 0; n <= 6; ++n) {
      const MatrixWeightField field = matrix_weight(coin, n);
      const std::map<int, Matrix> brute = path_sum(coin, n);
      for (int y = -field.radius; y <= field.radius; ++y) {
        Matrix want = Matrix::Zero(2, 2);
        if (const auto it = brute.find(y); it != brute.end()) want = it->second;
        if ((field.at({y}) - want).cwiseAbs().maxCoeff() > 1e-12) {
          why << "n=" << n << " y=" << y << " weight mismatch";
          return false;
        }
      }
    }
  return true;
}

struct Criterion {
  const char* name;
  bool (*run)(std::ostringstream&);
};

}  // namespace

int main() {
  apply_thread_env();
  const Criterion criteria[] = {
      {"finite-torus zeta matches the site-space determinant",
       criterion_finite_zeta},
      {"quantum walk logarithmic zeta matches its closed form",
       criterion_qw_log_zeta},
      {"uniform walk logarithmic zeta matches closed forms and series",
       criterion_rw_log_zeta},
      {"trace moments agree across closed form, quadrature and simulation",
       criterion_trace_moments},
      {"logarithmic zeta equals the Ronkin function at the origin",
       criterion_correspondence},
      {"Ronkin functions are convex and piecewise linear off the amoeba",
       criterion_convexity},
      {"Newton polytopes and tropical hypersurfaces are dual",
       criterion_duality},
      {"amoeba complement census matches the lattice-point bounds",
       criterion_amoeba},
      {"walk simulation conserves the natural measure",
       criterion_conservation},
      {"matrix weights equal the explicit path sum", criterion_path_sum},
  };

  int failures = 0;
  int index = 0;
  for (const Criterion& c : criteria) {
    ++index;
    std::ostringstream why;
    bool ok = false;
    try {
      ok = c.run(why);
    } catch (const std::exception& e) {
      why << "exception: " << e.what();
    }
    if (ok) {
      std::printf("PASS %02d %s\n", index, c.name);
    } else {
      ++failures;
      std::printf("FAIL %02d %s (%s)\n", index, c.name, why.str().c_str());
    }
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
