#include "rz/ronkin.hpp"

#include <cmath>
#include <numbers>

#include "rz/errors.hpp"

namespace rz {

namespace {

constexpr double kNearZero = 1e-13;  // relative to the coefficient scale

struct RonkinPass {
  double mean = 0.0;
  double min_abs = 0.0;
  bool singular = false;
};

RonkinPass ronkin_mean(const LaurentPolynomial& p, const std::vector<double>& x,
                       int n) {
  const int k = p.dim();
  const double step = 2.0 * std::numbers::pi / n;
  const double scale = p.magnitude_scale(x);
  const double floor_abs = kNearZero * scale;

  long long outer = 1;
  for (int j = 0; j < k - 1; ++j) outer *= n;

  std::vector<double> row_sum(static_cast<size_t>(outer), 0.0);
  std::vector<double> row_min(static_cast<size_t>(outer), 0.0);
  std::vector<char> row_singular(static_cast<size_t>(outer), 0);

#pragma omp parallel for schedule(static)
  for (long long o = 0; o < outer; ++o) {
    std::vector<double> theta(k);
    long long rem = o;
    for (int j = k - 2; j >= 0; --j) {
      theta[j] = step * static_cast<double>(rem % n);
      rem /= n;
    }
    double s = 0.0;
    double mn = scale;
    bool sing = false;
    for (int i = 0; i < n; ++i) {
      theta[k - 1] = step * i;
      double a = std::abs(p.eval_log_polar(x, theta));
      mn = std::min(mn, a);
      if (a < floor_abs) {
        // Local subdivision around the offending node: replace the node's
        // contribution by the average over quarter-step shifts in each
        // dimension.
        double local = 0.0;
        int count = 0;
        double local_min = a;
        std::vector<double> t2 = theta;
        for (int j = 0; j < k; ++j) {
          for (double off : {-0.25 * step, 0.25 * step}) {
            t2[j] = theta[j] + off;
            const double b = std::abs(p.eval_log_polar(x, t2));
            local_min = std::min(local_min, b);
            local += std::log(std::max(b, floor_abs * kNearZero));
            ++count;
          }
          t2[j] = theta[j];
        }
        mn = std::min(mn, local_min);
        if (local_min < floor_abs) sing = true;
        s += local / count;
        continue;
      }
      s += std::log(a);
    }
    row_sum[o] = s;
    row_min[o] = mn;
    row_singular[o] = sing ? 1 : 0;
  }

  RonkinPass pass;
  double total = 0.0;
  double mn = scale;
  for (long long o = 0; o < outer; ++o) {
    total += row_sum[o];
    mn = std::min(mn, row_min[o]);
    pass.singular = pass.singular || row_singular[o];
  }
  double count = 1.0;
  for (int j = 0; j < k; ++j) count *= n;
  pass.mean = total / count;
  pass.min_abs = mn;
  return pass;
}

}  // namespace

RonkinEvaluation ronkin_eval(const LaurentPolynomial& p, std::vector<double> x,
                             const QuadratureSpec& quad) {
  const int k = p.dim();
  if (k > 3) throw domain_error("ronkin_eval: quadrature limited to k <= 3");
  if (p.empty()) throw domain_error("ronkin_eval: polynomial is identically zero");
  if (static_cast<int>(x.size()) != k)
    throw domain_error("ronkin_eval: point dimension mismatch");

  int cap = quad.max_nodes_per_dim;
  if (k == 2) cap = std::min(cap, 1 << 12);
  if (k == 3) cap = std::min(cap, 1 << 8);

  RonkinEvaluation res;
  res.x = x;

  int n = quad.nodes_per_dim;
  RonkinPass prev = ronkin_mean(p, x, n);
  res.min_abs = prev.min_abs;
  res.singular_flag = prev.singular;
  while (true) {
    if (2LL * n > cap) {
      res.diag.converged = false;
      res.value = prev.mean;
      if (res.diag.delta > quad.tolerance)
        throw accuracy_error("ronkin_eval: node cap reached before convergence" +
                             std::string(res.singular_flag ? " (singular integrand)" : ""));
      return res;
    }
    n *= 2;
    const RonkinPass cur = ronkin_mean(p, x, n);
    res.min_abs = std::min(res.min_abs, cur.min_abs);
    res.singular_flag = res.singular_flag || cur.singular;
    res.diag.delta = std::abs(cur.mean - prev.mean);
    long long nodes = 1;
    for (int j = 0; j < k; ++j) nodes *= n;
    res.diag.nodes = nodes;
    if (res.diag.delta < quad.tolerance) {
      res.value = cur.mean;
      return res;
    }
    prev = cur;
  }
}

double qw_ronkin_closed(double xi, double u) {
  if (!(u > -1.0 && u < 1.0))
    throw domain_error("qw_ronkin_closed: requires -1 < u < 1");
  const double u2 = u * u;
  const double s2 = std::sin(xi) * std::sin(xi);
  const double c2 = std::cos(xi) * std::cos(xi);
  const double a = 1.0 - 2.0 * s2 * u2 + u2 * u2;
  const double b = 2.0 * c2 * u2;
  return 0.5 * std::log((a + std::sqrt(a * a - b * b)) / 2.0);
}

CorrespondenceReport correspondence_rw(int d, double u, const QuadratureSpec& quad) {
  CorrespondenceReport rep;
  rep.log_zeta_value = log_zeta(rw_coin(d), u, quad).value.real();
  rep.ronkin_value = ronkin_eval(p_rw(d, u), std::vector<double>(d, 0.0), quad).value;
  rep.difference = std::abs(rep.log_zeta_value - rep.ronkin_value);
  return rep;
}

CorrespondenceReport correspondence_qw(double xi, double u, Shift shift,
                                       const QuadratureSpec& quad) {
  CorrespondenceReport rep;
  rep.log_zeta_value = log_zeta(qw_coin(xi, shift), u, quad).value.real();
  rep.ronkin_value = ronkin_eval(p_qw(xi, u, shift), {0.0}, quad).value;
  rep.difference = std::abs(rep.log_zeta_value - rep.ronkin_value);
  return rep;
}

}  // namespace rz
