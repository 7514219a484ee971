#include "rz/amoeba.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numbers>

#include "rz/errors.hpp"
#include "rz/ronkin.hpp"

namespace rz {

namespace {

constexpr double kTiny = 1e-14;

// Coefficients of a z^2 + b z + c obtained from P by clearing 1/z in the
// last variable at fixed prefix values.
struct SliceQuadratic {
  Complex a{0, 0}, b{0, 0}, c{0, 0};
  double scale = 0.0;
};

SliceQuadratic slice_quadratic(const LaurentPolynomial& p,
                               std::span<const double> x_prefix,
                               std::span<const double> theta_prefix) {
  const int k = p.dim();
  SliceQuadratic q;
  for (const auto& [exp, coeff] : p.terms()) {
    double growth = 0.0, phase = 0.0;
    for (int j = 0; j < k - 1; ++j) {
      growth += exp[j] * x_prefix[j];
      phase += exp[j] * theta_prefix[j];
    }
    const Complex w = coeff.value * std::polar(std::exp(growth), phase);
    q.scale += std::abs(w);
    switch (exp[k - 1]) {
      case 1: q.a += w; break;
      case 0: q.b += w; break;
      case -1: q.c += w; break;
      default: break;
    }
  }
  return q;
}

// Numerically stable quadratic roots.
std::vector<Complex> quadratic_roots(Complex a, Complex b, Complex c) {
  const Complex disc = std::sqrt(b * b - 4.0 * a * c);
  const Complex q1 = -(b + disc) / 2.0;
  const Complex q2 = -(b - disc) / 2.0;
  const Complex q = std::abs(q1) >= std::abs(q2) ? q1 : q2;
  std::vector<Complex> roots;
  if (std::abs(q) == 0.0) {
    roots.push_back({0.0, 0.0});
    roots.push_back({0.0, 0.0});
  } else {
    roots.push_back(q / a);
    roots.push_back(c / q);
  }
  return roots;
}

void check_slice_support(const LaurentPolynomial& p) {
  if (p.empty()) throw domain_error("amoeba_slice: zero polynomial");
  const auto [lo, hi] = p.degree_span(p.dim() - 1);
  if (lo < -1 || hi > 1)
    throw domain_error("amoeba_slice: last-variable degree span must lie in {-1,0,1}");
  if (lo != -1 || hi != 1)
    throw domain_error("amoeba_slice: last variable must appear with exponents -1 and 1");
}

}  // namespace

SliceResult amoeba_slice(const LaurentPolynomial& p,
                         std::span<const double> x_prefix, int theta_nodes) {
  check_slice_support(p);
  const int k = p.dim();
  if (static_cast<int>(x_prefix.size()) != k - 1)
    throw domain_error("amoeba_slice: prefix dimension mismatch");
  if (theta_nodes < 1) throw domain_error("amoeba_slice: theta_nodes must be positive");

  long long count = 1;
  for (int j = 0; j < k - 1; ++j) count *= theta_nodes;
  const double step = 2.0 * std::numbers::pi / theta_nodes;

  SliceResult out;
  std::vector<double> theta(k - 1, 0.0);
  for (long long idx = 0; idx < count; ++idx) {
    long long rem = idx;
    for (int j = k - 2; j >= 0; --j) {
      theta[j] = step * static_cast<double>(rem % theta_nodes);
      rem /= theta_nodes;
    }
    const SliceQuadratic q = slice_quadratic(p, x_prefix, theta);
    if (std::abs(q.a) < kTiny * q.scale) {
      ++out.skipped;
      continue;
    }
    for (const Complex& root : quadratic_roots(q.a, q.b, q.c)) {
      const double r = std::abs(root);
      if (r < kTiny * q.scale) continue;  // root at the origin: no Log image
      std::vector<double> pt(x_prefix.begin(), x_prefix.end());
      pt.push_back(std::log(r));
      out.points.push_back(std::move(pt));
    }
  }
  return out;
}

AmoebaRaster amoeba_complement_components(const LaurentPolynomial& p,
                                          std::array<double, 4> box, int resolution,
                                          const QuadratureSpec& quad,
                                          bool with_gradients) {
  if (p.dim() != 2)
    throw domain_error("amoeba_complement_components: requires a 2-variable polynomial");
  if (resolution < 4)
    throw config_error("amoeba_complement_components: resolution must be at least 4");
  if (!(box[0] < box[1] && box[2] < box[3]))
    throw config_error("amoeba_complement_components: empty bounding box");

  AmoebaRaster raster;
  raster.box = box;
  raster.resolution = resolution;
  const int n = resolution;
  raster.membership.assign(static_cast<std::size_t>(n) * n, 0);

  const double w1 = (box[1] - box[0]) / n;
  const double w2 = (box[3] - box[2]) / n;

  // A monomial has an empty amoeba; everything else here must expose the
  // quadratic slice structure.
  const bool monomial = p.term_count() == 1;
  int skipped_total = 0;
  if (!monomial) {
    check_slice_support(p);
    const int theta_nodes = 2 * n;
    std::vector<int> col_skipped(n, 0);
#pragma omp parallel for schedule(static)
    for (int col = 0; col < n; ++col) {
      const double x1 = box[0] + (col + 0.5) * w1;
      const double prefix[1] = {x1};
      const SliceResult slice = amoeba_slice(p, prefix, theta_nodes);
      col_skipped[col] = slice.skipped;
      for (const auto& pt : slice.points) {
        const double x2 = pt[1];
        const int row = static_cast<int>(std::floor((x2 - box[2]) / w2));
        if (row < 0 || row >= n) continue;
        raster.membership[static_cast<std::size_t>(row) * n + col] = 1;
      }
    }
    for (int col = 0; col < n; ++col) skipped_total += col_skipped[col];

    // dilate by one cell (8-neighborhood) to close diagonal pixel gaps
    std::vector<std::uint8_t> dilated = raster.membership;
    for (int row = 0; row < n; ++row)
      for (int col = 0; col < n; ++col) {
        if (!raster.member(row, col)) continue;
        for (int dr = -1; dr <= 1; ++dr)
          for (int dc = -1; dc <= 1; ++dc) {
            const int r2 = row + dr, c2 = col + dc;
            if (r2 < 0 || r2 >= n || c2 < 0 || c2 >= n) continue;
            dilated[static_cast<std::size_t>(r2) * n + c2] = 1;
          }
      }
    raster.membership = std::move(dilated);
  }
  if (skipped_total > 0)
    raster.warning = "skipped " + std::to_string(skipped_total) +
                     " slice samples with vanishing leading coefficient";

  // 4-connected flood fill of the complement, deterministic scan order
  raster.labels.assign(static_cast<std::size_t>(n) * n, -1);
  int next_label = 0;
  std::deque<std::pair<int, int>> queue;
  for (int row = 0; row < n; ++row)
    for (int col = 0; col < n; ++col) {
      const std::size_t at = static_cast<std::size_t>(row) * n + col;
      if (raster.membership[at] || raster.labels[at] >= 0) continue;
      const int label = next_label++;
      AmoebaComponent comp;
      comp.label = label;
      comp.bounded = true;
      raster.labels[at] = label;
      queue.push_back({row, col});
      while (!queue.empty()) {
        const auto [r, c] = queue.front();
        queue.pop_front();
        ++comp.cell_count;
        if (r == 0 || r == n - 1 || c == 0 || c == n - 1) comp.bounded = false;
        constexpr int dr[4] = {-1, 1, 0, 0};
        constexpr int dc[4] = {0, 0, -1, 1};
        for (int s = 0; s < 4; ++s) {
          const int r2 = r + dr[s], c2 = c + dc[s];
          if (r2 < 0 || r2 >= n || c2 < 0 || c2 >= n) continue;
          const std::size_t at2 = static_cast<std::size_t>(r2) * n + c2;
          if (raster.membership[at2] || raster.labels[at2] >= 0) continue;
          raster.labels[at2] = label;
          queue.push_back({r2, c2});
        }
      }
      raster.components.push_back(comp);
    }

  for (const auto& comp : raster.components)
    if (comp.cell_count < 4) {
      if (!raster.warning.empty()) raster.warning += "; ";
      raster.warning += "component " + std::to_string(comp.label) +
                        " spans fewer than 4 cells; resolution may be too coarse";
    }

  // representative per component: the cell farthest from the amoeba,
  // via a multi-source BFS distance transform from the membership cells
  std::vector<int> dist(static_cast<std::size_t>(n) * n, -1);
  for (int row = 0; row < n; ++row)
    for (int col = 0; col < n; ++col)
      if (raster.member(row, col)) {
        dist[static_cast<std::size_t>(row) * n + col] = 0;
        queue.push_back({row, col});
      }
  if (queue.empty()) {
    // empty amoeba: fall back to the box center
    for (auto& d : dist) d = 0;
  }
  while (!queue.empty()) {
    const auto [r, c] = queue.front();
    queue.pop_front();
    const int base = dist[static_cast<std::size_t>(r) * n + c];
    constexpr int dr[4] = {-1, 1, 0, 0};
    constexpr int dc[4] = {0, 0, -1, 1};
    for (int s = 0; s < 4; ++s) {
      const int r2 = r + dr[s], c2 = c + dc[s];
      if (r2 < 0 || r2 >= n || c2 < 0 || c2 >= n) continue;
      const std::size_t at2 = static_cast<std::size_t>(r2) * n + c2;
      if (dist[at2] >= 0) continue;
      dist[at2] = base + 1;
      queue.push_back({r2, c2});
    }
  }
  std::vector<std::pair<int, std::pair<int, int>>> best(raster.components.size(),
                                                        {-1, {0, 0}});
  for (int row = 0; row < n; ++row)
    for (int col = 0; col < n; ++col) {
      const std::size_t at = static_cast<std::size_t>(row) * n + col;
      const int label = raster.labels[at];
      if (label < 0) continue;
      if (dist[at] > best[label].first) best[label] = {dist[at], {row, col}};
    }
  if (raster.components.empty()) {
    raster.warning = "amoeba covers the entire box; no complement components";
    return raster;
  }
  for (auto& comp : raster.components) {
    const auto [row, col] = best[comp.label].second;
    comp.representative = {box[0] + (col + 0.5) * w1, box[2] + (row + 0.5) * w2};
  }

  if (with_gradients) {
    const double h1 = std::max(w1, 0.02);
    const double h2 = std::max(w2, 0.02);
    for (auto& comp : raster.components) {
      const std::vector<double>& x = comp.representative;
      auto R = [&](double a, double b) {
        return ronkin_eval(p, {a, b}, quad).value;
      };
      comp.ronkin_gradient = {
          (R(x[0] + h1, x[1]) - R(x[0] - h1, x[1])) / (2.0 * h1),
          (R(x[0], x[1] + h2) - R(x[0], x[1] - h2)) / (2.0 * h2)};
    }
  }
  return raster;
}

}  // namespace rz
