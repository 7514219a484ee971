#include "rz/polytope.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <set>

#include "rz/errors.hpp"

namespace rz {

namespace {

using Point = std::vector<int>;

struct Facet {
  Point normal;
  long long offset;  // inequality: normal . x <= offset
};

long long dot(const Point& a, const Point& b) {
  long long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<long long>(a[i]) * b[i];
  return s;
}

bool satisfies(const std::vector<Facet>& facets, const Point& p) {
  for (const auto& f : facets)
    if (dot(f.normal, p) > f.offset) return false;
  return true;
}

std::vector<Point> dedupe(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

// 2D monotone chain; returns CCW vertex cycle (collinear points dropped).
std::vector<Point> hull2d(std::vector<Point> pts) {
  pts = dedupe(std::move(pts));
  const int n = static_cast<int>(pts.size());
  if (n <= 2) return pts;
  auto cross = [](const Point& o, const Point& a, const Point& b) {
    return static_cast<long long>(a[0] - o[0]) * (b[1] - o[1]) -
           static_cast<long long>(a[1] - o[1]) * (b[0] - o[0]);
  };
  std::vector<Point> h(2 * n);
  int k = 0;
  for (int i = 0; i < n; ++i) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  const int lower = k + 1;
  for (int i = n - 2; i >= 0; --i) {
    while (k >= lower && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

std::vector<Facet> facets2d(const std::vector<Point>& hull) {
  std::vector<Facet> facets;
  const int n = static_cast<int>(hull.size());
  if (n == 1) {
    facets.push_back({{1, 0}, hull[0][0]});
    facets.push_back({{-1, 0}, -hull[0][0]});
    facets.push_back({{0, 1}, hull[0][1]});
    facets.push_back({{0, -1}, -hull[0][1]});
    return facets;
  }
  if (n == 2) {
    // segment: two edge normals plus the two end caps along the direction
    const int dx = hull[1][0] - hull[0][0], dy = hull[1][1] - hull[0][1];
    facets.push_back({{dy, -dx}, dot({dy, -dx}, hull[0])});
    facets.push_back({{-dy, dx}, dot({-dy, dx}, hull[0])});
    facets.push_back({{dx, dy}, std::max(dot({dx, dy}, hull[0]), dot({dx, dy}, hull[1]))});
    facets.push_back({{-dx, -dy},
                      std::max(dot({-dx, -dy}, hull[0]), dot({-dx, -dy}, hull[1]))});
    return facets;
  }
  for (int i = 0; i < n; ++i) {
    const Point& a = hull[i];
    const Point& b = hull[(i + 1) % n];
    // CCW cycle: outward normal of edge a->b is (dy, -dx)
    Point normal = {b[1] - a[1], -(b[0] - a[0])};
    facets.push_back({normal, dot(normal, a)});
  }
  return facets;
}

// Brute-force supporting-plane enumeration for small 3D point sets.
std::vector<Facet> facets3d(const std::vector<Point>& pts) {
  const int n = static_cast<int>(pts.size());
  std::vector<Facet> facets;
  std::set<std::pair<Point, long long>> seen;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        const Point u = {pts[j][0] - pts[i][0], pts[j][1] - pts[i][1],
                         pts[j][2] - pts[i][2]};
        const Point v = {pts[k][0] - pts[i][0], pts[k][1] - pts[i][1],
                         pts[k][2] - pts[i][2]};
        Point nrm = {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2],
                     u[0] * v[1] - u[1] * v[0]};
        if (nrm[0] == 0 && nrm[1] == 0 && nrm[2] == 0) continue;
        for (int sign : {1, -1}) {
          Point cand = {sign * nrm[0], sign * nrm[1], sign * nrm[2]};
          const long long c = dot(cand, pts[i]);
          bool supporting = true;
          for (int m = 0; m < n && supporting; ++m)
            if (dot(cand, pts[m]) > c) supporting = false;
          if (!supporting) continue;
          // normalize by gcd for dedupe
          long long g = 0;
          for (int t = 0; t < 3; ++t) g = std::gcd(g, static_cast<long long>(std::abs(cand[t])));
          Point key = cand;
          long long off = c;
          if (g > 1) {
            for (int t = 0; t < 3; ++t) key[t] = static_cast<int>(cand[t] / g);
            // offsets of lattice supporting planes need not divide evenly;
            // keep the scaled inequality in that case
            if (c % g == 0)
              off = c / g;
            else {
              key = cand;
              off = c;
            }
          }
          if (seen.insert({key, off}).second) facets.push_back({key, off});
        }
      }
  if (facets.empty())
    throw domain_error("newton_polytope: degenerate (non full-dimensional) 3D support");
  return facets;
}

std::vector<Point> enumerate_lattice(const std::vector<Point>& support,
                                     const std::vector<Facet>& facets, int d) {
  Point lo = support[0], hi = support[0];
  for (const auto& p : support)
    for (int j = 0; j < d; ++j) {
      lo[j] = std::min(lo[j], p[j]);
      hi[j] = std::max(hi[j], p[j]);
    }
  std::vector<Point> out;
  Point p(lo);
  while (true) {
    if (satisfies(facets, p)) out.push_back(p);
    int j = d - 1;
    while (j >= 0) {
      if (++p[j] <= hi[j]) break;
      p[j] = lo[j];
      --j;
    }
    if (j < 0) break;
  }
  return out;
}

// Vertices from a half-space description: points of the support lying on a
// set of active facets whose normals span R^d.
std::vector<Point> extreme_points(const std::vector<Point>& support,
                                  const std::vector<Facet>& facets, int d) {
  std::vector<Point> verts;
  for (const auto& p : support) {
    std::vector<Point> active;
    for (const auto& f : facets)
      if (dot(f.normal, p) == f.offset) active.push_back(f.normal);
    // rank of the active normals via integer Gaussian elimination on doubles
    int rank = 0;
    std::vector<std::vector<double>> rows;
    for (const auto& a : active) {
      std::vector<double> r(a.begin(), a.end());
      for (const auto& base : rows) {
        // eliminate
        int piv = -1;
        for (int j = 0; j < d; ++j)
          if (std::abs(base[j]) > 1e-9) {
            piv = j;
            break;
          }
        if (piv < 0) continue;
        const double f = r[piv] / base[piv];
        for (int j = 0; j < d; ++j) r[j] -= f * base[j];
      }
      double norm = 0;
      for (int j = 0; j < d; ++j) norm += r[j] * r[j];
      if (norm > 1e-12) {
        rows.push_back(r);
        ++rank;
      }
    }
    if (rank == d) verts.push_back(p);
  }
  return dedupe(verts);
}

bool is_cross_polytope_support(const std::vector<Point>& support, int d) {
  std::set<Point> need;
  for (int j = 0; j < d; ++j) {
    Point e(d, 0);
    e[j] = 1;
    need.insert(e);
    e[j] = -1;
    need.insert(e);
  }
  const Point origin(d, 0);
  for (const auto& p : support)
    if (!need.count(p) && p != origin) return false;
  for (const auto& p : support) need.erase(p);
  return need.empty();
}

// Support contained in a single coordinate axis (possibly with origin).
int axis_segment_direction(const std::vector<Point>& support, int d) {
  int axis = -1;
  for (const auto& p : support) {
    int nz = -1;
    for (int j = 0; j < d; ++j)
      if (p[j] != 0) {
        if (nz >= 0) return -1;
        nz = j;
      }
    if (nz < 0) continue;
    if (axis >= 0 && axis != nz) return -1;
    axis = nz;
  }
  return axis;
}

}  // namespace

bool same_point_set(const std::vector<std::vector<int>>& a,
                    const std::vector<std::vector<int>>& b) {
  return dedupe(a) == dedupe(b);
}

LatticePolytope lattice_hull(int d, std::vector<std::vector<int>> points) {
  if (points.empty()) throw domain_error("lattice_hull: empty point set");
  LatticePolytope poly;
  poly.d = d;
  points = dedupe(std::move(points));

  if (points.size() == 1) {
    poly.vertices = points;
    poly.lattice_points = points;
    return poly;
  }

  // axis-aligned segment family works in any dimension
  if (int axis = axis_segment_direction(points, d); axis >= 0) {
    int lo = 0, hi = 0;
    for (const auto& p : points) {
      lo = std::min(lo, p[axis]);
      hi = std::max(hi, p[axis]);
    }
    for (int v = lo; v <= hi; ++v) {
      Point p(d, 0);
      p[axis] = v;
      poly.lattice_points.push_back(p);
      if (v == lo || v == hi) poly.vertices.push_back(p);
    }
    return poly;
  }

  if (is_cross_polytope_support(points, d)) {
    for (int j = 0; j < d; ++j) {
      Point e(d, 0);
      e[j] = 1;
      poly.vertices.push_back(e);
      poly.lattice_points.push_back(e);
      e[j] = -1;
      poly.vertices.push_back(e);
      poly.lattice_points.push_back(e);
    }
    poly.lattice_points.push_back(Point(d, 0));
    poly.vertices = dedupe(poly.vertices);
    poly.lattice_points = dedupe(poly.lattice_points);
    return poly;
  }

  if (d == 1) {
    int lo = points.front()[0], hi = points.back()[0];
    for (int v = lo; v <= hi; ++v) poly.lattice_points.push_back({v});
    poly.vertices = {{lo}, {hi}};
    return poly;
  }
  if (d == 2) {
    auto hull = hull2d(points);
    auto facets = facets2d(hull);
    poly.vertices = hull.size() <= 2 ? dedupe(hull) : extreme_points(points, facets, 2);
    poly.lattice_points = enumerate_lattice(points, facets, 2);
    return poly;
  }
  if (d == 3) {
    auto facets = facets3d(points);
    poly.vertices = extreme_points(points, facets, 3);
    poly.lattice_points = enumerate_lattice(points, facets, 3);
    return poly;
  }
  throw domain_error("lattice_hull: generic hulls supported only for d <= 3");
}

LatticePolytope newton_polytope(const LaurentPolynomial& p) {
  if (p.empty()) throw domain_error("newton_polytope: zero polynomial");
  std::vector<std::vector<int>> support;
  for (const auto& [exp, coeff] : p.terms()) support.push_back(exp);
  return lattice_hull(p.dim(), std::move(support));
}

LatticePolytope direction_polytope(int d) {
  if (d < 1) throw domain_error("direction_polytope: d must be positive");
  std::vector<std::vector<int>> pts;
  for (int j = 0; j < d; ++j) {
    std::vector<int> e(d, 0);
    e[j] = 1;
    pts.push_back(e);
    e[j] = -1;
    pts.push_back(e);
  }
  return lattice_hull(d, std::move(pts));
}

}  // namespace rz
