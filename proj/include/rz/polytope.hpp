#pragma once

#include <vector>

#include "rz/laurent.hpp"

namespace rz {

// Integer polytope with explicit vertex and lattice-point lists.
struct LatticePolytope {
  int d = 1;
  std::vector<std::vector<int>> vertices;
  std::vector<std::vector<int>> lattice_points;
};

// Set equality on vertex lists, order-insensitive.
bool same_point_set(const std::vector<std::vector<int>>& a,
                    const std::vector<std::vector<int>>& b);

// Convex hull of P's support. Generic hulls for d <= 3 (monotone chain in
// 2D, brute-force facet enumeration in 3D); the cross-polytope and
// axis-segment families are recognized in any dimension.
LatticePolytope newton_polytope(const LaurentPolynomial& p);

// DP_d = Conv(+-e_1, ..., +-e_d).
LatticePolytope direction_polytope(int d);

// Hull of an explicit integer point set (d <= 3).
LatticePolytope lattice_hull(int d, std::vector<std::vector<int>> points);

}  // namespace rz
