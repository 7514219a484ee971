#pragma once

#include <span>
#include <vector>

#include "rz/laurent.hpp"
#include "rz/polytope.hpp"

namespace rz {

// One tropical term: <form, x> + offset with offset = -val(coefficient).
struct TropicalTerm {
  std::vector<int> form;
  Rational offset{0, 1};
};

struct TropicalPolynomial {
  int d = 1;
  std::vector<TropicalTerm> terms;

  // max-plus evaluation
  double eval(std::span<const double> x) const;
  // value of a single term
  double term_value(std::size_t i, std::span<const double> x) const;
};

TropicalPolynomial tropicalize(const LaurentPolynomial& p);

// True iff the two largest term values at x differ by less than tol.
bool trop_member(const TropicalPolynomial& t, std::span<const double> x, double tol);

// Signed coordinate set: entries +-(i+1) meaning x_{i+1} or -x_{i+1};
// no coordinate may appear with both signs.
using SignedSet = std::vector<int>;

struct PolyhedralCone {
  SignedSet S;
  int d = 1;
  int dim = 1;  // d - r + 1
  std::vector<std::vector<double>> generators;
};

// C_S = sum_{x_j not in S} R>=0 ((sum s_i) +- x_j); for r = d (empty
// generator sum in the source formula) the cone is the single ray
// R>=0(sum s_i).
PolyhedralCone cone_CS(const SignedSet& S, int d);

// F_S = Conv(s_1, ..., s_r), the face of the cross-polytope dual to C_S.
LatticePolytope face_FS(const SignedSet& S, int d);

// Every ray generator of C_S has zero inner product with every direction
// vector s_1 - s_i of F_S (to 1e-12).
bool perpendicularity_check(const SignedSet& S, int d);

// Euclidean distance from x to the cone (origin apex).
double cone_distance(const PolyhedralCone& cone, std::span<const double> x);

// 1-dimensional cell of a tropical curve: a point, a segment [a, b], or a
// ray a + t*dir (t >= 0).
struct TropCell {
  std::vector<double> base;
  std::vector<double> dir;  // zero vector for a point cell
  bool is_ray = false;      // otherwise: segment from base to base + dir
};

double cell_distance(const TropCell& cell, std::span<const double> x);

struct PolyhedralComplex {
  int d = 1;
  std::vector<PolyhedralCone> cones;  // cross-polytope-family route
  std::vector<TropCell> cells;        // generic d <= 2 route

  double distance(std::span<const double> x) const;
  // normalized ray directions of every cone generator / ray cell
  std::vector<std::vector<double>> ray_set() const;
};

// Dual complex of DP_d: the tropical hypersurface of the symmetric
// tropical polynomial max_i(x_i, -x_i).
PolyhedralComplex direction_graph(int d);

// Tropical hypersurface of T: the locus where the max is achieved at
// least twice. Cross-polytope supports (any d <= 3) go through the cone
// construction; other inputs are handled generically for d <= 2.
PolyhedralComplex trop_hypersurface(const TropicalPolynomial& t);

struct DualityReport {
  bool cone_samples_are_members = false;
  bool member_samples_near_complex = false;
  bool matches_direction_graph = false;  // only meaningful for the P_d family
  int mismatch_count = 0;
  int sample_count = 0;
};

// Verifies membership/cone consistency by sampling and, for the
// cross-polytope family, equality with the direction graph.
DualityReport duality_check(const LaurentPolynomial& p, int samples = 2000,
                            double tol = 1e-9, unsigned seed = 12345);

bool same_ray_set(const PolyhedralComplex& a, const PolyhedralComplex& b,
                  double tol = 1e-9);

}  // namespace rz
