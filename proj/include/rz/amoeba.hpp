#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "rz/laurent.hpp"
#include "rz/quadrature.hpp"

namespace rz {

// Amoeba section at a fixed x-prefix: the quadratic in the last variable is
// solved on a theta-prefix grid and each nonzero root z contributes the
// point (x_prefix, log|z|).
struct SliceResult {
  std::vector<std::vector<double>> points;
  int skipped = 0;  // samples with vanishing leading coefficient
};

SliceResult amoeba_slice(const LaurentPolynomial& p,
                         std::span<const double> x_prefix, int theta_nodes);

struct AmoebaComponent {
  int label = 0;
  bool bounded = false;
  long long cell_count = 0;
  std::vector<double> representative;    // cell center farthest from the amoeba
  std::vector<double> ronkin_gradient;   // central differences at the representative
};

struct AmoebaRaster {
  std::array<double, 4> box{};  // x1_lo, x1_hi, x2_lo, x2_hi
  int resolution = 0;
  std::vector<std::uint8_t> membership;  // row-major, index = row * resolution + col
  std::vector<int> labels;               // complement component id, -1 on the amoeba
  std::vector<AmoebaComponent> components;
  std::string warning;

  bool member(int row, int col) const {
    return membership[static_cast<std::size_t>(row) * resolution + col] != 0;
  }
};

// Rasterized membership (slices dilated by one cell) plus a 4-connected
// flood fill of the complement. Components touching the box edge are
// reported unbounded; each carries a representative and, when requested,
// the numerical Ronkin gradient there.
AmoebaRaster amoeba_complement_components(const LaurentPolynomial& p,
                                          std::array<double, 4> box, int resolution,
                                          const QuadratureSpec& quad = {},
                                          bool with_gradients = true);

}  // namespace rz
