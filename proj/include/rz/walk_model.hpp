#pragma once

#include <Eigen/Dense>
#include <complex>
#include <optional>
#include <span>
#include <vector>

namespace rz {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

enum class Shift { M, F };
enum class WalkClass { RW, CRW, QW, General };

// Class-membership tolerance checked at construction.
inline constexpr double kClassTol = 1e-12;

// d-dimensional torus with N^d vertices. Momentum grid: k in {0..N-1}^d
// with ktilde_j = 2*pi*k_j/N.
struct TorusSpec {
  int d = 1;
  long long N = 1;
  TorusSpec(int d_, long long N_);
  long long sites() const;
};

// 2d x 2d coin with a declared shift convention and walk class. Immutable
// after construction; the constructor enforces the class invariants
// (unitarity for QW, column stochasticity for CRW/RW, constant rows for RW).
class CoinMatrix {
 public:
  CoinMatrix(int d, Matrix entries, Shift shift, WalkClass cls,
             std::optional<double> qw_angle = std::nullopt);

  int d() const { return d_; }
  int size() const { return 2 * d_; }
  Shift shift() const { return shift_; }
  WalkClass walk_class() const { return cls_; }
  const Matrix& entries() const { return entries_; }
  // Set for coins built by qw_coin; drives the closed-form u-range checks.
  std::optional<double> qw_angle() const { return angle_; }

 private:
  int d_;
  Shift shift_;
  WalkClass cls_;
  Matrix entries_;
  std::optional<double> angle_;
};

// [[cos xi, sin xi], [sin xi, -cos xi]] for M; the row-swapped form for F.
CoinMatrix qw_coin(double xi, Shift shift);

// Uniform 2d x 2d coin with all entries 1/(2d): the simple symmetric RW.
CoinMatrix rw_coin(int d);

// A^(f) = (I_d (x) sigma) A. Involution on entries; input must be M-type.
CoinMatrix to_flip_flop(const CoinMatrix& coin);

// Momentum-space walk matrix: row 2j-1 of A scaled by e^{+i ktilde_j},
// row 2j by e^{-i ktilde_j} (1-based rows), j = 1..d.
Matrix momentum_matrix(const CoinMatrix& coin, std::span<const double> ktilde);

// det(I_{2d} - u * Mhat(ktilde)) by direct elimination.
Complex char_det(const CoinMatrix& coin, std::span<const double> ktilde, double u);

// Eigenvalues of Mhat(ktilde); dense solver, limited to 2d <= 64.
std::vector<Complex> momentum_spectrum(const CoinMatrix& coin,
                                       std::span<const double> ktilde);

// The 2dN^d x 2dN^d site-space walk matrix. Test oracle for the
// momentum-space determinant route; desk-scale sizes only.
Matrix site_matrix(const CoinMatrix& coin, const TorusSpec& torus);

}  // namespace rz
