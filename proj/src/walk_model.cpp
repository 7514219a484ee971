#include "rz/walk_model.hpp"

#include <cmath>

#include "rz/errors.hpp"

namespace rz {

TorusSpec::TorusSpec(int d_, long long N_) : d(d_), N(N_) {
  if (d < 1) throw domain_error("torus dimension must be positive");
  if (N < 1) throw domain_error("torus side must be positive");
}

long long TorusSpec::sites() const {
  long long s = 1;
  for (int j = 0; j < d; ++j) s *= N;
  return s;
}

namespace {

void validate_class(int d, const Matrix& a, WalkClass cls) {
  const int n = 2 * d;
  if (cls == WalkClass::QW) {
    Matrix g = a.adjoint() * a;
    if ((g - Matrix::Identity(n, n)).cwiseAbs().maxCoeff() > kClassTol)
      throw domain_error("QW coin is not unitary to 1e-12");
    return;
  }
  if (cls == WalkClass::CRW || cls == WalkClass::RW) {
    for (int j = 0; j < n; ++j) {
      double colsum = 0.0;
      for (int i = 0; i < n; ++i) {
        Complex v = a(i, j);
        if (std::abs(v.imag()) > kClassTol || v.real() < -kClassTol ||
            v.real() > 1.0 + kClassTol)
          throw domain_error("CRW/RW coin entries must be real in [0,1]");
        colsum += v.real();
      }
      if (std::abs(colsum - 1.0) > kClassTol)
        throw domain_error("CRW/RW coin columns must sum to 1");
    }
    if (cls == WalkClass::RW) {
      for (int i = 0; i < n; ++i)
        for (int j = 1; j < n; ++j)
          if (std::abs(a(i, j) - a(i, 0)) > kClassTol)
            throw domain_error("RW coin rows must be constant");
    }
  }
}

}  // namespace

CoinMatrix::CoinMatrix(int d, Matrix entries, Shift shift, WalkClass cls,
                       std::optional<double> qw_angle)
    : d_(d), shift_(shift), cls_(cls), entries_(std::move(entries)), angle_(qw_angle) {
  if (d_ < 1) throw domain_error("coin dimension must be positive");
  if (entries_.rows() != 2 * d_ || entries_.cols() != 2 * d_)
    throw domain_error("coin matrix must be 2d x 2d");
  validate_class(d_, entries_, cls_);
}

CoinMatrix qw_coin(double xi, Shift shift) {
  Matrix a(2, 2);
  const double c = std::cos(xi), s = std::sin(xi);
  if (shift == Shift::M)
    a << c, s, s, -c;
  else
    a << s, -c, c, s;
  return CoinMatrix(1, a, shift, WalkClass::QW, xi);
}

CoinMatrix rw_coin(int d) {
  if (d < 1) throw domain_error("rw_coin: dimension must be positive");
  const int n = 2 * d;
  Matrix a = Matrix::Constant(n, n, Complex(1.0 / n, 0.0));
  return CoinMatrix(d, a, Shift::M, WalkClass::RW);
}

CoinMatrix to_flip_flop(const CoinMatrix& coin) {
  if (coin.shift() == Shift::F)
    throw state_error("to_flip_flop: coin is already F-type");
  const int n = coin.size();
  Matrix a(n, n);
  // (I_d (x) sigma) swaps rows 2j-1 and 2j inside each block.
  for (int j = 0; j < coin.d(); ++j) {
    a.row(2 * j) = coin.entries().row(2 * j + 1);
    a.row(2 * j + 1) = coin.entries().row(2 * j);
  }
  WalkClass cls = coin.walk_class();
  if (cls == WalkClass::RW) {
    // Row swaps can break the constant-row property (not for the uniform
    // coin, where every row is the same).
    bool constant_rows = true;
    for (int i = 0; i < n && constant_rows; ++i)
      for (int j = 1; j < n; ++j)
        if (std::abs(a(i, j) - a(i, 0)) > kClassTol) {
          constant_rows = false;
          break;
        }
    if (!constant_rows) cls = WalkClass::CRW;
  }
  return CoinMatrix(coin.d(), a, Shift::F, cls, coin.qw_angle());
}

Matrix momentum_matrix(const CoinMatrix& coin, std::span<const double> ktilde) {
  if (static_cast<int>(ktilde.size()) != coin.d())
    throw domain_error("momentum_matrix: ktilde length must equal coin dimension");
  const int n = coin.size();
  Matrix m(n, n);
  for (int j = 0; j < coin.d(); ++j) {
    const Complex up = std::polar(1.0, ktilde[j]);
    const Complex dn = std::conj(up);
    m.row(2 * j) = up * coin.entries().row(2 * j);
    m.row(2 * j + 1) = dn * coin.entries().row(2 * j + 1);
  }
  return m;
}

Complex char_det(const CoinMatrix& coin, std::span<const double> ktilde, double u) {
  const int n = coin.size();
  if (n == 2) {
    // 2x2 case closed out directly; this is the inner loop of every 1D
    // quadrature.
    const Complex up = std::polar(1.0, ktilde[0]);
    const Complex dn = std::conj(up);
    const auto& a = coin.entries();
    const Complex m00 = up * a(0, 0), m01 = up * a(0, 1);
    const Complex m10 = dn * a(1, 0), m11 = dn * a(1, 1);
    return (1.0 - u * m00) * (1.0 - u * m11) - u * u * m01 * m10;
  }
  Matrix f = Matrix::Identity(n, n) - u * momentum_matrix(coin, ktilde);
  return Eigen::PartialPivLU<Matrix>(f).determinant();
}

std::vector<Complex> momentum_spectrum(const CoinMatrix& coin,
                                       std::span<const double> ktilde) {
  if (coin.size() > 64)
    throw domain_error("momentum_spectrum: dense eigensolver limited to 2d <= 64");
  Eigen::ComplexEigenSolver<Matrix> es(momentum_matrix(coin, ktilde), false);
  std::vector<Complex> out(es.eigenvalues().data(),
                           es.eigenvalues().data() + es.eigenvalues().size());
  return out;
}

Matrix site_matrix(const CoinMatrix& coin, const TorusSpec& torus) {
  if (torus.d != coin.d())
    throw domain_error("site_matrix: torus/coin dimension mismatch");
  const int d = coin.d();
  const int n = coin.size();
  const long long sites = torus.sites();
  Matrix m = Matrix::Zero(n * sites, n * sites);

  std::vector<long long> stride(d);
  stride[0] = 1;
  for (int j = 1; j < d; ++j) stride[j] = stride[j - 1] * torus.N;

  auto shifted = [&](long long site, int j, int dir) {
    long long xj = (site / stride[j]) % torus.N;
    long long nj = (xj + dir + torus.N) % torus.N;
    return site + (nj - xj) * stride[j];
  };

  // Row block at x, component 2j-1 reads Psi(x+e_j); component 2j reads
  // Psi(x-e_j); see the evolution rule.
  for (long long x = 0; x < sites; ++x) {
    for (int j = 0; j < d; ++j) {
      const long long xp = shifted(x, j, +1);
      const long long xm = shifted(x, j, -1);
      for (int c = 0; c < n; ++c) {
        m(x * n + 2 * j, xp * n + c) += coin.entries()(2 * j, c);
        m(x * n + 2 * j + 1, xm * n + c) += coin.entries()(2 * j + 1, c);
      }
    }
  }
  return m;
}

}  // namespace rz
