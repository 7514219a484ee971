#include "rz/tropical.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <set>

#include "rz/errors.hpp"

namespace rz {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void validate_signed_set(const SignedSet& S, int d) {
  if (S.empty()) throw domain_error("signed set must be nonempty");
  std::set<int> seen;
  for (int s : S) {
    const int i = std::abs(s);
    if (s == 0 || i > d) throw domain_error("signed set entry out of range");
    if (seen.count(i))
      throw domain_error("signed set contains x_i and -x_i (or a duplicate)");
    seen.insert(i);
  }
  if (static_cast<int>(S.size()) > d)
    throw domain_error("signed set larger than the dimension");
}

std::vector<double> signed_basis(int s, int d) {
  std::vector<double> v(d, 0.0);
  v[std::abs(s) - 1] = s > 0 ? 1.0 : -1.0;
  return v;
}

std::vector<double> sum_of(const SignedSet& S, int d) {
  std::vector<double> v(d, 0.0);
  for (int s : S) v[std::abs(s) - 1] += s > 0 ? 1.0 : -1.0;
  return v;
}

double norm(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

std::vector<double> normalized(std::vector<double> v) {
  const double n = norm(v);
  if (n > 0)
    for (double& x : v) x /= n;
  return v;
}

// All signed subsets of {x_1..x_d} with r in [r_min, d].
std::vector<SignedSet> signed_subsets(int d, int r_min) {
  std::vector<SignedSet> out;
  const long long total = 1;
  (void)total;
  // ternary enumeration: each coordinate absent / + / -
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
    if (static_cast<int>(S.size()) >= r_min) out.push_back(S);
  }
  return out;
}

}  // namespace

double TropicalPolynomial::term_value(std::size_t i, std::span<const double> x) const {
  double v = terms[i].offset.value();
  for (int j = 0; j < d; ++j) v += terms[i].form[j] * x[j];
  return v;
}

double TropicalPolynomial::eval(std::span<const double> x) const {
  double best = -kInf;
  for (std::size_t i = 0; i < terms.size(); ++i)
    best = std::max(best, term_value(i, x));
  return best;
}

TropicalPolynomial tropicalize(const LaurentPolynomial& p) {
  TropicalPolynomial t;
  t.d = p.dim();
  std::set<std::pair<std::vector<int>, std::pair<std::int64_t, std::uint64_t>>> seen;
  for (const auto& [exp, coeff] : p.terms()) {
    const Rational off = -coeff.valuation;
    if (!seen.insert({exp, {off.num, off.den}}).second) continue;
    t.terms.push_back({exp, off});
  }
  return t;
}

bool trop_member(const TropicalPolynomial& t, std::span<const double> x, double tol) {
  if (tol <= 0.0) throw domain_error("trop_member: tol must be positive");
  if (t.terms.size() < 2) return false;
  double top1 = -kInf, top2 = -kInf;
  for (std::size_t i = 0; i < t.terms.size(); ++i) {
    const double v = t.term_value(i, x);
    if (v > top1) {
      top2 = top1;
      top1 = v;
    } else if (v > top2) {
      top2 = v;
    }
  }
  return top1 - top2 < tol;
}

PolyhedralCone cone_CS(const SignedSet& S, int d) {
  validate_signed_set(S, d);
  PolyhedralCone cone;
  cone.S = S;
  cone.d = d;
  const int r = static_cast<int>(S.size());
  cone.dim = d - r + 1;
  const auto s_sum = sum_of(S, d);

  std::set<int> used;
  for (int s : S) used.insert(std::abs(s) - 1);
  bool any = false;
  for (int j = 0; j < d; ++j) {
    if (used.count(j)) continue;
    any = true;
    for (double sign : {+1.0, -1.0}) {
      auto g = s_sum;
      g[j] += sign;
      cone.generators.push_back(std::move(g));
    }
  }
  if (!any) {
    // r = d: the source formula degenerates to an empty sum; the tie
    // region is the single ray spanned by sum s_i.
    cone.generators.push_back(s_sum);
  }
  return cone;
}

LatticePolytope face_FS(const SignedSet& S, int d) {
  validate_signed_set(S, d);
  std::vector<std::vector<int>> pts;
  for (int s : S) {
    std::vector<int> e(d, 0);
    e[std::abs(s) - 1] = s > 0 ? 1 : -1;
    pts.push_back(std::move(e));
  }
  LatticePolytope face;
  face.d = d;
  face.vertices = pts;
  face.lattice_points = pts;
  return face;
}

bool perpendicularity_check(const SignedSet& S, int d) {
  const PolyhedralCone cone = cone_CS(S, d);
  const auto s1 = signed_basis(S[0], d);
  for (std::size_t i = 1; i < S.size(); ++i) {
    const auto si = signed_basis(S[i], d);
    for (const auto& g : cone.generators) {
      double ip = 0.0;
      for (int j = 0; j < d; ++j) ip += g[j] * (s1[j] - si[j]);
      if (std::abs(ip) > 1e-12) return false;
    }
  }
  return true;
}

double cone_distance(const PolyhedralCone& cone, std::span<const double> x) {
  const int d = cone.d;
  const int g = static_cast<int>(cone.generators.size());
  Eigen::VectorXd xv(d);
  for (int j = 0; j < d; ++j) xv[j] = x[j];

  double best = xv.norm();  // apex
  // The nearest point lies on a face; enumerate generator subsets.
  for (int mask = 1; mask < (1 << g); ++mask) {
    std::vector<int> idx;
    for (int i = 0; i < g; ++i)
      if (mask & (1 << i)) idx.push_back(i);
    Eigen::MatrixXd G(d, static_cast<int>(idx.size()));
    for (std::size_t c = 0; c < idx.size(); ++c)
      for (int j = 0; j < d; ++j) G(j, static_cast<int>(c)) = cone.generators[idx[c]][j];
    Eigen::VectorXd lambda = G.completeOrthogonalDecomposition().solve(xv);
    if ((lambda.array() < -1e-9).any()) continue;
    best = std::min(best, (xv - G * lambda).norm());
  }
  return best;
}

double cell_distance(const TropCell& cell, std::span<const double> x) {
  const std::size_t d = cell.base.size();
  double dir2 = 0.0, proj = 0.0;
  for (std::size_t j = 0; j < d; ++j) {
    dir2 += cell.dir[j] * cell.dir[j];
    proj += cell.dir[j] * (x[j] - cell.base[j]);
  }
  double t = 0.0;
  if (dir2 > 0) {
    t = proj / dir2;
    if (cell.is_ray)
      t = std::max(t, 0.0);
    else
      t = std::clamp(t, 0.0, 1.0);
  }
  double s = 0.0;
  for (std::size_t j = 0; j < d; ++j) {
    const double diff = x[j] - cell.base[j] - t * cell.dir[j];
    s += diff * diff;
  }
  return std::sqrt(s);
}

double PolyhedralComplex::distance(std::span<const double> x) const {
  double best = kInf;
  for (const auto& cone : cones) best = std::min(best, cone_distance(cone, x));
  for (const auto& cell : cells) best = std::min(best, cell_distance(cell, x));
  return best;
}

std::vector<std::vector<double>> PolyhedralComplex::ray_set() const {
  std::vector<std::vector<double>> rays;
  auto push = [&](std::vector<double> v) {
    if (norm(v) < 1e-12) return;
    v = normalized(std::move(v));
    for (const auto& r : rays) {
      double dist = 0.0;
      for (std::size_t j = 0; j < v.size(); ++j) dist += (r[j] - v[j]) * (r[j] - v[j]);
      if (std::sqrt(dist) < 1e-9) return;
    }
    rays.push_back(std::move(v));
  };
  for (const auto& cone : cones)
    for (const auto& g : cone.generators) push(g);
  for (const auto& cell : cells)
    if (cell.is_ray) push(cell.dir);
  return rays;
}

PolyhedralComplex direction_graph(int d) {
  if (d < 1) throw domain_error("direction_graph: d must be positive");
  PolyhedralComplex complex;
  complex.d = d;
  if (d == 1) {
    complex.cells.push_back({{0.0}, {0.0}, false});
    return complex;
  }
  for (const auto& S : signed_subsets(d, 2)) complex.cones.push_back(cone_CS(S, d));
  return complex;
}

namespace {

bool is_symmetric_cross_family(const TropicalPolynomial& t) {
  // forms contained in {0, +-e_i}, all +-e_i present, all offsets equal
  if (t.terms.empty()) return false;
  const Rational off0 = t.terms.front().offset;
  std::set<std::vector<int>> forms;
  for (const auto& term : t.terms) {
    int nz = 0;
    for (int j = 0; j < t.d; ++j)
      if (term.form[j] != 0) {
        ++nz;
        if (std::abs(term.form[j]) != 1) return false;
      }
    if (nz > 1) return false;
    if (nz == 1 && term.offset != off0) return false;
    forms.insert(term.form);
  }
  for (int j = 0; j < t.d; ++j) {
    std::vector<int> e(t.d, 0);
    e[j] = 1;
    if (!forms.count(e)) return false;
    e[j] = -1;
    if (!forms.count(e)) return false;
  }
  // a constant term with a larger offset would carve a bounded cell; only
  // accept it when it never dominates (offset <= common offset)
  for (const auto& term : t.terms) {
    bool zero = true;
    for (int j = 0; j < t.d; ++j) zero = zero && term.form[j] == 0;
    if (zero && term.offset.value() > off0.value()) return false;
  }
  return true;
}

// Generic pairwise-tie construction, d <= 2.
std::vector<TropCell> generic_cells(const TropicalPolynomial& t) {
  constexpr double kEps = 1e-9;
  std::vector<TropCell> cells;
  const std::size_t n = t.terms.size();

  if (t.d == 1) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        const double df = t.terms[i].form[0] - t.terms[j].form[0];
        if (df == 0.0) continue;
        const double x0 =
            (t.terms[j].offset.value() - t.terms[i].offset.value()) / df;
        const double x[1] = {x0};
        const double vi = t.term_value(i, x);
        bool dominant = true;
        for (std::size_t m = 0; m < n && dominant; ++m)
          if (t.term_value(m, x) > vi + kEps) dominant = false;
        if (dominant) cells.push_back({{x0}, {0.0}, false});
      }
    return cells;
  }

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double n0 = t.terms[i].form[0] - t.terms[j].form[0];
      const double n1 = t.terms[i].form[1] - t.terms[j].form[1];
      const double nn = n0 * n0 + n1 * n1;
      if (nn == 0.0) continue;
      const double c = t.terms[j].offset.value() - t.terms[i].offset.value();
      const std::vector<double> p0 = {c * n0 / nn, c * n1 / nn};
      const std::vector<double> dir = {-n1 / std::sqrt(nn), n0 / std::sqrt(nn)};

      double tlo = -kInf, thi = kInf;
      bool empty = false;
      for (std::size_t m = 0; m < n && !empty; ++m) {
        if (m == i || m == j) continue;
        // need value_i(x(t)) >= value_m(x(t))
        const double a = (t.terms[i].form[0] - t.terms[m].form[0]) * dir[0] +
                         (t.terms[i].form[1] - t.terms[m].form[1]) * dir[1];
        const double b = t.terms[m].offset.value() - t.terms[i].offset.value() -
                         ((t.terms[i].form[0] - t.terms[m].form[0]) * p0[0] +
                          (t.terms[i].form[1] - t.terms[m].form[1]) * p0[1]);
        if (std::abs(a) < kEps) {
          if (b > kEps) empty = true;
        } else if (a > 0) {
          tlo = std::max(tlo, b / a);
        } else {
          thi = std::min(thi, b / a);
        }
      }
      if (empty || thi < tlo - kEps) continue;

      if (tlo == -kInf && thi == kInf) {
        cells.push_back({p0, dir, true});
        cells.push_back({p0, {-dir[0], -dir[1]}, true});
      } else if (thi == kInf) {
        cells.push_back({{p0[0] + tlo * dir[0], p0[1] + tlo * dir[1]}, dir, true});
      } else if (tlo == -kInf) {
        cells.push_back(
            {{p0[0] + thi * dir[0], p0[1] + thi * dir[1]}, {-dir[0], -dir[1]}, true});
      } else if (thi - tlo < kEps) {
        cells.push_back(
            {{p0[0] + tlo * dir[0], p0[1] + tlo * dir[1]}, {0.0, 0.0}, false});
      } else {
        cells.push_back({{p0[0] + tlo * dir[0], p0[1] + tlo * dir[1]},
                         {(thi - tlo) * dir[0], (thi - tlo) * dir[1]},
                         false});
      }
    }
  return cells;
}

}  // namespace

PolyhedralComplex trop_hypersurface(const TropicalPolynomial& t) {
  PolyhedralComplex complex;
  complex.d = t.d;
  if (t.d >= 2 && is_symmetric_cross_family(t)) {
    for (const auto& S : signed_subsets(t.d, 2)) complex.cones.push_back(cone_CS(S, t.d));
    return complex;
  }
  if (t.d > 2)
    throw domain_error(
        "trop_hypersurface: generic construction supported only for d <= 2");
  complex.cells = generic_cells(t);
  return complex;
}

bool same_ray_set(const PolyhedralComplex& a, const PolyhedralComplex& b, double tol) {
  auto ra = a.ray_set();
  auto rb = b.ray_set();
  if (ra.size() != rb.size()) return false;
  for (const auto& r : ra) {
    bool found = false;
    for (const auto& s : rb) {
      double dist = 0.0;
      for (std::size_t j = 0; j < r.size(); ++j) dist += (r[j] - s[j]) * (r[j] - s[j]);
      if (std::sqrt(dist) < tol) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

DualityReport duality_check(const LaurentPolynomial& p, int samples, double tol,
                            unsigned seed) {
  const TropicalPolynomial t = tropicalize(p);
  const PolyhedralComplex complex = trop_hypersurface(t);
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 2.0);
  std::uniform_real_distribution<double> box(-3.0, 3.0);

  DualityReport rep;
  rep.cone_samples_are_members = true;
  rep.member_samples_near_complex = true;

  std::vector<double> x(t.d);
  // (a) points drawn from each cone/cell must be tropical-hypersurface
  // members, and must sit at distance ~0 from the complex
  const int cell_total = static_cast<int>(complex.cones.size() + complex.cells.size());
  const int per_cell = std::max(1, samples / (2 * std::max(1, cell_total)));
  for (const auto& cone : complex.cones) {
    for (int s = 0; s < per_cell; ++s) {
      std::fill(x.begin(), x.end(), 0.0);
      for (const auto& g : cone.generators) {
        const double lam = unit(rng);
        for (int j = 0; j < t.d; ++j) x[j] += lam * g[j];
      }
      ++rep.sample_count;
      if (!trop_member(t, x, std::max(tol, 1e-9))) {
        rep.cone_samples_are_members = false;
        ++rep.mismatch_count;
      }
    }
  }
  for (const auto& cell : complex.cells) {
    for (int s = 0; s < per_cell; ++s) {
      const double lam = cell.is_ray ? unit(rng) : unit(rng) / 2.0;
      for (int j = 0; j < t.d; ++j) x[j] = cell.base[j] + lam * cell.dir[j];
      ++rep.sample_count;
      if (!trop_member(t, x, std::max(tol, 1e-9))) {
        rep.cone_samples_are_members = false;
        ++rep.mismatch_count;
      }
    }
  }

  // (b) random box points: membership and near-complex must agree
  for (int s = 0; s < samples; ++s) {
    for (int j = 0; j < t.d; ++j) x[j] = box(rng);
    const bool member = trop_member(t, x, tol);
    const bool near = complex.distance(x) < std::sqrt(static_cast<double>(t.d)) * tol;
    ++rep.sample_count;
    if (member != near) {
      rep.member_samples_near_complex = false;
      ++rep.mismatch_count;
    }
  }

  if (t.d >= 2 && is_symmetric_cross_family(t))
    rep.matches_direction_graph = same_ray_set(complex, direction_graph(t.d));
  else if (t.d == 1)
    rep.matches_direction_graph =
        complex.cells.size() >= 1;  // dual of a segment: single tie point

  return rep;
}

}  // namespace rz
