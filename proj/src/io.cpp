#include "rz/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "rz/errors.hpp"

namespace rz {

namespace {

using nlohmann::json;

std::string shift_name(Shift s) { return s == Shift::M ? "M" : "F"; }

Shift shift_from(const std::string& s) {
  if (s == "M") return Shift::M;
  if (s == "F") return Shift::F;
  throw config_error("unknown shift type: " + s);
}

std::string class_name(WalkClass c) {
  switch (c) {
    case WalkClass::RW: return "RW";
    case WalkClass::CRW: return "CRW";
    case WalkClass::QW: return "QW";
    default: return "General";
  }
}

WalkClass class_from(const std::string& s) {
  if (s == "RW") return WalkClass::RW;
  if (s == "CRW") return WalkClass::CRW;
  if (s == "QW") return WalkClass::QW;
  if (s == "General") return WalkClass::General;
  throw config_error("unknown walk class: " + s);
}

json point_to_json(const std::vector<double>& v) {
  json a = json::array();
  for (double x : v) a.push_back(x);
  return a;
}

void svg_header(std::ostringstream& out, double extent) {
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << -extent << " "
      << -extent << " " << 2 * extent << " " << 2 * extent
      << "\" width=\"480\" height=\"480\">\n";
  out << "<g transform=\"scale(1,-1)\">\n";  // mathematical y axis
  out << "<line x1=\"" << -extent << "\" y1=\"0\" x2=\"" << extent
      << "\" y2=\"0\" stroke=\"#cccccc\" stroke-width=\"0.02\"/>\n";
  out << "<line x1=\"0\" y1=\"" << -extent << "\" x2=\"0\" y2=\"" << extent
      << "\" stroke=\"#cccccc\" stroke-width=\"0.02\"/>\n";
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

CoinMatrix coin_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const std::exception& e) {
    throw config_error(std::string("coin JSON parse failure: ") + e.what());
  }
  if (!j.contains("d") || !j.contains("entries"))
    throw config_error("coin JSON requires 'd' and 'entries'");
  const int d = j.at("d").get<int>();
  if (d < 1) throw config_error("coin JSON: d must be positive");
  const int n = 2 * d;
  const auto& rows = j.at("entries");
  if (!rows.is_array() || static_cast<int>(rows.size()) != n)
    throw config_error("coin JSON: entries must be a 2d x 2d array");
  Matrix m(n, n);
  for (int r = 0; r < n; ++r) {
    const auto& row = rows.at(r);
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw config_error("coin JSON: entries must be a 2d x 2d array");
    for (int c = 0; c < n; ++c) {
      const auto& cell = row.at(c);
      m(r, c) = Complex(cell.at("re").get<double>(), cell.at("im").get<double>());
    }
  }
  const Shift shift = shift_from(j.value("shift", std::string("M")));
  const WalkClass cls = class_from(j.value("class", std::string("General")));
  return CoinMatrix(d, std::move(m), shift, cls);
}

std::string coin_to_json(const CoinMatrix& coin) {
  json j;
  j["d"] = coin.d();
  j["shift"] = shift_name(coin.shift());
  j["class"] = class_name(coin.walk_class());
  json rows = json::array();
  for (int r = 0; r < coin.size(); ++r) {
    json row = json::array();
    for (int c = 0; c < coin.size(); ++c)
      row.push_back({{"re", coin.entries()(r, c).real()},
                     {"im", coin.entries()(r, c).imag()}});
    rows.push_back(std::move(row));
  }
  j["entries"] = std::move(rows);
  return j.dump();
}

CoinMatrix load_coin(const std::string& path) { return coin_from_json(read_file(path)); }

LaurentPolynomial laurent_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const std::exception& e) {
    throw config_error(std::string("polynomial JSON parse failure: ") + e.what());
  }
  if (!j.contains("k") || !j.contains("terms"))
    throw config_error("polynomial JSON requires 'k' and 'terms'");
  const int k = j.at("k").get<int>();
  if (k < 1) throw config_error("polynomial JSON: k must be positive");
  LaurentPolynomial p(k);
  for (const auto& term : j.at("terms")) {
    const auto& exp_json = term.at("exp");
    if (static_cast<int>(exp_json.size()) != k)
      throw config_error("polynomial JSON: exponent vector length mismatch");
    std::vector<int> exp;
    for (const auto& e : exp_json) exp.push_back(e.get<int>());
    const Complex value(term.value("re", 0.0), term.value("im", 0.0));
    Rational val{0, 1};
    if (term.contains("val")) val = Rational::parse(term.at("val").get<std::string>());
    p.set(std::move(exp), value, val);
  }
  return p;
}

std::string laurent_to_json(const LaurentPolynomial& p) {
  json j;
  j["k"] = p.dim();
  json terms = json::array();
  for (const auto& [exp, coeff] : p.terms()) {
    json t;
    t["exp"] = exp;
    t["re"] = coeff.value.real();
    t["im"] = coeff.value.imag();
    if (!(coeff.valuation == Rational{0, 1})) t["val"] = coeff.valuation.str();
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j.dump();
}

LaurentPolynomial load_laurent(const std::string& path) {
  return laurent_from_json(read_file(path));
}

std::string polytope_to_json(const LatticePolytope& poly) {
  json j;
  j["d"] = poly.d;
  j["vertices"] = poly.vertices;
  j["lattice_points"] = poly.lattice_points;
  j["rays"] = json::array();
  j["cones"] = json::array();
  return j.dump();
}

std::string complex_to_json(const PolyhedralComplex& complex) {
  json j;
  j["d"] = complex.d;
  json vertices = json::array();
  json rays = json::array();
  json segments = json::array();
  for (const auto& cell : complex.cells) {
    double dir2 = 0.0;
    for (double v : cell.dir) dir2 += v * v;
    if (cell.is_ray)
      rays.push_back({{"base", point_to_json(cell.base)}, {"dir", point_to_json(cell.dir)}});
    else if (dir2 == 0.0)
      vertices.push_back(point_to_json(cell.base));
    else
      segments.push_back(
          {{"base", point_to_json(cell.base)}, {"dir", point_to_json(cell.dir)}});
  }
  json cones = json::array();
  for (const auto& cone : complex.cones) {
    json c;
    c["S"] = cone.S;
    c["dim"] = cone.dim;
    json gens = json::array();
    for (const auto& g : cone.generators) gens.push_back(point_to_json(g));
    c["generators"] = std::move(gens);
    cones.push_back(std::move(c));
  }
  j["vertices"] = std::move(vertices);
  j["rays"] = std::move(rays);
  j["segments"] = std::move(segments);
  j["cones"] = std::move(cones);
  return j.dump();
}

std::string raster_to_json(const AmoebaRaster& raster) {
  json j;
  j["box"] = raster.box;
  j["resolution"] = raster.resolution;
  json rows = json::array();
  for (int row = 0; row < raster.resolution; ++row) {
    std::string bits(raster.resolution, '0');
    for (int col = 0; col < raster.resolution; ++col)
      if (raster.member(row, col)) bits[col] = '1';
    rows.push_back(bits);
  }
  j["membership_rows"] = std::move(rows);
  json comps = json::array();
  for (const auto& comp : raster.components) {
    json c;
    c["label"] = comp.label;
    c["bounded"] = comp.bounded;
    c["cell_count"] = comp.cell_count;
    c["representative"] = point_to_json(comp.representative);
    if (!comp.ronkin_gradient.empty())
      c["ronkin_gradient"] = point_to_json(comp.ronkin_gradient);
    comps.push_back(std::move(c));
  }
  j["components"] = std::move(comps);
  if (!raster.warning.empty()) j["warning"] = raster.warning;
  return j.dump();
}

std::string raster_to_pgm(const AmoebaRaster& raster) {
  std::ostringstream out;
  out << "P2\n" << raster.resolution << " " << raster.resolution << "\n255\n";
  for (int row = raster.resolution - 1; row >= 0; --row) {
    for (int col = 0; col < raster.resolution; ++col) {
      if (col) out << ' ';
      out << (raster.member(row, col) ? 0 : 255);
    }
    out << '\n';
  }
  return out.str();
}

std::string state_to_csv(const WalkState& state) {
  std::ostringstream out;
  out << "site,component_index,re,im\n";
  const long long count = state.site_count();
  for (long long idx = 0; idx < count; ++idx) {
    const auto coords = state.site_coords(idx);
    std::string site;
    for (std::size_t j = 0; j < coords.size(); ++j) {
      if (j) site += ' ';
      site += std::to_string(coords[j]);
    }
    const auto& v = state.values[static_cast<std::size_t>(idx)];
    for (Eigen::Index c = 0; c < v.size(); ++c)
      out << site << ',' << c << ',' << format_double(v[c].real()) << ','
          << format_double(v[c].imag()) << '\n';
  }
  return out.str();
}

std::string measure_to_csv(const WalkState& state, int p) {
  std::ostringstream out;
  out << "site,value\n";
  const auto mu = measure(state, p);
  const long long count = state.site_count();
  for (long long idx = 0; idx < count; ++idx) {
    const auto coords = state.site_coords(idx);
    std::string site;
    for (std::size_t j = 0; j < coords.size(); ++j) {
      if (j) site += ' ';
      site += std::to_string(coords[j]);
    }
    out << site << ',' << format_double(mu[static_cast<std::size_t>(idx)]) << '\n';
  }
  return out.str();
}

std::string polytope_to_svg(const LatticePolytope& poly) {
  if (poly.d != 2) throw config_error("SVG output supports d = 2 only");
  std::ostringstream out;
  svg_header(out, 2.0);
  if (poly.vertices.size() >= 2) {
    // order the vertices counterclockwise around the centroid
    double cx = 0, cy = 0;
    for (const auto& v : poly.vertices) {
      cx += v[0];
      cy += v[1];
    }
    cx /= static_cast<double>(poly.vertices.size());
    cy /= static_cast<double>(poly.vertices.size());
    auto ordered = poly.vertices;
    std::sort(ordered.begin(), ordered.end(),
              [&](const std::vector<int>& a, const std::vector<int>& b) {
                return std::atan2(a[1] - cy, a[0] - cx) <
                       std::atan2(b[1] - cy, b[0] - cx);
              });
    out << "<polygon points=\"";
    for (const auto& v : ordered) out << v[0] << "," << v[1] << " ";
    out << "\" fill=\"#dce8f8\" stroke=\"#234\" stroke-width=\"0.04\"/>\n";
  }
  for (const auto& p : poly.lattice_points)
    out << "<circle cx=\"" << p[0] << "\" cy=\"" << p[1]
        << "\" r=\"0.07\" fill=\"#234\"/>\n";
  out << "</g>\n</svg>\n";
  return out.str();
}

std::string complex_to_svg(const PolyhedralComplex& complex) {
  if (complex.d != 2) throw config_error("SVG output supports d = 2 only");
  constexpr double kExtent = 3.0;
  std::ostringstream out;
  svg_header(out, kExtent + 0.2);
  auto line = [&](double x1, double y1, double x2, double y2) {
    out << "<line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2 << "\" y2=\""
        << y2 << "\" stroke=\"#b33\" stroke-width=\"0.05\"/>\n";
  };
  for (const auto& cone : complex.cones)
    for (const auto& g : cone.generators) {
      double n = std::sqrt(g[0] * g[0] + g[1] * g[1]);
      if (n == 0) continue;
      line(0, 0, kExtent * g[0] / n, kExtent * g[1] / n);
    }
  for (const auto& cell : complex.cells) {
    double dir2 = cell.dir[0] * cell.dir[0] + cell.dir[1] * cell.dir[1];
    if (cell.is_ray) {
      const double n = std::sqrt(dir2);
      line(cell.base[0], cell.base[1], cell.base[0] + kExtent * cell.dir[0] / n,
           cell.base[1] + kExtent * cell.dir[1] / n);
    } else if (dir2 == 0.0) {
      out << "<circle cx=\"" << cell.base[0] << "\" cy=\"" << cell.base[1]
          << "\" r=\"0.08\" fill=\"#b33\"/>\n";
    } else {
      line(cell.base[0], cell.base[1], cell.base[0] + cell.dir[0],
           cell.base[1] + cell.dir[1]);
    }
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

std::string raster_to_svg(const AmoebaRaster& raster) {
  std::ostringstream out;
  const int n = raster.resolution;
  const double w1 = (raster.box[1] - raster.box[0]) / n;
  const double w2 = (raster.box[3] - raster.box[2]) / n;
  const double extent =
      std::max({std::abs(raster.box[0]), std::abs(raster.box[1]),
                std::abs(raster.box[2]), std::abs(raster.box[3])});
  svg_header(out, extent + 0.2);
  // run-length encode member cells per row
  for (int row = 0; row < n; ++row) {
    int col = 0;
    while (col < n) {
      if (!raster.member(row, col)) {
        ++col;
        continue;
      }
      int end = col;
      while (end < n && raster.member(row, end)) ++end;
      out << "<rect x=\"" << raster.box[0] + col * w1 << "\" y=\""
          << raster.box[2] + row * w2 << "\" width=\"" << (end - col) * w1
          << "\" height=\"" << w2 << "\" fill=\"#3a6\"/>\n";
      col = end;
    }
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw config_error("cannot open output file: " + path);
  out << content;
  if (!out) throw config_error("write failure: " + path);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw config_error("cannot open input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace rz
