#pragma once

#include <string>

#include "rz/amoeba.hpp"
#include "rz/laurent.hpp"
#include "rz/polytope.hpp"
#include "rz/simulate.hpp"
#include "rz/tropical.hpp"
#include "rz/walk_model.hpp"

namespace rz {

// 17-significant-digit float formatting shared by every text artifact.
std::string format_double(double v);

// coin schema: { "d", "shift": "M"|"F", "class", "entries": [[{"re","im"},..],..] }
CoinMatrix coin_from_json(const std::string& text);
std::string coin_to_json(const CoinMatrix& coin);
CoinMatrix load_coin(const std::string& path);

// polynomial schema: { "k", "terms": [ { "exp": [..], "re", "im", "val"? } ] }
LaurentPolynomial laurent_from_json(const std::string& text);
std::string laurent_to_json(const LaurentPolynomial& p);
LaurentPolynomial load_laurent(const std::string& path);

std::string polytope_to_json(const LatticePolytope& poly);
std::string complex_to_json(const PolyhedralComplex& complex);
std::string raster_to_json(const AmoebaRaster& raster);
std::string raster_to_pgm(const AmoebaRaster& raster);

std::string state_to_csv(const WalkState& state);
std::string measure_to_csv(const WalkState& state, int p);

// fixed-viewport SVG renderings of the d=2 objects
std::string polytope_to_svg(const LatticePolytope& poly);
std::string complex_to_svg(const PolyhedralComplex& complex);
std::string raster_to_svg(const AmoebaRaster& raster);

void write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

}  // namespace rz
