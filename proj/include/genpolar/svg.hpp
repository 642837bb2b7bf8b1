#pragma once

// Standalone SVG 1.1 figures: the triangle T with its invariants, the
// T_lambda region with the guide lines, and predicted polar polygons.
// Output is deterministic byte-for-byte: every coordinate is an integer
// computed by exact rounding of rationals.

#include <string>

#include "genpolar/classifier.hpp"

namespace genpolar {

std::string svg_triangle(long n, long m);
std::string svg_region(long n, long m, long lambda);
std::string svg_polygon(const BranchInput& b);

}  // namespace genpolar
