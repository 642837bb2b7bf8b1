#pragma once

// Ground-truth engine: exact polar curves a*f_x + b*f_y, deterministic
// generic-direction sampling with a modal-polygon vote, Oka typing of
// non-degenerate samples, a numeric Newton-Puiseux probe for degenerate
// instances, and intersection numbers via the x-order of the y-resultant.

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "genpolar/classifier.hpp"
#include "genpolar/newton.hpp"
#include "genpolar/sparsepoly.hpp"

namespace genpolar {

// The explicit normal-form polynomial of a branch input.
SparsePoly build_poly(const BranchInput& b);

// a*df/dx + b*df/dy, term by term over Q.
SparsePoly polar(const SparsePoly& f, long a, long b);

struct TrialRecord {
    long a = 0, b = 0;
    bool modal = false;
    bool nondegenerate = false;
};

struct PolarSample {
    long a = 0, b = 0;
    SparsePoly polar;
    NewtonPolygon polygon;
    bool nondegenerate = false;
    std::optional<CompactEdge> degenerate_edge;
    std::vector<TrialRecord> trials;
};

// Draws coprime directions with 0 < |a|,|b| <= 97 from a seeded stream,
// keeps the sample whose polygon is the modal polygon across all trials,
// preferring a non-degenerate one.  Deterministic in (f, trials, seed).
PolarSample sample_generic(const SparsePoly& f, int trials, std::uint64_t seed);

struct OracleVerdict {
    std::optional<EquisingularityType> type;     // absent when degenerate
    std::optional<CompactEdge> offending_edge;   // first degenerate edge
    bool degenerate() const { return !type.has_value(); }
};

OracleVerdict oracle_type(const PolarSample& s);

struct PuiseuxBranchApprox {
    long denominator = 1;  // ramification index
    std::vector<std::pair<Rat, std::complex<double>>> terms;  // ascending exponents
    double residual_norm = 0.0;
};

// Numeric Newton-Puiseux expansion of the branches through the origin,
// one approximation per branch, to the given exponent budget (exponents
// measured in x).  Coefficients below tol are treated as zero when the
// expansions are post-processed.
std::vector<PuiseuxBranchApprox> puiseux_probe(const SparsePoly& f, long depth,
                                               double tol = 1e-9);

// Characteristic exponents read off an expansion, thresholding at tol.
CharSequence char_exponents_from_approx(const PuiseuxBranchApprox& br, double tol = 1e-9);

// Order in x of Res_y(f, g).  Throws std::domain_error when the resultant
// vanishes identically (common factor).
Int intersection_order(const SparsePoly& f, const SparsePoly& g);

}  // namespace genpolar
