#pragma once

// Decision procedures for the topological type of the generic polar of a
// genus-one branch in Peraire normal form: the predicted Newton polygon,
// the generic-coefficient polygon, Oka branch data, and the full case
// split over (n, m, lambda, supp).

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "genpolar/newton.hpp"
#include "genpolar/semigroup.hpp"
#include "genpolar/zariski.hpp"

namespace genpolar {

// y^n - x^m + x^p y^q + sum a_ij x^i y^j with support in I_lambda;
// lambda = infinity encodes the monomial curve y^n - x^m.
struct BranchInput {
    long n = 0;
    long m = 0;
    std::optional<long> lambda;
    std::map<LatticePoint, Rat> coeffs;

    // Validates; zero coefficient values are dropped.
    static BranchInput make(long n, long m, std::optional<long> lambda,
                            std::map<LatticePoint, Rat> coeffs = {});
};

struct BranchClass {
    Int count;                 // equisingular branches in the class
    NumericalSemigroup gens;   // <1> for smooth branches
    bool operator==(const BranchClass&) const = default;
};

// Branch classes plus the symmetric intersection table: pairwise[i][i] is
// the within-class value (0 when the class is a singleton), pairwise[i][j]
// the cross value.  Canonical order: classes sorted by (gens, count,
// within value).
struct EquisingularityType {
    std::vector<BranchClass> classes;
    std::vector<std::vector<Int>> pairwise;

    void canonicalize();
    Int total_branches() const;
    std::string str() const;
    bool operator==(const EquisingularityType&) const = default;
};

enum class CaseTag {
    INFINITE_LAMBDA,
    Q_EQUALS_ONE,
    LAMBDA_LARGE,
    SPECIAL_CURVE_TWO_EDGES,
    SPECIAL_CURVE_ONE_EDGE,
    GENERAL_T_NONEMPTY
};
const char* to_string(CaseTag t);

struct ClassificationReport {
    CaseTag case_tag = CaseTag::GENERAL_T_NONEMPTY;
    NewtonPolygon predicted_polygon;
    // Absent: the polygon alone does not pin the type down (see notes).
    std::optional<EquisingularityType> type;
    std::string notes;
};

// Polygon of E_lambda together with the shifted points (i, j-1), (i-1, j)
// for (i, j) in T_lambda meeting the support.  For lambda = infinity this
// is the polygon of {(0, n-1), (m-1, 0)}.
NewtonPolygon predicted_polygon(const BranchInput& b);

// Generic-coefficient polygon: E_lambda joined with the staircase points
// S picked by the ceiling condition (empty when q = 1).
NewtonPolygon generic_polygon(long n, long m, long lambda);

// Oka branch data of a non-degenerate curve with the given polygon:
// per compact edge, gcd(len1, len2) branches of multiplicity len2/d with
// semigroup <len2/d, len1/d>, within-edge intersection len1*len2/d^2 and
// cross intersections min(len1*len2', len2*len1')/(d*d').
EquisingularityType oka_type(const NewtonPolygon& polygon);

ClassificationReport classify(const BranchInput& b);

}  // namespace genpolar
