#pragma once

// Zariski invariants of K(n,m): the set Z(n,m), the bijection Phi onto the
// interior lattice points of the triangle T, the (n,m)-weighted ordering,
// and the regions I_lambda, T_lambda, E_lambda driving the polar polygon.

#include <array>
#include <optional>
#include <vector>

#include "genpolar/lattice.hpp"

namespace genpolar {

// (n, m, lambda) with the lattice data of a finite invariant:
// lambda = alpha*m - beta*n, Phi(lambda) = (p, q) = (m - beta, alpha - 1).
struct ZariskiDatum {
    long n = 0;
    long m = 0;
    std::optional<long> lambda;  // nullopt encodes infinity
    long alpha = 0, beta = 0;    // meaningful when finite
    long p = 0, q = 0;

    bool finite() const { return lambda.has_value(); }
};

// gcd(n,m) = 1 and 2 < n < m; accepts (3,4), (3,5).
void validate_pair(long n, long m);
// As above plus n = 3 requires m >= 7 (classes whose only invariant is
// infinity are rejected for finite-lambda enumeration).
void validate_class(long n, long m);

// All finite Zariski invariants, ascending.
std::vector<long> zariski_set(long n, long m);

// Unique (alpha, beta) with lambda = alpha*m - beta*n,
// 2 <= alpha <= n-1, 2 <= beta < (alpha-1)m/n.
// Throws std::domain_error when lambda is not in Z(n,m).
std::pair<long, long> decompose(long n, long m, long lambda);

LatticePoint phi(long n, long m, long lambda);
long phi_inverse(long n, long m, const LatticePoint& point);

// Lattice points strictly inside the triangle bounded by y = n-1,
// x = m-1 and n*x + m*y = n*m.
std::vector<LatticePoint> interior_T(long n, long m);

// (n,m)-weighted strict ordering.
bool precedes(long n, long m, const LatticePoint& a, const LatticePoint& b);

std::vector<LatticePoint> i_lambda(long n, long m, long lambda);
std::vector<LatticePoint> t_lambda(long n, long m, long lambda);

enum class TLambdaReason { LAMBDA_LARGE, Q_IS_ONE, NOT_EMPTY, EMPTY_OTHER };
TLambdaReason t_lambda_empty_reason(long n, long m, long lambda);
const char* to_string(TLambdaReason r);

// {(0, n-1), (m-1, 0), (p, q-1)}.
std::array<LatticePoint, 3> e_lambda(long n, long m, long lambda);

// The lattice regions of one invariant, with the containment chain
// T_lambda within I_lambda within the interior of T checked on build.
struct RegionSets {
    std::vector<LatticePoint> interior;
    std::vector<LatticePoint> i_points;
    std::vector<LatticePoint> t_points;
    std::array<LatticePoint, 3> e_points;
};
RegionSets region_sets(long n, long m, long lambda);

// Closed triangle with vertices (0, n), (m-1, 1), (m - m/n, 1).
bool in_hat_lambda(long n, long m, const LatticePoint& point);

ZariskiDatum make_datum(long n, long m, std::optional<long> lambda);

}  // namespace genpolar
