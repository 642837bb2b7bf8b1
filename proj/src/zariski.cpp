#include "genpolar/zariski.hpp"

#include <algorithm>

#include "genpolar/semigroup.hpp"

namespace genpolar {

void validate_pair(long n, long m) {
    if (n <= 2 || m <= n) throw std::invalid_argument("need 2 < n < m");
    if (ll_gcd(n, m) != 1) throw std::invalid_argument("n, m must be coprime");
}

void validate_class(long n, long m) {
    validate_pair(n, m);
    if (n == 3 && m < 7)
        throw std::invalid_argument("K(3,m) with m < 7 has no finite Zariski invariant");
}

std::vector<long> zariski_set(long n, long m) {
    validate_class(n, m);
    std::vector<long> zs;
    for (long lam = m + 1; lam <= n * m; ++lam)
        if (!semigroup_contains(n, m, Int(lam + n))) zs.push_back(lam);
    if (!zs.empty()) {
        // The bijection onto the interior of T is the completeness witness.
        const LatticePoint top = phi(n, m, zs.back());
        if (!(top.i < m - 1 && top.j < n - 1 && n * top.i + m * top.j > n * m))
            throw std::logic_error("zariski_set: maximum does not map into the triangle");
    }
    return zs;
}

namespace {

bool in_zariski_set(long n, long m, long lambda) {
    return lambda > m && !semigroup_contains(n, m, Int(lambda + n));
}

}  // namespace

std::pair<long, long> decompose(long n, long m, long lambda) {
    validate_class(n, m);
    if (!in_zariski_set(n, m, lambda))
        throw std::domain_error("lambda is not a Zariski invariant of K(n,m)");
    for (long alpha = 2; alpha <= n - 1; ++alpha) {
        const long num = alpha * m - lambda;
        if (num <= 0 || num % n != 0) continue;
        const long beta = num / n;
        if (beta >= 2 && n * beta < (alpha - 1) * m) return {alpha, beta};
    }
    throw std::logic_error("decompose: no representation found for a member of Z(n,m)");
}

LatticePoint phi(long n, long m, long lambda) {
    const auto [alpha, beta] = decompose(n, m, lambda);
    return LatticePoint{m - beta, alpha - 1};
}

long phi_inverse(long n, long m, const LatticePoint& point) {
    validate_class(n, m);
    if (!(point.i >= 0 && point.j >= 0 && point.i < m - 1 && point.j < n - 1 &&
          n * point.i + m * point.j > n * m))
        throw std::domain_error("point is not interior to the triangle T");
    return m * (point.j + 1) - n * (m - point.i);
}

std::vector<LatticePoint> interior_T(long n, long m) {
    validate_pair(n, m);
    std::vector<LatticePoint> pts;
    for (long i = 0; i < m - 1; ++i)
        for (long j = 0; j < n - 1; ++j)
            if (n * i + m * j > n * m) pts.push_back(LatticePoint{i, j});
    std::sort(pts.begin(), pts.end());
    return pts;
}

bool precedes(long n, long m, const LatticePoint& a, const LatticePoint& b) {
    return a.i * n + a.j * m < b.i * n + b.j * m;
}

std::vector<LatticePoint> i_lambda(long n, long m, long lambda) {
    const LatticePoint pq = phi(n, m, lambda);
    const long w = pq.i * n + pq.j * m;
    std::vector<LatticePoint> pts;
    for (long i = 0; i <= m - 2; ++i)
        for (long j = 0; j <= n - 2; ++j)
            if (i * n + j * m > w) pts.push_back(LatticePoint{i, j});
    std::sort(pts.begin(), pts.end());
    return pts;
}

std::vector<LatticePoint> t_lambda(long n, long m, long lambda) {
    const LatticePoint pq = phi(n, m, lambda);
    const long p = pq.i, q = pq.j;
    std::vector<LatticePoint> pts;
    for (long i = p + 1; i < m - 1; ++i) {
        for (long j = 1; j < q; ++j) {
            // above l_{sigma,A}:  (q - j)/(i - p) < n/m
            if (m * (q - j) >= n * (i - p)) continue;
            // below or on l_{A,Q}:  (q - 1)/(m - 1 - p) <= (q - j)/(i - p)
            if ((q - 1) * (i - p) > (q - j) * (m - 1 - p)) continue;
            pts.push_back(LatticePoint{i, j});
        }
    }
    std::sort(pts.begin(), pts.end());
    return pts;
}

TLambdaReason t_lambda_empty_reason(long n, long m, long lambda) {
    const LatticePoint pq = phi(n, m, lambda);
    const bool large = lambda > 2 * m - n;
    const bool q_one = pq.j == 1;
    if (large || q_one) {
        if (!t_lambda(n, m, lambda).empty())
            throw std::logic_error("T_lambda must be empty when lambda > 2m-n or q = 1");
        return large ? TLambdaReason::LAMBDA_LARGE : TLambdaReason::Q_IS_ONE;
    }
    return t_lambda(n, m, lambda).empty() ? TLambdaReason::EMPTY_OTHER
                                          : TLambdaReason::NOT_EMPTY;
}

const char* to_string(TLambdaReason r) {
    switch (r) {
        case TLambdaReason::LAMBDA_LARGE: return "LAMBDA_LARGE";
        case TLambdaReason::Q_IS_ONE: return "Q_IS_ONE";
        case TLambdaReason::NOT_EMPTY: return "NOT_EMPTY";
        case TLambdaReason::EMPTY_OTHER: return "EMPTY_OTHER";
    }
    return "?";
}

std::array<LatticePoint, 3> e_lambda(long n, long m, long lambda) {
    const LatticePoint pq = phi(n, m, lambda);
    return {LatticePoint{0, n - 1}, LatticePoint{m - 1, 0}, LatticePoint{pq.i, pq.j - 1}};
}

RegionSets region_sets(long n, long m, long lambda) {
    RegionSets r;
    r.interior = interior_T(n, m);
    r.i_points = i_lambda(n, m, lambda);
    r.t_points = t_lambda(n, m, lambda);
    r.e_points = e_lambda(n, m, lambda);
    for (const LatticePoint& t : r.t_points)
        if (!std::binary_search(r.i_points.begin(), r.i_points.end(), t))
            throw std::logic_error("T_lambda escaped I_lambda");
    for (const LatticePoint& p : r.i_points)
        if (!std::binary_search(r.interior.begin(), r.interior.end(), p))
            throw std::logic_error("I_lambda escaped the interior of T");
    if (r.e_points[0] == r.e_points[1] || r.e_points[0] == r.e_points[2] ||
        r.e_points[1] == r.e_points[2])
        throw std::logic_error("E_lambda collapsed");
    return r;
}

bool in_hat_lambda(long n, long m, const LatticePoint& point) {
    validate_pair(n, m);
    // Vertices scaled by n in x:  (0, n), (n(m-1), 1), (m(n-1), 1).
    const long vx[3] = {0, n * (m - 1), m * (n - 1)};
    const long vy[3] = {n, 1, 1};
    const long px = n * point.i, py = point.j;
    for (int k = 0; k < 3; ++k) {
        const long ax = vx[k], ay = vy[k];
        const long bx = vx[(k + 1) % 3], by = vy[(k + 1) % 3];
        const long cx = vx[(k + 2) % 3], cy = vy[(k + 2) % 3];
        const long s_pt = (bx - ax) * (py - ay) - (by - ay) * (px - ax);
        const long s_opp = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax);
        if (s_pt * s_opp < 0) return false;
    }
    return true;
}

ZariskiDatum make_datum(long n, long m, std::optional<long> lambda) {
    ZariskiDatum d;
    d.n = n;
    d.m = m;
    d.lambda = lambda;
    if (!lambda) {
        validate_pair(n, m);
        return d;
    }
    const auto [alpha, beta] = decompose(n, m, *lambda);
    d.alpha = alpha;
    d.beta = beta;
    d.p = m - beta;
    d.q = alpha - 1;
    if (n * d.p + d.q * m != (n - 1) * m + *lambda)
        throw std::logic_error("np + qm = (n-1)m + lambda violated");
    return d;
}

}  // namespace genpolar
