#include "genpolar/lattice.hpp"

namespace genpolar {

Rat parse_rational(const std::string& text) {
    auto bad = [&] { return std::invalid_argument("not an exact rational: '" + text + "'"); };
    if (text.empty()) throw bad();
    const auto slash = text.find('/');
    const std::string num_s = text.substr(0, slash);
    const std::string den_s = slash == std::string::npos ? "1" : text.substr(slash + 1);
    Int num, den;
    if (mpz_set_str(num.get_mpz_t(), num_s.c_str(), 10) != 0) throw bad();
    if (mpz_set_str(den.get_mpz_t(), den_s.c_str(), 10) != 0) throw bad();
    if (den == 0) throw bad();
    return make_rat(num, den);
}

Line Line::from_coeffs(Int a, Int b, Int c) {
    if (a == 0 && b == 0) throw std::invalid_argument("degenerate line");
    Int g = int_gcd(int_gcd(a, b), c);
    if (g > 1) {
        a /= g;
        b /= g;
        c /= g;
    }
    if (a < 0 || (a == 0 && b < 0)) {
        a = -a;
        b = -b;
        c = -c;
    }
    return Line{a, b, c};
}

Line Line::through(const RatPoint& p, const RatPoint& q) {
    if (p.x == q.x && p.y == q.y) throw std::invalid_argument("line through equal points");
    // Normal (a, b) = (dy, -dx), cleared of denominators.
    const Rat a_r = q.y - p.y;
    const Rat b_r = p.x - q.x;
    const Rat c_r = a_r * p.x + b_r * p.y;
    Int lcm_den;
    mpz_lcm(lcm_den.get_mpz_t(), a_r.get_den().get_mpz_t(), b_r.get_den().get_mpz_t());
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c_r.get_den().get_mpz_t());
    const Rat scale(lcm_den);
    return from_coeffs(Rat(a_r * scale).get_num(), Rat(b_r * scale).get_num(),
                       Rat(c_r * scale).get_num());
}

Line Line::with_slope_nm(long n, long m, const RatPoint& h) {
    if (n <= 0 || m <= 0) throw std::invalid_argument("slope -n/m needs positive n, m");
    const Rat c_r = Rat(n) * h.x + Rat(m) * h.y;
    const Int den = c_r.get_den();
    return from_coeffs(Int(n) * den, Int(m) * den, c_r.get_num());
}

Side point_vs_line(const RatPoint& p, const Line& l) {
    const Rat v = Rat(l.a) * p.x + Rat(l.b) * p.y - Rat(l.c);
    const int s = sgn(v);
    if (s > 0) return Side::ABOVE;
    if (s < 0) return Side::BELOW;
    return Side::ON;
}

}  // namespace genpolar
