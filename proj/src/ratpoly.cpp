#include "genpolar/ratpoly.hpp"

#include <sstream>

namespace genpolar {

void RatPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

RatPoly RatPoly::monomial(std::size_t k, const Rat& a) {
    if (a == 0) return RatPoly();
    std::vector<Rat> c(k + 1, Rat(0));
    c[k] = a;
    return RatPoly(std::move(c));
}

Rat RatPoly::lead() const {
    if (is_zero()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
}

std::size_t RatPoly::valuation() const {
    for (std::size_t k = 0; k < c_.size(); ++k)
        if (c_[k] != 0) return k;
    return 0;
}

RatPoly RatPoly::strip_valuation() const {
    if (is_zero()) return *this;
    const std::size_t v = valuation();
    return RatPoly(std::vector<Rat>(c_.begin() + static_cast<long>(v), c_.end()));
}

RatPoly RatPoly::derivative() const {
    if (c_.size() <= 1) return RatPoly();
    std::vector<Rat> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * Rat(static_cast<long>(k));
    return RatPoly(std::move(d));
}

RatPoly RatPoly::monic() const {
    if (is_zero()) return *this;
    return *this * Rat(Rat(1) / lead());
}

Rat RatPoly::eval(const Rat& x) const {
    Rat r(0);
    for (std::size_t k = c_.size(); k-- > 0;) r = r * x + c_[k];
    return r;
}

RatPoly RatPoly::operator+(const RatPoly& o) const {
    std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
    for (std::size_t k = 0; k < c_.size(); ++k) r[k] += c_[k];
    for (std::size_t k = 0; k < o.c_.size(); ++k) r[k] += o.c_[k];
    return RatPoly(std::move(r));
}

RatPoly RatPoly::operator-(const RatPoly& o) const {
    std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
    for (std::size_t k = 0; k < c_.size(); ++k) r[k] += c_[k];
    for (std::size_t k = 0; k < o.c_.size(); ++k) r[k] -= o.c_[k];
    return RatPoly(std::move(r));
}

RatPoly RatPoly::operator*(const RatPoly& o) const {
    if (is_zero() || o.is_zero()) return RatPoly();
    std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
    for (std::size_t a = 0; a < c_.size(); ++a)
        for (std::size_t b = 0; b < o.c_.size(); ++b) r[a + b] += c_[a] * o.c_[b];
    return RatPoly(std::move(r));
}

RatPoly RatPoly::operator*(const Rat& s) const {
    if (s == 0) return RatPoly();
    std::vector<Rat> r(c_);
    for (Rat& x : r) x *= s;
    return RatPoly(std::move(r));
}

std::pair<RatPoly, RatPoly> RatPoly::divmod(const RatPoly& d) const {
    if (d.is_zero()) throw std::domain_error("polynomial division by zero");
    if (degree() < d.degree()) return {RatPoly(), *this};
    std::vector<Rat> rem(c_);
    std::vector<Rat> quo(static_cast<std::size_t>(degree() - d.degree()) + 1, Rat(0));
    const Rat inv_lead = Rat(1) / d.lead();
    for (std::size_t k = rem.size(); k-- > 0;) {
        if (k + 1 < d.c_.size()) break;
        const Rat q = rem[k] * inv_lead;
        if (q == 0) continue;
        const std::size_t shift = k + 1 - d.c_.size();
        quo[shift] = q;
        for (std::size_t l = 0; l < d.c_.size(); ++l) rem[shift + l] -= q * d.c_[l];
    }
    return {RatPoly(std::move(quo)), RatPoly(std::move(rem))};
}

std::string RatPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = c_.size(); k-- > 0;) {
        if (c_[k] == 0) continue;
        if (!first) os << (c_[k] > 0 ? " + " : " - ");
        else if (c_[k] < 0) os << "-";
        first = false;
        const Rat a = abs(Rat(c_[k]));
        if (a != 1 || k == 0) os << rat_to_string(a);
        if (k > 0) {
            if (a != 1) os << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

RatPoly poly_gcd(const RatPoly& a, const RatPoly& b) {
    RatPoly f = a, g = b;
    while (!g.is_zero()) {
        RatPoly r = f.divmod(g).second;
        f = std::move(g);
        g = r.monic();  // keeps coefficient growth bounded
    }
    return f.monic();
}

bool nonzero_roots_simple(const RatPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("square-free test on zero polynomial");
    const RatPoly g = f.strip_valuation();
    if (g.degree() <= 1) return true;
    return poly_gcd(g, g.derivative()).degree() == 0;
}

Rat resultant(const RatPoly& f, const RatPoly& g) {
    if (f.is_zero() || g.is_zero()) return Rat(0);
    const int df = f.degree(), dg = g.degree();
    if (df == 0) {
        Rat r(1);
        for (int k = 0; k < dg; ++k) r *= f.coeff(0);
        return r;
    }
    if (dg == 0) {
        Rat r(1);
        for (int k = 0; k < df; ++k) r *= g.coeff(0);
        return r;
    }
    const int n = df + dg;
    std::vector<std::vector<Rat>> s(static_cast<std::size_t>(n),
                                    std::vector<Rat>(static_cast<std::size_t>(n), Rat(0)));
    for (int r = 0; r < dg; ++r)
        for (int k = 0; k <= df; ++k) s[r][r + k] = f.coeff(static_cast<std::size_t>(df - k));
    for (int r = 0; r < df; ++r)
        for (int k = 0; k <= dg; ++k)
            s[dg + r][r + k] = g.coeff(static_cast<std::size_t>(dg - k));

    // Exact Gaussian elimination; determinant = sign * product of pivots.
    Rat det(1);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (s[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) return Rat(0);
        if (piv != col) {
            std::swap(s[piv], s[col]);
            det = -det;
        }
        det *= s[col][col];
        const Rat inv = Rat(1) / s[col][col];
        for (int r = col + 1; r < n; ++r) {
            if (s[r][col] == 0) continue;
            const Rat factor = s[r][col] * inv;
            for (int cc = col; cc < n; ++cc) s[r][cc] -= factor * s[col][cc];
        }
    }
    return det;
}

}  // namespace genpolar
