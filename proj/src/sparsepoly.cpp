#include "genpolar/sparsepoly.hpp"

#include <sstream>

namespace genpolar {

SparsePoly SparsePoly::monomial(long i, long j, const Rat& a) {
    SparsePoly p;
    p.add_term(i, j, a);
    return p;
}

void SparsePoly::add_term(long i, long j, const Rat& a) {
    if (a == 0) return;
    if (i < 0 || j < 0) throw std::invalid_argument("negative exponent");
    const LatticePoint key{i, j};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, a);
        return;
    }
    it->second += a;
    if (it->second == 0) terms_.erase(it);
}

Rat SparsePoly::coeff(long i, long j) const {
    auto it = terms_.find(LatticePoint{i, j});
    return it == terms_.end() ? Rat(0) : it->second;
}

std::vector<LatticePoint> SparsePoly::support() const {
    std::vector<LatticePoint> s;
    s.reserve(terms_.size());
    for (const auto& [p, a] : terms_) s.push_back(p);
    return s;
}

long SparsePoly::deg_x() const {
    long d = 0;
    for (const auto& [p, a] : terms_) d = std::max(d, p.i);
    return d;
}

long SparsePoly::deg_y() const {
    long d = 0;
    for (const auto& [p, a] : terms_) d = std::max(d, p.j);
    return d;
}

SparsePoly SparsePoly::derivative_x() const {
    SparsePoly r;
    for (const auto& [p, a] : terms_)
        if (p.i > 0) r.add_term(p.i - 1, p.j, a * Rat(p.i));
    return r;
}

SparsePoly SparsePoly::derivative_y() const {
    SparsePoly r;
    for (const auto& [p, a] : terms_)
        if (p.j > 0) r.add_term(p.i, p.j - 1, a * Rat(p.j));
    return r;
}

SparsePoly SparsePoly::scaled(const Rat& s) const {
    SparsePoly r;
    if (s == 0) return r;
    for (const auto& [p, a] : terms_) r.terms_.emplace(p, a * s);
    return r;
}

SparsePoly SparsePoly::operator+(const SparsePoly& o) const {
    SparsePoly r = *this;
    for (const auto& [p, a] : o.terms_) r.add_term(p.i, p.j, a);
    return r;
}

RatPoly SparsePoly::eval_x(const Rat& x0) const {
    std::vector<Rat> c(static_cast<std::size_t>(deg_y()) + 1, Rat(0));
    for (const auto& [p, a] : terms_) {
        Rat pw(1);
        for (long k = 0; k < p.i; ++k) pw *= x0;
        c[static_cast<std::size_t>(p.j)] += a * pw;
    }
    return RatPoly(std::move(c));
}

RatPoly SparsePoly::y_coefficient(long j) const {
    std::vector<Rat> c;
    for (const auto& [p, a] : terms_) {
        if (p.j != j) continue;
        if (static_cast<std::size_t>(p.i) >= c.size()) c.resize(static_cast<std::size_t>(p.i) + 1, Rat(0));
        c[static_cast<std::size_t>(p.i)] = a;
    }
    return RatPoly(std::move(c));
}

std::string SparsePoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, a] : terms_) {
        if (!first) os << (a > 0 ? " + " : " - ");
        else if (a < 0) os << "-";
        first = false;
        const Rat v = abs(Rat(a));
        const bool bare = (p.i == 0 && p.j == 0);
        if (v != 1 || bare) os << rat_to_string(v);
        if (!bare && v != 1) os << "*";
        if (p.i > 0) {
            os << "x";
            if (p.i > 1) os << "^" << p.i;
        }
        if (p.j > 0) {
            if (p.i > 0) os << "*";
            os << "y";
            if (p.j > 1) os << "^" << p.j;
        }
    }
    return os.str();
}

}  // namespace genpolar
