#include "genpolar/svg.hpp"

#include <sstream>

#include "genpolar/oracle.hpp"
#include "genpolar/zariski.hpp"

namespace genpolar {

namespace {

constexpr long kUnit = 40;    // pixels per lattice step
constexpr long kMargin = 60;  // border around the grid

struct Canvas {
    long cols, rows;  // lattice extent
    std::ostringstream body;

    Canvas(long c, long r) : cols(c), rows(r) {}

    long width() const { return cols * kUnit + 2 * kMargin; }
    long height() const { return rows * kUnit + 2 * kMargin; }

    // Lattice (rational) coordinates to pixels, y axis flipped.
    long px(const Rat& x) const {
        const Rat v = Rat(kMargin) + Rat(kUnit) * x;
        return rat_round(v);
    }
    long py(const Rat& y) const {
        const Rat v = Rat(kMargin) + Rat(kUnit) * (Rat(rows) - y);
        return rat_round(v);
    }

    static long rat_round(const Rat& v) {
        // round half up, exactly
        Int num = v.get_num() * 2 + v.get_den();
        Int den = v.get_den() * 2;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        return q.get_si();
    }

    void grid() {
        for (long i = 0; i <= cols; ++i)
            for (long j = 0; j <= rows; ++j)
                circle(Rat(i), Rat(j), 2, "#c8c8c8");
        for (long i = 0; i <= cols; ++i)
            text(Rat(i), Rat(-1) / Rat(2), std::to_string(i), "#505050", 12);
        for (long j = 0; j <= rows; ++j)
            text(Rat(-1) / Rat(2), Rat(j), std::to_string(j), "#505050", 12);
    }

    void line(const Rat& x0, const Rat& y0, const Rat& x1, const Rat& y1,
              const std::string& color, int width, bool dashed = false) {
        body << "<line x1=\"" << px(x0) << "\" y1=\"" << py(y0) << "\" x2=\"" << px(x1)
             << "\" y2=\"" << py(y1) << "\" stroke=\"" << color << "\" stroke-width=\"" << width
             << "\"";
        if (dashed) body << " stroke-dasharray=\"6,4\"";
        body << "/>\n";
    }

    void circle(const Rat& x, const Rat& y, int r, const std::string& color) {
        body << "<circle cx=\"" << px(x) << "\" cy=\"" << py(y) << "\" r=\"" << r
             << "\" fill=\"" << color << "\"/>\n";
    }

    void text(const Rat& x, const Rat& y, const std::string& s, const std::string& color,
              int size) {
        body << "<text x=\"" << px(x) << "\" y=\"" << py(y)
             << "\" text-anchor=\"middle\" font-family=\"monospace\" font-size=\"" << size
             << "\" fill=\"" << color << "\">" << s << "</text>\n";
    }

    std::string finish() const {
        std::ostringstream os;
        os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
           << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width()
           << "\" height=\"" << height() << "\" viewBox=\"0 0 " << width() << " " << height()
           << "\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
           << body.str() << "</svg>\n";
        return os.str();
    }
};

void draw_T(Canvas& cv, long n, long m) {
    // y = n-1, x = m-1, n x + m y = n m
    cv.line(Rat(0), Rat(n - 1), Rat(m), Rat(n - 1), "#303030", 2);
    cv.line(Rat(m - 1), Rat(0), Rat(m - 1), Rat(n), "#303030", 2);
    cv.line(Rat(0), Rat(n), Rat(m), Rat(0), "#303030", 2);
}

}  // namespace

std::string svg_triangle(long n, long m) {
    validate_class(n, m);
    Canvas cv(m + 1, n + 1);
    cv.grid();
    draw_T(cv, n, m);
    for (long lam : zariski_set(n, m)) {
        const LatticePoint p = phi(n, m, lam);
        cv.circle(Rat(p.i), Rat(p.j), 4, "#000000");
        cv.text(Rat(p.i), Rat(p.j) + Rat(2) / Rat(5), std::to_string(lam), "#b00000", 13);
    }
    cv.text(Rat(m), Rat(-1), "i", "#000000", 14);
    cv.text(Rat(-1), Rat(n), "j", "#000000", 14);
    return cv.finish();
}

std::string svg_region(long n, long m, long lambda) {
    const ZariskiDatum d = make_datum(n, m, lambda);
    Canvas cv(m + 1, n + 1);
    cv.grid();
    draw_T(cv, n, m);

    const Rat p(d.p), q(d.q);
    // l_{sigma,A}: slope -n/m through A, drawn across the grid.
    {
        const Rat c = Rat(n) * p + Rat(m) * q;  // n x + m y = c
        cv.line(Rat(0), c / Rat(m), c / Rat(n), Rat(0), "#0050c0", 2, true);
    }
    // l_{A,Q} from A to Q = (m-1, 1), extended to R on x = m-1.
    cv.line(p, q, Rat(m - 1), Rat(1), "#00a000", 2);
    // l_{N,B} and l_{B,M}: the polygon guide through B.
    cv.line(Rat(0), Rat(n - 1), p, q - 1, "#808080", 1, true);
    cv.line(p, q - 1, Rat(m - 1), Rat(0), "#808080", 1, true);

    for (const LatticePoint& t : t_lambda(n, m, lambda))
        cv.circle(Rat(t.i), Rat(t.j), 6, "#00c000");

    const auto e = e_lambda(n, m, lambda);
    const char* names[3] = {"N", "M", "B"};
    for (int k = 0; k < 3; ++k) {
        cv.circle(Rat(e[k].i), Rat(e[k].j), 4, "#b00000");
        cv.text(Rat(e[k].i) - Rat(1) / Rat(2), Rat(e[k].j) + Rat(1) / Rat(4), names[k],
                "#b00000", 13);
    }
    cv.circle(p, q, 4, "#0050c0");
    cv.text(p, q + Rat(2) / Rat(5), "A", "#0050c0", 13);
    cv.circle(Rat(m - 1), Rat(1), 4, "#00a000");
    cv.text(Rat(m - 1) + Rat(1) / Rat(2), Rat(1) + Rat(1) / Rat(4), "Q", "#00a000", 13);
    cv.text(Rat(m), Rat(n), "T_" + std::to_string(lambda), "#000000", 14);
    return cv.finish();
}

std::string svg_polygon(const BranchInput& b) {
    const NewtonPolygon np = predicted_polygon(b);
    Canvas cv(b.m + 1, b.n + 1);
    cv.grid();
    // Support of the normal form, for context.
    for (const LatticePoint& s : build_poly(b).support()) cv.circle(Rat(s.i), Rat(s.j), 3, "#9090ff");
    for (const CompactEdge& e : np.edges)
        cv.line(Rat(e.from.i), Rat(e.from.j), Rat(e.to.i), Rat(e.to.j), "#b00000", 2);
    for (const LatticePoint& v : np.vertices) {
        cv.circle(Rat(v.i), Rat(v.j), 4, "#b00000");
        cv.text(Rat(v.i), Rat(v.j) + Rat(2) / Rat(5),
                "(" + std::to_string(v.i) + "," + std::to_string(v.j) + ")", "#303030", 12);
    }
    return cv.finish();
}

}  // namespace genpolar
