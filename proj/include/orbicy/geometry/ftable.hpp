#pragma once

#include <vector>

#include "orbicy/algebra/puiseux.hpp"
#include "orbicy/geometry/records.hpp"

namespace orbicy {

// F_{X,k,j}(X,Y): row k is the automorphism power (twisted sector), column j the
// eigenvalue index. dim is the complex dimension of the factor.
struct FTable {
    int d = 2;
    int dim = 1;
    std::vector<std::vector<PuiseuxPoly>> cells;

    FTable() = default;
    FTable(int d_, int dim_) : d(d_), dim(dim_), cells(d_, std::vector<PuiseuxPoly>(d_)) {}

    PuiseuxPoly& operator()(int k, int j) { return cells.at(k).at(j); }
    const PuiseuxPoly& operator()(int k, int j) const { return cells.at(k).at(j); }

    FTable evaluated(const Env& env) const {
        FTable out = *this;
        for (auto& row : out.cells)
            for (auto& c : row) c = c.map_coefficients([&](const ParamPoly& p) { return p.partial_eval(env); });
        return out;
    }

    FTable substituted(const std::map<std::string, ParamPoly>& subs) const {
        FTable out = *this;
        for (auto& row : out.cells)
            for (auto& c : row) c = c.map_coefficients([&](const ParamPoly& p) { return p.substitute(subs); });
        return out;
    }

    friend bool operator==(const FTable& a, const FTable& b) {
        return a.d == b.d && a.dim == b.dim && a.cells == b.cells;
    }
};

namespace detail {

inline PuiseuxPoly X(std::uint32_t e = 1) { return PuiseuxPoly::X(e); }
inline PuiseuxPoly Y(std::uint32_t e = 1) { return PuiseuxPoly::Y(e); }
inline PuiseuxPoly XY() { return PuiseuxPoly::xy(1); }

// c + g (X + Y) + c' XY, the shape of every curve-carrying cell.
inline PuiseuxPoly curve_cell(const ParamPoly& c, const ParamPoly& g, const ParamPoly& cxy) {
    return PuiseuxPoly(c) + PuiseuxPoly(g) * (X() + Y()) + PuiseuxPoly(cxy) * XY();
}

}  // namespace detail

inline FTable ftable_elliptic(const EllipticRecord& rec) {
    using detail::X, detail::XY, detail::Y;
    rec.validate();
    int d = rec.d;
    FTable t(d, 1);
    t(0, 0) = 1 + XY();
    switch (d) {
        case 2:
            t(0, 1) = X() + Y();
            t(1, 0) = 4;
            break;
        case 3:
            t(0, 1) = X();
            t(0, 2) = Y();
            t(1, 0) = 3;
            t(2, 0) = 3;
            break;
        case 4:
            t(0, 1) = X();
            t(0, 3) = Y();
            t(1, 0) = 2;
            t(2, 0) = 3;
            t(2, 2) = 1;
            t(3, 0) = 2;
            break;
        case 6:
            t(0, 1) = X();
            t(0, 5) = Y();
            t(1, 0) = 1;
            t(2, 0) = 2;
            t(2, 3) = 1;
            t(3, 0) = 2;
            t(3, 2) = 1;
            t(3, 4) = 1;
            t(4, 0) = 2;
            t(4, 3) = 1;
            t(5, 0) = 1;
            break;
    }
    return t;
}

inline FTable ftable_k3(const K3Record& rec) {
    using detail::curve_cell, detail::X, detail::XY, detail::Y;
    rec.validate();
    int d = rec.d();
    auto v = [&](const char* name) { return rec.get(name); };
    FTable t(d, 2);
    PuiseuxPoly m1 = PuiseuxPoly(v("m") - 1) * XY();
    t(0, 0) = XY() * XY() + PuiseuxPoly(v("r")) * XY() + 1;
    switch (d) {
        case 2:
            t(0, 1) = X(2) + Y(2) + PuiseuxPoly(v("m") - 2) * XY();
            t(1, 0) = curve_cell(v("N"), v("Nprime"), v("N"));
            break;
        case 3: {
            t(0, 1) = X(2) + m1;
            t(0, 2) = Y(2) + m1;
            t(1, 0) = curve_cell(v("k"), v("gC"), v("k") + v("h"));
            t(2, 0) = curve_cell(v("k") + v("h"), v("gC"), v("k"));
            break;
        }
        case 4: {
            ParamPoly pts = v("n1") + v("n2");
            t(0, 1) = X(2) + m1;
            t(0, 2) = PuiseuxPoly(v("alpha")) * XY();
            t(0, 3) = Y(2) + m1;
            t(1, 0) = curve_cell(v("k"), v("gG"), v("k") + pts);
            t(2, 0) = curve_cell(v("N") - v("a"), v("gDq"), v("N") - v("a"));
            t(2, 2) = curve_cell(v("a"), v("gD") - v("gDq"), v("a"));
            t(3, 0) = curve_cell(v("k") + pts, v("gG"), v("k"));
            break;
        }
        case 6: {
            ParamPoly pts1 = v("p25") + v("p34");
            ParamPoly kb = v("k") - v("b");
            ParamPoly gGdiff = v("gG") - v("gGq");
            ParamPoly half = (v("gF1") + v("gF2") - v("gF1q") - v("gF2q")) / Rational(2);
            t(0, 1) = X(2) + m1;
            t(0, 2) = PuiseuxPoly(v("alpha")) * XY();
            t(0, 3) = PuiseuxPoly(v("beta")) * XY();
            t(0, 4) = PuiseuxPoly(v("alpha")) * XY();
            t(0, 5) = Y(2) + m1;
            t(1, 0) = curve_cell(v("ell"), v("gD"), v("ell") + pts1);
            t(2, 0) = curve_cell(kb, v("gGq"), kb + v("nprime") + v("p25"));
            t(2, 3) = curve_cell(v("b"), gGdiff, v("b") + v("nprime"));
            t(3, 0) = curve_cell(v("N") - 2 * v("a"), v("gF1q") + v("gF2q"), v("N") - 2 * v("a"));
            t(3, 2) = curve_cell(v("a"), half, v("a"));
            t(3, 4) = curve_cell(v("a"), half, v("a"));
            t(4, 0) = curve_cell(kb + v("nprime") + v("p25"), v("gGq"), kb);
            t(4, 3) = curve_cell(v("b") + v("nprime"), gGdiff, v("b"));
            t(5, 0) = curve_cell(v("ell") + pts1, v("gD"), v("ell"));
            break;
        }
    }
    return t;
}

// True when the table belongs to a surface: its (0,0) cell carries (XY)^2.
inline bool is_surface_table(const FTable& t) { return !t(0, 0).coefficient(2, 2).is_zero(); }

}  // namespace orbicy
