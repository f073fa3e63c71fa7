#pragma once

#include <string>
#include <vector>

#include "orbicy/geometry/ftable.hpp"

namespace orbicy {

struct HodgeDiamond {
    int dim = 0;
    std::vector<std::vector<ParamPoly>> h;  // h[p][q]

    const ParamPoly& operator()(int p, int q) const { return h.at(p).at(q); }

    ParamPoly euler() const {
        ParamPoly e;
        for (int p = 0; p <= dim; ++p)
            for (int q = 0; q <= dim; ++q) e += (p + q) % 2 ? -h[p][q] : h[p][q];
        return e;
    }

    HodgeDiamond substituted(const std::map<std::string, ParamPoly>& subs) const {
        HodgeDiamond out = *this;
        for (auto& row : out.h)
            for (auto& c : row) c = c.substitute(subs);
        return out;
    }

    bool is_numeric() const {
        for (auto& row : h)
            for (auto& c : row)
                if (!c.is_constant()) return false;
        return true;
    }

    friend bool operator==(const HodgeDiamond& a, const HodgeDiamond& b) { return a.dim == b.dim && a.h == b.h; }
};

// Sum over m of (XY)^(m/d) * F(m, j).
inline PuiseuxPoly sector_sum(const FTable& t, int j) {
    if (j < 0 || j >= t.d) throw OutOfRange("eigenvalue index must lie in 0.." + std::to_string(t.d - 1));
    PuiseuxPoly s = PuiseuxPoly::term(ParamPoly(), 0, 0, t.d);
    for (int m = 0; m < t.d; ++m) {
        if (t(m, j).is_zero()) continue;
        s += PuiseuxPoly::xy(m, t.d) * t(m, j);
    }
    return s;
}

inline void check_factors(const std::vector<FTable>& tables) {
    if (tables.size() < 2) throw TooFewFactors(tables.size());
    for (auto& t : tables)
        if (t.d != tables.front().d) throw InvalidRecord("all factors must share the same order");
}

// Sum over j of the product over factors of sector_sum, before discarding fractional terms.
inline PuiseuxPoly orbifold_poincare(const std::vector<FTable>& tables) {
    check_factors(tables);
    int d = tables.front().d;
    PuiseuxPoly total = PuiseuxPoly::term(ParamPoly(), 0, 0, d);
    for (int j = 0; j < d; ++j) {
        PuiseuxPoly prod = 1;
        for (auto& t : tables) {
            prod *= sector_sum(t, j);
            if (prod.is_zero()) break;
        }
        total += prod;
    }
    return total;
}

inline HodgeDiamond diamond_from_poincare(const PuiseuxPoly& poly, int dim) {
    PuiseuxPoly integral = poly.integral_part();
    HodgeDiamond out{dim, std::vector<std::vector<ParamPoly>>(dim + 1, std::vector<ParamPoly>(dim + 1))};
    for (int p = 0; p <= dim; ++p)
        for (int q = 0; q <= dim; ++q) out.h[p][q] = integral.coefficient(p, q);
    return out;
}

inline int total_dimension(const std::vector<FTable>& tables) {
    int dim = 0;
    for (auto& t : tables) dim += is_surface_table(t) ? 2 : 1;
    return dim;
}

inline HodgeDiamond hodge_diamond(const std::vector<FTable>& tables) {
    HodgeDiamond hd = diamond_from_poincare(orbifold_poincare(tables), total_dimension(tables));
    if (hd.is_numeric())
        for (auto& row : hd.h)
            for (auto& c : row)
                if (!is_integer(c.constant_term()))
                    throw InvalidRecord("non-integral Hodge number " + c.to_string());
    return hd;
}

inline ParamPoly euler_characteristic(const HodgeDiamond& hd) { return hd.euler(); }

// dim (V_1 x ... x V_n)^{G_{d,n}} = sum_j prod_i dim (V_i)_{zeta^j}, where dims[i][j] is the
// dimension of the zeta_d^j eigenspace of the generator on V_i.
inline ParamPoly invariant_dimension(const std::vector<std::vector<ParamPoly>>& dims) {
    if (dims.empty()) throw TooFewFactors(0);
    std::size_t d = dims.front().size();
    for (auto& v : dims)
        if (v.size() != d) throw InvalidRecord("eigenspace dimension vectors must share the same order");
    ParamPoly total;
    for (std::size_t j = 0; j < d; ++j) {
        ParamPoly prod = 1;
        for (auto& v : dims) prod *= v[j];
        total += prod;
    }
    return total;
}

}  // namespace orbicy
