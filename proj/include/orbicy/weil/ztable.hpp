#pragma once

#include <vector>

#include "orbicy/geometry/records.hpp"
#include "orbicy/weil/factor_set.hpp"

namespace orbicy {

// Z_{X,k,j}: row k is the sector (automorphism power), column j the eigenvalue index.
struct ZTable {
    int d = 2;
    std::vector<std::vector<ZetaFactorSet>> entries;

    ZTable() = default;
    explicit ZTable(int d_) : d(d_), entries(d_, std::vector<ZetaFactorSet>(d_)) { check_order(d_); }

    ZetaFactorSet& operator()(int k, int j) { return entries.at(k).at(j); }
    const ZetaFactorSet& operator()(int k, int j) const { return entries.at(k).at(j); }

    // Product of all cells: the conjugation-closed data of the factor.
    bool is_conjugation_closed() const {
        ZetaFactorSet all;
        for (auto& row : entries)
            for (auto& c : row) all *= c;
        return all.is_conjugation_closed();
    }

    friend bool operator==(const ZTable& a, const ZTable& b) { return a.d == b.d && a.entries == b.entries; }
};

// prod_m Z_{X,m,j}(q^{m/d} T) for one factor and one eigenvalue index j.
inline ZetaFactorSet twisted_column(const ZTable& t, int j) {
    ZetaFactorSet out;
    for (int m = 0; m < t.d; ++m) out *= zf_scale(t(m, j), Rational(m) / t.d);
    out.set_denom(t.d);
    return out;
}

// Zeta function of the crepant resolution of (X_1 x ... x X_n) / G_{d,n} as the product over j of
// the tensor product over factors of the twisted columns, raised to (-1)^{n+1} and restricted to
// the factors carrying integral powers of q.
inline ZetaFactorSet orbifold_zeta(const std::vector<ZTable>& tables) {
    if (tables.size() < 2) throw TooFewFactors(tables.size());
    int d = tables.front().d;
    for (auto& t : tables)
        if (t.d != d) throw InvalidRecord("all zeta tables must have the same order");
    ZetaFactorSet total;
    for (int j = 0; j < d; ++j) {
        ZetaFactorSet acc = twisted_column(tables[0], j);
        for (std::size_t i = 1; i < tables.size(); ++i) acc = zf_tensor(acc, twisted_column(tables[i], j));
        total *= acc;
    }
    ZetaFactorSet out = zf_integral_filter(zf_pow(total, tables.size() % 2 == 0 ? -1 : 1));
    out.set_denom(1);
    return out;
}

// The multiset is stable under lambda -> conj(lambda) q^{dim - weight(lambda)}.
inline bool satisfies_poincare_duality(const ZetaFactorSet& f, int dim) {
    for (auto& [m, k] : f.mults())
        if (f.mult(m.conj().scaled(dim - m.weight())) != k) return false;
    return true;
}

}  // namespace orbicy
