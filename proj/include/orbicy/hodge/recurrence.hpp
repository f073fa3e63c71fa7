#pragma once

#include <optional>
#include <vector>

#include "orbicy/hodge/engine.hpp"

namespace orbicy {

// Printed linear recurrence a_n = sum_i c_i a_{n-i} for the Euler numbers of Y_{d,n}.
inline std::vector<int> euler_recurrence(int d) {
    switch (d) {
        case 3: return {7, 8};
        case 4: return {9, 1, -9};
        case 6: return {12, -19, -12, 20};
        default: throw OutOfRange("no printed Euler recurrence for order " + std::to_string(d));
    }
}

struct RecurrenceReport {
    int d = 0;
    int first_n = 1;                // values[i] is the Euler number for n = first_n + i
    std::vector<ParamPoly> values;
    std::vector<ParamPoly> residuals;  // one per checked index, zero when the recurrence holds
    bool holds() const {
        for (auto& r : residuals)
            if (!r.is_zero()) return false;
        return !residuals.empty();
    }
};

inline std::vector<FTable> product_tables(int d, const std::optional<K3Record>& k3, int n) {
    std::vector<FTable> tables;
    FTable e = ftable_elliptic(EllipticRecord::standard(d));
    if (k3) tables.push_back(ftable_k3(*k3));
    while (int(tables.size()) < n) tables.push_back(e);
    return tables;
}

// Euler numbers of Y_{d,n} (with k3) or X_{d,n} (without) for n up to nmax. With a K3
// factor the sequence starts at n = 1 with e = 24; otherwise at n = 2. Symbolic values
// are reduced by the dimension count of H^2 before the recurrence is tested.
inline RecurrenceReport recurrence_check(int d, const std::optional<K3Record>& k3, int nmax) {
    auto coeffs = euler_recurrence(d);
    int order = int(coeffs.size());
    RecurrenceReport rep;
    rep.d = d;
    rep.first_n = k3 ? 1 : 2;
    if (nmax < rep.first_n + order)
        throw PreconditionViolated("nmax must be at least " + std::to_string(rep.first_n + order) +
                                   " for order " + std::to_string(d));
    std::map<std::string, ParamPoly> subs;
    if (k3) {
        if (k3->d() != d) throw InvalidRecord("K3 record order does not match");
        subs = k3->dimension_substitution();
        rep.values.push_back(24);
    }
    for (int n = 2; n <= nmax; ++n)
        rep.values.push_back(euler_characteristic(hodge_diamond(product_tables(d, k3, n))).substitute(subs));
    for (std::size_t i = order; i < rep.values.size(); ++i) {
        ParamPoly res = rep.values[i];
        for (int c = 0; c < order; ++c) res -= coeffs[c] * rep.values[i - 1 - c];
        rep.residuals.push_back(res);
    }
    return rep;
}

}  // namespace orbicy
