#pragma once

#include <variant>
#include <vector>

#include "orbicy/geometry/records.hpp"

namespace orbicy {

using Factor = std::variant<K3Record, EllipticRecord>;

inline int factor_order(const Factor& f) {
    return std::visit([](auto& r) {
        if constexpr (std::is_same_v<std::decay_t<decltype(r)>, K3Record>)
            return r.d();
        else
            return r.d;
    }, f);
}

// e(Fix(g^a) n Fix(g^b)) for a factor, tabulated over 0 <= a, b < d.
inline std::vector<std::vector<ParamPoly>> euler_pair_table(const Factor& f, int d) {
    std::vector<std::vector<ParamPoly>> t(d, std::vector<ParamPoly>(d));
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            t[a][b] = std::visit([&](auto& r) { return ParamPoly(r.euler_pair(a, b)); }, f);
    return t;
}

// Orbifold Euler number of (X_1 x ... x X_n) / G_{d,n}, where G_{d,n} is the kernel
// of the sum map Z_d^n -> Z_d acting diagonally. The double sum over commuting pairs
// is accumulated factor by factor, indexed by the running sums of g and h mod d.
inline ParamPoly stringy_euler(const std::vector<Factor>& factors, int d) {
    check_order(d);
    if (factors.empty()) throw TooFewFactors(0);
    for (auto& f : factors) {
        if (factor_order(f) != d) throw InvalidRecord("factor order does not match d");
        std::visit([](auto& r) { r.validate(); }, f);
    }
    std::vector<ParamPoly> acc(d * d);
    acc[0] = 1;
    for (auto& f : factors) {
        auto e = euler_pair_table(f, d);
        std::vector<ParamPoly> next(d * d);
        for (int sg = 0; sg < d; ++sg)
            for (int sh = 0; sh < d; ++sh) {
                const ParamPoly& cur = acc[sg * d + sh];
                if (cur.is_zero()) continue;
                for (int a = 0; a < d; ++a)
                    for (int b = 0; b < d; ++b) next[((sg + a) % d) * d + (sh + b) % d] += cur * e[a][b];
            }
        acc = std::move(next);
    }
    Rational group_order = 1;
    for (std::size_t i = 1; i < factors.size(); ++i) group_order *= d;
    return acc[0] / group_order;
}

}  // namespace orbicy
