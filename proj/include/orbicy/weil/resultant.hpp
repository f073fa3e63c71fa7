#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "orbicy/algebra/param_poly.hpp"

namespace orbicy {

namespace detail {

// Determinant by Laplace expansion along rows, memoised on the set of used columns.
// Fine for the small Sylvester matrices met here (size <= ~16) and needs no division.
inline ParamPoly determinant(const std::vector<std::vector<ParamPoly>>& a) {
    const std::size_t n = a.size();
    if (n == 0) return ParamPoly(1);
    std::unordered_map<std::uint32_t, ParamPoly> memo;
    auto rec = [&](auto&& self, std::size_t row, std::uint32_t used) -> ParamPoly {
        if (row == n) return ParamPoly(1);
        auto it = memo.find(used);
        if (it != memo.end()) return it->second;
        ParamPoly sum;
        int sign = 1;
        for (std::size_t c = 0; c < n; ++c) {
            if (used & (1u << c)) continue;
            if (!a[row][c].is_zero()) {
                ParamPoly minor = self(self, row + 1, used | (1u << c));
                if (!minor.is_zero()) sum += (sign > 0 ? a[row][c] : -a[row][c]) * minor;
            }
            sign = -sign;
        }
        memo.emplace(used, sum);
        return sum;
    };
    return rec(rec, 0, 0);
}

inline std::vector<ParamPoly> trimmed(std::vector<ParamPoly> p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
    return p;
}

}  // namespace detail

// Characteristic-polynomial tensor product via res_s(f(s), s^{deg g} g(T/s)), normalised
// to constant term 1. Inputs are coefficient lists c_0 + c_1 T + ... with c_0 = 1.
inline std::vector<ParamPoly> poly_tensor_resultant(std::vector<ParamPoly> f, std::vector<ParamPoly> g) {
    f = detail::trimmed(std::move(f));
    g = detail::trimmed(std::move(g));
    for (auto* p : {&f, &g})
        if (p->empty() || (*p)[0] != ParamPoly(1))
            throw NonUnitConstantTerm("tensor product needs polynomials with constant term 1");
    const std::size_t n = f.size() - 1, m = g.size() - 1;
    if (n == 0 || m == 0) return {ParamPoly(1)};
    if (n + m > 24) throw PreconditionViolated("resultant oracle is limited to total degree 24");

    // Coefficients in s, highest power first. f(s) = sum f_i s^i; h(s) = sum g_k T^k s^{m-k}.
    ParamPoly T = ParamPoly::symbol("T");
    std::vector<ParamPoly> fs(n + 1), hs(m + 1);
    for (std::size_t i = 0; i <= n; ++i) fs[n - i] = f[i];
    for (std::size_t k = 0; k <= m; ++k) hs[k] = g[k] * T.pow(static_cast<unsigned>(k));

    const std::size_t size = n + m;
    std::vector<std::vector<ParamPoly>> syl(size, std::vector<ParamPoly>(size));
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t i = 0; i <= n; ++i) syl[r][r + i] = fs[i];
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t k = 0; k <= m; ++k) syl[m + r][r + k] = hs[k];

    ParamPoly res = detail::determinant(syl);
    std::uint32_t t = SymbolTable::instance().intern("T");
    std::vector<ParamPoly> out(n * m + 1);
    for (auto& [mono, c] : res.terms()) {
        unsigned e = 0;
        Monomial rest;
        for (auto& [s, k] : mono) {
            if (s == t)
                e = k;
            else
                rest.emplace_back(s, k);
        }
        out.at(e) += ParamPoly::from_monomial(rest, c);
    }
    if (!out[0].is_constant() || out[0].is_zero())
        throw NonUnitConstantTerm("resultant has a non-constant constant term");
    Rational c0 = out[0].constant_term();
    for (auto& c : out) c = c / c0;
    return detail::trimmed(std::move(out));
}

}  // namespace orbicy
