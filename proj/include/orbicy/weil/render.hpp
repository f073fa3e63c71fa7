#pragma once

#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "orbicy/weil/factor_set.hpp"

namespace orbicy {

enum class ZetaStyle { linear, paired, latex };

namespace detail {

struct RenderedFactor {
    WeilMonomial key;
    std::string body;  // the polynomial in T, without parentheses
    long long mult;
};

inline std::string q_power_text(const Rational& e, bool latex) {
    if (e == 0) return "";
    if (e == 1) return "q";
    std::string s = to_string(e);
    if (latex) return "q^{" + s + "}";
    return is_integer(e) ? "q^" + s : "q^(" + s + ")";
}

// Coefficient text for q^{q_exp} prod s^{k * times}, with no reduction applied to the
// symbol exponents (squares of order-2 symbols stay visible, as in the printed tables).
inline std::vector<std::string> coefficient_parts(const WeilMonomial::Syms& syms, int times, const Rational& q_exp,
                                                  bool latex) {
    auto& reg = WeilRegistry::instance();
    std::vector<std::string> parts;
    for (auto& [s, e] : syms) {
        const WeilSymbol& sym = reg.at(s);
        std::string base = latex ? sym.latex : sym.text;
        int k = e * times;
        if (k == 1)
            parts.push_back(base);
        else
            parts.push_back(latex ? base + "^{" + std::to_string(k) + "}" : base + "^" + std::to_string(k));
    }
    std::string q = q_power_text(q_exp, latex);
    if (!q.empty()) parts.push_back(q);
    return parts;
}

// "<coefficient> T^power", gluing T onto a bare power of q.
inline std::string term_text(const std::vector<std::string>& parts, bool only_q, int power, bool latex) {
    std::string t = power == 1 ? "T" : (latex ? "T^{" + std::to_string(power) + "}" : "T^" + std::to_string(power));
    if (parts.empty()) return t;
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? " " : "") + parts[i];
    return out + (only_q ? "" : " ") + t;
}

inline WeilMonomial::Syms without(const WeilMonomial::Syms& syms, std::uint32_t id) {
    WeilMonomial::Syms out;
    for (auto& p : syms)
        if (p.first != id) out.push_back(p);
    return out;
}

inline WeilMonomial::Syms with_exponent(WeilMonomial::Syms syms, std::uint32_t id, int e) {
    for (auto& p : syms)
        if (p.first == id) p.second = e;
    return syms;
}

inline std::string linear_body(const WeilMonomial& m, bool latex) {
    auto& reg = WeilRegistry::instance();
    bool negative = false;
    WeilMonomial::Syms syms;
    for (auto& [s, e] : m.syms()) {
        if (reg.at(s).order == 2 && reg.at(s).is_root_of_unity())
            negative = (e % 2) == 1;
        else
            syms.emplace_back(s, e);
    }
    auto parts = coefficient_parts(syms, 1, m.q_exp(), latex);
    std::string sep = latex ? "" : " ";
    return "1" + sep + (negative ? "+" : "-") + sep + term_text(parts, syms.empty(), 1, latex);
}

// 1 - trace * mu T + q^{norm_q} mu^2 T^2; trace_sign 0 drops the linear term and
// an empty trace text means a numeric trace of magnitude 1.
inline std::string quadratic_body(const std::string& trace, int trace_sign, const WeilMonomial::Syms& mu,
                                  const Rational& q_exp, const Rational& norm_q, bool latex) {
    std::string sep = latex ? "" : " ";
    std::string out = "1";
    if (trace_sign != 0) {
        auto lin = coefficient_parts(mu, 1, q_exp, latex);
        bool only_q = mu.empty() && trace.empty();
        if (!trace.empty()) lin.insert(lin.begin(), trace);
        out += sep + (trace_sign > 0 ? "-" : "+") + sep + term_text(lin, only_q, 1, latex);
    }
    auto sq = coefficient_parts(mu, 2, 2 * q_exp + norm_q, latex);
    out += sep + "+" + sep + term_text(sq, mu.empty(), 2, latex);
    return out;
}

// Rational value of zeta_o^e + zeta_o^{-e} when it exists.
inline std::optional<int> root_trace(int e, int o) {
    int g = std::gcd(e, o);
    int oo = o / g;
    switch (oo) {
        case 3: return -1;
        case 4: return 0;
        case 6: return 1;
        default: return std::nullopt;
    }
}

inline std::vector<RenderedFactor> rendered_factors(const ZetaFactorSet& f, bool paired, bool latex) {
    auto& reg = WeilRegistry::instance();
    std::map<WeilMonomial, long long> left(f.mults().begin(), f.mults().end());
    std::vector<RenderedFactor> out;
    for (auto& [lam, k0] : f.mults()) {
        long long& k = left[lam];
        if (k == 0) continue;
        if (paired) {
            for (auto& [s, e] : lam.syms()) {
                const WeilSymbol& sym = reg.at(s);
                std::optional<WeilMonomial> partner;
                std::string body;
                if (!sym.self_conjugate() && sym.trace && e == 1 && lam.exponent(reg.conjugate(s)) == 0) {
                    auto mu = without(lam.syms(), s);
                    auto c = mu;
                    c.emplace_back(reg.conjugate(s), 1);
                    partner = WeilMonomial(lam.q_exp(), c);
                    body = quadratic_body(latex ? *sym.trace_latex : *sym.trace, 1, mu, lam.q_exp(),
                                          Rational(sym.weight), latex);
                } else if (sym.is_root_of_unity() && 2 * e != *sym.order) {
                    auto t = root_trace(e, *sym.order);
                    if (!t) continue;
                    partner = WeilMonomial(lam.q_exp(), with_exponent(lam.syms(), s, *sym.order - e));
                    auto mu = without(lam.syms(), s);
                    body = quadratic_body("", *t, mu, lam.q_exp(), Rational(0), latex);
                }
                if (!partner) continue;
                auto it = left.find(*partner);
                if (it == left.end() || it->second == 0 || (it->second > 0) != (k > 0)) continue;
                long long both = (k > 0 ? 1 : -1) * std::min(std::llabs(k), std::llabs(it->second));
                out.push_back({lam, body, both});
                k -= both;
                it->second -= both;
                if (k == 0) break;
            }
            if (k == 0) continue;
        }
        out.push_back({lam, linear_body(lam, latex), k});
        k = 0;
    }
    return out;
}

inline std::string product_text(const std::vector<RenderedFactor>& fs, bool numerator, bool latex) {
    std::string out;
    for (auto& f : fs) {
        if ((f.mult > 0) != numerator) continue;
        long long k = std::llabs(f.mult);
        out += latex ? "\\left(" + f.body + "\\right)" : "(" + f.body + ")";
        if (k > 1) out += latex ? "^{" + std::to_string(k) + "}" : "^" + std::to_string(k);
    }
    return out;
}

}  // namespace detail

// Deterministic rendering of prod (1 - lambda T)^{mult}. The paired style folds
// conjugate eigenvalues into real quadratics using the registry's trace names.
inline std::string zf_render(const ZetaFactorSet& f, ZetaStyle style) {
    bool latex = style == ZetaStyle::latex;
    bool paired = style != ZetaStyle::linear;
    if (paired && !f.is_conjugation_closed())
        throw RenderError("paired rendering needs a conjugation-closed factor set");
    auto fs = detail::rendered_factors(f, paired, latex);
    std::string num = detail::product_text(fs, true, latex);
    std::string den = detail::product_text(fs, false, latex);
    std::string out;
    if (den.empty())
        out = num.empty() ? "1" : num;
    else if (latex)
        out = "\\frac{" + (num.empty() ? std::string("1") : num) + "}{" + den + "}";
    else
        out = (num.empty() ? std::string("1") : num) + " / " + den;

    std::set<std::string> assumed;
    for (auto& [m, _] : f.mults())
        for (auto& [s, e] : m.syms())
            if (WeilRegistry::instance().at(s).declared_self_conjugate) assumed.insert(WeilRegistry::instance().at(s).name);
    if (!assumed.empty()) {
        std::string names;
        for (auto& n : assumed) names += (names.empty() ? "" : ", ") + n;
        out += latex ? "\n% declared self-conjugate: " + names : "  [declared self-conjugate: " + names + "]";
    }
    return out;
}

}  // namespace orbicy
