#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "orbicy/presets/records.hpp"
#include "orbicy/weil/ztable.hpp"

namespace orbicy {

struct ZTablePreset {
    std::string name;
    std::string summary;
    std::vector<Provenance> provenance;
};

namespace detail {

inline WeilMonomial wm(int q_exp, std::map<std::string, int> syms = {}) {
    return WeilMonomial::named(Rational(q_exp), syms);
}

// (1 - T)^{-c0} (1 - qT)^{-c1}
inline ZetaFactorSet inverse_counts(long long c0, long long c1) {
    ZetaFactorSet f;
    f.add(wm(0), -c0);
    f.add(wm(1), -c1);
    return f;
}

// prod_{k < a} (1 - zeta_a^k q^e T)^{mult} = (1 - q^{ae} T^a)^{mult}
inline ZetaFactorSet cyclic_block(int a, int q_exp, long long mult) {
    ZetaFactorSet f;
    std::string mu = "mu" + std::to_string(a);
    for (int k = 0; k < a; ++k)
        f.add(a == 1 ? wm(q_exp) : WeilMonomial::named(Rational(q_exp), {{mu, k}}), mult);
    return f;
}

inline ZTable zeta_e2(const std::string& torsion) {
    ZTable t(2);
    t(0, 0) = inverse_counts(1, 1);
    t(0, 1).add(wm(0, {{"alpha_q", 1}}), 1);
    t(0, 1).add(wm(0, {{"alphabar_q", 1}}), 1);
    if (torsion == "all-rational") {
        t(1, 0).add(wm(0), -4);
    } else if (torsion == "two-rational") {
        t(1, 0).add(wm(0), -3);
        t(1, 0).add(wm(0, {{"mu2", 1}}), -1);
    } else if (torsion == "one-rational") {
        t(1, 0).add(wm(0), -2);
        t(1, 0).add(wm(0, {{"mu3", 1}}), -1);
        t(1, 0).add(wm(0, {{"mu3", 2}}), -1);
    } else {
        throw MissingFrobeniusData(
            "zeta-e2 needs the rationality of the 2-torsion: all-rational, two-rational or one-rational");
    }
    return t;
}

inline ZTable zeta_sixlines() {
    ZTable t(2);
    t(0, 0) = inverse_counts(1, 19);
    t(0, 0).add(wm(2), -1);
    t(0, 1).add(wm(1, {{"gamma_q", 1}}), -1);
    t(0, 1).add(wm(0, {{"gamma_q", 1}, {"pi", 2}}), -1);
    t(0, 1).add(wm(0, {{"gamma_q", 1}, {"pibar", 2}}), -1);
    t(1, 0) = inverse_counts(9, 9);
    return t;
}

inline ZTable zeta_s6_18() {
    ZTable t(6);
    t(0, 0) = inverse_counts(1, 19);
    t(0, 0).add(wm(2), -1);
    t(0, 1).add(wm(0, {{"beta_q", 1}}), -1);
    t(0, 3).add(wm(1, {{"c_q", 1}}), -1);
    t(0, 5).add(wm(0, {{"betabar_q", 1}}), -1);
    t(1, 0) = inverse_counts(3, 18);
    t(2, 0) = inverse_counts(6, 15);
    t(3, 0) = inverse_counts(10, 10);
    t(3, 2).add(wm(0, {{"delta_q", 1}}), 1);
    t(3, 4).add(wm(0, {{"deltabar_q", 1}}), 1);
    t(4, 0) = inverse_counts(15, 6);
    t(5, 0) = inverse_counts(18, 3);
    return t;
}

inline ZTable zeta_e6() {
    ZTable t(6);
    t(0, 0) = inverse_counts(1, 1);
    t(0, 1).add(wm(0, {{"alpha_q", 1}}), 1);
    t(0, 5).add(wm(0, {{"alphabar_q", 1}}), 1);
    t(1, 0) = inverse_counts(1, 0);
    t(2, 0) = inverse_counts(2, 0);
    t(2, 3) = inverse_counts(1, 0);
    t(3, 0) = inverse_counts(2, 0);
    t(3, 2) = inverse_counts(1, 0);
    t(3, 4) = inverse_counts(1, 0);
    t(4, 0) = inverse_counts(2, 0);
    t(4, 3) = inverse_counts(1, 0);
    t(5, 0) = inverse_counts(1, 0);
    return t;
}

// Generic K3 with a non-symplectic involution. Frobenius permutes the invariant curve
// classes in cycles of lengths a_i; the fixed locus has one curve of the given genus.
// The anti-invariant part of H^2 is modelled by eigenvalues q u_i with u_i declared
// self-conjugate units.
inline ZTable zeta_s2_generic(const std::vector<int>& cycles, int genus) {
    int total = 0;
    for (int a : cycles) {
        if (a < 1) throw OutOfRange("Frobenius cycle lengths must be positive");
        total += a;
    }
    if (total > 20) throw OutOfRange("Frobenius cycles cover at most 20 invariant classes");
    if (genus < 0 || genus > 10) throw OutOfRange("fixed curve genus must lie in 0..10");
    auto& reg = WeilRegistry::instance();
    ZTable t(2);
    t(0, 0) = inverse_counts(1, 1);
    t(0, 0).add(wm(2), -1);
    for (int a : cycles) t(0, 0) *= cyclic_block(a, 1, -1);
    int m = 21 - total;
    for (int i = 1; i <= m; ++i) {
        std::string u = "u" + std::to_string(i);
        reg.add({u, u, 0, std::nullopt, std::nullopt, std::nullopt, "u_" + std::to_string(i),
                 "u_{" + std::to_string(i) + "}", true});
        t(0, 1).add(wm(1, {{u, 1}}), -1);
    }
    t(1, 0) = inverse_counts(1, 1);
    for (int a : cycles) {
        t(1, 0) *= cyclic_block(a, 0, -1);
        t(1, 0) *= cyclic_block(a, 1, -1);
    }
    for (int i = 1; i <= genus; ++i) {
        std::string th = "theta" + std::to_string(i), thb = "thetabar" + std::to_string(i);
        std::string tr = "b_{q," + std::to_string(i) + "}";
        reg.add({th, thb, 1, tr, tr, std::nullopt, "θ_" + std::to_string(i), "\\theta_{" + std::to_string(i) + "}"});
        reg.add({thb, th, 1, tr, tr, std::nullopt, "θ̄_" + std::to_string(i),
                 "\\bar{\\theta}_{" + std::to_string(i) + "}"});
        t(1, 0).add(wm(0, {{th, 1}}), 1);
        t(1, 0).add(wm(0, {{thb, 1}}), 1);
    }
    return t;
}

inline std::vector<int> parse_cycles(const std::string& text) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos <= text.size() && !text.empty()) {
        auto next = text.find('+', pos);
        std::string part = text.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
        if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos || part.size() > 3)
            throw UsageError("malformed Frobenius cycle list: " + text);
        out.push_back(std::stoi(part));
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return out;
}

}  // namespace detail

inline const std::vector<ZTablePreset>& ztable_presets() {
    static const std::vector<ZTablePreset> presets = {
        {"zeta-e2:all-rational", "Z-table of E_2, all 2-torsion points defined over F_q",
         {{"Z[1,0]", Tag::paper, "1/(1-T)^4 from the Z_{E,k,j} table"}}},
        {"zeta-e2:two-rational", "Z-table of E_2, two 2-torsion points defined over F_q",
         {{"Z[1,0]", Tag::paper, "1/((1-T)^3 (1+T)) from the Z_{E,k,j} table"}}},
        {"zeta-e2:one-rational", "Z-table of E_2, one 2-torsion point defined over F_q",
         {{"Z[1,0]", Tag::paper, "1/((1-T)^2 (1+T+T^2)) from the Z_{E,k,j} table"}}},
        {"zeta-sixlines", "Z-table of the double plane branched over six lines",
         {{"Z[0,1]", Tag::paper, "gamma_q, pi, pibar with pi pibar = q; y_q in the threefold table is gamma_q"},
          {"Z[1,0]", Tag::paper, "nine rational fixed curves"},
          {"resolution", Tag::paper, "3 triple points give 24 points on the double cover, then 15 double points"}}},
        {"zeta-s6-18", "Z-table of K3 surface no. 18 with its order-6 automorphism",
         {{"Z[k,0]", Tag::paper, "Z_{S_6,k,j} table"},
          {"c_q", Tag::derived, "registered self-conjugate of order 2; the conjugate is never printed"}}},
        {"zeta-e6", "Z-table of E_6: y^2 = x^3 + 1 with its order-6 automorphism", {{"Z", Tag::paper, "Z_{E_6,k,j} table"}}},
        {"zeta-s2-generic", "generic K3 with an involution; needs :cycles=a1+a2+...[:genus=g]",
         {{"Z[0,0]", Tag::paper, "Frobenius permutation of the invariant curves by cycle type"},
          {"Z[0,1]", Tag::derived, "anti-invariant eigenvalues q u_i with declared self-conjugate u_i"}}},
    };
    return presets;
}

// Accepts the listed names plus "zeta-s2-generic:cycles=...[:genus=g]".
inline ZTable ztable_preset(const std::string& name) {
    if (name == "zeta-e2") return detail::zeta_e2("");
    if (name.rfind("zeta-e2:", 0) == 0) {
        std::string c = name.substr(8);
        if (c != "all-rational" && c != "two-rational" && c != "one-rational") throw UnknownPreset(name);
        return detail::zeta_e2(c);
    }
    if (name == "zeta-sixlines") return detail::zeta_sixlines();
    if (name == "zeta-s6-18") return detail::zeta_s6_18();
    if (name == "zeta-e6") return detail::zeta_e6();
    if (name == "zeta-s2-generic")
        throw MissingFrobeniusData("zeta-s2-generic needs Frobenius cycle data: zeta-s2-generic:cycles=a1+a2+...");
    if (name.rfind("zeta-s2-generic:", 0) == 0) {
        std::optional<std::vector<int>> cycles;
        int genus = 0;
        std::string rest = name.substr(16);
        std::size_t pos = 0;
        while (pos < rest.size()) {
            auto next = rest.find(':', pos);
            std::string opt = rest.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
            if (opt.rfind("cycles=", 0) == 0)
                cycles = detail::parse_cycles(opt.substr(7));
            else if (opt.rfind("genus=", 0) == 0 && opt.size() > 6 && opt.size() < 9 &&
                     opt.find_first_not_of("0123456789", 6) == std::string::npos)
                genus = std::stoi(opt.substr(6));
            else
                throw UsageError("unknown zeta-s2-generic option: " + opt);
            if (next == std::string::npos) break;
            pos = next + 1;
        }
        if (!cycles) throw MissingFrobeniusData("zeta-s2-generic needs cycles=a1+a2+...");
        return detail::zeta_s2_generic(*cycles, genus);
    }
    throw UnknownPreset(name);
}

}  // namespace orbicy
