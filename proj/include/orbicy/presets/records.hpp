#pragma once

#include <string>
#include <variant>
#include <vector>

#include "orbicy/geometry/records.hpp"

namespace orbicy {

enum class Tag { paper, derived };

inline const char* to_string(Tag t) { return t == Tag::paper ? "PAPER" : "DERIVED"; }

struct Provenance {
    std::string field;
    Tag tag;
    std::string citation;
};

struct RecordPreset {
    std::string name;
    std::string summary;
    std::variant<K3Record, EllipticRecord> record;
    std::vector<Provenance> provenance;

    bool is_k3() const { return std::holds_alternative<K3Record>(record); }
    int d() const { return is_k3() ? std::get<K3Record>(record).d() : std::get<EllipticRecord>(record).d; }
};

namespace detail {

inline K3Record::Values numeric(std::initializer_list<std::pair<const char*, int>> kv) {
    K3Record::Values out;
    for (auto& [k, v] : kv) out.emplace(k, Rational(v));
    return out;
}

inline std::vector<RecordPreset> build_record_presets() {
    std::vector<RecordPreset> out;
    for (int d : {2, 3, 4, 6}) {
        auto e = EllipticRecord::standard(d);
        std::string ds = std::to_string(d);
        std::vector<Provenance> prov;
        for (auto& [k, c] : e.fix_counts)
            prov.push_back({"fix[" + std::to_string(k) + "]", Tag::paper,
                            "fixed points of the order-" + ds + " elliptic automorphism"});
        out.push_back({"e" + ds, "elliptic curve E_" + ds + " with its order-" + ds + " automorphism", e, prov});
    }
    for (int d : {2, 3, 4, 6}) {
        out.push_back({"k3-generic-" + std::to_string(d),
                       "symbolic K3 surface with a non-symplectic automorphism of order " + std::to_string(d),
                       K3Record(d, Mode::symbolic, {}),
                       {}});
    }

    K3Record::Values s18 = numeric({{"r", 19},  {"m", 1},   {"alpha", 0}, {"beta", 1}, {"ell", 3},
                                     {"p25", 9}, {"p34", 6}, {"k", 6},     {"b", 0},    {"nprime", 0},
                                     {"a", 0},   {"N", 10},  {"n", 9},     {"gD", 0},   {"gG", 0},
                                     {"gGq", 0}, {"gF1", 1}, {"gF2", 0},   {"gF1q", 0}, {"gF2q", 0}});
    std::vector<Provenance> s18prov;
    for (const char* f : {"r", "m", "n", "nprime", "k", "a", "p34", "p25", "ell", "N", "b", "alpha", "beta"})
        s18prov.push_back({f, Tag::paper, "invariant table of surface no. 18"});
    s18prov.push_back({"gD", Tag::derived, "solved from relations (3) and (7); checked by check_relations"});
    s18prov.push_back({"gG", Tag::derived, "solved from corrected relation (4'); checked by check_relations"});
    s18prov.push_back({"gF1", Tag::derived,
                       "gF1 + gF2 = 1 solved from relation (5); the split between F1 and F2 is arbitrary"});
    s18prov.push_back({"gF2", Tag::derived, "see gF1"});
    s18prov.push_back({"gGq", Tag::derived, "Riemann-Hurwitz for G (relation (8)) evaluates to 0"});
    s18prov.push_back({"gF1q", Tag::derived, "Riemann-Hurwitz for F (relation (9)) gives gF1q + gF2q = 0"});
    s18prov.push_back({"gF2q", Tag::derived, "see gF1q"});
    out.push_back({"s6-18", "K3 surface no. 18 with an order-6 non-symplectic automorphism",
                   K3Record(6, Mode::numeric, s18), s18prov});

    out.push_back({"k3-sixlines", "double cover of the plane branched over six lines, with its covering involution",
                   K3Record(2, Mode::numeric, numeric({{"r", 19}, {"m", 3}, {"N", 9}, {"Nprime", 0}})),
                   {{"r", Tag::derived, "exponent 19 of (1-qT) in the (0,0) cell of the six-lines zeta table"},
                    {"m", Tag::derived, "three eigenvalues in the (0,1) cell of the six-lines zeta table"},
                    {"N", Tag::derived, "(1-T)^9 (1-qT)^9 in the (1,0) cell: nine fixed curves"},
                    {"Nprime", Tag::derived, "the nine fixed curves are rational"}}});
    return out;
}

}  // namespace detail

inline const std::vector<RecordPreset>& record_presets() {
    static const std::vector<RecordPreset> presets = detail::build_record_presets();
    return presets;
}

inline const RecordPreset& record_preset(const std::string& name) {
    for (auto& p : record_presets())
        if (p.name == name) return p;
    throw UnknownPreset(name);
}

}  // namespace orbicy
