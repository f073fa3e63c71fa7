#pragma once

#include <string>
#include <vector>

#include "orbicy/arith/lefschetz.hpp"

namespace orbicy {

enum class Verdict { holds, fails, symbolic };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::holds: return "holds";
        case Verdict::fails: return "fails";
        default: return "symbolic";
    }
}

struct RelationEntry {
    std::string id;
    ParamPoly lhs;
    Verdict verdict;
    std::string note;
};

struct RelationReport {
    int d = 6;
    std::vector<RelationEntry> entries;

    const RelationEntry& at(const std::string& id) const {
        for (auto& e : entries)
            if (e.id == id) return e;
        throw OutOfRange("no relation with id " + id);
    }
};

enum class QuotientCurve { G, F };

// Genus of G/gamma (which = G) or g(F1/gamma) + g(F2/gamma) (which = F) for order 6.
inline ParamPoly riemann_hurwitz(const K3Record& rec, QuotientCurve which) {
    if (rec.d() != 6) throw PreconditionViolated("Riemann-Hurwitz quotient genera are defined for order 6");
    auto v = [&](const char* n) { return rec.get(n); };
    if (which == QuotientCurve::G)
        return (2 * v("gG") - v("p34") + 2 * v("k") - 4 * v("b") - 2 * v("ell")) / Rational(4);
    ParamPoly gD = v("gD");
    if (gD.is_constant() && !gD.is_zero())
        throw PreconditionViolated("the F quotient genus formula assumes g(D) = 0");
    return (2 * v("gF1") + 2 * v("gF2") - 2 * v("p25") - 2 * v("p34") + 4 * v("N") - 12 * v("a") - 4 * v("ell")) /
           Rational(6);
}

namespace detail {

inline RelationEntry judge(std::string id, ParamPoly lhs, std::string note = {}) {
    Verdict v = !lhs.is_constant() ? Verdict::symbolic : lhs.is_zero() ? Verdict::holds : Verdict::fails;
    return {std::move(id), std::move(lhs), v, std::move(note)};
}

inline std::vector<RelationEntry> order6_relations(const K3Record& rec) {
    auto v = [&](const char* n) { return rec.get(n); };
    ParamPoly r = v("r"), m = v("m"), al = v("alpha"), be = v("beta"), ell = v("ell"), gD = v("gD"),
              p25 = v("p25"), p34 = v("p34"), k = v("k"), b = v("b"), np = v("nprime"), gG = v("gG"),
              gGq = v("gGq"), a = v("a"), N = v("N"), gF1 = v("gF1"), gF2 = v("gF2"), gF1q = v("gF1q"),
              gF2q = v("gF2q"), n = v("n"), w = v("w");
    std::vector<RelationEntry> out;
    out.push_back(judge("1", 2 * m + r + al + be - 20, "as printed"));
    out.push_back(judge("1'", r + 2 * m + 2 * al + be - 22, "dimension count of H^2"));
    out.push_back(judge("2", n - p25 - 2 * np));
    out.push_back(judge("3", 2 + r + m - al - be - 2 * ell + 2 * gD - p25 - p34));
    out.push_back(judge("4", -al + be + r + 2 - m - 2 * k + 2 * gG, "as printed"));
    out.push_back(judge("4'", -al + be + r + 2 - m - (2 * k - 2 * gG + 2 * np + p25),
                        "with the full Euler number of Fix(gamma^2)"));
    out.push_back(judge("5", 2 + r + 2 * al - be - 2 * m - 2 * N + 2 * gF1 + 2 * gF2));
    out.push_back(judge("6", -2 * al + 10 + N - r - gF1 - gF2));
    out.push_back(judge("7", 3 + 3 * ell - 3 * gD - p34 / Rational(2) - p25));
    out.push_back(judge("8", -gGq + (2 * gG - p34 + 2 * k - 4 * b - 2 * ell) / Rational(4)));
    out.push_back(judge("9",
                        -gF1q - gF2q + (2 * gF1 + 2 * gF2 - 2 * p25 - 2 * p34 + 4 * N - 12 * a - 4 * ell) / Rational(6),
                        "assumes g(D) = 0"));
    out.push_back(judge("10", -m + 2 + r - 2 * ell - p25 - p34 + 2 * gD - 2 * b - w - 2 * gGq + 2 * gG - 2 * a - gF1q -
                                  gF2q + gF1 + gF2,
                        "w read as nprime"));
    Rational h = Rational(3) / 2;
    out.push_back(judge("11", -np - 3 + h * r - 6 * ell - 2 * p25 - 3 * p34 + 6 * gD + 2 * k - 6 * b - 6 * gGq +
                                  4 * gG + h * N - 6 * a - 3 * gF1q - 3 * gF2q + h * gF1 + h * gF2));
    return out;
}

}  // namespace detail

// Evaluates the relations among the invariants. Order 6 gets the full printed list with
// the corrected variants (1') and (4'); lower orders get the dimension count and the
// topological Lefschetz identities L_top(gamma^k) = e(Fix(gamma^k)).
inline RelationReport check_relations(const K3Record& rec) {
    RelationReport rep;
    rep.d = rec.d();
    if (rec.d() == 6) {
        rep.entries = detail::order6_relations(rec);
        return rep;
    }
    ParamPoly r = rec.get("r"), m = rec.get("m");
    switch (rec.d()) {
        case 2: rep.entries.push_back(detail::judge("dim", r + m - 22, "dimension count of H^2")); break;
        case 3: rep.entries.push_back(detail::judge("dim", r + 2 * m - 22, "dimension count of H^2")); break;
        case 4:
            rep.entries.push_back(detail::judge("dim", r + 2 * m + rec.get("alpha") - 22, "dimension count of H^2"));
            break;
    }
    for (int k = 1; k < rec.d(); ++k)
        rep.entries.push_back(detail::judge("top" + std::to_string(k), lefschetz_top(rec, k) - rec.fix_euler(k),
                                            "topological Lefschetz number minus e(Fix)"));
    return rep;
}

}  // namespace orbicy
