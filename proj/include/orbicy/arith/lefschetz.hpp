#pragma once

#include "orbicy/algebra/cyclotomic.hpp"
#include "orbicy/geometry/records.hpp"

namespace orbicy {

// Alternating trace of (gamma^k)^* on H^*(S): 2 from H^0 + H^4, then the H^2 eigenspaces.
inline ParamPoly lefschetz_top(const K3Record& rec, int k) {
    int d = rec.d();
    if (k < 1 || k >= d) throw OutOfRange("power must lie in 1.." + std::to_string(d - 1));
    auto dims = rec.eigendims();
    CyclotomicPoly sum(d, ParamPoly(2));
    for (int j = 0; j < d; ++j) {
        auto z = CyclotomicNumber::zeta_pow(d, static_cast<long long>(j) * k);
        sum = sum + CyclotomicPoly(d, dims[j] * z.c0(), dims[j] * z.c1());
    }
    if (!sum.is_rational()) throw PreconditionViolated("topological trace is not rational");
    return sum.c0();
}

// 1 / ((1 - z^w1)(1 - z^w2)) for an isolated fixed point with local weights (w1, w2).
inline CyclotomicNumber lefschetz_hol_point(int w1, int w2, int d) {
    check_order(d);
    if (((w1 % d) + d) % d == 0 || ((w2 % d) + d) % d == 0)
        throw SingularLinearization("weight divisible by the order: the point is not isolated");
    CyclotomicNumber one(d, 1);
    return (one / ((one - CyclotomicNumber::zeta_pow(d, w1)) * (one - CyclotomicNumber::zeta_pow(d, w2))));
}

namespace detail {

inline CyclotomicNumber normal_root(int zeta_exp, int d) {
    check_order(d);
    if (((zeta_exp % d) + d) % d == 0) throw SingularLinearization("normal eigenvalue equals 1");
    return CyclotomicNumber::zeta_pow(d, zeta_exp);
}

}  // namespace detail

// (1 - g)/(1 - z) - z C^2/(1 - z)^2 for a fixed curve of genus g and self-intersection C^2.
inline CyclotomicNumber lefschetz_hol_curve(const Rational& genus, const Rational& selfint, int zeta_exp, int d) {
    if (selfint != 2 * genus - 2)
        throw InvalidSelfIntersection("a fixed curve of genus " + to_string(genus) + " on a K3 surface has C^2 = " +
                                      to_string(2 * genus - 2) + ", got " + to_string(selfint));
    auto z = detail::normal_root(zeta_exp, d);
    CyclotomicNumber one(d, 1), omz = one - z;
    return (1 - genus) * (one / omz) - selfint * (z / (omz * omz));
}

// Same value for a symbolic genus, with C^2 = 2g - 2: (1 - g)(1 + z)/(1 - z)^2.
inline CyclotomicPoly lefschetz_hol_curve(const ParamPoly& genus, int zeta_exp, int d) {
    auto z = detail::normal_root(zeta_exp, d);
    CyclotomicNumber one(d, 1);
    auto c = (one + z) / ((one - z) * (one - z));
    ParamPoly s = 1 - genus;
    return CyclotomicPoly(d, s * c.c0(), s * c.c1());
}

// Fixed-point side of the holomorphic Lefschetz formula for gamma_6: ell - 1 rational
// curves and D, p34 points with weights (3,4) and p25 points with weights (2,5).
inline CyclotomicPoly hol_lefschetz_fixed_sum(const K3Record& rec) {
    if (rec.d() != 6) throw InvalidRecord("holomorphic Lefschetz data is defined for order 6 records");
    auto scaled = [](const ParamPoly& s, const CyclotomicNumber& c) {
        return CyclotomicPoly(6, s * c.c0(), s * c.c1());
    };
    CyclotomicPoly sum = scaled(rec.get("ell") - 1, lefschetz_hol_curve(Rational(0), Rational(-2), 1, 6));
    sum = sum + lefschetz_hol_curve(rec.get("gD"), 1, 6);
    sum = sum + scaled(rec.get("p34"), lefschetz_hol_point(3, 4, 6));
    sum = sum + scaled(rec.get("p25"), lefschetz_hol_point(2, 5, 6));
    return sum;
}

// Trace side: 1 + z^5 from H^{0,0} and H^{0,2}.
inline CyclotomicNumber hol_lefschetz_trace() { return CyclotomicNumber(6, 1) + CyclotomicNumber::zeta_pow(6, 5); }

// 3 + 3 ell - 3 g(D) - p34/2 - p25 as a polynomial: three times the zeta coefficient of
// (fixed sum - trace); the constant coefficient is -2 times the same quantity.
inline ParamPoly hol_relation_residual(const K3Record& rec) {
    auto trace = hol_lefschetz_trace();
    CyclotomicPoly diff = hol_lefschetz_fixed_sum(rec) - CyclotomicPoly(6, trace.c0(), trace.c1());
    return 3 * diff.c1();
}

inline Rational hol_relation_check(const K3Record& rec) {
    if (rec.d() != 6) throw InvalidRecord("holomorphic relation check needs an order 6 record");
    ParamPoly res = hol_relation_residual(rec);
    if (!res.is_constant()) throw InvalidRecord("holomorphic relation check needs numeric ell, gD, p25, p34");
    return res.constant_term();
}

}  // namespace orbicy
