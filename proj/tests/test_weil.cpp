#include <gtest/gtest.h>

#include "oracles.hpp"
#include "orbicy/arith/stringy.hpp"
#include "orbicy/presets/records.hpp"
#include "orbicy/presets/zeta.hpp"
#include "orbicy/weil/render.hpp"
#include "orbicy/weil/resultant.hpp"

using namespace orbicy;
using namespace orbicy::test;

namespace {

ZetaFactorSet linear(const WeilMonomial& m, long long k = 1) { return ZetaFactorSet::factor(m, k); }

ZetaFactorSet y6(int n) {
    std::vector<ZTable> t = {ztable_preset("zeta-s6-18")};
    while (int(t.size()) < n) t.push_back(ztable_preset("zeta-e6"));
    return orbifold_zeta(t);
}

ZetaFactorSet y22(const std::string& torsion) {
    return orbifold_zeta({ztable_preset("zeta-sixlines"), ztable_preset("zeta-e2:" + torsion)});
}

std::vector<ParamPoly> ints(std::initializer_list<int> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST(Registry, BuiltinsAndConflicts) {
    auto& reg = WeilRegistry::instance();
    auto a = reg.id("alpha_q");
    EXPECT_EQ(reg.at(reg.conjugate(a)).name, "alphabar_q");
    EXPECT_EQ(reg.conjugate(reg.conjugate(a)), a);
    EXPECT_EQ(reg.at(reg.id("gamma_q")).text, "y_q");
    EXPECT_TRUE(reg.at(reg.id("c_q")).declared_self_conjugate);
    EXPECT_EQ(reg.at(reg.id("mu5")).order, 5);
    EXPECT_THROW(reg.id("no_such_symbol"), RegistryConflict);
    WeilSymbol clash = reg.at(a);
    clash.weight = 2;
    EXPECT_THROW(reg.add(clash), RegistryConflict);
    EXPECT_EQ(reg.add(reg.at(a)), a);
    EXPECT_THROW(reg.add({"heavy", "heavy", 1, std::nullopt, std::nullopt, std::nullopt, "h", "h"}), RegistryConflict);
}

TEST(WeilMonomial, Normalization) {
    EXPECT_EQ(wm(0, {{"alpha_q", 1}, {"alphabar_q", 1}}), wm(1));
    EXPECT_EQ(wm(0, {{"beta_q", 2}, {"betabar_q", 1}}), wm(2, {{"beta_q", 1}}));
    EXPECT_EQ(wm(0, {{"gamma_q", 2}}), wm(0));
    EXPECT_EQ(wm(0, {{"mu3", 4}}), wm(0, {{"mu3", 1}}));
    EXPECT_EQ(wm(0, {{"mu3", 1}}).conj(), wm(0, {{"mu3", 2}}));
    EXPECT_EQ(wm(1, {{"pi", 2}}).conj(), wm(1, {{"pibar", 2}}));
    EXPECT_EQ(wm(0, {{"alpha_q", 2}, {"beta_q", 1}}).weight(), Rational(4));
    EXPECT_EQ(wm(1, {{"gamma_q", 1}}).weight(), Rational(2));
}

TEST(Tensor, SignRuleExamples) {
    auto one = linear(wm(0)), inv1 = linear(wm(0), -1), invq = linear(wm(1), -1);
    EXPECT_EQ(zf_tensor(inv1, invq), linear(wm(1)));
    EXPECT_EQ(zf_tensor(one, linear(wm(0, {{"delta_q", 1}}))), linear(wm(0, {{"delta_q", 1}})));
    // (1 - alpha T)(1 - alphabar T) (x) 1/(1 - qT) = 1 / ((1 - q alpha T)(1 - q alphabar T))
    ZetaFactorSet e;
    e.add(wm(0, {{"alpha_q", 1}}), 1);
    e.add(wm(0, {{"alphabar_q", 1}}), 1);
    ZetaFactorSet expected;
    expected.add(wm(1, {{"alpha_q", 1}}), -1);
    expected.add(wm(1, {{"alphabar_q", 1}}), -1);
    EXPECT_EQ(zf_tensor(e, invq), expected);
    // (1 - alpha T) (x) (1 - alphabar T) = 1 - qT
    EXPECT_EQ(zf_tensor(linear(wm(0, {{"alpha_q", 1}})), linear(wm(0, {{"alphabar_q", 1}}))), linear(wm(1)));
}

TEST(Tensor, ResultantExamples) {
    EXPECT_EQ(poly_tensor_resultant(ints({1, -2}), ints({1, -3})), ints({1, -6}));
    // (1 - T)(1 - 2T) (x) (1 - 3T) = (1 - 3T)(1 - 6T)
    EXPECT_EQ(poly_tensor_resultant(ints({1, -3, 2}), ints({1, -3})), ints({1, -9, 18}));
    EXPECT_EQ(poly_tensor_resultant(ints({1}), ints({1, -5, 7})), ints({1}));
    EXPECT_THROW(poly_tensor_resultant(ints({2, 1}), ints({1, 1})), NonUnitConstantTerm);
}

TEST(Tensor, ResultantOracle) {
    Rng rng(11);
    auto values = integral_assignment();
    for (int trial = 0; trial < 100; ++trial) {
        auto f = random_factor_set(rng, 4, false), g = random_factor_set(rng, 4, false);
        auto fe = zf_expand(f, values).first, ge = zf_expand(g, values).first;
        EXPECT_EQ(poly_tensor_resultant(fe, ge), zf_expand(zf_tensor(f, g), values).first) << "trial " << trial;
    }
}

TEST(Tensor, Laws) {
    Rng rng(5);
    auto identity = linear(wm(0));
    for (int trial = 0; trial < 200; ++trial) {
        auto f = random_factor_set(rng, 4, true, 2), g = random_factor_set(rng, 4, true, 3),
             h = random_factor_set(rng, 3, true);
        EXPECT_EQ(zf_tensor(f, g), zf_tensor(g, f));
        EXPECT_EQ(zf_tensor(zf_tensor(f, g), h), zf_tensor(f, zf_tensor(g, h)));
        EXPECT_EQ(zf_tensor(identity, f), f);
        auto fn = random_factor_set(rng, 4, false), gn = random_factor_set(rng, 4, false);
        EXPECT_EQ(zf_tensor(fn, gn).signed_degree(), fn.signed_degree() * gn.signed_degree());
    }
}

TEST(Tensor, ConjugationClosurePreserved) {
    Rng rng(9);
    for (int trial = 0; trial < 200; ++trial) {
        auto f = random_closed_factor_set(rng, 3, 2), g = random_closed_factor_set(rng, 3);
        ASSERT_TRUE(f.is_conjugation_closed());
        EXPECT_TRUE(zf_tensor(f, g).is_conjugation_closed());
        EXPECT_TRUE(zf_scale(f, make_rational(1, 3)).is_conjugation_closed());
        EXPECT_TRUE(zf_pow(f, -2).is_conjugation_closed());
        EXPECT_TRUE(zf_integral_filter(f).is_conjugation_closed());
    }
}

TEST(FactorSet, ScalePowFilter) {
    auto f = linear(wm(0, {{"delta_q", 1}}));
    auto s = zf_scale(f, make_rational(1, 2));
    EXPECT_EQ(s.denom(), 2);
    EXPECT_EQ(s.mult(WeilMonomial::named(make_rational(1, 2), {{"delta_q", 1}})), 1);
    EXPECT_TRUE(zf_integral_filter(s).is_one());
    EXPECT_EQ(zf_integral_filter(zf_scale(f, Rational(1))), linear(wm(1, {{"delta_q", 1}})));
    EXPECT_THROW(zf_scale(f, Rational(-1)), PreconditionViolated);
    EXPECT_EQ(zf_pow(f, -3).mult(wm(0, {{"delta_q", 1}})), -3);
    EXPECT_TRUE(zf_pow(f, 0).is_one());
    auto twice = zf_integral_filter(zf_integral_filter(s * f));
    EXPECT_EQ(twice, zf_integral_filter(s * f));
    EXPECT_EQ(linear(wm(0), -1).euler_characteristic(), 1);
}

TEST(OrbifoldZeta, Preconditions) {
    EXPECT_THROW(orbifold_zeta({ztable_preset("zeta-e6")}), TooFewFactors);
    EXPECT_THROW(orbifold_zeta({ztable_preset("zeta-e6"), ztable_preset("zeta-e2:all-rational")}), InvalidRecord);
}

TEST(OrbifoldZeta, SixLinesTimesE2) {
    for (std::string torsion : {"all-rational", "two-rational", "one-rational"}) {
        auto z = y22(torsion);
        EXPECT_EQ(z, printed_y22(torsion)) << torsion;
        EXPECT_EQ(z.euler_characteristic(), 108) << torsion;
        EXPECT_TRUE(z.is_conjugation_closed()) << torsion;
        EXPECT_TRUE(satisfies_poincare_duality(z, 3)) << torsion;
    }
}

TEST(OrbifoldZeta, Surface18TimesE6) {
    std::vector<long long> euler = {204, 2088, 20832};
    for (int n = 2; n <= 4; ++n) {
        auto z = y6(n);
        EXPECT_EQ(z, printed_y6n(n)) << n;
        EXPECT_EQ(z.euler_characteristic(), euler[n - 2]) << n;
        std::vector<Factor> factors = {std::get<K3Record>(record_preset("s6-18").record)};
        while (int(factors.size()) < n) factors.push_back(EllipticRecord::standard(6));
        EXPECT_EQ(ParamPoly(Rational(z.euler_characteristic())), stringy_euler(factors, 6)) << n;
        EXPECT_TRUE(z.is_conjugation_closed()) << n;
        EXPECT_TRUE(satisfies_poincare_duality(z, n + 1)) << n;
    }
}

TEST(OrbifoldZeta, PureEllipticAndGeneric) {
    for (int n = 2; n <= 4; ++n) {
        auto z = orbifold_zeta(std::vector<ZTable>(n, ztable_preset("zeta-e6")));
        EXPECT_TRUE(satisfies_poincare_duality(z, n)) << n;
        std::vector<Factor> f(n, EllipticRecord::standard(6));
        EXPECT_EQ(ParamPoly(Rational(z.euler_characteristic())), stringy_euler(f, 6)) << n;
    }
    auto g = orbifold_zeta({ztable_preset("zeta-s2-generic:cycles=2+3:genus=1"), ztable_preset("zeta-e2:all-rational")});
    EXPECT_TRUE(satisfies_poincare_duality(g, 3));
    EXPECT_TRUE(g.is_conjugation_closed());
}

TEST(ZTablePresets, Errors) {
    EXPECT_THROW(ztable_preset("zeta-e2"), MissingFrobeniusData);
    EXPECT_THROW(ztable_preset("zeta-s2-generic"), MissingFrobeniusData);
    EXPECT_THROW(ztable_preset("zeta-s2-generic:genus=2"), MissingFrobeniusData);
    EXPECT_THROW(ztable_preset("zeta-s2-generic:cycles=2+x"), UsageError);
    EXPECT_THROW(ztable_preset("zeta-s2-generic:cycles=15+6"), OutOfRange);
    EXPECT_THROW(ztable_preset("zeta-e2:none-rational"), UnknownPreset);
    EXPECT_THROW(ztable_preset("zeta-k3"), UnknownPreset);
    for (auto& p : ztable_presets()) {
        if (p.name == "zeta-s2-generic") continue;
        EXPECT_TRUE(ztable_preset(p.name).is_conjugation_closed()) << p.name;
    }
}

TEST(Render, Examples) {
    ZetaFactorSet f;
    f.add(wm(0), -1);
    f.add(wm(1), -103);
    EXPECT_EQ(zf_render(f, ZetaStyle::linear), "1 / (1 - T)(1 - qT)^103");
    ZetaFactorSet g;
    g.add(wm(1, {{"delta_q", 1}}), 1);
    g.add(wm(2), -1);
    EXPECT_EQ(zf_render(g, ZetaStyle::linear), "(1 - δ_q q T) / (1 - q^2T)");
    EXPECT_THROW(zf_render(g, ZetaStyle::paired), RenderError);
    ZetaFactorSet e;
    e.add(wm(0, {{"alpha_q", 1}}), 1);
    e.add(wm(0, {{"alphabar_q", 1}}), 1);
    EXPECT_EQ(zf_render(e, ZetaStyle::paired), "(1 - a_q T + qT^2)");
    EXPECT_EQ(zf_render(ZetaFactorSet(), ZetaStyle::linear), "1");
    auto mu = linear(wm(1, {{"mu2", 1}}), -9);
    EXPECT_EQ(zf_render(mu, ZetaStyle::linear), "1 / (1 + qT)^9");
}

TEST(Render, PrintedTables) {
    EXPECT_EQ(zf_render(y22("one-rational"), ZetaStyle::paired), 
              "(1 - a_q π^2 y_q T + π^4 y_q^2 q T^2)(1 - a_q π̄^2 y_q T + π̄^4 y_q^2 q T^2)"
              "(1 - a_q y_q q T + y_q^2 q^3 T^2) / (1 - T)(1 - qT)^38(1 + qT + q^2T^2)^9(1 - q^2T)^38"
              "(1 + q^2T + q^4T^2)^9(1 - q^3T)");
    EXPECT_EQ(zf_render(y6(2), ZetaStyle::paired), 
              "(1 - α_q β_q T)(1 - ᾱ_q β̄_q T)(1 - δ_q q T)(1 - δ̄_q q T) / "
              "(1 - T)(1 - qT)^103(1 - q^2T)^103(1 - q^3T)");
    auto latex = zf_render(y6(3), ZetaStyle::latex);
    EXPECT_EQ(latex.rfind("\\frac{1}{", 0), 0u);
    EXPECT_NE(latex.find("\\left(1-q^{2}T\\right)^{1402}"), std::string::npos);
    EXPECT_NE(latex.find("% declared self-conjugate: c_q"), std::string::npos);
}
