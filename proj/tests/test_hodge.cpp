#include <gtest/gtest.h>

#include "oracles.hpp"
#include "orbicy/hodge/recurrence.hpp"
#include "orbicy/hodge/render.hpp"
#include "orbicy/presets/records.hpp"

using namespace orbicy;
using namespace orbicy::test;

namespace {

FTable elliptic(int d) { return ftable_elliptic(EllipticRecord::standard(d)); }
FTable k3(const std::string& preset) { return ftable_k3(std::get<K3Record>(record_preset(preset).record)); }

std::vector<FTable> repeat(const FTable& t, int n) { return std::vector<FTable>(n, t); }

}  // namespace

TEST(SectorSum, PrintedBases) {
    EXPECT_EQ(sector_sum(elliptic(2), 0), 1 + PuiseuxPoly::xy(1) + 4 * PuiseuxPoly::xy(1, 2));
    EXPECT_EQ(sector_sum(elliptic(6), 3), PuiseuxPoly::xy(2, 6) + PuiseuxPoly::xy(4, 6));
    EXPECT_EQ(sector_sum(elliptic(6), 2), PuiseuxPoly::xy(1, 2));
    EXPECT_EQ(sector_sum(elliptic(6), 5), PuiseuxPoly::Y());
    EXPECT_THROW(sector_sum(elliptic(6), 6), OutOfRange);
}

TEST(OrbifoldPoincare, ClosedForms) {
    for (int d : {2, 3, 4, 6})
        for (unsigned n = 2; n <= 5; ++n) {
            auto p = orbifold_poincare(repeat(elliptic(d), int(n)));
            EXPECT_EQ(p, closed_form(d, n)) << "d=" << d << " n=" << n;
            EXPECT_EQ(p.integral_part(), closed_form(d, n).integral_part()) << "d=" << d << " n=" << n;
        }
}

TEST(OrbifoldPoincare, Preconditions) {
    EXPECT_THROW(orbifold_poincare({elliptic(6)}), TooFewFactors);
    EXPECT_THROW(orbifold_poincare({elliptic(6), elliptic(3)}), InvalidRecord);
    FTable zero(6, 1);
    EXPECT_TRUE(orbifold_poincare({zero, zero}).is_zero());
}

TEST(HodgeDiamond, AbelianSurfaceQuotientIsK3) {
    auto hd = hodge_diamond(repeat(elliptic(3), 2));
    EXPECT_EQ(hd.dim, 2);
    EXPECT_EQ(hd(1, 1), ParamPoly(20));
    EXPECT_EQ(hd(1, 0), ParamPoly(0));
    EXPECT_EQ(hd(2, 0), ParamPoly(1));
    EXPECT_EQ(euler_characteristic(hd), ParamPoly(24));
}

TEST(HodgeDiamond, TripleEllipticInvolution) {
    auto hd = hodge_diamond(repeat(elliptic(2), 3));
    EXPECT_EQ(hd(1, 1), ParamPoly(51));
    EXPECT_EQ(hd(2, 1), ParamPoly(3));
    EXPECT_EQ(euler_characteristic(hd), ParamPoly(96));
}

TEST(HodgeDiamond, BorceaVoisinSymbolic) {
    auto hd = hodge_diamond({k3("k3-generic-2"), elliptic(2)});
    auto r = sym("r"), m = sym("m"), N = sym("N"), Np = sym("Nprime");
    EXPECT_EQ(hd(1, 1), 1 + r + 4 * N);
    EXPECT_EQ(hd(2, 1), m - 1 + 4 * Np);
    std::map<std::string, ParamPoly> subs = {{"r", 10 + N - Np}, {"m", 12 - N + Np}};
    EXPECT_EQ(hd(1, 1).substitute(subs), 11 + 5 * N - Np);
    EXPECT_EQ(hd(2, 1).substitute(subs), 11 + 5 * Np - N);
    EXPECT_TRUE(hodge_symmetric(hd));
    EXPECT_TRUE(calabi_yau_edges(hd));
}

TEST(HodgeDiamond, SixLinesBorceaVoisin) {
    // r = 19, m = 3, N = 9, N' = 0
    auto hd = hodge_diamond({k3("k3-sixlines"), elliptic(2)});
    EXPECT_EQ(hd(1, 1), ParamPoly(56));
    EXPECT_EQ(hd(2, 1), ParamPoly(2));
    EXPECT_EQ(euler_characteristic(hd), ParamPoly(108));
}

TEST(HodgeDiamond, SymmetryAndCalabiYauEdges) {
    for (int d : {2, 3, 4, 6})
        for (int n = 2; n <= 4; ++n) {
            auto pure = hodge_diamond(repeat(elliptic(d), n));
            EXPECT_TRUE(hodge_symmetric(pure)) << d << " " << n;
            EXPECT_TRUE(calabi_yau_edges(pure)) << d << " " << n;
            std::vector<FTable> mixed = {k3("k3-generic-" + std::to_string(d))};
            for (int i = 1; i < n; ++i) mixed.push_back(elliptic(d));
            auto hd = hodge_diamond(mixed);
            EXPECT_TRUE(hodge_symmetric(hd)) << d << " " << n;
            EXPECT_TRUE(calabi_yau_edges(hd)) << d << " " << n;
        }
    for (int n = 2; n <= 4; ++n) {
        std::vector<FTable> t = {k3("s6-18")};
        for (int i = 1; i < n; ++i) t.push_back(elliptic(6));
        auto hd = hodge_diamond(t);
        EXPECT_TRUE(hd.is_numeric());
        EXPECT_TRUE(hodge_symmetric(hd));
        EXPECT_TRUE(calabi_yau_edges(hd));
    }
}

TEST(HodgeDiamond, EulerNumbersOfSurface18Products) {
    std::vector<int> expected = {204, 2088, 20832};
    for (int n = 2; n <= 4; ++n) {
        std::vector<FTable> t = {k3("s6-18")};
        for (int i = 1; i < n; ++i) t.push_back(elliptic(6));
        EXPECT_EQ(euler_characteristic(hodge_diamond(t)), ParamPoly(expected[n - 2])) << n;
    }
}

TEST(Recurrence, PureElliptic) {
    for (int d : {3, 4, 6}) {
        auto rep = recurrence_check(d, std::nullopt, 7);
        EXPECT_TRUE(rep.holds()) << d;
        EXPECT_EQ(rep.values.front(), ParamPoly(24)) << d;
    }
    auto rep4 = recurrence_check(4, std::nullopt, 5);
    std::vector<int> expected = {24, 180, 1644, 14760};
    for (std::size_t i = 0; i < expected.size(); ++i) EXPECT_EQ(rep4.values[i], ParamPoly(expected[i]));
}

TEST(Recurrence, Surface18) {
    auto rep = recurrence_check(6, std::get<K3Record>(record_preset("s6-18").record), 7);
    EXPECT_TRUE(rep.holds());
    std::vector<int> expected = {24, 204, 2088, 20832};
    for (std::size_t i = 0; i < expected.size(); ++i) EXPECT_EQ(rep.values[i], ParamPoly(expected[i]));
    EXPECT_THROW(recurrence_check(6, std::nullopt, 4), PreconditionViolated);
    EXPECT_THROW(euler_recurrence(2), OutOfRange);
}

TEST(Recurrence, SymbolicK3) {
    for (int d : {3, 4}) {
        auto rep = recurrence_check(d, K3Record(d, Mode::symbolic, {}), 6);
        EXPECT_TRUE(rep.holds()) << d;
    }
}

TEST(InvariantDimension, CharacterSumOracle) {
    Rng rng(34);
    for (int trial = 0; trial < 200; ++trial) {
        int d = std::vector<int>{2, 3, 4, 6}[rng.uniform(0, 3)];
        int n = rng.uniform(1, 4);
        std::vector<std::vector<int>> dims(n, std::vector<int>(d));
        std::vector<std::vector<ParamPoly>> pdims(n, std::vector<ParamPoly>(d));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < d; ++j) pdims[i][j] = dims[i][j] = rng.uniform(0, 3);
        EXPECT_EQ(invariant_dimension(pdims), ParamPoly(invariant_dimension_by_characters(dims, d)))
            << "trial " << trial;
    }
}

TEST(Render, TextDiamondLayout) {
    auto hd = hodge_diamond(repeat(elliptic(3), 2));
    EXPECT_EQ(diamond_text(hd), "         1\n     0       0\n 1      20       1\n     0       0\n         1\n");
    auto latex = diamond_latex(hd);
    EXPECT_EQ(latex.rfind("\\begin{array}{ccccc}", 0), 0u);
    EXPECT_NE(latex.find(" & 20 & "), std::string::npos);
}
