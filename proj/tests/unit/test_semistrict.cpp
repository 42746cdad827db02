#include <gtest/gtest.h>

#include "../common/corpus.hpp"

using namespace lie2coh;
using namespace corpus;

TEST(SkewSymmetrize, InvariantsOnRandomAlgebras)
{
    Rng rng(71);
    for (int i = 0; i < 30; ++i) {
        LeibnizAlgebra g = random_leibniz(rng, 1 + i % 3);
        HemistrictLie2 L = from_leibniz(g);
        SemistrictLie2 S = skew_symmetrize(L);
        EXPECT_TRUE(check_semistrict_invariants(S).ok());
        EXPECT_TRUE(check_l3_closed_form(g, L, S).ok());
    }
}

TEST(SkewSymmetrize, KnownCases)
{
    EXPECT_TRUE(skew_symmetrize(from_leibniz(g2())).l3.is_zero());
    EXPECT_TRUE(skew_symmetrize(from_leibniz(g2())).l2_00.is_zero());
    // the 3-dim example feeds nonzero l2 and h2 into l3
    SemistrictLie2 s3 = skew_symmetrize(from_leibniz(cyclic3()));
    EXPECT_FALSE(s3.l2_00.is_zero());
    EXPECT_FALSE(from_leibniz(cyclic3()).h2.is_zero());
    SemistrictLie2 s4 = skew_symmetrize(from_leibniz(c4()));
    EXPECT_FALSE(s4.l3.is_zero());
    // strict: l2 is the bracket, l3 = 0
    HemistrictLie2 st = load_algebra("strict_lie2.def");
    SemistrictLie2 ss = skew_symmetrize(st);
    EXPECT_EQ(ss.l2_00, st.c00);
    EXPECT_TRUE(ss.l3.is_zero());
}

TEST(SemistrictComplex, SquaresToZeroAndMatchesStandard)
{
    for (auto& ex : bundled_examples()) {
        if (!l_alpha_vanishes(ex.V) || !is_injective(ex.L))
            continue;
        ComplexRealization A = semistrict_complex(skew_symmetrize(ex.L), induced_rep(ex.L, ex.V), 3);
        for (int n = -1; n < 3; ++n)
            EXPECT_TRUE((A.at(n + 1).ambient_diff * A.at(n).ambient_diff).is_zero());
        EXPECT_EQ(cohomology_dims(A), cohomology_dims(realize(ex.L, ex.V, 3))) << ex.name;
    }
}

TEST(Contraction, SideConditionsBeforeAndAfterPerturbation)
{
    for (auto g : {g2(), cyclic3(), c4()}) {
        HemistrictLie2 L = from_leibniz(g);
        for (auto V : {trivial_rep(L), adjoint(L)}) {
            AdaptedPair ap = adapt(L, V);
            Contraction base = base_contraction(ap, 3);
            EXPECT_TRUE(check_contraction(base).ok());
            SemistrictLie2 S = skew_symmetrize(ap.L);
            InducedSemistrictRep R = induced_rep(ap.L, ap.V);
            std::vector<SparseMatrix> rho;
            for (int n = -1; n <= 3; ++n)
                rho.push_back(semistrict_parts(S, R, n).rho);
            Contraction pt = perturb(base, rho);
            EXPECT_TRUE(check_contraction(pt).ok()) << check_contraction(pt);
            LieSplitting s = lie_quotient(ap.L);
            LieRep2 lr = descended_rep(s, ap.V);
            for (int n = -1; n <= 3; ++n)
                EXPECT_EQ(pt.dB(n), ce_differential(s.lie, lr, n)) << "n=" << n;
        }
    }
}

TEST(Contraction, DamagedHomotopyIsCaught)
{
    HemistrictLie2 L = from_leibniz(g2());
    Contraction c = base_contraction(adapt(L, adjoint(L)), 2);
    Contraction bad = c;
    for (auto& h : bad.h)
        if (h.rows() > 0 && h.cols() > 0) {
            h.add(0, 0, Rational(1));
            h.finalize();
            break;
        }
    EXPECT_FALSE(check_contraction(bad).ok());
}

TEST(CohomologyComparison, G2AndAdjoints)
{
    HemistrictLie2 L = from_leibniz(g2());
    MainTheoremResult r = verify_main_theorem(L, trivial_rep(L), 3);
    const std::vector<std::size_t> want{0, 1, 1, 0, 0};
    EXPECT_EQ(r.standard_dims, want);
    EXPECT_EQ(r.semistrict_dims, want);
    EXPECT_EQ(r.ce_dims, want);
    EXPECT_TRUE(r.part1_checked);
    EXPECT_TRUE(r.ok());
    for (auto g : {g2(), cyclic3(), c4()}) {
        HemistrictLie2 Lg = from_leibniz(g);
        EXPECT_TRUE(verify_main_theorem(Lg, adjoint(Lg), 3).ok());
    }
}

TEST(CohomologyComparison, HypothesesAreEnforced)
{
    HemistrictLie2 ni = load_algebra("non-injective.def");
    try {
        verify_main_theorem(ni, trivial_rep(ni), 2);
        FAIL();
    } catch (const HypothesisViolated& e) {
        EXPECT_EQ(e.which(), "injectivity");
    }
    DefinitionFile df = load("lalpha.def");
    HemistrictLie2 la = build_algebra(df);
    try {
        verify_main_theorem(la, build_representation(df, *df.representation, la), 2);
        FAIL();
    } catch (const HypothesisViolated& e) {
        EXPECT_EQ(e.which(), "l_alpha_zero");
    }
}
