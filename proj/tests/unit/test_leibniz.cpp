#include <gtest/gtest.h>

#include "../common/corpus.hpp"

using namespace lie2coh;
using namespace corpus;

static LieAlgebra sl2()
{
    LieAlgebra g(3);  // e, f, h
    g.c(0, 1, 2) = 1;
    g.c(1, 0, 2) = -1;
    g.c(2, 0, 0) = 2;
    g.c(0, 2, 0) = -2;
    g.c(2, 1, 1) = -2;
    g.c(1, 2, 1) = 2;
    return g;
}

// dim of span{[x,y]} by dense elimination
static std::size_t derived_dim(const LeibnizAlgebra& g)
{
    std::vector<std::vector<mpq_class>> rows;
    for (std::size_t x = 0; x < g.dim; ++x)
        for (std::size_t y = 0; y < g.dim; ++y) {
            Vec b = g.bracket(g.e(x), g.e(y));
            rows.emplace_back(b.begin(), b.end());
        }
    return dense_rank(rows);
}

TEST(Leibniz, BundledAlgebrasSatisfyTheRule)
{
    for (auto g : {g2(), cyclic3(), c4()})
        EXPECT_TRUE(check_leibniz(g).ok());
    EXPECT_TRUE(check_lie(sl2()).ok());
    EXPECT_TRUE(check_leibniz(sl2()).ok());
}

TEST(Leibniz, ViolationNamesTheTriple)
{
    LeibnizAlgebra g(2);
    g.c(0, 0, 1) = 1;
    g.c(1, 0, 0) = 1;
    Report r = check_leibniz(g);
    ASSERT_FALSE(r.ok());
    EXPECT_EQ(r.violations().front().equation, "leibniz");
    EXPECT_EQ(r.violations().front().args.size(), 3u);
}

TEST(Leibniz, KernelIsSpannedBySquares)
{
    EXPECT_EQ(leibniz_kernel(g2()).dim(), 1u);
    EXPECT_EQ(leibniz_kernel(cyclic3()).dim(), 2u);
    EXPECT_EQ(leibniz_kernel(c4()).dim(), 1u);
    EXPECT_EQ(leibniz_kernel(sl2()).dim(), 0u);
    Rng rng(21);
    for (int i = 0; i < 40; ++i) {
        LeibnizAlgebra g = random_leibniz(rng, 1 + i % 3);
        SpanBasis k = leibniz_kernel(g);
        for (std::size_t x = 0; x < g.dim; ++x)
            EXPECT_TRUE(k.contains(g.bracket(g.e(x), g.e(x))));
        // K is a two-sided ideal acting trivially from the left
        for (std::size_t j = 0; j < k.dim(); ++j)
            for (std::size_t y = 0; y < g.dim; ++y)
                EXPECT_TRUE(is_zero(g.bracket(k.basis.column(j), g.e(y))));
    }
}

TEST(Leibniz, QuotientByKernelIsLie)
{
    Rng rng(22);
    for (int i = 0; i < 40; ++i) {
        LeibnizAlgebra g = random_leibniz(rng, 1 + i % 3);
        LieQuotient q = quotient_lie(g);
        EXPECT_TRUE(check_lie(q.lie).ok());
        EXPECT_EQ(q.lie.dim + leibniz_kernel(g).dim(), g.dim);
        EXPECT_EQ(q.projection * q.section, Matrix::identity(q.lie.dim));
    }
}

TEST(Leibniz, ModulesSatisfyAxioms)
{
    for (auto g : {g2(), cyclic3(), c4()}) {
        EXPECT_TRUE(check_module(g, adjoint_module(g)).ok());
        EXPECT_TRUE(check_module(g, trivial_module(g, 2)).ok());
    }
    // sl2 acting on its adjoint, as a symmetric module
    LieAlgebra s = sl2();
    EXPECT_TRUE(check_module(s, symmetric_module(s.c)).ok());
}

TEST(Leibniz, LpDifferentialSquaresToZero)
{
    Rng rng(23);
    for (int i = 0; i < 20; ++i) {
        LeibnizAlgebra g = random_leibniz(rng, 1 + i % 3);
        LeibnizModule m = adjoint_module(g);
        for (std::size_t p = 0; p < 3; ++p)
            EXPECT_TRUE((lp_differential(g, m, p + 1) * lp_differential(g, m, p)).is_zero());
    }
}

TEST(Leibniz, LpLowDegreesWithTrivialCoefficients)
{
    Rng rng(24);
    for (int i = 0; i < 30; ++i) {
        LeibnizAlgebra g = random_leibniz(rng, 1 + i % 3);
        auto h = lp_cohomology(g, trivial_module(g), 1);
        EXPECT_EQ(h[0], 1u);
        EXPECT_EQ(h[1], g.dim - derived_dim(g));
    }
}

TEST(Leibniz, LpOfAbelianCountsTuples)
{
    for (std::size_t n = 1; n <= 3; ++n) {
        LeibnizAlgebra g(n);
        auto h = lp_cohomology(g, trivial_module(g), 3);
        for (std::size_t p = 0; p <= 3; ++p)
            EXPECT_EQ(h[p], all_tuples(n, p).size());
    }
}

TEST(Leibniz, CeOfAbelianCountsSubsets)
{
    for (std::size_t n = 1; n <= 4; ++n) {
        LieAlgebra g(n);
        LieRep2 triv(n, TwoTermComplex(0, 1));
        auto h = ce_cohomology(g, triv, 4);
        EXPECT_EQ(h[0], 0u);
        for (std::size_t k = 0; k <= 4; ++k)
            EXPECT_EQ(h[k + 1], all_subsets(n, k).size());
    }
}

TEST(Leibniz, CeEulerCharacteristicAndLowDegrees)
{
    LieAlgebra s = sl2();
    LieRep2 triv(3, TwoTermComplex(0, 1));
    for (int n = -1; n < 3; ++n)
        EXPECT_TRUE((ce_differential(s, triv, n + 1) * ce_differential(s, triv, n)).is_zero());
    auto h = ce_cohomology(s, triv, 3);
    long chi = 0;
    for (std::size_t k = 0; k < h.size(); ++k)
        chi += (k % 2 ? 1 : -1) * static_cast<long>(h[k]);  // index 0 is n = -1
    EXPECT_EQ(chi, 0);  // sum (-1)^n C(3, n)
    EXPECT_EQ(h[1], 1u);
    EXPECT_EQ(h[2], 3 - derived_dim(s));
}

TEST(Leibniz, CeRejectsNonRepresentation)
{
    LieAlgebra s = sl2();
    LieRep2 bad(3, TwoTermComplex(0, 1));
    bad.l0(0, 0, 0) = 1;
    EXPECT_THROW(ce_differential(s, bad, 0), NotARepresentation);
}
