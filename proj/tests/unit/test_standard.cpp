#include <gtest/gtest.h>

#include "../common/corpus.hpp"

#include <cstdlib>

using namespace lie2coh;
using namespace corpus;

TEST(Standard, G2TrivialDimensions)
{
    HemistrictLie2 L = from_leibniz(g2());
    EXPECT_EQ(cohomology_dims(realize(L, trivial_rep(L), 3)), (std::vector<std::size_t>{0, 1, 1, 0, 0}));
}

TEST(Standard, AbelianMatchesCountedShapes)
{
    for (std::size_t a = 0; a <= 2; ++a)
        for (std::size_t b = 0; b <= 2; ++b)
            for (auto [p, q] : {std::pair<std::size_t, std::size_t>{0, 1}, {1, 1}, {0, 2}, {2, 1}}) {
                if (a + b == 0)
                    continue;
                HemistrictLie2 L(a, b);
                Representation2 V(L, TwoTermComplex(p, q));
                auto h = cohomology_dims(realize(L, V, 5));
                for (int n = -1; n <= 5; ++n)
                    EXPECT_EQ(h[static_cast<std::size_t>(n + 1)], abelian_count(a, b, p, q, n))
                        << "a=" << a << " b=" << b << " p=" << p << " q=" << q << " n=" << n;
            }
}

TEST(Standard, DifferentialSquaresToZeroOnWeakSymmetry)
{
    Rng rng(51);
    for (int i = 0; i < 20; ++i) {
        auto [L, V] = random_rep(rng);
        ComplexRealization cr = realize(L, V, 4);
        for (int n = -1; n <= 3; ++n) {
            SparseMatrix img = cr.at(n).ambient_diff * cr.at(n).basis;
            SparseMatrix W = weak_symmetry_constraints(L, V, n + 1);
            EXPECT_TRUE(W.rows() == 0 || (W * img).is_zero());
            EXPECT_TRUE((cr.at(n + 1).ambient_diff * img).is_zero());
        }
    }
}

TEST(Standard, DimensionsAreBasisIndependent)
{
    Rng rng(52);
    for (auto& ex : bundled_examples()) {
        Representation2 W = change_basis(ex.L, ex.V, random_invertible(rng, ex.V.p()), random_invertible(rng, ex.V.q()));
        EXPECT_EQ(cohomology_dims(realize(ex.L, ex.V, 3)), cohomology_dims(realize(ex.L, W, 3))) << ex.name;
    }
}

TEST(Standard, CochainRoundTrip)
{
    Rng rng(53);
    HemistrictLie2 L = from_leibniz(cyclic3());
    Representation2 V = adjoint(L);
    ComplexRealization cr = realize(L, V, 3);
    for (int n = -1; n <= 3; ++n)
        for (int i = 0; i < 5; ++i) {
            StandardCochain w = random_cochain(rng, L, V, n, cr);
            EXPECT_TRUE(check_weak_symmetry(L, V, w).ok());
            Vec amb = cochain_to_ambient(L, V, w);
            EXPECT_EQ(cochain_to_ambient(L, V, cochain_from_ambient(L, V, n, amb)), amb);
        }
}

TEST(Standard, CoboundariesAreDetected)
{
    Rng rng(54);
    HemistrictLie2 L = from_leibniz(c4());
    Representation2 V = adjoint(L);
    ComplexRealization cr = realize(L, V, 3);
    for (int n = 0; n <= 2; ++n) {
        StandardCochain c = random_cochain(rng, L, V, n, cr);
        Vec dc = mul(cr.at(n).ambient_diff, cochain_to_ambient(L, V, c));
        EXPECT_TRUE(is_coboundary(L, V, cochain_from_ambient(L, V, n + 1, dc)));
    }
    // c4 has H^1 = 2 with adjoint coefficients: some cocycle is not exact
    CohomologyResult h = cohomology(cr, 1);
    ASSERT_GT(h.dim, 0u);
    EXPECT_FALSE(is_coboundary(L, V, cochain_from_ambient(L, V, 1, column(h.representatives, 0))));
}

TEST(Standard, AmbientCapFailsFast)
{
    HemistrictLie2 L = from_leibniz(c4());
    StandardOptions tiny;
    tiny.max_ambient = 10;
    EXPECT_THROW(realize(L, adjoint(L), 3, tiny), AmbientTooLarge);
    setenv("LIE2COH_MAX_AMBIENT", "123", 1);
    EXPECT_EQ(options_from_env().max_ambient, 123u);
    setenv("LIE2COH_MAX_AMBIENT", "junk", 1);
    EXPECT_EQ(options_from_env().max_ambient, 50000u);
    unsetenv("LIE2COH_MAX_AMBIENT");
    EXPECT_EQ(options_from_env().max_ambient, 50000u);
}

TEST(Standard, RejectsNonRepresentation)
{
    HemistrictLie2 L = from_leibniz(g2());
    Representation2 V = adjoint(L);
    V.l00(0, 0, 0) += 1;
    EXPECT_THROW(realize(L, V, 2), NotARepresentation);
}

TEST(Functoriality, PushforwardIsCochainMap)
{
    for (auto& ex : bundled_examples()) {
        MinimalModel mm = minimal_model(ex.L, ex.V);
        ComplexRealization cv = realize(ex.L, ex.V, 4), cs = realize(ex.L, mm.vs, 4);
        std::vector<SparseMatrix> P, Q;
        for (int n = -1; n <= 4; ++n) {
            P.push_back(pushforward(mm.phi, ex.L, ex.V, mm.vs, n));
            Q.push_back(pushforward(mm.psi, ex.L, mm.vs, ex.V, n));
            // psi_* phi_* = (psi phi)_* = id
            EXPECT_EQ(Q.back() * P.back(), SparseMatrix::identity(P.back().cols()));
        }
        auto Ws = [&](int n) { return weak_symmetry_constraints(ex.L, mm.vs, n); };
        auto Wv = [&](int n) { return weak_symmetry_constraints(ex.L, ex.V, n); };
        EXPECT_TRUE(check_cochain_map(P, cv, cs, Ws).ok()) << ex.name;
        EXPECT_TRUE(check_cochain_map(Q, cs, cv, Wv).ok()) << ex.name;
    }
}

TEST(Functoriality, PullbackIsContravariant)
{
    auto ms = bundled_morphisms();
    const auto& f = ms[0];
    const auto& g = ms[1];
    Morphism2 gf = compose_morphisms(g.f, f.f);
    for (auto V : {trivial_rep(g.dst), adjoint(g.dst)}) {
        Representation2 gV = pullback_rep(V, g.f, g.src, g.dst);
        for (int n = -1; n <= 3; ++n) {
            EXPECT_EQ(pullback_cochain(gf, f.src, g.dst, V, n),
                      pullback_cochain(f.f, f.src, f.dst, gV, n) * pullback_cochain(g.f, g.src, g.dst, V, n));
            EXPECT_EQ(pullback_cochain(identity_morphism(g.dst), g.dst, g.dst, V, n),
                      SparseMatrix::identity(StandardBasis(g.dst, V, n).size()));
        }
    }
}
