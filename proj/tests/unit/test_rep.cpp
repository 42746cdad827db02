#include <gtest/gtest.h>

#include "../common/corpus.hpp"

using namespace lie2coh;
using namespace corpus;

TEST(Representation, BundledRepresentationsAreValid)
{
    for (auto& ex : bundled_examples())
        EXPECT_TRUE(check_representation(ex.V, ex.L).ok()) << ex.name;
}

TEST(Representation, ChangeOfBasisPreservesValidity)
{
    Rng rng(41);
    for (int i = 0; i < 40; ++i) {
        auto [L, V] = random_rep(rng);
        EXPECT_TRUE(check_representation(V, L).ok()) << check_representation(V, L);
    }
}

TEST(Representation, SemidirectDetectsEachAxiom)
{
    Rng rng(42);
    int broken = 0;
    while (broken < 40) {
        auto [L, V] = random_rep(rng);
        EXPECT_TRUE(check_hemistrict(semidirect(L, V)).ok());
        Representation2 W = perturb_one(rng, V);
        if (check_representation(W, L).ok())
            continue;
        EXPECT_FALSE(check_hemistrict(semidirect_unchecked(L, W)).ok());
        EXPECT_THROW(semidirect(L, W), NotARepresentation);
        ++broken;
    }
}

TEST(Representation, LeftActionOfDegreeMinusOneVanishesOnLg)
{
    // l_{h2(x,y)} = 0 and h2 spans the kernel, so l_alpha = 0 on every L_g
    Rng rng(43);
    for (int i = 0; i < 40; ++i) {
        auto [L, V] = random_rep(rng);
        EXPECT_TRUE(l_alpha_vanishes(V));
    }
    DefinitionFile df = load("lalpha.def");
    HemistrictLie2 L = build_algebra(df);
    EXPECT_FALSE(l_alpha_vanishes(build_representation(df, *df.representation, L)));
}

TEST(Representation, ModuleInducedRepresentation)
{
    for (auto g : {g2(), cyclic3(), c4()}) {
        HemistrictLie2 L = from_leibniz(g);
        Representation2 V = rep_from_leibniz_module(g, adjoint_module(g), L);
        EXPECT_TRUE(check_representation(V, L).ok());
        EXPECT_EQ(V.q(), g.dim);
    }
}

TEST(MinimalModel, IsSymmetricAndInverseToV)
{
    for (auto& ex : bundled_examples()) {
        MinimalModel mm = minimal_model(ex.L, ex.V);
        EXPECT_TRUE(mm.vs.is_symmetric());
        EXPECT_TRUE(check_representation(mm.vs, ex.L).ok());
        EXPECT_TRUE(check_rep_morphism(mm.phi, ex.L, ex.V, mm.vs).ok());
        EXPECT_TRUE(check_rep_morphism(mm.psi, ex.L, mm.vs, ex.V).ok());
        EXPECT_EQ(compose_rep_morphisms(mm.psi, mm.phi), identity_rep_morphism(ex.L, ex.V));
        EXPECT_EQ(compose_rep_morphisms(mm.phi, mm.psi), identity_rep_morphism(ex.L, mm.vs));
    }
}

TEST(RepMorphism, BrokenComponentsAreNamed)
{
    HemistrictLie2 L = from_leibniz(g2());
    Representation2 V = adjoint(L);
    RepMorphism m = identity_rep_morphism(L, V);
    RepMorphism chain = m;
    chain.phi_0(1, 1) = 2;  // d alpha = e2 no longer commutes
    EXPECT_TRUE(check_rep_morphism(chain, L, V, V).contains("phi1_chain"));
    RepMorphism action = m;
    action.phi_0(0, 0) = 2;
    Report r = check_rep_morphism(action, L, V, V);
    EXPECT_FALSE(r.contains("phi1_chain"));
    EXPECT_TRUE(r.contains("flandl") || r.contains("flandr"));
}

TEST(Pullback, AlongIdentityAndComposite)
{
    auto ms = bundled_morphisms();
    const auto& f = ms[0];
    const auto& g = ms[1];
    for (auto V : {trivial_rep(g.dst), adjoint(g.dst)}) {
        EXPECT_EQ(pullback_rep(V, identity_morphism(g.dst), g.dst, g.dst), V);
        Representation2 gV = pullback_rep(V, g.f, g.src, g.dst);
        EXPECT_EQ(pullback_rep(gV, f.f, f.src, f.dst), pullback_rep(V, compose_morphisms(g.f, f.f), f.src, g.dst));
    }
}
