#include <gtest/gtest.h>

#include "../common/corpus.hpp"

using namespace lie2coh;
using namespace corpus;

static int inversion_parity(const Tuple& t)
{
    int inv = 0;
    for (std::size_t i = 0; i < t.size(); ++i)
        for (std::size_t j = i + 1; j < t.size(); ++j)
            inv += t[i] > t[j];
    return inv % 2 ? -1 : 1;
}

TEST(Combinatorics, SortSignIsInversionParity)
{
    for (auto& t : all_tuples(4, 4)) {
        Tuple s = t;
        const bool repeated = std::set<std::size_t>(t.begin(), t.end()).size() < t.size();
        const int sign = sort_sign(s);
        if (repeated) {
            EXPECT_EQ(sign, 0);
        } else {
            EXPECT_EQ(sign, inversion_parity(t));
            EXPECT_EQ(s, sorted(t));
        }
    }
}

TEST(Combinatorics, EnumerationCounts)
{
    for (std::size_t n = 0; n <= 5; ++n)
        for (std::size_t k = 0; k <= 4; ++k) {
            std::size_t subsets = 0, multisets = 0;
            for (auto& t : all_tuples(n, k)) {
                bool strict = true, weak = true;
                for (std::size_t i = 1; i < t.size(); ++i) {
                    strict &= t[i - 1] < t[i];
                    weak &= t[i - 1] <= t[i];
                }
                subsets += strict;
                multisets += weak;
            }
            EXPECT_EQ(all_subsets(n, k).size(), subsets);
            EXPECT_EQ(all_multisets(n, k).size(), multisets);
            EXPECT_EQ(binom(n, k), subsets);
            EXPECT_EQ(all_tuples(n, k).size(), ipow(n, k));
        }
}

TEST(Combinatorics, TupleRankIsPosition)
{
    auto ts = all_tuples(3, 3);
    for (std::size_t i = 0; i < ts.size(); ++i)
        EXPECT_EQ(tuple_rank(ts[i], 3), i);
}

TEST(MultiMap, EvaluateIsBilinear)
{
    Rng rng(11);
    MultiMap m = MultiMap::bilinear(0, 3, -1, 2, -1, 2);
    for (auto& x : m.data())
        x = small(rng);
    auto rv = [&](std::size_t n) {
        Vec v(n);
        for (auto& x : v)
            x = small(rng);
        return v;
    };
    for (int i = 0; i < 20; ++i) {
        Vec x = rv(3), y = rv(3), u = rv(2);
        Rational s = small(rng);
        EXPECT_EQ(evaluate(m, x + s * y, u), evaluate(m, x, u) + s * evaluate(m, y, u));
    }
    EXPECT_EQ(evaluate(m, unit_vec(3, 1), unit_vec(2, 0)), m.column({1, 0}));
}

TEST(MultiMap, DeclaredSymmetryIsChecked)
{
    MultiMap h = MultiMap::bilinear(0, 2, 0, 2, -1, 1);
    h.declare_symmetric({0, 1});
    h(0, 1, 0) = 1;
    EXPECT_FALSE(h.symmetric_ok());
    h(1, 0, 0) = 1;
    EXPECT_TRUE(h.symmetric_ok());
}

TEST(TwoTermComplex, ShapeIsValidated)
{
    EXPECT_THROW(TwoTermComplex(2, 1, Matrix{{1}}), ShapeMismatch);
    TwoTermComplex c(1, 2, Matrix{{1}, {0}});
    EXPECT_EQ(c.dim(-1), 1u);
    EXPECT_EQ(c.dim(0), 2u);
    EXPECT_EQ(c.dim(1), 0u);
}

TEST(TwoTermComplex, ChainMaps)
{
    TwoTermComplex src(1, 1, Matrix{{1}}), dst(1, 2, Matrix{{1}, {1}});
    EXPECT_TRUE(is_chain_map(Matrix{{2}}, Matrix{{2}, {2}}, src, dst));
    EXPECT_FALSE(is_chain_map(Matrix{{2}}, Matrix{{2}, {1}}, src, dst));
    EXPECT_THROW(is_chain_map(Matrix{{2}}, Matrix{{2}}, src, dst), ShapeMismatch);
}
