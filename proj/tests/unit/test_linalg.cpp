#include <gtest/gtest.h>

#include "../common/corpus.hpp"

using namespace lie2coh;
using namespace corpus;

TEST(Rational, ParsesCanonicalForms)
{
    EXPECT_EQ(parse_rational("3/6"), Rational(1, 2));
    EXPECT_EQ(parse_rational("-4"), Rational(-4));
    EXPECT_EQ(parse_rational("+2/3"), Rational(2, 3));
    EXPECT_EQ(parse_rational("0/5"), Rational(0));
    EXPECT_EQ(to_string(Rational(6) / Rational(-4)), "-3/2");
    EXPECT_EQ(to_string(Rational(8) / Rational(4)), "2");
}

TEST(Rational, RejectsMalformed)
{
    for (const char* s : {"", "1/0", " 1", "1.5", "+", "1/", "/2", "1/-2", "0x3"})
        EXPECT_THROW(parse_rational(s), RationalParseError) << s;
}

TEST(Rational, RoundTripsThroughText)
{
    Rng rng(1);
    for (int i = 0; i < 200; ++i) {
        Rational q = small(rng, -50, 50) / Rational(std::uniform_int_distribution<int>(1, 40)(rng));
        q.canonicalize();
        EXPECT_EQ(parse_rational(to_string(q)), q);
    }
}

static SparseMatrix random_sparse(Rng& rng, std::size_t r, std::size_t c, double fill)
{
    SparseMatrix m(r, c);
    std::bernoulli_distribution keep(fill);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            if (keep(rng))
                m.add(i, j, small(rng, -3, 3));
    m.finalize();
    return m;
}

TEST(Linalg, RankMatchesDenseElimination)
{
    Rng rng(2);
    for (int i = 0; i < 300; ++i) {
        const std::size_t r = 1 + rng() % 7, c = 1 + rng() % 7;
        SparseMatrix m = random_sparse(rng, r, c, 0.4);
        EXPECT_EQ(rank(m), dense_rank(dense(m)));
        EXPECT_EQ(rank(m), rank(m.transpose()));
    }
}

TEST(Linalg, KernelIsAnnihilatedAndComplementsRank)
{
    Rng rng(3);
    for (int i = 0; i < 200; ++i) {
        SparseMatrix m = random_sparse(rng, 1 + rng() % 6, 1 + rng() % 8, 0.35);
        KernelBasis<Rational> k = kernel(m);
        EXPECT_EQ(k.free.size() + rank(m), m.cols());
        EXPECT_TRUE((m * k.basis).is_zero());
        EXPECT_EQ(dense_rank(dense(k.basis)), k.free.size());
    }
}

TEST(Linalg, SolveFindsPreimagesAndRejectsInconsistent)
{
    Rng rng(4);
    for (int i = 0; i < 200; ++i) {
        SparseMatrix m = random_sparse(rng, 1 + rng() % 6, 1 + rng() % 6, 0.4);
        Vec x(m.cols());
        for (auto& v : x)
            v = small(rng);
        Vec b = mul(m, x);
        auto sol = solve(m, b);
        ASSERT_TRUE(sol.has_value());
        EXPECT_EQ(mul(m, *sol), b);
        // a right-hand side outside the column span
        Vec e(m.rows());
        for (std::size_t r = 0; r < m.rows(); ++r) {
            e.assign(m.rows(), Rational(0));
            e[r] = 1;
            if (!in_column_span(m, e)) {
                EXPECT_FALSE(solve(m, e).has_value());
                break;
            }
        }
    }
}

TEST(Linalg, InverseOfRandomInvertible)
{
    Rng rng(5);
    for (int i = 0; i < 50; ++i) {
        const std::size_t n = 1 + rng() % 5;
        Matrix m = random_invertible(rng, n);
        EXPECT_EQ(m * inverse(m), Matrix::identity(n));
        EXPECT_EQ(inverse(m) * m, Matrix::identity(n));
    }
}

TEST(Linalg, CohomologyDimOfShortComplex)
{
    // Q --(1,1)^T--> Q^2 --(1,-1)--> Q : exact in the middle
    Matrix in{{1}, {1}}, out{{1, -1}};
    EXPECT_EQ(cohomology_dim(in, out), 0u);
    Matrix zero_in(2, 1);
    EXPECT_EQ(cohomology_dim(zero_in, out), 1u);
}

TEST(Linalg, DenseAndSparseAgree)
{
    Rng rng(6);
    for (int i = 0; i < 50; ++i) {
        SparseMatrix a = random_sparse(rng, 3, 4, 0.5), b = random_sparse(rng, 4, 2, 0.5);
        EXPECT_EQ((a * b).dense(), a.dense() * b.dense());
        EXPECT_EQ(SparseMatrix::from_dense(a.dense()), a);
    }
}
