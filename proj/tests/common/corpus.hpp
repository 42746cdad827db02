#pragma once

// Bundled examples, random generators and brute-force oracles shared by the
// unit tests and the acceptance runner.

#include "lie2coh/extension.hpp"
#include "lie2coh/io.hpp"
#include "lie2coh/semistrict.hpp"

#include <random>

namespace corpus {

using namespace lie2coh;

inline std::string data_path(const std::string& name) { return std::string(LIE2COH_DATA_DIR) + "/" + name; }

inline DefinitionFile load(const std::string& name) { return read_definition(data_path(name)); }

inline HemistrictLie2 load_algebra(const std::string& name) { return build_algebra(load(name)); }

inline LeibnizAlgebra g2()
{
    LeibnizAlgebra g(2);
    g.c(0, 0, 1) = 1;
    return g;
}

inline LeibnizAlgebra cyclic3()
{
    LeibnizAlgebra g(3);
    g.c(0, 0, 1) = 1;
    g.c(0, 1, 2) = 1;
    return g;
}

inline LeibnizAlgebra c4()
{
    LeibnizAlgebra g(4);
    g.c(0, 1, 1) = 1;
    g.c(1, 0, 1) = -1;
    g.c(1, 0, 3) = -1;
    g.c(0, 3, 3) = 1;
    g.c(1, 2, 3) = 1;
    return g;
}

struct Example {
    std::string name;
    HemistrictLie2 L;
    Representation2 V;
};

// Every bundled algebra with its bundled representation, plus trivial and
// adjoint coefficients where those are representations.
inline std::vector<Example> bundled_examples()
{
    std::vector<Example> out;
    for (std::string f : {"abelian.def", "g2.def", "g2_adjoint.def", "g2_leibniz.def", "cyclic3.def", "c4.def",
                          "strict_lie2.def", "non-injective.def", "lalpha.def"}) {
        DefinitionFile df = load(f);
        HemistrictLie2 L = build_algebra(df);
        out.push_back({f, L, build_representation(df, *df.representation, L)});
        for (auto V : {trivial_rep(L), adjoint(L)})
            if (check_representation(V, L).ok())
                out.push_back({f + (V.p() == 0 && V.q() == 1 ? " trivial" : " adjoint"), L, V});
    }
    return out;
}

// Bundled morphisms as (source, target, f).
struct MorphismExample {
    std::string name;
    HemistrictLie2 src, dst;
    Morphism2 f;
};

inline std::vector<MorphismExample> bundled_morphisms()
{
    std::vector<MorphismExample> out;
    for (std::string f : {"cyclic3_to_g2.def", "g2_scale.def"}) {
        DefinitionFile df = load(f);
        HemistrictLie2 s = build_algebra(df), t = build_algebra(df, df.morphism->target);
        out.push_back({f, s, t, build_morphism(df, *df.morphism, s, t)});
    }
    return out;
}

// ---- random inputs ----

using Rng = std::mt19937_64;

inline Rational small(Rng& rng, int lo = -2, int hi = 2)
{
    return Rational(std::uniform_int_distribution<int>(lo, hi)(rng));
}

// Rejection-sampled Leibniz algebra: sparse integer brackets until the
// Leibniz rule holds. `tries` counts the draws.
inline LeibnizAlgebra random_leibniz(Rng& rng, std::size_t dim, std::size_t* tries = nullptr)
{
    std::bernoulli_distribution keep(dim <= 1 ? 0.7 : dim == 2 ? 0.3 : 0.12);
    for (;;) {
        if (tries)
            ++*tries;
        LeibnizAlgebra g(dim);
        for (auto& x : g.c.data())
            if (keep(rng))
                x = small(rng);
        if (check_leibniz(g).ok())
            return g;
    }
}

inline Matrix random_invertible(Rng& rng, std::size_t n)
{
    for (;;) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                m(i, j) = small(rng, -1, 1);
        if (rank(m) == n)
            return m;
    }
}

// V transported along the isomorphism (P on V^-1, Q on V^0); d becomes Q d P^-1.
inline Representation2 change_basis(const HemistrictLie2& L, const Representation2& V, const Matrix& P,
                                    const Matrix& Q)
{
    const Matrix Pi = inverse(P), Qi = inverse(Q);
    Representation2 W(L, TwoTermComplex(V.p(), V.q(), Q * V.v.d * Pi));
    auto put = [](MultiMap& m, std::size_t i, std::size_t j, const Vec& v) {
        for (std::size_t o = 0; o < v.size(); ++o)
            m(i, j, o) = v[o];
    };
    for (std::size_t x = 0; x < L.b(); ++x) {
        const Vec ex = L.x(x);
        for (std::size_t v = 0; v < V.q(); ++v) {
            const Vec ev = Qi.column(v);
            put(W.l00, x, v, Q * evaluate(V.l00, ex, ev));
            put(W.r00, v, x, Q * evaluate(V.r00, ev, ex));
            put(W.hv, x, v, P * evaluate(V.hv, ex, ev));
        }
        for (std::size_t u = 0; u < V.p(); ++u) {
            const Vec eu = Pi.column(u);
            put(W.l0m, x, u, P * evaluate(V.l0m, ex, eu));
            put(W.rm0, u, x, P * evaluate(V.rm0, eu, ex));
        }
    }
    for (std::size_t al = 0; al < L.a(); ++al)
        for (std::size_t v = 0; v < V.q(); ++v) {
            const Vec ea = L.al(al), ev = Qi.column(v);
            put(W.lm0, al, v, P * evaluate(V.lm0, ea, ev));
            put(W.r0m, v, al, P * evaluate(V.r0m, ev, ea));
        }
    return W;
}

// A random valid representation of a random L_g: trivial, adjoint or a
// module-induced one, in a random basis.
inline std::pair<HemistrictLie2, Representation2> random_rep(Rng& rng)
{
    const std::size_t dim = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
    LeibnizAlgebra g = random_leibniz(rng, dim);
    HemistrictLie2 L = from_leibniz(g);
    Representation2 V;
    switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
    case 0:
        V = trivial_rep(L, std::uniform_int_distribution<std::size_t>(0, 2)(rng),
                        std::uniform_int_distribution<std::size_t>(1, 2)(rng));
        break;
    case 1:
        V = adjoint(L);
        break;
    default:
        V = rep_from_leibniz_module(g, adjoint_module(g), L);
        break;
    }
    V = change_basis(L, V, random_invertible(rng, V.p()), random_invertible(rng, V.q()));
    return {L, V};
}

// One structure-map entry of V shifted by a nonzero integer.
inline Representation2 perturb_one(Rng& rng, const Representation2& V)
{
    Representation2 W = V;
    std::vector<MultiMap*> blocks;
    for (MultiMap* m : {&W.l00, &W.l0m, &W.lm0, &W.r00, &W.rm0, &W.r0m, &W.hv})
        if (!m->data().empty())
            blocks.push_back(m);
    MultiMap* m = blocks[std::uniform_int_distribution<std::size_t>(0, blocks.size() - 1)(rng)];
    auto& e = m->data()[std::uniform_int_distribution<std::size_t>(0, m->data().size() - 1)(rng)];
    e += std::uniform_int_distribution<int>(0, 1)(rng) ? 1 : -1;
    return W;
}

inline Vec mul(const SparseMatrix& m, const Vec& v)
{
    Vec out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (auto& [j, x] : m.row(i))
            out[i] += x * v[j];
    return out;
}

inline Vec column(const SparseMatrix& m, std::size_t j)
{
    Vec v(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (auto& [c, x] : m.row(i))
            if (c == j)
                v[i] = x;
    return v;
}

// Random weakly symmetric cochain in degree n: half the time a random
// combination of the cocycles, otherwise of the whole constrained space.
inline StandardCochain random_cochain(Rng& rng, const HemistrictLie2& L, const Representation2& V, int n,
                                      const ComplexRealization& cr)
{
    const DegreeData& dd = cr.at(n);
    Vec coords(dd.dim());
    if (std::bernoulli_distribution(0.5)(rng) && dd.diff.rows() > 0) {
        KernelBasis<Rational> z = kernel(dd.diff);
        for (std::size_t j = 0; j < z.free.size(); ++j)
            coords = coords + small(rng) * column(z.basis, j);
    } else {
        for (auto& c : coords)
            c = small(rng);
    }
    return cochain_from_ambient(L, V, n, mul(dd.basis, coords));
}

// ---- oracles ----

// Rank by fraction-exact Gaussian elimination on a dense copy.
inline std::size_t dense_rank(std::vector<std::vector<mpq_class>> a)
{
    std::size_t r = 0;
    const std::size_t cols = a.empty() ? 0 : a[0].size();
    for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
        std::size_t piv = r;
        while (piv < a.size() && a[piv][c] == 0)
            ++piv;
        if (piv == a.size())
            continue;
        std::swap(a[piv], a[r]);
        for (std::size_t i = 0; i < a.size(); ++i)
            if (i != r && a[i][c] != 0) {
                mpq_class f = a[i][c] / a[r][c];
                for (std::size_t k = c; k < cols; ++k)
                    a[i][k] -= f * a[r][k];
            }
        ++r;
    }
    return r;
}

inline std::vector<std::vector<mpq_class>> dense(const SparseMatrix& m)
{
    std::vector<std::vector<mpq_class>> a(m.rows(), std::vector<mpq_class>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (auto& [j, x] : m.row(i))
            a[i][j] += x;
    return a;
}

// For an abelian algebra (d = 0, all brackets 0) and trivial V, every
// differential vanishes, so H^n counts weakly symmetric shapes: an
// alternating word in m L0 letters and a symmetric word in k L-1 letters with
// m + 2k = n (values in V^0) or m + 2k = n + 1 (values in V^-1). Counted by
// listing the words.
inline std::size_t abelian_count(std::size_t a, std::size_t b, std::size_t p, std::size_t q, int n)
{
    auto alternating = [&](int m) {
        std::size_t c = 0;
        for (unsigned mask = 0; mask < (1u << b); ++mask)
            if (std::popcount(mask) == m)
                ++c;
        return c;
    };
    // nondecreasing words of length k in a letters
    auto symmetric = [&](int k) {
        std::size_t c = 0;
        std::vector<std::size_t> w(static_cast<std::size_t>(k), 0);
        if (a == 0)
            return std::size_t(k == 0);
        for (;;) {
            ++c;
            int i = k - 1;
            while (i >= 0 && w[static_cast<std::size_t>(i)] == a - 1)
                --i;
            if (i < 0)
                return c;
            const std::size_t v = w[static_cast<std::size_t>(i)] + 1;
            for (int j = i; j < k; ++j)
                w[static_cast<std::size_t>(j)] = v;
        }
    };
    std::size_t total = 0;
    for (int k = 0; 2 * k <= n + 1; ++k) {
        if (n - 2 * k >= 0)
            total += q * alternating(n - 2 * k) * symmetric(k);
        if (n + 1 - 2 * k >= 0)
            total += p * alternating(n + 1 - 2 * k) * symmetric(k);
    }
    return total;
}

}  // namespace corpus
