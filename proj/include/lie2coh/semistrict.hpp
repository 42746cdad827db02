#pragma once

// Skew-symmetrization to a semistrict Lie 2-algebra, its cochain complex
// D_A = d_V + delta + rho, the contraction onto the Chevalley-Eilenberg
// complex of L_Lie and the perturbation lemma.

#include "standard.hpp"

namespace lie2coh {

struct SemistrictLie2 {
    TwoTermComplex complex;
    MultiMap l2_00;  // L0 x L0 -> L0, antisymmetric
    MultiMap l2_0m;  // L0 x L-1 -> L-1; l2(al, x) = -l2(x, al)
    MultiMap l3;     // L0^3 -> L-1, alternating

    std::size_t a() const { return complex.dim_m1; }
    std::size_t b() const { return complex.dim_0; }
};

inline Report check_semistrict_invariants(const SemistrictLie2& S)
{
    Report rep;
    const std::size_t a = S.a(), b = S.b();
    for (std::size_t x = 0; x < b; ++x)
        for (std::size_t y = 0; y < b; ++y) {
            rep.expect_zero("l2_antisymmetric", {lbl('x', x), lbl('x', y)},
                            S.l2_00.column({x, y}) + S.l2_00.column({y, x}));
            for (std::size_t z = 0; z < b; ++z) {
                std::vector<std::string> at{lbl('x', x), lbl('x', y), lbl('x', z)};
                rep.expect_zero("l3_alternating", at, S.l3.column({x, y, z}) + S.l3.column({y, x, z}));
                rep.expect_zero("l3_alternating", at, S.l3.column({x, y, z}) + S.l3.column({x, z, y}));
            }
        }
    // l2 is a chain map: d l2(x,al) = l2(x, d al)
    for (std::size_t x = 0; x < b; ++x)
        for (std::size_t al = 0; al < a; ++al) {
            Vec ex = unit_vec(b, x), ea = unit_vec(a, al);
            rep.expect_zero("l2_chain", {lbl('x', x), lbl('a', al)},
                            S.complex.d * evaluate(S.l2_0m, ex, ea) - evaluate(S.l2_00, ex, S.complex.d * ea));
        }
    return rep;
}

// l2 = (1/2)([x,y] - (-1)^{|x||y|}[y,x]);  l3 = -(1/6) sum_cyc h2(l2(x,y), z)
inline SemistrictLie2 skew_symmetrize(const HemistrictLie2& L)
{
    const std::size_t a = L.a(), b = L.b();
    SemistrictLie2 S;
    S.complex = L.complex;
    S.l2_00 = MultiMap::bilinear(0, b, 0, b, 0, b);
    S.l2_0m = MultiMap::bilinear(0, b, -1, a, -1, a);
    S.l3 = MultiMap({0, 0, 0}, -1, {b, b, b}, a);
    const Rational half(1, 2);
    for (std::size_t x = 0; x < b; ++x) {
        for (std::size_t y = 0; y < b; ++y)
            for (std::size_t z = 0; z < b; ++z)
                S.l2_00(x, y, z) = half * (L.c00(x, y, z) - L.c00(y, x, z));
        for (std::size_t al = 0; al < a; ++al)
            for (std::size_t g = 0; g < a; ++g)
                S.l2_0m(x, al, g) = half * (L.c0m(x, al, g) - L.cm0(al, x, g));
    }
    const Rational sixth(-1, 6);
    for (std::size_t x = 0; x < b; ++x)
        for (std::size_t y = 0; y < b; ++y)
            for (std::size_t z = 0; z < b; ++z) {
                Vec acc(a);
                for (auto [p, q, r] : {std::array<std::size_t, 3>{x, y, z}, {y, z, x}, {z, x, y}})
                    acc += evaluate(L.h2, S.l2_00.column({p, q}), unit_vec(b, r));
                for (std::size_t g = 0; g < a; ++g)
                    S.l3(x, y, z, g) = sixth * acc[g];
            }
    Report r = check_semistrict_invariants(S);
    if (!r.ok())
        throw InvariantViolated("skew-symmetrization: " + r.violations().front().describe());
    return S;
}

// For L = L_g: l3(x,y,z) = (1/4)([[z,y],x] + [[x,z],y] + [[y,x],z]), read in
// K coordinates. Compares on all basis triples.
inline Report check_l3_closed_form(const LeibnizAlgebra& g, const HemistrictLie2& Lg, const SemistrictLie2& S)
{
    Report rep;
    const Rational quarter(1, 4);
    for (std::size_t x = 0; x < g.dim; ++x)
        for (std::size_t y = 0; y < g.dim; ++y)
            for (std::size_t z = 0; z < g.dim; ++z) {
                Vec ex = g.e(x), ey = g.e(y), ez = g.e(z);
                Vec w = quarter * (g.bracket(g.bracket(ez, ey), ex) + g.bracket(g.bracket(ex, ez), ey) +
                                   g.bracket(g.bracket(ey, ex), ez));
                rep.expect_zero("l3_closed_form", {lbl('x', x), lbl('x', y), lbl('x', z)},
                                Lg.d() * S.l3.column({x, y, z}) - w);
            }
    return rep;
}

struct InducedSemistrictRep {
    TwoTermComplex mu1;
    MultiMap mu2_00;  // L0 x V0 -> V0
    MultiMap mu2_0m;  // L0 x V-1 -> V-1
    MultiMap mu2_m0;  // L-1 x V0 -> V-1
    MultiMap mu3;     // L0 x L0 x V0 -> V-1

    std::size_t p() const { return mu1.dim_m1; }
    std::size_t q() const { return mu1.dim_0; }
};

// mu3(x,y,v) = (1/2) l(h2(x,y), v)
inline InducedSemistrictRep induced_rep(const HemistrictLie2& L, const Representation2& V)
{
    if (!check_representation(V, L).ok())
        throw NotARepresentation("induced_rep: V fails the representation axioms");
    InducedSemistrictRep R;
    R.mu1 = V.v;
    R.mu2_00 = V.l00;
    R.mu2_0m = V.l0m;
    R.mu2_m0 = V.lm0;
    R.mu3 = MultiMap({0, 0, 0}, -1, {L.b(), L.b(), V.q()}, V.p());
    const Rational half(1, 2);
    for (std::size_t x = 0; x < L.b(); ++x)
        for (std::size_t y = 0; y < L.b(); ++y) {
            Vec h = L.H2(L.x(x), L.x(y));
            for (std::size_t v = 0; v < V.q(); ++v) {
                Vec w = evaluate(V.lm0, h, V.vv(v));
                for (std::size_t o = 0; o < V.p(); ++o)
                    R.mu3(x, y, v, o) = half * w[o];
            }
        }
    return R;
}

// Coordinates of A^n: keys (r, xs, al, o), xs strictly increasing (exterior
// slots on L0), al a sorted multiset on L-1, |xs| + 2|al| + r = n.
class SemistrictBasis {
public:
    struct Key {
        int r;
        Tuple xs;
        Tuple al;
        std::size_t o;
        bool operator<(const Key& k) const { return std::tie(r, xs, al, o) < std::tie(k.r, k.xs, k.al, k.o); }
    };

    SemistrictBasis(std::size_t a, std::size_t b, std::size_t dim_m1, std::size_t dim_0, int n)
    {
        for (int r : {-1, 0}) {
            const std::size_t dv = r == 0 ? dim_0 : dim_m1;
            for (int q = 0; n - r - 2 * q >= 0; ++q) {
                const int P = n - r - 2 * q;
                if (static_cast<std::size_t>(P) > b)
                    continue;
                auto als = all_multisets(a, static_cast<std::size_t>(q));
                for (auto& xs : all_subsets(b, static_cast<std::size_t>(P)))
                    for (auto& al : als)
                        for (std::size_t o = 0; o < dv; ++o) {
                            index_.emplace(Key{r, xs, al, o}, keys_.size());
                            keys_.push_back({r, xs, al, o});
                        }
            }
        }
    }

    std::size_t size() const { return keys_.size(); }
    const Key& key(std::size_t i) const { return keys_.at(i); }
    std::size_t index(const Key& k) const { return index_.at(k); }
    const std::vector<Key>& keys() const { return keys_; }

private:
    std::vector<Key> keys_;
    std::map<Key, std::size_t> index_;
};

struct SemistrictParts {
    SparseMatrix unperturbed;  // d_V + delta
    SparseMatrix rho;          // -l2^ + l3^ + l^
    SparseMatrix total() const { return unperturbed + rho; }
};

// Sign exponents use the output row's P = |xs| and 0-based slot positions.
//   d_V:    (-1)^P d w(xs|al)
//   delta: -(-1)^P sum_j w(xs, d be_j | be without j)
//   l:      (-1)^i l(y_i, w(ys without i))
//   l2:     (-1)^{i+j} w(l2(y_i,y_j), rest)
//   l2 x-al: -(-1)^i w(ys without i | be_j -> l2(y_i, be_j))
//   l3:     (-1)^{i+j+k} w(rest | l3(y_i,y_j,y_k), be)
//   l_al:   (-1)^P l(be_j, w^{(0)}(ys | be without j))
inline SemistrictParts semistrict_parts(const SemistrictLie2& S, const InducedSemistrictRep& R, int n)
{
    const std::size_t a = S.a(), b = S.b();
    SemistrictBasis src(a, b, R.p(), R.q(), n), dst(a, b, R.p(), R.q(), n + 1);
    SemistrictParts out{SparseMatrix(dst.size(), src.size()), SparseMatrix(dst.size(), src.size())};
    for (std::size_t row = 0; row < dst.size(); ++row) {
        const auto& [r, ys, be, o] = dst.key(row);
        const std::size_t P = ys.size(), Q = be.size();
        const int sP = sign_pow(static_cast<long>(P));
        auto add = [&](SparseMatrix& M, int rr, Tuple xs, Tuple al, std::size_t oo, const Rational& v) {
            if (v == 0)
                return;
            int s = sort_sign(xs);
            if (s == 0)
                return;
            std::sort(al.begin(), al.end());
            M.add(row, src.index({rr, xs, al, oo}), s * v);
        };
        if (r == 0)
            for (std::size_t u = 0; u < R.p(); ++u)
                add(out.unperturbed, -1, ys, be, u, sP * R.mu1.d(o, u));
        for (std::size_t j = 0; j < Q; ++j) {
            Tuple rest = erase_at(be, j);
            for (std::size_t c = 0; c < b; ++c) {
                const Rational& v = S.complex.d(c, be[j]);
                if (v == 0)
                    continue;
                Tuple xs = ys;
                xs.push_back(c);
                add(out.unperturbed, r, xs, rest, o, -sP * v);
            }
        }
        const MultiMap& act = r == 0 ? R.mu2_00 : R.mu2_0m;
        const std::size_t dv = r == 0 ? R.q() : R.p();
        for (std::size_t i = 0; i < P; ++i) {
            Tuple rest = erase_at(ys, i);
            for (std::size_t w = 0; w < dv; ++w)
                add(out.rho, r, rest, be, w, sign_pow(static_cast<long>(i)) * act(ys[i], w, o));
        }
        for (std::size_t i = 0; i < P; ++i)
            for (std::size_t j = i + 1; j < P; ++j)
                for (std::size_t z = 0; z < b; ++z) {
                    const Rational& c = S.l2_00(ys[i], ys[j], z);
                    if (c == 0)
                        continue;
                    Tuple xs{z};
                    for (std::size_t t = 0; t < P; ++t)
                        if (t != i && t != j)
                            xs.push_back(ys[t]);
                    add(out.rho, r, xs, be, o, sign_pow(static_cast<long>(i + j)) * c);
                }
        for (std::size_t i = 0; i < P; ++i) {
            Tuple rest = erase_at(ys, i);
            for (std::size_t j = 0; j < Q; ++j)
                for (std::size_t g = 0; g < a; ++g) {
                    const Rational& c = S.l2_0m(ys[i], be[j], g);
                    if (c == 0)
                        continue;
                    Tuple al = be;
                    al[j] = g;
                    add(out.rho, r, rest, al, o, -sign_pow(static_cast<long>(i)) * c);
                }
        }
        for (std::size_t i = 0; i < P; ++i)
            for (std::size_t j = i + 1; j < P; ++j)
                for (std::size_t k = j + 1; k < P; ++k) {
                    Tuple rest;
                    for (std::size_t t = 0; t < P; ++t)
                        if (t != i && t != j && t != k)
                            rest.push_back(ys[t]);
                    for (std::size_t g = 0; g < a; ++g) {
                        const Rational& c = S.l3(ys[i], ys[j], ys[k], g);
                        if (c == 0)
                            continue;
                        Tuple al = be;
                        al.push_back(g);
                        add(out.rho, r, rest, al, o, sign_pow(static_cast<long>(i + j + k)) * c);
                    }
                }
        if (r == -1)
            for (std::size_t j = 0; j < Q; ++j) {
                Tuple rest = erase_at(be, j);
                for (std::size_t w = 0; w < R.q(); ++w)
                    add(out.rho, 0, ys, rest, w, sP * R.mu2_m0(be[j], w, o));
            }
    }
    out.unperturbed.finalize();
    out.rho.finalize();
    return out;
}

inline SparseMatrix semistrict_differential(const SemistrictLie2& S, const InducedSemistrictRep& R, int n)
{
    return semistrict_parts(S, R, n).total();
}

inline ComplexRealization semistrict_complex(const SemistrictLie2& S, const InducedSemistrictRep& R, int n_max,
                                             const StandardOptions& opt = {})
{
    if (!R.mu3.is_zero())
        throw UnsupportedRepresentation("mu3 != 0: the semistrict complex is only built for mu3 = 0");
    for (int n = -1; n <= n_max + 1; ++n)
        check_ambient(SemistrictBasis(S.a(), S.b(), R.p(), R.q(), n).size(), n, opt);
    return assemble_complex(
        -1, n_max, [&](int n) { return SemistrictBasis(S.a(), S.b(), R.p(), R.q(), n).size(); },
        [&](int n) { return SparseMatrix(0, SemistrictBasis(S.a(), S.b(), R.p(), R.q(), n).size()); },
        [&](int n) { return semistrict_differential(S, R, n); });
}

// ---- adapted basis and contraction ----

// L and V rewritten in the basis T = [j | d] of L0, so that d becomes the
// inclusion of the last a coordinates and L_Lie is spanned by the first c.
struct AdaptedPair {
    HemistrictLie2 L;
    Representation2 V;
    Matrix T;      // old coordinates of the new basis vectors
    Matrix T_inv;
    std::size_t c = 0;  // dim L_Lie
};

inline AdaptedPair adapt(const HemistrictLie2& L, const Representation2& V)
{
    if (!is_injective(L))
        throw NotInjective("d: L^-1 -> L^0 has a kernel");
    const std::size_t a = L.a(), b = L.b();
    auto comp = greedy_complement(L.d());
    AdaptedPair ap;
    ap.c = comp.size();
    ap.T = Matrix(b, b);
    for (std::size_t i = 0; i < ap.c; ++i)
        ap.T(comp[i], i) = 1;
    for (std::size_t g = 0; g < a; ++g)
        for (std::size_t i = 0; i < b; ++i)
            ap.T(i, ap.c + g) = L.d()(i, g);
    ap.T_inv = inverse(ap.T);
    Matrix d(b, a);
    for (std::size_t g = 0; g < a; ++g)
        d(ap.c + g, g) = 1;
    ap.L = HemistrictLie2(TwoTermComplex(a, b, d));
    auto col = [&](std::size_t x) { return ap.T.column(x); };
    for (std::size_t x = 0; x < b; ++x) {
        for (std::size_t y = 0; y < b; ++y) {
            Vec br = ap.T_inv * L.br00(col(x), col(y));
            Vec h = L.H2(col(x), col(y));
            for (std::size_t z = 0; z < b; ++z)
                ap.L.c00(x, y, z) = br[z];
            for (std::size_t g = 0; g < a; ++g)
                ap.L.h2(x, y, g) = h[g];
        }
        for (std::size_t al = 0; al < a; ++al) {
            Vec u = L.br0m(col(x), L.al(al)), w = L.brm0(L.al(al), col(x));
            for (std::size_t g = 0; g < a; ++g) {
                ap.L.c0m(x, al, g) = u[g];
                ap.L.cm0(al, x, g) = w[g];
            }
        }
    }
    ap.V = V;
    for (std::size_t x = 0; x < b; ++x) {
        for (std::size_t v = 0; v < V.q(); ++v) {
            Vec l = evaluate(V.l00, col(x), V.vv(v)), r = evaluate(V.r00, V.vv(v), col(x));
            Vec h = evaluate(V.hv, col(x), V.vv(v));
            for (std::size_t w = 0; w < V.q(); ++w) {
                ap.V.l00(x, v, w) = l[w];
                ap.V.r00(v, x, w) = r[w];
            }
            for (std::size_t w = 0; w < V.p(); ++w)
                ap.V.hv(x, v, w) = h[w];
        }
        for (std::size_t u = 0; u < V.p(); ++u) {
            Vec l = evaluate(V.l0m, col(x), V.uu(u)), r = evaluate(V.rm0, V.uu(u), col(x));
            for (std::size_t w = 0; w < V.p(); ++w) {
                ap.V.l0m(x, u, w) = l[w];
                ap.V.rm0(u, x, w) = r[w];
            }
        }
    }
    return ap;
}

// Per degree n = n_min..n_max+1: psi_n: B^n -> A^n, phi_n: A^n -> B^n,
// h_n: A^n -> A^{n-1}; d_A and d_B for n = n_min..n_max.
struct Contraction {
    int n_min = -1;
    int n_max = -1;
    std::vector<SparseMatrix> psi, phi, h, d_A, d_B;

    std::size_t slot(int n) const
    {
        if (n < n_min || n > n_max + 1)
            throw DegreeOutOfRange("contraction degree " + std::to_string(n));
        return static_cast<std::size_t>(n - n_min);
    }
    const SparseMatrix& Psi(int n) const { return psi[slot(n)]; }
    const SparseMatrix& Phi(int n) const { return phi[slot(n)]; }
    const SparseMatrix& H(int n) const { return h[slot(n)]; }
    const SparseMatrix& dA(int n) const { return d_A[slot(n)]; }
    const SparseMatrix& dB(int n) const { return d_B[slot(n)]; }
};

// phi psi = id, psi phi = id - (d h + h d), h psi = 0, phi h = 0, h h = 0,
// and d_A, d_B square to zero, checked in degrees n_min..n_max.
inline Report check_contraction(const Contraction& c)
{
    Report rep;
    for (int n = c.n_min; n <= c.n_max; ++n) {
        const std::string at = "n=" + std::to_string(n);
        const auto& psi = c.Psi(n);
        const auto& phi = c.Phi(n);
        const std::size_t dimA = psi.rows(), dimB = psi.cols();
        if (!(phi * psi == SparseMatrix::identity(dimB)))
            rep.fail("phi_psi_id", {at});
        SparseMatrix htpy = c.H(n + 1) * c.dA(n);
        if (n > c.n_min)
            htpy = htpy + c.dA(n - 1) * c.H(n);
        if (!(psi * phi == SparseMatrix::identity(dimA) - htpy))
            rep.fail("psi_phi_homotopy", {at});
        if (n > c.n_min) {
            if (!(c.H(n) * psi).is_zero())
                rep.fail("h_psi_zero", {at});
            if (!(c.Phi(n - 1) * c.H(n)).is_zero())
                rep.fail("phi_h_zero", {at});
            if (n - 1 > c.n_min && !(c.H(n - 1) * c.H(n)).is_zero())
                rep.fail("h_h_zero", {at});
        }
        if (n < c.n_max) {
            if (!(c.dA(n + 1) * c.dA(n)).is_zero())
                rep.fail("d_A_squared", {at});
            if (!(c.dB(n + 1) * c.dB(n)).is_zero())
                rep.fail("d_B_squared", {at});
        }
        if (!(c.Phi(n + 1) * c.dA(n) == c.dB(n) * phi))
            rep.fail("phi_chain_map", {at});
        if (n < c.n_max && !(c.dA(n) * psi == c.Psi(n + 1) * c.dB(n)))
            rep.fail("psi_chain_map", {at});
    }
    return rep;
}

// Contraction of (A', d_V + delta) onto (B', d_V) for an adapted pair: B' is
// spanned by keys with no alpha slots and all x in L_Lie (index < c).
//   h(w)(.., ys, .. | be) = sum_{t: ys[t] >= c} -(-1)^t / N  w(ys without t | be + (ys[t] - c))
// with N the number of K-slots in ys plus |be|.
inline Contraction base_contraction(const AdaptedPair& ap, int n_max)
{
    const HemistrictLie2& L = ap.L;
    const Representation2& V = ap.V;
    const std::size_t a = L.a(), b = L.b(), c = ap.c;
    SemistrictLie2 S = skew_symmetrize(L);
    InducedSemistrictRep R = induced_rep(L, V);
    Contraction ct;
    ct.n_min = -1;
    ct.n_max = n_max;
    for (int n = -1; n <= n_max + 1; ++n) {
        SemistrictBasis A(a, b, V.p(), V.q(), n), Am(a, b, V.p(), V.q(), n - 1);
        CEBasis B(c, V.p(), V.q(), n);
        SparseMatrix psi(A.size(), B.size());
        for (std::size_t i = 0; i < B.size(); ++i) {
            const auto& k = B.keys[i];
            psi.add(A.index({k.r, k.ys, {}, k.o}), i, Rational(1));
        }
        psi.finalize();
        SparseMatrix h(Am.size(), A.size());
        for (std::size_t row = 0; row < Am.size(); ++row) {
            const auto& [r, ys, be, o] = Am.key(row);
            std::size_t nk = be.size();
            for (auto y : ys)
                if (y >= c)
                    ++nk;
            for (std::size_t t = 0; t < ys.size(); ++t) {
                if (ys[t] < c)
                    continue;
                Tuple al = be;
                al.push_back(ys[t] - c);
                std::sort(al.begin(), al.end());
                h.add(row, A.index({r, erase_at(ys, t), al, o}),
                      Rational(-sign_pow(static_cast<long>(t)), static_cast<long>(nk)));
            }
        }
        h.finalize();
        ct.phi.push_back(psi.transpose());
        ct.psi.push_back(std::move(psi));
        ct.h.push_back(std::move(h));
    }
    for (int n = -1; n <= n_max; ++n) {
        ct.d_A.push_back(semistrict_parts(S, R, n).unperturbed);
        ct.d_B.push_back(ct.Phi(n + 1) * ct.d_A.back() * ct.Psi(n));
    }
    Report rep = check_contraction(ct);
    if (!rep.ok())
        throw InvariantViolated("base contraction: " + rep.violations().front().describe());
    return ct;
}

inline Contraction base_contraction(const HemistrictLie2& L, const Representation2& V, int n_max)
{
    return base_contraction(adapt(L, V), n_max);
}

// Perturbation lemma with rho[n]: A^n -> A^{n+1}, n = n_min..n_max. The
// series alternate in sign because psi phi = id - (d h + h d).
inline Contraction perturb(const Contraction& c, const std::vector<SparseMatrix>& rho)
{
    if (rho.size() != c.d_A.size())
        throw ShapeMismatch("perturb: one rho block per degree required");
    Contraction out = c;
    for (int n = c.n_min; n <= c.n_max; ++n) {
        const std::size_t i = c.slot(n);
        out.d_A[i] = c.d_A[i] + rho[i];
    }
    for (int n = c.n_min; n < c.n_max; ++n)
        if (!(out.dA(n + 1) * out.dA(n)).is_zero())
            throw NotADifferential("(d_A + rho)^2 != 0 from degree " + std::to_string(n));
    // (rho h) on A^n: A^n -> A^{n-1} -> A^n; iterate until zero
    auto series = [&](const SparseMatrix& start, const std::function<SparseMatrix(const SparseMatrix&)>& step,
                      std::size_t bound) {
        SparseMatrix acc = start, term = start;
        for (std::size_t k = 0;; ++k) {
            term = step(term);
            if (term.is_zero())
                return acc;
            if (k > bound)
                throw NotNilpotent("rho h is not nilpotent within the ambient dimension");
            acc = acc + term;
        }
    };
    for (int n = c.n_min; n <= c.n_max; ++n) {
        const std::size_t i = c.slot(n);
        // Psi_n = sum (-h_{n+1} rho_n)^k psi_n
        out.psi[i] = series(c.psi[i], [&](const SparseMatrix& t) { return Rational(-1) * (c.H(n + 1) * (rho[i] * t)); },
                            c.psi[i].rows());
    }
    for (int n = c.n_min + 1; n <= c.n_max + 1; ++n) {
        const std::size_t i = c.slot(n);
        const SparseMatrix rh = Rational(-1) * (rho[i - 1] * c.H(n));
        // Phi_n = sum phi_n (-rho h)^k, H_n = sum h_n (-rho h)^k
        out.phi[i] = series(c.phi[i], [&](const SparseMatrix& t) { return t * rh; }, rh.rows());
        out.h[i] = series(c.h[i], [&](const SparseMatrix& t) { return t * rh; }, rh.rows());
    }
    for (int n = c.n_min; n <= c.n_max; ++n) {
        const std::size_t i = c.slot(n);
        out.d_B[i] = c.d_B[i] + out.Phi(n + 1) * rho[i] * c.psi[i];
    }
    // Psi in degree n_max + 1 would need rho there and stays unperturbed
    return out;
}

// ---- main theorem ----

struct MainTheoremResult {
    std::vector<std::size_t> standard_dims;    // H(L,V), n = -1..n_max
    std::vector<std::size_t> semistrict_dims;  // H(A)
    std::vector<std::size_t> ce_dims;          // H_CE(L_Lie, V)
    bool part1_checked = false;                // f^*, g^* inverse on cohomology
    Report violations;

    bool ok() const { return violations.ok(); }
};

inline void check_main_hypotheses(const HemistrictLie2& L, const Representation2& V)
{
    if (!is_injective(L))
        throw HypothesisViolated("injectivity", "rank d = " + std::to_string(rank(L.d())) + " < dim L^-1 = " +
                                                    std::to_string(L.a()));
    for (std::size_t al = 0; al < L.a(); ++al)
        for (std::size_t v = 0; v < V.q(); ++v)
            if (!is_zero(evaluate(V.lm0, L.al(al), V.vv(v))))
                throw HypothesisViolated("l_alpha_zero", "l(" + lbl('a', al) + "," + lbl('v', v) + ") != 0");
}

// The L_Lie-representation induced on V through the splitting section.
inline LieRep2 descended_rep(const LieSplitting& s, const Representation2& V)
{
    const std::size_t c = s.lie.dim;
    LieRep2 r(c, V.v);
    for (std::size_t x = 0; x < c; ++x) {
        Vec jx = s.split.j.column(x);
        for (std::size_t v = 0; v < V.q(); ++v) {
            Vec w = evaluate(V.l00, jx, V.vv(v));
            for (std::size_t o = 0; o < V.q(); ++o)
                r.l0(x, v, o) = w[o];
        }
        for (std::size_t u = 0; u < V.p(); ++u) {
            Vec w = evaluate(V.l0m, jx, V.uu(u));
            for (std::size_t o = 0; o < V.p(); ++o)
                r.lm(x, u, o) = w[o];
        }
    }
    return r;
}

// Hypotheses throw; disagreements are collected in `violations`.
inline MainTheoremResult verify_main_theorem(const HemistrictLie2& L, const Representation2& V, int n_max,
                                             const StandardOptions& opt = {})
{
    check_main_hypotheses(L, V);
    MainTheoremResult res;
    ComplexRealization cs = realize(L, V, n_max, opt);
    res.standard_dims = cohomology_dims(cs);
    res.semistrict_dims = cohomology_dims(semistrict_complex(skew_symmetrize(L), induced_rep(L, V), n_max, opt));
    LieSplitting s = lie_quotient(L);
    res.ce_dims = ce_cohomology(s.lie, descended_rep(s, V), n_max);
    for (int n = -1; n <= n_max; ++n) {
        const std::size_t i = static_cast<std::size_t>(n + 1);
        const std::string at = "n=" + std::to_string(n);
        if (res.standard_dims[i] != res.semistrict_dims[i])
            res.violations.fail("standard_vs_semistrict", {at});
        if (res.standard_dims[i] != res.ce_dims[i])
            res.violations.fail("standard_vs_ce", {at});
    }
    if (!h2_vanishes_on_image(L))
        return res;

    // Part 1: f = (pr, 0): L -> L_Lie and g: L_Lie -> L induce inverse maps.
    res.part1_checked = true;
    const HemistrictLie2& Lie = s.lie_hemi;
    // the complexes only see l, so the symmetric minimal model is pulled back;
    // a general V need not survive pullback along g when g2 != 0
    Representation2 Vs = minimal_model(L, V).vs;
    Representation2 VL = pullback_rep(Vs, s.split.g, Lie, L);
    Representation2 back = pullback_rep(VL, s.split.f, L, Lie);
    if (!(back.l00 == V.l00) || !(back.l0m == V.l0m) || !(back.lm0 == V.lm0))
        res.violations.fail("pullback_rep_roundtrip");
    ComplexRealization cl = realize(Lie, VL, n_max, opt);
    std::vector<SparseMatrix> fs, gs;
    for (int n = -1; n <= n_max + 1; ++n) {
        fs.push_back(pullback_cochain(s.split.f, L, Lie, VL, n));
        gs.push_back(pullback_cochain(s.split.g, Lie, L, V, n));
    }
    auto w_l = [&](int n) { return weak_symmetry_constraints(L, V, n); };
    auto w_lie = [&](int n) { return weak_symmetry_constraints(Lie, VL, n); };
    res.violations.merge(check_cochain_map(fs, cl, cs, w_l), "f_star_");
    res.violations.merge(check_cochain_map(gs, cs, cl, w_lie), "g_star_");
    if (!res.violations.ok())
        return res;
    for (int n = -1; n <= n_max; ++n) {
        const std::size_t i = static_cast<std::size_t>(n + 1);
        const std::string at = "n=" + std::to_string(n);
        // g^* f^* = (f g)^* = id on C(L_Lie)
        if (!(gs[i] * fs[i] * cl.at(n).basis == cl.at(n).basis))
            res.violations.fail("g_star_f_star_id", {at});
        // f^* g^* z - z is exact for every cohomology representative z of H(L,V)
        CohomologyResult h = cohomology(cs, n);
        const DegreeData& dd = cs.at(n);
        SparseMatrix diff = fs[i] * gs[i] * h.representatives - h.representatives;
        SparseMatrix coords = diff.select_rows(dd.free);
        Echelon<Rational> img(dd.dim());
        SparseMatrix in_t = incoming_diff(cs, n).transpose();
        for (std::size_t r = 0; r < in_t.rows(); ++r)
            img.insert(in_t.row(r));
        SparseMatrix ct = coords.transpose();
        for (std::size_t r = 0; r < ct.rows(); ++r)
            if (img.insert(ct.row(r)))
                res.violations.fail("f_star_g_star_homotopic_id", {at});
    }
    return res;
}

}  // namespace lie2coh
