#pragma once

// Representations of hemistrict Lie 2-algebras on two-term complexes.
//
// Right actions are stored as r(v, x). The left-acting form r_x v carries the
// sign (-1)^{|x||v|}, which is nontrivial only when both are in degree -1 and
// the result would land in V^-2 = 0, so the two forms coincide on every stored
// block.

#include "hemistrict.hpp"

namespace lie2coh {

struct Representation2 {
    TwoTermComplex v;
    MultiMap l00;  // L0 x V0   -> V0
    MultiMap l0m;  // L0 x V-1  -> V-1
    MultiMap lm0;  // L-1 x V0  -> V-1
    MultiMap r00;  // V0 x L0   -> V0
    MultiMap rm0;  // V-1 x L0  -> V-1
    MultiMap r0m;  // V0 x L-1  -> V-1
    MultiMap hv;   // L0 x V0   -> V-1

    Representation2() = default;
    Representation2(const HemistrictLie2& L, TwoTermComplex vv) : v(std::move(vv))
    {
        const std::size_t a = L.a(), b = L.b(), p = v.dim_m1, q = v.dim_0;
        l00 = MultiMap::bilinear(0, b, 0, q, 0, q);
        l0m = MultiMap::bilinear(0, b, -1, p, -1, p);
        lm0 = MultiMap::bilinear(-1, a, 0, q, -1, p);
        r00 = MultiMap::bilinear(0, q, 0, b, 0, q);
        rm0 = MultiMap::bilinear(-1, p, 0, b, -1, p);
        r0m = MultiMap::bilinear(0, q, -1, a, -1, p);
        hv = MultiMap::bilinear(0, b, 0, q, -1, p);
    }

    std::size_t p() const { return v.dim_m1; }
    std::size_t q() const { return v.dim_0; }
    Vec dV(const Vec& u) const { return v.d * u; }
    Vec vv(std::size_t i) const { return unit_vec(q(), i); }
    Vec uu(std::size_t i) const { return unit_vec(p(), i); }

    bool is_symmetric() const { return hv.is_zero(); }
};

inline bool operator==(const Representation2& s, const Representation2& t)
{
    return s.v == t.v && s.l00 == t.l00 && s.l0m == t.l0m && s.lm0 == t.lm0 && s.r00 == t.r00 && s.rm0 == t.rm0 &&
           s.r0m == t.r0m && s.hv == t.hv;
}

inline Representation2 trivial_rep(const HemistrictLie2& L, std::size_t dim_m1 = 0, std::size_t dim_0 = 1)
{
    return Representation2(L, TwoTermComplex(dim_m1, dim_0));
}

// l = r = bracket, h_v = h2.
inline Representation2 adjoint(const HemistrictLie2& L)
{
    Representation2 V(L, L.complex);
    V.l00 = L.c00;
    V.l0m = L.c0m;
    V.lm0 = L.cm0;
    V.r00 = L.c00;
    V.rm0 = L.cm0;
    V.r0m = L.c0m;
    V.hv = L.h2;
    return V;
}

inline Report check_representation(const Representation2& V, const HemistrictLie2& L)
{
    Report rep;
    const std::size_t a = L.a(), b = L.b(), p = V.p(), q = V.q();
    auto l00 = [&](const Vec& x, const Vec& v) { return evaluate(V.l00, x, v); };
    auto l0m = [&](const Vec& x, const Vec& u) { return evaluate(V.l0m, x, u); };
    auto lm0 = [&](const Vec& al, const Vec& v) { return evaluate(V.lm0, al, v); };
    auto r00 = [&](const Vec& v, const Vec& x) { return evaluate(V.r00, v, x); };
    auto rm0 = [&](const Vec& u, const Vec& x) { return evaluate(V.rm0, u, x); };
    auto r0m = [&](const Vec& v, const Vec& al) { return evaluate(V.r0m, v, al); };
    auto hv = [&](const Vec& x, const Vec& v) { return evaluate(V.hv, x, v); };

    // l and r are chain maps
    for (std::size_t x = 0; x < b; ++x)
        for (std::size_t u = 0; u < p; ++u) {
            Vec ex = L.x(x), eu = V.uu(u);
            rep.expect_zero("l_chain", {lbl('x', x), lbl('u', u)}, V.dV(l0m(ex, eu)) - l00(ex, V.dV(eu)));
            rep.expect_zero("r_chain", {lbl('u', u), lbl('x', x)}, V.dV(rm0(eu, ex)) - r00(V.dV(eu), ex));
        }
    for (std::size_t al = 0; al < a; ++al) {
        Vec ea = L.al(al);
        for (std::size_t v = 0; v < q; ++v) {
            Vec ev = V.vv(v);
            rep.expect_zero("l_chain", {lbl('a', al), lbl('v', v)}, V.dV(lm0(ea, ev)) - l00(L.dm(ea), ev));
            rep.expect_zero("r_chain", {lbl('v', v), lbl('a', al)}, V.dV(r0m(ev, ea)) - r00(ev, L.dm(ea)));
        }
        for (std::size_t u = 0; u < p; ++u) {
            Vec eu = V.uu(u);
            rep.expect_zero("l_chain", {lbl('a', al), lbl('u', u)}, l0m(L.dm(ea), eu) - lm0(ea, V.dV(eu)));
            rep.expect_zero("r_chain", {lbl('u', u), lbl('a', al)}, r0m(V.dV(eu), ea) - rm0(eu, L.dm(ea)));
        }
    }
    // l is a left representation of the dg Leibniz algebra
    for (std::size_t x = 0; x < b; ++x)
        for (std::size_t y = 0; y < b; ++y) {
            Vec ex = L.x(x), ey = L.x(y), bxy = L.br00(ex, ey);
            for (std::size_t v = 0; v < q; ++v) {
                Vec ev = V.vv(v);
                rep.expect_zero("lisleftrep", {lbl('x', x), lbl('x', y), lbl('v', v)},
                                l00(ex, l00(ey, ev)) - l00(ey, l00(ex, ev)) - l00(bxy, ev));
            }
            for (std::size_t u = 0; u < p; ++u) {
                Vec eu = V.uu(u);
                rep.expect_zero("lisleftrep", {lbl('x', x), lbl('x', y), lbl('u', u)},
                                l0m(ex, l0m(ey, eu)) - l0m(ey, l0m(ex, eu)) - l0m(bxy, eu));
            }
        }
    for (std::size_t x = 0; x < b; ++x)
        for (std::size_t al = 0; al < a; ++al)
            for (std::size_t v = 0; v < q; ++v) {
                Vec ex = L.x(x), ea = L.al(al), ev = V.vv(v);
                rep.expect_zero("lisleftrep", {lbl('x', x), lbl('a', al), lbl('v', v)},
                                l0m(ex, lm0(ea, ev)) - lm0(ea, l00(ex, ev)) - lm0(L.br0m(ex, ea), ev));
                rep.expect_zero("lisleftrep", {lbl('a', al), lbl('x', x), lbl('v', v)},
                                lm0(ea, l00(ex, ev)) - l0m(ex, lm0(ea, ev)) - lm0(L.brm0(ea, ex), ev));
            }
    // l_x v + r(v,x) = d(h_v)(x,v)
    for (std::size_t x = 0; x < b; ++x) {
        Vec ex = L.x(x);
        for (std::size_t v = 0; v < q; ++v) {
            Vec ev = V.vv(v);
            rep.expect_zero("comm_uptohomotopy", {lbl('x', x), lbl('v', v)},
                            l00(ex, ev) + r00(ev, ex) - V.dV(hv(ex, ev)));
        }
        for (std::size_t u = 0; u < p; ++u) {
            Vec eu = V.uu(u);
            rep.expect_zero("comm_uptohomotopy", {lbl('x', x), lbl('u', u)},
                            l0m(ex, eu) + rm0(eu, ex) - hv(ex, V.dV(eu)));
        }
    }
    for (std::size_t al = 0; al < a; ++al)
        for (std::size_t v = 0; v < q; ++v) {
            Vec ea = L.al(al), ev = V.vv(v);
            rep.expect_zero("comm_uptohomotopy", {lbl('a', al), lbl('v', v)},
                            lm0(ea, ev) + r0m(ev, ea) - hv(L.dm(ea), ev));
        }
    // compatibility with h2 and h_v
    for (std::size_t x1 = 0; x1 < b; ++x1)
        for (std::size_t x2 = 0; x2 < b; ++x2)
            for (std::size_t v = 0; v < q; ++v) {
                Vec e1 = L.x(x1), e2 = L.x(x2), ev = V.vv(v);
                std::vector<std::string> at{lbl('x', x1), lbl('x', x2), lbl('v', v)};
                rep.expect_zero("compatible_r_hv", at, rm0(hv(e1, ev), e2));
                rep.expect_zero("compatible_l_h2", at, lm0(L.H2(e1, e2), ev));
                rep.expect_zero("landhl", at,
                                l0m(e1, hv(e2, ev)) - hv(L.br00(e1, e2), ev) - hv(e2, l00(e1, ev)));
            }
    return rep;
}

// phi = (phi1, phi_l, phi_r): V -> V'
struct RepMorphism {
    Matrix phi_m1;  // p' x p
    Matrix phi_0;   // q' x q
    MultiMap phil;  // L0 x V0 -> V'-1
    MultiMap phir;  // V0 x L0 -> V'-1

    RepMorphism() = default;
    RepMorphism(const HemistrictLie2& L, const Representation2& V, const Representation2& Vp)
        : phi_m1(Vp.p(), V.p()), phi_0(Vp.q(), V.q()),
          phil(MultiMap::bilinear(0, L.b(), 0, V.q(), -1, Vp.p())),
          phir(MultiMap::bilinear(0, V.q(), 0, L.b(), -1, Vp.p()))
    {
    }
};

inline bool operator==(const RepMorphism& a, const RepMorphism& b)
{
    return a.phi_m1 == b.phi_m1 && a.phi_0 == b.phi_0 && a.phil == b.phil && a.phir == b.phir;
}

inline RepMorphism identity_rep_morphism(const HemistrictLie2& L, const Representation2& V)
{
    RepMorphism m(L, V, V);
    m.phi_m1 = Matrix::identity(V.p());
    m.phi_0 = Matrix::identity(V.q());
    return m;
}

inline Report check_rep_morphism(const RepMorphism& m, const HemistrictLie2& L, const Representation2& V,
                                 const Representation2& Vp)
{
    if (m.phi_m1.rows() != Vp.p() || m.phi_m1.cols() != V.p() || m.phi_0.rows() != Vp.q() ||
        m.phi_0.cols() != V.q())
        throw ShapeMismatch("rep morphism: phi1 blocks do not match the complexes");
    Report rep;
    if (!is_chain_map(m.phi_m1, m.phi_0, V.v, Vp.v))
        rep.fail("phi1_chain");
    const std::size_t a = L.a(), b = L.b();
    auto ph_l = [&](const Vec& x, const Vec& v) { return evaluate(m.phil, x, v); };
    auto ph_r = [&](const Vec& v, const Vec& x) { return evaluate(m.phir, v, x); };
    for (std::size_t x = 0; x < b; ++x) {
        Vec ex = L.x(x);
        for (std::size_t v = 0; v < V.q(); ++v) {
            Vec ev = V.vv(v), pv = m.phi_0 * ev;
            std::vector<std::string> at{lbl('x', x), lbl('v', v)};
            rep.expect_zero("flandl", at,
                            evaluate(Vp.l00, ex, pv) - m.phi_0 * evaluate(V.l00, ex, ev) - Vp.dV(ph_l(ex, ev)));
            rep.expect_zero("flandr", at,
                            evaluate(Vp.r00, pv, ex) - m.phi_0 * evaluate(V.r00, ev, ex) - Vp.dV(ph_r(ev, ex)));
            rep.expect_zero("fhv", at,
                            evaluate(Vp.hv, ex, pv) - m.phi_m1 * evaluate(V.hv, ex, ev) - ph_l(ex, ev) -
                                ph_r(ev, ex));
        }
        for (std::size_t u = 0; u < V.p(); ++u) {
            Vec eu = V.uu(u), pu = m.phi_m1 * eu;
            rep.expect_zero("flandl", {lbl('x', x), lbl('u', u)},
                            evaluate(Vp.l0m, ex, pu) - m.phi_m1 * evaluate(V.l0m, ex, eu) - ph_l(ex, V.dV(eu)));
            rep.expect_zero("flandr", {lbl('u', u), lbl('x', x)},
                            evaluate(Vp.rm0, pu, ex) - m.phi_m1 * evaluate(V.rm0, eu, ex) - ph_r(V.dV(eu), ex));
        }
    }
    for (std::size_t al = 0; al < a; ++al) {
        Vec ea = L.al(al);
        for (std::size_t v = 0; v < V.q(); ++v) {
            Vec ev = V.vv(v), pv = m.phi_0 * ev;
            rep.expect_zero("flandl", {lbl('a', al), lbl('v', v)},
                            evaluate(Vp.lm0, ea, pv) - m.phi_m1 * evaluate(V.lm0, ea, ev) - ph_l(L.dm(ea), ev));
            rep.expect_zero("flandr", {lbl('v', v), lbl('a', al)},
                            evaluate(Vp.r0m, pv, ea) - m.phi_m1 * evaluate(V.r0m, ev, ea) - ph_r(ev, L.dm(ea)));
        }
    }
    return rep;
}

// psi o phi
inline RepMorphism compose_rep_morphisms(const RepMorphism& psi, const RepMorphism& phi)
{
    if (psi.phi_0.cols() != phi.phi_0.rows() || psi.phi_m1.cols() != phi.phi_m1.rows())
        throw ShapeMismatch("compose_rep_morphisms: inner complexes differ");
    RepMorphism c;
    c.phi_m1 = psi.phi_m1 * phi.phi_m1;
    c.phi_0 = psi.phi_0 * phi.phi_0;
    const std::size_t b = phi.phil.arg_dims()[0], q = phi.phi_0.cols(), pp = psi.phi_m1.rows();
    c.phil = MultiMap::bilinear(0, b, 0, q, -1, pp);
    c.phir = MultiMap::bilinear(0, q, 0, b, -1, pp);
    for (std::size_t x = 0; x < b; ++x)
        for (std::size_t v = 0; v < q; ++v) {
            Vec ex = unit_vec(b, x), ev = unit_vec(q, v);
            Vec l = evaluate(psi.phil, ex, phi.phi_0 * ev) + psi.phi_m1 * evaluate(phi.phil, ex, ev);
            Vec r = evaluate(psi.phir, phi.phi_0 * ev, ex) + psi.phi_m1 * evaluate(phi.phir, ev, ex);
            for (std::size_t o = 0; o < pp; ++o) {
                c.phil(x, v, o) = l[o];
                c.phir(v, x, o) = r[o];
            }
        }
    return c;
}

struct MinimalModel {
    Representation2 vs;
    RepMorphism phi;  // V -> V_s
    RepMorphism psi;  // V_s -> V
};

// V_s = (V, l, -l, 0), phi = (id, 0, -h_v), psi = (id, 0, h_v).
inline MinimalModel minimal_model(const HemistrictLie2& L, const Representation2& V)
{
    MinimalModel mm;
    mm.vs = V;
    auto& s = mm.vs;
    for (std::size_t x = 0; x < L.b(); ++x)
        for (std::size_t v = 0; v < V.q(); ++v)
            for (std::size_t w = 0; w < V.q(); ++w)
                s.r00(v, x, w) = -V.l00(x, v, w);
    for (std::size_t x = 0; x < L.b(); ++x)
        for (std::size_t u = 0; u < V.p(); ++u)
            for (std::size_t w = 0; w < V.p(); ++w)
                s.rm0(u, x, w) = -V.l0m(x, u, w);
    for (std::size_t al = 0; al < L.a(); ++al)
        for (std::size_t v = 0; v < V.q(); ++v)
            for (std::size_t w = 0; w < V.p(); ++w)
                s.r0m(v, al, w) = -V.lm0(al, v, w);
    s.hv = MultiMap::bilinear(0, L.b(), 0, V.q(), -1, V.p());
    mm.phi = identity_rep_morphism(L, V);
    mm.psi = identity_rep_morphism(L, V);
    for (std::size_t x = 0; x < L.b(); ++x)
        for (std::size_t v = 0; v < V.q(); ++v)
            for (std::size_t o = 0; o < V.p(); ++o) {
                mm.phi.phir(v, x, o) = -V.hv(x, v, o);
                mm.psi.phir(v, x, o) = V.hv(x, v, o);
            }
    return mm;
}

// (L + V, [,] + l + r, h2 + h_v) without checking V. Basis: L first, then V.
inline HemistrictLie2 semidirect_unchecked(const HemistrictLie2& L, const Representation2& V)
{
    const std::size_t a = L.a(), b = L.b(), p = V.p(), q = V.q();
    Matrix d(b + q, a + p);
    for (std::size_t i = 0; i < b; ++i)
        for (std::size_t j = 0; j < a; ++j)
            d(i, j) = L.d()(i, j);
    for (std::size_t i = 0; i < q; ++i)
        for (std::size_t j = 0; j < p; ++j)
            d(b + i, a + j) = V.v.d(i, j);
    HemistrictLie2 E(TwoTermComplex(a + p, b + q, d));
    for (std::size_t x = 0; x < b; ++x) {
        for (std::size_t y = 0; y < b; ++y) {
            for (std::size_t z = 0; z < b; ++z)
                E.c00(x, y, z) = L.c00(x, y, z);
            for (std::size_t g = 0; g < a; ++g)
                E.h2(x, y, g) = L.h2(x, y, g);
        }
        for (std::size_t v = 0; v < q; ++v) {
            for (std::size_t w = 0; w < q; ++w) {
                E.c00(x, b + v, b + w) = V.l00(x, v, w);
                E.c00(b + v, x, b + w) = V.r00(v, x, w);
            }
            for (std::size_t u = 0; u < p; ++u) {
                E.h2(x, b + v, a + u) = V.hv(x, v, u);
                E.h2(b + v, x, a + u) = V.hv(x, v, u);
            }
        }
        for (std::size_t be = 0; be < a; ++be)
            for (std::size_t g = 0; g < a; ++g) {
                E.c0m(x, be, g) = L.c0m(x, be, g);
                E.cm0(be, x, g) = L.cm0(be, x, g);
            }
        for (std::size_t u = 0; u < p; ++u)
            for (std::size_t w = 0; w < p; ++w) {
                E.c0m(x, a + u, a + w) = V.l0m(x, u, w);
                E.cm0(a + u, x, a + w) = V.rm0(u, x, w);
            }
    }
    for (std::size_t al = 0; al < a; ++al)
        for (std::size_t v = 0; v < q; ++v)
            for (std::size_t w = 0; w < p; ++w) {
                E.cm0(al, b + v, a + w) = V.lm0(al, v, w);
                E.c0m(b + v, al, a + w) = V.r0m(v, al, w);
            }
    return E;
}

inline HemistrictLie2 semidirect(const HemistrictLie2& L, const Representation2& V)
{
    if (!check_representation(V, L).ok())
        throw NotARepresentation("semidirect: V fails the representation axioms");
    HemistrictLie2 E = semidirect_unchecked(L, V);
    if (!check_hemistrict(E).ok())
        throw InvariantViolated("semidirect product of a representation is not hemistrict");
    return E;
}

// l_{f2(x',y')} = 0 on V^0 for all basis pairs.
inline bool is_f_compatible(const Representation2& V, const Morphism2& f)
{
    const std::size_t bp = f.f2.arg_dims()[0];
    for (std::size_t x = 0; x < bp; ++x)
        for (std::size_t y = 0; y < bp; ++y) {
            Vec al = f.F2(unit_vec(bp, x), unit_vec(bp, y));
            if (is_zero(al))
                continue;
            for (std::size_t v = 0; v < V.q(); ++v)
                if (!is_zero(evaluate(V.lm0, al, V.vv(v))))
                    return false;
        }
    return true;
}

// Pullback of V along f: L' -> L.
inline Representation2 pullback_rep(const Representation2& V, const Morphism2& f, const HemistrictLie2& Lp,
                                    const HemistrictLie2& L)
{
    check_shapes(f, Lp, L);
    if (!is_f_compatible(V, f))
        throw NotCompatible("l vanishes along the image of f2 is required");
    Representation2 W(Lp, V.v);
    const std::size_t p = V.p(), q = V.q();
    for (std::size_t x = 0; x < Lp.b(); ++x) {
        Vec fx = f.f_0 * Lp.x(x);
        for (std::size_t v = 0; v < q; ++v) {
            Vec a = evaluate(V.l00, fx, V.vv(v)), r = evaluate(V.r00, V.vv(v), fx), h = evaluate(V.hv, fx, V.vv(v));
            for (std::size_t w = 0; w < q; ++w) {
                W.l00(x, v, w) = a[w];
                W.r00(v, x, w) = r[w];
            }
            for (std::size_t w = 0; w < p; ++w)
                W.hv(x, v, w) = h[w];
        }
        for (std::size_t u = 0; u < p; ++u) {
            Vec a = evaluate(V.l0m, fx, V.uu(u)), r = evaluate(V.rm0, V.uu(u), fx);
            for (std::size_t w = 0; w < p; ++w) {
                W.l0m(x, u, w) = a[w];
                W.rm0(u, x, w) = r[w];
            }
        }
    }
    for (std::size_t al = 0; al < Lp.a(); ++al) {
        Vec fa = f.f_m1 * Lp.al(al);
        for (std::size_t v = 0; v < q; ++v) {
            Vec a = evaluate(V.lm0, fa, V.vv(v)), r = evaluate(V.r0m, V.vv(v), fa);
            for (std::size_t w = 0; w < p; ++w) {
                W.lm0(al, v, w) = a[w];
                W.r0m(v, al, w) = r[w];
            }
        }
    }
    // h_v(d f2(x,y), v) survives in landhl unless it vanishes; symmetric V always pass
    Report r = check_representation(W, Lp);
    if (!r.ok())
        throw NotCompatible("pullback fails " + r.violations().front().describe());
    return W;
}

// Representation of L_g on V'[1] -> V from a Leibniz module, V' = span{l_x v + r_x v}.
inline Representation2 rep_from_leibniz_module(const LeibnizAlgebra& g, const LeibnizModule& m,
                                               const HemistrictLie2& Lg)
{
    const std::size_t n = g.dim, q = m.dim;
    auto lx = [&](std::size_t x, const Vec& v) { return evaluate(m.l, g.e(x), v); };
    auto rx = [&](std::size_t x, const Vec& v) { return evaluate(m.r, v, g.e(x)); };
    std::vector<Vec> gens;
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t v = 0; v < q; ++v)
            gens.push_back(lx(x, unit_vec(q, v)) + rx(x, unit_vec(q, v)));
    SpanBasis sp = span_basis(q, gens);
    const std::size_t p = sp.dim();
    auto in_sp = [&](const Vec& v) {
        if (!sp.contains(v))
            throw InvariantViolated("induced action leaves span{l_x v + r_x v}");
        return sp.coords(v);
    };
    Representation2 V(Lg, TwoTermComplex(p, q, sp.basis));
    V.l00 = m.l;
    V.r00 = m.r;
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t u = 0; u < p; ++u) {
            Vec iu = sp.basis.column(u);
            Vec a = in_sp(lx(x, iu)), r = in_sp(rx(x, iu));
            for (std::size_t w = 0; w < p; ++w) {
                V.l0m(x, u, w) = a[w];
                V.rm0(u, x, w) = r[w];
            }
        }
        for (std::size_t v = 0; v < q; ++v) {
            Vec h = in_sp(lx(x, unit_vec(q, v)) + rx(x, unit_vec(q, v)));
            for (std::size_t w = 0; w < p; ++w)
                V.hv(x, v, w) = h[w];
        }
    }
    for (std::size_t al = 0; al < Lg.a(); ++al) {
        Vec k = Lg.dm(Lg.al(al));
        for (std::size_t v = 0; v < q; ++v) {
            Vec ev = unit_vec(q, v);
            Vec a = in_sp(evaluate(m.l, k, ev)), r = in_sp(evaluate(m.r, ev, k));
            for (std::size_t w = 0; w < p; ++w) {
                V.lm0(al, v, w) = a[w];
                V.r0m(v, al, w) = r[w];
            }
        }
    }
    return V;
}

// l_alpha = 0 for every alpha in L^-1.
inline bool l_alpha_vanishes(const Representation2& V) { return V.lm0.is_zero(); }

}  // namespace lie2coh
