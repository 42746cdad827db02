#pragma once

// Hemistrict Lie 2-algebras, their 1- and 2-morphisms, the algebra built from
// a Leibniz algebra, and the splitting onto the Lie quotient of an injective one.

#include "leibniz.hpp"

namespace lie2coh {

// Brackets are stored by degree block; the (-1,-1) block lands in degree -2
// and is omitted.
struct HemistrictLie2 {
    TwoTermComplex complex;
    MultiMap c00;  // L0 x L0  -> L0
    MultiMap c0m;  // L0 x L-1 -> L-1
    MultiMap cm0;  // L-1 x L0 -> L-1
    MultiMap h2;   // L0 . L0  -> L-1, symmetric

    HemistrictLie2() = default;
    explicit HemistrictLie2(TwoTermComplex cx) : complex(std::move(cx))
    {
        const std::size_t a = complex.dim_m1, b = complex.dim_0;
        c00 = MultiMap::bilinear(0, b, 0, b, 0, b);
        c0m = MultiMap::bilinear(0, b, -1, a, -1, a);
        cm0 = MultiMap::bilinear(-1, a, 0, b, -1, a);
        h2 = MultiMap::bilinear(0, b, 0, b, -1, a);
        h2.declare_symmetric({0, 1});
    }
    HemistrictLie2(std::size_t a, std::size_t b) : HemistrictLie2(TwoTermComplex(a, b)) {}

    std::size_t a() const { return complex.dim_m1; }
    std::size_t b() const { return complex.dim_0; }
    const Matrix& d() const { return complex.d; }

    Vec br00(const Vec& x, const Vec& y) const { return evaluate(c00, x, y); }
    Vec br0m(const Vec& x, const Vec& al) const { return evaluate(c0m, x, al); }
    Vec brm0(const Vec& al, const Vec& y) const { return evaluate(cm0, al, y); }
    Vec H2(const Vec& x, const Vec& y) const { return evaluate(h2, x, y); }
    Vec dm(const Vec& al) const { return complex.d * al; }
    Vec x(std::size_t i) const { return unit_vec(b(), i); }
    Vec al(std::size_t i) const { return unit_vec(a(), i); }
};

inline bool operator==(const HemistrictLie2& s, const HemistrictLie2& t)
{
    return s.complex == t.complex && s.c00 == t.c00 && s.c0m == t.c0m && s.cm0 == t.cm0 && s.h2 == t.h2;
}

inline Report check_hemistrict(const HemistrictLie2& L)
{
    Report rep;
    const std::size_t a = L.a(), b = L.b();
    for (std::size_t i = 0; i < b; ++i)
        for (std::size_t j = i + 1; j < b; ++j)
            rep.expect_zero("h2_symmetric", {lbl('x', i), lbl('x', j)}, L.h2.column({i, j}) - L.h2.column({j, i}));
    // bracket is a chain map
    for (std::size_t x = 0; x < b; ++x)
        for (std::size_t be = 0; be < a; ++be) {
            rep.expect_zero("chain", {lbl('x', x), lbl('a', be)},
                            L.dm(L.br0m(L.x(x), L.al(be))) - L.br00(L.x(x), L.dm(L.al(be))));
            rep.expect_zero("chain", {lbl('a', be), lbl('x', x)},
                            L.dm(L.brm0(L.al(be), L.x(x))) - L.br00(L.dm(L.al(be)), L.x(x)));
        }
    for (std::size_t al = 0; al < a; ++al)
        for (std::size_t be = 0; be < a; ++be)
            rep.expect_zero("chain", {lbl('a', al), lbl('a', be)},
                            L.br0m(L.dm(L.al(al)), L.al(be)) - L.brm0(L.al(al), L.dm(L.al(be))));
    // graded Leibniz rule on triples with at most one degree -1 entry
    for (std::size_t x = 0; x < b; ++x)
        for (std::size_t y = 0; y < b; ++y) {
            Vec ex = L.x(x), ey = L.x(y);
            for (std::size_t z = 0; z < b; ++z) {
                Vec ez = L.x(z);
                rep.expect_zero("leibniz", {lbl('x', x), lbl('x', y), lbl('x', z)},
                                L.br00(ex, L.br00(ey, ez)) - L.br00(L.br00(ex, ey), ez) -
                                    L.br00(ey, L.br00(ex, ez)));
            }
            for (std::size_t g = 0; g < a; ++g) {
                Vec eg = L.al(g);
                rep.expect_zero("leibniz", {lbl('a', g), lbl('x', x), lbl('x', y)},
                                L.brm0(eg, L.br00(ex, ey)) - L.brm0(L.brm0(eg, ex), ey) -
                                    L.br0m(ex, L.brm0(eg, ey)));
                rep.expect_zero("leibniz", {lbl('x', x), lbl('a', g), lbl('x', y)},
                                L.br0m(ex, L.brm0(eg, ey)) - L.brm0(L.br0m(ex, eg), ey) -
                                    L.brm0(eg, L.br00(ex, ey)));
                rep.expect_zero("leibniz", {lbl('x', x), lbl('x', y), lbl('a', g)},
                                L.br0m(ex, L.br0m(ey, eg)) - L.br0m(L.br00(ex, ey), eg) -
                                    L.br0m(ey, L.br0m(ex, eg)));
            }
        }
    // [x,y] + [y,x] = d(h2)(x,y) on all degree blocks
    for (std::size_t x = 0; x < b; ++x) {
        for (std::size_t y = 0; y < b; ++y)
            rep.expect_zero("anticomm", {lbl('x', x), lbl('x', y)},
                            L.br00(L.x(x), L.x(y)) + L.br00(L.x(y), L.x(x)) - L.dm(L.H2(L.x(x), L.x(y))));
        for (std::size_t be = 0; be < a; ++be) {
            rep.expect_zero("anticomm", {lbl('x', x), lbl('a', be)},
                            L.br0m(L.x(x), L.al(be)) + L.brm0(L.al(be), L.x(x)) -
                                L.H2(L.x(x), L.dm(L.al(be))));
        }
    }
    // [h2(x,y),z] = 0 and [x,h2(y,z)] = h2([x,y],z) + h2(y,[x,z])
    for (std::size_t x = 0; x < b; ++x)
        for (std::size_t y = 0; y < b; ++y)
            for (std::size_t z = 0; z < b; ++z) {
                Vec ex = L.x(x), ey = L.x(y), ez = L.x(z);
                std::vector<std::string> at{lbl('x', x), lbl('x', y), lbl('x', z)};
                rep.expect_zero("hemi1", at, L.brm0(L.H2(ex, ey), ez));
                rep.expect_zero("hemi2", at,
                                L.br0m(ex, L.H2(ey, ez)) - L.H2(L.br00(ex, ey), ez) - L.H2(ey, L.br00(ex, ez)));
            }
    return rep;
}

// L_g = (K[1] -> g, [,], h2) with K the Leibniz kernel in reduced echelon basis.
inline HemistrictLie2 from_leibniz(const LeibnizAlgebra& g)
{
    SpanBasis k = leibniz_kernel(g);
    const std::size_t a = k.dim(), b = g.dim;
    HemistrictLie2 L(TwoTermComplex(a, b, k.basis));
    L.c00 = g.c;
    auto in_k = [&](const Vec& v) {
        if (!k.contains(v))
            throw InvariantViolated("bracket with the kernel leaves the kernel");
        return k.coords(v);
    };
    for (std::size_t x = 0; x < b; ++x)
        for (std::size_t al = 0; al < a; ++al) {
            Vec kv = k.basis.column(al);
            Vec u = in_k(g.bracket(g.e(x), kv)), w = in_k(g.bracket(kv, g.e(x)));
            for (std::size_t o = 0; o < a; ++o) {
                L.c0m(x, al, o) = u[o];
                L.cm0(al, x, o) = w[o];
            }
        }
    for (std::size_t x = 0; x < b; ++x)
        for (std::size_t y = 0; y < b; ++y) {
            Vec h = in_k(g.bracket(g.e(x), g.e(y)) + g.bracket(g.e(y), g.e(x)));
            for (std::size_t o = 0; o < a; ++o)
                L.h2(x, y, o) = h[o];
        }
    return L;
}

// Strict Lie 2-algebra with L^-1 = 0.
inline HemistrictLie2 from_lie(const LieAlgebra& g)
{
    HemistrictLie2 L(0, g.dim);
    L.c00 = g.c;
    return L;
}

inline bool h2_vanishes_on_image(const HemistrictLie2& L)
{
    for (std::size_t i = 0; i < L.a(); ++i)
        for (std::size_t j = 0; j < L.a(); ++j)
            if (!is_zero(L.H2(L.dm(L.al(i)), L.dm(L.al(j)))))
                return false;
    return true;
}

// f = (f1, f2): L' -> L.
struct Morphism2 {
    Matrix f_m1;  // a x a'
    Matrix f_0;   // b x b'
    MultiMap f2;  // L'0 x L'0 -> L-1

    Morphism2() = default;
    Morphism2(const HemistrictLie2& src, const HemistrictLie2& dst)
        : f_m1(dst.a(), src.a()), f_0(dst.b(), src.b()),
          f2(MultiMap::bilinear(0, src.b(), 0, src.b(), -1, dst.a()))
    {
    }
    Vec F2(const Vec& x, const Vec& y) const { return evaluate(f2, x, y); }
};

inline Morphism2 identity_morphism(const HemistrictLie2& L)
{
    Morphism2 f(L, L);
    f.f_m1 = Matrix::identity(L.a());
    f.f_0 = Matrix::identity(L.b());
    return f;
}

inline void check_shapes(const Morphism2& f, const HemistrictLie2& src, const HemistrictLie2& dst)
{
    if (f.f_m1.rows() != dst.a() || f.f_m1.cols() != src.a() || f.f_0.rows() != dst.b() ||
        f.f_0.cols() != src.b() || f.f2.arg_dims() != std::vector<std::size_t>{src.b(), src.b()} ||
        f.f2.out_dim() != dst.a())
        throw ShapeMismatch("morphism blocks do not match source and target");
}

inline Report check_morphism(const Morphism2& f, const HemistrictLie2& src, const HemistrictLie2& L)
{
    check_shapes(f, src, L);
    Report rep;
    const HemistrictLie2& Lp = src;
    if (!is_chain_map(f.f_m1, f.f_0, Lp.complex, L.complex))
        rep.fail("f1_chain");
    for (std::size_t x = 0; x < Lp.b(); ++x) {
        Vec ex = Lp.x(x), fx = f.f_0 * ex;
        for (std::size_t y = 0; y < Lp.b(); ++y) {
            Vec ey = Lp.x(y), fy = f.f_0 * ey;
            std::vector<std::string> at{lbl('x', x), lbl('x', y)};
            rep.expect_zero("f1uptof2", at,
                            L.br00(fx, fy) - f.f_0 * Lp.br00(ex, ey) - L.dm(f.F2(ex, ey)));
            rep.expect_zero("h2andf2", at,
                            L.H2(fx, fy) - f.f_m1 * Lp.H2(ex, ey) - f.F2(ex, ey) - f.F2(ey, ex));
        }
        for (std::size_t be = 0; be < Lp.a(); ++be) {
            Vec eb = Lp.al(be), fb = f.f_m1 * eb;
            rep.expect_zero("f1uptof2", {lbl('x', x), lbl('a', be)},
                            L.br0m(fx, fb) - f.f_m1 * Lp.br0m(ex, eb) - f.F2(ex, Lp.dm(eb)));
            rep.expect_zero("f1uptof2", {lbl('a', be), lbl('x', x)},
                            L.brm0(fb, fx) - f.f_m1 * Lp.brm0(eb, ex) - f.F2(Lp.dm(eb), ex));
        }
    }
    for (std::size_t x = 0; x < Lp.b(); ++x)
        for (std::size_t y = 0; y < Lp.b(); ++y)
            for (std::size_t z = 0; z < Lp.b(); ++z) {
                Vec ex = Lp.x(x), ey = Lp.x(y), ez = Lp.x(z);
                Vec lhs = L.br0m(f.f_0 * ex, f.F2(ey, ez)) - L.br0m(f.f_0 * ey, f.F2(ex, ez)) -
                          L.brm0(f.F2(ex, ey), f.f_0 * ez);
                Vec rhs = f.F2(Lp.br00(ex, ey), ez) + f.F2(ey, Lp.br00(ex, ez)) - f.F2(ex, Lp.br00(ey, ez));
                rep.expect_zero("jacobiandf2", {lbl('x', x), lbl('x', y), lbl('x', z)}, lhs - rhs);
            }
    return rep;
}

// (f o fp)_1 = f_1 fp_1, (f o fp)_2(x,y) = f_2(fp_1 x, fp_1 y) + f_1 fp_2(x,y)
inline Morphism2 compose_morphisms(const Morphism2& f, const Morphism2& fp)
{
    if (f.f_0.cols() != fp.f_0.rows() || f.f_m1.cols() != fp.f_m1.rows())
        throw ShapeMismatch("compose_morphisms: inner spaces differ");
    const std::size_t bpp = fp.f_0.cols();
    Morphism2 h;
    h.f_m1 = f.f_m1 * fp.f_m1;
    h.f_0 = f.f_0 * fp.f_0;
    h.f2 = MultiMap::bilinear(0, bpp, 0, bpp, -1, f.f_m1.rows());
    for (std::size_t x = 0; x < bpp; ++x)
        for (std::size_t y = 0; y < bpp; ++y) {
            Vec ex = unit_vec(bpp, x), ey = unit_vec(bpp, y);
            Vec v = f.F2(fp.f_0 * ex, fp.f_0 * ey) + f.f_m1 * fp.F2(ex, ey);
            for (std::size_t o = 0; o < v.size(); ++o)
                h.f2(x, y, o) = v[o];
        }
    return h;
}

inline bool operator==(const Morphism2& a, const Morphism2& b)
{
    return a.f_m1 == b.f_m1 && a.f_0 == b.f_0 && a.f2 == b.f2;
}

// theta: f => g, a chain homotopy L'0 -> L-1.
struct TwoMorphism {
    Matrix theta;  // a x b'
};

inline Report check_two_morphism_report(const TwoMorphism& t, const Morphism2& f, const Morphism2& g,
                                        const HemistrictLie2& src, const HemistrictLie2& L)
{
    check_shapes(f, src, L);
    check_shapes(g, src, L);
    if (t.theta.rows() != L.a() || t.theta.cols() != src.b())
        throw ShapeMismatch("theta must be dim L^-1 x dim L'^0");
    Report rep;
    Matrix d0 = f.f_0 - g.f_0 - L.d() * t.theta;
    Matrix dm = f.f_m1 - g.f_m1 - t.theta * src.d();
    if (!d0.is_zero())
        rep.fail("two_morphism_f1_deg0");
    if (!dm.is_zero())
        rep.fail("two_morphism_f1_degm1");
    for (std::size_t x = 0; x < src.b(); ++x)
        for (std::size_t y = 0; y < src.b(); ++y) {
            Vec ex = src.x(x), ey = src.x(y);
            Vec diff = f.F2(ex, ey) - g.F2(ex, ey);
            Vec tx = t.theta * ex, ty = t.theta * ey, tb = t.theta * src.br00(ex, ey);
            std::vector<std::string> at{lbl('x', x), lbl('x', y)};
            rep.expect_zero("two_morphism_f2_a", at,
                            diff - (L.br0m(g.f_0 * ex, ty) + L.brm0(tx, f.f_0 * ey) - tb));
            rep.expect_zero("two_morphism_f2_b", at,
                            diff - (L.br0m(f.f_0 * ex, ty) + L.brm0(tx, g.f_0 * ey) - tb));
        }
    return rep;
}

inline bool check_two_morphism(const TwoMorphism& t, const Morphism2& f, const Morphism2& g,
                               const HemistrictLie2& src, const HemistrictLie2& L)
{
    return check_two_morphism_report(t, f, g, src, L).ok();
}

inline bool is_injective(const HemistrictLie2& L) { return rank(L.d()) == L.a(); }

struct SplittingData {
    Matrix j;      // b x c, section of L0 -> L_Lie
    Matrix pr;     // c x b
    Matrix pr_m1;  // a x b
    Morphism2 g;   // L_Lie -> L
    Morphism2 f;   // L -> L_Lie
    TwoMorphism theta;  // id_L => g o f
};

struct LieSplitting {
    LieAlgebra lie;
    HemistrictLie2 lie_hemi;  // L_Lie as a strict Lie 2-algebra
    SplittingData split;
};

// L0 = j(L_Lie) + dL^-1 with j picked greedily on the standard basis.
inline LieSplitting lie_quotient(const HemistrictLie2& L)
{
    if (!is_injective(L))
        throw NotInjective("d: L^-1 -> L^0 has a kernel");
    const std::size_t a = L.a(), b = L.b();
    auto comp = greedy_complement(L.d());
    const std::size_t c = comp.size();
    Matrix t(b, b);
    for (std::size_t i = 0; i < c; ++i)
        t(comp[i], i) = 1;
    for (std::size_t g = 0; g < a; ++g)
        for (std::size_t i = 0; i < b; ++i)
            t(i, c + g) = L.d()(i, g);
    Matrix ti = inverse(t);
    LieSplitting out;
    SplittingData& s = out.split;
    s.j = Matrix(b, c);
    s.pr = Matrix(c, b);
    s.pr_m1 = Matrix(a, b);
    for (std::size_t i = 0; i < b; ++i) {
        for (std::size_t k = 0; k < c; ++k) {
            s.j(i, k) = t(i, k);
            s.pr(k, i) = ti(k, i);
        }
        for (std::size_t g = 0; g < a; ++g)
            s.pr_m1(g, i) = ti(c + g, i);
    }
    out.lie = LieAlgebra(c);
    for (std::size_t x = 0; x < c; ++x)
        for (std::size_t y = 0; y < c; ++y) {
            Vec v = s.pr * L.br00(s.j.column(x), s.j.column(y));
            for (std::size_t z = 0; z < c; ++z)
                out.lie.c(x, y, z) = v[z];
        }
    out.lie_hemi = from_lie(out.lie);
    const HemistrictLie2& Lie = out.lie_hemi;

    s.g = Morphism2(Lie, L);
    s.g.f_0 = s.j;
    for (std::size_t x = 0; x < c; ++x)
        for (std::size_t y = 0; y < c; ++y) {
            Vec v = s.pr_m1 * L.br00(s.j.column(x), s.j.column(y));
            for (std::size_t o = 0; o < a; ++o)
                s.g.f2(x, y, o) = v[o];
        }
    s.f = Morphism2(L, Lie);
    s.f.f_0 = s.pr;
    s.theta.theta = s.pr_m1;

    if (s.j * s.pr + L.d() * s.pr_m1 != Matrix::identity(b))
        throw InvariantViolated("splitting: j pr + d pr_-1 != id");
    if (!check_lie(out.lie).ok())
        throw InvariantViolated("L_Lie is not a Lie algebra");
    if (!check_morphism(s.g, Lie, L).ok() || !check_morphism(s.f, L, Lie).ok())
        throw InvariantViolated("splitting maps are not morphisms");
    if (!(compose_morphisms(s.f, s.g) == identity_morphism(Lie)))
        throw InvariantViolated("splitting: f o g != id");
    if (!check_two_morphism(s.theta, identity_morphism(L), compose_morphisms(s.g, s.f), L, L))
        throw InvariantViolated("splitting: theta is not a 2-morphism id => g o f");
    return out;
}

}  // namespace lie2coh
