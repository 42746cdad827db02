#pragma once

// Abelian extension L + V built from a 2-cocycle, and the splitting test for
// coboundaries.

#include "lowdeg.hpp"

namespace lie2coh {

// Bracket data of a 2-term weak Lie 2-algebra: a hemistrict-shaped bracket
// and alternator plus a Jacobiator h3: E0^3 -> E-1.
struct WeakLie2Data {
    HemistrictLie2 base;
    MultiMap h3;

    std::size_t a() const { return base.a(); }
    std::size_t b() const { return base.b(); }
    Vec H3(const Vec& x, const Vec& y, const Vec& z) const { return evaluate(h3, {x, y, z}); }
};

namespace detail {
struct ExtConventions {
    int twist = -1;     // d_w(al) = d al + twist * omega_1^{(0)}(al)
    int jacobi = -1;    // J(a,b,c) = jacobi * (H3 with d inserted)
    int split = -1;     // f is a morphism iff D(psi) = split * omega
    int split_h3 = -1;  // sign of H3(f x, f y, f z) in the f2 Jacobi equation
    int split_f2 = -1;  // f2 = split_f2 * psi2
};
}  // namespace detail

// Chain property of the bracket, the three alternator equations and the
// Jacobi identity up to h3 with J(a,b,c) = {a,{b,c}} - {{a,b},c} - {b,{a,c}}.
inline Report check_weak_lie2(const WeakLie2Data& E, const detail::ExtConventions& cv = {})
{
    Report rep;
    const HemistrictLie2& B = E.base;
    const std::size_t a = B.a(), b = B.b();
    const Rational js(cv.jacobi);
    for (std::size_t x = 0; x < b; ++x)
        for (std::size_t be = 0; be < a; ++be) {
            Vec ex = B.x(x), eb = B.al(be);
            std::vector<std::string> at{lbl('x', x), lbl('a', be)};
            rep.expect_zero("chain_x_beta", at, B.dm(B.br0m(ex, eb)) - B.br00(ex, B.dm(eb)));
            rep.expect_zero("chain_alpha_y", at, B.dm(B.brm0(eb, ex)) - B.br00(B.dm(eb), ex));
            rep.expect_zero("h2_x_beta", at, B.br0m(ex, eb) + B.brm0(eb, ex) - B.H2(ex, B.dm(eb)));
        }
    for (std::size_t al = 0; al < a; ++al)
        for (std::size_t be = 0; be < a; ++be)
            rep.expect_zero("chain_alpha_beta", {lbl('a', al), lbl('a', be)},
                            B.brm0(B.al(al), B.dm(B.al(be))) - B.br0m(B.dm(B.al(al)), B.al(be)));
    for (std::size_t x = 0; x < b; ++x)
        for (std::size_t y = 0; y < b; ++y) {
            Vec ex = B.x(x), ey = B.x(y);
            rep.expect_zero("h2_xy", {lbl('x', x), lbl('x', y)},
                            B.br00(ex, ey) + B.br00(ey, ex) - B.dm(B.H2(ex, ey)));
            for (std::size_t z = 0; z < b; ++z) {
                Vec ez = B.x(z);
                Vec J = B.br00(ex, B.br00(ey, ez)) - B.br00(B.br00(ex, ey), ez) - B.br00(ey, B.br00(ex, ez));
                rep.expect_zero("jacobi_xyz", {lbl('x', x), lbl('x', y), lbl('x', z)}, J - js * B.dm(E.H3(ex, ey, ez)));
            }
            for (std::size_t al = 0; al < a; ++al) {
                Vec ea = B.al(al), da = B.dm(ea);
                Vec J1 = B.brm0(ea, B.br00(ex, ey)) - B.brm0(B.brm0(ea, ex), ey) - B.br0m(ex, B.brm0(ea, ey));
                rep.expect_zero("jacobi_axy", {lbl('a', al), lbl('x', x), lbl('x', y)}, J1 - js * E.H3(da, ex, ey));
                Vec J2 = B.br0m(ex, B.brm0(ea, ey)) - B.brm0(B.br0m(ex, ea), ey) - B.brm0(ea, B.br00(ex, ey));
                rep.expect_zero("jacobi_xay", {lbl('x', x), lbl('a', al), lbl('x', y)}, J2 - js * E.H3(ex, da, ey));
                Vec J3 = B.br0m(ex, B.br0m(ey, ea)) - B.br0m(B.br00(ex, ey), ea) - B.br0m(ey, B.br0m(ex, ea));
                rep.expect_zero("jacobi_xya", {lbl('x', x), lbl('x', y), lbl('a', al)}, J3 - js * E.H3(ex, ey, da));
            }
        }
    return rep;
}

namespace detail {

inline WeakLie2Data build_extension(const HemistrictLie2& L, const Representation2& Vin, const StandardCochain& w,
                                    const LowConventions& lc, const ExtConventions& ec)
{
    const Representation2 V = minimal_model(L, Vin).vs;
    const std::size_t a = L.a(), b = L.b(), p = V.p(), q = V.q();
    WeakLie2Data E;
    E.base = semidirect_unchecked(L, V);
    E.h3 = MultiMap({0, 0, 0}, -1, {b + q, b + q, b + q}, a + p);
    HemistrictLie2& B = E.base;
    auto comp = [&](int pp, std::size_t k, std::vector<Vec> args) -> Vec {
        if (!w.has(pp, k))
            return Vec(pp == 0 ? q : p);
        return w(pp, k, args);
    };
    for (std::size_t al = 0; al < a; ++al) {
        Vec t = Rational(lc.two_a) * comp(0, 1, {L.al(al)});
        for (std::size_t o = 0; o < q; ++o)
            B.complex.d(b + o, al) += ec.twist * t[o];
    }
    for (std::size_t x = 0; x < b; ++x) {
        for (std::size_t y = 0; y < b; ++y) {
            Vec t = Rational(lc.two_b) * comp(0, 0, {L.x(x), L.x(y)});
            for (std::size_t o = 0; o < q; ++o)
                B.c00(x, y, b + o) += t[o];
            for (std::size_t z = 0; z < b; ++z) {
                Vec e = Rational(lc.two_e) * comp(-1, 0, {L.x(x), L.x(y), L.x(z)});
                for (std::size_t o = 0; o < p; ++o)
                    E.h3(x, y, z, a + o) = e[o];
            }
        }
        for (std::size_t be = 0; be < a; ++be) {
            Vec c = Rational(lc.two_c) * comp(-1, 1, {L.x(x), L.al(be)});
            for (std::size_t o = 0; o < p; ++o) {
                B.c0m(x, be, a + o) += c[o];
                B.cm0(be, x, a + o) += lc.two_swap * c[o];
            }
        }
    }
    return E;
}

}  // namespace detail

// Weak Lie 2-algebra on L + V for a 2-cocycle w; hemistrict when the
// omega_0^{(-1)} part vanishes. Uses the minimal model of V for the actions.
inline WeakLie2Data extension_from_cocycle(const HemistrictLie2& L, const Representation2& V, const StandardCochain& w)
{
    if (w.n != 2)
        throw DegreeOutOfRange("extension_from_cocycle needs a degree 2 cochain");
    LowDegreeVerdict v = classify_low(L, V, w);
    if (!v.is_cocycle)
        throw NotACocycle("extension_from_cocycle: " + v.equations.violations().front().describe());
    WeakLie2Data E = detail::build_extension(L, V, w, {}, {});
    Report rep = check_weak_lie2(E);
    if (!rep.ok())
        throw InvariantViolated("extension: " + rep.violations().front().describe());
    if (E.h3.is_zero()) {
        Report h = check_hemistrict(E.base);
        if (!h.ok())
            throw InvariantViolated("extension with vanishing Jacobiator is not hemistrict: " +
                                    h.violations().front().describe());
    }
    return E;
}

// f = (id + psi1, (0, -psi2)): L -> L + V for a 1-cochain psi. It is a
// morphism into extension_from_cocycle(-D psi).
inline Morphism2 splitting_candidate(const HemistrictLie2& L, const Representation2& V, const StandardCochain& psi)
{
    if (psi.n != 1)
        throw DegreeOutOfRange("splitting needs a degree 1 cochain");
    const std::size_t a = L.a(), b = L.b(), p = V.p(), q = V.q();
    const detail::LowConventions lc;
    const detail::ExtConventions ec;
    Morphism2 f;
    f.f_m1 = Matrix(a + p, a);
    f.f_0 = Matrix(b + q, b);
    f.f2 = MultiMap::bilinear(0, b, 0, b, -1, a + p);
    for (std::size_t x = 0; x < b; ++x) {
        f.f_0(x, x) = 1;
        Vec v = psi(0, 0, {L.x(x)});
        for (std::size_t o = 0; o < q; ++o)
            f.f_0(b + o, x) = v[o];
        for (std::size_t y = 0; y < b; ++y) {
            Vec u = psi(-1, 0, {L.x(x), L.x(y)});
            for (std::size_t o = 0; o < p; ++o)
                f.f2(x, y, a + o) = ec.split_f2 * lc.one_2 * u[o];
        }
    }
    for (std::size_t al = 0; al < a; ++al) {
        f.f_m1(al, al) = 1;
        Vec u = psi(-1, 1, {L.al(al)});
        for (std::size_t o = 0; o < p; ++o)
            f.f_m1(a + o, al) = lc.one_m1 * u[o];
    }
    return f;
}

// psi with extension_from_cocycle(w) split by splitting_candidate(psi), i.e.
// D psi = -w; nullopt when w is not a coboundary.
inline std::optional<StandardCochain> find_splitting(const HemistrictLie2& L, const Representation2& V,
                                                     const StandardCochain& w)
{
    if (w.n != 2)
        throw DegreeOutOfRange("splittings are sought for degree 2 cochains");
    const ComplexRealization cr = realize(L, V, 1);
    const DegreeData& src = cr.at(1);
    const SparseMatrix img = src.ambient_diff * src.basis;
    const detail::ExtConventions ec;
    Vec target = cochain_to_ambient(L, V, w);
    for (auto& t : target)
        t *= ec.split;
    auto y = solve(img, target);
    if (!y)
        return std::nullopt;
    return cochain_from_ambient(L, V, 1, src.basis.apply(*y));
}

// Same shape on L + V -> L + V: identity on V, psi added on the L part.
// Maps extension_from_cocycle(w) to extension_from_cocycle(w - D psi).
inline Morphism2 regauge_candidate(const HemistrictLie2& L, const Representation2& V, const StandardCochain& psi)
{
    const Morphism2 s = splitting_candidate(L, V, psi);
    const std::size_t a = L.a(), b = L.b(), p = V.p(), q = V.q();
    Morphism2 f;
    f.f_m1 = Matrix(a + p, a + p);
    f.f_0 = Matrix(b + q, b + q);
    f.f2 = MultiMap::bilinear(0, b + q, 0, b + q, -1, a + p);
    for (std::size_t i = 0; i < a + p; ++i)
        for (std::size_t j = 0; j < a; ++j)
            f.f_m1(i, j) = s.f_m1(i, j);
    for (std::size_t i = 0; i < p; ++i)
        f.f_m1(a + i, a + i) = 1;
    for (std::size_t i = 0; i < b + q; ++i)
        for (std::size_t j = 0; j < b; ++j)
            f.f_0(i, j) = s.f_0(i, j);
    for (std::size_t i = 0; i < q; ++i)
        f.f_0(b + i, b + i) = 1;
    for (std::size_t x = 0; x < b; ++x)
        for (std::size_t y = 0; y < b; ++y)
            for (std::size_t o = 0; o < a + p; ++o)
                f.f2(x, y, o) = s.f2(x, y, o);
    return f;
}

// Morphism equations of f: S -> T between weak Lie 2-algebras. The
// Jacobiators enter the f2 Jacobi equation; everything else is the hemistrict
// morphism check.
inline Report check_weak_morphism(const Morphism2& f, const WeakLie2Data& S, const WeakLie2Data& T,
                                  const detail::ExtConventions& cv = {})
{
    Report rep;
    // check_morphism sees the bracket data only; its jacobiandf2 lacks the h3 terms
    const Report base = check_morphism(f, S.base, T.base);
    for (auto& v : base.violations()) {
        if (v.equation == "jacobiandf2")
            continue;
        if (v.residual.empty())
            rep.fail(v.equation, v.args);
        else
            rep.expect_zero(v.equation, v.args, v.residual);
    }
    const HemistrictLie2& A = S.base;
    const HemistrictLie2& B = T.base;
    const Rational sh(cv.split_h3);
    for (std::size_t x = 0; x < A.b(); ++x)
        for (std::size_t y = 0; y < A.b(); ++y)
            for (std::size_t z = 0; z < A.b(); ++z) {
                Vec ex = A.x(x), ey = A.x(y), ez = A.x(z);
                Vec fx = f.f_0 * ex, fy = f.f_0 * ey, fz = f.f_0 * ez;
                Vec lhs = B.br0m(fx, f.F2(ey, ez)) - B.br0m(fy, f.F2(ex, ez)) - B.brm0(f.F2(ex, ey), fz);
                Vec rhs = f.F2(A.br00(ex, ey), ez) + f.F2(ey, A.br00(ex, ez)) - f.F2(ex, A.br00(ey, ez));
                Vec jac = T.H3(fx, fy, fz) - f.f_m1 * S.H3(ex, ey, ez);
                rep.expect_zero("jacobiandf2", {lbl('x', x), lbl('x', y), lbl('x', z)}, lhs - rhs - sh * jac);
            }
    return rep;
}

inline WeakLie2Data as_weak(const HemistrictLie2& L)
{
    WeakLie2Data E;
    E.base = L;
    E.h3 = MultiMap({0, 0, 0}, -1, {L.b(), L.b(), L.b()}, L.a());
    return E;
}

inline Report check_weak_morphism(const Morphism2& f, const HemistrictLie2& L, const WeakLie2Data& E,
                                  const detail::ExtConventions& cv = {})
{
    return check_weak_morphism(f, as_weak(L), E, cv);
}

}  // namespace lie2coh
