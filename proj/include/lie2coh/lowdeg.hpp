#pragma once

// Explicit cocycle equations of the standard complex in degrees -1..2 and the
// derivation -> 1-cocycle map for L_g. Equations are read on the minimal
// model, which is all the differential sees.

#include "standard.hpp"

#include <functional>

namespace lie2coh {

// Which components of a cochain play the roles in the displayed equations,
// and with which sign. Defaults are the convention consistent with D.
namespace detail {
struct LowConventions {
    int zero_df = 1;      // n=0: l(x,v) = zero_df * d f(x)
    int zero_alpha = 1;   // n=0: l(al,v) = zero_alpha * f(d al)
    int one_m1 = -1;      // n=1: psi1 on L^-1 = one_m1 * w^{(-1)}_1
    int one_2 = 1;        // n=1: psi2 = one_2 * w^{(-1)}_0
    int one_alpha = -1;   // n=1: sign of psi2(d al, x) in the alpha derivation equation
    int two_a = 1;        // n=2: omega_1^{(0)}
    int two_b = 1;        // omega_0^{(0)}
    int two_c = -1;       // omega_1^{(-1)}(x | al)
    int two_e = -1;       // omega_0^{(-1)}
    int two_swap = -1;    // omega_1^{(-1)}(al, x) = two_swap * omega_1^{(-1)}(x | al)
    bool minimal = true;  // evaluate r, h_v on the minimal model
};
}  // namespace detail

struct LowDegreeVerdict {
    int n = 0;
    bool is_cocycle = false;
    Report equations;  // failed equations with residuals
};

namespace detail {

using Multi = std::function<Vec(const std::vector<Vec>&)>;

// Loday-Pirashvili coboundary of f: g^p -> M evaluated on p+1 vectors.
//   sum_{i<p} (-1)^i l(x_i, f(.. no i ..)) + (-1)^{p+1} r(f(x_0..x_{p-1}), x_p)
//   + sum_{i<j} (-1)^{i+1} f(.. no i .., [x_i,x_j] at j, ..)
inline Vec lp_eval(const Multi& f, const std::vector<Vec>& xs, std::size_t out_dim,
                   const std::function<Vec(const Vec&, const Vec&)>& l,
                   const std::function<Vec(const Vec&, const Vec&)>& r,
                   const std::function<Vec(const Vec&, const Vec&)>& br)
{
    const std::size_t p = xs.size() - 1;
    Vec acc(out_dim);
    auto drop = [&](const std::vector<Vec>& v, std::size_t i) {
        std::vector<Vec> out;
        for (std::size_t t = 0; t < v.size(); ++t)
            if (t != i)
                out.push_back(v[t]);
        return out;
    };
    for (std::size_t i = 0; i < p; ++i)
        acc += sign_pow(static_cast<long>(i)) * l(xs[i], f(drop(xs, i)));
    acc += sign_pow(static_cast<long>(p + 1)) * r(f(drop(xs, p)), xs[p]);
    for (std::size_t i = 0; i < p + 1; ++i)
        for (std::size_t j = i + 1; j < p + 1; ++j) {
            std::vector<Vec> t = xs;
            t[j] = br(xs[i], xs[j]);
            acc += sign_pow(static_cast<long>(i + 1)) * f(drop(t, i));
        }
    return acc;
}

inline LowDegreeVerdict low_equations(const HemistrictLie2& L, const Representation2& Vin, const StandardCochain& w,
                                      const LowConventions& cv)
{
    const Representation2 V = cv.minimal ? minimal_model(L, Vin).vs : Vin;
    const std::size_t a = L.a(), b = L.b(), p = V.p(), q = V.q();
    const int n = w.n;
    LowDegreeVerdict out;
    out.n = n;
    Report& rep = out.equations;
    rep.merge(check_weak_symmetry(L, V, w));

    auto dV = [&](const Vec& u) { return V.v.d * u; };
    auto l00 = [&](const Vec& x, const Vec& v) { return evaluate(V.l00, x, v); };
    auto l0m = [&](const Vec& x, const Vec& u) { return evaluate(V.l0m, x, u); };
    auto lm0 = [&](const Vec& al, const Vec& v) { return evaluate(V.lm0, al, v); };
    auto r00 = [&](const Vec& v, const Vec& x) { return evaluate(V.r00, v, x); };
    auto rm0 = [&](const Vec& u, const Vec& x) { return evaluate(V.rm0, u, x); };
    auto r0m = [&](const Vec& v, const Vec& al) { return evaluate(V.r0m, v, al); };
    auto hv = [&](const Vec& x, const Vec& v) { return evaluate(V.hv, x, v); };
    auto br00 = [&](const Vec& x, const Vec& y) { return L.br00(x, y); };
    auto brm0 = [&](const Vec& al, const Vec& x) { return L.brm0(al, x); };
    auto d = [&](const Vec& al) { return L.dm(al); };
    auto comp = [&](int pp, std::size_t k, std::vector<Vec> args) -> Vec {
        if (!w.has(pp, k))
            return Vec(pp == 0 ? q : p);
        return w(pp, k, args);
    };
    auto X = [&](std::size_t i) { return L.x(i); };
    auto A = [&](std::size_t i) { return L.al(i); };
    auto lpm1 = [&](const Multi& f, const std::vector<Vec>& xs) { return lp_eval(f, xs, p, l0m, rm0, br00); };
    auto lp0 = [&](const Multi& f, const std::vector<Vec>& xs) { return lp_eval(f, xs, q, l00, r00, br00); };

    switch (n) {
    case -1: {
        Vec u = comp(-1, 0, {});
        rep.expect_zero("du_zero", {}, dV(u));
        for (std::size_t x = 0; x < b; ++x) {
            rep.expect_zero("l_u_zero", {lbl('x', x)}, l0m(X(x), u));
            rep.expect_zero("r_u_zero", {lbl('x', x)}, rm0(u, X(x)));
        }
        break;
    }
    case 0: {
        Vec v = comp(0, 0, {});
        Multi f = [&](const std::vector<Vec>& xs) { return comp(-1, 0, xs); };
        for (std::size_t x = 0; x < b; ++x)
            rep.expect_zero("invariant_up_to_df", {lbl('x', x)}, l00(X(x), v) - cv.zero_df * dV(f({X(x)})));
        for (std::size_t al = 0; al < a; ++al)
            rep.expect_zero("alpha_action", {lbl('a', al)}, lm0(A(al), v) - cv.zero_alpha * f({d(A(al))}));
        for (std::size_t x = 0; x < b; ++x)
            for (std::size_t y = 0; y < b; ++y)
                rep.expect_zero("lp_cocycle", {lbl('x', x), lbl('x', y)}, lpm1(f, {X(x), X(y)}));
        break;
    }
    case 1: {
        auto psi0 = [&](const Vec& x) { return comp(0, 0, {x}); };
        auto psim = [&](const Vec& al) { return Rational(cv.one_m1) * comp(-1, 1, {al}); };
        Multi psi2 = [&](const std::vector<Vec>& xs) { return Rational(cv.one_2) * comp(-1, 0, xs); };
        for (std::size_t al = 0; al < a; ++al)
            rep.expect_zero("chain_map", {lbl('a', al)}, dV(psim(A(al))) - psi0(d(A(al))));
        for (std::size_t x = 0; x < b; ++x)
            for (std::size_t y = 0; y < b; ++y) {
                Vec ex = X(x), ey = X(y);
                Vec lhs = l00(ex, psi0(ey)) + r00(psi0(ex), ey) - psi0(br00(ex, ey));
                Vec rhs = dV(hv(ey, psi0(ex))) - dV(psi2({ex, ey}));
                rep.expect_zero("derivation_up_to_homotopy", {lbl('x', x), lbl('x', y)}, lhs - rhs);
            }
        for (std::size_t al = 0; al < a; ++al)
            for (std::size_t x = 0; x < b; ++x) {
                Vec ea = A(al), ex = X(x);
                Vec lhs = lm0(ea, psi0(ex)) + rm0(psim(ea), ex) - psim(brm0(ea, ex));
                Vec rhs = Rational(cv.one_alpha) * psi2({d(ea), ex}) - hv(ex, dV(psim(ea)));
                rep.expect_zero("derivation_alpha", {lbl('a', al), lbl('x', x)}, lhs - rhs);
            }
        for (std::size_t x = 0; x < b; ++x)
            for (std::size_t y = 0; y < b; ++y)
                for (std::size_t z = 0; z < b; ++z)
                    rep.expect_zero("lp_cocycle", {lbl('x', x), lbl('x', y), lbl('x', z)},
                                    lpm1(psi2, {X(x), X(y), X(z)}));
        break;
    }
    case 2: {
        auto wA = [&](const Vec& al) { return Rational(cv.two_a) * comp(0, 1, {al}); };
        Multi wB = [&](const std::vector<Vec>& xs) { return Rational(cv.two_b) * comp(0, 0, xs); };
        auto wC = [&](const Vec& x, const Vec& al) { return Rational(cv.two_c) * comp(-1, 1, {x, al}); };
        auto wCs = [&](const Vec& al, const Vec& x) { return Rational(cv.two_swap) * wC(x, al); };
        Multi wE = [&](const std::vector<Vec>& xs) { return Rational(cv.two_e) * comp(-1, 0, xs); };
        for (std::size_t al = 0; al < a; ++al)
            for (std::size_t x = 0; x < b; ++x) {
                Vec ea = A(al), ex = X(x);
                Vec lhs = wA(brm0(ea, ex)) - r00(wA(ea), ex);
                Vec rhs = dV(wCs(ea, ex)) - wB({d(ea), ex}) - dV(hv(ex, wA(ea)));
                rep.expect_zero("invariant_up_to_homotopy", {lbl('a', al), lbl('x', x)}, lhs - rhs);
            }
        for (std::size_t al = 0; al < a; ++al)
            for (std::size_t be = 0; be < a; ++be) {
                Vec ea = A(al), eb = A(be);
                Vec lhs = lm0(ea, wA(eb)) - r0m(wA(ea), eb);
                Vec rhs = wCs(ea, d(eb)) - wC(d(ea), eb) - hv(d(eb), wA(ea));
                rep.expect_zero("invariant_alpha_beta", {lbl('a', al), lbl('a', be)}, lhs - rhs);
            }
        for (std::size_t x = 0; x < b; ++x)
            for (std::size_t y = 0; y < b; ++y)
                for (std::size_t z = 0; z < b; ++z) {
                    std::vector<Vec> xs{X(x), X(y), X(z)};
                    rep.expect_zero("lp_cocycle_up_to_homotopy", {lbl('x', x), lbl('x', y), lbl('x', z)},
                                    dV(wE(xs)) + lp0(wB, xs));
                }
        for (std::size_t x = 0; x < b; ++x)
            for (std::size_t y = 0; y < b; ++y)
                for (std::size_t al = 0; al < a; ++al) {
                    Vec ex = X(x), ey = X(y), ea = A(al);
                    Vec lhs = hv(ey, dV(wC(ex, ea))) - wE({d(ea), ex, ey});
                    Vec rhs = l0m(ex, wC(ey, ea)) + rm0(wC(ex, ea), ey) + lm0(ea, wB({ex, ey})) -
                              wC(br00(ex, ey), ea) + wC(ey, brm0(ea, ex)) - wC(ex, brm0(ea, ey));
                    rep.expect_zero("mixed_cocycle_up_to_homotopy", {lbl('x', x), lbl('x', y), lbl('a', al)},
                                    lhs - rhs);
                }
        for (std::size_t x = 0; x < b; ++x)
            for (std::size_t y = 0; y < b; ++y)
                for (std::size_t z = 0; z < b; ++z)
                    for (std::size_t t = 0; t < b; ++t)
                        rep.expect_zero("lp_cocycle",
                                        {lbl('x', x), lbl('x', y), lbl('x', z), lbl('x', t)},
                                        lpm1(wE, {X(x), X(y), X(z), X(t)}));
        break;
    }
    default:
        throw DegreeOutOfRange("classify_low handles degrees -1..2, got " + std::to_string(n));
    }
    out.is_cocycle = rep.ok();
    return out;
}

}  // namespace detail

// D(w) = 0 on the realized complex (w must satisfy weak symmetry to count).
inline bool is_cocycle_by_D(const HemistrictLie2& L, const Representation2& V, const StandardCochain& w)
{
    if (!check_weak_symmetry(L, V, w).ok())
        return false;
    return is_zero(standard_differential(L, V, w.n).apply(cochain_to_ambient(L, V, w)));
}

// Verdict from the explicit equations; asserts agreement with D.
inline LowDegreeVerdict classify_low(const HemistrictLie2& L, const Representation2& V, const StandardCochain& w)
{
    if (w.n < -1 || w.n > 2)
        throw DegreeOutOfRange("classify_low handles degrees -1..2, got " + std::to_string(w.n));
    LowDegreeVerdict v = detail::low_equations(L, V, w, {});
    if (v.is_cocycle != is_cocycle_by_D(L, V, w))
        throw InvariantViolated("low-degree equations disagree with D in degree " + std::to_string(w.n));
    return v;
}

// w lies in D(C^{n-1}) (ambient coordinates, constrained source).
inline bool is_coboundary(const HemistrictLie2& L, const Representation2& V, const StandardCochain& w)
{
    Vec v = cochain_to_ambient(L, V, w);
    if (is_zero(v))
        return true;
    if (w.n == -1)
        return false;
    ComplexRealization cr = realize(L, V, w.n);
    const DegreeData& src = cr.at(w.n - 1);
    SparseMatrix img = (src.ambient_diff * src.basis).transpose();
    Echelon<Rational> e(v.size());
    for (std::size_t i = 0; i < img.rows(); ++i)
        e.insert(img.row(i));
    SparseRow<Rational> row;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0)
            row.emplace_back(static_cast<std::uint32_t>(i), v[i]);
    return !e.insert(std::move(row));
}

inline Report check_derivation(const LeibnizAlgebra& g, const Matrix& phi)
{
    Report rep;
    for (std::size_t x = 0; x < g.dim; ++x)
        for (std::size_t y = 0; y < g.dim; ++y) {
            Vec ex = g.e(x), ey = g.e(y);
            rep.expect_zero("derivation", {lbl('x', x), lbl('x', y)},
                            phi * g.bracket(ex, ey) - g.bracket(phi * ex, ey) - g.bracket(ex, phi * ey));
        }
    return rep;
}

// Derivation phi of g -> 1-cocycle of (L_g, Ad):
//   psi1 = phi on g and on K[1], psi2(x,y) = h2(phi x, y).
inline StandardCochain derivation_to_one_cocycle(const LeibnizAlgebra& g, const Matrix& phi)
{
    if (phi.rows() != g.dim || phi.cols() != g.dim)
        throw ShapeMismatch("derivation must be a dim x dim matrix");
    Report dr = check_derivation(g, phi);
    if (!dr.ok())
        throw NotADerivation(dr.violations().front().describe());
    HemistrictLie2 L = from_leibniz(g);
    Representation2 V = adjoint(L);
    SpanBasis k = leibniz_kernel(g);
    const std::size_t b = g.dim, a = k.dim();
    const detail::LowConventions cv;
    StandardCochain w = zero_cochain(L, V, 1);
    for (std::size_t x = 0; x < b; ++x) {
        Vec px = phi * g.e(x);
        for (std::size_t o = 0; o < b; ++o)
            w.at(0, 0)(x, o) = px[o];
        for (std::size_t y = 0; y < b; ++y) {
            Vec h = L.H2(px, g.e(y));
            for (std::size_t o = 0; o < a; ++o)
                w.at(-1, 0)(x, y, o) = cv.one_2 * h[o];
        }
    }
    for (std::size_t al = 0; al < a; ++al) {
        Vec img = phi * k.basis.column(al);
        if (!k.contains(img))
            throw InvariantViolated("derivation does not preserve the Leibniz kernel");
        Vec c = k.coords(img);
        for (std::size_t o = 0; o < a; ++o)
            w.at(-1, 1)(al, o) = cv.one_m1 * c[o];
    }
    if (!classify_low(L, V, w).is_cocycle)
        throw InvariantViolated("derivation cochain is not a 1-cocycle");
    return w;
}

}  // namespace lie2coh
