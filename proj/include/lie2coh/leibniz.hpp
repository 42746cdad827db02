#pragma once

// Ungraded Leibniz algebras, their modules, Lie quotients, and the
// Loday-Pirashvili and Chevalley-Eilenberg complexes.

#include "combinatorics.hpp"
#include "graded.hpp"
#include "report.hpp"

#include <map>
#include <tuple>
#include <vector>

namespace lie2coh {

// Bracket tensor c(x,y,z): coefficient of e_z in [e_x,e_y].
struct LeibnizAlgebra {
    std::size_t dim = 0;
    MultiMap c;

    LeibnizAlgebra() = default;
    explicit LeibnizAlgebra(std::size_t n) : dim(n), c(MultiMap::bilinear(0, n, 0, n, 0, n)) {}

    Vec bracket(const Vec& x, const Vec& y) const { return evaluate(c, x, y); }
    Vec e(std::size_t i) const { return unit_vec(dim, i); }
};

using LieAlgebra = LeibnizAlgebra;  // plus antisymmetry and Jacobi, see check_lie

// [x,[y,z]] = [[x,y],z] + [y,[x,z]] on basis triples.
inline Report check_leibniz(const LeibnizAlgebra& g)
{
    Report rep;
    const std::size_t n = g.dim;
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z) {
                Vec lhs = g.bracket(g.e(x), g.bracket(g.e(y), g.e(z)));
                Vec rhs = g.bracket(g.bracket(g.e(x), g.e(y)), g.e(z)) +
                          g.bracket(g.e(y), g.bracket(g.e(x), g.e(z)));
                rep.expect_zero("leibniz", {lbl('x', x), lbl('x', y), lbl('x', z)}, lhs - rhs);
            }
    return rep;
}

inline Report check_lie(const LieAlgebra& g)
{
    Report rep;
    const std::size_t n = g.dim;
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            rep.expect_zero("antisymmetry", {lbl('x', x), lbl('x', y)},
                            g.bracket(g.e(x), g.e(y)) + g.bracket(g.e(y), g.e(x)));
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z) {
                Vec j = g.bracket(g.e(x), g.bracket(g.e(y), g.e(z))) +
                        g.bracket(g.e(y), g.bracket(g.e(z), g.e(x))) +
                        g.bracket(g.e(z), g.bracket(g.e(x), g.e(y)));
                rep.expect_zero("jacobi", {lbl('x', x), lbl('x', y), lbl('x', z)}, j);
            }
    return rep;
}

// Reduced row echelon basis of the span of the given vectors, as matrix columns.
// Pivot coordinates of column i are the unit vector e_i, so coordinates of a
// member of the span are read off at the pivots.
struct SpanBasis {
    Matrix basis;                      // n x k
    std::vector<std::size_t> pivots;   // k pivot rows
    Vec coords(const Vec& v) const
    {
        Vec c(pivots.size());
        for (std::size_t i = 0; i < pivots.size(); ++i)
            c[i] = v[pivots[i]];
        return c;
    }
    bool contains(const Vec& v) const { return is_zero(v - basis * coords(v)); }
    std::size_t dim() const { return pivots.size(); }
};

inline SpanBasis span_basis(std::size_t n, const std::vector<Vec>& gens)
{
    Echelon<Rational> e(n);
    for (auto& g : gens) {
        SparseRow<Rational> r;
        for (std::size_t i = 0; i < n; ++i)
            if (g[i] != 0)
                r.emplace_back(static_cast<std::uint32_t>(i), g[i]);
        e.insert(std::move(r));
    }
    e.make_reduced();
    SpanBasis sb;
    sb.basis = Matrix(n, e.rank());
    std::size_t k = 0;
    for (auto& [c, row] : e.pivots()) {
        sb.pivots.push_back(c);
        for (auto& [j, v] : row)
            sb.basis(j, k) = v;
        ++k;
    }
    return sb;
}

// span{[x,y]+[y,x]}; asserted to be an ideal.
inline SpanBasis leibniz_kernel(const LeibnizAlgebra& g)
{
    std::vector<Vec> gens;
    for (std::size_t x = 0; x < g.dim; ++x)
        for (std::size_t y = x; y < g.dim; ++y)
            gens.push_back(g.bracket(g.e(x), g.e(y)) + g.bracket(g.e(y), g.e(x)));
    SpanBasis k = span_basis(g.dim, gens);
    for (std::size_t i = 0; i < k.dim(); ++i)
        for (std::size_t x = 0; x < g.dim; ++x) {
            Vec kv = k.basis.column(i);
            if (!k.contains(g.bracket(g.e(x), kv)) || !k.contains(g.bracket(kv, g.e(x))))
                throw InvariantViolated("Leibniz kernel is not an ideal");
        }
    return k;
}

// {x | [x,y] = 0 for all y}, as columns.
inline Matrix left_center(const LeibnizAlgebra& g)
{
    const std::size_t n = g.dim;
    Matrix m(n * n, n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z)
                m(y * n + z, x) = g.c(x, y, z);
    return nullspace_basis(m);
}

// Greedy complement of the column span of sub: standard basis vectors taken in
// order whenever they raise the rank.
inline std::vector<std::size_t> greedy_complement(const Matrix& sub)
{
    const std::size_t n = sub.rows();
    Echelon<Rational> e(n);
    auto as_row = [&](const Vec& v) {
        SparseRow<Rational> r;
        for (std::size_t i = 0; i < n; ++i)
            if (v[i] != 0)
                r.emplace_back(static_cast<std::uint32_t>(i), v[i]);
        return r;
    };
    for (std::size_t j = 0; j < sub.cols(); ++j)
        e.insert(as_row(sub.column(j)));
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < n; ++i)
        if (e.insert(as_row(unit_vec(n, i))))
            out.push_back(i);
    return out;
}

// Exact inverse via Gauss-Jordan; throws on singular input.
inline Matrix inverse(const Matrix& m)
{
    if (m.rows() != m.cols())
        throw ShapeMismatch("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    Matrix a = m, inv = Matrix::identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a(p, c) == 0)
            ++p;
        if (p == n)
            throw InvariantViolated("matrix is singular");
        if (p != c)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(p, j), a(c, j));
                std::swap(inv(p, j), inv(c, j));
            }
        Rational s = 1 / a(c, c);
        for (std::size_t j = 0; j < n; ++j) {
            a(c, j) *= s;
            inv(c, j) *= s;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a(r, c) == 0)
                continue;
            Rational f = a(r, c);
            for (std::size_t j = 0; j < n; ++j) {
                a(r, j) -= f * a(c, j);
                inv(r, j) -= f * inv(c, j);
            }
        }
    }
    return inv;
}

struct LieQuotient {
    LieAlgebra lie;
    Matrix projection;  // dim(lie) x dim(g)
    Matrix section;     // dim(g) x dim(lie), complement basis vectors
};

// g/K with complement basis chosen greedily on the standard basis.
inline LieQuotient quotient_lie(const LeibnizAlgebra& g)
{
    SpanBasis k = leibniz_kernel(g);
    auto comp = greedy_complement(k.basis);
    const std::size_t n = g.dim, c = comp.size();
    Matrix t(n, n);
    for (std::size_t i = 0; i < c; ++i)
        t(comp[i], i) = 1;
    for (std::size_t j = 0; j < k.dim(); ++j)
        for (std::size_t i = 0; i < n; ++i)
            t(i, c + j) = k.basis(i, j);
    Matrix ti = inverse(t);
    LieQuotient q;
    q.lie = LieAlgebra(c);
    q.projection = Matrix(c, n);
    q.section = Matrix(n, c);
    for (std::size_t i = 0; i < c; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            q.projection(i, j) = ti(i, j);
            q.section(j, i) = t(j, i);
        }
    for (std::size_t x = 0; x < c; ++x)
        for (std::size_t y = 0; y < c; ++y) {
            Vec b = q.projection * g.bracket(q.section.column(x), q.section.column(y));
            for (std::size_t z = 0; z < c; ++z)
                q.lie.c(x, y, z) = b[z];
        }
    if (!check_lie(q.lie).ok())
        throw InvariantViolated("quotient by the Leibniz kernel is not a Lie algebra");
    return q;
}

// l(x,v,w): coefficient of w in l_x v; r(v,x,w): coefficient of w in r_x v.
struct LeibnizModule {
    std::size_t dim = 0;
    MultiMap l;
    MultiMap r;

    LeibnizModule() = default;
    LeibnizModule(std::size_t gdim, std::size_t m)
        : dim(m), l(MultiMap::bilinear(0, gdim, 0, m, 0, m)), r(MultiMap::bilinear(0, m, 0, gdim, 0, m))
    {
    }
};

inline LeibnizModule trivial_module(const LeibnizAlgebra& g, std::size_t m = 1) { return {g.dim, m}; }

inline LeibnizModule adjoint_module(const LeibnizAlgebra& g)
{
    LeibnizModule m(g.dim, g.dim);
    m.l = g.c;
    m.r = g.c;
    return m;
}

// Right action r = -l.
inline LeibnizModule symmetric_module(const MultiMap& l)
{
    LeibnizModule m(l.arg_dims()[0], l.out_dim());
    m.l = l;
    for (std::size_t x = 0; x < l.arg_dims()[0]; ++x)
        for (std::size_t v = 0; v < m.dim; ++v)
            for (std::size_t w = 0; w < m.dim; ++w)
                m.r(v, x, w) = -l(x, v, w);
    return m;
}

inline Report check_module(const LeibnizAlgebra& g, const LeibnizModule& m)
{
    Report rep;
    auto L = [&](const Vec& x, const Vec& v) { return evaluate(m.l, x, v); };
    auto R = [&](const Vec& x, const Vec& v) { return evaluate(m.r, v, x); };
    for (std::size_t x = 0; x < g.dim; ++x)
        for (std::size_t y = 0; y < g.dim; ++y)
            for (std::size_t v = 0; v < m.dim; ++v) {
                Vec ex = g.e(x), ey = g.e(y), ev = unit_vec(m.dim, v);
                Vec bxy = g.bracket(ex, ey);
                std::vector<std::string> at{lbl('x', x), lbl('x', y), lbl('v', v)};
                rep.expect_zero("module_l", at, L(bxy, ev) - (L(ex, L(ey, ev)) - L(ey, L(ex, ev))));
                rep.expect_zero("module_r", at, R(bxy, ev) - (L(ex, R(ey, ev)) - R(ey, L(ex, ev))));
                rep.expect_zero("module_rl", at, R(ex, L(ey, ev)) + R(ex, R(ey, ev)));
            }
    return rep;
}

// Loday-Pirashvili coboundary Hom(g^p, M) -> Hom(g^{p+1}, M). Coordinates of a
// cochain f: index tuple_rank(xs)*dim(M) + o.
inline SparseMatrix lp_differential(const LeibnizAlgebra& g, const LeibnizModule& m, std::size_t p)
{
    const std::size_t n = g.dim, dm = m.dim;
    const std::size_t cols = ipow(n, p) * dm, rows = ipow(n, p + 1) * dm;
    SparseMatrix d(rows, cols);
    if (dm == 0)
        return d;
    for (const Tuple& xs : all_tuples(n, p + 1)) {
        const std::size_t rbase = tuple_rank(xs, n) * dm;
        // l_{x_i} f(.. x_i hat ..), i = 1..p
        for (std::size_t i = 0; i < p; ++i) {
            const int s = sign_pow(static_cast<long>(i));
            const std::size_t cb = tuple_rank(erase_at(xs, i), n) * dm;
            for (std::size_t w = 0; w < dm; ++w)
                for (std::size_t o = 0; o < dm; ++o)
                    if (m.l(xs[i], w, o) != 0)
                        d.add(rbase + o, cb + w, s * m.l(xs[i], w, o));
        }
        // (-1)^{p+1} r_{x_{p+1}} f(x_1..x_p)
        {
            const int s = sign_pow(static_cast<long>(p + 1));
            const std::size_t cb = tuple_rank(erase_at(xs, p), n) * dm;
            for (std::size_t w = 0; w < dm; ++w)
                for (std::size_t o = 0; o < dm; ++o)
                    if (m.r(w, xs[p], o) != 0)
                        d.add(rbase + o, cb + w, s * m.r(w, xs[p], o));
        }
        // (-1)^i f(.. x_i hat .., [x_i,x_j] at slot j, ..), 1-based i<j
        for (std::size_t i = 0; i < p + 1; ++i)
            for (std::size_t j = i + 1; j < p + 1; ++j) {
                const int s = sign_pow(static_cast<long>(i + 1));
                for (std::size_t z = 0; z < n; ++z) {
                    const Rational& c = g.c(xs[i], xs[j], z);
                    if (c == 0)
                        continue;
                    Tuple t = xs;
                    t[j] = z;
                    t = erase_at(t, i);
                    const std::size_t cb = tuple_rank(t, n) * dm;
                    for (std::size_t o = 0; o < dm; ++o)
                        d.add(rbase + o, cb + o, s * c);
                }
            }
    }
    d.finalize();
    return d;
}

// HL^0 .. HL^{p_max}
inline std::vector<std::size_t> lp_cohomology(const LeibnizAlgebra& g, const LeibnizModule& m,
                                              std::size_t p_max)
{
    std::vector<SparseMatrix> d;
    for (std::size_t p = 0; p <= p_max; ++p)
        d.push_back(lp_differential(g, m, p));
    std::vector<std::size_t> out;
    for (std::size_t p = 0; p <= p_max; ++p) {
        SparseMatrix din = p == 0 ? SparseMatrix(d[0].cols(), 0) : d[p - 1];
        out.push_back(cohomology_dim(din, d[p]));
    }
    return out;
}

// A Lie algebra acting on a two-term complex by chain maps.
struct LieRep2 {
    TwoTermComplex v;
    MultiMap l0;  // lie x V^0 -> V^0
    MultiMap lm;  // lie x V^-1 -> V^-1

    LieRep2() = default;
    LieRep2(std::size_t lie_dim, TwoTermComplex vv)
        : v(std::move(vv)), l0(MultiMap::bilinear(0, lie_dim, 0, v.dim_0, 0, v.dim_0)),
          lm(MultiMap::bilinear(0, lie_dim, -1, v.dim_m1, -1, v.dim_m1))
    {
    }
};

inline Report check_lie_rep(const LieAlgebra& lie, const LieRep2& rep)
{
    Report r;
    auto act = [&](const MultiMap& l, const Vec& x, const Vec& v) { return evaluate(l, x, v); };
    for (std::size_t x = 0; x < lie.dim; ++x) {
        for (std::size_t y = 0; y < lie.dim; ++y) {
            Vec ex = lie.e(x), ey = lie.e(y), b = lie.bracket(ex, ey);
            for (const MultiMap* l : {&rep.l0, &rep.lm}) {
                const std::size_t dm = l->out_dim();
                for (std::size_t v = 0; v < dm; ++v) {
                    Vec ev = unit_vec(dm, v);
                    r.expect_zero(l == &rep.l0 ? "ce_rep_0" : "ce_rep_m1",
                                  {lbl('x', x), lbl('x', y), lbl(l == &rep.l0 ? 'v' : 'u', v)},
                                  act(*l, b, ev) - act(*l, ex, act(*l, ey, ev)) + act(*l, ey, act(*l, ex, ev)));
                }
            }
        }
        for (std::size_t u = 0; u < rep.v.dim_m1; ++u) {
            Vec eu = unit_vec(rep.v.dim_m1, u);
            r.expect_zero("ce_rep_chain", {lbl('x', x), lbl('u', u)},
                          rep.v.d * act(rep.lm, lie.e(x), eu) - act(rep.l0, lie.e(x), rep.v.d * eu));
        }
    }
    return r;
}

// Basis of the total CE complex in degree n: keys (r, ys, o) with r in {-1,0},
// ys a strictly increasing subset of size n - r, o a basis index of V^r.
struct CEBasis {
    struct Key {
        int r;
        Tuple ys;
        std::size_t o;
        bool operator<(const Key& k) const { return std::tie(r, ys, o) < std::tie(k.r, k.ys, k.o); }
        bool operator==(const Key& k) const { return r == k.r && ys == k.ys && o == k.o; }
    };
    std::vector<Key> keys;
    std::map<Key, std::size_t> index;

    CEBasis(std::size_t lie_dim, std::size_t dim_m1, std::size_t dim_0, int n)
    {
        for (int r : {-1, 0}) {
            const int p = n - r;
            if (p < 0 || static_cast<std::size_t>(p) > lie_dim)
                continue;
            const std::size_t dv = r == 0 ? dim_0 : dim_m1;
            for (auto& ys : all_subsets(lie_dim, static_cast<std::size_t>(p)))
                for (std::size_t o = 0; o < dv; ++o) {
                    index.emplace(Key{r, ys, o}, keys.size());
                    keys.push_back({r, ys, o});
                }
        }
    }
    std::size_t size() const { return keys.size(); }
};

// D_B = d_V + d_CE from degree n to n+1:
//   (-1)^P d(w(ys))  +  sum_i (-1)^i l(y_i, w(ys without i))
//   + sum_{i<j} (-1)^{i+j} w([y_i,y_j], ys without i,j)      (0-based i, j)
inline SparseMatrix ce_differential(const LieAlgebra& lie, const LieRep2& rep, int n)
{
    if (!check_lie_rep(lie, rep).ok())
        throw NotARepresentation("action is not a Lie algebra representation commuting with d");
    CEBasis src(lie.dim, rep.v.dim_m1, rep.v.dim_0, n), dst(lie.dim, rep.v.dim_m1, rep.v.dim_0, n + 1);
    SparseMatrix d(dst.size(), src.size());
    auto add = [&](std::size_t row, int r, Tuple ys, std::size_t o, const Rational& v) {
        int s = sort_sign(ys);
        if (s == 0 || v == 0)
            return;
        d.add(row, src.index.at({r, ys, o}), s * v);
    };
    for (std::size_t row = 0; row < dst.size(); ++row) {
        const auto& [r, ys, o] = dst.keys[row];
        const std::size_t P = ys.size();
        if (r == 0)
            for (std::size_t u = 0; u < rep.v.dim_m1; ++u)
                add(row, -1, ys, u, sign_pow(static_cast<long>(P)) * rep.v.d(o, u));
        const MultiMap& act = r == 0 ? rep.l0 : rep.lm;
        const std::size_t dv = act.out_dim();
        for (std::size_t i = 0; i < P; ++i)
            for (std::size_t w = 0; w < dv; ++w)
                add(row, r, erase_at(ys, i), w, sign_pow(static_cast<long>(i)) * act(ys[i], w, o));
        for (std::size_t i = 0; i < P; ++i)
            for (std::size_t j = i + 1; j < P; ++j)
                for (std::size_t z = 0; z < lie.dim; ++z) {
                    const Rational& c = lie.c(ys[i], ys[j], z);
                    if (c == 0)
                        continue;
                    Tuple t{z};
                    for (std::size_t k = 0; k < P; ++k)
                        if (k != i && k != j)
                            t.push_back(ys[k]);
                    add(row, r, t, o, sign_pow(static_cast<long>(i + j)) * c);
                }
    }
    d.finalize();
    return d;
}

// H^n_CE for n = -1..n_max.
inline std::vector<std::size_t> ce_cohomology(const LieAlgebra& lie, const LieRep2& rep, int n_max)
{
    std::vector<std::size_t> out;
    SparseMatrix prev(CEBasis(lie.dim, rep.v.dim_m1, rep.v.dim_0, -1).size(), 0);
    for (int n = -1; n <= n_max; ++n) {
        SparseMatrix cur = ce_differential(lie, rep, n);
        out.push_back(cohomology_dim(prev, cur));
        prev = std::move(cur);
    }
    return out;
}

}  // namespace lie2coh
