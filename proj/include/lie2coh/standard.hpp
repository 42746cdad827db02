#pragma once

// The standard complex C(L,V) of a hemistrict Lie 2-algebra.
//
// A cochain of degree n has components w^{(p)}_k for p in {-1,0}, taking
// m = n - p - 2k arguments from L0 and a symmetric k-tuple from L-1, with
// values in V^p. Cochains live in the full tensor spaces (the ambient space)
// cut down by the weak symmetry constraints.

#include "realization.hpp"
#include "rep.hpp"

#include <cstdlib>
#include <optional>
#include <sstream>

namespace lie2coh {

struct ComponentShape {
    int p;
    std::size_t k;
    std::size_t m;    // number of L0 slots
    std::size_t dim;  // b^m * C(a+k-1, k) * dim V^p
};

inline std::vector<ComponentShape> ambient_components(std::size_t a, std::size_t b, std::size_t dim_m1,
                                                      std::size_t dim_0, int n)
{
    if (n < -1)
        throw DegreeOutOfRange("standard cochains start in degree -1");
    std::vector<ComponentShape> out;
    for (int p : {-1, 0}) {
        const std::size_t dv = p == 0 ? dim_0 : dim_m1;
        for (std::size_t k = 0; n - p - 2 * static_cast<int>(k) >= 0; ++k) {
            const std::size_t m = static_cast<std::size_t>(n - p - 2 * static_cast<int>(k));
            std::size_t nal = a == 0 ? (k == 0 ? 1 : 0) : binom(a + k - 1, k);
            out.push_back({p, k, m, ipow(b, m) * nal * dv});
        }
    }
    return out;
}

inline std::vector<ComponentShape> ambient_components(const HemistrictLie2& L, const Representation2& V, int n)
{
    return ambient_components(L.a(), L.b(), V.p(), V.q(), n);
}

// Coordinates of the ambient space in degree n.
class StandardBasis {
public:
    struct Key {
        int p;
        std::size_t k;
        Tuple xs;
        Tuple al;  // sorted
        std::size_t o;
    };

    StandardBasis() = default;
    StandardBasis(std::size_t a, std::size_t b, std::size_t dim_m1, std::size_t dim_0, int n)
        : a_(a), b_(b), degree_(n)
    {
        std::size_t off = 0;
        for (auto& s : ambient_components(a, b, dim_m1, dim_0, n)) {
            Block bl;
            bl.shape = s;
            bl.offset = off;
            bl.alphas = TupleIndex(all_multisets(a, s.k));
            bl.nx = ipow(b, s.m);
            bl.dv = s.p == 0 ? dim_0 : dim_m1;
            off += s.dim;
            blocks_.push_back(std::move(bl));
        }
        size_ = off;
    }
    StandardBasis(const HemistrictLie2& L, const Representation2& V, int n)
        : StandardBasis(L.a(), L.b(), V.p(), V.q(), n)
    {
    }

    int degree() const { return degree_; }
    std::size_t size() const { return size_; }

    // Index of (p,k,xs,al,o); al must be sorted. Returns nullopt when the
    // component does not exist in this degree.
    std::optional<std::size_t> find(int p, std::size_t k, const Tuple& xs, const Tuple& al, std::size_t o) const
    {
        const Block* bl = block(p, k);
        if (!bl)
            return std::nullopt;
        return bl->offset + (tuple_rank(xs, b_) * bl->alphas.size() + bl->alphas.index(al)) * bl->dv + o;
    }
    std::size_t index(int p, std::size_t k, const Tuple& xs, const Tuple& al, std::size_t o) const
    {
        auto i = find(p, k, xs, al, o);
        if (!i)
            throw ShapeMismatch("no standard component with this shape");
        return *i;
    }

    Key key(std::size_t i) const
    {
        for (auto& bl : blocks_)
            if (i < bl.offset + bl.shape.dim) {
                std::size_t r = i - bl.offset;
                Key key;
                key.p = bl.shape.p;
                key.k = bl.shape.k;
                key.o = r % bl.dv;
                r /= bl.dv;
                key.al = bl.alphas[r % bl.alphas.size()];
                r /= bl.alphas.size();
                key.xs.assign(bl.shape.m, 0);
                for (std::size_t s = bl.shape.m; s-- > 0;) {
                    key.xs[s] = r % b_;
                    r /= b_;
                }
                return key;
            }
        throw ShapeMismatch("ambient index out of range");
    }

    // e.g. "w0_1(x0,x1|a0)->u0"
    std::string label(std::size_t i) const
    {
        Key k = key(i);
        std::ostringstream os;
        os << "w" << k.p << "_" << k.k << "(";
        for (std::size_t s = 0; s < k.xs.size(); ++s)
            os << (s ? "," : "") << lbl('x', k.xs[s]);
        os << "|";
        for (std::size_t s = 0; s < k.al.size(); ++s)
            os << (s ? "," : "") << lbl('a', k.al[s]);
        os << ")->" << lbl(k.p == 0 ? 'v' : 'u', k.o);
        return os.str();
    }

    std::vector<ComponentShape> shapes() const
    {
        std::vector<ComponentShape> out;
        for (auto& bl : blocks_)
            out.push_back(bl.shape);
        return out;
    }

    // Visit every coordinate of component (p,k).
    template <class F>
    void for_each_in(int p, std::size_t k, F&& f) const
    {
        const Block* bl = block(p, k);
        if (!bl || bl->shape.dim == 0)
            return;
        for (auto& xs : all_tuples(b_, bl->shape.m))
            for (std::size_t ai = 0; ai < bl->alphas.size(); ++ai)
                for (std::size_t o = 0; o < bl->dv; ++o)
                    f(xs, bl->alphas[ai], o, index(p, k, xs, bl->alphas[ai], o));
    }

private:
    struct Block {
        ComponentShape shape;
        std::size_t offset = 0;
        TupleIndex alphas;
        std::size_t nx = 0;
        std::size_t dv = 0;
    };
    const Block* block(int p, std::size_t k) const
    {
        for (auto& bl : blocks_)
            if (bl.shape.p == p && bl.shape.k == k)
                return &bl;
        return nullptr;
    }

    std::size_t a_ = 0, b_ = 0;
    int degree_ = 0;
    std::size_t size_ = 0;
    std::vector<Block> blocks_;
};

struct StandardOptions {
    std::size_t max_ambient = 50000;
};

// LIE2COH_MAX_AMBIENT if set, else the default.
inline StandardOptions options_from_env()
{
    StandardOptions o;
    if (const char* s = std::getenv("LIE2COH_MAX_AMBIENT")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(s, &end, 10);
        if (end != s && *end == '\0')
            o.max_ambient = static_cast<std::size_t>(v);
    }
    return o;
}

inline void check_ambient(std::size_t size, int n, const StandardOptions& opt)
{
    if (size > opt.max_ambient)
        throw AmbientTooLarge("degree " + std::to_string(n) + " needs " + std::to_string(size) +
                              " coordinates, limit " + std::to_string(opt.max_ambient));
}

// w_k(..x_i,x_{i+1}..|al) + w_k(..x_{i+1},x_i..|al) + w_{k+1}(..^..|h2(x_i,x_{i+1}),al) = 0
inline SparseMatrix weak_symmetry_constraints(const HemistrictLie2& L, const Representation2& V, int n)
{
    StandardBasis B(L, V, n);
    SparseMatrix w(0, B.size());
    for (auto& s : B.shapes()) {
        if (s.m < 2)
            continue;
        B.for_each_in(s.p, s.k, [&](const Tuple& xs, const Tuple& al, std::size_t o, std::size_t idx) {
            for (std::size_t i = 0; i + 1 < s.m; ++i) {
                SparseRow<Rational> row;
                Tuple sw = xs;
                std::swap(sw[i], sw[i + 1]);
                row.emplace_back(static_cast<std::uint32_t>(idx), Rational(1));
                row.emplace_back(static_cast<std::uint32_t>(B.index(s.p, s.k, sw, al, o)), Rational(1));
                Tuple rest;
                for (std::size_t t = 0; t < s.m; ++t)
                    if (t != i && t != i + 1)
                        rest.push_back(xs[t]);
                for (std::size_t g = 0; g < L.a(); ++g) {
                    const Rational& c = L.h2(xs[i], xs[i + 1], g);
                    if (c == 0)
                        continue;
                    Tuple al2 = al;
                    al2.push_back(g);
                    std::sort(al2.begin(), al2.end());
                    row.emplace_back(static_cast<std::uint32_t>(B.index(s.p, s.k + 1, rest, al2, o)), c);
                }
                w.push_row(std::move(row));
            }
        });
    }
    return w;
}

// D = delta + d_LP from ambient degree n to n+1, built on the symmetric
// module (l, -l) of V. Sign exponents below use 0-based slot positions.
inline SparseMatrix standard_differential(const HemistrictLie2& L, const Representation2& V, int n)
{
    StandardBasis src(L, V, n), dst(L, V, n + 1);
    SparseMatrix D(dst.size(), src.size());
    const std::size_t a = L.a(), b = L.b();
    for (std::size_t row = 0; row < dst.size(); ++row) {
        const auto key = dst.key(row);
        const int p = key.p;
        const std::size_t k = key.k, m = key.xs.size(), o = key.o;
        const Tuple& xs = key.xs;
        const Tuple& al = key.al;
        auto add = [&](int pp, std::size_t kk, const Tuple& x, const Tuple& aa, std::size_t oo, const Rational& v) {
            if (v != 0)
                D.add(row, src.index(pp, kk, x, aa, oo), v);
        };
        // delta: w_{k-1}(d al_i, xs | al without i)
        for (std::size_t i = 0; i < k; ++i) {
            Tuple rest = erase_at(al, i);
            for (std::size_t c = 0; c < b; ++c) {
                const Rational& coef = L.d()(c, al[i]);
                if (coef == 0)
                    continue;
                Tuple x2{c};
                x2.insert(x2.end(), xs.begin(), xs.end());
                add(p, k - 1, x2, rest, o, coef);
            }
        }
        // delta: (-1)^{n+1} d_V w^{(-1)}_k
        if (p == 0)
            for (std::size_t u = 0; u < V.p(); ++u)
                add(-1, k, xs, al, u, sign_pow(n + 1) * V.v.d(o, u));
        // action: (-1)^i l(x_i, w(xs without i))
        const MultiMap& act = p == 0 ? V.l00 : V.l0m;
        const std::size_t dv = p == 0 ? V.q() : V.p();
        for (std::size_t i = 0; i < m; ++i) {
            Tuple rest = erase_at(xs, i);
            for (std::size_t w = 0; w < dv; ++w)
                add(p, k, rest, al, w, sign_pow(static_cast<long>(i)) * act(xs[i], w, o));
        }
        // bracket: (-1)^{i+1} w(.., x_i removed, [x_i,x_j] in slot j, ..)
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j)
                for (std::size_t z = 0; z < b; ++z) {
                    const Rational& c = L.c00(xs[i], xs[j], z);
                    if (c == 0)
                        continue;
                    Tuple x2 = xs;
                    x2[j] = z;
                    add(p, k, erase_at(x2, i), al, o, sign_pow(static_cast<long>(i + 1)) * c);
                }
        // [al_j, x_i] replacing al_j: (-1)^i w(xs without i | ..)
        for (std::size_t i = 0; i < m; ++i) {
            Tuple rest = erase_at(xs, i);
            for (std::size_t j = 0; j < k; ++j)
                for (std::size_t g = 0; g < a; ++g) {
                    const Rational& c = L.cm0(al[j], xs[i], g);
                    if (c == 0)
                        continue;
                    Tuple al2 = al;
                    al2[j] = g;
                    std::sort(al2.begin(), al2.end());
                    add(p, k, rest, al2, o, sign_pow(static_cast<long>(i)) * c);
                }
        }
        // l_{al_j} acting on w^{(0)}_{k-1}: (-1)^{n+1}
        if (p == -1)
            for (std::size_t j = 0; j < k; ++j) {
                Tuple rest = erase_at(al, j);
                for (std::size_t v = 0; v < V.q(); ++v)
                    add(0, k - 1, xs, rest, v, sign_pow(n + 1) * V.lm0(al[j], v, o));
            }
    }
    D.finalize();
    return D;
}

// Realized standard complex for n = -1..n_max.
inline ComplexRealization realize(const HemistrictLie2& L, const Representation2& V, int n_max,
                                  const StandardOptions& opt = {})
{
    if (!check_representation(V, L).ok())
        throw NotARepresentation("standard complex needs a representation");
    for (int n = -1; n <= n_max + 1; ++n)
        check_ambient(StandardBasis(L, V, n).size(), n, opt);
    return assemble_complex(
        -1, n_max, [&](int n) { return StandardBasis(L, V, n).size(); },
        [&](int n) { return weak_symmetry_constraints(L, V, n); },
        [&](int n) { return standard_differential(L, V, n); });
}

// ---- cochains as component tensors ----

struct StandardCochain {
    int n = -1;
    // (p, k) -> tensor with m L0-slots then k symmetric L-1 slots
    std::map<std::pair<int, std::size_t>, MultiMap> components;

    MultiMap& at(int p, std::size_t k) { return components.at({p, k}); }
    const MultiMap& at(int p, std::size_t k) const { return components.at({p, k}); }
    bool has(int p, std::size_t k) const { return components.count({p, k}) != 0; }

    // Component evaluated on vectors; missing components evaluate to 0 in V^p.
    Vec operator()(int p, std::size_t k, const std::vector<Vec>& args) const
    {
        return evaluate(at(p, k), args);
    }
};

inline StandardCochain zero_cochain(const HemistrictLie2& L, const Representation2& V, int n)
{
    StandardCochain c;
    c.n = n;
    for (auto& s : ambient_components(L, V, n)) {
        std::vector<int> degs(s.m, 0);
        std::vector<std::size_t> dims(s.m, L.b());
        degs.insert(degs.end(), s.k, -1);
        dims.insert(dims.end(), s.k, L.a());
        MultiMap mm(degs, s.p, dims, s.p == 0 ? V.q() : V.p());
        if (s.k >= 2) {
            std::vector<std::size_t> slots;
            for (std::size_t t = 0; t < s.k; ++t)
                slots.push_back(s.m + t);
            mm.declare_symmetric(slots);
        }
        c.components.emplace(std::make_pair(s.p, s.k), std::move(mm));
    }
    return c;
}

inline StandardCochain cochain_from_ambient(const HemistrictLie2& L, const Representation2& V, int n, const Vec& v)
{
    StandardBasis B(L, V, n);
    if (v.size() != B.size())
        throw ShapeMismatch("ambient vector length");
    StandardCochain c = zero_cochain(L, V, n);
    for (auto& [pk, mm] : c.components) {
        const std::size_t m = mm.arity() - pk.second;
        mm.for_each_index([&](const std::vector<std::size_t>& idx) {
            Tuple xs(idx.begin(), idx.begin() + static_cast<long>(m));
            Tuple al = sorted(Tuple(idx.begin() + static_cast<long>(m), idx.end()));
            for (std::size_t o = 0; o < mm.out_dim(); ++o)
                mm.at(idx, o) = v[B.index(pk.first, pk.second, xs, al, o)];
        });
    }
    return c;
}

inline Vec cochain_to_ambient(const HemistrictLie2& L, const Representation2& V, const StandardCochain& c)
{
    StandardBasis B(L, V, c.n);
    Vec v(B.size());
    for (std::size_t i = 0; i < B.size(); ++i) {
        auto key = B.key(i);
        std::vector<std::size_t> idx = key.xs;
        idx.insert(idx.end(), key.al.begin(), key.al.end());
        v[i] = c.at(key.p, key.k).at(idx, key.o);
    }
    return v;
}

// Weak symmetry and alpha-slot symmetry of a component cochain.
inline Report check_weak_symmetry(const HemistrictLie2& L, const Representation2& V, const StandardCochain& c)
{
    Report rep;
    for (auto& [pk, mm] : c.components)
        if (!mm.symmetric_ok())
            rep.fail("alpha_symmetry", {"w" + std::to_string(pk.first) + "_" + std::to_string(pk.second)});
    Vec v = cochain_to_ambient(L, V, c);
    SparseMatrix w = weak_symmetry_constraints(L, V, c.n);
    Vec r = w.apply(v);
    for (std::size_t i = 0; i < r.size(); ++i)
        if (r[i] != 0)
            rep.expect_zero("weak_symmetry", {std::to_string(i)}, {r[i]});
    return rep;
}

// ---- functoriality ----

// phi_*: C(L,V) -> C(L,V') in ambient degree n.
//   (phi_* w)^{(0)}  = phi_0 w^{(0)}
//   (phi_* w)^{(-1)} = phi_-1 w^{(-1)} + sum_i (-1)^{n+i} phi_l(x_i, w^{(0)}(xs without i))   (0-based i)
inline SparseMatrix pushforward(const RepMorphism& phi, const HemistrictLie2& L, const Representation2& V,
                                const Representation2& Vp, int n)
{
    StandardBasis src(L, V, n), dst(L, Vp, n);
    SparseMatrix M(dst.size(), src.size());
    for (std::size_t row = 0; row < dst.size(); ++row) {
        auto key = dst.key(row);
        if (key.p == 0) {
            for (std::size_t v = 0; v < V.q(); ++v)
                if (phi.phi_0(key.o, v) != 0)
                    M.add(row, src.index(0, key.k, key.xs, key.al, v), phi.phi_0(key.o, v));
            continue;
        }
        for (std::size_t u = 0; u < V.p(); ++u)
            if (phi.phi_m1(key.o, u) != 0)
                M.add(row, src.index(-1, key.k, key.xs, key.al, u), phi.phi_m1(key.o, u));
        for (std::size_t i = 0; i < key.xs.size(); ++i) {
            Tuple rest = erase_at(key.xs, i);
            for (std::size_t v = 0; v < V.q(); ++v) {
                const Rational& c = phi.phil(key.xs[i], v, key.o);
                if (c != 0)
                    M.add(row, src.index(0, key.k, rest, key.al, v), sign_pow(n + static_cast<long>(i)) * c);
            }
        }
    }
    M.finalize();
    return M;
}

namespace detail {

// Sets of q disjoint pairs (i<j) from range(m), first entries increasing.
inline void pair_sets(std::size_t m, std::size_t q, std::vector<std::vector<std::pair<std::size_t, std::size_t>>>& out)
{
    std::vector<std::pair<std::size_t, std::size_t>> cur;
    std::vector<char> used(m, 0);
    auto rec = [&](auto&& self, std::size_t min_first) -> void {
        if (cur.size() == q) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = min_first; i < m; ++i) {
            if (used[i])
                continue;
            used[i] = 1;
            for (std::size_t j = i + 1; j < m; ++j) {
                if (used[j])
                    continue;
                used[j] = 1;
                cur.emplace_back(i, j);
                self(self, i + 1);
                cur.pop_back();
                used[j] = 0;
            }
            used[i] = 0;
        }
    };
    rec(rec, 0);
}

// (-1)^q * (-1)^{sum (i_a + j_a) (1-based) + #{a<b : i_a < i_b < j_a < j_b}}
inline int pair_sign(const std::vector<std::pair<std::size_t, std::size_t>>& ps)
{
    long e = static_cast<long>(ps.size());
    for (auto& [i, j] : ps)
        e += static_cast<long>(i + j + 2);
    for (std::size_t s = 0; s < ps.size(); ++s)
        for (std::size_t t = s + 1; t < ps.size(); ++t)
            if (ps[s].first < ps[t].first && ps[t].first < ps[s].second && ps[s].second < ps[t].second)
                ++e;
    return sign_pow(e);
}

}  // namespace detail

// f^*: C(L,V) -> C(L', f^*V) in ambient degree n, for f: L' -> L.
//   (f^*w)_k(x'|al') = sum_q sum_{pair sets} sign * w_{k+q}(f1 of unpaired x' | f2(pairs), f1 al')
inline SparseMatrix pullback_cochain(const Morphism2& f, const HemistrictLie2& Lp, const HemistrictLie2& L,
                                     const Representation2& V, int n)
{
    check_shapes(f, Lp, L);
    if (!is_f_compatible(V, f))
        throw NotCompatible("pullback_cochain: l does not vanish on the image of f2");
    StandardBasis src(L, V, n), dst(Lp.a(), Lp.b(), V.p(), V.q(), n);
    SparseMatrix M(dst.size(), src.size());
    const std::size_t a = L.a(), b = L.b();
    for (std::size_t row = 0; row < dst.size(); ++row) {
        auto key = dst.key(row);
        const std::size_t m = key.xs.size();
        for (std::size_t q = 0; 2 * q <= m; ++q) {
            std::vector<std::vector<std::pair<std::size_t, std::size_t>>> sets;
            detail::pair_sets(m, q, sets);
            for (auto& ps : sets) {
                const int sgn = q == 0 ? 1 : detail::pair_sign(ps);
                std::vector<char> used(m, 0);
                for (auto& [i, j] : ps)
                    used[i] = used[j] = 1;
                // options per slot: list of (target index, coefficient)
                std::vector<std::vector<std::pair<std::size_t, Rational>>> xo, ao;
                for (std::size_t t = 0; t < m; ++t) {
                    if (used[t])
                        continue;
                    std::vector<std::pair<std::size_t, Rational>> opts;
                    for (std::size_t z = 0; z < b; ++z)
                        if (f.f_0(z, key.xs[t]) != 0)
                            opts.emplace_back(z, f.f_0(z, key.xs[t]));
                    xo.push_back(std::move(opts));
                }
                for (auto& [i, j] : ps) {
                    std::vector<std::pair<std::size_t, Rational>> opts;
                    for (std::size_t g = 0; g < a; ++g)
                        if (f.f2(key.xs[i], key.xs[j], g) != 0)
                            opts.emplace_back(g, f.f2(key.xs[i], key.xs[j], g));
                    ao.push_back(std::move(opts));
                }
                for (auto al : key.al) {
                    std::vector<std::pair<std::size_t, Rational>> opts;
                    for (std::size_t g = 0; g < a; ++g)
                        if (f.f_m1(g, al) != 0)
                            opts.emplace_back(g, f.f_m1(g, al));
                    ao.push_back(std::move(opts));
                }
                Tuple xt(xo.size()), at(ao.size());
                auto rec_a = [&](auto&& self, std::size_t s, const Rational& c) -> void {
                    if (s == ao.size()) {
                        M.add(row, src.index(key.p, key.k + q, xt, sorted(at), key.o), sgn * c);
                        return;
                    }
                    for (auto& [g, v] : ao[s]) {
                        at[s] = g;
                        self(self, s + 1, c * v);
                    }
                };
                auto rec_x = [&](auto&& self, std::size_t s, const Rational& c) -> void {
                    if (s == xo.size()) {
                        rec_a(rec_a, 0, c);
                        return;
                    }
                    for (auto& [z, v] : xo[s]) {
                        xt[s] = z;
                        self(self, s + 1, c * v);
                    }
                };
                rec_x(rec_x, 0, Rational(1));
            }
        }
    }
    M.finalize();
    return M;
}

// Cochain-map check on the constrained subspace: D' P B = P D B and P B
// satisfies the target constraints. Returns an empty report on success.
inline Report check_cochain_map(const std::vector<SparseMatrix>& maps, const ComplexRealization& src,
                                const ComplexRealization& dst, const std::function<SparseMatrix(int)>& dst_constraints)
{
    Report rep;
    for (int n = src.n_min; n <= src.n_max; ++n) {
        const std::size_t i = static_cast<std::size_t>(n - src.n_min);
        if (i + 1 >= maps.size())
            break;
        const auto& s = src.at(n);
        SparseMatrix pb = maps[i] * s.basis;
        SparseMatrix w = dst_constraints(n);
        if (w.rows() > 0 && !(w * pb).is_zero())
            rep.fail("preserves_weak_symmetry", {"n=" + std::to_string(n)});
        SparseMatrix lhs = dst.at(n).ambient_diff * pb;
        SparseMatrix rhs = maps[i + 1] * (s.ambient_diff * s.basis);
        if (!(lhs == rhs))
            rep.fail("commutes_with_D", {"n=" + std::to_string(n)});
    }
    return rep;
}

// Map on constrained coordinates: rows `free` of P B.
inline SparseMatrix restrict_map(const SparseMatrix& amb, const DegreeData& src, const DegreeData& dst)
{
    return (amb * src.basis).select_rows(dst.free);
}

}  // namespace lie2coh
