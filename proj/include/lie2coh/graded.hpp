#pragma once

// Two-term complexes V^-1 -> V^0 and multilinear maps stored as dense
// structure-constant tensors.

#include "errors.hpp"
#include "matrix.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

namespace lie2coh {

using Vec = std::vector<Rational>;

inline Vec zero_vec(std::size_t n) { return Vec(n); }

inline Vec unit_vec(std::size_t n, std::size_t i)
{
    Vec v(n);
    v.at(i) = 1;
    return v;
}

inline bool is_zero(const Vec& v)
{
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

inline Vec& operator+=(Vec& a, const Vec& b)
{
    if (a.size() != b.size())
        throw ShapeMismatch("vector sum");
    for (std::size_t i = 0; i < a.size(); ++i)
        a[i] += b[i];
    return a;
}
inline Vec& operator-=(Vec& a, const Vec& b)
{
    if (a.size() != b.size())
        throw ShapeMismatch("vector difference");
    for (std::size_t i = 0; i < a.size(); ++i)
        a[i] -= b[i];
    return a;
}
inline Vec operator+(Vec a, const Vec& b) { return a += b; }
inline Vec operator-(Vec a, const Vec& b) { return a -= b; }
inline Vec operator*(const Rational& s, Vec a)
{
    for (auto& x : a)
        x *= s;
    return a;
}

inline Vec operator*(const Matrix& m, const Vec& v) { return m.apply(v); }

struct TwoTermComplex {
    std::size_t dim_m1 = 0;
    std::size_t dim_0 = 0;
    Matrix d;  // dim_0 x dim_m1

    TwoTermComplex() = default;
    TwoTermComplex(std::size_t m1, std::size_t z) : dim_m1(m1), dim_0(z), d(z, m1) {}
    TwoTermComplex(std::size_t m1, std::size_t z, Matrix dd) : dim_m1(m1), dim_0(z), d(std::move(dd))
    {
        validate();
    }

    std::size_t dim(int degree) const
    {
        if (degree == 0)
            return dim_0;
        if (degree == -1)
            return dim_m1;
        return 0;
    }

    void validate() const
    {
        if (d.rows() != dim_0 || d.cols() != dim_m1)
            throw ShapeMismatch("complex differential must be dim_0 x dim_m1");
    }

    friend bool operator==(const TwoTermComplex& a, const TwoTermComplex& b)
    {
        return a.dim_m1 == b.dim_m1 && a.dim_0 == b.dim_0 && a.d == b.d;
    }
};

// true iff dst.d * f_m1 == f_0 * src.d
inline bool is_chain_map(const Matrix& f_m1, const Matrix& f_0, const TwoTermComplex& src,
                         const TwoTermComplex& dst)
{
    if (f_m1.rows() != dst.dim_m1 || f_m1.cols() != src.dim_m1 || f_0.rows() != dst.dim_0 ||
        f_0.cols() != src.dim_0)
        throw ShapeMismatch("is_chain_map: block shapes do not match the complexes");
    return dst.d * f_m1 == f_0 * src.d;
}

// A multilinear map on one degree block. Index order of the flat tensor is
// (arg_0, ..., arg_{k-1}, out), row-major.
class MultiMap {
public:
    MultiMap() = default;
    MultiMap(std::vector<int> arg_degrees, int out_degree, std::vector<std::size_t> arg_dims,
             std::size_t out_dim)
        : arg_degrees_(std::move(arg_degrees)), out_degree_(out_degree),
          arg_dims_(std::move(arg_dims)), out_dim_(out_dim)
    {
        if (arg_degrees_.size() != arg_dims_.size())
            throw ShapeMismatch("MultiMap: degree list and dimension list differ in length");
        std::size_t n = out_dim_;
        for (auto d : arg_dims_)
            n *= d;
        data_.assign(n, Rational(0));
    }

    // Bilinear shorthand.
    static MultiMap bilinear(int deg_a, std::size_t dim_a, int deg_b, std::size_t dim_b, int out_deg,
                             std::size_t out_dim)
    {
        return MultiMap({deg_a, deg_b}, out_deg, {dim_a, dim_b}, out_dim);
    }

    std::size_t arity() const { return arg_dims_.size(); }
    const std::vector<int>& arg_degrees() const { return arg_degrees_; }
    int out_degree() const { return out_degree_; }
    const std::vector<std::size_t>& arg_dims() const { return arg_dims_; }
    std::size_t out_dim() const { return out_dim_; }
    const std::vector<Rational>& data() const { return data_; }
    std::vector<Rational>& data() { return data_; }
    const std::vector<std::vector<std::size_t>>& symmetric_slots() const { return sym_; }

    void declare_symmetric(std::vector<std::size_t> slots)
    {
        for (auto s : slots)
            if (s >= arity())
                throw ShapeMismatch("symmetric slot out of range");
        sym_.push_back(std::move(slots));
    }

    std::size_t flat(const std::vector<std::size_t>& args, std::size_t out) const
    {
        if (args.size() != arity())
            throw ShapeMismatch("MultiMap: wrong number of indices");
        std::size_t i = 0;
        for (std::size_t s = 0; s < args.size(); ++s) {
            if (args[s] >= arg_dims_[s])
                throw ShapeMismatch("MultiMap: index out of range");
            i = i * arg_dims_[s] + args[s];
        }
        if (out >= out_dim_)
            throw ShapeMismatch("MultiMap: output index out of range");
        return i * out_dim_ + out;
    }

    Rational& at(const std::vector<std::size_t>& args, std::size_t out) { return data_[flat(args, out)]; }
    const Rational& at(const std::vector<std::size_t>& args, std::size_t out) const
    {
        return data_[flat(args, out)];
    }

    // Unchecked fast paths used by the complex assemblers.
    const Rational& operator()(std::size_t i, std::size_t o) const { return data_[i * out_dim_ + o]; }
    Rational& operator()(std::size_t i, std::size_t o) { return data_[i * out_dim_ + o]; }
    const Rational& operator()(std::size_t i, std::size_t j, std::size_t o) const
    {
        return data_[(i * arg_dims_[1] + j) * out_dim_ + o];
    }
    Rational& operator()(std::size_t i, std::size_t j, std::size_t o)
    {
        return data_[(i * arg_dims_[1] + j) * out_dim_ + o];
    }
    const Rational& operator()(std::size_t i, std::size_t j, std::size_t k, std::size_t o) const
    {
        return data_[((i * arg_dims_[1] + j) * arg_dims_[2] + k) * out_dim_ + o];
    }
    Rational& operator()(std::size_t i, std::size_t j, std::size_t k, std::size_t o)
    {
        return data_[((i * arg_dims_[1] + j) * arg_dims_[2] + k) * out_dim_ + o];
    }

    // Output vector on basis arguments.
    Vec column(const std::vector<std::size_t>& args) const
    {
        if (out_dim_ == 0)
            return Vec();
        std::size_t base = flat(args, 0);
        return Vec(data_.begin() + base, data_.begin() + base + out_dim_);
    }

    bool is_zero() const { return lie2coh::is_zero(data_); }

    // Checks the symmetric-slot invariant; returns false on the first failure.
    bool symmetric_ok() const;

    bool same_shape(const MultiMap& o) const
    {
        return arg_degrees_ == o.arg_degrees_ && out_degree_ == o.out_degree_ &&
               arg_dims_ == o.arg_dims_ && out_dim_ == o.out_dim_;
    }

    MultiMap& operator+=(const MultiMap& o)
    {
        if (!same_shape(o))
            throw ShapeMismatch("MultiMap sum");
        for (std::size_t i = 0; i < data_.size(); ++i)
            data_[i] += o.data_[i];
        return *this;
    }
    friend MultiMap operator+(MultiMap a, const MultiMap& b) { return a += b; }
    friend MultiMap operator-(MultiMap a, const MultiMap& b)
    {
        if (!a.same_shape(b))
            throw ShapeMismatch("MultiMap difference");
        for (std::size_t i = 0; i < a.data_.size(); ++i)
            a.data_[i] -= b.data_[i];
        return a;
    }
    friend MultiMap operator*(const Rational& s, MultiMap a)
    {
        for (auto& x : a.data_)
            x *= s;
        return a;
    }
    friend bool operator==(const MultiMap& a, const MultiMap& b)
    {
        return a.same_shape(b) && a.data_ == b.data_;
    }

    // Visit every basis tuple of the arguments.
    template <class F>
    void for_each_index(F&& f) const
    {
        std::vector<std::size_t> idx(arity(), 0);
        for (auto d : arg_dims_)
            if (d == 0)
                return;
        while (true) {
            f(const_cast<const std::vector<std::size_t>&>(idx));
            std::size_t s = arity();
            while (s > 0) {
                --s;
                if (++idx[s] < arg_dims_[s])
                    break;
                idx[s] = 0;
                if (s == 0)
                    return;
            }
            if (arity() == 0)
                return;
        }
    }

private:
    std::vector<int> arg_degrees_;
    int out_degree_ = 0;
    std::vector<std::size_t> arg_dims_;
    std::size_t out_dim_ = 0;
    std::vector<Rational> data_;
    std::vector<std::vector<std::size_t>> sym_;
};

inline bool MultiMap::symmetric_ok() const
{
    bool ok = true;
    for (auto& group : sym_) {
        for_each_index([&](const std::vector<std::size_t>& idx) {
            if (!ok)
                return;
            for (std::size_t a = 0; a < group.size() && ok; ++a)
                for (std::size_t b = a + 1; b < group.size() && ok; ++b) {
                    auto sw = idx;
                    std::swap(sw[group[a]], sw[group[b]]);
                    for (std::size_t o = 0; o < out_dim_; ++o)
                        if (at(idx, o) != at(sw, o)) {
                            ok = false;
                            break;
                        }
                }
        });
    }
    return ok;
}

// Multilinear contraction of the tensor against coefficient vectors.
inline Vec evaluate(const MultiMap& m, const std::vector<Vec>& args)
{
    if (args.size() != m.arity())
        throw ShapeMismatch("evaluate: wrong number of arguments");
    for (std::size_t s = 0; s < args.size(); ++s)
        if (args[s].size() != m.arg_dims()[s])
            throw ShapeMismatch("evaluate: argument " + std::to_string(s) + " has wrong dimension");
    Vec out(m.out_dim());
    if (m.arity() == 0) {
        for (std::size_t o = 0; o < m.out_dim(); ++o)
            out[o] = m.data()[o];
        return out;
    }
    m.for_each_index([&](const std::vector<std::size_t>& idx) {
        Rational c = 1;
        for (std::size_t s = 0; s < idx.size(); ++s) {
            const Rational& a = args[s][idx[s]];
            if (a == 0)
                return;
            c *= a;
        }
        if (m.out_dim() == 0)
            return;
        std::size_t base = m.flat(idx, 0);
        for (std::size_t o = 0; o < m.out_dim(); ++o)
            if (m.data()[base + o] != 0)
                out[o] += c * m.data()[base + o];
    });
    return out;
}

inline Vec evaluate(const MultiMap& m, const Vec& a, const Vec& b) { return evaluate(m, std::vector<Vec>{a, b}); }

// Blocks of d(h): one MultiMap per argument-degree pattern where it is nonzero
// by construction. Output degree of every block is h.out_degree() + 1.
//
//   d(h)(a_1..a_k) = d(h(a_1..a_k)) + sum_s (-1)^(|a_1|+..+|a_{s-1}|) h(.., d a_s, ..)
//
// A block with output degree -2 is dropped (the zero space).
inline std::vector<MultiMap> homotopy_coboundary(const MultiMap& h,
                                                 const std::vector<TwoTermComplex>& slot_spaces,
                                                 const TwoTermComplex& target)
{
    int total = std::accumulate(h.arg_degrees().begin(), h.arg_degrees().end(), 0);
    if (h.out_degree() != total - 1)
        throw DegreeMismatch("homotopy_coboundary: out degree must be the argument degree minus 1");
    if (slot_spaces.size() != h.arity())
        throw ShapeMismatch("homotopy_coboundary: one complex per slot required");
    for (std::size_t s = 0; s < h.arity(); ++s)
        if (slot_spaces[s].dim(h.arg_degrees()[s]) != h.arg_dims()[s])
            throw ShapeMismatch("homotopy_coboundary: slot dimension mismatch");
    if (target.dim(h.out_degree()) != h.out_dim())
        throw ShapeMismatch("homotopy_coboundary: target dimension mismatch");

    std::vector<MultiMap> blocks;
    const int out = h.out_degree() + 1;
    if (out < -1)
        return blocks;
    if (h.out_degree() == -1) {
        MultiMap b(h.arg_degrees(), 0, h.arg_dims(), target.dim_0);
        h.for_each_index([&](const std::vector<std::size_t>& idx) {
            Vec v = h.column(idx);
            if (lie2coh::is_zero(v))
                return;
            Vec w = target.d * v;
            for (std::size_t o = 0; o < w.size(); ++o)
                b.at(idx, o) = w[o];
        });
        blocks.push_back(std::move(b));
    }
    int preceding = 0;
    for (std::size_t s = 0; s < h.arity(); ++s) {
        if (h.arg_degrees()[s] == 0) {
            auto degs = h.arg_degrees();
            auto dims = h.arg_dims();
            degs[s] = -1;
            dims[s] = slot_spaces[s].dim_m1;
            MultiMap b(degs, out, dims, h.out_dim());
            const int sign = (preceding % 2 == 0) ? 1 : -1;
            const Matrix& dm = slot_spaces[s].d;
            b.for_each_index([&](const std::vector<std::size_t>& idx) {
                auto src = idx;
                for (std::size_t x = 0; x < dm.rows(); ++x) {
                    const Rational& c = dm(x, idx[s]);
                    if (c == 0)
                        continue;
                    src[s] = x;
                    for (std::size_t o = 0; o < h.out_dim(); ++o)
                        b.at(idx, o) += sign * c * h.at(src, o);
                }
            });
            blocks.push_back(std::move(b));
        }
        preceding += h.arg_degrees()[s];
    }
    return blocks;
}

// The block of a list with the given argument degrees, or nullptr.
inline const MultiMap* find_block(const std::vector<MultiMap>& blocks, const std::vector<int>& degs)
{
    for (auto& b : blocks)
        if (b.arg_degrees() == degs)
            return &b;
    return nullptr;
}

}  // namespace lie2coh
