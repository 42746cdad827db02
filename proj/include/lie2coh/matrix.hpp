#pragma once

// Dense and sparse matrices over an exact field, plus the elimination
// primitives (rank, nullspace, cohomology dimension) used everywhere else.

#include "errors.hpp"
#include "rational.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

namespace lie2coh {

template <class T>
class BasicMatrix {
public:
    BasicMatrix() = default;
    BasicMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    BasicMatrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
        : rows_(rows), cols_(cols), a_(std::move(entries))
    {
        if (a_.size() != rows_ * cols_)
            throw ShapeMismatch("matrix entries do not match rows*cols");
    }
    BasicMatrix(std::initializer_list<std::initializer_list<T>> rows)
    {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        for (auto& r : rows) {
            if (r.size() != cols_)
                throw ShapeMismatch("ragged initializer");
            a_.insert(a_.end(), r.begin(), r.end());
        }
    }

    static BasicMatrix identity(std::size_t n)
    {
        BasicMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const std::vector<T>& entries() const { return a_; }

    T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool is_zero() const
    {
        return std::all_of(a_.begin(), a_.end(), [](const T& x) { return x == 0; });
    }

    BasicMatrix transpose() const
    {
        BasicMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                t(j, i) = (*this)(i, j);
        return t;
    }

    std::vector<T> column(std::size_t j) const
    {
        std::vector<T> c(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            c[i] = (*this)(i, j);
        return c;
    }

    std::vector<T> apply(const std::vector<T>& v) const
    {
        if (v.size() != cols_)
            throw ShapeMismatch("matrix-vector shape mismatch");
        std::vector<T> out(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if ((*this)(i, j) != 0 && v[j] != 0)
                    out[i] += (*this)(i, j) * v[j];
        return out;
    }

    friend bool operator==(const BasicMatrix& a, const BasicMatrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }
    friend bool operator!=(const BasicMatrix& a, const BasicMatrix& b) { return !(a == b); }

    friend BasicMatrix operator*(const BasicMatrix& a, const BasicMatrix& b)
    {
        if (a.cols_ != b.rows_)
            throw ShapeMismatch("matrix product shape mismatch");
        BasicMatrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& x = a(i, k);
                if (x == 0)
                    continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    if (b(k, j) != 0)
                        c(i, j) += x * b(k, j);
            }
        return c;
    }
    friend BasicMatrix operator+(BasicMatrix a, const BasicMatrix& b)
    {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw ShapeMismatch("matrix sum shape mismatch");
        for (std::size_t i = 0; i < a.a_.size(); ++i)
            a.a_[i] += b.a_[i];
        return a;
    }
    friend BasicMatrix operator-(BasicMatrix a, const BasicMatrix& b)
    {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw ShapeMismatch("matrix difference shape mismatch");
        for (std::size_t i = 0; i < a.a_.size(); ++i)
            a.a_[i] -= b.a_[i];
        return a;
    }
    friend BasicMatrix operator*(const T& s, BasicMatrix a)
    {
        for (auto& x : a.a_)
            x *= s;
        return a;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<T> a_;
};

using Matrix = BasicMatrix<Rational>;

inline std::ostream& operator<<(std::ostream& os, const Matrix& m)
{
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << '[';
        for (std::size_t j = 0; j < m.cols(); ++j)
            os << (j ? " " : "") << to_string(m(i, j));
        os << "]\n";
    }
    return os;
}

// ---------------------------------------------------------------------------
// Sparse rows. Entries sorted by column, no explicit zeros.

template <class T>
using SparseRow = std::vector<std::pair<std::uint32_t, T>>;

template <class T>
class BasicSparse {
public:
    BasicSparse() = default;
    BasicSparse(std::size_t rows, std::size_t cols) : cols_(cols), r_(rows) {}

    std::size_t rows() const { return r_.size(); }
    std::size_t cols() const { return cols_; }
    const SparseRow<T>& row(std::size_t i) const { return r_[i]; }
    SparseRow<T>& row(std::size_t i) { return r_[i]; }

    // Accumulating insert; call finalize() before reading.
    void add(std::size_t i, std::size_t j, const T& v)
    {
        if (v != 0)
            r_[i].emplace_back(static_cast<std::uint32_t>(j), v);
    }
    void finalize()
    {
        for (auto& row : r_)
            compress(row);
    }
    void push_row(SparseRow<T> row)
    {
        compress(row);
        r_.push_back(std::move(row));
    }

    static void compress(SparseRow<T>& row)
    {
        std::sort(row.begin(), row.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        std::size_t w = 0;
        for (std::size_t i = 0; i < row.size();) {
            std::size_t j = i;
            T acc = row[i].second;
            while (++j < row.size() && row[j].first == row[i].first)
                acc += row[j].second;
            if (acc != 0)
                row[w++] = {row[i].first, acc};
            i = j;
        }
        row.resize(w);
    }

    bool is_zero() const
    {
        return std::all_of(r_.begin(), r_.end(), [](const auto& row) { return row.empty(); });
    }

    std::size_t nnz() const
    {
        std::size_t n = 0;
        for (auto& row : r_)
            n += row.size();
        return n;
    }

    BasicSparse transpose() const
    {
        BasicSparse t(cols_, rows());
        for (std::size_t i = 0; i < rows(); ++i)
            for (auto& [j, v] : r_[i])
                t.r_[j].emplace_back(static_cast<std::uint32_t>(i), v);
        return t;
    }

    BasicMatrix<T> dense() const
    {
        BasicMatrix<T> m(rows(), cols_);
        for (std::size_t i = 0; i < rows(); ++i)
            for (auto& [j, v] : r_[i])
                m(i, j) = v;
        return m;
    }

    static BasicSparse from_dense(const BasicMatrix<T>& m)
    {
        BasicSparse s(m.rows(), m.cols());
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j)
                if (m(i, j) != 0)
                    s.r_[i].emplace_back(static_cast<std::uint32_t>(j), m(i, j));
        return s;
    }

    static BasicSparse identity(std::size_t n)
    {
        BasicSparse s(n, n);
        for (std::size_t i = 0; i < n; ++i)
            s.r_[i].emplace_back(static_cast<std::uint32_t>(i), T(1));
        return s;
    }

    std::vector<T> apply(const std::vector<T>& v) const
    {
        if (v.size() != cols_)
            throw ShapeMismatch("sparse matrix-vector shape mismatch");
        std::vector<T> out(rows());
        for (std::size_t i = 0; i < rows(); ++i)
            for (auto& [j, x] : r_[i])
                if (v[j] != 0)
                    out[i] += x * v[j];
        return out;
    }

    // Keep only the listed rows, in the listed order.
    BasicSparse select_rows(const std::vector<std::size_t>& idx) const
    {
        BasicSparse s(0, cols_);
        for (auto i : idx)
            s.r_.push_back(r_.at(i));
        return s;
    }

    friend BasicSparse operator*(const BasicSparse& a, const BasicSparse& b)
    {
        if (a.cols_ != b.rows())
            throw ShapeMismatch("sparse product shape mismatch");
        BasicSparse c(a.rows(), b.cols_);
        std::vector<T> acc(b.cols_);
        std::vector<char> mark(b.cols_, 0);
        std::vector<std::uint32_t> touched;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            touched.clear();
            for (auto& [k, x] : a.r_[i])
                for (auto& [j, y] : b.r_[k]) {
                    if (!mark[j]) {
                        mark[j] = 1;
                        touched.push_back(j);
                        acc[j] = x * y;
                    } else {
                        acc[j] += x * y;
                    }
                }
            std::sort(touched.begin(), touched.end());
            for (auto j : touched) {
                if (acc[j] != 0)
                    c.r_[i].emplace_back(j, acc[j]);
                mark[j] = 0;
                acc[j] = 0;
            }
        }
        return c;
    }
    friend BasicSparse operator+(const BasicSparse& a, const BasicSparse& b)
    {
        if (a.rows() != b.rows() || a.cols_ != b.cols_)
            throw ShapeMismatch("sparse sum shape mismatch");
        BasicSparse c = a;
        for (std::size_t i = 0; i < b.rows(); ++i) {
            c.r_[i].insert(c.r_[i].end(), b.r_[i].begin(), b.r_[i].end());
            compress(c.r_[i]);
        }
        return c;
    }
    friend BasicSparse operator*(const T& s, BasicSparse a)
    {
        if (s == 0)
            return BasicSparse(a.rows(), a.cols());
        for (auto& row : a.r_)
            for (auto& e : row)
                e.second *= s;
        return a;
    }
    friend BasicSparse operator-(const BasicSparse& a, const BasicSparse& b) { return a + T(-1) * b; }
    friend bool operator==(const BasicSparse& a, const BasicSparse& b)
    {
        return a.cols_ == b.cols_ && a.r_ == b.r_;
    }

private:
    std::size_t cols_ = 0;
    std::vector<SparseRow<T>> r_;
};

using SparseMatrix = BasicSparse<Rational>;

namespace detail {

// row <- row - s * other, both sorted.
template <class T>
void axpy_row(SparseRow<T>& row, const T& s, const SparseRow<T>& other)
{
    SparseRow<T> out;
    out.reserve(row.size() + other.size());
    std::size_t i = 0, j = 0;
    while (i < row.size() || j < other.size()) {
        if (j == other.size() || (i < row.size() && row[i].first < other[j].first)) {
            out.push_back(std::move(row[i++]));
        } else if (i == row.size() || other[j].first < row[i].first) {
            out.emplace_back(other[j].first, -s * other[j].second);
            ++j;
        } else {
            T v = row[i].second - s * other[j].second;
            if (v != 0)
                out.emplace_back(row[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    row.swap(out);
}

}  // namespace detail

// Incremental row echelon form keyed by leading column. Leading entries are 1.
template <class T>
class Echelon {
public:
    explicit Echelon(std::size_t cols) : cols_(cols) {}

    // Returns true when the row was independent of those already inserted.
    bool insert(SparseRow<T> row)
    {
        reduce(row);
        if (row.empty())
            return false;
        T lead = row.front().second;
        if (lead != 1)
            for (auto& e : row)
                e.second /= lead;
        pivots_.emplace(row.front().first, std::move(row));
        return true;
    }

    // Reduce against leading columns only.
    void reduce(SparseRow<T>& row) const
    {
        std::size_t pos = 0;
        while (pos < row.size()) {
            auto it = pivots_.find(row[pos].first);
            if (it == pivots_.end()) {
                ++pos;
                continue;
            }
            T s = row[pos].second;
            detail::axpy_row(row, s, it->second);
        }
    }

    std::size_t rank() const { return pivots_.size(); }
    std::size_t cols() const { return cols_; }

    // Back-substitute so every pivot column is zero outside its own row.
    void make_reduced()
    {
        for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
            auto& row = it->second;
            // entries after the lead may hit later pivots; those are already reduced
            for (std::size_t pos = 1; pos < row.size();) {
                auto p = pivots_.find(row[pos].first);
                if (p == pivots_.end() || p->first == it->first) {
                    ++pos;
                    continue;
                }
                T s = row[pos].second;
                detail::axpy_row(row, s, p->second);
            }
        }
    }

    const std::map<std::uint32_t, SparseRow<T>>& pivots() const { return pivots_; }

private:
    std::size_t cols_;
    std::map<std::uint32_t, SparseRow<T>> pivots_;
};

template <class T>
std::size_t rank(const BasicSparse<T>& m)
{
    // eliminate along the shorter side
    if (m.rows() > m.cols() && m.cols() > 0) {
        auto t = m.transpose();
        Echelon<T> e(t.cols());
        for (std::size_t i = 0; i < t.rows(); ++i)
            e.insert(t.row(i));
        return e.rank();
    }
    Echelon<T> e(m.cols());
    std::vector<std::size_t> order(m.rows());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](auto a, auto b) { return m.row(a).size() < m.row(b).size(); });
    for (auto i : order) {
        e.insert(m.row(i));
        if (e.rank() == m.cols())
            break;
    }
    return e.rank();
}

template <class T>
std::size_t rank(const BasicMatrix<T>& m)
{
    return rank(BasicSparse<T>::from_dense(m));
}

// Kernel basis of a sparse matrix, as the columns of a cols x (cols-rank) sparse
// matrix. Free coordinates form an identity block: column c has a 1 at its free
// index and zeros at every other free index.
template <class T>
struct KernelBasis {
    BasicSparse<T> basis;             // cols x dim
    std::vector<std::size_t> free;    // free[c] = ambient index carrying the identity
};

template <class T>
KernelBasis<T> kernel(const BasicSparse<T>& m)
{
    Echelon<T> e(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        e.insert(m.row(i));
    e.make_reduced();
    std::vector<char> is_pivot(m.cols(), 0);
    for (auto& [c, row] : e.pivots())
        is_pivot[c] = 1;
    KernelBasis<T> kb;
    std::vector<std::size_t> col_of(m.cols(), 0);
    for (std::size_t j = 0; j < m.cols(); ++j)
        if (!is_pivot[j]) {
            col_of[j] = kb.free.size();
            kb.free.push_back(j);
        }
    kb.basis = BasicSparse<T>(m.cols(), kb.free.size());
    for (auto f : kb.free)
        kb.basis.add(f, col_of[f], T(1));
    for (auto& [c, row] : e.pivots())
        for (std::size_t k = 1; k < row.size(); ++k)
            kb.basis.add(c, col_of[row[k].first], -row[k].second);
    kb.basis.finalize();
    return kb;
}

template <class T>
BasicMatrix<T> nullspace_basis(const BasicMatrix<T>& m)
{
    return kernel(BasicSparse<T>::from_dense(m)).basis.dense();
}

// dim ker(d_out) - rank(d_in); d_out * d_in must vanish.
template <class T>
std::size_t cohomology_dim(const BasicSparse<T>& d_in, const BasicSparse<T>& d_out)
{
    if (d_out.cols() != d_in.rows())
        throw ShapeMismatch("cohomology_dim: d_out.cols != d_in.rows");
    if (d_in.cols() > 0 && d_out.rows() > 0 && !(d_out * d_in).is_zero())
        throw CompositionNonzero("d_out * d_in != 0");
    return d_out.cols() - rank(d_out) - rank(d_in);
}

template <class T>
std::size_t cohomology_dim(const BasicMatrix<T>& d_in, const BasicMatrix<T>& d_out)
{
    return cohomology_dim(BasicSparse<T>::from_dense(d_in), BasicSparse<T>::from_dense(d_out));
}

// Is v in the column span of m?
template <class T>
bool in_column_span(const BasicSparse<T>& m, const std::vector<T>& v)
{
    auto t = m.transpose();
    Echelon<T> e(m.rows());
    for (std::size_t i = 0; i < t.rows(); ++i)
        e.insert(t.row(i));
    SparseRow<T> r;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0)
            r.emplace_back(static_cast<std::uint32_t>(i), v[i]);
    e.reduce(r);
    return r.empty();
}

// Some x with m x = v, or nullopt when v is outside the column span.
template <class T>
std::optional<std::vector<T>> solve(const BasicSparse<T>& m, const std::vector<T>& v)
{
    if (v.size() != m.rows())
        throw ShapeMismatch("solve: right-hand side length differs from the row count");
    const std::size_t n = m.cols();
    BasicSparse<T> aug(m.rows(), n + 1);
    auto t = m.transpose();
    for (std::size_t j = 0; j < n; ++j)
        for (auto& [i, x] : t.row(j))
            aug.add(i, j, x);
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0)
            aug.add(i, n, -v[i]);
    aug.finalize();
    auto kb = kernel(aug);
    auto cols = kb.basis.transpose();
    for (std::size_t c = 0; c < cols.rows(); ++c) {
        T last = 0;
        for (auto& [i, x] : cols.row(c))
            if (i == n)
                last = x;
        if (last == 0)
            continue;
        std::vector<T> x(n, T(0));
        for (auto& [i, y] : cols.row(c))
            if (i < n)
                x[i] = y / last;
        return x;
    }
    return std::nullopt;
}

}  // namespace lie2coh
