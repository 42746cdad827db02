#pragma once

// A cochain complex given by ambient coordinate spaces, linear constraints
// cutting out the cochains inside them, and an ambient differential.

#include "graded.hpp"

#include <functional>

namespace lie2coh {

struct DegreeData {
    int degree = 0;
    std::size_t ambient_dim = 0;
    SparseMatrix basis;              // ambient x dim, identity on `free`
    std::vector<std::size_t> free;   // ambient index carrying each basis column
    SparseMatrix ambient_diff;       // ambient(n+1) x ambient(n); empty at the top
    SparseMatrix diff;               // dim(n+1) x dim(n); empty at the top

    std::size_t dim() const { return free.size(); }
};

// Degrees n_min..n_max carry a differential; n_max + 1 carries only its basis.
struct ComplexRealization {
    int n_min = -1;
    int n_max = -1;
    std::vector<DegreeData> degrees;

    const DegreeData& at(int n) const
    {
        if (n < n_min || n > n_max + 1)
            throw DegreeOutOfRange("degree " + std::to_string(n) + " outside the realized range");
        return degrees[static_cast<std::size_t>(n - n_min)];
    }
    std::size_t dim(int n) const { return at(n).dim(); }
};

struct CohomologyResult {
    std::size_t dim = 0;
    SparseMatrix representatives;  // ambient x dim
};

using ConstraintFn = std::function<SparseMatrix(int)>;
using DiffFn = std::function<SparseMatrix(int)>;
using SizeFn = std::function<std::size_t(int)>;

inline DegreeData constrained_degree(int n, std::size_t ambient, const SparseMatrix& w)
{
    DegreeData dd;
    dd.degree = n;
    dd.ambient_dim = ambient;
    if (w.rows() == 0) {
        dd.basis = SparseMatrix::identity(ambient);
        dd.free.resize(ambient);
        for (std::size_t i = 0; i < ambient; ++i)
            dd.free[i] = i;
    } else {
        if (w.cols() != ambient)
            throw ShapeMismatch("constraint matrix width differs from the ambient dimension");
        auto kb = kernel(w);
        dd.basis = std::move(kb.basis);
        dd.free = std::move(kb.free);
    }
    return dd;
}

// Assembles bases and restricted differentials; asserts that D preserves the
// constrained subspaces and squares to zero on them.
inline ComplexRealization assemble_complex(int n_min, int n_max, const SizeFn& ambient,
                                           const ConstraintFn& constraints, const DiffFn& diff)
{
    if (n_max < n_min)
        throw DegreeOutOfRange("n_max below the lowest degree");
    ComplexRealization cr;
    cr.n_min = n_min;
    cr.n_max = n_max;
    std::vector<SparseMatrix> w;
    for (int n = n_min; n <= n_max + 1; ++n) {
        w.push_back(constraints(n));
        cr.degrees.push_back(constrained_degree(n, ambient(n), w.back()));
    }
    for (int n = n_min; n <= n_max; ++n) {
        auto& cur = cr.degrees[static_cast<std::size_t>(n - n_min)];
        const auto& next = cr.degrees[static_cast<std::size_t>(n - n_min + 1)];
        cur.ambient_diff = diff(n);
        if (cur.ambient_diff.rows() != next.ambient_dim || cur.ambient_diff.cols() != cur.ambient_dim)
            throw ShapeMismatch("differential shape does not match the ambient spaces");
        SparseMatrix img = cur.ambient_diff * cur.basis;
        const auto& wn = w[static_cast<std::size_t>(n - n_min + 1)];
        if (wn.rows() > 0 && !(wn * img).is_zero())
            throw InvariantViolated("D leaves the constrained subspace in degree " + std::to_string(n + 1));
        cur.diff = img.select_rows(next.free);
    }
    for (int n = n_min; n < n_max; ++n) {
        const auto& a = cr.degrees[static_cast<std::size_t>(n - n_min)];
        const auto& b = cr.degrees[static_cast<std::size_t>(n - n_min + 1)];
        if (a.dim() > 0 && !(b.diff * a.diff).is_zero())
            throw NotADifferential("D^2 != 0 from degree " + std::to_string(n));
    }
    return cr;
}

inline SparseMatrix incoming_diff(const ComplexRealization& cr, int n)
{
    if (n == cr.n_min)
        return SparseMatrix(cr.dim(n), 0);
    return cr.at(n - 1).diff;
}

// H^n for n_min <= n <= n_max, with representatives in ambient coordinates.
inline CohomologyResult cohomology(const ComplexRealization& cr, int n)
{
    if (n < cr.n_min || n > cr.n_max)
        throw DegreeOutOfRange("cohomology degree " + std::to_string(n) + " outside [" +
                               std::to_string(cr.n_min) + ", " + std::to_string(cr.n_max) + "]");
    const DegreeData& dd = cr.at(n);
    SparseMatrix in = incoming_diff(cr, n);
    auto kb = kernel(dd.diff);
    Echelon<Rational> span(dd.dim());
    auto in_t = in.transpose();
    for (std::size_t i = 0; i < in_t.rows(); ++i)
        span.insert(in_t.row(i));
    auto ker_t = kb.basis.transpose();
    SparseMatrix chosen(0, dd.dim());
    for (std::size_t i = 0; i < ker_t.rows(); ++i)
        if (span.insert(ker_t.row(i)))
            chosen.push_row(ker_t.row(i));
    CohomologyResult res;
    res.dim = chosen.rows();
    res.representatives = dd.basis * chosen.transpose();
    return res;
}

inline std::vector<std::size_t> cohomology_dims(const ComplexRealization& cr)
{
    std::vector<std::size_t> out;
    for (int n = cr.n_min; n <= cr.n_max; ++n)
        out.push_back(cohomology_dim(incoming_diff(cr, n), cr.at(n).diff));
    return out;
}

// Vector in ambient coordinates lies in the constrained subspace.
inline bool in_subspace(const DegreeData& dd, const Vec& v)
{
    if (v.size() != dd.ambient_dim)
        throw ShapeMismatch("vector length differs from the ambient dimension");
    Vec c(dd.dim());
    for (std::size_t i = 0; i < dd.dim(); ++i)
        c[i] = v[dd.free[i]];
    Vec back = dd.basis.apply(c);
    return back == v;
}

// Constrained coordinates of an ambient vector (assumed to lie in the subspace).
inline Vec restrict_to_basis(const DegreeData& dd, const Vec& v)
{
    Vec c(dd.dim());
    for (std::size_t i = 0; i < dd.dim(); ++i)
        c[i] = v.at(dd.free[i]);
    return c;
}

}  // namespace lie2coh
