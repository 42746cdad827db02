// Regenerates the bundled definition files in data/.
//   make_data OUTDIR

#include "lie2coh/io.hpp"

#include <filesystem>
#include <iostream>

using namespace lie2coh;

namespace {

std::filesystem::path out_dir;

void emit(const std::string& file, const DefinitionFile& f)
{
    std::ofstream os(out_dir / file, std::ios::binary);
    os << write_definition(f);
    std::cout << "wrote " << file << "\n";
}

void require(const Report& r, const std::string& what)
{
    if (!r.ok())
        throw std::runtime_error(what + ": " + r.violations().front().describe());
}

LeibnizAlgebra g2()
{
    LeibnizAlgebra g(2);
    g.c(0, 0, 1) = 1;
    return g;
}

// [e1,e1] = e2, [e1,e2] = e3
LeibnizAlgebra cyclic3()
{
    LeibnizAlgebra g(3);
    g.c(0, 0, 1) = 1;
    g.c(0, 1, 2) = 1;
    return g;
}

LeibnizAlgebra c4()
{
    LeibnizAlgebra g(4);
    g.c(0, 1, 1) = 1;
    g.c(1, 0, 1) = -1;
    g.c(1, 0, 3) = -1;
    g.c(0, 3, 3) = 1;
    g.c(1, 2, 3) = 1;
    return g;
}

// span(x, y) with [x,y] = y, acting on span(alpha), d alpha = y
HemistrictLie2 strict_lie2()
{
    HemistrictLie2 L(TwoTermComplex(1, 2, Matrix{{0}, {1}}));
    L.c00(0, 1, 1) = 1;
    L.c00(1, 0, 1) = -1;
    L.c0m(0, 0, 0) = 1;
    L.cm0(0, 0, 0) = -1;
    return L;
}

RepresentationDef kind(const std::string& k)
{
    RepresentationDef r;
    r.kind = k;
    return r;
}

DefinitionFile with(const std::string& name, AlgebraDef a, std::optional<RepresentationDef> r)
{
    DefinitionFile f;
    f.name = name;
    f.algebra = std::move(a);
    f.representation = std::move(r);
    return f;
}

Vec times(const SparseMatrix& m, const Vec& v)
{
    Vec out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (auto& [j, x] : m.row(i))
            out[i] += x * v[j];
    return out;
}

Vec column(const SparseMatrix& m, std::size_t j)
{
    Vec v(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (auto& [c, x] : m.row(i))
            if (c == j)
                v[i] = x;
    return v;
}

DefinitionFile cocycle_file(const std::string& name, const StandardCochain& w)
{
    DefinitionFile f;
    f.name = name;
    f.cochain = cochain_def(w);
    return f;
}

bool top_part_zero(const StandardCochain& w) { return !w.has(-1, 0) || w.at(-1, 0).is_zero(); }

}  // namespace

int main(int argc, char** argv)
{
    if (argc != 2) {
        std::cerr << "usage: make_data OUTDIR\n";
        return 2;
    }
    out_dir = argv[1];
    std::filesystem::create_directories(out_dir);

    HemistrictLie2 ab(1, 1);
    emit("abelian.def", with("abelian", algebra_def(ab), kind("trivial")));

    const HemistrictLie2 Lg2 = from_leibniz(g2());
    require(check_hemistrict(Lg2), "g2");
    emit("g2.def", with("g2", algebra_def(Lg2), kind("trivial")));
    emit("g2_adjoint.def", with("g2 adjoint", algebra_def(Lg2), kind("adjoint")));
    emit("g2_leibniz.def", with("g2 leibniz", algebra_def(g2()), kind("adjoint")));

    require(check_leibniz(cyclic3()), "cyclic3");
    emit("cyclic3.def", with("cyclic3", algebra_def(cyclic3()), kind("adjoint")));
    require(check_leibniz(c4()), "c4");
    emit("c4.def", with("c4", algebra_def(c4()), kind("adjoint")));

    const HemistrictLie2 S = strict_lie2();
    require(check_hemistrict(S), "strict_lie2");
    emit("strict_lie2.def", with("strict lie 2-algebra", algebra_def(S), kind("trivial")));

    HemistrictLie2 ni(2, 2);
    ni.complex.d(0, 0) = 1;
    emit("non-injective.def", with("non-injective", algebra_def(ni), kind("trivial")));

    // h2 = 0 leaves room for l_alpha != 0
    HemistrictLie2 la(1, 1);
    la.complex.d(0, 0) = 1;
    Representation2 V(la, TwoTermComplex(1, 1, Matrix{{1}}));
    V.l00(0, 0, 0) = 3;
    V.l0m(0, 0, 0) = 3;
    V.lm0(0, 0, 0) = 3;
    V.r00(0, 0, 0) = -3;
    V.rm0(0, 0, 0) = -3;
    V.r0m(0, 0, 0) = -3;
    require(check_hemistrict(la), "lalpha algebra");
    require(check_representation(V, la), "lalpha representation");
    emit("lalpha.def", with("nonzero l_alpha", algebra_def(la), representation_def(V)));

    // morphisms: cyclic3 -> g2 killing e3, and the scaling e1 -> 2 e1 of g2
    {
        const HemistrictLie2 L3 = from_leibniz(cyclic3());
        Morphism2 f(L3, Lg2);
        f.f_0(0, 0) = 1;
        f.f_0(1, 1) = 1;
        f.f_m1(0, 0) = 1;
        require(check_morphism(f, L3, Lg2), "cyclic3 -> g2");
        DefinitionFile mf = with("cyclic3 to g2", algebra_def(cyclic3()), std::nullopt);
        mf.morphism = MorphismDef{algebra_def(g2()), detail::entries_of(f.f_m1), detail::entries_of(f.f_0),
                                  detail::entries_of(f.f2), ""};
        emit("cyclic3_to_g2.def", mf);

        Morphism2 s(Lg2, Lg2);
        s.f_0(0, 0) = 2;
        s.f_0(1, 1) = 4;
        s.f_m1(0, 0) = 4;
        require(check_morphism(s, Lg2, Lg2), "g2 scaling");
        DefinitionFile sf = with("g2 scaling", algebra_def(g2()), std::nullopt);
        sf.morphism = MorphismDef{algebra_def(g2()), detail::entries_of(s.f_m1), detail::entries_of(s.f_0),
                                  detail::entries_of(s.f2), ""};
        emit("g2_scale.def", sf);
    }

    // cocycles
    {
        const Representation2 T = trivial_rep(Lg2);
        emit("g2_zero_cocycle.def", cocycle_file("zero 2-cochain on g2", zero_cochain(Lg2, T, 2)));
        emit("g2_semidirect.def",
             with("g2 semidirect", algebra_def(semidirect_unchecked(Lg2, minimal_model(Lg2, T).vs)), std::nullopt));

        // D of a 1-cochain with a nonzero value on every L0 basis vector
        ComplexRealization cr = realize(Lg2, T, 2);
        const DegreeData& d1 = cr.at(1);
        Vec c(d1.dim());
        for (std::size_t i = 0; i < c.size(); ++i)
            c[i] = Rational(static_cast<long>(i) + 1);
        Vec amb = times(cr.at(2).basis, times(d1.diff, c));
        emit("g2_coboundary.def", cocycle_file("coboundary on g2", cochain_from_ambient(Lg2, T, 2, amb)));

        // nontrivial classes: abelian trivial has H^2 = 1, g2 adjoint carries a top component
        const Representation2 Ta = trivial_rep(ab);
        CohomologyResult h = cohomology(realize(ab, Ta, 2), 2);
        StandardCochain wa = cochain_from_ambient(ab, Ta, 2, column(h.representatives, 0));
        if (!top_part_zero(wa))
            throw std::runtime_error("abelian class has a top component");
        emit("abelian_cocycle.def", cocycle_file("nontrivial 2-cocycle on the abelian algebra", wa));

        const Representation2 A = adjoint(Lg2);
        ComplexRealization ca = realize(Lg2, A, 2);
        const DegreeData& d2 = ca.at(2);
        KernelBasis<Rational> z = kernel(d2.diff);
        bool found = false;
        for (std::size_t j = 0; j < z.free.size() && !found; ++j) {
            StandardCochain w = cochain_from_ambient(Lg2, A, 2, times(d2.basis, column(z.basis, j)));
            if (!top_part_zero(w)) {
                emit("g2_adjoint_cocycle.def", cocycle_file("2-cocycle on g2 adjoint with a top component", w));
                found = true;
            }
        }
        if (!found)
            std::cout << "no g2 adjoint cocycle with a top component\n";
    }
    return 0;
}
