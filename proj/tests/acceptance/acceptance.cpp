// Acceptance runner: one PASS/FAIL line per criterion, exit 1 if any fails.

#include "../common/corpus.hpp"

#include <chrono>
#include <functional>
#include <iostream>

using namespace lie2coh;
using namespace corpus;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what)
    {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// 1. L_g passes the hemistrict axioms for random Leibniz algebras
Outcome axiom_soundness()
{
    Outcome out;
    Rng rng(20261);
    std::size_t tries = 0;
    const auto t0 = Clock::now();
    for (int i = 0; i < 200; ++i) {
        LeibnizAlgebra g = random_leibniz(rng, 1 + static_cast<std::size_t>(i % 3), &tries);
        Report r = check_hemistrict(from_leibniz(g));
        out.require(r.ok(), "sample " + std::to_string(i) + ": " + (r.ok() ? "" : r.violations().front().describe()));
    }
    const double s = seconds_since(t0);
    out.require(s < 10, "took " + std::to_string(s) + " s");
    if (out.ok)
        out.detail = "200 algebras from " + std::to_string(tries) + " draws, " + std::to_string(s) + " s";
    return out;
}

// 2. D preserves weak symmetry and squares to zero on it
Outcome differential_well_defined()
{
    Outcome out;
    const auto t0 = Clock::now();
    int checked = 0;
    for (std::string f : {"g2.def", "cyclic3.def", "strict_lie2.def"}) {
        HemistrictLie2 L = load_algebra(f);
        for (auto V : {trivial_rep(L), adjoint(L)}) {
            ComplexRealization cr = realize(L, V, 5);
            for (int n = -1; n <= 4; ++n) {
                const DegreeData& dd = cr.at(n);
                SparseMatrix img = dd.ambient_diff * dd.basis;
                SparseMatrix W = weak_symmetry_constraints(L, V, n + 1);
                const std::string at = f + " n=" + std::to_string(n);
                out.require(W.rows() == 0 || (W * img).is_zero(), at + ": D leaves the weak-symmetry subspace");
                out.require((cr.at(n + 1).ambient_diff * img).is_zero(), at + ": D^2 != 0");
                ++checked;
            }
        }
    }
    const double s = seconds_since(t0);
    out.require(s < 60, "took " + std::to_string(s) + " s");
    if (out.ok)
        out.detail = std::to_string(checked) + " (example, degree) pairs, " + std::to_string(s) + " s";
    return out;
}

// 3. V is a representation iff L + V is hemistrict
Outcome semidirect_equivalence()
{
    Outcome out;
    Rng rng(20263);
    const auto t0 = Clock::now();
    int valid = 0, broken = 0;
    while (valid < 100 || broken < 100) {
        auto [L, V] = random_rep(rng);
        if (valid < 100) {
            out.require(check_representation(V, L).ok(), "generator produced an invalid representation");
            out.require(check_hemistrict(semidirect_unchecked(L, V)).ok(), "valid V, semidirect fails");
            ++valid;
        }
        if (broken < 100) {
            Representation2 W = perturb_one(rng, V);
            if (check_representation(W, L).ok())
                continue;  // the shift happened to keep every axiom
            out.require(!check_hemistrict(semidirect_unchecked(L, W)).ok(), "invalid V, semidirect passes");
            ++broken;
        }
    }
    const double s = seconds_since(t0);
    out.require(s < 30, "took " + std::to_string(s) + " s");
    if (out.ok)
        out.detail = "100 valid, 100 perturbed, " + std::to_string(s) + " s";
    return out;
}

// 4. phi: V -> V_s and psi: V_s -> V are inverse morphisms
Outcome minimal_model_inverse()
{
    Outcome out;
    int n = 0;
    for (auto& ex : bundled_examples()) {
        MinimalModel mm = minimal_model(ex.L, ex.V);
        out.require(check_representation(mm.vs, ex.L).ok(), ex.name + ": V_s is not a representation");
        out.require(check_rep_morphism(mm.phi, ex.L, ex.V, mm.vs).ok(), ex.name + ": phi");
        out.require(check_rep_morphism(mm.psi, ex.L, mm.vs, ex.V).ok(), ex.name + ": psi");
        out.require(compose_rep_morphisms(mm.psi, mm.phi) == identity_rep_morphism(ex.L, ex.V),
                    ex.name + ": psi phi != id");
        out.require(compose_rep_morphisms(mm.phi, mm.psi) == identity_rep_morphism(ex.L, mm.vs),
                    ex.name + ": phi psi != id");
        ++n;
    }
    if (out.ok)
        out.detail = std::to_string(n) + " representations";
    return out;
}

// 5. pushforward and pullback are cochain maps; pullback reverses composition
Outcome functoriality()
{
    Outcome out;
    const int N = 3;
    int maps = 0;
    for (auto& ex : bundled_examples()) {
        MinimalModel mm = minimal_model(ex.L, ex.V);
        ComplexRealization cv = realize(ex.L, ex.V, N + 1), cs = realize(ex.L, mm.vs, N + 1);
        for (auto [phi, src, dst, crs, crd] :
             {std::tuple{&mm.phi, &ex.V, &mm.vs, &cv, &cs}, std::tuple{&mm.psi, &mm.vs, &ex.V, &cs, &cv}}) {
            std::vector<SparseMatrix> P;
            for (int n = -1; n <= N + 1; ++n)
                P.push_back(pushforward(*phi, ex.L, *src, *dst, n));
            auto W = [&, d = dst](int n) { return weak_symmetry_constraints(ex.L, *d, n); };
            out.require(check_cochain_map(P, *crs, *crd, W).ok(), ex.name + ": pushforward");
            ++maps;
        }
    }
    for (auto& m : bundled_morphisms())
        for (auto V : {trivial_rep(m.dst), adjoint(m.dst)}) {
            Representation2 Vp = pullback_rep(V, m.f, m.src, m.dst);
            ComplexRealization ct = realize(m.dst, V, N + 1), cp = realize(m.src, Vp, N + 1);
            std::vector<SparseMatrix> P;
            for (int n = -1; n <= N + 1; ++n)
                P.push_back(pullback_cochain(m.f, m.src, m.dst, V, n));
            auto W = [&](int n) { return weak_symmetry_constraints(m.src, Vp, n); };
            out.require(check_cochain_map(P, ct, cp, W).ok(), m.name + ": pullback");
            ++maps;
        }
    // (g f)^* = f^* g^* for f: cyclic3 -> g2, g: g2 -> g2
    auto ms = bundled_morphisms();
    const auto& f = ms[0];
    const auto& g = ms[1];
    Morphism2 gf = compose_morphisms(g.f, f.f);
    out.require(check_morphism(gf, f.src, g.dst).ok(), "composite is not a morphism");
    for (auto V : {trivial_rep(g.dst), adjoint(g.dst)}) {
        Representation2 gV = pullback_rep(V, g.f, g.src, g.dst);
        for (int n = -1; n <= N; ++n) {
            SparseMatrix lhs = pullback_cochain(gf, f.src, g.dst, V, n);
            SparseMatrix rhs = pullback_cochain(f.f, f.src, f.dst, gV, n) * pullback_cochain(g.f, g.src, g.dst, V, n);
            out.require(lhs == rhs, "(g f)^* != f^* g^* at n=" + std::to_string(n));
        }
        out.require(pullback_rep(gV, f.f, f.src, f.dst) == pullback_rep(V, gf, f.src, g.dst),
                    "pulled-back representations differ");
    }
    if (out.ok)
        out.detail = std::to_string(maps) + " cochain maps, composition law in degrees <= 3";
    return out;
}

// 6. low-degree equations agree with D; derivations give 1-cocycles
Outcome low_degree_semantics()
{
    Outcome out;
    Rng rng(20266);
    int n_checked = 0;
    for (std::string f : {"g2_adjoint.def", "cyclic3.def", "lalpha.def"}) {
        DefinitionFile df = load(f);
        HemistrictLie2 L = build_algebra(df);
        Representation2 V = build_representation(df, *df.representation, L);
        ComplexRealization cr = realize(L, V, 2);
        for (int n = -1; n <= 2; ++n)
            for (int i = 0; i < 50; ++i) {
                StandardCochain w = random_cochain(rng, L, V, n, cr);
                const bool by_D = cr.at(n).ambient_diff.rows() == 0 ||
                                  is_zero(mul(cr.at(n).ambient_diff, cochain_to_ambient(L, V, w)));
                out.require(classify_low(L, V, w).is_cocycle == by_D, f + " n=" + std::to_string(n));
                ++n_checked;
            }
    }
    LeibnizAlgebra g = g2();
    HemistrictLie2 L = from_leibniz(g);
    StandardCochain outer = derivation_to_one_cocycle(g, Matrix{{1, 0}, {0, 2}});
    out.require(classify_low(L, adjoint(L), outer).is_cocycle, "phi(e1)=e1, phi(e2)=2e2 is not a cocycle");
    out.require(!is_coboundary(L, adjoint(L), outer), "phi(e1)=e1, phi(e2)=2e2 is a coboundary");
    StandardCochain inner = derivation_to_one_cocycle(g, Matrix{{0, 0}, {1, 0}});  // [e1, -]
    out.require(is_coboundary(L, adjoint(L), inner), "inner derivation is not a coboundary");
    if (out.ok)
        out.detail = std::to_string(n_checked) + " random cochains, derivation checks";
    return out;
}

// Cocycles in degree 2 whose (-1,0) component vanishes, as kernel columns.
std::vector<StandardCochain> cocycles_without_top(const HemistrictLie2& L, const Representation2& V)
{
    ComplexRealization cr = realize(L, V, 2);
    const DegreeData& dd = cr.at(2);
    std::vector<std::size_t> top;
    StandardBasis(L, V, 2).for_each_in(-1, 0, [&](const Tuple&, const Tuple&, std::size_t, std::size_t idx) {
        top.push_back(idx);
    });
    SparseMatrix sys(0, dd.dim());
    for (std::size_t i = 0; i < dd.diff.rows(); ++i)
        sys.push_row(dd.diff.row(i));
    SparseMatrix sel = dd.basis.select_rows(top);
    for (std::size_t i = 0; i < sel.rows(); ++i)
        sys.push_row(sel.row(i));
    KernelBasis<Rational> z = kernel(sys);
    std::vector<StandardCochain> out;
    for (std::size_t j = 0; j < z.free.size(); ++j)
        out.push_back(cochain_from_ambient(L, V, 2, mul(dd.basis, column(z.basis, j))));
    return out;
}

// 7. extensions: zero cocycle, coboundaries, hemistrict case
Outcome extension_lemma()
{
    Outcome out;
    Rng rng(20267);
    int split = 0, hemi = 0;
    for (auto& ex : bundled_examples()) {
        WeakLie2Data E0 = extension_from_cocycle(ex.L, ex.V, zero_cochain(ex.L, ex.V, 2));
        HemistrictLie2 S = semidirect_unchecked(ex.L, minimal_model(ex.L, ex.V).vs);
        out.require(E0.h3.is_zero() && E0.base == S, ex.name + ": zero cocycle differs from the semidirect product");
        DefinitionFile a, b;
        a.algebra = algebra_def(E0);
        b.algebra = algebra_def(S);
        out.require(write_definition(a) == write_definition(b), ex.name + ": serialized forms differ");

        ComplexRealization cr = realize(ex.L, ex.V, 2);
        for (int i = 0; i < 3; ++i) {
            StandardCochain c = random_cochain(rng, ex.L, ex.V, 1, cr);
            Vec om = mul(cr.at(1).ambient_diff, cochain_to_ambient(ex.L, ex.V, c));
            StandardCochain w = cochain_from_ambient(ex.L, ex.V, 2, om);
            WeakLie2Data E = extension_from_cocycle(ex.L, ex.V, w);
            auto psi = find_splitting(ex.L, ex.V, w);
            out.require(psi.has_value(), ex.name + ": coboundary without splitting");
            if (psi)
                out.require(check_weak_morphism(splitting_candidate(ex.L, ex.V, *psi), ex.L, E).ok(),
                            ex.name + ": splitting is not a morphism");
            ++split;
        }
        for (auto& w : cocycles_without_top(ex.L, ex.V)) {
            WeakLie2Data E = extension_from_cocycle(ex.L, ex.V, w);
            out.require(E.h3.is_zero() && check_hemistrict(E.base).ok(), ex.name + ": not hemistrict");
            ++hemi;
        }
    }
    if (out.ok)
        out.detail = std::to_string(split) + " split coboundaries, " + std::to_string(hemi) + " hemistrict cocycles";
    return out;
}

// 8. contraction side conditions before and after perturbation; D_B = CE
Outcome contraction_perturbation()
{
    Outcome out;
    const int N = 4;
    for (std::string f : {"g2.def", "cyclic3.def"}) {
        HemistrictLie2 L = load_algebra(f);
        for (auto V : {trivial_rep(L), adjoint(L)}) {
            AdaptedPair ap = adapt(L, V);
            Contraction base = base_contraction(ap, N);
            out.require(check_contraction(base).ok(), f + ": base contraction");
            SemistrictLie2 S = skew_symmetrize(ap.L);
            InducedSemistrictRep R = induced_rep(ap.L, ap.V);
            std::vector<SparseMatrix> rho;
            for (int n = -1; n <= N; ++n)
                rho.push_back(semistrict_parts(S, R, n).rho);
            Contraction pt = perturb(base, rho);
            out.require(check_contraction(pt).ok(), f + ": perturbed contraction");
            LieSplitting s = lie_quotient(ap.L);
            LieRep2 lr = descended_rep(s, ap.V);
            for (int n = -1; n <= N; ++n)
                out.require(pt.dB(n) == ce_differential(s.lie, lr, n), f + ": D_B != d_CE at n=" + std::to_string(n));
        }
    }
    if (out.ok)
        out.detail = "g2 and cyclic3, trivial and adjoint, degrees <= 4";
    return out;
}

// 9. standard, semistrict and CE cohomology agree
Outcome main_theorem()
{
    Outcome out;
    const auto t0 = Clock::now();
    HemistrictLie2 L = from_leibniz(g2());
    MainTheoremResult r = verify_main_theorem(L, trivial_rep(L), 3);
    const std::vector<std::size_t> expect{0, 1, 1, 0, 0};
    out.require(r.standard_dims == expect && r.semistrict_dims == expect && r.ce_dims == expect,
                "g2 trivial dimensions");
    out.require(r.part1_checked && r.ok(), "g2 trivial: induced maps");
    std::string dims;
    for (auto g : {g2(), cyclic3(), c4()}) {
        HemistrictLie2 Lg = from_leibniz(g);
        MainTheoremResult m = verify_main_theorem(Lg, adjoint(Lg), 3);
        out.require(m.ok(), "adjoint of a " + std::to_string(g.dim) + "-dim algebra");
        for (auto d : m.standard_dims)
            dims += std::to_string(d);
        dims += " ";
    }
    const double s = seconds_since(t0);
    out.require(s < 120, "took " + std::to_string(s) + " s");
    if (out.ok)
        out.detail = "adjoint tables " + dims + std::to_string(s) + " s";
    return out;
}

// 10. abelian algebra against a counted closed form
Outcome abelian_oracle()
{
    Outcome out;
    DefinitionFile df = load("abelian.def");
    HemistrictLie2 L = build_algebra(df);
    Representation2 V = build_representation(df, *df.representation, L);
    const int N = 6;
    std::vector<std::size_t> got = cohomology_dims(realize(L, V, N));
    for (int n = -1; n <= N; ++n) {
        const std::size_t want = abelian_count(1, 1, 0, 1, n);
        out.require(got[static_cast<std::size_t>(n + 1)] == want, "n=" + std::to_string(n));
        out.require(n < 0 || want == 1, "closed form is not 1 at n=" + std::to_string(n));
    }
    if (out.ok)
        out.detail = "H^n = 1 for n = 0.." + std::to_string(N);
    return out;
}

}  // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"axiom soundness", axiom_soundness},
        {"differential well-defined", differential_well_defined},
        {"semidirect equivalence", semidirect_equivalence},
        {"minimal model", minimal_model_inverse},
        {"functoriality", functoriality},
        {"low-degree semantics", low_degree_semantics},
        {"extension lemma", extension_lemma},
        {"contraction and perturbation", contraction_perturbation},
        {"main theorem", main_theorem},
        {"abelian oracle", abelian_oracle},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        failed += !o.ok;
        std::cout << (o.ok ? "PASS" : "FAIL") << "  " << i + 1 << ". " << criteria[i].first << "  (" << o.detail
                  << ")" << std::endl;
    }
    std::cout << criteria.size() - static_cast<std::size_t>(failed) << "/" << criteria.size() << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
