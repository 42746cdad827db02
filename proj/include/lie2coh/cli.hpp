#pragma once

// Command-line frontend: check, cohomology, compare, extend. run() is the
// whole program; tools/lie2coh.cpp only forwards argv.

#include "io.hpp"
#include "semistrict.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace lie2coh::cli {

enum ExitCode { kOk = 0, kViolations = 1, kHypothesis = 2, kParse = 3 };

struct Hypothesis {
    std::string name;
    bool ok = true;
    std::string detail;
};

struct Table {
    std::string title;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

struct CliReport {
    std::string command;
    std::vector<Hypothesis> hypotheses;
    std::vector<Table> tables;
    Report violations;
    std::vector<std::string> notes;
    ojson extra = ojson::object();
    std::string error;  // set when the command stopped early
    int exit_code = kOk;
};

struct Options {
    std::string command;
    std::string file;
    std::string cocycle;
    std::string theory = "standard";
    std::string module;
    std::string format = "text";
    std::string out;
    std::string emit;
    int max_degree = 3;
    bool representatives = false;
};

namespace detail {

inline ojson violation_json(const Violation& v)
{
    ojson j = ojson::object();
    j["equation"] = v.equation;
    j["args"] = v.args;
    ojson r = ojson::array();
    for (auto& x : v.residual)
        r.push_back(to_string(x));
    j["residual"] = r;
    return j;
}

inline std::string render_machine(const CliReport& r)
{
    ojson j = ojson::object();
    j["command"] = r.command;
    ojson hs = ojson::array();
    for (auto& h : r.hypotheses)
        hs.push_back({{"name", h.name}, {"ok", h.ok}, {"detail", h.detail}});
    j["hypotheses"] = hs;
    ojson ts = ojson::array();
    for (auto& t : r.tables)
        ts.push_back({{"title", t.title}, {"columns", t.columns}, {"rows", t.rows}});
    j["tables"] = ts;
    ojson vs = ojson::array();
    for (auto& v : r.violations.violations())
        vs.push_back(violation_json(v));
    j["violations"] = vs;
    j["notes"] = r.notes;
    for (auto& [k, v] : r.extra.items())
        j[k] = v;
    if (!r.error.empty())
        j["error"] = r.error;
    j["exit_code"] = r.exit_code;
    return pretty(j);
}

inline std::string render_text(const CliReport& r)
{
    std::ostringstream os;
    os << "command: " << r.command << "\n";
    if (!r.hypotheses.empty()) {
        os << "hypotheses:\n";
        for (auto& h : r.hypotheses)
            os << "  " << (h.ok ? "[ok]   " : "[FAIL] ") << h.name << (h.detail.empty() ? "" : ": " + h.detail)
               << "\n";
    }
    for (auto& t : r.tables) {
        os << t.title << "\n";
        std::vector<std::size_t> w(t.columns.size());
        for (std::size_t c = 0; c < t.columns.size(); ++c) {
            w[c] = t.columns[c].size();
            for (auto& row : t.rows)
                w[c] = std::max(w[c], row[c].size());
        }
        auto line = [&](const std::vector<std::string>& cells) {
            os << " ";
            for (std::size_t c = 0; c < cells.size(); ++c)
                os << " " << cells[c] << std::string(w[c] - cells[c].size(), ' ');
            os << "\n";
        };
        line(t.columns);
        for (auto& row : t.rows)
            line(row);
    }
    for (auto& n : r.notes)
        os << "note: " << n << "\n";
    if (r.violations.ok()) {
        os << "violations: none\n";
    } else {
        os << "violations: " << r.violations.size() << "\n";
        for (auto& v : r.violations.violations())
            os << "  " << v.describe() << "\n";
    }
    if (r.extra.contains("representatives")) {
        os << "representatives:\n";
        for (auto& rep : r.extra["representatives"])
            os << "  " << rep.dump() << "\n";
    }
    if (r.extra.contains("splitting"))
        os << "splitting psi: " << r.extra["splitting"].dump() << "\n";
    if (!r.error.empty())
        os << "error: " << r.error << "\n";
    os << "exit: " << r.exit_code << "\n";
    return os.str();
}

inline std::string dims_cell(std::size_t d) { return std::to_string(d); }

inline Table dims_table(const std::string& title, int n_min, const std::vector<std::size_t>& dims)
{
    Table t{title, {"n", "dim"}, {}};
    for (std::size_t i = 0; i < dims.size(); ++i)
        t.rows.push_back({std::to_string(n_min + static_cast<int>(i)), dims_cell(dims[i])});
    return t;
}

inline ojson cochain_json(const StandardCochain& w)
{
    CochainDef c = cochain_def(w);
    ojson j = ojson::object();
    j["degree"] = c.degree;
    ojson cs = ojson::array();
    for (auto& comp : c.components) {
        ojson e = ojson::array();
        for (auto& en : comp.entries) {
            ojson row = ojson::array();
            for (auto i : en.idx)
                row.push_back(i);
            row.push_back(to_string(en.value));
            e.push_back(row);
        }
        cs.push_back({{"p", comp.p}, {"k", comp.k}, {"entries", e}});
    }
    j["components"] = cs;
    return j;
}

// Sparse coordinates as {"n": n, "coords": [[i, "v"], ...]}.
inline ojson coords_json(int n, const Vec& v)
{
    ojson c = ojson::array();
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0)
            c.push_back({i, to_string(v[i])});
    return {{"degree", n}, {"coords", c}};
}

inline Vec column_of(const SparseMatrix& m, std::size_t j)
{
    Vec v(m.rows());
    auto t = m.transpose();
    for (auto& [i, x] : t.row(j))
        v[i] = x;
    return v;
}

struct Loaded {
    DefinitionFile file;
    HemistrictLie2 L;
    std::optional<LeibnizAlgebra> g;
    RepresentationDef rep_def;
};

inline Loaded load(const Options& o, bool need_rep)
{
    Loaded ld;
    ld.file = read_definition(o.file);
    if (!ld.file.algebra)
        ld.file.fail("", "no leibniz_algebra or hemistrict section");
    if (is_leibniz(*ld.file.algebra))
        ld.g = build_leibniz(ld.file, *ld.file.algebra);
    if (!o.module.empty()) {
        ld.rep_def.kind = o.module;
    } else if (ld.file.representation) {
        ld.rep_def = *ld.file.representation;
    } else if (need_rep) {
        ld.rep_def.kind = "trivial";
    }
    return ld;
}

// Algebra and representation axioms as hypotheses; false when any fails.
inline bool audit_inputs(CliReport& r, const Loaded& ld, const Representation2* V)
{
    bool ok = true;
    if (ld.g) {
        Report lr = check_leibniz(*ld.g);
        r.hypotheses.push_back({"leibniz_axioms", lr.ok(), lr.ok() ? "" : lr.violations().front().describe()});
        ok &= lr.ok();
    }
    Report hr = check_hemistrict(ld.L);
    r.hypotheses.push_back({"hemistrict_axioms", hr.ok(), hr.ok() ? "" : hr.violations().front().describe()});
    ok &= hr.ok();
    if (V) {
        Report vr = check_representation(*V, ld.L);
        r.hypotheses.push_back(
            {"representation_axioms", vr.ok(), vr.ok() ? "" : vr.violations().front().describe()});
        ok &= vr.ok();
    }
    return ok;
}

inline void cmd_check(const Options& o, CliReport& r)
{
    DefinitionFile f = read_definition(o.file);
    if (!f.algebra)
        f.fail("", "no leibniz_algebra or hemistrict section");
    std::optional<HemistrictLie2> L;
    if (is_leibniz(*f.algebra)) {
        LeibnizAlgebra g = build_leibniz(f, *f.algebra);
        Report lr = check_leibniz(g);
        r.violations.merge(lr, "leibniz.");
        if (lr.ok()) {
            L = from_leibniz(g);
            r.violations.merge(check_hemistrict(*L), "hemistrict.");
        }
    } else {
        WeakLie2Data E = build_weak(f, *f.algebra);
        if (E.h3.is_zero()) {
            L = E.base;
            r.violations.merge(check_hemistrict(*L), "hemistrict.");
        } else {
            r.notes.push_back("nonzero Jacobiator: checked as a weak Lie 2-algebra");
            r.violations.merge(check_weak_lie2(E), "weak.");
        }
    }
    if (!L) {
        if (f.representation || f.cochain || f.morphism)
            r.notes.push_back("representation, cochain and morphism sections need a valid hemistrict algebra; skipped");
        return;
    }
    std::optional<Representation2> V;
    if (f.representation) {
        V = build_representation(f, *f.representation, *L);
        r.violations.merge(check_representation(*V, *L), "representation.");
    }
    if (f.cochain) {
        if (!V)
            V = trivial_rep(*L);
        StandardCochain w = build_cochain(f, *f.cochain, *L, *V);
        r.violations.merge(check_weak_symmetry(*L, *V, w), "cochain.");
        if (w.n >= -1 && w.n <= 2) {
            LowDegreeVerdict v = classify_low(*L, *V, w);
            r.notes.push_back("cochain of degree " + std::to_string(w.n) + " is " +
                              (v.is_cocycle ? "a cocycle" : "not a cocycle"));
        }
    }
    if (f.morphism) {
        HemistrictLie2 T = build_algebra(f, f.morphism->target);
        Morphism2 m = build_morphism(f, *f.morphism, *L, T);
        r.violations.merge(check_morphism(m, *L, T), "morphism.");
    }
}

inline void cmd_cohomology(const Options& o, CliReport& r)
{
    Loaded ld = load(o, true);
    const int N = o.max_degree;
    const StandardOptions opt = options_from_env();
    if (o.theory == "lp") {
        if (!ld.g)
            ld.file.fail("", "the lp theory needs a leibniz_algebra section");
        Report lr = check_leibniz(*ld.g);
        r.hypotheses.push_back({"leibniz_axioms", lr.ok(), lr.ok() ? "" : lr.violations().front().describe()});
        LeibnizModule m = build_module(ld.file, ld.rep_def, *ld.g);
        Report mr = check_module(*ld.g, m);
        r.hypotheses.push_back({"module_axioms", mr.ok(), mr.ok() ? "" : mr.violations().front().describe()});
        if (!lr.ok() || !mr.ok()) {
            r.exit_code = kHypothesis;
            return;
        }
        if (N < 0)
            throw DegreeOutOfRange("lp degrees start at 0");
        r.tables.push_back(dims_table("lp cohomology", 0, lp_cohomology(*ld.g, m, static_cast<std::size_t>(N))));
        if (o.representatives)
            r.notes.push_back("representatives are printed for the standard and semistrict theories only");
        return;
    }
    ld.L = ld.g ? from_leibniz(*ld.g) : build_algebra(ld.file);
    Representation2 V = build_representation(ld.file, ld.rep_def, ld.L);
    if (!audit_inputs(r, ld, &V)) {
        r.exit_code = kHypothesis;
        return;
    }
    std::optional<ComplexRealization> cr;
    if (o.theory == "standard") {
        cr = realize(ld.L, V, N, opt);
    } else if (o.theory == "semistrict") {
        cr = semistrict_complex(skew_symmetrize(ld.L), induced_rep(ld.L, V), N, opt);
    } else if (o.theory == "ce") {
        check_main_hypotheses(ld.L, V);
        r.hypotheses.push_back({"injectivity", true, ""});
        r.hypotheses.push_back({"l_alpha_zero", true, ""});
        LieSplitting s = lie_quotient(ld.L);
        r.tables.push_back(dims_table("ce cohomology", -1, ce_cohomology(s.lie, descended_rep(s, V), N)));
        if (o.representatives)
            r.notes.push_back("representatives are printed for the standard and semistrict theories only");
        return;
    } else {
        throw CLI::ValidationError("--theory", "unknown theory '" + o.theory + "'");
    }
    r.tables.push_back(dims_table(o.theory + " cohomology", -1, cohomology_dims(*cr)));
    if (!o.representatives)
        return;
    ojson reps = ojson::array();
    for (int n = -1; n <= N; ++n) {
        CohomologyResult h = cohomology(*cr, n);
        for (std::size_t c = 0; c < h.dim; ++c) {
            Vec v = column_of(h.representatives, c);
            if (o.theory == "standard")
                reps.push_back(cochain_json(cochain_from_ambient(ld.L, V, n, v)));
            else
                reps.push_back(coords_json(n, v));
        }
    }
    r.extra["representatives"] = reps;
}

inline void cmd_compare(const Options& o, CliReport& r)
{
    Loaded ld = load(o, true);
    ld.L = ld.g ? from_leibniz(*ld.g) : build_algebra(ld.file);
    Representation2 V = build_representation(ld.file, ld.rep_def, ld.L);
    if (!audit_inputs(r, ld, &V)) {
        r.exit_code = kHypothesis;
        return;
    }
    MainTheoremResult m = verify_main_theorem(ld.L, V, o.max_degree, options_from_env());
    r.hypotheses.push_back({"injectivity", true, ""});
    r.hypotheses.push_back({"l_alpha_zero", true, ""});
    r.hypotheses.push_back({"h2_vanishes_on_image", m.part1_checked,
                            m.part1_checked ? "induced maps of f and g checked"
                                            : "h2(d a, d b) != 0; induced maps not checked"});
    Table t{"cohomology dimensions", {"n", "standard", "semistrict", "ce", "verdict"}, {}};
    for (std::size_t i = 0; i < m.standard_dims.size(); ++i) {
        const bool same = m.standard_dims[i] == m.semistrict_dims[i] && m.standard_dims[i] == m.ce_dims[i];
        t.rows.push_back({std::to_string(static_cast<int>(i) - 1), dims_cell(m.standard_dims[i]),
                          dims_cell(m.semistrict_dims[i]), dims_cell(m.ce_dims[i]), same ? "PASS" : "FAIL"});
    }
    r.tables.push_back(t);
    r.violations.merge(m.violations);
}

inline void cmd_extend(const Options& o, CliReport& r)
{
    Loaded ld = load(o, true);
    ld.L = ld.g ? from_leibniz(*ld.g) : build_algebra(ld.file);
    Representation2 V = build_representation(ld.file, ld.rep_def, ld.L);
    if (!audit_inputs(r, ld, &V)) {
        r.exit_code = kHypothesis;
        return;
    }
    DefinitionFile cf = read_definition(o.cocycle);
    if (!cf.cochain)
        cf.fail("", "the cocycle file needs a cochain section");
    if (cf.cochain->degree != 2)
        cf.fail("/cochain/degree", "extensions are built from degree 2 cochains");
    StandardCochain w = build_cochain(cf, *cf.cochain, ld.L, V);
    Report ws = check_weak_symmetry(ld.L, V, w);
    if (!ws.ok()) {
        r.violations.merge(ws, "cochain.");
        r.error = "cochain is not weakly symmetric";
        return;
    }
    LowDegreeVerdict verdict = classify_low(ld.L, V, w);
    if (!verdict.is_cocycle) {
        r.violations.merge(verdict.equations);
        r.error = "NotACocycle: " + verdict.equations.violations().front().equation;
        return;
    }
    WeakLie2Data E = extension_from_cocycle(ld.L, V, w);
    const bool hemi = E.h3.is_zero();
    r.notes.push_back(hemi ? "extension is hemistrict" : "extension is a weak Lie 2-algebra with nonzero Jacobiator");
    if (auto psi = find_splitting(ld.L, V, w)) {
        Report sr = check_weak_morphism(splitting_candidate(ld.L, V, *psi), ld.L, E);
        r.violations.merge(sr, "splitting.");
        r.notes.push_back("splits: f = (id + psi_1, (0, -psi_2)) with D psi = -omega");
        r.extra["splitting"] = cochain_json(*psi);
    } else {
        r.notes.push_back("does not split: omega is not a coboundary");
    }
    DefinitionFile outf;
    outf.name = (ld.file.name.empty() ? std::string("extension") : ld.file.name + " extension");
    outf.algebra = algebra_def(E);
    const std::string text = write_definition(outf);
    if (!o.emit.empty()) {
        std::ofstream os(o.emit, std::ios::binary);
        if (!os)
            throw ParseError("cannot write '" + o.emit + "'");
        os << text;
        r.notes.push_back("extension written to " + o.emit);
    } else {
        r.extra["extension"] = ojson::parse(text);
    }
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Cohomology of hemistrict Lie 2-algebras"};
    app.require_subcommand(1);
    app.add_option("--format", o.format, "text or machine")->check(CLI::IsMember({"text", "machine"}));
    app.add_option("--out", o.out, "write the report to this path");
    auto* check = app.add_subcommand("check", "check axioms of every section");
    check->add_option("file", o.file)->required();
    auto* coh = app.add_subcommand("cohomology", "cohomology dimensions");
    coh->add_option("file", o.file)->required();
    coh->add_option("--max-degree", o.max_degree)->check(CLI::Range(-1, 64));
    coh->add_option("--theory", o.theory)->check(CLI::IsMember({"standard", "semistrict", "ce", "lp"}));
    coh->add_flag("--representatives", o.representatives);
    auto* cmp = app.add_subcommand("compare", "standard vs semistrict vs CE");
    cmp->add_option("file", o.file)->required();
    cmp->add_option("--max-degree", o.max_degree)->check(CLI::Range(-1, 64));
    auto* ext = app.add_subcommand("extend", "abelian extension from a 2-cocycle");
    ext->add_option("file", o.file)->required();
    ext->add_option("--cocycle", o.cocycle)->required();
    ext->add_option("--emit", o.emit, "write the extension definition here");
    for (auto* sc : {coh, cmp, ext})
        sc->add_option("--module", o.module, "override the representation")
            ->check(CLI::IsMember({"trivial", "adjoint"}));
    for (auto* sc : {check, coh, cmp, ext}) {
        sc->add_option("--format", o.format)->check(CLI::IsMember({"text", "machine"}));
        sc->add_option("--out", o.out);
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kParse;
    }

    CliReport r;
    r.command = "lie2coh";
    for (int i = 1; i < argc; ++i)
        r.command += std::string(" ") + argv[i];
    try {
        if (check->parsed()) {
            o.command = "check";
            detail::cmd_check(o, r);
        } else if (coh->parsed()) {
            o.command = "cohomology";
            detail::cmd_cohomology(o, r);
        } else if (cmp->parsed()) {
            o.command = "compare";
            detail::cmd_compare(o, r);
        } else {
            o.command = "extend";
            detail::cmd_extend(o, r);
        }
        if (r.exit_code == kOk && !r.violations.ok())
            r.exit_code = kViolations;
    } catch (const ParseError& e) {
        r.error = e.what();
        r.exit_code = kParse;
    } catch (const HypothesisViolated& e) {
        r.hypotheses.push_back({e.which(), false, e.where()});
        r.error = e.what();
        r.exit_code = kHypothesis;
    } catch (const CLI::ValidationError& e) {
        r.error = e.what();
        r.exit_code = kParse;
    } catch (const Error& e) {
        // inputs outside what the constructions accept
        r.error = e.what();
        r.exit_code = kHypothesis;
    }
    const std::string text = o.format == "machine" ? detail::render_machine(r) : detail::render_text(r);
    if (o.out.empty()) {
        out << text;
    } else {
        std::ofstream os(o.out, std::ios::binary);
        if (!os) {
            err << "cannot write '" << o.out << "'\n";
            return kParse;
        }
        os << text;
    }
    return r.exit_code;
}

}  // namespace lie2coh::cli
