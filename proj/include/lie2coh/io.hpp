#pragma once

// Definition files: versioned JSON with rationals as "p/q" strings and sparse
// tensors as [i_1, ..., i_k, out, value] rows.

#include "extension.hpp"

#include <json.hpp>

#include <fstream>
#include <iterator>
#include <optional>
#include <set>
#include <sstream>

namespace lie2coh {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

inline constexpr int kFormatVersion = 1;

struct Entry {
    std::vector<std::size_t> idx;  // argument indices then output index
    Rational value;
    std::string where;  // JSON pointer, for error messages only

    friend bool operator==(const Entry& a, const Entry& b) { return a.idx == b.idx && a.value == b.value; }
};
using Tensor = std::vector<Entry>;

struct AlgebraDef {
    std::string kind;  // "leibniz" or "hemistrict"
    std::size_t dim_m1 = 0, dim_0 = 0;
    std::vector<std::string> basis_m1, basis_0;
    Tensor bracket;                   // leibniz
    Tensor d, c00, c0m, cm0, h2, h3;  // hemistrict; h3 only for weak extensions
    std::string where;

    friend bool operator==(const AlgebraDef& a, const AlgebraDef& b)
    {
        return std::tie(a.kind, a.dim_m1, a.dim_0, a.basis_m1, a.basis_0, a.bracket, a.d, a.c00, a.c0m, a.cm0,
                        a.h2, a.h3) == std::tie(b.kind, b.dim_m1, b.dim_0, b.basis_m1, b.basis_0, b.bracket, b.d,
                                                b.c00, b.c0m, b.cm0, b.h2, b.h3);
    }
};

struct RepresentationDef {
    std::string kind;  // trivial | adjoint | module | explicit
    std::size_t dim_m1 = 0, dim_0 = 1;
    Tensor d, l00, l0m, lm0, r00, rm0, r0m, hv;  // explicit
    Tensor l, r;                                 // module over a Leibniz algebra, dim_0 = module dim
    std::string where;

    friend bool operator==(const RepresentationDef& a, const RepresentationDef& b)
    {
        return std::tie(a.kind, a.dim_m1, a.dim_0, a.d, a.l00, a.l0m, a.lm0, a.r00, a.rm0, a.r0m, a.hv, a.l, a.r) ==
               std::tie(b.kind, b.dim_m1, b.dim_0, b.d, b.l00, b.l0m, b.lm0, b.r00, b.rm0, b.r0m, b.hv, b.l, b.r);
    }
};

struct ComponentDef {
    int p = 0;
    std::size_t k = 0;
    Tensor entries;
    friend bool operator==(const ComponentDef&, const ComponentDef&) = default;
};

struct CochainDef {
    int degree = 0;
    std::vector<ComponentDef> components;
    std::string where;
    friend bool operator==(const CochainDef& a, const CochainDef& b)
    {
        return a.degree == b.degree && a.components == b.components;
    }
};

struct MorphismDef {
    AlgebraDef target;
    Tensor f_m1, f_0, f2;
    std::string where;
    friend bool operator==(const MorphismDef& a, const MorphismDef& b)
    {
        return std::tie(a.target, a.f_m1, a.f_0, a.f2) == std::tie(b.target, b.f_m1, b.f_0, b.f2);
    }
};

struct DefinitionFile {
    int format_version = kFormatVersion;
    std::string name;
    std::optional<AlgebraDef> algebra;
    std::optional<RepresentationDef> representation;
    std::optional<CochainDef> cochain;
    std::optional<MorphismDef> morphism;

    // JSON pointer -> (line, column) of the parsed text
    std::map<std::string, std::pair<std::size_t, std::size_t>> locations;

    friend bool operator==(const DefinitionFile& a, const DefinitionFile& b)
    {
        return std::tie(a.format_version, a.name, a.algebra, a.representation, a.cochain, a.morphism) ==
               std::tie(b.format_version, b.name, b.algebra, b.representation, b.cochain, b.morphism);
    }

    [[noreturn]] void fail(const std::string& ptr, const std::string& msg) const
    {
        // nearest recorded ancestor
        std::string p = ptr;
        while (true) {
            auto it = locations.find(p);
            if (it != locations.end())
                throw ParseError(msg + " (" + (ptr.empty() ? "/" : ptr) + ")", it->second.first, it->second.second);
            if (p.empty())
                break;
            p = p.substr(0, p.rfind('/'));
        }
        throw ParseError(msg + " (" + (ptr.empty() ? "/" : ptr) + ")");
    }
};

namespace detail {

inline std::string escape_key(std::string k)
{
    std::string out;
    for (char c : k) {
        if (c == '~')
            out += "~0";
        else if (c == '/')
            out += "~1";
        else
            out += c;
    }
    return out;
}

inline std::pair<std::size_t, std::size_t> line_col(const std::string& text, std::size_t offset)
{
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

// Forward iterator over a buffer that publishes how far the parser has read.
struct CountingIter {
    using iterator_category = std::forward_iterator_tag;
    using value_type = char;
    using difference_type = std::ptrdiff_t;
    using pointer = const char*;
    using reference = const char&;

    const char* p = nullptr;
    const char* base = nullptr;
    std::size_t* read = nullptr;

    reference operator*() const { return *p; }
    CountingIter& operator++()
    {
        ++p;
        *read = static_cast<std::size_t>(p - base);
        return *this;
    }
    CountingIter operator++(int)
    {
        CountingIter t = *this;
        ++*this;
        return t;
    }
    friend bool operator==(const CountingIter& a, const CountingIter& b) { return a.p == b.p; }
};

// Builds the DOM and records the read offset at which each value starts.
class LocatingSax {
public:
    LocatingSax(json& root, const std::string& text, const std::size_t* read,
                std::map<std::string, std::size_t>& where)
        : dom_(root, true), text_(&text), read_(read), where_(where)
    {
    }

    bool null() { return scalar([&] { return dom_.null(); }); }
    bool boolean(bool v) { return scalar([&] { return dom_.boolean(v); }); }
    bool number_integer(json::number_integer_t v) { return scalar([&] { return dom_.number_integer(v); }); }
    bool number_unsigned(json::number_unsigned_t v) { return scalar([&] { return dom_.number_unsigned(v); }); }
    bool number_float(json::number_float_t v, const std::string& s)
    {
        return scalar([&] { return dom_.number_float(v, s); });
    }
    bool string(std::string& v) { return scalar([&] { return dom_.string(v); }); }
    bool binary(json::binary_t& v) { return scalar([&] { return dom_.binary(v); }); }
    bool start_object(std::size_t n)
    {
        mark();
        frames_.push_back({false, 0, {}});
        return dom_.start_object(n);
    }
    bool key(std::string& k)
    {
        frames_.back().key = k;
        return dom_.key(k);
    }
    bool end_object()
    {
        frames_.pop_back();
        advance();
        return dom_.end_object();
    }
    bool start_array(std::size_t n)
    {
        mark();
        frames_.push_back({true, 0, {}});
        return dom_.start_array(n);
    }
    bool end_array()
    {
        frames_.pop_back();
        advance();
        return dom_.end_array();
    }
    [[noreturn]] bool parse_error(std::size_t pos, const std::string&, const nlohmann::detail::exception& ex)
    {
        std::string msg = ex.what();
        if (auto c = msg.find(": "); c != std::string::npos)
            msg = msg.substr(c + 2);
        auto [line, col] = line_col(*text_, pos > 0 ? pos - 1 : 0);
        throw ParseError(msg, line, col);
    }

private:
    struct Frame {
        bool array;
        std::size_t index;
        std::string key;
    };

    std::string pointer() const
    {
        std::string s;
        for (auto& f : frames_)
            s += "/" + (f.array ? std::to_string(f.index) : escape_key(f.key));
        return s;
    }
    void mark() { where_.emplace(pointer(), *read_); }
    void advance()
    {
        if (!frames_.empty() && frames_.back().array)
            ++frames_.back().index;
    }
    template <class F>
    bool scalar(F&& f)
    {
        mark();
        bool r = f();
        advance();
        return r;
    }

    nlohmann::detail::json_sax_dom_parser<json> dom_;
    const std::string* text_;
    const std::size_t* read_;
    std::map<std::string, std::size_t>& where_;
    std::vector<Frame> frames_;
};

struct Reader {
    const DefinitionFile& file;

    const json& need(const json& obj, const std::string& ptr, const std::string& key) const
    {
        if (!obj.is_object())
            file.fail(ptr, "expected an object");
        auto it = obj.find(key);
        if (it == obj.end())
            file.fail(ptr, "missing field '" + key + "'");
        return *it;
    }

    std::size_t count(const json& v, const std::string& ptr) const
    {
        if (!v.is_number_integer() || v.get<long long>() < 0)
            file.fail(ptr, "expected a nonnegative integer");
        return v.get<std::size_t>();
    }

    Rational scalar(const json& v, const std::string& ptr) const
    {
        if (v.is_number_integer())
            return Rational(static_cast<long>(v.get<long long>()));
        if (!v.is_string())
            file.fail(ptr, "scalars are \"p/q\" strings or integers");
        try {
            return parse_rational(v.get<std::string>());
        } catch (const RationalParseError& e) {
            file.fail(ptr, e.what());
        }
    }

    Tensor tensor(const json& obj, const std::string& ptr, const std::string& key, std::size_t arity) const
    {
        Tensor t;
        auto it = obj.find(key);
        if (it == obj.end())
            return t;
        const std::string base = ptr + "/" + key;
        if (!it->is_array())
            file.fail(base, "expected a list of entries");
        for (std::size_t i = 0; i < it->size(); ++i) {
            const json& row = (*it)[i];
            const std::string rp = base + "/" + std::to_string(i);
            if (!row.is_array() || row.size() != arity + 2)
                file.fail(rp, "entry needs " + std::to_string(arity + 1) + " indices and a value");
            Entry e;
            for (std::size_t s = 0; s <= arity; ++s)
                e.idx.push_back(count(row[s], rp + "/" + std::to_string(s)));
            e.value = scalar(row[arity + 1], rp + "/" + std::to_string(arity + 1));
            e.where = rp;
            t.push_back(std::move(e));
        }
        return t;
    }

    std::vector<std::string> labels(const json& obj, const std::string& ptr, const std::string& key,
                                    std::size_t n) const
    {
        auto it = obj.find(key);
        if (it == obj.end())
            return {};
        if (!it->is_array() || it->size() != n)
            file.fail(ptr + "/" + key, "expected " + std::to_string(n) + " labels");
        std::vector<std::string> out;
        for (std::size_t i = 0; i < n; ++i) {
            if (!(*it)[i].is_string())
                file.fail(ptr + "/" + key + "/" + std::to_string(i), "labels are strings");
            out.push_back((*it)[i].get<std::string>());
        }
        return out;
    }

    void only(const json& obj, const std::string& ptr, std::initializer_list<const char*> keys) const
    {
        for (auto& [k, v] : obj.items()) {
            bool known = false;
            for (auto* s : keys)
                known |= k == s;
            if (!known)
                file.fail(ptr + "/" + escape_key(k), "unknown field '" + k + "'");
        }
    }

    AlgebraDef algebra(const json& obj, const std::string& ptr, bool leibniz) const
    {
        AlgebraDef a;
        a.where = ptr;
        if (!obj.is_object())
            file.fail(ptr, "expected an object");
        if (leibniz) {
            only(obj, ptr, {"dim", "basis", "bracket"});
            a.kind = "leibniz";
            a.dim_0 = count(need(obj, ptr, "dim"), ptr + "/dim");
            a.basis_0 = labels(obj, ptr, "basis", a.dim_0);
            a.bracket = tensor(obj, ptr, "bracket", 2);
            return a;
        }
        only(obj, ptr, {"dim_m1", "dim_0", "basis_m1", "basis_0", "d", "c00", "c0m", "cm0", "h2", "h3"});
        a.kind = "hemistrict";
        a.dim_m1 = count(need(obj, ptr, "dim_m1"), ptr + "/dim_m1");
        a.dim_0 = count(need(obj, ptr, "dim_0"), ptr + "/dim_0");
        a.basis_m1 = labels(obj, ptr, "basis_m1", a.dim_m1);
        a.basis_0 = labels(obj, ptr, "basis_0", a.dim_0);
        a.d = tensor(obj, ptr, "d", 1);
        a.c00 = tensor(obj, ptr, "c00", 2);
        a.c0m = tensor(obj, ptr, "c0m", 2);
        a.cm0 = tensor(obj, ptr, "cm0", 2);
        a.h2 = tensor(obj, ptr, "h2", 2);
        a.h3 = tensor(obj, ptr, "h3", 3);
        return a;
    }

    // {"leibniz_algebra": ...} or {"hemistrict": ...} inside obj
    std::optional<AlgebraDef> any_algebra(const json& obj, const std::string& ptr) const
    {
        const bool has_l = obj.contains("leibniz_algebra"), has_h = obj.contains("hemistrict");
        if (has_l && has_h)
            file.fail(ptr, "give either leibniz_algebra or hemistrict, not both");
        if (has_l)
            return algebra(obj.at("leibniz_algebra"), ptr + "/leibniz_algebra", true);
        if (has_h)
            return algebra(obj.at("hemistrict"), ptr + "/hemistrict", false);
        return std::nullopt;
    }

    RepresentationDef representation(const json& obj, const std::string& ptr) const
    {
        RepresentationDef r;
        r.where = ptr;
        const json& kind = need(obj, ptr, "kind");
        if (!kind.is_string())
            file.fail(ptr + "/kind", "kind is a string");
        r.kind = kind.get<std::string>();
        if (r.kind == "adjoint") {
            only(obj, ptr, {"kind"});
        } else if (r.kind == "trivial") {
            only(obj, ptr, {"kind", "dim_m1", "dim_0"});
            if (obj.contains("dim_m1"))
                r.dim_m1 = count(obj.at("dim_m1"), ptr + "/dim_m1");
            if (obj.contains("dim_0"))
                r.dim_0 = count(obj.at("dim_0"), ptr + "/dim_0");
        } else if (r.kind == "module") {
            only(obj, ptr, {"kind", "dim", "l", "r"});
            r.dim_0 = count(need(obj, ptr, "dim"), ptr + "/dim");
            r.l = tensor(obj, ptr, "l", 2);
            r.r = tensor(obj, ptr, "r", 2);
        } else if (r.kind == "explicit") {
            only(obj, ptr, {"kind", "dim_m1", "dim_0", "d", "l00", "l0m", "lm0", "r00", "rm0", "r0m", "hv"});
            r.dim_m1 = count(need(obj, ptr, "dim_m1"), ptr + "/dim_m1");
            r.dim_0 = count(need(obj, ptr, "dim_0"), ptr + "/dim_0");
            r.d = tensor(obj, ptr, "d", 1);
            r.l00 = tensor(obj, ptr, "l00", 2);
            r.l0m = tensor(obj, ptr, "l0m", 2);
            r.lm0 = tensor(obj, ptr, "lm0", 2);
            r.r00 = tensor(obj, ptr, "r00", 2);
            r.rm0 = tensor(obj, ptr, "rm0", 2);
            r.r0m = tensor(obj, ptr, "r0m", 2);
            r.hv = tensor(obj, ptr, "hv", 2);
        } else {
            file.fail(ptr + "/kind", "unknown representation kind '" + r.kind + "'");
        }
        return r;
    }

    CochainDef cochain(const json& obj, const std::string& ptr) const
    {
        only(obj, ptr, {"degree", "components"});
        CochainDef c;
        c.where = ptr;
        const json& deg = need(obj, ptr, "degree");
        if (!deg.is_number_integer())
            file.fail(ptr + "/degree", "degree is an integer");
        c.degree = deg.get<int>();
        if (c.degree < -1)
            file.fail(ptr + "/degree", "degree must be >= -1");
        auto it = obj.find("components");
        if (it == obj.end())
            return c;
        if (!it->is_array())
            file.fail(ptr + "/components", "expected a list");
        for (std::size_t i = 0; i < it->size(); ++i) {
            const std::string cp = ptr + "/components/" + std::to_string(i);
            const json& co = (*it)[i];
            if (!co.is_object())
                file.fail(cp, "expected an object");
            only(co, cp, {"p", "k", "entries"});
            ComponentDef d;
            const json& pj = need(co, cp, "p");
            if (!pj.is_number_integer() || (pj.get<int>() != 0 && pj.get<int>() != -1))
                file.fail(cp + "/p", "p is 0 or -1");
            d.p = pj.get<int>();
            d.k = count(need(co, cp, "k"), cp + "/k");
            const long long m = static_cast<long long>(c.degree) - d.p - 2 * static_cast<long long>(d.k);
            if (m < 0)
                file.fail(cp + "/k", "component (p, k) does not exist in this degree");
            d.entries = tensor(co, cp, "entries", static_cast<std::size_t>(m) + d.k);
            c.components.push_back(std::move(d));
        }
        return c;
    }
};

}  // namespace detail

// Parses definition text; `source` names the input in messages.
inline DefinitionFile parse_definition(const std::string& text)
{
    DefinitionFile f;
    json root;
    std::size_t read = 0;
    std::map<std::string, std::size_t> offsets;
    detail::LocatingSax sax(root, text, &read, offsets);
    detail::CountingIter first{text.data(), text.data(), &read}, last{text.data() + text.size(), text.data(), &read};
    json::sax_parse(first, last, &sax);
    for (auto& [ptr, off] : offsets)
        f.locations[ptr] = detail::line_col(text, off > 0 ? off - 1 : 0);
    detail::Reader rd{f};
    if (!root.is_object())
        f.fail("", "top level must be an object");
    rd.only(root, "", {"format_version", "name", "leibniz_algebra", "hemistrict", "representation", "cochain",
                       "morphism"});
    const json& ver = rd.need(root, "", "format_version");
    if (!ver.is_number_integer() || ver.get<int>() != kFormatVersion)
        f.fail("/format_version", "unsupported format_version (expected " + std::to_string(kFormatVersion) + ")");
    if (root.contains("name")) {
        if (!root.at("name").is_string())
            f.fail("/name", "name is a string");
        f.name = root.at("name").get<std::string>();
    }
    f.algebra = rd.any_algebra(root, "");
    if (root.contains("representation"))
        f.representation = rd.representation(root.at("representation"), "/representation");
    if (root.contains("cochain"))
        f.cochain = rd.cochain(root.at("cochain"), "/cochain");
    if (root.contains("morphism")) {
        const json& m = root.at("morphism");
        if (!m.is_object())
            f.fail("/morphism", "expected an object");
        rd.only(m, "/morphism", {"leibniz_algebra", "hemistrict", "f_m1", "f_0", "f2"});
        MorphismDef md;
        md.where = "/morphism";
        auto t = rd.any_algebra(m, "/morphism");
        if (!t)
            f.fail("/morphism", "morphism needs a target leibniz_algebra or hemistrict");
        md.target = *t;
        md.f_m1 = rd.tensor(m, "/morphism", "f_m1", 1);
        md.f_0 = rd.tensor(m, "/morphism", "f_0", 1);
        md.f2 = rd.tensor(m, "/morphism", "f2", 2);
        f.morphism = std::move(md);
    }
    return f;
}

inline DefinitionFile read_definition(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_definition(ss.str());
}

// ---- resolution into domain objects ----

namespace detail {

inline void fill(const DefinitionFile& f, MultiMap& m, const Tensor& t)
{
    std::set<std::vector<std::size_t>> seen;
    for (const Entry& e : t) {
        if (e.idx.size() != m.arity() + 1)
            f.fail(e.where, "wrong number of indices");
        for (std::size_t s = 0; s < m.arity(); ++s)
            if (e.idx[s] >= m.arg_dims()[s])
                f.fail(e.where + "/" + std::to_string(s), "index " + std::to_string(e.idx[s]) + " out of range");
        if (e.idx.back() >= m.out_dim())
            f.fail(e.where + "/" + std::to_string(m.arity()),
                   "output index " + std::to_string(e.idx.back()) + " out of range");
        if (!seen.insert(e.idx).second)
            f.fail(e.where, "duplicate entry");
        m.at(std::vector<std::size_t>(e.idx.begin(), e.idx.end() - 1), e.idx.back()) = e.value;
    }
}

inline void fill_symmetric(const DefinitionFile& f, MultiMap& m, const Tensor& t, const std::string& where)
{
    fill(f, m, t);
    if (!m.symmetric_ok())
        f.fail(where, "tensor declared symmetric is not symmetric");
}

inline void fill(const DefinitionFile& f, Matrix& m, const Tensor& t)
{
    std::set<std::vector<std::size_t>> seen;
    for (const Entry& e : t) {
        if (e.idx.size() != 2)
            f.fail(e.where, "matrix entries are [row, col, value]");
        if (e.idx[0] >= m.rows() || e.idx[1] >= m.cols())
            f.fail(e.where, "matrix index out of range");
        if (!seen.insert(e.idx).second)
            f.fail(e.where, "duplicate entry");
        m(e.idx[0], e.idx[1]) = e.value;
    }
}

inline Tensor entries_of(const MultiMap& m)
{
    Tensor t;
    m.for_each_index([&](const std::vector<std::size_t>& idx) {
        for (std::size_t o = 0; o < m.out_dim(); ++o) {
            const Rational& v = m.at(idx, o);
            if (v != 0) {
                Entry e{idx, v, {}};
                e.idx.push_back(o);
                t.push_back(std::move(e));
            }
        }
    });
    return t;
}

inline Tensor entries_of(const Matrix& m)
{
    Tensor t;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(i, j) != 0)
                t.push_back({{i, j}, m(i, j), {}});
    return t;
}

}  // namespace detail

inline bool is_leibniz(const AlgebraDef& a) { return a.kind == "leibniz"; }

inline LeibnizAlgebra build_leibniz(const DefinitionFile& f, const AlgebraDef& a)
{
    if (!is_leibniz(a))
        f.fail(a.where, "a leibniz_algebra section is needed here");
    LeibnizAlgebra g(a.dim_0);
    detail::fill(f, g.c, a.bracket);
    return g;
}

inline WeakLie2Data build_weak(const DefinitionFile& f, const AlgebraDef& a)
{
    WeakLie2Data E;
    if (is_leibniz(a)) {
        E.base = from_leibniz(build_leibniz(f, a));
    } else {
        E.base = HemistrictLie2(a.dim_m1, a.dim_0);
        detail::fill(f, E.base.complex.d, a.d);
        detail::fill(f, E.base.c00, a.c00);
        detail::fill(f, E.base.c0m, a.c0m);
        detail::fill(f, E.base.cm0, a.cm0);
        detail::fill_symmetric(f, E.base.h2, a.h2, a.where + "/h2");
    }
    const std::size_t b = E.base.b();
    E.h3 = MultiMap({0, 0, 0}, -1, {b, b, b}, E.base.a());
    detail::fill(f, E.h3, a.h3);
    return E;
}

inline HemistrictLie2 build_algebra(const DefinitionFile& f, const AlgebraDef& a)
{
    WeakLie2Data E = build_weak(f, a);
    if (!E.h3.is_zero())
        f.fail(a.where + "/h3", "algebra has a Jacobiator; use it as a weak Lie 2-algebra");
    return E.base;
}

inline HemistrictLie2 build_algebra(const DefinitionFile& f)
{
    if (!f.algebra)
        f.fail("", "no leibniz_algebra or hemistrict section");
    return build_algebra(f, *f.algebra);
}

inline Representation2 build_representation(const DefinitionFile& f, const RepresentationDef& r,
                                             const HemistrictLie2& L)
{
    if (r.kind == "trivial")
        return trivial_rep(L, r.dim_m1, r.dim_0);
    if (r.kind == "adjoint")
        return adjoint(L);
    if (r.kind == "module") {
        if (!f.algebra || !is_leibniz(*f.algebra))
            f.fail(r.where, "a module representation needs a leibniz_algebra");
        LeibnizAlgebra g = build_leibniz(f, *f.algebra);
        LeibnizModule m(g.dim, r.dim_0);
        detail::fill(f, m.l, r.l);
        detail::fill(f, m.r, r.r);
        return rep_from_leibniz_module(g, m, L);
    }
    Representation2 V(L, TwoTermComplex(r.dim_m1, r.dim_0));
    detail::fill(f, V.v.d, r.d);
    detail::fill(f, V.l00, r.l00);
    detail::fill(f, V.l0m, r.l0m);
    detail::fill(f, V.lm0, r.lm0);
    detail::fill(f, V.r00, r.r00);
    detail::fill(f, V.rm0, r.rm0);
    detail::fill(f, V.r0m, r.r0m);
    detail::fill(f, V.hv, r.hv);
    return V;
}

// Leibniz module for the LP theory; only for leibniz_algebra files.
inline LeibnizModule build_module(const DefinitionFile& f, const RepresentationDef& r, const LeibnizAlgebra& g)
{
    if (r.kind == "trivial")
        return trivial_module(g, r.dim_0);
    if (r.kind == "adjoint")
        return adjoint_module(g);
    if (r.kind == "module") {
        LeibnizModule m(g.dim, r.dim_0);
        detail::fill(f, m.l, r.l);
        detail::fill(f, m.r, r.r);
        return m;
    }
    f.fail(r.where, "an explicit 2-term representation has no Leibniz module");
}

inline StandardCochain build_cochain(const DefinitionFile& f, const CochainDef& c, const HemistrictLie2& L,
                                     const Representation2& V)
{
    StandardCochain w = zero_cochain(L, V, c.degree);
    std::set<std::pair<int, std::size_t>> seen;
    for (std::size_t i = 0; i < c.components.size(); ++i) {
        const ComponentDef& d = c.components[i];
        const std::string where = c.where + "/components/" + std::to_string(i);
        if (!w.has(d.p, d.k))
            f.fail(where, "component (p, k) does not exist in this degree");
        if (!seen.insert({d.p, d.k}).second)
            f.fail(where, "component listed twice");
        detail::fill_symmetric(f, w.at(d.p, d.k), d.entries, where);
    }
    return w;
}

inline Morphism2 build_morphism(const DefinitionFile& f, const MorphismDef& m, const HemistrictLie2& src,
                                const HemistrictLie2& dst)
{
    Morphism2 g(src, dst);
    detail::fill(f, g.f_m1, m.f_m1);
    detail::fill(f, g.f_0, m.f_0);
    detail::fill(f, g.f2, m.f2);
    return g;
}

// ---- serialization ----

inline AlgebraDef algebra_def(const LeibnizAlgebra& g)
{
    AlgebraDef a;
    a.kind = "leibniz";
    a.dim_0 = g.dim;
    a.bracket = detail::entries_of(g.c);
    return a;
}

inline AlgebraDef algebra_def(const WeakLie2Data& E)
{
    AlgebraDef a;
    a.kind = "hemistrict";
    a.dim_m1 = E.base.a();
    a.dim_0 = E.base.b();
    a.d = detail::entries_of(E.base.d());
    a.c00 = detail::entries_of(E.base.c00);
    a.c0m = detail::entries_of(E.base.c0m);
    a.cm0 = detail::entries_of(E.base.cm0);
    a.h2 = detail::entries_of(E.base.h2);
    a.h3 = detail::entries_of(E.h3);
    return a;
}

inline AlgebraDef algebra_def(const HemistrictLie2& L) { return algebra_def(as_weak(L)); }

inline RepresentationDef representation_def(const Representation2& V)
{
    RepresentationDef r;
    r.kind = "explicit";
    r.dim_m1 = V.p();
    r.dim_0 = V.q();
    r.d = detail::entries_of(V.v.d);
    r.l00 = detail::entries_of(V.l00);
    r.l0m = detail::entries_of(V.l0m);
    r.lm0 = detail::entries_of(V.lm0);
    r.r00 = detail::entries_of(V.r00);
    r.rm0 = detail::entries_of(V.rm0);
    r.r0m = detail::entries_of(V.r0m);
    r.hv = detail::entries_of(V.hv);
    return r;
}

inline CochainDef cochain_def(const StandardCochain& w)
{
    CochainDef c;
    c.degree = w.n;
    for (auto& [key, m] : w.components) {
        Tensor t = detail::entries_of(m);
        if (!t.empty())
            c.components.push_back({key.first, key.second, std::move(t)});
    }
    return c;
}

namespace detail {

inline ojson to_json(const Tensor& t)
{
    ojson a = ojson::array();
    for (auto& e : t) {
        ojson row = ojson::array();
        for (auto i : e.idx)
            row.push_back(i);
        row.push_back(to_string(e.value));
        a.push_back(std::move(row));
    }
    return a;
}

inline void put(ojson& o, const char* key, const Tensor& t)
{
    if (!t.empty())
        o[key] = to_json(t);
}

inline ojson to_json(const AlgebraDef& a)
{
    ojson o = ojson::object();
    if (is_leibniz(a)) {
        o["dim"] = a.dim_0;
        if (!a.basis_0.empty())
            o["basis"] = a.basis_0;
        put(o, "bracket", a.bracket);
        return o;
    }
    o["dim_m1"] = a.dim_m1;
    o["dim_0"] = a.dim_0;
    if (!a.basis_m1.empty())
        o["basis_m1"] = a.basis_m1;
    if (!a.basis_0.empty())
        o["basis_0"] = a.basis_0;
    put(o, "d", a.d);
    put(o, "c00", a.c00);
    put(o, "c0m", a.c0m);
    put(o, "cm0", a.cm0);
    put(o, "h2", a.h2);
    put(o, "h3", a.h3);
    return o;
}

inline const char* section(const AlgebraDef& a) { return is_leibniz(a) ? "leibniz_algebra" : "hemistrict"; }

}  // namespace detail

inline ojson to_json(const DefinitionFile& f)
{
    using detail::put;
    ojson o = ojson::object();
    o["format_version"] = f.format_version;
    if (!f.name.empty())
        o["name"] = f.name;
    if (f.algebra)
        o[detail::section(*f.algebra)] = detail::to_json(*f.algebra);
    if (f.representation) {
        const RepresentationDef& r = *f.representation;
        ojson j = ojson::object();
        j["kind"] = r.kind;
        if (r.kind == "trivial") {
            j["dim_m1"] = r.dim_m1;
            j["dim_0"] = r.dim_0;
        } else if (r.kind == "module") {
            j["dim"] = r.dim_0;
            put(j, "l", r.l);
            put(j, "r", r.r);
        } else if (r.kind == "explicit") {
            j["dim_m1"] = r.dim_m1;
            j["dim_0"] = r.dim_0;
            put(j, "d", r.d);
            put(j, "l00", r.l00);
            put(j, "l0m", r.l0m);
            put(j, "lm0", r.lm0);
            put(j, "r00", r.r00);
            put(j, "rm0", r.rm0);
            put(j, "r0m", r.r0m);
            put(j, "hv", r.hv);
        }
        o["representation"] = j;
    }
    if (f.cochain) {
        ojson j = ojson::object();
        j["degree"] = f.cochain->degree;
        ojson cs = ojson::array();
        for (auto& c : f.cochain->components)
            cs.push_back({{"p", c.p}, {"k", c.k}, {"entries", detail::to_json(c.entries)}});
        j["components"] = cs;
        o["cochain"] = j;
    }
    if (f.morphism) {
        ojson j = ojson::object();
        j[detail::section(f.morphism->target)] = detail::to_json(f.morphism->target);
        put(j, "f_m1", f.morphism->f_m1);
        put(j, "f_0", f.morphism->f_0);
        put(j, "f2", f.morphism->f2);
        o["morphism"] = j;
    }
    return o;
}

namespace detail {

// Index of the ']' closing the array opened at `open`, or npos when the array
// holds objects or arrays. Strings are skipped.
inline std::size_t flat_array_end(const std::string& s, std::size_t open)
{
    bool in_str = false;
    for (std::size_t i = open + 1; i < s.size(); ++i) {
        const char c = s[i];
        if (in_str) {
            if (c == '\\')
                ++i;
            else if (c == '"')
                in_str = false;
        } else if (c == '"') {
            in_str = true;
        } else if (c == '[' || c == '{') {
            return std::string::npos;
        } else if (c == ']') {
            return i;
        }
    }
    return std::string::npos;
}

}  // namespace detail

// Pretty-printed with every innermost array on one line, so each tensor entry
// is one line of the file.
inline std::string pretty(const ojson& j)
{
    const std::string out = j.dump(2);
    std::string res;
    res.reserve(out.size());
    bool in_str = false;
    for (std::size_t i = 0; i < out.size(); ++i) {
        const char c = out[i];
        if (in_str) {
            res += c;
            if (c == '\\')
                res += out[++i];
            else if (c == '"')
                in_str = false;
            continue;
        }
        if (c == '"') {
            in_str = true;
            res += c;
            continue;
        }
        std::size_t close;
        if (c == '[' && (close = detail::flat_array_end(out, i)) != std::string::npos) {
            // re-dump the elements compactly
            json arr = json::parse(out.begin() + static_cast<std::ptrdiff_t>(i),
                                   out.begin() + static_cast<std::ptrdiff_t>(close) + 1);
            std::string flat = "[";
            for (std::size_t k = 0; k < arr.size(); ++k)
                flat += (k ? ", " : "") + arr[k].dump();
            res += flat + "]";
            i = close;
            continue;
        }
        res += c;
    }
    return res + "\n";
}

inline std::string write_definition(const DefinitionFile& f) { return pretty(to_json(f)); }

}  // namespace lie2coh
