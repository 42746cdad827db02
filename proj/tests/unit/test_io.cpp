#include <gtest/gtest.h>

#include "../common/corpus.hpp"

#include <filesystem>

using namespace lie2coh;
using namespace corpus;

static ParseError parse_error_of(const std::string& text)
{
    try {
        parse_definition(text);
    } catch (const ParseError& e) {
        return e;
    }
    ADD_FAILURE() << "no ParseError for:\n" << text;
    return ParseError("none");
}

TEST(DefinitionFile, BundledFilesRoundTrip)
{
    for (auto& entry : std::filesystem::directory_iterator(LIE2COH_DATA_DIR)) {
        DefinitionFile f = read_definition(entry.path().string());
        const std::string text = write_definition(f);
        DefinitionFile g = parse_definition(text);
        EXPECT_EQ(f, g) << entry.path();
        EXPECT_EQ(write_definition(g), text);
    }
}

TEST(DefinitionFile, SerializedObjectsRebuildExactly)
{
    Rng rng(91);
    for (int i = 0; i < 20; ++i) {
        auto [L, V] = random_rep(rng);
        DefinitionFile f;
        f.name = "random";
        f.algebra = algebra_def(L);
        f.representation = representation_def(V);
        ComplexRealization cr = realize(L, V, 2);
        StandardCochain w = random_cochain(rng, L, V, 2, cr);
        f.cochain = cochain_def(w);
        DefinitionFile g = parse_definition(write_definition(f));
        HemistrictLie2 L2 = build_algebra(g);
        Representation2 V2 = build_representation(g, *g.representation, L2);
        EXPECT_EQ(L2, L);
        EXPECT_EQ(V2, V);
        EXPECT_EQ(cochain_to_ambient(L, V, build_cochain(g, *g.cochain, L2, V2)), cochain_to_ambient(L, V, w));
    }
}

TEST(DefinitionFile, LeibnizSectionBuildsLg)
{
    DefinitionFile f = load("g2_leibniz.def");
    EXPECT_TRUE(is_leibniz(*f.algebra));
    EXPECT_EQ(build_algebra(f), from_leibniz(g2()));
    EXPECT_EQ(build_algebra(load("g2.def")), from_leibniz(g2()));
}

TEST(DefinitionFile, EmptyInputIsParseError)
{
    ParseError e = parse_error_of("");
    EXPECT_EQ(e.line(), 1u);
}

TEST(DefinitionFile, SyntaxErrorCarriesPosition)
{
    ParseError e = parse_error_of("{\n  \"format_version\": 1,\n  \"name\": \"x\",,\n}");
    EXPECT_EQ(e.line(), 3u);
    EXPECT_GT(e.column(), 0u);
}

TEST(DefinitionFile, SemanticErrorsPointAtTheEntry)
{
    const std::string text = "{\n"
                             "  \"format_version\": 1,\n"
                             "  \"leibniz_algebra\": {\n"
                             "    \"dim\": 2,\n"
                             "    \"bracket\": [[0, 0, 5, \"1\"]]\n"
                             "  }\n"
                             "}\n";
    DefinitionFile f = parse_definition(text);
    try {
        build_algebra(f);
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 5u);
        EXPECT_NE(std::string(e.what()).find("out of range"), std::string::npos);
    }
}

TEST(DefinitionFile, RejectsMalformedContent)
{
    const char* bad[] = {
        R"({"format_version": 2, "leibniz_algebra": {"dim": 1, "bracket": []}})",
        R"({"format_version": 1, "leibniz_algebra": {"dim": 1, "bracket": [], "extra": 1}})",
        R"({"format_version": 1, "leibniz_algebra": {"dim": 1, "bracket": [[0, 0, 0, "1/0"]]}})",
        R"({"format_version": 1, "leibniz_algebra": {"dim": 1, "bracket": [[0, 0, "1"]]}})",
        R"({"format_version": 1, "leibniz_algebra": {"dim": 1, "bracket": [[0, 0, 0, 1.5]]}})",
        R"([1, 2])",
    };
    for (const char* t : bad)
        EXPECT_THROW(
            {
                DefinitionFile f = parse_definition(t);
                build_algebra(f);
            },
            ParseError)
            << t;
}

TEST(DefinitionFile, DuplicateAndAsymmetricEntries)
{
    const char* dup =
        R"({"format_version": 1, "leibniz_algebra": {"dim": 1, "bracket": [[0, 0, 0, "1"], [0, 0, 0, "2"]]}})";
    EXPECT_THROW(build_algebra(parse_definition(dup)), ParseError);
    const char* asym = R"({"format_version": 1, "hemistrict": {"dim_m1": 1, "dim_0": 2, "d": [],
        "c00": [], "c0m": [], "cm0": [], "h2": [[0, 1, 0, "1"]]}})";
    EXPECT_THROW(build_algebra(parse_definition(asym)), ParseError);
}

TEST(DefinitionFile, MissingFile)
{
    EXPECT_THROW(read_definition("/nonexistent/x.def"), ParseError);
}
