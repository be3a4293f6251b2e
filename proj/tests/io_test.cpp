#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "support/fixtures.hpp"
#include "support/generators.hpp"

using namespace symfa;
using namespace symfa::testing;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

const char* kMinimal = R"({
  "algebra": {"kind": "interval"},
  "states": ["a"],
  "initial": "a",
  "accepting": [],
  "transitions": []
})";

}  // namespace

TEST(SfaFile, Fig1FixtureMatchesBuilder) {
    auto a = io::read_sfa_file(source_path("fixtures/fig1.sfa"));
    EXPECT_EQ(a, fig1());
    EXPECT_TRUE(validate(a).empty());
}

TEST(SfaFile, PropFixture) {
    auto a = io::read_sfa_file(source_path("fixtures/prop3.sfa"));
    EXPECT_EQ(a.binding(), AlgebraBinding::propositional(std::vector<std::string>{"p1", "p2", "p3"}));
    EXPECT_TRUE(membership(a, Word{Letter{Valuation::parse("101")}}));
    EXPECT_FALSE(membership(a, Word{Letter{Valuation::parse("110")}}));
}

TEST(SfaFile, RoundTripIsStructuralIdentity) {
    for (const auto& a : {fig1(), fig1_split(), io::read_sfa_file(source_path("fixtures/prop3.sfa"))}) {
        EXPECT_EQ(io::parse_sfa(io::emit_sfa(a)), a);
    }
    Rng rng(71);
    for (int i = 0; i < 200; ++i) {
        SfaShape shape;
        shape.neat = coin(rng);
        shape.deterministic = coin(rng);
        auto a = coin(rng) ? random_interval_sfa(rng, shape) : random_prop_sfa(rng, uniform(rng, 1, 5), shape);
        auto text = io::emit_sfa(a);
        auto b = io::parse_sfa(text);
        ASSERT_EQ(b, a);
        EXPECT_EQ(io::emit_sfa(b), text);
    }
}

TEST(SfaFile, RawTreesAreKept) {
    const auto ib = AlgebraBinding::interval();
    auto p = Predicate::negation(Predicate::negation(Predicate::conjunction({Predicate::truth(), interval(0, 1)})));
    auto a = loop(ib, p);
    EXPECT_EQ(io::parse_sfa(io::emit_sfa(a)).transitions()[0].pred, p);
}

TEST(SfaFile, ParseErrorsCarryPosition) {
    try {
        io::parse_sfa("{\n  \"states\": [,]\n}");
        FAIL() << "expected a parse error";
    } catch (const io::ParseError& e) {
        EXPECT_EQ(e.line(), 2u);
        EXPECT_GT(e.column(), 1u);
        EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
    }
}

TEST(SfaFile, RejectsSchemaViolations) {
    EXPECT_NO_THROW(io::parse_sfa(kMinimal));
    auto mutate = [](const std::string& from, const std::string& to) {
        std::string s = kMinimal;
        s.replace(s.find(from), from.size(), to);
        return s;
    };
    EXPECT_THROW(io::parse_sfa(mutate("\"initial\": \"a\"", "\"initial\": \"b\"")), io::ParseError);
    EXPECT_THROW(io::parse_sfa(mutate("\"states\": [\"a\"]", "\"states\": [\"a\", \"a\"]")), io::ParseError);
    EXPECT_THROW(io::parse_sfa(mutate("\"kind\": \"interval\"", "\"kind\": \"regex\"")), io::ParseError);
    EXPECT_THROW(io::parse_sfa(mutate("\"accepting\": []", "\"accepting\": [], \"extra\": 1")), io::ParseError);
    EXPECT_THROW(io::parse_sfa(mutate("\"transitions\": []",
                                      R"("transitions": [{"from": "a", "to": "a", "pred": {"atom": {"lo": 3, "hi": 3}}}])")),
                 io::ParseError);
    EXPECT_THROW(io::parse_sfa(mutate("\"transitions\": []",
                                      R"("transitions": [{"from": "a", "to": "a", "pred": {"and": ["true"]}}])")),
                 io::ParseError);
    EXPECT_THROW(io::parse_sfa(mutate("\"transitions\": []",
                                      R"("transitions": [{"from": "a", "to": "a", "pred": {"atom": {"lo": "inf", "hi": 3}}}])")),
                 io::ParseError);
    EXPECT_THROW(io::parse_sfa(mutate("\"transitions\": []",
                                      R"("transitions": [{"from": "a", "to": "a", "pred": {"atom": {"var": "p1"}}}])")),
                 io::ParseError);
}

TEST(SfaFile, PropositionalNegDefaultsToFalse) {
    auto a = io::parse_sfa(R"({"algebra": {"kind": "propositional", "props": ["x", "y"]},
        "states": ["s"], "initial": "s", "accepting": ["s"],
        "transitions": [{"from": "s", "to": "s", "pred": {"atom": {"var": "y"}}}]})");
    EXPECT_EQ(a.transitions()[0].pred, literal(1));
}

TEST(SfaFile, FileErrorsMentionPath) {
    EXPECT_THROW(io::read_sfa_file(source_path("fixtures/does-not-exist.sfa")), Error);
}

TEST(Dot, Fig1MatchesGolden) {
    EXPECT_EQ(export_dot(fig1()), slurp(source_path("tests/golden/fig1.dot")));
}

TEST(Dot, Structure) {
    auto d = export_dot(fig1());
    auto count = [&](const std::string& needle) {
        std::size_t n = 0;
        for (auto pos = d.find(needle); pos != std::string::npos; pos = d.find(needle, pos + 1)) {
            ++n;
        }
        return n;
    };
    EXPECT_EQ(count("doublecircle"), 1u);
    EXPECT_EQ(count("[label="), 4u);
    EXPECT_EQ(count("__start -> \"q0\""), 1u);
}

TEST(Dot, EmptyAutomaton) {
    auto d = export_dot(empty_language(AlgebraBinding::interval()));
    EXPECT_EQ(d,
              "digraph sfa {\n  rankdir=LR;\n  node [shape=circle];\n  __start [shape=point];\n  \"e\";\n"
              "  __start -> \"e\";\n}\n");
}

TEST(Dot, MonomialLabels) {
    auto a = to_neat(io::read_sfa_file(source_path("fixtures/prop3.sfa")));
    auto d = export_dot(a);
    EXPECT_NE(d.find("label=\"p1∧¬p2\""), std::string::npos);
    EXPECT_NE(d.find("label=\"p1∧p2∧p3\""), std::string::npos);
}
