#include <gtest/gtest.h>

#include "support/fixtures.hpp"
#include "support/generators.hpp"

using namespace symfa;
using namespace symfa::testing;

namespace {

// Independent size count: rebuilds the tree as strictly binary nodes and
// counts every node of that tree.
std::size_t binary_tree_nodes(const Predicate& p) {
    if (p.children().empty()) {
        return 1;
    }
    if (p.kind() == Predicate::Kind::Not) {
        return 1 + binary_tree_nodes(p.operand());
    }
    auto cs = p.children();
    std::size_t total = binary_tree_nodes(cs[0]);
    for (std::size_t i = 1; i < cs.size(); ++i) {
        total += 1 + binary_tree_nodes(cs[i]);
    }
    return total;
}

}  // namespace

TEST(Bound, OrdersSentinelsAroundIntegers) {
    EXPECT_LT(Bound::neg_inf(), Bound::finite(-1000000));
    EXPECT_LT(Bound::finite(5), Bound::finite(6));
    EXPECT_LT(Bound::finite(1000000), Bound::pos_inf());
    EXPECT_EQ(Bound::neg_inf().to_string(), "-inf");
    EXPECT_EQ(Bound::pos_inf().to_string(), "inf");
}

TEST(IntervalAtom, RejectsEmptyAndReversed) {
    EXPECT_THROW(IntervalAtom(fin(3), fin(3)), Error);
    EXPECT_THROW(IntervalAtom(fin(4), fin(3)), Error);
    EXPECT_FALSE(IntervalAtom::make(fin(3), fin(3)).has_value());
    EXPECT_TRUE(IntervalAtom::make(fin(3), fin(4)).has_value());
}

TEST(IntervalAtom, ContainsIsHalfOpen) {
    IntervalAtom a(fin(0), fin(100));
    EXPECT_TRUE(a.contains(0));
    EXPECT_TRUE(a.contains(99));
    EXPECT_FALSE(a.contains(100));
    EXPECT_FALSE(a.contains(-1));
    EXPECT_TRUE(IntervalAtom::full().contains(INT64_MIN));
}

TEST(Classify, Examples) {
    EXPECT_EQ(classify(interval(0, 100)), PredicateClass::Atomic);
    EXPECT_EQ(classify(Predicate::conjunction({literal(0), literal(1, true)})), PredicateClass::Basic);
    EXPECT_EQ(classify(Predicate::disjunction({interval(0, 10), interval(20, 30)})), PredicateClass::General);
    EXPECT_EQ(classify(Predicate::truth()), PredicateClass::Atomic);
    EXPECT_EQ(classify(Predicate::negation(interval(0, 1))), PredicateClass::General);
    // a raw Not over a literal is not syntactically basic; mk_not folds it
    EXPECT_EQ(classify(Predicate::negation(literal(0))), PredicateClass::General);
    EXPECT_EQ(classify(mk_not(literal(0))), PredicateClass::Atomic);
}

TEST(PredicateSize, Examples) {
    EXPECT_EQ(predicate_size(interval(0, 100)), 1u);
    auto p = Predicate::conjunction({interval(0, 100), Predicate::disjunction({interval(50, 150), interval(20, 40)})});
    EXPECT_EQ(predicate_size(p), 5u);
    EXPECT_EQ(predicate_size(p), binary_tree_nodes(p));
    EXPECT_EQ(predicate_size(Predicate::negation(Predicate::truth())), 2u);
}

TEST(PredicateSize, MatchesBinaryTreeCountOnRandomTrees) {
    Rng rng(11);
    for (int i = 0; i < 500; ++i) {
        auto p = random_interval_predicate(rng, uniform(rng, 1, 60));
        EXPECT_EQ(predicate_size(p), binary_tree_nodes(p));
        EXPECT_LE(predicate_size(p), 60u);
    }
}

TEST(Eval, Examples) {
    const auto ib = AlgebraBinding::interval();
    EXPECT_TRUE(eval(ib, interval(0, 100), Letter{std::int64_t{50}}));
    EXPECT_FALSE(eval(ib, Predicate::negation(interval(0, 100)), Letter{std::int64_t{50}}));
    const auto pb = AlgebraBinding::propositional(3);
    auto m = Predicate::conjunction({literal(0), literal(1, true)});
    EXPECT_TRUE(eval(pb, m, Letter{Valuation::parse("101")}));
    EXPECT_FALSE(eval(pb, m, Letter{Valuation::parse("111")}));
}

TEST(Eval, RejectsMismatchedLetters) {
    const auto ib = AlgebraBinding::interval();
    const auto pb = AlgebraBinding::propositional(3);
    EXPECT_THROW(eval(ib, interval(0, 1), Letter{Valuation::parse("101")}), Error);
    EXPECT_THROW(eval(pb, literal(0), Letter{std::int64_t{1}}), Error);
    EXPECT_THROW(eval(pb, literal(0), Letter{Valuation::parse("10")}), Error);
    EXPECT_THROW(eval(naturals(), interval(0, 1), Letter{std::int64_t{-1}}), Error);
    EXPECT_THROW(eval(ib, literal(0), Letter{std::int64_t{1}}), Error);
}

TEST(MkConnectives, NeutralAndAbsorbingElements) {
    EXPECT_EQ(mk_and({Predicate::truth(), interval(0, 10)}), interval(0, 10));
    EXPECT_EQ(mk_or({}), Predicate::falsity());
    EXPECT_EQ(mk_and({}), Predicate::truth());
    EXPECT_EQ(mk_and({interval(0, 10), Predicate::falsity()}), Predicate::falsity());
    EXPECT_EQ(mk_or({interval(0, 10), Predicate::truth()}), Predicate::truth());
}

TEST(MkConnectives, FlattensNestedNodes) {
    auto p = mk_and({interval(0, 10), mk_and({interval(1, 9), interval(2, 8)})});
    ASSERT_EQ(p.kind(), Predicate::Kind::And);
    EXPECT_EQ(p.children().size(), 3u);
}

TEST(MkConnectives, NegationFolding) {
    EXPECT_EQ(mk_not(Predicate::truth()), Predicate::falsity());
    EXPECT_EQ(mk_not(mk_not(interval(0, 1))), interval(0, 1));
    EXPECT_EQ(mk_not(literal(2)), literal(2, true));
}

TEST(RawFactories, RequireTwoOperands) {
    EXPECT_THROW(Predicate::conjunction({interval(0, 1)}), Error);
    EXPECT_THROW(Predicate::disjunction({}), Error);
}

TEST(Sat, Examples) {
    const auto ib = AlgebraBinding::interval();
    EXPECT_FALSE(sat(ib, Predicate::conjunction({interval(0, 10), interval(20, 30)})).has_value());
    const auto pb = AlgebraBinding::propositional(2);
    EXPECT_FALSE(sat(pb, Predicate::conjunction({literal(0), literal(0, true)})).has_value());
    auto p = Predicate::conjunction({interval(0, 100), interval(50, 150)});
    OpCounters c;
    auto w = sat(ib, p, &c);
    ASSERT_TRUE(w.has_value());
    EXPECT_TRUE(eval(ib, p, *w));
    EXPECT_EQ(c.sat_calls, 1u);
}

TEST(Sat, WitnessesAlwaysSatisfy) {
    Rng rng(5);
    const auto ib = AlgebraBinding::interval();
    for (int i = 0; i < 300; ++i) {
        auto p = random_interval_predicate(rng, uniform(rng, 1, 25));
        auto w = sat(ib, p);
        if (w) {
            EXPECT_TRUE(eval(ib, p, *w)) << to_string(p);
        } else {
            for (std::int64_t x = -3; x <= 43; ++x) {
                EXPECT_FALSE(eval(ib, p, Letter{x})) << to_string(p);
            }
        }
    }
}

TEST(ToString, Rendering) {
    EXPECT_EQ(to_string(interval(fin(0), inf())), "[0,inf)");
    std::vector<std::string> names{"p1", "p2"};
    EXPECT_EQ(to_string(Predicate::conjunction({literal(0), literal(1, true)}), names), "p1∧¬p2");
    EXPECT_EQ(to_string(Predicate::disjunction({interval(0, 1), interval(2, 3)})), "[0,1) ∨ [2,3)");
    EXPECT_EQ(to_string(Predicate::negation(Predicate::disjunction({interval(0, 1), interval(2, 3)}))),
              "¬([0,1) ∨ [2,3))");
}

TEST(Binding, PropositionalValidation) {
    EXPECT_THROW(AlgebraBinding::propositional(std::vector<std::string>{}), Error);
    EXPECT_THROW(AlgebraBinding::propositional(std::vector<std::string>{"a", "a"}), Error);
    EXPECT_THROW(AlgebraBinding::propositional(17), Error);
    EXPECT_EQ(AlgebraBinding::propositional(3).props().at(2), "p3");
}
