#include <gtest/gtest.h>

#include "causelab/abduction.hpp"
#include "causelab/errors.hpp"
#include "causelab/oracle.hpp"
#include "helpers.hpp"

namespace causelab {
namespace {

using namespace test;

Program closure_program() {
    return parse_program(
        "T(X,Y) :- E(X,Y).\n"
        "T(X,Y) :- E(X,Z), T(Z,Y).\n"
        "ans :- T(a,c).\n");
}

Program single_rule() { return parse_program("ans :- R(X,Y), S(Y)."); }

TEST(Program, Validation) {
    EXPECT_THROW(Program({Rule{Atom{"ans", {}}, {}}}), ValidationError);
    EXPECT_THROW(parse_program("p(X) :- S(Y)."), ValidationError);
    EXPECT_NO_THROW(parse_program("p(a) :- S(Y)."));
    EXPECT_EQ(Program::from_query(q0()), single_rule());
}

TEST(Evaluate, ClosureFixpoint) {
    EXPECT_EQ(evaluate(closure_program(), closure_edges().tuples()),
              tset({"T(a,b)", "T(b,c)", "T(a,c)", "ans"}));
    EXPECT_TRUE(evaluate(closure_program(), {}).empty());
    EXPECT_EQ(evaluate(single_rule(), d0_tuples()), tset({"ans"}));
}

TEST(Evaluate, LongChainMatchesNaive) {
    TupleSet edges;
    for (int i = 0; i < 12; ++i)
        edges.insert({"E", {"n" + std::to_string(i), "n" + std::to_string(i + 1)}});
    edges.insert({"E", {"n12", "n0"}});
    Program p = closure_program();
    TupleSet fast = evaluate(p, edges);
    EXPECT_EQ(fast, set_difference(oracle::naive_least_model(p, edges), edges));
    EXPECT_EQ(fast.size(), 13u * 13u);
}

TEST(Entails, Goals) {
    EXPECT_TRUE(entails(closure_program(), closure_edges().tuples(), tset({"T(a,c)"})));
    EXPECT_FALSE(entails(closure_program(), tset({"E(a,b)"}), tset({"ans"})));
}

TEST(Abduction, ConstructionChecks) {
    EXPECT_THROW(AbductionProblem(single_rule(), {}, tset({"S(a1)"}), tset({"ans"})), ValidationError);
    EXPECT_THROW(AbductionProblem(single_rule(), {}, tset({"ans"}), tset({"ans"})), ValidationError);
}

TEST(Abduction, ReferenceSolutions) {
    auto ap = AbductionProblem::for_causes(single_rule(), d0());
    std::set<TupleSet> expected{tset({"S(a1)", "R(a2,a1)"}), tset({"S(a3)", "R(a3,a3)"})};
    EXPECT_EQ(abductive_solutions(ap), expected);
    EXPECT_EQ(oracle::abductive_solutions(ap), expected);
    EXPECT_EQ(relevant_hypotheses(ap), tset({"S(a1)", "R(a2,a1)", "S(a3)", "R(a3,a3)"}));
    std::set<TupleSet> necessary{
        tset({"S(a1)", "S(a3)"}), tset({"S(a1)", "R(a3,a3)"}),
        tset({"R(a2,a1)", "S(a3)"}), tset({"R(a2,a1)", "R(a3,a3)"}),
    };
    EXPECT_EQ(necessary_sets(ap), necessary);
    EXPECT_EQ(oracle::necessary_sets(ap), necessary);
}

TEST(Abduction, ClosureSolutions) {
    auto ap = AbductionProblem::for_causes(closure_program(), closure_edges());
    EXPECT_EQ(abductive_solutions(ap), std::set<TupleSet>{tset({"E(a,b)", "E(b,c)"})});
    EXPECT_EQ(relevant_hypotheses(ap), tset({"E(a,b)", "E(b,c)"}));
    EXPECT_EQ(necessary_sets(ap), (std::set<TupleSet>{tset({"E(a,b)"}), tset({"E(b,c)"})}));
}

TEST(Abduction, ObservationEntailedByEdb) {
    Instance d = closure_edges().all_exogenous();
    auto ap = AbductionProblem::for_causes(closure_program(), d);
    EXPECT_EQ(abductive_solutions(ap), std::set<TupleSet>{TupleSet{}});
    EXPECT_TRUE(necessary_sets(ap).empty());
    EXPECT_TRUE(relevant_hypotheses(ap).empty());
}

TEST(Abduction, RankByNecessity) {
    Instance d({{"E", 2}}, tset({"E(a,b)", "E(b,c)", "E(a,c)"}), {});
    auto ranked = rank_by_necessity(AbductionProblem::for_causes(closure_program(), d));
    // Necessary sets {E(a,c),E(a,b)} and {E(a,c),E(b,c)}.
    ASSERT_EQ(ranked.size(), 3u);
    for (const RankedHypothesis& h : ranked) EXPECT_EQ(h.necessity, 2u);

    // S(b) alone is necessary; the two R-tuples only together.
    auto shared = rank_by_necessity(
        AbductionProblem::for_causes(single_rule(), endo_rs({"R(a,b)", "R(c,b)", "S(b)"})));
    ASSERT_EQ(shared.size(), 3u);
    EXPECT_EQ(shared[0].hypothesis, tup("S(b)"));
    EXPECT_EQ(shared[0].necessity, 1u);
    EXPECT_EQ(shared[1].necessity, 2u);
}

TEST(DatalogCauses, Values) {
    EXPECT_EQ(datalog_actual_causes(single_rule(), d0()),
              tset({"S(a1)", "R(a2,a1)", "S(a3)", "R(a3,a3)"}));
    EXPECT_EQ(datalog_actual_causes(closure_program(), closure_edges()), tset({"E(a,b)", "E(b,c)"}));
    EXPECT_TRUE(datalog_actual_causes(single_rule(), endo_rs({"R(a,b)"})).empty());
    EXPECT_EQ(datalog_responsibility(single_rule(), d0(), tup("S(a1)")), r(1, 2));
    EXPECT_EQ(datalog_responsibility(single_rule(), d0(), tup("S(a2)")), r(0));
    EXPECT_EQ(datalog_responsibility(closure_program(), closure_edges(), tup("E(a,b)")), r(1));
    EXPECT_THROW(datalog_responsibility(single_rule(), d0(), tup("S(a9)")), DomainError);
}

TEST(DatalogCauses, DefinitionAgreesOnRecursiveDiamond) {
    // Two paths a->c: E(a,c) directly, or through b.
    Instance d({{"E", 2}}, tset({"E(a,b)", "E(b,c)", "E(a,c)"}), {});
    auto by_definition = datalog_causes_by_definition(closure_program(), d);
    ASSERT_EQ(by_definition.size(), 3u);
    EXPECT_EQ(by_definition.at(tup("E(a,c)")), r(1, 2));
    EXPECT_EQ(by_definition.at(tup("E(a,b)")), r(1, 2));
    for (const auto& [t, rho] : by_definition)
        EXPECT_EQ(datalog_responsibility(closure_program(), d, t), rho);
}

} // namespace
} // namespace causelab
