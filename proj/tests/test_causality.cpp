#include <gtest/gtest.h>

#include "causelab/causality.hpp"
#include "causelab/errors.hpp"
#include "helpers.hpp"

namespace causelab {
namespace {

using namespace test;

const CausalityOptions brute{Engine::brute_force, {}};

TEST(Counterfactual, Cases) {
    EXPECT_FALSE(is_counterfactual_cause(d0(), q0(), tup("R(a2,a1)")));
    EXPECT_TRUE(is_counterfactual_cause(endo_rs({"R(a,b)", "S(b)"}), q0(), tup("R(a,b)")));
    EXPECT_FALSE(is_counterfactual_cause(d0(), q0(), tup("S(a2)")));
    EXPECT_THROW(is_counterfactual_cause(d0(), q0(), tup("S(a9)")), DomainError);
}

TEST(ActualCauses, ReferenceInstanceHasFourHalfCauses) {
    for (Engine engine : {Engine::witness, Engine::brute_force}) {
        CauseSet causes = actual_causes(d0(), q0(), CausalityOptions{engine, {}});
        EXPECT_EQ(cause_tuples(causes), tset({"R(a2,a1)", "S(a1)", "R(a3,a3)", "S(a3)"}));
        for (const CauseReport& c : causes) EXPECT_EQ(c.responsibility, r(1, 2));
    }
}

TEST(ActualCauses, ExogenousTuplesAreNeverCauses) {
    EXPECT_TRUE(actual_causes(d0().all_exogenous(), q0()).empty());
}

TEST(ActualCauses, ExogenousWitnessBlocksAllCauses) {
    // The witness {R(a3,a3), S(a3)} cannot be removed, so Q stays true.
    const Instance d = d0_with_exogenous({"S(a3)", "R(a3,a3)"});
    EXPECT_TRUE(actual_causes(d, q0()).empty());
    EXPECT_TRUE(actual_causes(d, q0(), brute).empty());
}

TEST(ActualCauses, ChainQueryOnEdges) {
    auto q = parse_query("q() :- E(X,Y), E(Y,Z).");
    CauseSet causes = actual_causes(closure_edges(), q);
    ASSERT_EQ(cause_tuples(causes), tset({"E(a,b)", "E(b,c)"}));
    for (const CauseReport& c : causes) EXPECT_EQ(c.responsibility, r(1));
}

TEST(ActualCauses, FalseQueryHasNoCauses) {
    EXPECT_TRUE(actual_causes(endo_rs({"R(a,b)"}), q0()).empty());
    EXPECT_EQ(responsibility(endo_rs({"R(a,b)"}), q0(), tup("R(a,b)")), r(0));
}

TEST(Contingencies, ReferenceInstance) {
    const ViolationView v = dc_to_view(k0());
    EXPECT_EQ(minimal_contingency_sets(d0(), v, tup("R(a2,a1)")),
              (std::set<ContingencySet>{tset({"R(a3,a3)"}), tset({"S(a3)"})}));
    EXPECT_TRUE(minimal_contingency_sets(d0(), v, tup("S(a2)")).empty());
    EXPECT_EQ(minimal_contingency_sets(endo_rs({"R(a,b)", "S(b)"}), v, tup("R(a,b)")),
              std::set<ContingencySet>{TupleSet{}});
}

TEST(Responsibility, Values) {
    EXPECT_EQ(responsibility(d0(), q0(), tup("S(a1)")), r(1, 2));
    EXPECT_EQ(responsibility(d0(), q0(), tup("R(a1,a4)")), r(0));
    EXPECT_EQ(responsibility(endo_rs({"R(a,b)", "S(b)"}), q0(), tup("S(b)")), r(1));
    EXPECT_EQ(responsibility(d0(), q0(), tup("S(a1)"), brute), r(1, 2));
    EXPECT_THROW(responsibility(d0(), q0(), tup("S(a9)")), DomainError);
}

TEST(Responsibility, ThirdsOnThreeWitnesses) {
    // Three disjoint witnesses: every cause needs two others removed.
    auto d = endo_rs({"R(a,a)", "S(a)", "R(b,b)", "S(b)", "R(c,c)", "S(c)"});
    EXPECT_EQ(responsibility(d, q0(), tup("S(b)")), r(1, 3));
    EXPECT_EQ(responsibility(d, q0(), tup("S(b)"), brute), r(1, 3));
}

TEST(MostResponsible, Cases) {
    const ViolationView v = dc_to_view(k0());
    EXPECT_EQ(most_responsible_causes(d0(), v), tset({"R(a2,a1)", "S(a1)", "R(a3,a3)", "S(a3)"}));
    EXPECT_TRUE(most_responsible_causes(endo_rs({"R(a,b)", "S(c)"}), v).empty());
    EXPECT_EQ(most_responsible_causes(endo_rs({"R(a,b)", "S(b)", "R(c,d)"}), v),
              tset({"R(a,b)", "S(b)"}));
    EXPECT_EQ(most_responsible_causes(endo_rs({"R(a,b)", "R(c,b)", "S(b)"}), v), tset({"S(b)"}));
}

TEST(Insertion, EndogenousTupleKeepsCauses) {
    auto d = endo_rs({"R(a,a)", "S(a)", "R(b,b)"});
    TupleSet before = cause_tuples(actual_causes(d, q0(), brute));
    TupleSet after = cause_tuples(actual_causes(d.with_endogenous(tup("S(b)")), q0(), brute));
    EXPECT_TRUE(is_subset(before, after));
}

TEST(Insertion, ExogenousTupleCanAddACause) {
    // Q already holds through R(a,a), S(a). The exogenous S(b) opens a second
    // witness whose only endogenous tuple R(b,b) becomes a cause (contingency
    // {R(a,a)}), so the cause set grows.
    auto d = endo_rs({"R(a,a)", "S(a)", "R(b,b)"});
    Instance grown = d.with_exogenous(tup("S(b)"));
    EXPECT_EQ(cause_tuples(actual_causes(d, q0(), brute)), tset({"R(a,a)", "S(a)"}));
    EXPECT_EQ(cause_tuples(actual_causes(grown, q0(), brute)), tset({"R(a,a)", "S(a)", "R(b,b)"}));
    EXPECT_EQ(minimal_contingency_sets(grown, dc_to_view(k0()), tup("R(b,b)")),
              (std::set<ContingencySet>{tset({"R(a,a)"}), tset({"S(a)"})}));
}

TEST(BruteForce, CapIsABudgetError) {
    CausalityOptions tiny{Engine::brute_force, {}};
    tiny.limits.brute_force_cap = 3;
    EXPECT_THROW(actual_causes(d0(), q0(), tiny), BudgetError);
}

} // namespace
} // namespace causelab
