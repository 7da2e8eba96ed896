#include <gtest/gtest.h>

#include "causelab/diagnosis.hpp"
#include "causelab/errors.hpp"
#include "causelab/oracle.hpp"
#include "helpers.hpp"

namespace causelab {
namespace {

using namespace test;

std::set<TupleSet> abnormal_sets(const std::set<Diagnosis>& ds) {
    std::set<TupleSet> out;
    for (const Diagnosis& d : ds) out.insert(d.abnormal);
    return out;
}

TEST(Problem, Construction) {
    DiagnosisProblem m = build_problem(d0(), q0());
    EXPECT_EQ(m.abnormal_scope, d0_tuples());
    EXPECT_FALSE(m.vacuous);
    EXPECT_TRUE(build_problem(endo_rs({"R(a,b)"}), q0()).vacuous);
    EXPECT_EQ(build_problem(d0_with_exogenous({"S(a1)", "S(a2)", "S(a3)"}), q0()).abnormal_scope,
              tset({"R(a1,a4)", "R(a2,a1)", "R(a3,a3)"}));
}

TEST(MinimalDiagnoses, ReferenceInstance) {
    std::set<TupleSet> expected{
        tset({"R(a2,a1)", "R(a3,a3)"}),
        tset({"R(a2,a1)", "S(a3)"}),
        tset({"S(a1)", "R(a3,a3)"}),
        tset({"S(a1)", "S(a3)"}),
    };
    EXPECT_EQ(abnormal_sets(minimal_diagnoses(build_problem(d0(), q0()))), expected);
    EXPECT_EQ(oracle::minimal_diagnoses(d0(), q0()), expected);
}

TEST(MinimalDiagnoses, EdgeCases) {
    EXPECT_EQ(abnormal_sets(minimal_diagnoses(build_problem(endo_rs({"R(a,b)"}), q0()))),
              std::set<TupleSet>{TupleSet{}});
    auto blocked = d0_with_exogenous({"R(a2,a1)", "S(a1)", "R(a3,a3)", "S(a3)"});
    EXPECT_TRUE(minimal_diagnoses(build_problem(blocked, q0())).empty());
}

TEST(IsDiagnosis, Checks) {
    DiagnosisProblem m = build_problem(d0(), q0());
    EXPECT_TRUE(is_diagnosis(m, tset({"S(a1)", "S(a3)"})));
    EXPECT_TRUE(is_diagnosis(m, tset({"S(a1)", "S(a3)", "S(a2)"})));
    EXPECT_FALSE(is_diagnosis(m, tset({"S(a1)"})));
}

TEST(Classes, DAndMcd) {
    DiagnosisProblem m = build_problem(d0(), q0());
    EXPECT_EQ(d_class(m, tup("R(a2,a1)")).size(), 2u);
    EXPECT_TRUE(d_class(m, tup("S(a2)")).empty());
    EXPECT_TRUE(d_class(m, tup("R(a1,a4)")).empty());
    EXPECT_EQ(abnormal_sets(mcd_class(m, tup("S(a1)"))),
              (std::set<TupleSet>{tset({"S(a1)", "R(a3,a3)"}), tset({"S(a1)", "S(a3)"})}));
    EXPECT_TRUE(mcd_class(m, tup("S(a2)")).empty());
    DiagnosisProblem single = build_problem(endo_rs({"R(a,b)", "S(b)"}), q0());
    EXPECT_EQ(abnormal_sets(d_class(single, tup("R(a,b)"))), std::set<TupleSet>{tset({"R(a,b)"})});
    DiagnosisProblem partial = build_problem(d0_with_exogenous({"S(a1)"}), q0());
    EXPECT_THROW(d_class(partial, tup("S(a1)")), DomainError);
}

TEST(CausesViaDiagnosis, MatchesDirectCauses) {
    CauseSet causes = causes_via_diagnosis(build_problem(d0(), q0()));
    EXPECT_EQ(causes, actual_causes(d0(), q0()));
    for (const CauseReport& c : causes) EXPECT_EQ(c.responsibility, r(1, 2));
    EXPECT_TRUE(causes_via_diagnosis(build_problem(endo_rs({"R(a,b)"}), q0())).empty());
    auto q = parse_query("q() :- E(X,Y), E(Y,Z).");
    CauseSet chain = causes_via_diagnosis(build_problem(closure_edges(), q));
    EXPECT_EQ(cause_tuples(chain), tset({"E(a,b)", "E(b,c)"}));
    for (const CauseReport& c : chain) EXPECT_EQ(c.responsibility, r(1));
}

} // namespace
} // namespace causelab
