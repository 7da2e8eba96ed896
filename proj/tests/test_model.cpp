#include <gtest/gtest.h>

#include <random>

#include "causelab/errors.hpp"
#include "causelab/oracle.hpp"
#include "helpers.hpp"

namespace causelab {
namespace {

using namespace test;

TEST(Instance, RejectsOverlapAndBadArity) {
    EXPECT_THROW(Instance(rs_schemas(), tset({"S(a)"}), tset({"S(a)"})), ValidationError);
    EXPECT_THROW(Instance(rs_schemas(), tset({"S(a,b)"}), {}), SchemaError);
    EXPECT_THROW(Instance(rs_schemas(), tset({"P(a)"}), {}), SchemaError);
    EXPECT_THROW(Instance({{"R", 0}}, {}, {}), ValidationError);
    EXPECT_THROW(Instance({{"R", 1}, {"R", 2}}, {}, {}), ValidationError);
}

TEST(Instance, PartitionHelpers) {
    const Instance d = d0_with_exogenous({"S(a1)", "S(a2)", "S(a3)"});
    EXPECT_EQ(d.endogenous().size(), 3u);
    EXPECT_EQ(d.exogenous().size(), 3u);
    EXPECT_EQ(d.tuples(), d0_tuples());
    EXPECT_EQ(d.all_endogenous(), d0());
    EXPECT_TRUE(d.all_exogenous().endogenous().empty());
    EXPECT_TRUE(d0().with_exogenous(tup("S(a4)")).exogenous().contains(tup("S(a4)")));
    EXPECT_THROW(d.with_endogenous(tup("S(a1)")), ValidationError);
    EXPECT_EQ(d0().with_endogenous(tup("S(a1)")), d0());
}

TEST(Queries, RejectEmptyBodies) {
    EXPECT_THROW(ConjunctiveQuery({}), ValidationError);
    EXPECT_THROW(DenialConstraint({}), ValidationError);
}

TEST(EvalBcq, ReferenceInstance) {
    EXPECT_TRUE(eval_bcq(d0(), q0()));
    EXPECT_FALSE(eval_bcq(TupleSet{}, q0()));
    TupleSet rest = set_difference(d0_tuples(), tset({"R(a2,a1)", "R(a3,a3)"}));
    EXPECT_FALSE(eval_bcq(rest, q0()));
}

TEST(EvalBcq, UnknownRelationIsRejectedAgainstInstance) {
    EXPECT_THROW(eval_bcq(d0(), parse_query("q() :- P(X).")), SchemaError);
    EXPECT_THROW(eval_bcq(d0(), parse_query("q() :- S(X,Y).")), SchemaError);
}

TEST(EvalBcq, ConstantsAndRepeatedVariables) {
    EXPECT_TRUE(eval_bcq(d0_tuples(), parse_query("q() :- R(X,X).")));
    EXPECT_FALSE(eval_bcq(d0_tuples(), parse_query("q() :- R(X,X), S(a2), R(a2,X), S(X), R(X,a4).")));
    EXPECT_TRUE(eval_bcq(d0_tuples(), parse_query("q() :- R(a1,Y).")));
    EXPECT_FALSE(eval_bcq(d0_tuples(), parse_query("q() :- R(Y,a2).")));
}

TEST(Witnesses, ReferenceInstance) {
    std::set<Witness> expected{tset({"R(a2,a1)", "S(a1)"}), tset({"R(a3,a3)", "S(a3)"})};
    EXPECT_EQ(witnesses(d0(), q0()), expected);
    EXPECT_TRUE(witnesses(TupleSet{}, q0()).empty());
    EXPECT_EQ(witnesses(tset({"R(a,a)", "S(a)"}), q0()),
              std::set<Witness>{tset({"R(a,a)", "S(a)"})});
}

TEST(Witnesses, NonMinimalImagesAreDropped) {
    // R(X,Y), R(Y,Z): the image {R(a,a)} makes {R(a,a), R(a,b)} non-minimal.
    auto q = parse_query("q() :- R(X,Y), R(Y,Z).");
    auto w = witnesses(tset({"R(a,a)", "R(a,b)", "R(b,c)"}), q);
    EXPECT_EQ(w, (std::set<Witness>{tset({"R(a,a)"}), tset({"R(a,b)", "R(b,c)"})}));
}

TEST(Constraints, Conversions) {
    const DenialConstraint k = k0();
    EXPECT_EQ(k.atoms(), q0().atoms());
    EXPECT_EQ(dc_to_view(k).atoms(), q0().atoms());
    EXPECT_EQ(view_to_query(dc_to_view(query_to_dc(q0()))), q0());
    EXPECT_FALSE(satisfies_dc(d0(), k));
    EXPECT_TRUE(satisfies_dc(TupleSet{}, k));
    EXPECT_TRUE(satisfies_dc(set_difference(d0_tuples(), tset({"S(a1)", "S(a3)"})), k));
}

// Random tuple sets over R/S with two or three constants.
TupleSet random_tuples(std::mt19937& rng) {
    const char* consts[] = {"a", "b", "c"};
    TupleSet out;
    std::bernoulli_distribution keep(0.35);
    for (const char* x : consts) {
        if (keep(rng)) out.insert({"S", {x}});
        for (const char* y : consts)
            if (keep(rng)) out.insert({"R", {x, y}});
    }
    return out;
}

ConjunctiveQuery random_query(std::mt19937& rng) {
    const char* vars[] = {"X", "Y", "Z", "a"};
    std::uniform_int_distribution<int> pick(0, 3);
    std::vector<Atom> atoms;
    for (int i = 0, n = 1 + pick(rng) % 3; i < n; ++i) {
        auto term = [&] {
            int v = pick(rng);
            return v == 3 ? Term::constant("a") : Term::variable(vars[v]);
        };
        if (pick(rng) % 2) atoms.push_back({"S", {term()}});
        else atoms.push_back({"R", {term(), term()}});
    }
    return ConjunctiveQuery(std::move(atoms));
}

TEST(Properties, WitnessesMatchSubsetOracle) {
    std::mt19937 rng(11);
    for (int i = 0; i < 300; ++i) {
        TupleSet t = random_tuples(rng);
        ConjunctiveQuery q = random_query(rng);
        auto w = witnesses(t, q);
        ASSERT_EQ(w, oracle::witnesses_by_subsets(t, q)) << to_string(t);
        ASSERT_EQ(eval_bcq(t, q), !w.empty());
    }
}

TEST(Properties, EvaluationIsMonotone) {
    std::mt19937 rng(12);
    for (int i = 0; i < 300; ++i) {
        TupleSet small = random_tuples(rng);
        TupleSet big = set_union(small, random_tuples(rng));
        ConjunctiveQuery q = random_query(rng);
        if (eval_bcq(small, q)) ASSERT_TRUE(eval_bcq(big, q));
    }
}

TEST(Properties, ConstraintViewDuality) {
    std::mt19937 rng(13);
    for (int i = 0; i < 300; ++i) {
        TupleSet t = random_tuples(rng);
        DenialConstraint k = query_to_dc(random_query(rng));
        ASSERT_NE(satisfies_dc(t, k), eval_bcq(t, view_to_query(dc_to_view(k))));
    }
}

} // namespace
} // namespace causelab
