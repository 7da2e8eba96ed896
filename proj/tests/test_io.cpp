#include <gtest/gtest.h>

#include <random>

#include "causelab/causality.hpp"
#include "causelab/cross_check.hpp"
#include "causelab/diagnosis.hpp"
#include "causelab/errors.hpp"
#include "causelab/json_io.hpp"
#include "causelab/repairs.hpp"
#include "helpers.hpp"

namespace causelab {
namespace {

using namespace test;

TEST(Rationals, Text) {
    EXPECT_EQ(to_string(r(0)), "0");
    EXPECT_EQ(to_string(r(1)), "1");
    EXPECT_EQ(to_string(r(2, 6)), "1/3");
    EXPECT_EQ(parse_rational("1/2"), r(1, 2));
    EXPECT_EQ(parse_rational("1"), r(1));
    EXPECT_THROW(parse_rational("1/0"), ParseError);
    EXPECT_THROW(parse_rational("x"), ParseError);
}

TEST(TextFormat, Queries) {
    ConjunctiveQuery q = parse_query("% comment\nq() :- R(X, \"a b\"), S(_y).");
    ASSERT_EQ(q.atoms().size(), 2u);
    EXPECT_TRUE(q.atoms()[0].terms[0].is_variable());
    EXPECT_FALSE(q.atoms()[0].terms[1].is_variable());
    EXPECT_EQ(q.atoms()[0].terms[1].name, "a b");
    EXPECT_TRUE(q.atoms()[1].terms[0].is_variable());
    EXPECT_THROW(parse_query("q() :- R(X,Y). q() :- S(X)."), ParseError);
    EXPECT_THROW(parse_query(":- R(X,Y)."), ParseError);
}

TEST(TextFormat, ErrorsCarryPositions) {
    try {
        parse_query("q() :- R(X,Y),\n  S(Y");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 2u);
        EXPECT_GT(e.column(), 0u);
    }
}

TEST(TextFormat, ConstraintsAndAtoms) {
    auto ks = parse_constraints(":- R(X,Y), S(Y).\n:- S(a).\n");
    ASSERT_EQ(ks.size(), 2u);
    EXPECT_EQ(ks[0], k0());
    EXPECT_THROW(parse_constraints(""), ParseError);
    EXPECT_EQ(parse_ground_atom("R(a1,a4)."), (Tuple{"R", {"a1", "a4"}}));
    EXPECT_EQ(parse_ground_atom("ans"), (Tuple{"ans", {}}));
    EXPECT_THROW(parse_ground_atom("R(X,a)"), ParseError);
    EXPECT_THROW(read_file("/nonexistent/file.dl"), ParseError);
}

TEST(Json, InstanceErrors) {
    EXPECT_THROW(parse_instance("{\"schemas\": ["), ParseError);
    EXPECT_THROW(parse_instance(R"({"schemas":[{"name":"S","arity":1}],"endogenous":[["S","a","b"]]})"),
                 ParseError);
    EXPECT_THROW(parse_instance(R"({"schemas":[{"name":"S","arity":1}],"endogenous":[["S","a"]],"exogenous":[["S","a"]]})"),
                 ValidationError);
    Instance d = parse_instance(fixtures::example_instance);
    EXPECT_EQ(d, d0());
    EXPECT_EQ(d.endogenous().size(), 6u);
    try {
        parse_instance("{\n  \"schemas\": ]\n}");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 2u);
    }
}

TEST(Json, OutputShapes) {
    EXPECT_EQ(dump(encode(tup("S(a1)"))), R"(["S","a1"])");
    CauseSet causes = actual_causes(endo_rs({"R(a,b)", "S(b)"}), q0());
    EXPECT_EQ(dump(encode(causes)),
              R"([{"tuple":["R","a","b"],"responsibility":"1","min_contingencies":[[]]},)"
              R"({"tuple":["S","b"],"responsibility":"1","min_contingencies":[[]]}])");
    Repair rep{tset({"R(a,b)"}), tset({"S(b)"}), RepairKind::subset};
    EXPECT_EQ(dump(encode(rep)), R"({"kind":"S","removed":[["S","b"]]})");
}

TEST(Json, RoundTrips) {
    std::mt19937 rng(3);
    CaseGenerator gen(17, 7);
    for (int i = 0; i < 150; ++i) {
        RandomCase c = gen.next();
        const Instance& d = c.instance;
        ASSERT_EQ(parse_instance(dump(encode(d))), d);
        CauseSet causes = actual_causes(d, c.query);
        ASSERT_EQ(decode_cause_set(parse_json(dump(encode(causes)))), causes);
        for (const Repair& rep : s_repairs(d, std::vector<DenialConstraint>{query_to_dc(c.query)}))
            ASSERT_EQ(decode_repair(parse_json(dump(encode(rep))), d), rep);
        for (const Diagnosis& x : minimal_diagnoses(build_problem(d, c.query)))
            ASSERT_EQ(decode_diagnosis(parse_json(dump(encode(x)))), x);
        std::set<TupleSet> sets;
        for (const Witness& w : witnesses(d, c.query)) sets.insert(w);
        ASSERT_EQ(decode_tuple_sets(parse_json(dump(encode(sets)))), sets);
    }
}

TEST(TextFormat, QueryTextRoundTrip) {
    CaseGenerator gen(23, 6);
    for (int i = 0; i < 150; ++i) {
        RandomCase c = gen.next();
        std::string text = "q() :- ";
        for (std::size_t k = 0; k < c.query.atoms().size(); ++k)
            text += (k ? ", " : "") + to_string(c.query.atoms()[k]);
        ASSERT_EQ(parse_query(text + "."), c.query) << text;
    }
}

} // namespace
} // namespace causelab
