#pragma once

#include <string>

#include "causelab/model.hpp"
#include "causelab/rational.hpp"
#include "causelab/text_format.hpp"

namespace causelab::test {

inline Tuple tup(std::string_view text) { return parse_ground_atom(text); }

inline TupleSet tset(std::initializer_list<std::string_view> atoms) {
    TupleSet out;
    for (std::string_view a : atoms) out.insert(tup(a));
    return out;
}

inline ConjunctiveQuery q0() { return parse_query("q() :- R(X,Y), S(Y)."); }
inline DenialConstraint k0() { return query_to_dc(q0()); }

inline std::vector<RelationSchema> rs_schemas() { return {{"R", 2}, {"S", 1}}; }

/// R = {(a1,a4),(a2,a1),(a3,a3)}, S = {(a1),(a2),(a3)}.
inline TupleSet d0_tuples() {
    return tset({"R(a1,a4)", "R(a2,a1)", "R(a3,a3)", "S(a1)", "S(a2)", "S(a3)"});
}

inline Instance d0() { return Instance(rs_schemas(), d0_tuples(), {}); }

/// D0 with `exo` moved to the exogenous side.
inline Instance d0_with_exogenous(std::initializer_list<std::string_view> exo) {
    return d0().make_exogenous(tset(exo));
}

inline Instance endo_rs(std::initializer_list<std::string_view> atoms) {
    return Instance(rs_schemas(), tset(atoms), {});
}

inline Instance closure_edges() {
    return Instance({{"E", 2}}, tset({"E(a,b)", "E(b,c)"}), {});
}

inline Rational r(std::int64_t n, std::int64_t d = 1) { return Rational(n, d); }

} // namespace causelab::test
