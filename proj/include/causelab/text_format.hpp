#pragma once

// Datalog-style concrete syntax shared by queries, constraints and programs:
//
//   q() :- R(X,Y), S(Y).      boolean conjunctive query
//   :- R(X,Y), S(Y).          denial constraint
//   T(X,Y) :- E(X,Z), T(Z,Y). program rule
//
// Terms starting with an uppercase letter or '_' are variables; anything
// else, including double-quoted strings, is a constant. '%' starts a
// comment that runs to the end of the line.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "causelab/datalog.hpp"
#include "causelab/model.hpp"

namespace causelab {

struct ParsedClause {
    /// Absent for denial constraints.
    std::optional<Atom> head;
    std::vector<Atom> body;
    std::size_t line = 0;
};

/// ParseError with line and column on malformed input.
std::vector<ParsedClause> parse_clauses(std::string_view text);

/// Exactly one clause with a zero-ary head.
ConjunctiveQuery parse_query(std::string_view text);

/// One or more headless clauses.
std::vector<DenialConstraint> parse_constraints(std::string_view text);

Program parse_program(std::string_view text, const std::string& answer_predicate = "ans");

/// R(a1,a4), S("x y") or a bare zero-ary name such as ans.
Tuple parse_ground_atom(std::string_view text);

/// Reads a whole file; ParseError when it cannot be opened.
std::string read_file(const std::string& path);

} // namespace causelab
