#pragma once

// Positive Datalog: programs, safety checking and least-model evaluation.

#include <set>
#include <string>
#include <vector>

#include "causelab/model.hpp"

namespace causelab {

struct Rule {
    Atom head;
    std::vector<Atom> body;

    friend bool operator==(const Rule&, const Rule&) = default;
};

std::string to_string(const Rule& rule);

/// A set of safe positive rules whose zero-ary answer predicate (default
/// "ans") carries the boolean result.
class Program {
public:
    /// ValidationError for an empty body or a head variable missing from
    /// the body.
    explicit Program(std::vector<Rule> rules, std::string answer_predicate = "ans");

    /// The single rule ans :- <query atoms>.
    static Program from_query(const ConjunctiveQuery& query, std::string answer_predicate = "ans");

    const std::vector<Rule>& rules() const noexcept { return rules_; }
    const std::string& answer_predicate() const noexcept { return answer_; }
    Tuple answer() const { return Tuple{answer_, {}}; }

    /// Predicates defined by some rule.
    std::set<std::string> head_predicates() const;

    friend bool operator==(const Program&, const Program&) = default;

private:
    std::vector<Rule> rules_;
    std::string answer_;
};

/// The atoms of the least model of program u facts that are not already in
/// `facts`. Semi-naive: after the first round every rule firing uses at
/// least one atom derived in the previous round.
TupleSet evaluate(const Program& program, const TupleSet& facts);

/// Least model including the input facts.
TupleSet least_model(const Program& program, const TupleSet& facts);

/// Program u facts |= every atom of `goals`.
bool entails(const Program& program, const TupleSet& facts, const TupleSet& goals);

} // namespace causelab
