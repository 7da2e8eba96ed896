#include "causelab/datalog.hpp"

#include <algorithm>

#include "causelab/errors.hpp"
#include "join.hpp"

namespace causelab {

std::string to_string(const Rule& rule) {
    std::string out = to_string(rule.head) + " :- ";
    for (std::size_t i = 0; i < rule.body.size(); ++i) {
        if (i) out += ", ";
        out += to_string(rule.body[i]);
    }
    return out + ".";
}

Program::Program(std::vector<Rule> rules, std::string answer_predicate)
    : rules_(std::move(rules)), answer_(std::move(answer_predicate)) {
    for (const Rule& rule : rules_) {
        if (rule.body.empty()) throw ValidationError("rule " + to_string(rule) + " has an empty body");
        for (const Term& term : rule.head.terms) {
            if (!term.is_variable()) continue;
            bool bound = std::any_of(rule.body.begin(), rule.body.end(), [&](const Atom& a) {
                return std::find(a.terms.begin(), a.terms.end(), term) != a.terms.end();
            });
            if (!bound)
                throw ValidationError("unsafe rule " + to_string(rule) + ": head variable " +
                                      term.name + " does not occur in the body");
        }
    }
}

Program Program::from_query(const ConjunctiveQuery& query, std::string answer_predicate) {
    Rule rule{Atom{answer_predicate, {}}, query.atoms()};
    return Program({std::move(rule)}, std::move(answer_predicate));
}

std::set<std::string> Program::head_predicates() const {
    std::set<std::string> out;
    for (const Rule& r : rules_) out.insert(r.head.relation);
    return out;
}

namespace {

struct CompiledRule {
    const Rule* rule;
    detail::CompiledBody body;
    std::vector<int> head_slots;
    /// Body positions whose predicate is defined by some rule.
    std::vector<std::size_t> derived_positions;
};

Tuple instantiate(const CompiledRule& rule, const detail::Binding& binding) {
    Tuple head{rule.rule->head.relation, {}};
    for (std::size_t k = 0; k < rule.head_slots.size(); ++k) {
        int slot = rule.head_slots[k];
        head.constants.push_back(slot < 0 ? rule.rule->head.terms[k].name : *binding[slot]);
    }
    return head;
}

} // namespace

TupleSet least_model(const Program& program, const TupleSet& facts) {
    const std::set<std::string> derived = program.head_predicates();
    std::vector<CompiledRule> rules;
    for (const Rule& r : program.rules()) {
        CompiledRule c{&r, detail::compile_body(r.body), {}, {}};
        for (const Term& term : r.head.terms)
            c.head_slots.push_back(term.is_variable() ? c.body.slot_of(term.name) : -1);
        for (std::size_t i = 0; i < r.body.size(); ++i)
            if (derived.contains(r.body[i].relation)) c.derived_positions.push_back(i);
        rules.push_back(std::move(c));
    }

    TupleSet model = facts;
    TupleSet delta;
    {
        detail::RelationView full(model);
        for (const CompiledRule& rule : rules) {
            detail::join(
                rule.body, [&](std::size_t i) { return full[rule.body.atoms[i].relation]; },
                [&](const detail::Binding& b, std::span<const Tuple* const>) {
                    Tuple head = instantiate(rule, b);
                    if (!model.contains(head)) delta.insert(std::move(head));
                    return true;
                });
        }
    }
    model.insert(delta.begin(), delta.end());

    while (!delta.empty()) {
        TupleSet fresh;
        detail::RelationView full(model);
        detail::RelationView recent(delta);
        for (const CompiledRule& rule : rules) {
            for (std::size_t pivot : rule.derived_positions) {
                auto source = [&](std::size_t i) {
                    const std::string& rel = rule.body.atoms[i].relation;
                    return i == pivot ? recent[rel] : full[rel];
                };
                detail::join(rule.body, source,
                             [&](const detail::Binding& b, std::span<const Tuple* const>) {
                                 Tuple head = instantiate(rule, b);
                                 if (!model.contains(head)) fresh.insert(std::move(head));
                                 return true;
                             });
            }
        }
        model.insert(fresh.begin(), fresh.end());
        delta = std::move(fresh);
    }
    return model;
}

TupleSet evaluate(const Program& program, const TupleSet& facts) {
    return set_difference(least_model(program, facts), facts);
}

bool entails(const Program& program, const TupleSet& facts, const TupleSet& goals) {
    if (is_subset(goals, facts)) return true;
    return is_subset(goals, least_model(program, facts));
}

} // namespace causelab
