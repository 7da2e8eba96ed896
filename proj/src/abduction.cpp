#include "causelab/abduction.hpp"

#include <algorithm>

#include "causelab/errors.hpp"
#include "causelab/hitting_sets.hpp"
#include "join.hpp"
#include "witness_family.hpp"

namespace causelab {

AbductionProblem::AbductionProblem(Unchecked, Program program, TupleSet edb, TupleSet hyp,
                                   TupleSet obs)
    : program_(std::move(program)), edb_(std::move(edb)), hyp_(std::move(hyp)),
      obs_(std::move(obs)) {}

AbductionProblem::AbductionProblem(Program program, TupleSet edb, TupleSet hyp, TupleSet obs)
    : AbductionProblem(Unchecked{}, std::move(program), std::move(edb), std::move(hyp),
                       std::move(obs)) {
    const std::set<std::string> heads = program_.head_predicates();
    for (const TupleSet* part : {&edb_, &hyp_})
        for (const Tuple& t : *part)
            if (heads.contains(t.relation))
                throw ValidationError("predicate " + t.relation +
                                      " is defined by a rule and also given as a fact");
    if (!explains(hyp_))
        throw ValidationError("observations " + to_string(obs_) +
                              " are not entailed by the program, EDB and hypotheses");
}

AbductionProblem AbductionProblem::for_causes(const Program& program, const Instance& instance) {
    return AbductionProblem(program, instance.exogenous(), instance.endogenous(),
                            TupleSet{program.answer()});
}

bool AbductionProblem::explains(const TupleSet& chosen) const {
    return entails(program_, set_union(edb_, chosen), obs_);
}

AbductionProblem AbductionProblem::without(const TupleSet& removed) const {
    return AbductionProblem(Unchecked{}, program_, edb_, set_difference(hyp_, removed), obs_);
}

namespace {

using Family = hs::SetFamily;

Family combine(const Family& left, const Family& right, const Limits& limits) {
    Family out;
    for (const hs::ElementSet& a : left) {
        for (const hs::ElementSet& b : right) {
            hs::ElementSet u;
            std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(u));
            out.push_back(std::move(u));
        }
        if (out.size() > limits.max_sets)
            throw BudgetError("abductive support enumeration exceeded " +
                              std::to_string(limits.max_sets) + " sets");
    }
    return hs::minimize(std::move(out));
}

struct GroundRule {
    Tuple head;
    std::vector<Tuple> body;
};

std::vector<GroundRule> ground(const Program& program, const TupleSet& model) {
    std::vector<GroundRule> out;
    detail::RelationView view(model);
    for (const Rule& rule : program.rules()) {
        detail::CompiledBody body = detail::compile_body(rule.body);
        detail::join(
            body, [&](std::size_t i) { return view[body.atoms[i].relation]; },
            [&](const detail::Binding& b, std::span<const Tuple* const> image) {
                GroundRule g{Tuple{rule.head.relation, {}}, {}};
                for (const Term& term : rule.head.terms)
                    g.head.constants.push_back(term.is_variable() ? *b[body.slot_of(term.name)]
                                                                  : term.name);
                for (const Tuple* t : image) g.body.push_back(*t);
                out.push_back(std::move(g));
                return true;
            });
    }
    return out;
}

} // namespace

std::set<TupleSet> abductive_solutions(const AbductionProblem& problem, const Limits& limits) {
    const detail::TupleIndex hyp_index(problem.hyp());
    const TupleSet model = least_model(problem.program(), set_union(problem.edb(), problem.hyp()));

    // Minimal hypothesis supports of every atom of the model. Base atoms
    // are supported by themselves (hypotheses) or by nothing (EDB).
    std::map<Tuple, Family> supports;
    for (const Tuple& t : model) {
        if (problem.edb().contains(t)) supports[t] = {{}};
        else if (problem.hyp().contains(t)) supports[t] = {{hyp_index.id(t)}};
    }
    const std::vector<GroundRule> rules = ground(problem.program(), model);
    for (bool changed = true; changed;) {
        changed = false;
        for (const GroundRule& rule : rules) {
            Family product{{}};
            for (const Tuple& atom : rule.body) {
                auto it = supports.find(atom);
                if (it == supports.end() || it->second.empty()) {
                    product.clear();
                    break;
                }
                product = combine(product, it->second, limits);
            }
            if (product.empty()) continue;
            Family& current = supports[rule.head];
            Family merged = current;
            merged.insert(merged.end(), product.begin(), product.end());
            merged = hs::minimize(std::move(merged));
            if (merged != current) {
                current = std::move(merged);
                changed = true;
            }
        }
    }

    Family explanations{{}};
    for (const Tuple& goal : problem.obs()) {
        auto it = supports.find(goal);
        if (it == supports.end()) return {};
        explanations = combine(explanations, it->second, limits);
    }
    std::set<TupleSet> out;
    for (const hs::ElementSet& e : explanations) out.insert(hyp_index.tuples(e));
    return out;
}

TupleSet relevant_hypotheses(const AbductionProblem& problem, const Limits& limits) {
    TupleSet out;
    for (const TupleSet& s : abductive_solutions(problem, limits)) out.insert(s.begin(), s.end());
    return out;
}

std::set<NecessarySet> necessary_sets(const AbductionProblem& problem, const Limits& limits) {
    const detail::TupleIndex hyp_index(problem.hyp());
    Family solutions;
    for (const TupleSet& s : abductive_solutions(problem, limits))
        solutions.push_back(hyp_index.ids(s));
    std::set<NecessarySet> out;
    for (const hs::ElementSet& n : hs::minimal_hitting_sets(solutions, limits))
        out.insert(hyp_index.tuples(n));
    return out;
}

std::vector<RankedHypothesis> rank_by_necessity(const AbductionProblem& problem,
                                                const Limits& limits) {
    std::map<Tuple, std::size_t> smallest;
    for (const NecessarySet& n : necessary_sets(problem, limits)) {
        for (const Tuple& t : n) {
            auto [it, inserted] = smallest.emplace(t, n.size());
            if (!inserted) it->second = std::min(it->second, n.size());
        }
    }
    std::vector<RankedHypothesis> out;
    for (const auto& [t, size] : smallest) out.push_back({t, size});
    std::stable_sort(out.begin(), out.end(), [](const RankedHypothesis& a, const RankedHypothesis& b) {
        return a.necessity < b.necessity;
    });
    return out;
}

std::map<Tuple, Rational> datalog_causes_by_definition(const Program& program,
                                                       const Instance& instance,
                                                       const Limits& limits) {
    const TupleSet goal{program.answer()};
    auto holds_without = [&](const TupleSet& removed) {
        return entails(program, set_difference(instance.tuples(), removed), goal);
    };
    if (!holds_without({})) return {};

    const std::vector<Tuple> endo(instance.endogenous().begin(), instance.endogenous().end());
    if (endo.size() > limits.brute_force_cap)
        throw BudgetError("contingency search refuses " + std::to_string(endo.size()) +
                          " endogenous tuples (cap " + std::to_string(limits.brute_force_cap) + ")");

    std::map<Tuple, Rational> out;
    for (std::size_t t = 0; t < endo.size(); ++t) {
        std::vector<std::size_t> others;
        for (std::size_t i = 0; i < endo.size(); ++i)
            if (i != t) others.push_back(i);
        // Contingency sets in increasing size; the first hit is a smallest one.
        bool found = false;
        for (std::size_t k = 0; k <= others.size() && !found; ++k) {
            std::vector<char> pick(others.size(), 0);
            std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), 1);
            do {
                TupleSet contingency;
                for (std::size_t i = 0; i < others.size(); ++i)
                    if (pick[i]) contingency.insert(endo[others[i]]);
                if (!holds_without(contingency)) continue;
                contingency.insert(endo[t]);
                if (holds_without(contingency)) continue;
                out.emplace(endo[t], Rational(1, static_cast<std::int64_t>(k + 1)));
                found = true;
            } while (!found && std::prev_permutation(pick.begin(), pick.end()));
        }
    }
    return out;
}

TupleSet datalog_actual_causes(const Program& program, const Instance& instance,
                               const Limits& limits) {
    TupleSet out;
    for (const auto& [t, rho] : datalog_causes_by_definition(program, instance, limits)) out.insert(t);
    return out;
}

Rational datalog_responsibility(const Program& program, const Instance& instance,
                                const Tuple& tuple, const Limits& limits) {
    if (!instance.is_endogenous(tuple))
        throw DomainError("tuple " + to_string(tuple) + " is not an endogenous tuple");
    if (!entails(program, instance.tuples(), TupleSet{program.answer()})) return Rational(0);
    const AbductionProblem problem = AbductionProblem::for_causes(program, instance);
    std::size_t smallest = 0;
    for (const NecessarySet& n : necessary_sets(problem, limits))
        if (n.contains(tuple) && (smallest == 0 || n.size() < smallest)) smallest = n.size();
    if (smallest == 0) return Rational(0);
    return Rational(1, static_cast<std::int64_t>(smallest));
}

} // namespace causelab
