#include "causelab/oracle.hpp"

#include <cstdint>
#include <functional>
#include <vector>

#include "causelab/errors.hpp"

namespace causelab::oracle {

namespace {

constexpr std::size_t hard_cap = 24;

// Subset-minimal masks among those satisfying `keep`, for an upward-closed
// or arbitrary predicate alike.
std::vector<std::uint32_t> minimal_masks(std::size_t n, const std::function<bool(std::uint32_t)>& keep) {
    std::vector<std::uint32_t> hits;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask)
        if (keep(mask)) hits.push_back(mask);
    std::vector<std::uint32_t> out;
    for (std::uint32_t m : hits) {
        bool minimal = true;
        for (std::uint32_t o : hits)
            if (o != m && (o & m) == o) {
                minimal = false;
                break;
            }
        if (minimal) out.push_back(m);
    }
    return out;
}

TupleSet pick(const std::vector<Tuple>& items, std::uint32_t mask) {
    TupleSet out;
    for (std::size_t i = 0; i < items.size(); ++i)
        if (mask >> i & 1) out.insert(items[i]);
    return out;
}

void require_cap(std::size_t n, std::size_t cap, const char* what) {
    if (n > cap || n > hard_cap)
        throw BudgetError(std::string(what) + " oracle refuses " + std::to_string(n) + " elements");
}

} // namespace

std::set<Witness> witnesses_by_subsets(const TupleSet& tuples, const ConjunctiveQuery& query) {
    require_cap(tuples.size(), hard_cap, "witness");
    const std::vector<Tuple> items(tuples.begin(), tuples.end());
    std::set<Witness> out;
    for (std::uint32_t m : minimal_masks(items.size(), [&](std::uint32_t mask) {
             return eval_bcq(pick(items, mask), query);
         }))
        out.insert(pick(items, m));
    return out;
}

std::set<TupleSet> s_repair_removals(const Instance& instance,
                                     std::span<const DenialConstraint> constraints,
                                     const Limits& limits) {
    require_cap(instance.tuples().size(), limits.lattice_cap, "repair lattice");
    const std::vector<Tuple> items(instance.tuples().begin(), instance.tuples().end());
    auto consistent_after_removing = [&](std::uint32_t removed) {
        TupleSet kept;
        for (std::size_t i = 0; i < items.size(); ++i)
            if (!(removed >> i & 1)) kept.insert(items[i]);
        for (const DenialConstraint& k : constraints)
            if (!satisfies_dc(kept, k)) return false;
        return true;
    };
    // Maximal kept sets are exactly minimal removal sets.
    std::set<TupleSet> out;
    for (std::uint32_t m : minimal_masks(items.size(), consistent_after_removing))
        out.insert(pick(items, m));
    return out;
}

std::set<TupleSet> minimal_diagnoses(const Instance& instance, const ConjunctiveQuery& query,
                                     const Limits& limits) {
    require_cap(instance.endogenous().size(), limits.brute_force_cap, "diagnosis");
    const std::vector<Tuple> endo(instance.endogenous().begin(), instance.endogenous().end());
    std::set<TupleSet> out;
    for (std::uint32_t m : minimal_masks(endo.size(), [&](std::uint32_t mask) {
             return !eval_bcq(set_difference(instance.tuples(), pick(endo, mask)), query);
         }))
        out.insert(pick(endo, m));
    return out;
}

TupleSet naive_least_model(const Program& program, const TupleSet& facts) {
    TupleSet model = facts;
    for (;;) {
        TupleSet derived;
        for (const Rule& rule : program.rules()) {
            for_each_valuation(model, rule.body, [&](const Valuation& v, std::span<const Tuple* const>) {
                Tuple head{rule.head.relation, {}};
                for (const Term& t : rule.head.terms)
                    head.constants.push_back(t.is_variable() ? v.at(t.name) : t.name);
                derived.insert(std::move(head));
                return true;
            });
        }
        if (is_subset(derived, model)) return model;
        model.insert(derived.begin(), derived.end());
    }
}

std::set<TupleSet> abductive_solutions(const AbductionProblem& problem, const Limits& limits) {
    require_cap(problem.hyp().size(), limits.brute_force_cap, "abduction");
    const std::vector<Tuple> hyp(problem.hyp().begin(), problem.hyp().end());
    const TupleSet background = problem.edb();
    std::set<TupleSet> out;
    for (std::uint32_t m : minimal_masks(hyp.size(), [&](std::uint32_t mask) {
             TupleSet facts = set_union(background, pick(hyp, mask));
             return is_subset(problem.obs(), naive_least_model(problem.program(), facts));
         }))
        out.insert(pick(hyp, m));
    return out;
}

std::set<TupleSet> necessary_sets(const AbductionProblem& problem, const Limits& limits) {
    require_cap(problem.hyp().size(), limits.brute_force_cap, "necessary-set");
    const std::vector<Tuple> hyp(problem.hyp().begin(), problem.hyp().end());
    std::set<TupleSet> out;
    for (std::uint32_t m : minimal_masks(hyp.size(), [&](std::uint32_t mask) {
             return oracle::abductive_solutions(problem.without(pick(hyp, mask)), limits).empty();
         }))
        out.insert(pick(hyp, m));
    return out;
}

} // namespace causelab::oracle
