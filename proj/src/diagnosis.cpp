#include "causelab/diagnosis.hpp"

#include <algorithm>
#include <optional>

#include "causelab/errors.hpp"

namespace causelab {

DiagnosisProblem build_problem(const Instance& instance, const ConjunctiveQuery& query) {
    instance.check(query.atoms());
    return DiagnosisProblem{instance, query, instance.endogenous(),
                            !eval_bcq(instance.tuples(), query)};
}

bool is_diagnosis(const DiagnosisProblem& problem, const TupleSet& abnormal) {
    if (!is_subset(abnormal, problem.abnormal_scope)) return false;
    return !eval_bcq(set_difference(problem.instance.tuples(), abnormal), problem.observation);
}

namespace {

// Endogenous part of some valuation of the observation into `remaining`, or
// nullopt when the observation is already false there.
std::optional<TupleSet> conflict(const DiagnosisProblem& problem, const TupleSet& remaining) {
    std::optional<TupleSet> out;
    for_each_valuation(remaining, problem.observation.atoms(),
                       [&](const Valuation&, std::span<const Tuple* const> image) {
                           TupleSet c;
                           for (const Tuple* t : image)
                               if (problem.abnormal_scope.contains(*t)) c.insert(*t);
                           out = std::move(c);
                           return false;
                       });
    return out;
}

void require_in_scope(const DiagnosisProblem& problem, const Tuple& tuple) {
    if (!problem.abnormal_scope.contains(tuple))
        throw DomainError("tuple " + to_string(tuple) + " is not an endogenous tuple");
}

} // namespace

std::set<Diagnosis> minimal_diagnoses(const DiagnosisProblem& problem, const Limits& limits) {
    if (problem.vacuous) return {Diagnosis{}};

    std::vector<TupleSet> found;
    std::set<TupleSet> level{TupleSet{}};
    std::set<TupleSet> seen = level;
    while (!level.empty()) {
        std::set<TupleSet> next;
        for (const TupleSet& path : level) {
            bool closed = std::any_of(found.begin(), found.end(),
                                      [&](const TupleSet& d) { return is_subset(d, path); });
            if (closed) continue;
            std::optional<TupleSet> label =
                conflict(problem, set_difference(problem.instance.tuples(), path));
            if (!label) {
                found.push_back(path);
                continue;
            }
            // An empty label is a valuation no abnormality flag can break.
            for (const Tuple& t : *label) {
                TupleSet child = path;
                child.insert(t);
                if (seen.insert(child).second) next.insert(std::move(child));
            }
            if (seen.size() > limits.max_sets)
                throw BudgetError("diagnosis search exceeded " + std::to_string(limits.max_sets) +
                                  " nodes");
        }
        level = std::move(next);
    }

    std::set<Diagnosis> out;
    for (TupleSet& d : found) out.insert(Diagnosis{std::move(d)});
    return out;
}

std::set<Diagnosis> d_class(const DiagnosisProblem& problem, const Tuple& tuple,
                            const Limits& limits) {
    require_in_scope(problem, tuple);
    std::set<Diagnosis> out;
    for (const Diagnosis& d : minimal_diagnoses(problem, limits))
        if (d.abnormal.contains(tuple)) out.insert(d);
    return out;
}

std::set<Diagnosis> mcd_class(const DiagnosisProblem& problem, const Tuple& tuple,
                              const Limits& limits) {
    std::set<Diagnosis> containing = d_class(problem, tuple, limits);
    if (containing.empty()) return {};
    std::size_t least = containing.begin()->abnormal.size();
    for (const Diagnosis& d : containing) least = std::min(least, d.abnormal.size());
    std::set<Diagnosis> out;
    for (const Diagnosis& d : containing)
        if (d.abnormal.size() == least) out.insert(d);
    return out;
}

CauseSet causes_via_diagnosis(const DiagnosisProblem& problem, const Limits& limits) {
    const std::set<Diagnosis> all = minimal_diagnoses(problem, limits);
    CauseSet out;
    for (const Tuple& t : problem.abnormal_scope) {
        CauseReport report{t, {}, Rational(0)};
        std::size_t least = 0;
        for (const Diagnosis& d : all) {
            if (!d.abnormal.contains(t)) continue;
            TupleSet rest = d.abnormal;
            rest.erase(t);
            report.minimal_contingencies.insert(std::move(rest));
            if (least == 0 || d.abnormal.size() < least) least = d.abnormal.size();
        }
        if (least == 0) continue;
        report.responsibility = Rational(1, static_cast<std::int64_t>(least));
        out.push_back(std::move(report));
    }
    return out;
}

} // namespace causelab
