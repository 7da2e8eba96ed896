#include "causelab/repairs.hpp"

#include <algorithm>

#include "causelab/errors.hpp"
#include "causelab/hitting_sets.hpp"
#include "witness_family.hpp"

namespace causelab {

std::set<TupleSet> removal_sets(const RepairSet& repairs) {
    std::set<TupleSet> out;
    for (const Repair& r : repairs) out.insert(r.removed);
    return out;
}

namespace {

std::vector<ConjunctiveQuery> violation_queries(const Instance& instance,
                                                std::span<const DenialConstraint> constraints) {
    std::vector<ConjunctiveQuery> out;
    for (const DenialConstraint& k : constraints) {
        instance.check(k.atoms());
        out.push_back(view_to_query(dc_to_view(k)));
    }
    return out;
}

RepairSet to_repairs(const Instance& instance, const std::set<TupleSet>& removals, RepairKind kind) {
    RepairSet out;
    for (const TupleSet& removed : removals)
        out.push_back({set_difference(instance.tuples(), removed), removed, kind});
    return out;
}

RepairSet repairs_from_family(const Instance& instance, const detail::WitnessFamily& family,
                              const Limits& limits) {
    std::set<TupleSet> removals;
    for (const hs::ElementSet& h : hs::minimal_hitting_sets(family.edges, limits))
        removals.insert(family.index.tuples(h));
    return to_repairs(instance, removals, RepairKind::subset);
}

RepairSet smallest(RepairSet repairs) {
    if (repairs.empty()) return repairs;
    std::size_t best = repairs.front().removed.size();
    for (const Repair& r : repairs) best = std::min(best, r.removed.size());
    RepairSet out;
    for (Repair& r : repairs) {
        if (r.removed.size() != best) continue;
        r.kind = RepairKind::cardinality;
        out.push_back(std::move(r));
    }
    return out;
}

// Candidate removal sets {t} u G and the cross-check every member of the set
// has to pass. `accept(t)` filters which causes may be removed.
template <class Accept>
std::set<TupleSet> removals_from_causes(const CauseSet& causes, Accept&& accept) {
    std::set<TupleSet> candidates;
    for (const CauseReport& r : causes) {
        if (!accept(r, nullptr)) continue;
        for (const ContingencySet& g : r.minimal_contingencies) {
            if (!accept(r, &g)) continue;
            TupleSet s = g;
            s.insert(r.cause);
            candidates.insert(std::move(s));
        }
    }
    std::set<TupleSet> out;
    for (const TupleSet& s : candidates) {
        bool ok = std::all_of(s.begin(), s.end(), [&](const Tuple& t) {
            const CauseReport* report = find_report(causes, t);
            if (!report) return false;
            TupleSet rest = s;
            rest.erase(t);
            return accept(*report, &rest) && report->minimal_contingencies.contains(rest);
        });
        if (ok) out.insert(s);
    }
    return out;
}

CauseSet violation_causes(const Instance& instance, const DenialConstraint& constraint,
                          const Limits& limits) {
    instance.check(constraint.atoms());
    CausalityOptions options;
    options.limits = limits;
    return actual_causes(instance.all_endogenous(), view_to_query(dc_to_view(constraint)), options);
}

} // namespace

RepairSet s_repairs(const Instance& instance, std::span<const DenialConstraint> constraints,
                    const Limits& limits) {
    std::vector<ConjunctiveQuery> queries = violation_queries(instance, constraints);
    return repairs_from_family(instance, detail::full_witness_family(instance, queries), limits);
}

RepairSet c_repairs(const Instance& instance, std::span<const DenialConstraint> constraints,
                    const Limits& limits) {
    return smallest(s_repairs(instance, constraints, limits));
}

RepairSet endogenous_s_repairs(const Instance& instance,
                               std::span<const DenialConstraint> constraints,
                               const Limits& limits) {
    std::vector<ConjunctiveQuery> queries = violation_queries(instance, constraints);
    return repairs_from_family(instance, detail::endogenous_witness_family(instance, queries),
                               limits);
}

DFClass df_class(const Instance& instance, const DenialConstraint& constraint, const Tuple& tuple,
                 const Limits& limits) {
    if (!instance.is_endogenous(tuple))
        throw DomainError("tuple " + to_string(tuple) + " is not an endogenous tuple");
    DFClass out;
    for (const Repair& r : s_repairs(instance, {&constraint, 1}, limits))
        if (r.removed.contains(tuple) && is_subset(r.removed, instance.endogenous()))
            out.member_sets.insert(r.removed);
    return out;
}

CauseSet causes_from_repairs(const Instance& instance, const ConjunctiveQuery& query,
                             const Limits& limits) {
    const DenialConstraint constraint = query_to_dc(query);
    const RepairSet repairs = s_repairs(instance, {&constraint, 1}, limits);
    CauseSet out;
    for (const Tuple& t : instance.endogenous()) {
        CauseReport report{t, {}, Rational(0)};
        std::size_t min_size = 0;
        for (const Repair& r : repairs) {
            if (!r.removed.contains(t) || !is_subset(r.removed, instance.endogenous())) continue;
            TupleSet rest = r.removed;
            rest.erase(t);
            report.minimal_contingencies.insert(std::move(rest));
            if (min_size == 0 || r.removed.size() < min_size) min_size = r.removed.size();
        }
        if (min_size == 0) continue;
        report.responsibility = Rational(1, static_cast<std::int64_t>(min_size));
        out.push_back(std::move(report));
    }
    return out;
}

RepairSet s_repairs_from_causes(const Instance& instance, const DenialConstraint& constraint,
                                const Limits& limits) {
    const CauseSet causes = violation_causes(instance, constraint, limits);
    if (causes.empty()) return to_repairs(instance, {TupleSet{}}, RepairKind::subset);
    auto any_cause = [](const CauseReport&, const ContingencySet*) { return true; };
    return to_repairs(instance, removals_from_causes(causes, any_cause), RepairKind::subset);
}

RepairSet c_repairs_from_mrc(const Instance& instance, const DenialConstraint& constraint,
                             const Limits& limits) {
    const CauseSet causes = violation_causes(instance, constraint, limits);
    if (causes.empty()) return to_repairs(instance, {TupleSet{}}, RepairKind::cardinality);
    Rational top(0);
    for (const CauseReport& r : causes) top = std::max(top, r.responsibility);
    auto most_responsible = [&](const CauseReport& r, const ContingencySet* g) {
        if (r.responsibility != top) return false;
        return !g || Rational(1, static_cast<std::int64_t>(g->size() + 1)) == top;
    };
    return to_repairs(instance, removals_from_causes(causes, most_responsible),
                      RepairKind::cardinality);
}

bool cqa_ground_atom(const Instance& instance, const DenialConstraint& constraint,
                     const Tuple& atom, const Limits& limits) {
    if (!instance.contains(atom))
        throw DomainError("atom " + to_string(atom) + " is not in the instance");
    return find_report(violation_causes(instance, constraint, limits), atom) == nullptr;
}

bool cqa_ground_atom(const Instance& instance, std::span<const DenialConstraint> constraints,
                     const Tuple& atom, const Limits& limits) {
    if (constraints.size() == 1) return cqa_ground_atom(instance, constraints.front(), atom, limits);
    if (!instance.contains(atom))
        throw DomainError("atom " + to_string(atom) + " is not in the instance");
    const RepairSet repairs = s_repairs(instance, constraints, limits);
    return std::all_of(repairs.begin(), repairs.end(),
                       [&](const Repair& r) { return r.kept.contains(atom); });
}

} // namespace causelab
