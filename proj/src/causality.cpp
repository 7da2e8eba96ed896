#include "causelab/causality.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "causelab/errors.hpp"
#include "causelab/hitting_sets.hpp"
#include "witness_family.hpp"

namespace causelab {

TupleSet cause_tuples(const CauseSet& causes) {
    TupleSet out;
    for (const CauseReport& r : causes) out.insert(r.cause);
    return out;
}

const CauseReport* find_report(const CauseSet& causes, const Tuple& tuple) {
    auto it = std::lower_bound(causes.begin(), causes.end(), tuple,
                               [](const CauseReport& r, const Tuple& t) { return r.cause < t; });
    if (it == causes.end() || it->cause != tuple) return nullptr;
    return &*it;
}

namespace {

void require_endogenous(const Instance& instance, const Tuple& tuple) {
    if (!instance.contains(tuple))
        throw DomainError("tuple " + to_string(tuple) + " is not in the instance");
    if (!instance.is_endogenous(tuple))
        throw DomainError("tuple " + to_string(tuple) + " is exogenous");
}

// A minimal hitting set H of the endogenous witness parts that contains t
// is exactly {t} u G for a minimal contingency set G of t.
CauseSet witness_engine(const Instance& instance, const ConjunctiveQuery& query,
                        const Limits& limits) {
    detail::WitnessFamily family = detail::endogenous_witness_family(instance, {&query, 1});
    if (family.edges.empty()) return {};
    hs::SetFamily transversals = hs::minimal_hitting_sets(family.edges, limits);

    std::map<hs::Element, CauseReport> reports;
    std::map<hs::Element, std::size_t> smallest;
    for (const hs::ElementSet& h : transversals) {
        for (hs::Element t : h) {
            CauseReport& report = reports[t];
            report.cause = family.index.tuple(t);
            hs::ElementSet rest;
            std::copy_if(h.begin(), h.end(), std::back_inserter(rest),
                         [t](hs::Element x) { return x != t; });
            report.minimal_contingencies.insert(family.index.tuples(rest));
            auto [it, inserted] = smallest.emplace(t, h.size());
            if (!inserted) it->second = std::min(it->second, h.size());
        }
    }
    CauseSet out;
    for (auto& [id, report] : reports) {
        report.responsibility = Rational(1, static_cast<std::int64_t>(smallest[id]));
        out.push_back(std::move(report));
    }
    return out;
}

// Evaluates Q on D \ G for every G ⊆ Dn, then reads causes straight off the
// definition.
CauseSet brute_force_engine(const Instance& instance, const ConjunctiveQuery& query,
                            const Limits& limits) {
    const std::vector<Tuple> endo(instance.endogenous().begin(), instance.endogenous().end());
    const std::size_t n = endo.size();
    if (n > limits.brute_force_cap || n >= 63)
        throw BudgetError("brute-force engine refuses " + std::to_string(n) +
                          " endogenous tuples (cap " + std::to_string(limits.brute_force_cap) + ")");
    const std::uint64_t subsets = std::uint64_t{1} << n;
    std::vector<char> holds(subsets, 0);
    for (std::uint64_t mask = 0; mask < subsets; ++mask) {
        TupleSet remaining = instance.exogenous();
        for (std::size_t i = 0; i < n; ++i)
            if (!(mask >> i & 1)) remaining.insert(endo[i]);
        holds[mask] = eval_bcq(remaining, query) ? 1 : 0;
    }

    CauseSet out;
    for (std::size_t t = 0; t < n; ++t) {
        const std::uint64_t bit = std::uint64_t{1} << t;
        std::vector<std::uint64_t> contingencies;
        for (std::uint64_t mask = 0; mask < subsets; ++mask)
            if (!(mask & bit) && holds[mask] && !holds[mask | bit]) contingencies.push_back(mask);
        if (contingencies.empty()) continue;

        CauseReport report;
        report.cause = endo[t];
        int min_size = std::numeric_limits<int>::max();
        for (std::uint64_t g : contingencies) {
            bool minimal = std::none_of(contingencies.begin(), contingencies.end(),
                                        [g](std::uint64_t o) { return o != g && (o & g) == o; });
            if (!minimal) continue;
            ContingencySet set;
            for (std::size_t i = 0; i < n; ++i)
                if (g >> i & 1) set.insert(endo[i]);
            report.minimal_contingencies.insert(std::move(set));
            min_size = std::min(min_size, __builtin_popcountll(g));
        }
        report.responsibility = Rational(1, 1 + min_size);
        out.push_back(std::move(report));
    }
    return out;
}

} // namespace

bool is_counterfactual_cause(const Instance& instance, const ConjunctiveQuery& query,
                             const Tuple& tuple) {
    instance.check(query.atoms());
    require_endogenous(instance, tuple);
    if (!eval_bcq(instance.tuples(), query)) return false;
    TupleSet without = instance.tuples();
    without.erase(tuple);
    return !eval_bcq(without, query);
}

CauseSet actual_causes(const Instance& instance, const ConjunctiveQuery& query,
                       const CausalityOptions& options) {
    instance.check(query.atoms());
    switch (options.engine) {
    case Engine::brute_force:
        return brute_force_engine(instance, query, options.limits);
    case Engine::witness:
        break;
    }
    return witness_engine(instance, query, options.limits);
}

std::set<ContingencySet> minimal_contingency_sets(const Instance& instance,
                                                  const ViolationView& view, const Tuple& tuple,
                                                  const CausalityOptions& options) {
    require_endogenous(instance, tuple);
    CauseSet causes = actual_causes(instance, view_to_query(view), options);
    const CauseReport* report = find_report(causes, tuple);
    return report ? report->minimal_contingencies : std::set<ContingencySet>{};
}

Rational responsibility(const Instance& instance, const ConjunctiveQuery& query,
                        const Tuple& tuple, const CausalityOptions& options) {
    instance.check(query.atoms());
    require_endogenous(instance, tuple);
    if (options.engine == Engine::brute_force) {
        CauseSet causes = actual_causes(instance, query, options);
        const CauseReport* report = find_report(causes, tuple);
        return report ? report->responsibility : Rational(0);
    }

    // G must hit every witness avoiding t while missing some witness W that
    // contains t; minimise over the choice of W.
    detail::WitnessFamily family = detail::endogenous_witness_family(instance, {&query, 1});
    const hs::Element t = family.index.id(tuple);
    hs::SetFamily edges = hs::minimize(family.edges);
    hs::SetFamily avoiding;
    for (const hs::ElementSet& e : edges)
        if (!hs::contains(e, t)) avoiding.push_back(e);

    std::optional<std::size_t> best;
    for (const hs::ElementSet& e : edges) {
        if (!hs::contains(e, t)) continue;
        std::optional<std::size_t> size = hs::minimum_hitting_set_size(avoiding, e);
        if (size && (!best || *size < *best)) best = size;
    }
    if (!best) return Rational(0);
    return Rational(1, static_cast<std::int64_t>(*best + 1));
}

TupleSet most_responsible_causes(const Instance& instance, const ViolationView& view,
                                 const CausalityOptions& options) {
    CauseSet causes = actual_causes(instance, view_to_query(view), options);
    Rational top(0);
    for (const CauseReport& r : causes) top = std::max(top, r.responsibility);
    TupleSet out;
    for (const CauseReport& r : causes)
        if (r.responsibility == top) out.insert(r.cause);
    return out;
}

} // namespace causelab
