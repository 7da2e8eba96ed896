#include "witness_family.hpp"

#include "causelab/errors.hpp"

namespace causelab::detail {

TupleIndex::TupleIndex(const TupleSet& tuples) : tuples_(tuples.begin(), tuples.end()) {
    for (std::size_t i = 0; i < tuples_.size(); ++i)
        ids_.emplace(tuples_[i], static_cast<hs::Element>(i));
}

hs::Element TupleIndex::id(const Tuple& tuple) const {
    auto it = ids_.find(tuple);
    if (it == ids_.end()) throw DomainError("tuple " + to_string(tuple) + " is not in the instance");
    return it->second;
}

hs::ElementSet TupleIndex::ids(const TupleSet& tuples) const {
    hs::ElementSet out;
    out.reserve(tuples.size());
    // Canonical order of TupleSet matches id order.
    for (const Tuple& t : tuples) out.push_back(id(t));
    return out;
}

TupleSet TupleIndex::tuples(const hs::ElementSet& ids) const {
    TupleSet out;
    for (hs::Element e : ids) out.insert(tuples_[e]);
    return out;
}

namespace {

WitnessFamily build(const Instance& instance, std::span<const ConjunctiveQuery> queries,
                    bool endogenous_only) {
    WitnessFamily family{TupleIndex(instance.tuples()), {}};
    for (const ConjunctiveQuery& q : queries) {
        for (const Witness& w : witnesses(instance, q)) {
            hs::ElementSet edge;
            for (const Tuple& t : w)
                if (!endogenous_only || instance.is_endogenous(t)) edge.push_back(family.index.id(t));
            family.edges.push_back(std::move(edge));
        }
    }
    return family;
}

} // namespace

WitnessFamily endogenous_witness_family(const Instance& instance,
                                        std::span<const ConjunctiveQuery> queries) {
    return build(instance, queries, true);
}

WitnessFamily full_witness_family(const Instance& instance,
                                  std::span<const ConjunctiveQuery> queries) {
    return build(instance, queries, false);
}

} // namespace causelab::detail
