#pragma once

#include <map>
#include <span>
#include <vector>

#include "causelab/hitting_sets.hpp"
#include "causelab/model.hpp"

namespace causelab::detail {

/// Dense ids for a fixed tuple set, in canonical order.
class TupleIndex {
public:
    TupleIndex() = default;
    explicit TupleIndex(const TupleSet& tuples);

    hs::Element id(const Tuple& tuple) const;
    const Tuple& tuple(hs::Element id) const { return tuples_[id]; }
    std::size_t size() const noexcept { return tuples_.size(); }

    hs::ElementSet ids(const TupleSet& tuples) const;
    TupleSet tuples(const hs::ElementSet& ids) const;

private:
    std::vector<Tuple> tuples_;
    std::map<Tuple, hs::Element> ids_;
};

struct WitnessFamily {
    TupleIndex index;
    /// One edge per witness. An empty edge means some witness cannot be
    /// broken by the removable tuples.
    hs::SetFamily edges;
};

/// Witnesses of every query in D, restricted to the endogenous tuples.
WitnessFamily endogenous_witness_family(const Instance& instance,
                                        std::span<const ConjunctiveQuery> queries);

/// Witnesses of every query in D, with every tuple removable.
WitnessFamily full_witness_family(const Instance& instance,
                                  std::span<const ConjunctiveQuery> queries);

} // namespace causelab::detail
