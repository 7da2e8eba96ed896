#pragma once

// Definition-level oracles. Each one enumerates a subset lattice directly
// and shares no search code with the engines it is used to check. They are
// exponential by construction and refuse inputs above their caps.

#include <set>
#include <span>

#include "causelab/abduction.hpp"
#include "causelab/datalog.hpp"
#include "causelab/limits.hpp"
#include "causelab/model.hpp"

namespace causelab::oracle {

/// Minimal W ⊆ tuples with W |= query, by subset enumeration.
std::set<Witness> witnesses_by_subsets(const TupleSet& tuples, const ConjunctiveQuery& query);

/// Removal sets of the subset-maximal consistent sub-instances, by walking
/// the lattice of sub-instances. |D| is capped by Limits::lattice_cap.
std::set<TupleSet> s_repair_removals(const Instance& instance,
                                     std::span<const DenialConstraint> constraints,
                                     const Limits& limits = {});

/// Minimal Δ ⊆ Dn with D \ Δ |/= query.
std::set<TupleSet> minimal_diagnoses(const Instance& instance, const ConjunctiveQuery& query,
                                     const Limits& limits = {});

/// Least model by naive iteration: every round re-fires every rule on the
/// whole model.
TupleSet naive_least_model(const Program& program, const TupleSet& facts);

/// Minimal Δ ⊆ Hyp explaining the observations, by subset enumeration.
std::set<TupleSet> abductive_solutions(const AbductionProblem& problem, const Limits& limits = {});

/// Minimal N ⊆ Hyp such that the problem without N has no solution.
std::set<TupleSet> necessary_sets(const AbductionProblem& problem, const Limits& limits = {});

} // namespace causelab::oracle
