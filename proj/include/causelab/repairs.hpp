#pragma once

// Subset and cardinality repairs of an instance with respect to denial
// constraints, and the constructions that move between repairs and causes.
//
// Repairs only delete tuples: denial constraints are anti-monotone, so an
// insertion can never restore consistency.

#include <set>
#include <span>
#include <vector>

#include "causelab/causality.hpp"
#include "causelab/limits.hpp"
#include "causelab/model.hpp"

namespace causelab {

enum class RepairKind { subset, cardinality };

struct Repair {
    TupleSet kept;
    TupleSet removed;
    RepairKind kind = RepairKind::subset;

    friend bool operator==(const Repair&, const Repair&) = default;
};

/// Ordered by removal set.
using RepairSet = std::vector<Repair>;

/// Removal sets of a repair set, for comparisons across constructions.
std::set<TupleSet> removal_sets(const RepairSet& repairs);

/// DF(D, Dn, k, t): removal sets of S-repairs that contain t and lie inside Dn.
struct DFClass {
    std::set<TupleSet> member_sets;

    friend bool operator==(const DFClass&, const DFClass&) = default;
};

/// Every subset-maximal consistent sub-instance. The pooled witnesses of all
/// violation views are hit minimally.
RepairSet s_repairs(const Instance& instance, std::span<const DenialConstraint> constraints,
                    const Limits& limits = {});

/// The S-repairs with the fewest removed tuples.
RepairSet c_repairs(const Instance& instance, std::span<const DenialConstraint> constraints,
                    const Limits& limits = {});

/// S-repairs that delete endogenous tuples only; empty when no such repair
/// exists.
RepairSet endogenous_s_repairs(const Instance& instance,
                               std::span<const DenialConstraint> constraints,
                               const Limits& limits = {});

DFClass df_class(const Instance& instance, const DenialConstraint& constraint, const Tuple& tuple,
                 const Limits& limits = {});

/// Causes and responsibilities read off the DF classes alone: t is a cause
/// iff DF(t) is nonempty, and rho(t) = 1/|s| for a smallest s in DF(t).
CauseSet causes_from_repairs(const Instance& instance, const ConjunctiveQuery& query,
                             const Limits& limits = {});

/// S-repairs rebuilt from the causes and contingency classes of the
/// violation view, with every tuple treated as endogenous.
RepairSet s_repairs_from_causes(const Instance& instance, const DenialConstraint& constraint,
                                const Limits& limits = {});

/// C-repairs rebuilt from the most responsible causes of the violation view.
/// Each removed tuple must be most responsible and the rest of the removal
/// set must be one of its minimum-size contingency sets.
RepairSet c_repairs_from_mrc(const Instance& instance, const DenialConstraint& constraint,
                             const Limits& limits = {});

/// D |=_S A for a ground atom A of D: A is not a cause of the violation
/// view. DomainError if A is not in D.
bool cqa_ground_atom(const Instance& instance, const DenialConstraint& constraint,
                     const Tuple& atom, const Limits& limits = {});

/// Several constraints: A belongs to every S-repair.
bool cqa_ground_atom(const Instance& instance, std::span<const DenialConstraint> constraints,
                     const Tuple& atom, const Limits& limits = {});

} // namespace causelab
