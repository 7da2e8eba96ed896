#pragma once

// Actual causes and responsibility for boolean conjunctive queries.
//
// A tuple t in Dn is a counterfactual cause for Q when D |= Q and
// D \ {t} |/= Q. It is an actual cause when some contingency set
// G ⊆ Dn makes it counterfactual in D \ G. Its responsibility is
// 1 / (1 + |G|) for a smallest such G, and 0 for non-causes.

#include <set>
#include <vector>

#include "causelab/limits.hpp"
#include "causelab/model.hpp"
#include "causelab/rational.hpp"

namespace causelab {

using ContingencySet = TupleSet;

struct CauseReport {
    Tuple cause;
    /// Every subset-minimal contingency set of the cause.
    std::set<ContingencySet> minimal_contingencies;
    Rational responsibility;

    friend bool operator==(const CauseReport&, const CauseReport&) = default;
};

/// Reports ordered by cause, one per actual cause.
using CauseSet = std::vector<CauseReport>;

TupleSet cause_tuples(const CauseSet& causes);
const CauseReport* find_report(const CauseSet& causes, const Tuple& tuple);

enum class Engine {
    /// Minimal hitting sets over the endogenous parts of the witnesses.
    witness,
    /// Enumerates every G ⊆ Dn. Refuses instances whose endogenous part
    /// exceeds Limits::brute_force_cap.
    brute_force,
};

struct CausalityOptions {
    Engine engine = Engine::witness;
    Limits limits;
};

/// DomainError unless t is an endogenous tuple of the instance.
bool is_counterfactual_cause(const Instance& instance, const ConjunctiveQuery& query,
                             const Tuple& tuple);

/// CS(Dn, Dx, Q) with contingency classes and responsibilities. Empty when
/// D |/= Q.
CauseSet actual_causes(const Instance& instance, const ConjunctiveQuery& query,
                       const CausalityOptions& options = {});

/// CT(D, Dn, V, t): the subset-minimal contingency sets of t for the view.
/// Empty when t is not a cause; {{}} when it is counterfactual.
std::set<ContingencySet> minimal_contingency_sets(const Instance& instance,
                                                  const ViolationView& view, const Tuple& tuple,
                                                  const CausalityOptions& options = {});

/// Exact responsibility of an endogenous tuple, 0 for non-causes. The
/// witness engine answers this without enumerating contingency classes.
Rational responsibility(const Instance& instance, const ConjunctiveQuery& query,
                        const Tuple& tuple, const CausalityOptions& options = {});

/// MRC(D, V): the causes of maximum responsibility.
TupleSet most_responsible_causes(const Instance& instance, const ViolationView& view,
                                 const CausalityOptions& options = {});

} // namespace causelab
