#pragma once

// Datalog abduction problems <Program, EDB, Hyp, Obs> and the causes and
// responsibilities of Datalog answers they induce.

#include <map>
#include <set>
#include <vector>

#include "causelab/datalog.hpp"
#include "causelab/limits.hpp"
#include "causelab/model.hpp"
#include "causelab/rational.hpp"

namespace causelab {

/// A minimal set of hypotheses whose removal leaves no solution.
using NecessarySet = TupleSet;

class AbductionProblem {
public:
    /// ValidationError when a rule head predicate occurs among the EDB or
    /// hypothesis atoms, or when Program u EDB u Hyp does not entail Obs.
    AbductionProblem(Program program, TupleSet edb, TupleSet hyp, TupleSet obs);

    /// <Program, Dx, Dn, {ans}>.
    static AbductionProblem for_causes(const Program& program, const Instance& instance);

    const Program& program() const noexcept { return program_; }
    const TupleSet& edb() const noexcept { return edb_; }
    const TupleSet& hyp() const noexcept { return hyp_; }
    const TupleSet& obs() const noexcept { return obs_; }

    /// Program u EDB u chosen |= Obs.
    bool explains(const TupleSet& chosen) const;

    /// The same problem with `removed` taken out of the hypotheses, without
    /// the entailment check (the result may have no solution).
    AbductionProblem without(const TupleSet& removed) const;

private:
    struct Unchecked {};
    AbductionProblem(Unchecked, Program program, TupleSet edb, TupleSet hyp, TupleSet obs);

    Program program_;
    TupleSet edb_;
    TupleSet hyp_;
    TupleSet obs_;
};

/// Sol(AP): the subset-minimal explanations. Computed by propagating the
/// minimal hypothesis supports of every derivable atom up the ground rules.
std::set<TupleSet> abductive_solutions(const AbductionProblem& problem, const Limits& limits = {});

/// Rel(AP): hypotheses occurring in some solution.
TupleSet relevant_hypotheses(const AbductionProblem& problem, const Limits& limits = {});

/// Minimal hypothesis sets whose removal leaves Sol empty: the minimal
/// hitting sets of Sol(AP).
std::set<NecessarySet> necessary_sets(const AbductionProblem& problem, const Limits& limits = {});

struct RankedHypothesis {
    Tuple hypothesis;
    /// Size of the smallest necessary set containing the hypothesis.
    std::size_t necessity = 0;

    friend bool operator==(const RankedHypothesis&, const RankedHypothesis&) = default;
};

/// Relevant hypotheses, most necessary (smallest necessary set) first, ties
/// in canonical order.
std::vector<RankedHypothesis> rank_by_necessity(const AbductionProblem& problem,
                                                const Limits& limits = {});

/// Actual causes of the answer predicate by the contingency definition,
/// lifted to Datalog entailment: t is a cause when some G ⊆ Dn has
/// Program u (D \ G) |= ans and Program u (D \ (G u {t})) |/= ans. The map
/// holds 1 / (1 + |G|) for a smallest such G. Contingencies are searched in
/// size order, so the endogenous part is capped by Limits::brute_force_cap.
std::map<Tuple, Rational> datalog_causes_by_definition(const Program& program,
                                                       const Instance& instance,
                                                       const Limits& limits = {});

/// Keys of datalog_causes_by_definition; empty when the answer is not
/// entailed.
TupleSet datalog_actual_causes(const Program& program, const Instance& instance,
                               const Limits& limits = {});

/// 1/|N| for a smallest necessary set N of <Program, Dx, Dn, {ans}> that
/// contains the tuple, 0 when none does.
Rational datalog_responsibility(const Program& program, const Instance& instance,
                                const Tuple& tuple, const Limits& limits = {});

} // namespace causelab
