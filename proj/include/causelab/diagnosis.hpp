#pragma once

// Consistency-based diagnosis view of query-answer causality.
//
// The system description says that, with every tuple normal, the denial
// constraint k(Q) holds; observing Q contradicts it. A diagnosis flags a set
// of endogenous tuples abnormal so that the theory becomes consistent with
// the observation. Abnormal tuples drop out of the constraint, so the
// consistency test is decided semantically: Δ is a diagnosis iff
// D \ Δ |/= Q.

#include <set>

#include "causelab/causality.hpp"
#include "causelab/limits.hpp"
#include "causelab/model.hpp"

namespace causelab {

struct DiagnosisProblem {
    Instance instance;
    ConjunctiveQuery observation;
    /// Tuples eligible for the abnormality flag: the endogenous ones.
    TupleSet abnormal_scope;
    /// D |/= Q already; every diagnosis class is trivial.
    bool vacuous = false;
};

struct Diagnosis {
    TupleSet abnormal;

    friend auto operator<=>(const Diagnosis&, const Diagnosis&) = default;
};

DiagnosisProblem build_problem(const Instance& instance, const ConjunctiveQuery& query);

/// True when flagging exactly `abnormal` makes the theory consistent.
bool is_diagnosis(const DiagnosisProblem& problem, const TupleSet& abnormal);

/// All subset-minimal diagnoses, found breadth-first over a hitting-set tree
/// whose node labels are conflicts (endogenous parts of surviving
/// valuations). {{}} for a vacuous problem; empty when some valuation uses
/// exogenous tuples only.
std::set<Diagnosis> minimal_diagnoses(const DiagnosisProblem& problem, const Limits& limits = {});

/// D(M, t): minimal diagnoses containing t.
std::set<Diagnosis> d_class(const DiagnosisProblem& problem, const Tuple& tuple,
                            const Limits& limits = {});

/// MCD(M, t): the members of D(M, t) of least cardinality.
std::set<Diagnosis> mcd_class(const DiagnosisProblem& problem, const Tuple& tuple,
                              const Limits& limits = {});

/// Causes from D(M, t) and responsibilities 1/|s| for s in MCD(M, t).
CauseSet causes_via_diagnosis(const DiagnosisProblem& problem, const Limits& limits = {});

} // namespace causelab
