#pragma once

// Randomised cross-checks between the independent routes to causes,
// repairs, diagnoses and abductive explanations, and against the
// subset-enumeration oracles.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "causelab/json_io.hpp"
#include "causelab/limits.hpp"
#include "causelab/model.hpp"

namespace causelab {

struct CheckReport {
    std::string property;
    std::size_t instances = 0;
    /// Serialized counterexamples (instance, query, what differed).
    std::vector<std::string> failures;

    bool passed() const noexcept { return failures.empty(); }
};

struct CheckOptions {
    std::uint64_t seed = 1;
    std::size_t trials = 200;
    std::size_t max_size = 7;
    Limits limits;
};

struct RandomCase {
    Instance instance;
    ConjunctiveQuery query;
};

/// Small random instances: at most five constants, one to three relations
/// of arity one or two, each candidate tuple included independently, about
/// a quarter of the tuples exogenous. Queries have one to three atoms.
class CaseGenerator {
public:
    CaseGenerator(std::uint64_t seed, std::size_t max_size);

    RandomCase next();
    ConjunctiveQuery random_query(const Instance& instance);
    /// A tuple of a declared relation that is not in the instance, if any.
    std::optional<Tuple> fresh_tuple(const Instance& instance);

private:
    std::mt19937_64 rng_;
    std::size_t max_size_;
    std::vector<std::string> constants_;
};

/// Every property on `trials` random cases; reports sorted by property id.
/// Zero trials gives an empty list.
std::vector<CheckReport> cross_check(const CheckOptions& options);

/// Built-in fixtures: exact values, determinism of every CLI verb, and
/// agreement of the four cause routes.
std::vector<CheckReport> fixture_check(const Limits& limits = {});

Json encode(const std::vector<CheckReport>& reports, std::uint64_t seed);

namespace fixtures {

/// R = {(a1,a4),(a2,a1),(a3,a3)}, S = {(a1),(a2),(a3)}, all endogenous.
extern const char* const example_instance;
extern const char* const example_query;
extern const char* const example_constraint;
extern const char* const example_program;
/// E = {(a,b),(b,c)} with transitive closure T and ans :- T(a,c).
extern const char* const closure_instance;
extern const char* const closure_program;

} // namespace fixtures

} // namespace causelab
