#pragma once

// Command-line front end. `run` is the whole program minus process setup,
// so tests drive it in-process.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "causelab/abduction.hpp"
#include "causelab/causality.hpp"
#include "causelab/limits.hpp"
#include "causelab/model.hpp"

namespace causelab::cli {

enum ExitCode : int {
    ok = 0,
    usage = 1,
    parse = 2,
    budget = 3,
    domain = 4,
};

enum class Format { json, table };

enum class Route { causality, repairs, diagnosis, datalog };

struct Options {
    std::string instance_path;
    std::string query_path;
    std::string constraints_path;
    std::string program_path;
    bool cardinality = false;
    bool endogenous_only = false;
    std::string atom;
    std::string tuple;
    std::uint64_t seed = 1;
    std::size_t trials = 200;
    std::size_t max_size = 7;
    bool fixtures = false;
    std::optional<std::size_t> budget;
    Format format = Format::json;
    Engine engine = Engine::witness;
    Route route = Route::causality;
    std::vector<std::string> observations;
};

struct Command {
    /// causes, responsibility, repairs, cqa, diagnose, abduce or check.
    std::string verb;
    Options options;
};

struct Result {
    int exit_code = ExitCode::ok;
    std::string out;
    std::string err;
};

/// Arguments exclude the program name. On a usage error the result carries
/// exit code 1 and the message.
Result run(const std::vector<std::string>& args);

/// Output of one verb for already-loaded inputs. Throws the library errors.
std::string render_causes(const Instance& instance, const ConjunctiveQuery& query, Route route,
                          Engine engine, Format format, const Limits& limits);
std::string render_responsibility(const Instance& instance, const ConjunctiveQuery& query,
                                  const Tuple& tuple, Engine engine, Format format,
                                  const Limits& limits);
std::string render_repairs(const Instance& instance, const std::vector<DenialConstraint>& constraints,
                           bool cardinality, bool endogenous_only, Format format,
                           const Limits& limits);
std::string render_cqa(const Instance& instance, const std::vector<DenialConstraint>& constraints,
                       const Tuple& atom, Format format, const Limits& limits);
std::string render_diagnose(const Instance& instance, const ConjunctiveQuery& query,
                            const std::optional<Tuple>& tuple, Format format, const Limits& limits);
std::string render_abduce(const Instance& instance, const Program& program, const TupleSet& obs,
                          Format format, const Limits& limits);

/// Limits from the environment, then --budget on top.
Limits effective_limits(const Options& options);

} // namespace causelab::cli
