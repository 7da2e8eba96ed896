#pragma once

// JSON encodings. These are the machine-readable contract of the CLI;
// everything is emitted in canonical order so equal values serialize to
// identical bytes.
//
//   Instance   {"schemas":[{"name":"R","arity":2}],"endogenous":[["R","a2","a1"]],"exogenous":[]}
//   CauseSet   [{"tuple":["S","a1"],"responsibility":"1/2","min_contingencies":[[["S","a3"]]]}]
//   Repair     {"kind":"S","removed":[["S","a1"],["S","a3"]]}
//   Diagnosis  {"abnormal":[["S","a1"]]}
//   tuple sets [[["R","a2","a1"],["S","a1"]], ...]

#include <set>
#include <string>
#include <string_view>

#include "json.hpp"

#include "causelab/causality.hpp"
#include "causelab/diagnosis.hpp"
#include "causelab/model.hpp"
#include "causelab/repairs.hpp"

namespace causelab {

using Json = nlohmann::ordered_json;

/// ParseError carrying the line and column of the syntax error.
Json parse_json(std::string_view text);

/// Compact, single-line.
std::string dump(const Json& json);

Json encode(const Tuple& tuple);
Json encode(const TupleSet& tuples);
Json encode(const std::set<TupleSet>& sets);
Json encode(const Instance& instance);
Json encode(const CauseSet& causes);
Json encode(const Repair& repair);
Json encode(const RepairSet& repairs);
Json encode(const Diagnosis& diagnosis);
Json encode(const std::set<Diagnosis>& diagnoses);

Tuple decode_tuple(const Json& json);
TupleSet decode_tuple_set(const Json& json);
std::set<TupleSet> decode_tuple_sets(const Json& json);
/// Arity mismatches are reported as ParseError; an endogenous/exogenous
/// overlap as ValidationError.
Instance decode_instance(const Json& json);
CauseSet decode_cause_set(const Json& json);
/// The kept part is recomputed from the instance the repair belongs to.
Repair decode_repair(const Json& json, const Instance& instance);
Diagnosis decode_diagnosis(const Json& json);

Instance parse_instance(std::string_view text);
Instance load_instance(const std::string& path);

} // namespace causelab
