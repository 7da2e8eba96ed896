#include "causelab/json_io.hpp"

#include "causelab/errors.hpp"
#include "causelab/text_format.hpp"

namespace causelab {

namespace {

[[noreturn]] void malformed(const std::string& where, const std::string& what) {
    throw ParseError(where + ": " + what, 0, 0);
}

const Json& member(const Json& object, const char* key, const std::string& where) {
    if (!object.is_object()) malformed(where, "expected an object");
    auto it = object.find(key);
    if (it == object.end()) malformed(where, std::string("missing key \"") + key + "\"");
    return *it;
}

std::string as_string(const Json& json, const std::string& where) {
    if (!json.is_string()) malformed(where, "expected a string");
    return json.get<std::string>();
}

const Json& as_array(const Json& json, const std::string& where) {
    if (!json.is_array()) malformed(where, "expected an array");
    return json;
}

Tuple tuple_at(const Json& json, const std::string& where) {
    as_array(json, where);
    if (json.empty()) malformed(where, "a tuple needs a relation name");
    Tuple t{as_string(json[0], where + "/0"), {}};
    for (std::size_t i = 1; i < json.size(); ++i)
        t.constants.push_back(as_string(json[i], where + "/" + std::to_string(i)));
    return t;
}

TupleSet tuples_at(const Json& json, const std::string& where) {
    as_array(json, where);
    TupleSet out;
    for (std::size_t i = 0; i < json.size(); ++i)
        out.insert(tuple_at(json[i], where + "/" + std::to_string(i)));
    return out;
}

} // namespace

Json parse_json(std::string_view text) {
    try {
        return Json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        std::size_t line = 1;
        std::size_t column = 1;
        const std::size_t limit = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
        for (std::size_t i = 0; i < limit; ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        std::string what = e.what();
        if (auto pos = what.find("syntax error"); pos != std::string::npos) what = what.substr(pos);
        throw ParseError(what, line, column);
    }
}

std::string dump(const Json& json) { return json.dump(); }

Json encode(const Tuple& tuple) {
    Json out = Json::array();
    out.push_back(tuple.relation);
    for (const std::string& c : tuple.constants) out.push_back(c);
    return out;
}

Json encode(const TupleSet& tuples) {
    Json out = Json::array();
    for (const Tuple& t : tuples) out.push_back(encode(t));
    return out;
}

Json encode(const std::set<TupleSet>& sets) {
    Json out = Json::array();
    for (const TupleSet& s : sets) out.push_back(encode(s));
    return out;
}

Json encode(const Instance& instance) {
    Json schemas = Json::array();
    for (const RelationSchema& s : instance.schemas())
        schemas.push_back(Json{{"name", s.name}, {"arity", s.arity}});
    Json out = Json::object();
    out["schemas"] = std::move(schemas);
    out["endogenous"] = encode(instance.endogenous());
    out["exogenous"] = encode(instance.exogenous());
    return out;
}

Json encode(const CauseSet& causes) {
    Json out = Json::array();
    for (const CauseReport& r : causes) {
        Json entry = Json::object();
        entry["tuple"] = encode(r.cause);
        entry["responsibility"] = to_string(r.responsibility);
        entry["min_contingencies"] = encode(r.minimal_contingencies);
        out.push_back(std::move(entry));
    }
    return out;
}

Json encode(const Repair& repair) {
    Json out = Json::object();
    out["kind"] = repair.kind == RepairKind::subset ? "S" : "C";
    out["removed"] = encode(repair.removed);
    return out;
}

Json encode(const RepairSet& repairs) {
    Json out = Json::array();
    for (const Repair& r : repairs) out.push_back(encode(r));
    return out;
}

Json encode(const Diagnosis& diagnosis) {
    Json out = Json::object();
    out["abnormal"] = encode(diagnosis.abnormal);
    return out;
}

Json encode(const std::set<Diagnosis>& diagnoses) {
    Json out = Json::array();
    for (const Diagnosis& d : diagnoses) out.push_back(encode(d));
    return out;
}

Tuple decode_tuple(const Json& json) { return tuple_at(json, ""); }

TupleSet decode_tuple_set(const Json& json) { return tuples_at(json, ""); }

std::set<TupleSet> decode_tuple_sets(const Json& json) {
    as_array(json, "");
    std::set<TupleSet> out;
    for (std::size_t i = 0; i < json.size(); ++i) out.insert(tuples_at(json[i], "/" + std::to_string(i)));
    return out;
}

Instance decode_instance(const Json& json) {
    const Json& schemas = as_array(member(json, "schemas", ""), "/schemas");
    std::vector<RelationSchema> decls;
    for (std::size_t i = 0; i < schemas.size(); ++i) {
        const std::string where = "/schemas/" + std::to_string(i);
        const Json& arity = member(schemas[i], "arity", where);
        if (!arity.is_number_unsigned() || arity.get<std::size_t>() == 0)
            malformed(where + "/arity", "expected a positive integer");
        decls.push_back({as_string(member(schemas[i], "name", where), where + "/name"),
                         arity.get<std::size_t>()});
    }
    TupleSet endo;
    TupleSet exo;
    if (json.contains("endogenous")) endo = tuples_at(json["endogenous"], "/endogenous");
    if (json.contains("exogenous")) exo = tuples_at(json["exogenous"], "/exogenous");
    try {
        return Instance(std::move(decls), std::move(endo), std::move(exo));
    } catch (const SchemaError& e) {
        throw ParseError(e.what(), 0, 0);
    }
}

CauseSet decode_cause_set(const Json& json) {
    as_array(json, "");
    CauseSet out;
    for (std::size_t i = 0; i < json.size(); ++i) {
        const std::string where = "/" + std::to_string(i);
        CauseReport r;
        r.cause = tuple_at(member(json[i], "tuple", where), where + "/tuple");
        r.responsibility =
            parse_rational(as_string(member(json[i], "responsibility", where), where + "/responsibility"));
        const Json& sets = as_array(member(json[i], "min_contingencies", where), where);
        for (std::size_t k = 0; k < sets.size(); ++k)
            r.minimal_contingencies.insert(tuples_at(sets[k], where + "/min_contingencies/" + std::to_string(k)));
        out.push_back(std::move(r));
    }
    std::sort(out.begin(), out.end(),
              [](const CauseReport& a, const CauseReport& b) { return a.cause < b.cause; });
    return out;
}

Repair decode_repair(const Json& json, const Instance& instance) {
    const std::string kind = as_string(member(json, "kind", ""), "/kind");
    if (kind != "S" && kind != "C") malformed("/kind", "expected \"S\" or \"C\"");
    TupleSet removed = tuples_at(member(json, "removed", ""), "/removed");
    for (const Tuple& t : removed)
        if (!instance.contains(t)) malformed("/removed", to_string(t) + " is not in the instance");
    return Repair{set_difference(instance.tuples(), removed), std::move(removed),
                  kind == "S" ? RepairKind::subset : RepairKind::cardinality};
}

Diagnosis decode_diagnosis(const Json& json) {
    return Diagnosis{tuples_at(member(json, "abnormal", ""), "/abnormal")};
}

Instance parse_instance(std::string_view text) { return decode_instance(parse_json(text)); }

Instance load_instance(const std::string& path) {
    return parse_instance(read_file(path));
}

} // namespace causelab
