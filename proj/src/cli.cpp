#include "causelab/cli.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "CLI11.hpp"

#include "causelab/abduction.hpp"
#include "causelab/cross_check.hpp"
#include "causelab/diagnosis.hpp"
#include "causelab/errors.hpp"
#include "causelab/json_io.hpp"
#include "causelab/repairs.hpp"
#include "causelab/text_format.hpp"

namespace causelab::cli {

Limits effective_limits(const Options& options) {
    Limits limits = Limits::from_env();
    if (options.budget) limits.max_sets = *options.budget;
    return limits;
}

namespace {

std::string with_newline(std::string s) {
    s += '\n';
    return s;
}

std::string join_tuples(const TupleSet& tuples) {
    std::string out;
    for (const Tuple& t : tuples) {
        if (!out.empty()) out += " ";
        out += to_string(t);
    }
    return out.empty() ? "-" : out;
}

std::string table(const std::vector<std::string>& header,
                  const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width(header.size(), 0);
    for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
    for (const auto& row : rows)
        for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    std::ostringstream out;
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t c = 0; c < cells.size(); ++c) {
            out << cells[c];
            if (c + 1 < cells.size()) out << std::string(width[c] - cells[c].size() + 2, ' ');
        }
        out << '\n';
    };
    line(header);
    for (const auto& row : rows) line(row);
    return out.str();
}

CauseSet causes_by_route(const Instance& instance, const ConjunctiveQuery& query, Route route,
                         Engine engine, const Limits& limits) {
    switch (route) {
    case Route::repairs:
        return causes_from_repairs(instance, query, limits);
    case Route::diagnosis:
        return causes_via_diagnosis(build_problem(instance, query), limits);
    case Route::datalog: {
        instance.check(query.atoms());
        const Program program = Program::from_query(query);
        if (!entails(program, instance.tuples(), {program.answer()})) return {};
        const AbductionProblem problem = AbductionProblem::for_causes(program, instance);
        std::map<Tuple, CauseReport> reports;
        for (const NecessarySet& n : necessary_sets(problem, limits)) {
            for (const Tuple& t : n) {
                CauseReport& r = reports[t];
                r.cause = t;
                TupleSet rest = n;
                rest.erase(t);
                r.minimal_contingencies.insert(std::move(rest));
                Rational rho(1, static_cast<std::int64_t>(n.size()));
                r.responsibility = std::max(r.responsibility, rho);
            }
        }
        CauseSet out;
        for (auto& [t, r] : reports) out.push_back(std::move(r));
        return out;
    }
    case Route::causality:
        break;
    }
    return actual_causes(instance, query, CausalityOptions{engine, limits});
}

} // namespace

std::string render_causes(const Instance& instance, const ConjunctiveQuery& query, Route route,
                          Engine engine, Format format, const Limits& limits) {
    const CauseSet causes = causes_by_route(instance, query, route, engine, limits);
    if (format == Format::json) return with_newline(dump(encode(causes)));
    std::vector<std::vector<std::string>> rows;
    for (const CauseReport& r : causes) {
        std::string contingencies;
        for (const ContingencySet& g : r.minimal_contingencies) {
            if (!contingencies.empty()) contingencies += " | ";
            contingencies += g.empty() ? "{}" : to_string(g);
        }
        rows.push_back({to_string(r.cause), to_string(r.responsibility), contingencies});
    }
    return table({"cause", "responsibility", "minimal contingency sets"}, rows);
}

std::string render_responsibility(const Instance& instance, const ConjunctiveQuery& query,
                                  const Tuple& tuple, Engine engine, Format format,
                                  const Limits& limits) {
    const Rational rho = responsibility(instance, query, tuple, CausalityOptions{engine, limits});
    if (format == Format::table) return with_newline(to_string(tuple) + "  " + to_string(rho));
    Json out = Json::object();
    out["tuple"] = encode(tuple);
    out["responsibility"] = to_string(rho);
    return with_newline(dump(out));
}

std::string render_repairs(const Instance& instance, const std::vector<DenialConstraint>& constraints,
                           bool cardinality, bool endogenous_only, Format format,
                           const Limits& limits) {
    RepairSet repairs = endogenous_only ? endogenous_s_repairs(instance, constraints, limits)
                                        : s_repairs(instance, constraints, limits);
    if (cardinality && !repairs.empty()) {
        std::size_t least = repairs.front().removed.size();
        for (const Repair& r : repairs) least = std::min(least, r.removed.size());
        RepairSet smallest;
        for (Repair& r : repairs) {
            if (r.removed.size() != least) continue;
            r.kind = RepairKind::cardinality;
            smallest.push_back(std::move(r));
        }
        repairs = std::move(smallest);
    }
    if (format == Format::json) return with_newline(dump(encode(repairs)));
    std::vector<std::vector<std::string>> rows;
    for (const Repair& r : repairs)
        rows.push_back({r.kind == RepairKind::subset ? "S" : "C", join_tuples(r.removed),
                        join_tuples(r.kept)});
    return table({"kind", "removed", "kept"}, rows);
}

std::string render_cqa(const Instance& instance, const std::vector<DenialConstraint>& constraints,
                       const Tuple& atom, Format format, const Limits& limits) {
    const bool consistent = cqa_ground_atom(instance, constraints, atom, limits);
    if (format == Format::table) return consistent ? "true\n" : "false\n";
    Json out = Json::object();
    out["atom"] = encode(atom);
    out["consistent"] = consistent;
    return with_newline(dump(out));
}

std::string render_diagnose(const Instance& instance, const ConjunctiveQuery& query,
                            const std::optional<Tuple>& tuple, Format format, const Limits& limits) {
    const DiagnosisProblem problem = build_problem(instance, query);
    if (tuple) {
        const std::set<Diagnosis> d = d_class(problem, *tuple, limits);
        const std::set<Diagnosis> mcd = mcd_class(problem, *tuple, limits);
        if (format == Format::json) {
            Json out = Json::object();
            out["tuple"] = encode(*tuple);
            out["d_class"] = encode(d);
            out["mcd_class"] = encode(mcd);
            return with_newline(dump(out));
        }
        std::vector<std::vector<std::string>> rows;
        for (const Diagnosis& x : d)
            rows.push_back({join_tuples(x.abnormal), mcd.contains(x) ? "yes" : "no"});
        return table({"diagnosis containing " + to_string(*tuple), "minimum"}, rows);
    }
    const std::set<Diagnosis> all = minimal_diagnoses(problem, limits);
    if (format == Format::json) {
        Json out = Json::object();
        out["vacuous"] = problem.vacuous;
        out["diagnoses"] = encode(all);
        return with_newline(dump(out));
    }
    std::vector<std::vector<std::string>> rows;
    for (const Diagnosis& x : all) rows.push_back({join_tuples(x.abnormal)});
    return table({"minimal diagnosis"}, rows);
}

std::string render_abduce(const Instance& instance, const Program& program, const TupleSet& obs,
                          Format format, const Limits& limits) {
    const AbductionProblem problem(program, instance.exogenous(), instance.endogenous(), obs);
    const std::set<TupleSet> solutions = abductive_solutions(problem, limits);
    const std::set<NecessarySet> necessary = necessary_sets(problem, limits);
    const std::vector<RankedHypothesis> ranked = rank_by_necessity(problem, limits);
    if (format == Format::json) {
        Json relevant = Json::array();
        for (const RankedHypothesis& h : ranked) {
            Json entry = Json::object();
            entry["tuple"] = encode(h.hypothesis);
            entry["necessity"] = h.necessity;
            entry["responsibility"] =
                to_string(Rational(1, static_cast<std::int64_t>(h.necessity)));
            relevant.push_back(std::move(entry));
        }
        Json out = Json::object();
        out["solutions"] = encode(solutions);
        out["relevant"] = std::move(relevant);
        out["necessary_sets"] = encode(necessary);
        return with_newline(dump(out));
    }
    std::ostringstream out;
    std::vector<std::vector<std::string>> rows;
    for (const TupleSet& s : solutions) rows.push_back({join_tuples(s)});
    out << table({"abductive solution"}, rows) << '\n';
    rows.clear();
    for (const RankedHypothesis& h : ranked)
        rows.push_back({to_string(h.hypothesis), std::to_string(h.necessity),
                        to_string(Rational(1, static_cast<std::int64_t>(h.necessity)))});
    out << table({"relevant hypothesis", "smallest necessary set", "responsibility"}, rows);
    return out.str();
}

namespace {

template <class F>
auto load(const std::string& path, F&& parse) {
    const std::string text = read_file(path);
    try {
        return parse(text);
    } catch (const ParseError& e) {
        throw ParseError(path + ":" + e.what(), 0, 0);
    }
}

void require(const std::string& value, const char* flag, const std::string& verb) {
    if (value.empty()) throw CLI::RequiredError(std::string(flag) + " is required for " + verb);
}

std::string execute(const Command& command, std::string& notes) {
    const Options& o = command.options;
    const Limits limits = effective_limits(o);
    const std::string& verb = command.verb;

    if (verb == "check") {
        std::vector<CheckReport> reports =
            o.fixtures ? fixture_check(limits)
                       : cross_check(CheckOptions{o.seed, o.trials, o.max_size, limits});
        if (o.format == Format::json) return with_newline(dump(encode(reports, o.seed)));
        std::vector<std::vector<std::string>> rows;
        for (const CheckReport& r : reports)
            rows.push_back({r.property, std::to_string(r.instances), r.passed() ? "pass" : "FAIL",
                            std::to_string(r.failures.size())});
        return table({"property", "instances", "result", "failures"}, rows);
    }

    require(o.instance_path, "--instance", verb);
    const Instance instance = load(o.instance_path, [](const std::string& t) { return parse_instance(t); });

    if (verb == "causes" || verb == "responsibility" || verb == "diagnose") {
        require(o.query_path, "--query", verb);
        const ConjunctiveQuery query =
            load(o.query_path, [](const std::string& t) { return parse_query(t); });
        if (verb == "causes") {
            if (!eval_bcq(instance, query))
                notes += "note: the query is false on this instance; there is no answer to explain\n";
            return render_causes(instance, query, o.route, o.engine, o.format, limits);
        }
        if (verb == "responsibility") {
            require(o.tuple, "--tuple", verb);
            return render_responsibility(instance, query, parse_ground_atom(o.tuple), o.engine,
                                         o.format, limits);
        }
        std::optional<Tuple> tuple;
        if (!o.tuple.empty()) tuple = parse_ground_atom(o.tuple);
        return render_diagnose(instance, query, tuple, o.format, limits);
    }
    if (verb == "repairs" || verb == "cqa") {
        require(o.constraints_path, "--constraints", verb);
        const std::vector<DenialConstraint> constraints =
            load(o.constraints_path, [](const std::string& t) { return parse_constraints(t); });
        if (verb == "repairs")
            return render_repairs(instance, constraints, o.cardinality, o.endogenous_only, o.format,
                                  limits);
        require(o.atom, "--atom", verb);
        return render_cqa(instance, constraints, parse_ground_atom(o.atom), o.format, limits);
    }
    // abduce
    require(o.program_path, "--program", verb);
    const Program program = load(o.program_path, [](const std::string& t) { return parse_program(t); });
    TupleSet obs;
    for (const std::string& a : o.observations) obs.insert(parse_ground_atom(a));
    if (obs.empty()) obs.insert(program.answer());
    return render_abduce(instance, program, obs, o.format, limits);
}

} // namespace

Result run(const std::vector<std::string>& args) {
    CLI::App app{"Causes, responsibilities, repairs, diagnoses and abductive explanations for "
                 "query answers",
                 "causelab"};
    app.require_subcommand(1);
    Command command;
    Options& o = command.options;
    std::string semantics = "s";
    std::string format = "json";
    std::string engine = "witness";
    std::string route = "causality";

    auto instance_opt = [&](CLI::App* sub) {
        sub->add_option("-i,--instance", o.instance_path, "instance JSON file")->required();
    };
    auto common = [&](CLI::App* sub) {
        sub->add_option("--budget", o.budget, "cap on enumerated sets (overrides CAUSELAB_BUDGET)");
        sub->add_option("--format", format, "json or table")->check(CLI::IsMember({"json", "table"}));
    };

    CLI::App* causes = app.add_subcommand("causes", "actual causes with responsibilities");
    instance_opt(causes);
    causes->add_option("-q,--query", o.query_path, "query file")->required();
    causes->add_option("--engine", engine, "witness or brute")->check(CLI::IsMember({"witness", "brute"}));
    causes->add_option("--route", route, "causality, repairs, diagnosis or datalog")
        ->check(CLI::IsMember({"causality", "repairs", "diagnosis", "datalog"}));
    common(causes);

    CLI::App* resp = app.add_subcommand("responsibility", "responsibility of one tuple");
    instance_opt(resp);
    resp->add_option("-q,--query", o.query_path, "query file")->required();
    resp->add_option("--tuple", o.tuple, "ground atom, e.g. S(a1)")->required();
    resp->add_option("--engine", engine, "witness or brute")->check(CLI::IsMember({"witness", "brute"}));
    common(resp);

    CLI::App* repairs = app.add_subcommand("repairs", "S- or C-repairs for denial constraints");
    instance_opt(repairs);
    repairs->add_option("-c,--constraints", o.constraints_path, "denial constraint file")->required();
    repairs->add_option("--semantics", semantics, "s or c")->check(CLI::IsMember({"s", "c"}));
    repairs->add_flag("--endogenous-only", o.endogenous_only, "delete endogenous tuples only");
    common(repairs);

    CLI::App* cqa = app.add_subcommand("cqa", "consistent answer to a ground atomic query");
    instance_opt(cqa);
    cqa->add_option("-c,--constraints", o.constraints_path, "denial constraint file")->required();
    cqa->add_option("--atom", o.atom, "ground atom of the instance")->required();
    common(cqa);

    CLI::App* diagnose = app.add_subcommand("diagnose", "minimal diagnoses of the observed query");
    instance_opt(diagnose);
    diagnose->add_option("-q,--query", o.query_path, "query file")->required();
    diagnose->add_option("--tuple", o.tuple, "restrict to diagnoses containing this tuple");
    common(diagnose);

    CLI::App* abduce = app.add_subcommand("abduce", "Datalog abduction with Dx as EDB and Dn as hypotheses");
    instance_opt(abduce);
    abduce->add_option("-p,--program", o.program_path, "Datalog program file")->required();
    abduce->add_option("--obs", o.observations, "observed ground atom (default: ans)");
    common(abduce);

    CLI::App* check = app.add_subcommand("check", "randomised cross-checks between all routes");
    check->add_option("--seed", o.seed, "PRNG seed");
    check->add_option("--trials", o.trials, "number of random instances");
    check->add_option("--max-size", o.max_size, "maximum tuples per instance");
    check->add_flag("--fixtures", o.fixtures, "check the built-in reference fixtures only");
    common(check);

    Result result;
    std::ostringstream out;
    std::ostringstream err;
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        result.out = out.str();
        result.err = err.str();
        result.exit_code = code == 0 ? ExitCode::ok : ExitCode::usage;
        return result;
    }
    command.verb = app.get_subcommands().front()->get_name();
    o.cardinality = semantics == "c";
    o.format = format == "table" ? Format::table : Format::json;
    o.engine = engine == "brute" ? Engine::brute_force : Engine::witness;
    o.route = route == "repairs"     ? Route::repairs
              : route == "diagnosis" ? Route::diagnosis
              : route == "datalog"   ? Route::datalog
                                     : Route::causality;

    try {
        result.out = execute(command, result.err);
    } catch (const CLI::Error& e) {
        result.err += std::string("error: ") + e.what() + "\n";
        result.exit_code = ExitCode::usage;
    } catch (const ParseError& e) {
        result.err += std::string("parse error: ") + e.what() + "\n";
        result.exit_code = ExitCode::parse;
    } catch (const ValidationError& e) {
        result.err += std::string("invalid input: ") + e.what() + "\n";
        result.exit_code = ExitCode::parse;
    } catch (const BudgetError& e) {
        result.err += std::string("budget exceeded: ") + e.what() + "\n";
        result.exit_code = ExitCode::budget;
    } catch (const DomainError& e) {
        result.err += std::string("domain error: ") + e.what() + "\n";
        result.exit_code = ExitCode::domain;
    } catch (const SchemaError& e) {
        result.err += std::string("schema error: ") + e.what() + "\n";
        result.exit_code = ExitCode::domain;
    }
    return result;
}

} // namespace causelab::cli
