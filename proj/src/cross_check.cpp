#include "causelab/cross_check.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "causelab/abduction.hpp"
#include "causelab/causality.hpp"
#include "causelab/cli.hpp"
#include "causelab/diagnosis.hpp"
#include "causelab/errors.hpp"
#include "causelab/oracle.hpp"
#include "causelab/repairs.hpp"
#include "causelab/text_format.hpp"

namespace causelab {

namespace fixtures {

const char* const example_instance =
    R"({"schemas":[{"name":"R","arity":2},{"name":"S","arity":1}],)"
    R"("endogenous":[["R","a1","a4"],["R","a2","a1"],["R","a3","a3"],["S","a1"],["S","a2"],["S","a3"]],)"
    R"("exogenous":[]})";
const char* const example_query = "q() :- R(X,Y), S(Y).\n";
const char* const example_constraint = ":- R(X,Y), S(Y).\n";
const char* const example_program = "ans :- R(X,Y), S(Y).\n";
const char* const closure_instance =
    R"({"schemas":[{"name":"E","arity":2}],"endogenous":[["E","a","b"],["E","b","c"]],"exogenous":[]})";
const char* const closure_program =
    "T(X,Y) :- E(X,Y).\n"
    "T(X,Y) :- E(X,Z), T(Z,Y).\n"
    "ans :- T(a,c).\n";

} // namespace fixtures

CaseGenerator::CaseGenerator(std::uint64_t seed, std::size_t max_size)
    : rng_(seed), max_size_(max_size) {}

RandomCase CaseGenerator::next() {
    auto uniform = [&](std::size_t lo, std::size_t hi) {
        return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
    };
    static const char* const pool[] = {"a", "b", "c", "d", "e"};
    static const char* const names[] = {"R", "S", "P"};

    constants_.assign(pool, pool + uniform(2, 5));
    std::vector<RelationSchema> schemas;
    const std::size_t relations = uniform(1, 3);
    for (std::size_t r = 0; r < relations; ++r) schemas.push_back({names[r], uniform(1, 2)});

    std::vector<Tuple> candidates;
    for (const RelationSchema& s : schemas) {
        for (const std::string& x : constants_) {
            if (s.arity == 1) {
                candidates.push_back({s.name, {x}});
                continue;
            }
            for (const std::string& y : constants_) candidates.push_back({s.name, {x, y}});
        }
    }
    const double density = std::uniform_real_distribution<double>(0.15, 0.6)(rng_);
    std::bernoulli_distribution include(density);
    std::vector<Tuple> chosen;
    for (Tuple& t : candidates)
        if (include(rng_)) chosen.push_back(std::move(t));
    std::shuffle(chosen.begin(), chosen.end(), rng_);
    if (chosen.size() > max_size_) chosen.resize(max_size_);

    std::bernoulli_distribution exogenous(0.25);
    TupleSet endo;
    TupleSet exo;
    for (Tuple& t : chosen) (exogenous(rng_) ? exo : endo).insert(std::move(t));
    Instance instance(std::move(schemas), std::move(endo), std::move(exo));
    ConjunctiveQuery query = random_query(instance);
    return RandomCase{std::move(instance), std::move(query)};
}

ConjunctiveQuery CaseGenerator::random_query(const Instance& instance) {
    static const char* const variables[] = {"X", "Y", "Z"};
    auto uniform = [&](std::size_t lo, std::size_t hi) {
        return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
    };
    std::bernoulli_distribution use_constant(0.15);
    std::vector<Atom> atoms;
    const std::size_t count = uniform(1, 3);
    for (std::size_t i = 0; i < count; ++i) {
        const RelationSchema& s = instance.schemas()[uniform(0, instance.schemas().size() - 1)];
        Atom atom{s.name, {}};
        for (std::size_t k = 0; k < s.arity; ++k) {
            if (use_constant(rng_) && !constants_.empty())
                atom.terms.push_back(Term::constant(constants_[uniform(0, constants_.size() - 1)]));
            else
                atom.terms.push_back(Term::variable(variables[uniform(0, 2)]));
        }
        atoms.push_back(std::move(atom));
    }
    return ConjunctiveQuery(std::move(atoms));
}

std::optional<Tuple> CaseGenerator::fresh_tuple(const Instance& instance) {
    std::vector<Tuple> fresh;
    for (const RelationSchema& s : instance.schemas()) {
        for (const std::string& x : constants_) {
            if (s.arity == 1) {
                Tuple t{s.name, {x}};
                if (!instance.contains(t)) fresh.push_back(std::move(t));
                continue;
            }
            for (const std::string& y : constants_) {
                Tuple t{s.name, {x, y}};
                if (!instance.contains(t)) fresh.push_back(std::move(t));
            }
        }
    }
    if (fresh.empty()) return std::nullopt;
    return fresh[std::uniform_int_distribution<std::size_t>(0, fresh.size() - 1)(rng_)];
}

namespace {

std::string query_text(const std::vector<Atom>& atoms) {
    std::string out = "q() :- ";
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        if (i) out += ", ";
        out += to_string(atoms[i]);
    }
    return out + ".";
}

std::string program_text(const Program& program) {
    std::string out;
    for (const Rule& r : program.rules()) out += to_string(r) + " ";
    return out;
}

class Recorder {
public:
    /// Runs `check` on one case; a false result or an exception is a
    /// failure with the case serialized.
    void run(const std::string& property, const Instance& instance, const std::string& input,
             const std::function<std::string()>& check) {
        CheckReport& report = reports_[property];
        report.property = property;
        ++report.instances;
        std::string problem;
        try {
            problem = check();
        } catch (const std::exception& e) {
            problem = std::string("exception: ") + e.what();
        }
        if (problem.empty()) return;
        Json failure = Json::object();
        failure["instance"] = encode(instance);
        failure["input"] = input;
        failure["detail"] = problem;
        report.failures.push_back(dump(failure));
    }

    std::vector<CheckReport> reports() const {
        std::vector<CheckReport> out;
        for (const auto& [name, r] : reports_) out.push_back(r);
        return out;
    }

private:
    std::map<std::string, CheckReport> reports_;
};

std::string differ(const char* what, const Json& left, const Json& right) {
    return std::string(what) + ": " + dump(left) + " vs " + dump(right);
}

Program closure_over(const std::string& relation, const std::string& goal) {
    std::string text = "T(X,Y) :- " + relation + "(X,Y).\n" + "T(X,Y) :- " + relation +
                       "(X,Z), T(Z,Y).\n" + goal + "\n";
    return parse_program(text);
}

Program parity_over(const std::string& relation) {
    std::string text = "Odd(X,Y) :- " + relation + "(X,Y).\n" + "Odd(X,Y) :- " + relation +
                       "(X,Z), Even(Z,Y).\n" + "Even(X,Y) :- " + relation +
                       "(X,Z), Odd(Z,Y).\n" + "ans :- Even(X,X).\n";
    return parse_program(text);
}

void check_query_case(Recorder& rec, const Instance& d, const ConjunctiveQuery& q,
                      const ConjunctiveQuery& q2, const Limits& limits) {
    const std::string input = query_text(q.atoms());
    const DenialConstraint k = query_to_dc(q);
    const ViolationView v = dc_to_view(k);
    const bool holds = eval_bcq(d, q);
    CausalityOptions witness_engine{Engine::witness, limits};
    CausalityOptions brute_engine{Engine::brute_force, limits};

    rec.run("bcq_witnesses_vs_subset_oracle", d, input, [&]() -> std::string {
        auto fast = witnesses(d, q);
        auto slow = oracle::witnesses_by_subsets(d.tuples(), q);
        if (fast != slow) return differ("witnesses", encode(fast), encode(slow));
        if (holds == fast.empty()) return "eval_bcq disagrees with witness existence";
        if (satisfies_dc(d, k) == eval_bcq(d.tuples(), view_to_query(v)))
            return "satisfies_dc is not the negation of the violation view";
        for (const Witness& w : fast)
            if (!eval_bcq(w, q)) return "witness " + to_string(w) + " does not satisfy the query";
        return {};
    });

    rec.run("causes_vs_brute_force", d, input, [&]() -> std::string {
        CauseSet fast = actual_causes(d, q, witness_engine);
        CauseSet slow = actual_causes(d, q, brute_engine);
        if (fast != slow) return differ("causes", encode(fast), encode(slow));
        for (const Tuple& t : d.endogenous()) {
            const CauseReport* r = find_report(fast, t);
            Rational expected = r ? r->responsibility : Rational(0);
            Rational rho = responsibility(d, q, t, witness_engine);
            if (rho != expected)
                return "responsibility of " + to_string(t) + " is " + to_string(rho) + ", report says " +
                       to_string(expected);
            if ((rho == Rational(1)) != is_counterfactual_cause(d, q, t))
                return "rho = 1 does not match counterfactual status of " + to_string(t);
        }
        return {};
    });

    rec.run("causes_vs_repairs", d, input, [&]() -> std::string {
        CauseSet direct = actual_causes(d, q, witness_engine);
        CauseSet via = causes_from_repairs(d, q, limits);
        if (direct != via) return differ("causes", encode(direct), encode(via));
        return {};
    });

    const std::vector<DenialConstraint> single{k};
    rec.run("s_repairs_from_causes", d, input, [&]() -> std::string {
        auto direct = removal_sets(s_repairs(d, single, limits));
        auto rebuilt = removal_sets(s_repairs_from_causes(d, k, limits));
        if (direct != rebuilt) return differ("S-repairs", encode(direct), encode(rebuilt));
        bool only_d = direct == std::set<TupleSet>{TupleSet{}};
        bool no_causes = actual_causes(d.all_endogenous(), view_to_query(v), witness_engine).empty();
        if (only_d != no_causes) return "consistency is not characterised by an empty cause set";
        return {};
    });

    rec.run("c_repairs_from_most_responsible", d, input, [&]() -> std::string {
        RepairSet c = c_repairs(d, single, limits);
        auto direct = removal_sets(c);
        auto rebuilt = removal_sets(c_repairs_from_mrc(d, k, limits));
        if (direct != rebuilt) return differ("C-repairs", encode(direct), encode(rebuilt));
        auto s = removal_sets(s_repairs(d, single, limits));
        for (const Repair& r : c) {
            if (!s.contains(r.removed)) return "C-repair that is not an S-repair";
            if (r.removed.size() != c.front().removed.size()) return "C-repairs of different sizes";
        }
        return {};
    });

    rec.run("repairs_vs_lattice_oracle", d, input + " / " + query_text(q2.atoms()),
            [&]() -> std::string {
                auto direct = removal_sets(s_repairs(d, single, limits));
                auto lattice = oracle::s_repair_removals(d, single, limits);
                if (direct != lattice) return differ("single DC", encode(direct), encode(lattice));
                const std::vector<DenialConstraint> pair{k, query_to_dc(q2)};
                auto pooled = removal_sets(s_repairs(d, pair, limits));
                auto pooled_lattice = oracle::s_repair_removals(d, pair, limits);
                if (pooled != pooled_lattice)
                    return differ("two DCs", encode(pooled), encode(pooled_lattice));
                std::set<TupleSet> inside;
                for (const TupleSet& s : pooled)
                    if (is_subset(s, d.endogenous())) inside.insert(s);
                auto endo = removal_sets(endogenous_s_repairs(d, pair, limits));
                if (endo != inside) return differ("endogenous repairs", encode(endo), encode(inside));
                return {};
            });

    rec.run("cqa_vs_repairs", d, input, [&]() -> std::string {
        RepairSet repairs = s_repairs(d, single, limits);
        for (const Tuple& a : d.tuples()) {
            bool everywhere = std::all_of(repairs.begin(), repairs.end(),
                                          [&](const Repair& r) { return r.kept.contains(a); });
            if (cqa_ground_atom(d, k, a, limits) != everywhere)
                return "consistent answer for " + to_string(a) + " disagrees with the repairs";
        }
        return {};
    });

    rec.run("causes_vs_diagnosis", d, input, [&]() -> std::string {
        const DiagnosisProblem m = build_problem(d, q);
        CauseSet direct = actual_causes(d, q, witness_engine);
        CauseSet via = causes_via_diagnosis(m, limits);
        if (direct != via) return differ("causes", encode(direct), encode(via));
        for (const Tuple& t : d.endogenous()) {
            auto mcd = mcd_class(m, t, limits);
            const CauseReport* r = find_report(direct, t);
            Rational rho = r ? r->responsibility : Rational(0);
            if (mcd.empty() != (rho == Rational(0))) return "MCD emptiness mismatch for " + to_string(t);
            if (!mcd.empty() &&
                rho != Rational(1, static_cast<std::int64_t>(mcd.begin()->abnormal.size())))
                return "rho differs from 1/|s| for s in MCD for " + to_string(t);
            if (d_class(m, t, limits).empty() == (r != nullptr))
                return "D(M,t) emptiness mismatch for " + to_string(t);
        }
        std::set<TupleSet> diagnoses;
        for (const Diagnosis& x : minimal_diagnoses(m, limits)) diagnoses.insert(x.abnormal);
        auto brute = oracle::minimal_diagnoses(d, q, limits);
        if (diagnoses != brute) return differ("diagnoses", encode(diagnoses), encode(brute));
        if (holds) {
            std::set<TupleSet> bridge;
            for (const TupleSet& s : removal_sets(s_repairs(d, single, limits)))
                if (is_subset(s, d.endogenous())) bridge.insert(s);
            if (bridge != diagnoses) return differ("repair bridge", encode(diagnoses), encode(bridge));
        }
        return {};
    });

    const Program single_rule = Program::from_query(q);
    rec.run("datalog_single_rule", d, input, [&]() -> std::string {
        TupleSet by_definition = datalog_actual_causes(single_rule, d, limits);
        if (!holds) return by_definition.empty() ? "" : "causes reported for an unentailed answer";
        const AbductionProblem ap = AbductionProblem::for_causes(single_rule, d);
        TupleSet relevant = relevant_hypotheses(ap, limits);
        if (relevant != by_definition) return differ("Rel vs definition", encode(relevant), encode(by_definition));
        TupleSet bcq_causes = cause_tuples(actual_causes(d, q, witness_engine));
        if (relevant != bcq_causes) return differ("Rel vs BCQ causes", encode(relevant), encode(bcq_causes));
        auto defined_rho = datalog_causes_by_definition(single_rule, d, limits);
        for (const Tuple& t : d.endogenous()) {
            Rational via_necessary = datalog_responsibility(single_rule, d, t, limits);
            Rational bcq = responsibility(d, q, t, witness_engine);
            Rational defined = defined_rho.contains(t) ? defined_rho.at(t) : Rational(0);
            if (via_necessary != bcq || defined != bcq)
                return "responsibility of " + to_string(t) + ": necessary sets " + to_string(via_necessary) +
                       ", definition " + to_string(defined) + ", BCQ " + to_string(bcq);
        }
        std::set<TupleSet> necessary = necessary_sets(ap, limits);
        std::set<TupleSet> diagnoses;
        for (const Diagnosis& x : minimal_diagnoses(build_problem(d, q), limits)) diagnoses.insert(x.abnormal);
        if (necessary != diagnoses) return differ("necessary sets vs diagnoses", encode(necessary), encode(diagnoses));
        return {};
    });

    rec.run("abduction_vs_subset_oracle", d, input, [&]() -> std::string {
        if (!holds) return {};
        const AbductionProblem ap = AbductionProblem::for_causes(single_rule, d);
        auto fast = abductive_solutions(ap, limits);
        auto slow = oracle::abductive_solutions(ap, limits);
        if (fast != slow) return differ("solutions", encode(fast), encode(slow));
        for (const TupleSet& s : fast) {
            if (!ap.explains(s)) return "solution " + to_string(s) + " does not entail the observation";
            for (const Tuple& h : s) {
                TupleSet smaller = s;
                smaller.erase(h);
                if (ap.explains(smaller)) return "solution " + to_string(s) + " is not minimal";
            }
        }
        auto necessary = necessary_sets(ap, limits);
        auto necessary_slow = oracle::necessary_sets(ap, limits);
        if (necessary != necessary_slow)
            return differ("necessary sets", encode(necessary), encode(necessary_slow));
        return {};
    });

    rec.run("seminaive_vs_naive", d, program_text(single_rule), [&]() -> std::string {
        TupleSet fast = evaluate(single_rule, d.tuples());
        TupleSet slow = set_difference(oracle::naive_least_model(single_rule, d.tuples()), d.tuples());
        if (fast != slow) return differ("model", encode(fast), encode(slow));
        return {};
    });
}

void check_recursive_case(Recorder& rec, const Instance& d, const std::string& relation,
                          const std::string& goal, const Limits& limits) {
    const Program closure = closure_over(relation, goal);
    const Program parity = parity_over(relation);

    for (const Program* p : {&closure, &parity}) {
        rec.run("seminaive_vs_naive", d, program_text(*p), [&]() -> std::string {
            TupleSet fast = evaluate(*p, d.tuples());
            TupleSet slow = set_difference(oracle::naive_least_model(*p, d.tuples()), d.tuples());
            if (fast != slow) return differ("model", encode(fast), encode(slow));
            TupleSet half;
            bool keep = false;
            for (const Tuple& t : d.tuples()) {
                if (keep) half.insert(t);
                keep = !keep;
            }
            if (!is_subset(evaluate(*p, half), least_model(*p, d.tuples())))
                return "evaluation is not monotone";
            return {};
        });

        rec.run("datalog_recursive", d, program_text(*p), [&]() -> std::string {
            TupleSet by_definition = datalog_actual_causes(*p, d, limits);
            if (!entails(*p, d.tuples(), {p->answer()}))
                return by_definition.empty() ? "" : "causes reported for an unentailed answer";
            const AbductionProblem ap = AbductionProblem::for_causes(*p, d);
            auto fast = abductive_solutions(ap, limits);
            auto slow = oracle::abductive_solutions(ap, limits);
            if (fast != slow) return differ("solutions", encode(fast), encode(slow));
            TupleSet relevant = relevant_hypotheses(ap, limits);
            if (relevant != by_definition)
                return differ("Rel vs definition", encode(relevant), encode(by_definition));
            auto necessary = necessary_sets(ap, limits);
            auto necessary_slow = oracle::necessary_sets(ap, limits);
            if (necessary != necessary_slow)
                return differ("necessary sets", encode(necessary), encode(necessary_slow));
            auto defined_rho = datalog_causes_by_definition(*p, d, limits);
            for (const Tuple& t : d.endogenous()) {
                Rational via_necessary = datalog_responsibility(*p, d, t, limits);
                Rational defined = defined_rho.contains(t) ? defined_rho.at(t) : Rational(0);
                if (via_necessary != defined)
                    return "responsibility of " + to_string(t) + ": necessary sets " +
                           to_string(via_necessary) + ", definition " + to_string(defined);
            }
            return {};
        });
    }
}

} // namespace

std::vector<CheckReport> cross_check(const CheckOptions& options) {
    Recorder rec;
    CaseGenerator gen(options.seed, options.max_size);
    const CausalityOptions causality{Engine::witness, options.limits};
    std::mt19937_64 coin(options.seed ^ 0x9e3779b97f4a7c15ULL);

    for (std::size_t trial = 0; trial < options.trials; ++trial) {
        RandomCase c = gen.next();
        ConjunctiveQuery q2 = gen.random_query(c.instance);
        check_query_case(rec, c.instance, c.query, q2, options.limits);

        for (const RelationSchema& s : c.instance.schemas()) {
            if (s.arity != 2) continue;
            std::vector<std::string> constants;
            for (const Tuple& t : c.instance.tuples())
                for (const std::string& x : t.constants) constants.push_back(x);
            std::string goal = "ans :- T(X,X).";
            if (!constants.empty() && coin() % 2 == 0)
                goal = "ans :- T(" + constants[coin() % constants.size()] + "," +
                       constants[coin() % constants.size()] + ").";
            check_recursive_case(rec, c.instance, s.name, goal, options.limits);
            break;
        }

        // One (instance, extra tuple) pair per trial; redraw until the
        // instance leaves room for a new tuple.
        RandomCase m = c;
        std::optional<Tuple> extra = gen.fresh_tuple(m.instance);
        for (int attempt = 0; !extra && attempt < 100; ++attempt) {
            m = gen.next();
            extra = gen.fresh_tuple(m.instance);
        }
        if (!extra) continue;
        const std::string input = query_text(m.query.atoms()) + " + " + to_string(*extra);
        const TupleSet base = cause_tuples(actual_causes(m.instance, m.query, causality));
        rec.run("endogenous_insertion_keeps_causes", m.instance, input, [&]() -> std::string {
            TupleSet grown =
                cause_tuples(actual_causes(m.instance.with_endogenous(*extra), m.query, causality));
            if (!is_subset(base, grown)) return differ("causes lost", encode(base), encode(grown));
            return {};
        });
        rec.run("exogenous_insertion_adds_no_causes", m.instance, input, [&]() -> std::string {
            TupleSet shrunk =
                cause_tuples(actual_causes(m.instance.with_exogenous(*extra), m.query, causality));
            if (!is_subset(shrunk, base)) return differ("causes added", encode(shrunk), encode(base));
            return {};
        });
    }
    return rec.reports();
}

std::vector<CheckReport> fixture_check(const Limits& limits) {
    Recorder rec;
    const Instance d0 = parse_instance(fixtures::example_instance);
    const ConjunctiveQuery q0 = parse_query(fixtures::example_query);
    const std::vector<DenialConstraint> k0 = parse_constraints(fixtures::example_constraint);
    const Program p0 = parse_program(fixtures::example_program);
    const Instance t0 = parse_instance(fixtures::closure_instance);
    const Program pt = parse_program(fixtures::closure_program);

    rec.run("reference_values", d0, fixtures::example_program, [&]() -> std::string {
        const AbductionProblem ap = AbductionProblem::for_causes(p0, d0);
        const std::set<TupleSet> expected_solutions{
            {{"R", {"a2", "a1"}}, {"S", {"a1"}}},
            {{"R", {"a3", "a3"}}, {"S", {"a3"}}},
        };
        if (abductive_solutions(ap, limits) != expected_solutions) return "solutions differ";
        CauseSet causes = actual_causes(d0, q0, CausalityOptions{Engine::witness, limits});
        if (causes.size() != 4) return "expected four causes";
        for (const CauseReport& r : causes)
            if (r.responsibility != Rational(1, 2)) return "responsibility is not 1/2";
        auto necessary = necessary_sets(ap, limits);
        if (necessary.size() != 4) return "expected four necessary sets";
        for (const NecessarySet& n : necessary)
            if (n.size() != 2) return "necessary set of size " + std::to_string(n.size());
        return {};
    });

    rec.run("closure_fixture", t0, fixtures::closure_program, [&]() -> std::string {
        const TupleSet expected_model{{"T", {"a", "b"}}, {"T", {"b", "c"}}, {"T", {"a", "c"}}, {"ans", {}}};
        if (evaluate(pt, t0.tuples()) != expected_model) return "derived atoms differ";
        const AbductionProblem ap = AbductionProblem::for_causes(pt, t0);
        if (abductive_solutions(ap, limits).size() != 1) return "expected one solution";
        if (datalog_actual_causes(pt, t0, limits) != t0.endogenous()) return "causes differ";
        for (const Tuple& t : t0.endogenous())
            if (datalog_responsibility(pt, t0, t, limits) != Rational(1)) return "responsibility is not 1";
        return {};
    });

    using Render = std::function<std::string()>;
    const std::vector<std::pair<std::string, Render>> verbs{
        {"causes", [&] { return cli::render_causes(d0, q0, cli::Route::causality, Engine::witness, cli::Format::json, limits); }},
        {"responsibility", [&] { return cli::render_responsibility(d0, q0, {"S", {"a1"}}, Engine::witness, cli::Format::json, limits); }},
        {"repairs", [&] { return cli::render_repairs(d0, k0, false, false, cli::Format::json, limits); }},
        {"cqa", [&] { return cli::render_cqa(d0, k0, {"R", {"a1", "a4"}}, cli::Format::json, limits); }},
        {"diagnose", [&] { return cli::render_diagnose(d0, q0, std::nullopt, cli::Format::json, limits); }},
        {"abduce", [&] { return cli::render_abduce(d0, p0, {p0.answer()}, cli::Format::json, limits); }},
    };
    for (const auto& [verb, render] : verbs) {
        rec.run("cli_determinism", d0, verb, [&]() -> std::string {
            return render() == render() ? "" : verb + " output differs between runs";
        });
    }

    rec.run("cause_routes_agree", d0, fixtures::example_query, [&]() -> std::string {
        const std::string reference =
            cli::render_causes(d0, q0, cli::Route::causality, Engine::witness, cli::Format::json, limits);
        for (cli::Route route : {cli::Route::repairs, cli::Route::diagnosis, cli::Route::datalog})
            if (cli::render_causes(d0, q0, route, Engine::witness, cli::Format::json, limits) != reference)
                return "a cause route disagrees with the causality module";
        if (cli::render_causes(d0, q0, cli::Route::causality, Engine::brute_force, cli::Format::json,
                               limits) != reference)
            return "brute-force engine disagrees";
        return {};
    });
    return rec.reports();
}

Json encode(const std::vector<CheckReport>& reports, std::uint64_t seed) {
    Json list = Json::array();
    for (const CheckReport& r : reports) {
        Json entry = Json::object();
        entry["property"] = r.property;
        entry["instances"] = r.instances;
        entry["passed"] = r.passed();
        Json failures = Json::array();
        for (const std::string& f : r.failures) failures.push_back(Json::parse(f));
        entry["failures"] = std::move(failures);
        list.push_back(std::move(entry));
    }
    Json out = Json::object();
    out["seed"] = seed;
    out["reports"] = std::move(list);
    return out;
}

} // namespace causelab
