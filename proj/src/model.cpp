#include "causelab/model.hpp"

#include <algorithm>
#include <iterator>

#include "causelab/errors.hpp"
#include "join.hpp"

namespace causelab {

std::string to_string(const Tuple& tuple) {
    if (tuple.constants.empty()) return tuple.relation;
    std::string out = tuple.relation + "(";
    for (std::size_t i = 0; i < tuple.constants.size(); ++i) {
        if (i) out += ",";
        out += tuple.constants[i];
    }
    return out + ")";
}

std::string to_string(const TupleSet& tuples) {
    std::string out = "{";
    bool first = true;
    for (const Tuple& t : tuples) {
        if (!first) out += ", ";
        first = false;
        out += to_string(t);
    }
    return out + "}";
}

std::string to_string(const Atom& atom) {
    if (atom.terms.empty()) return atom.relation;
    std::string out = atom.relation + "(";
    for (std::size_t i = 0; i < atom.terms.size(); ++i) {
        if (i) out += ",";
        out += atom.terms[i].name;
    }
    return out + ")";
}

TupleSet set_union(const TupleSet& a, const TupleSet& b) {
    TupleSet out = a;
    out.insert(b.begin(), b.end());
    return out;
}

TupleSet set_difference(const TupleSet& a, const TupleSet& b) {
    TupleSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                        std::inserter(out, out.end()));
    return out;
}

bool is_subset(const TupleSet& sub, const TupleSet& super) {
    return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

namespace detail {

template <class Tag>
AtomList<Tag>::AtomList(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
    if (atoms_.empty()) throw ValidationError("atom list must be nonempty");
}

template class AtomList<QueryTag>;
template class AtomList<ConstraintTag>;
template class AtomList<ViewTag>;

int CompiledBody::slot_of(const std::string& variable) const {
    auto it = std::find(variables.begin(), variables.end(), variable);
    return it == variables.end() ? -1 : static_cast<int>(it - variables.begin());
}

CompiledBody compile_body(std::span<const Atom> atoms) {
    CompiledBody body;
    for (const Atom& atom : atoms) {
        CompiledAtom compiled;
        compiled.relation = atom.relation;
        for (const Term& term : atom.terms) {
            if (term.is_variable()) {
                int slot = body.slot_of(term.name);
                if (slot < 0) {
                    slot = static_cast<int>(body.variables.size());
                    body.variables.push_back(term.name);
                }
                compiled.slots.push_back(slot);
                compiled.constants.emplace_back();
            } else {
                compiled.slots.push_back(-1);
                compiled.constants.push_back(term.name);
            }
        }
        body.atoms.push_back(std::move(compiled));
    }
    return body;
}

RelationView::RelationView(const TupleSet& tuples) {
    for (const Tuple& t : tuples) by_relation_[t.relation].push_back(&t);
}

Candidates RelationView::operator[](const std::string& relation) const {
    auto it = by_relation_.find(relation);
    if (it == by_relation_.end()) return {};
    return it->second;
}

} // namespace detail

DenialConstraint query_to_dc(const ConjunctiveQuery& query) {
    return DenialConstraint(query.atoms());
}

ViolationView dc_to_view(const DenialConstraint& constraint) {
    return ViolationView(constraint.atoms());
}

ConjunctiveQuery view_to_query(const ViolationView& view) {
    return ConjunctiveQuery(view.atoms());
}

Instance::Instance(std::vector<RelationSchema> schemas, TupleSet endogenous, TupleSet exogenous)
    : schemas_(std::move(schemas)), endogenous_(std::move(endogenous)),
      exogenous_(std::move(exogenous)) {
    std::sort(schemas_.begin(), schemas_.end());
    for (std::size_t i = 0; i < schemas_.size(); ++i) {
        if (schemas_[i].arity == 0)
            throw ValidationError("relation " + schemas_[i].name + " has arity 0");
        if (i > 0 && schemas_[i].name == schemas_[i - 1].name)
            throw ValidationError("relation " + schemas_[i].name + " declared twice");
    }
    for (const Tuple& t : endogenous_) check(t);
    for (const Tuple& t : exogenous_) {
        check(t);
        if (endogenous_.contains(t))
            throw ValidationError("tuple " + to_string(t) +
                                  " is both endogenous and exogenous");
    }
    all_ = set_union(endogenous_, exogenous_);
}

const RelationSchema* Instance::find_schema(std::string_view name) const {
    auto it = std::lower_bound(schemas_.begin(), schemas_.end(), name,
                               [](const RelationSchema& s, std::string_view n) { return s.name < n; });
    if (it == schemas_.end() || it->name != name) return nullptr;
    return &*it;
}

void Instance::check(std::span<const Atom> atoms) const {
    for (const Atom& atom : atoms) {
        const RelationSchema* schema = find_schema(atom.relation);
        if (!schema) throw SchemaError("undeclared relation " + atom.relation);
        if (schema->arity != atom.terms.size())
            throw SchemaError("atom " + to_string(atom) + " does not match arity " +
                              std::to_string(schema->arity) + " of " + atom.relation);
    }
}

void Instance::check(const Tuple& tuple) const {
    const RelationSchema* schema = find_schema(tuple.relation);
    if (!schema) throw SchemaError("undeclared relation " + tuple.relation);
    if (schema->arity != tuple.constants.size())
        throw SchemaError("tuple " + to_string(tuple) + " does not match arity " +
                          std::to_string(schema->arity) + " of " + tuple.relation);
}

Instance Instance::all_endogenous() const { return Instance(schemas_, all_, {}); }

Instance Instance::all_exogenous() const { return Instance(schemas_, {}, all_); }

Instance Instance::make_exogenous(const TupleSet& tuples) const {
    for (const Tuple& t : tuples)
        if (!contains(t)) throw DomainError("tuple " + to_string(t) + " is not in the instance");
    return Instance(schemas_, set_difference(endogenous_, tuples), set_union(exogenous_, tuples));
}

Instance Instance::with_endogenous(const Tuple& tuple) const {
    TupleSet endo = endogenous_;
    endo.insert(tuple);
    return Instance(schemas_, std::move(endo), exogenous_);
}

Instance Instance::with_exogenous(const Tuple& tuple) const {
    TupleSet exo = exogenous_;
    exo.insert(tuple);
    return Instance(schemas_, endogenous_, std::move(exo));
}

void for_each_valuation(const TupleSet& tuples, std::span<const Atom> atoms,
                        const std::function<bool(const Valuation&,
                                                 std::span<const Tuple* const>)>& visit) {
    detail::CompiledBody body = detail::compile_body(atoms);
    detail::RelationView view(tuples);
    detail::join(
        body, [&](std::size_t i) { return view[body.atoms[i].relation]; },
        [&](const detail::Binding& binding, std::span<const Tuple* const> image) {
            Valuation valuation;
            for (std::size_t v = 0; v < binding.size(); ++v)
                valuation.emplace(body.variables[v], *binding[v]);
            return visit(valuation, image);
        });
}

bool eval_bcq(const TupleSet& tuples, const ConjunctiveQuery& query) {
    detail::CompiledBody body = detail::compile_body(query.atoms());
    detail::RelationView view(tuples);
    bool found = false;
    detail::join(
        body, [&](std::size_t i) { return view[body.atoms[i].relation]; },
        [&](const detail::Binding&, std::span<const Tuple* const>) {
            found = true;
            return false;
        });
    return found;
}

bool eval_bcq(const Instance& instance, const ConjunctiveQuery& query) {
    instance.check(query.atoms());
    return eval_bcq(instance.tuples(), query);
}

std::set<Witness> witnesses(const TupleSet& tuples, const ConjunctiveQuery& query) {
    detail::CompiledBody body = detail::compile_body(query.atoms());
    detail::RelationView view(tuples);
    std::set<Witness> images;
    detail::join(
        body, [&](std::size_t i) { return view[body.atoms[i].relation]; },
        [&](const detail::Binding&, std::span<const Tuple* const> image) {
            Witness w;
            for (const Tuple* t : image) w.insert(*t);
            images.insert(std::move(w));
            return true;
        });

    // Keep the subset-minimal images. Checking candidates in size order
    // means a set only needs comparing against already-accepted ones.
    std::vector<const Witness*> by_size;
    for (const Witness& w : images) by_size.push_back(&w);
    std::stable_sort(by_size.begin(), by_size.end(),
                     [](const Witness* a, const Witness* b) { return a->size() < b->size(); });
    std::vector<const Witness*> accepted;
    std::set<Witness> out;
    for (const Witness* w : by_size) {
        bool dominated = std::any_of(accepted.begin(), accepted.end(), [&](const Witness* a) {
            return a->size() < w->size() && is_subset(*a, *w);
        });
        if (!dominated) {
            accepted.push_back(w);
            out.insert(*w);
        }
    }
    return out;
}

std::set<Witness> witnesses(const Instance& instance, const ConjunctiveQuery& query) {
    instance.check(query.atoms());
    return witnesses(instance.tuples(), query);
}

bool satisfies_dc(const TupleSet& tuples, const DenialConstraint& constraint) {
    return !eval_bcq(tuples, view_to_query(dc_to_view(constraint)));
}

bool satisfies_dc(const Instance& instance, const DenialConstraint& constraint) {
    instance.check(constraint.atoms());
    return satisfies_dc(instance.tuples(), constraint);
}

} // namespace causelab
