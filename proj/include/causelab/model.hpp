#pragma once

#include <compare>
#include <functional>
#include <cstddef>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace causelab {

struct RelationSchema {
    std::string name;
    std::size_t arity = 0;

    friend auto operator<=>(const RelationSchema&, const RelationSchema&) = default;
};

/// A ground atom. Ordering is canonical: relation name first, then the
/// constants lexicographically.
struct Tuple {
    std::string relation;
    std::vector<std::string> constants;

    friend auto operator<=>(const Tuple&, const Tuple&) = default;
};

/// R(a2,a1); zero-ary atoms print as their bare name.
std::string to_string(const Tuple& tuple);

using TupleSet = std::set<Tuple>;

/// A minimal support set of a positive query.
using Witness = TupleSet;

std::string to_string(const TupleSet& tuples);

TupleSet set_union(const TupleSet& a, const TupleSet& b);
TupleSet set_difference(const TupleSet& a, const TupleSet& b);
bool is_subset(const TupleSet& sub, const TupleSet& super);

struct Term {
    enum class Kind { variable, constant };

    Kind kind = Kind::variable;
    std::string name;

    static Term variable(std::string name) { return {Kind::variable, std::move(name)}; }
    static Term constant(std::string name) { return {Kind::constant, std::move(name)}; }
    bool is_variable() const noexcept { return kind == Kind::variable; }

    friend auto operator<=>(const Term&, const Term&) = default;
};

struct Atom {
    std::string relation;
    std::vector<Term> terms;

    friend auto operator<=>(const Atom&, const Atom&) = default;
};

std::string to_string(const Atom& atom);

/// Variable -> constant.
using Valuation = std::map<std::string, std::string>;

namespace detail {

/// Shared representation of the three syntactic faces of one atom list.
template <class Tag>
class AtomList {
public:
    explicit AtomList(std::vector<Atom> atoms);

    const std::vector<Atom>& atoms() const noexcept { return atoms_; }

    friend bool operator==(const AtomList&, const AtomList&) = default;

private:
    std::vector<Atom> atoms_;
};

struct QueryTag {};
struct ConstraintTag {};
struct ViewTag {};

} // namespace detail

/// Boolean conjunctive query: the existential closure of its atoms.
using ConjunctiveQuery = detail::AtomList<detail::QueryTag>;
/// The universal closure of the negated conjunction of its atoms.
using DenialConstraint = detail::AtomList<detail::ConstraintTag>;
/// Boolean query that is true exactly when its constraint is violated.
using ViolationView = detail::AtomList<detail::ViewTag>;

extern template class detail::AtomList<detail::QueryTag>;
extern template class detail::AtomList<detail::ConstraintTag>;
extern template class detail::AtomList<detail::ViewTag>;

DenialConstraint query_to_dc(const ConjunctiveQuery& query);
ViolationView dc_to_view(const DenialConstraint& constraint);
ConjunctiveQuery view_to_query(const ViolationView& view);

/// A relational instance D = Dn u Dx. The two parts are disjoint and every
/// tuple conforms to a declared schema.
class Instance {
public:
    Instance() = default;
    Instance(std::vector<RelationSchema> schemas, TupleSet endogenous, TupleSet exogenous);

    const std::vector<RelationSchema>& schemas() const noexcept { return schemas_; }
    const TupleSet& endogenous() const noexcept { return endogenous_; }
    const TupleSet& exogenous() const noexcept { return exogenous_; }
    const TupleSet& tuples() const noexcept { return all_; }

    bool contains(const Tuple& tuple) const { return all_.contains(tuple); }
    bool is_endogenous(const Tuple& tuple) const { return endogenous_.contains(tuple); }

    const RelationSchema* find_schema(std::string_view name) const;

    /// SchemaError unless every atom names a declared relation with the
    /// right arity.
    void check(std::span<const Atom> atoms) const;
    void check(const Tuple& tuple) const;

    /// Same tuples, all of them endogenous.
    Instance all_endogenous() const;
    /// Same tuples, all of them exogenous.
    Instance all_exogenous() const;
    /// Moves the given tuples (which must be in D) to the exogenous part.
    Instance make_exogenous(const TupleSet& tuples) const;
    Instance with_endogenous(const Tuple& tuple) const;
    Instance with_exogenous(const Tuple& tuple) const;

    friend bool operator==(const Instance& a, const Instance& b) {
        return a.schemas_ == b.schemas_ && a.endogenous_ == b.endogenous_ &&
               a.exogenous_ == b.exogenous_;
    }

private:
    std::vector<RelationSchema> schemas_;
    TupleSet endogenous_;
    TupleSet exogenous_;
    TupleSet all_;
};

/// Calls `visit(valuation, image)` for every valuation of `atoms` into
/// `tuples`; `image[i]` is the tuple atom i is mapped to. Enumeration stops
/// early when `visit` returns false.
void for_each_valuation(const TupleSet& tuples, std::span<const Atom> atoms,
                        const std::function<bool(const Valuation&,
                                                 std::span<const Tuple* const>)>& visit);

bool eval_bcq(const TupleSet& tuples, const ConjunctiveQuery& query);
bool eval_bcq(const Instance& instance, const ConjunctiveQuery& query);

/// All minimal support sets of the query in `tuples`, canonically ordered.
std::set<Witness> witnesses(const TupleSet& tuples, const ConjunctiveQuery& query);
std::set<Witness> witnesses(const Instance& instance, const ConjunctiveQuery& query);

bool satisfies_dc(const TupleSet& tuples, const DenialConstraint& constraint);
bool satisfies_dc(const Instance& instance, const DenialConstraint& constraint);

} // namespace causelab
