#pragma once

// Backtracking join of an atom list against per-atom candidate tuples.
// Shared by BCQ evaluation and the Datalog fixpoint.

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "causelab/model.hpp"

namespace causelab::detail {

struct CompiledAtom {
    std::string relation;
    /// Variable slot per position, or -1 for a constant.
    std::vector<int> slots;
    std::vector<std::string> constants;
};

struct CompiledBody {
    std::vector<CompiledAtom> atoms;
    std::vector<std::string> variables;

    int slot_of(const std::string& variable) const;
};

CompiledBody compile_body(std::span<const Atom> atoms);

using Candidates = std::span<const Tuple* const>;

/// Tuples of a set grouped by relation. Holds pointers into the set, so the
/// set must outlive the view.
class RelationView {
public:
    RelationView() = default;
    explicit RelationView(const TupleSet& tuples);

    Candidates operator[](const std::string& relation) const;

private:
    std::map<std::string, std::vector<const Tuple*>, std::less<>> by_relation_;
};

using Binding = std::vector<const std::string*>;

/// Enumerates every valuation. `source(i)` yields the candidates for atom i;
/// `visit(binding, image)` returns false to stop. Returns false iff stopped.
template <class Source, class Visit>
bool join(const CompiledBody& body, Source&& source, Visit&& visit) {
    Binding binding(body.variables.size(), nullptr);
    std::vector<const Tuple*> image(body.atoms.size(), nullptr);
    std::vector<int> bound_here;

    auto step = [&](auto& self, std::size_t index) -> bool {
        if (index == body.atoms.size()) {
            return visit(static_cast<const Binding&>(binding),
                         std::span<const Tuple* const>(image));
        }
        const CompiledAtom& atom = body.atoms[index];
        for (const Tuple* tuple : source(index)) {
            if (tuple->constants.size() != atom.slots.size()) continue;
            std::size_t mark = bound_here.size();
            bool ok = true;
            for (std::size_t k = 0; k < atom.slots.size() && ok; ++k) {
                const std::string& value = tuple->constants[k];
                int slot = atom.slots[k];
                if (slot < 0) {
                    ok = atom.constants[k] == value;
                } else if (binding[slot] == nullptr) {
                    binding[slot] = &value;
                    bound_here.push_back(slot);
                } else {
                    ok = *binding[slot] == value;
                }
            }
            bool keep_going = true;
            if (ok) {
                image[index] = tuple;
                keep_going = self(self, index + 1);
            }
            for (std::size_t k = mark; k < bound_here.size(); ++k) binding[bound_here[k]] = nullptr;
            bound_here.resize(mark);
            if (!keep_going) return false;
        }
        return true;
    };
    return step(step, 0);
}

} // namespace causelab::detail
