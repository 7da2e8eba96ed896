#pragma once

#include <cstddef>

namespace causelab {

/// Enumeration caps shared by every search in the library. Exceeding one
/// raises BudgetError.
struct Limits {
    /// Maximum number of sets held by any enumeration (repairs, diagnoses,
    /// hitting sets, abductive solutions, search nodes).
    std::size_t max_sets = 1'000'000;
    /// Largest |D| accepted by the subset-lattice repair oracle.
    std::size_t lattice_cap = 12;
    /// Largest endogenous part (or hypothesis set) accepted by the
    /// subset-enumeration engines.
    std::size_t brute_force_cap = 16;

    /// Defaults, with max_sets overridden by CAUSELAB_BUDGET when set.
    static Limits from_env();
};

} // namespace causelab
