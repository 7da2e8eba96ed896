#pragma once

// Hitting sets over a small integer universe. Every cause, repair,
// diagnosis and necessary-set computation reduces to one of these.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "causelab/limits.hpp"

namespace causelab::hs {

using Element = std::uint32_t;
/// Sorted, duplicate-free.
using ElementSet = std::vector<Element>;
using SetFamily = std::vector<ElementSet>;

bool intersects(const ElementSet& a, const ElementSet& b);
bool contains(const ElementSet& set, Element e);

/// Drops duplicates and proper supersets; the result is sorted.
SetFamily minimize(SetFamily family);

/// All subset-minimal hitting sets (the transversal hypergraph), computed
/// incrementally edge by edge. An empty family yields {{}}; a family
/// containing the empty set yields {}. Throws BudgetError when an
/// intermediate antichain grows beyond limits.max_sets.
SetFamily minimal_hitting_sets(const SetFamily& family, const Limits& limits = {});

/// Size of a smallest hitting set that uses no element of `forbidden`, or
/// nullopt when none exists. Branch and bound.
std::optional<std::size_t> minimum_hitting_set_size(const SetFamily& family,
                                                    const ElementSet& forbidden = {});

} // namespace causelab::hs
