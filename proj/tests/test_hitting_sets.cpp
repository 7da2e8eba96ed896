#include <gtest/gtest.h>

#include <random>

#include "causelab/errors.hpp"
#include "causelab/hitting_sets.hpp"

namespace causelab::hs {
namespace {

// Subset enumeration over a universe of n elements.
SetFamily brute_minimal(const SetFamily& family, Element n) {
    SetFamily hitting;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        ElementSet s;
        for (Element e = 0; e < n; ++e)
            if (mask & (1u << e)) s.push_back(e);
        bool ok = std::all_of(family.begin(), family.end(),
                              [&](const ElementSet& edge) { return intersects(s, edge); });
        if (ok) hitting.push_back(s);
    }
    SetFamily out = minimize(hitting);
    std::sort(out.begin(), out.end());
    return out;
}

SetFamily sorted(SetFamily f) {
    std::sort(f.begin(), f.end());
    return f;
}

TEST(HittingSets, EdgeCases) {
    EXPECT_EQ(minimal_hitting_sets({}), SetFamily{ElementSet{}});
    EXPECT_TRUE(minimal_hitting_sets({{}}).empty());
    EXPECT_TRUE(minimal_hitting_sets({{0, 1}, {}}).empty());
    EXPECT_EQ(minimum_hitting_set_size({}), 0u);
    EXPECT_FALSE(minimum_hitting_set_size({{}}).has_value());
}

TEST(HittingSets, TwoDisjointPairs) {
    SetFamily expected{{0, 2}, {0, 3}, {1, 2}, {1, 3}};
    EXPECT_EQ(sorted(minimal_hitting_sets({{0, 1}, {2, 3}})), expected);
    EXPECT_EQ(minimum_hitting_set_size({{0, 1}, {2, 3}}), 2u);
}

TEST(HittingSets, ForbiddenElements) {
    EXPECT_EQ(minimum_hitting_set_size({{0, 1}, {1, 2}}, {1}), 2u);
    EXPECT_FALSE(minimum_hitting_set_size({{0, 1}}, {0, 1}).has_value());
}

TEST(HittingSets, Minimize) {
    EXPECT_EQ(minimize({{0, 1}, {0}, {0}, {1, 2}}), (SetFamily{{0}, {1, 2}}));
}

TEST(HittingSets, BudgetIsEnforced) {
    Limits tight;
    tight.max_sets = 3;
    EXPECT_THROW(minimal_hitting_sets({{0, 1}, {2, 3}}, tight), BudgetError);
}

TEST(HittingSets, MatchSubsetEnumeration) {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 400; ++trial) {
        const Element n = 1 + rng() % 9;
        SetFamily family;
        for (int e = 0, m = rng() % 6; e < m; ++e) {
            ElementSet edge;
            for (Element x = 0; x < n; ++x)
                if (rng() % 3 == 0) edge.push_back(x);
            if (edge.empty()) edge.push_back(rng() % n);
            family.push_back(edge);
        }
        SetFamily expected = brute_minimal(family, n);
        ASSERT_EQ(sorted(minimal_hitting_sets(family)), expected);
        std::size_t smallest = expected.front().size();
        for (const ElementSet& s : expected) smallest = std::min(smallest, s.size());
        ASSERT_EQ(minimum_hitting_set_size(family), smallest);
    }
}

} // namespace
} // namespace causelab::hs
