#include "causelab/hitting_sets.hpp"

#include <algorithm>
#include <limits>

#include "causelab/errors.hpp"

namespace causelab::hs {

bool intersects(const ElementSet& a, const ElementSet& b) {
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i == *j) return true;
        if (*i < *j) ++i; else ++j;
    }
    return false;
}

bool contains(const ElementSet& set, Element e) {
    return std::binary_search(set.begin(), set.end(), e);
}

namespace {

bool is_subset(const ElementSet& sub, const ElementSet& super) {
    return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

bool by_size_then_lex(const ElementSet& a, const ElementSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

} // namespace

SetFamily minimize(SetFamily family) {
    std::sort(family.begin(), family.end(), by_size_then_lex);
    family.erase(std::unique(family.begin(), family.end()), family.end());
    SetFamily kept;
    for (ElementSet& s : family) {
        bool dominated = std::any_of(kept.begin(), kept.end(),
                                     [&](const ElementSet& k) { return is_subset(k, s); });
        if (!dominated) kept.push_back(std::move(s));
    }
    std::sort(kept.begin(), kept.end());
    return kept;
}

SetFamily minimal_hitting_sets(const SetFamily& family, const Limits& limits) {
    SetFamily edges = minimize(family);
    if (!edges.empty() && edges.front().empty()) return {};
    std::sort(edges.begin(), edges.end(), by_size_then_lex);

    SetFamily current{ElementSet{}};
    for (const ElementSet& edge : edges) {
        SetFamily hitting;
        SetFamily missing;
        for (ElementSet& t : current) {
            if (intersects(t, edge)) hitting.push_back(std::move(t));
            else missing.push_back(std::move(t));
        }
        // T u {e} can only be dominated by a set that already hits the edge.
        SetFamily next = hitting;
        for (const ElementSet& t : missing) {
            for (Element e : edge) {
                ElementSet candidate = t;
                candidate.insert(std::upper_bound(candidate.begin(), candidate.end(), e), e);
                bool dominated = std::any_of(hitting.begin(), hitting.end(), [&](const ElementSet& h) {
                    return is_subset(h, candidate);
                });
                if (!dominated) {
                    next.push_back(std::move(candidate));
                    if (next.size() > limits.max_sets)
                        throw BudgetError("hitting-set enumeration exceeded " +
                                          std::to_string(limits.max_sets) + " sets");
                }
            }
        }
        current = std::move(next);
    }
    std::sort(current.begin(), current.end());
    return current;
}

namespace {

class MinimumSearch {
public:
    explicit MinimumSearch(SetFamily edges) : edges_(std::move(edges)) {
        Element top = 0;
        for (const ElementSet& e : edges_)
            for (Element x : e) top = std::max(top, x);
        chosen_.assign(static_cast<std::size_t>(top) + 1, 0);
        excluded_.assign(chosen_.size(), 0);
        // Any union of one element per edge is a hitting set.
        best_ = edges_.size() + 1;
    }

    std::size_t run() {
        search(0);
        return best_;
    }

private:
    bool hit(const ElementSet& edge) const {
        return std::any_of(edge.begin(), edge.end(), [&](Element x) { return chosen_[x] != 0; });
    }

    std::size_t available(const ElementSet& edge) const {
        return static_cast<std::size_t>(
            std::count_if(edge.begin(), edge.end(), [&](Element x) { return excluded_[x] == 0; }));
    }

    // Greedy packing of pairwise disjoint unhit edges: each needs its own element.
    std::size_t lower_bound(const std::vector<const ElementSet*>& unhit) const {
        std::vector<char> used(chosen_.size(), 0);
        std::size_t count = 0;
        for (const ElementSet* e : unhit) {
            bool disjoint = std::none_of(e->begin(), e->end(), [&](Element x) { return used[x] != 0; });
            if (!disjoint) continue;
            for (Element x : *e) used[x] = 1;
            ++count;
        }
        return count;
    }

    void search(std::size_t depth) {
        std::vector<const ElementSet*> unhit;
        const ElementSet* branch = nullptr;
        std::size_t branch_width = std::numeric_limits<std::size_t>::max();
        for (const ElementSet& e : edges_) {
            if (hit(e)) continue;
            std::size_t width = available(e);
            if (width == 0) return;
            unhit.push_back(&e);
            if (width < branch_width) {
                branch_width = width;
                branch = &e;
            }
        }
        if (!branch) {
            best_ = std::min(best_, depth);
            return;
        }
        std::sort(unhit.begin(), unhit.end(),
                  [](const ElementSet* a, const ElementSet* b) { return a->size() < b->size(); });
        if (depth + lower_bound(unhit) >= best_) return;

        std::vector<Element> newly_excluded;
        for (Element x : *branch) {
            if (excluded_[x]) continue;
            chosen_[x] = 1;
            search(depth + 1);
            chosen_[x] = 0;
            // Later siblings need not consider x again.
            excluded_[x] = 1;
            newly_excluded.push_back(x);
        }
        for (Element x : newly_excluded) excluded_[x] = 0;
    }

    SetFamily edges_;
    std::vector<char> chosen_;
    std::vector<char> excluded_;
    std::size_t best_;
};

} // namespace

std::optional<std::size_t> minimum_hitting_set_size(const SetFamily& family,
                                                    const ElementSet& forbidden) {
    SetFamily edges;
    edges.reserve(family.size());
    for (const ElementSet& e : family) {
        ElementSet allowed;
        std::set_difference(e.begin(), e.end(), forbidden.begin(), forbidden.end(),
                            std::back_inserter(allowed));
        if (allowed.empty()) return std::nullopt;
        edges.push_back(std::move(allowed));
    }
    edges = minimize(std::move(edges));
    if (edges.empty()) return 0;
    return MinimumSearch(std::move(edges)).run();
}

} // namespace causelab::hs
