#include <algorithm>
#include <bit>
#include <numeric>

#include "domlab/errors.hpp"
#include "domlab/exact.hpp"

namespace domlab {

// Exhaustive oracle for cross-validating the branch-and-bound solver. Keeps
// to first principles: adjacency straight from the coordinate rule, connected
// components summed, and per component either plain subset enumeration or a
// first-uncovered cover search whose only cut is the degree-counting one.

namespace {

struct Component {
    std::vector<uint64_t> cover_masks;  // index-local; bit j of mask i: choosing i covers j
    size_t size = 0;
};

uint64_t binomial_capped(uint64_t n, uint64_t k, uint64_t cap) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    uint64_t result = 1;
    for (uint64_t i = 0; i < k; ++i) {
        if (result > cap) return cap + 1;
        result = result * (n - i) / (i + 1);
    }
    return result;
}

// Every k-subset of [0, m), testing coverage by OR-ing masks.
bool subset_enumeration_feasible(const Component& comp, int k, uint64_t full) {
    const int m = static_cast<int>(comp.size);
    if (k == 0) return full == 0;
    std::vector<int> idx(static_cast<size_t>(k));
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        uint64_t covered = 0;
        for (int i : idx) covered |= comp.cover_masks[static_cast<size_t>(i)];
        if (covered == full) return true;
        int i = k - 1;
        while (i >= 0 && idx[static_cast<size_t>(i)] == m - k + i) --i;
        if (i < 0) return false;
        ++idx[static_cast<size_t>(i)];
        for (int j = i + 1; j < k; ++j) idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
    }
}

// Exhaustive cover search: the first uncovered element must be covered by one
// of its dominators. No incumbents, no packing, no symmetry.
bool cover_search_feasible(const Component& comp, int k, uint64_t covered, uint64_t full,
                           int max_cover, uint64_t& nodes, uint64_t node_budget) {
    if (++nodes > node_budget) throw capacity_error("oracle node budget exceeded");
    if (covered == full) return true;
    if (k == 0) return false;
    const int uncovered = std::popcount(full & ~covered);
    if (static_cast<uint64_t>(k) * static_cast<uint64_t>(max_cover) <
        static_cast<uint64_t>(uncovered))
        return false;
    const int u = std::countr_zero(full & ~covered);
    uint64_t dominators = comp.cover_masks[static_cast<size_t>(u)];  // symmetric relation
    while (dominators) {
        const int v = std::countr_zero(dominators);
        dominators &= dominators - 1;
        if (cover_search_feasible(comp, k - 1, covered | comp.cover_masks[static_cast<size_t>(v)],
                                  full, max_cover, nodes, node_budget))
            return true;
    }
    return false;
}

int component_minimum(const Component& comp, int max_k, const OracleOptions& options,
                      uint64_t& nodes) {
    const uint64_t full = comp.size == 64 ? ~0ull : (1ull << comp.size) - 1;
    int max_cover = 0;
    for (uint64_t mask : comp.cover_masks)
        max_cover = std::max(max_cover, std::popcount(mask));
    if (max_cover == 0) return -1;  // total domination of an isolated vertex
    for (int k = 0; k <= max_k; ++k) {
        const uint64_t combos = binomial_capped(comp.size, static_cast<uint64_t>(k),
                                                options.combination_budget);
        bool feasible;
        if (combos <= options.combination_budget) {
            feasible = subset_enumeration_feasible(comp, k, full);
        } else {
            feasible = cover_search_feasible(comp, k, 0, full, max_cover, nodes,
                                             options.node_budget);
        }
        if (feasible) return k;
    }
    return -1;
}

}  // namespace

std::optional<int> brute_force_value(const ProductGraph& g, DominationKind kind, int max_k,
                                     const OracleOptions& options) {
    if (!g.counts_fit_u64() || g.vertex_count() > options.vertex_cap)
        throw capacity_error("instance exceeds the oracle vertex cap of " +
                             std::to_string(options.vertex_cap));
    if (max_k < 0) return std::nullopt;
    const int n = static_cast<int>(g.vertex_count());

    std::vector<Vertex> verts;
    verts.reserve(static_cast<size_t>(n));
    {
        Vertex v(static_cast<size_t>(g.factor_count()), 0);
        verts.push_back(v);
        while (g.next_vertex(v)) verts.push_back(v);
    }

    // adjacency straight from the definition
    std::vector<std::vector<int>> adj(static_cast<size_t>(n));
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            if (g.adjacent(verts[static_cast<size_t>(a)], verts[static_cast<size_t>(b)])) {
                adj[static_cast<size_t>(a)].push_back(b);
                adj[static_cast<size_t>(b)].push_back(a);
            }
        }
    }

    // connected components; domination splits as a sum over them
    std::vector<int> comp_of(static_cast<size_t>(n), -1);
    std::vector<std::vector<int>> comps;
    for (int s = 0; s < n; ++s) {
        if (comp_of[static_cast<size_t>(s)] != -1) continue;
        std::vector<int> queue = {s};
        comp_of[static_cast<size_t>(s)] = static_cast<int>(comps.size());
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            for (int nb : adj[static_cast<size_t>(queue[qi])]) {
                if (comp_of[static_cast<size_t>(nb)] == -1) {
                    comp_of[static_cast<size_t>(nb)] = static_cast<int>(comps.size());
                    queue.push_back(nb);
                }
            }
        }
        std::sort(queue.begin(), queue.end());
        comps.push_back(std::move(queue));
    }

    uint64_t nodes = 0;
    int total = 0;
    for (const auto& members : comps) {
        Component comp;
        comp.size = members.size();
        comp.cover_masks.assign(comp.size, 0);
        for (size_t i = 0; i < comp.size; ++i) {
            if (kind == DominationKind::dominating) comp.cover_masks[i] |= 1ull << i;
            for (int nb : adj[static_cast<size_t>(members[i])]) {
                const auto it = std::lower_bound(members.begin(), members.end(), nb);
                comp.cover_masks[i] |= 1ull << static_cast<size_t>(it - members.begin());
            }
        }
        const int remaining = max_k - total;
        if (remaining < 0) return std::nullopt;
        const int best = component_minimum(comp, remaining, options, nodes);
        if (best < 0) return std::nullopt;
        total += best;
    }
    return total;
}

}  // namespace domlab
