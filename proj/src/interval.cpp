#include "cyclecon/interval.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cyclecon {

namespace {

// Validates S and returns it as a sorted membership mask + sorted list.
void check_set(const Graph& g, const std::vector<int>& S, std::vector<char>& in_set,
               std::vector<int>& sorted) {
    in_set.assign(g.n, 0);
    for (int v : S) {
        if (v < 0 || v >= g.n) throw std::invalid_argument("vertex id out of range in set");
        if (in_set[v]) throw std::invalid_argument("duplicate vertex id in set");
        in_set[v] = 1;
    }
    sorted = S;
    std::sort(sorted.begin(), sorted.end());
}

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Core step on a membership mask: returns the list of vertices to add.
std::vector<int> step_additions(const Graph& g, const std::vector<char>& in_set) {
    // Components of G[S] via union-find over edges inside S.
    Dsu dsu(g.n);
    for (auto [u, v] : g.edges)
        if (in_set[u] && in_set[v]) dsu.unite(u, v);
    // u enters when two of its S-neighbors share a component.
    std::vector<int> added;
    std::vector<int> seen_stamp(g.n, -1);
    for (int u = 0; u < g.n; ++u) {
        if (in_set[u]) continue;
        for (int w : g.adj[u]) {
            if (!in_set[w]) continue;
            int root = dsu.find(w);
            if (seen_stamp[root] == u) {
                added.push_back(u);
                break;
            }
            seen_stamp[root] = u;
        }
    }
    return added;
}

}  // namespace

std::vector<int> interval_step(const Graph& g, const std::vector<int>& S) {
    std::vector<char> in_set;
    std::vector<int> result;
    check_set(g, S, in_set, result);
    std::vector<int> added = step_additions(g, in_set);
    result.insert(result.end(), added.begin(), added.end());
    std::sort(result.begin(), result.end());
    return result;
}

std::vector<int> interval_step_by_cycle_search(const Graph& g, const std::vector<int>& S) {
    std::vector<char> in_set;
    std::vector<int> sorted_S;
    check_set(g, S, in_set, sorted_S);
    std::vector<int> result = sorted_S;
    for (int u = 0; u < g.n; ++u) {
        if (in_set[u]) continue;
        // Membership is decided against S alone, never against already-added
        // vertices — both implementations compute the same single step.
        std::vector<int> with_u = sorted_S;
        with_u.push_back(u);
        InducedSubgraph sub = induced_subgraph(g, with_u);
        BlockDecomposition blocks = block_decomposition(sub.g);
        if (blocks.on_cycle[sub.from_orig[u]]) result.push_back(u);
    }
    std::sort(result.begin(), result.end());
    return result;
}

HullTrace hull(const Graph& g, const std::vector<int>& S) {
    std::vector<char> in_set;
    std::vector<int> current;
    check_set(g, S, in_set, current);
    HullTrace trace;
    trace.layers.push_back(current);
    while (true) {
        std::vector<int> added = step_additions(g, in_set);
        if (added.empty()) break;
        for (int v : added) in_set[v] = 1;
        current.insert(current.end(), added.begin(), added.end());
        std::sort(current.begin(), current.end());
        trace.layers.push_back(current);
    }
    trace.converged_at = static_cast<int>(trace.layers.size()) - 1;
    return trace;
}

bool is_convex(const Graph& g, const std::vector<int>& S) {
    std::vector<char> in_set;
    std::vector<int> sorted;
    check_set(g, S, in_set, sorted);
    return step_additions(g, in_set).empty();
}

bool is_hull_set(const Graph& g, const std::vector<int>& S) {
    return static_cast<int>(hull(g, S).hull().size()) == g.n;
}

std::optional<int> percolation_time_of_set(const Graph& g, const std::vector<int>& S) {
    HullTrace trace = hull(g, S);
    if (static_cast<int>(trace.hull().size()) != g.n) return std::nullopt;
    return trace.converged_at;
}

bool is_convexly_independent(const Graph& g, const std::vector<int>& S) {
    std::vector<char> in_set;
    std::vector<int> sorted;
    check_set(g, S, in_set, sorted);
    // v ∈ I(S∖{v}) for some member v? Computed through the interval operator
    // rather than a direct acyclicity test so that the documented forest
    // equivalence stays a genuine cross-check in the tests.
    for (size_t i = 0; i < sorted.size(); ++i) {
        std::vector<int> rest;
        rest.reserve(sorted.size() - 1);
        for (size_t j = 0; j < sorted.size(); ++j)
            if (j != i) rest.push_back(sorted[j]);
        std::vector<int> step = interval_step(g, rest);
        if (std::binary_search(step.begin(), step.end(), sorted[i])) return false;
    }
    return true;
}

}  // namespace cyclecon
