#pragma once

// The cycle interval operator and everything defined from it.
//
// For S ⊆ V(G), the interval I(S) is S together with every vertex u such that
// G[S ∪ {u}] has a cycle through u. Equivalently — and this is what the fast
// implementation uses — u joins I(S) exactly when u has two distinct neighbors
// in a single connected component of G[S] (the two neighbors are linked by a
// path inside S, which closes a cycle through u; conversely a cycle through u
// in G[S ∪ {u}] visits two such neighbors). A slow literal implementation that
// searches for the cycle via biconnected blocks is kept alongside as a test
// oracle for that equivalence.
//
// Iterating I yields the hull H(S): I^0 ⊂ I^1 ⊂ ... strictly grows until it
// hits a fixpoint. S is convex when I(S) = S, and a hull set when H(S) = V.

#include <optional>
#include <vector>

#include "cyclecon/graph.hpp"

namespace cyclecon {

// One application of the interval operator. S must be a set of distinct valid
// vertex ids (any order); the result is sorted ascending.
std::vector<int> interval_step(const Graph& g, const std::vector<int>& S);

// Literal implementation straight from the definition: for each u ∉ S, build
// G[S ∪ {u}] and test whether u lies on a cycle (i.e. u is in a biconnected
// block with >= 3 vertices). Quadratic and only used to cross-check
// interval_step.
std::vector<int> interval_step_by_cycle_search(const Graph& g, const std::vector<int>& S);

// The full iteration record of the hull computation.
struct HullTrace {
    // layers[k] = I^k(S), sorted; layers.front() = S (sorted), layers.back()
    // is the hull. Strictly increasing until the final entry, which is the
    // first fixpoint and appears exactly once.
    std::vector<std::vector<int>> layers;
    // Index of the first fixpoint layer: 0 iff S is already convex.
    int converged_at = 0;

    const std::vector<int>& hull() const { return layers.back(); }
};

HullTrace hull(const Graph& g, const std::vector<int>& S);

bool is_convex(const Graph& g, const std::vector<int>& S);
bool is_hull_set(const Graph& g, const std::vector<int>& S);

// Smallest t with I^t(S) = V, or nullopt if S is not a hull set.
// For a hull set this equals hull(g, S).converged_at... except that the two
// agree by construction; the separate entry point exists so callers asking
// the percolation question don't have to reason about non-hull sets.
std::optional<int> percolation_time_of_set(const Graph& g, const std::vector<int>& S);

// S is convexly independent when no member is generated by the others in a
// single interval step: v ∉ I(S∖{v}) for every v ∈ S, i.e. no member lies on
// a cycle of G[S]. Equivalent characterization (tested, not assumed): S is
// convexly independent iff G[S] is a forest — which makes the rank of this
// convexity coincide with the largest induced forest.
//
// Deliberately NOT the hull-based notion "v ∉ H(S∖{v})": that stricter
// condition is not equivalent to the forest test (K4 minus an edge, S = the
// 3-vertex induced path: the degree-2 members each lie in the two-step hull
// of the other two), and the forest equivalence is the load-bearing fact the
// rank results rest on. A regression test pins the distinction.
bool is_convexly_independent(const Graph& g, const std::vector<int>& S);

}  // namespace cyclecon
