#pragma once

// Percolation-time machinery.
//
// The percolation number pn(G) is the maximum, over all hull sets S, of the
// smallest t with I^t(S) = V. Deciding pn(G) >= k is NP-complete in general;
// this module implements the two tractable entry points the library offers:
//
//   * an exact algorithm for cacti. The cycles of a cactus meet pairwise in
//     at most one vertex, so the cycle/vertex incidences form a forest; the
//     percolation number falls out of the longest path of that forest, and a
//     witness hull set is built constructively by repeatedly stripping the
//     outermost layer of end cycles.
//
//   * a polynomial decision of "pn(G) >= 2" for arbitrary graphs. The engine
//     is an explicit local structure (two overlapping cycles around an edge
//     vw) whose existence is equivalent to some set needing two rounds to
//     swallow a vertex; any such seed set is then extended to a full hull
//     set that still leaves that vertex out of the first round.
//
// Everything returns witnesses, and every constructive claim is re-verified
// literally against the interval operator before being handed back (a failed
// re-verification is a bug and throws std::logic_error).

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cyclecon/graph.hpp"

namespace cyclecon {

// ---------------------------------------------------------------------------
// Cactus recognition.
// ---------------------------------------------------------------------------
// A graph is a cactus when every biconnected block is a single edge or a
// simple cycle, i.e. no block has more edges than vertices.
struct CactusCheck {
    bool ok = false;
    // When not a cactus: the lexicographically smallest edge of the first
    // block that has more edges than vertices.
    std::optional<std::pair<int, int>> violating_edge;
};
CactusCheck is_cactus(const Graph& g);

// ---------------------------------------------------------------------------
// The cycle/vertex incidence forest of a cactus.
// ---------------------------------------------------------------------------
// One node per cycle plus one node per vertex, with an edge between a cycle
// node and a vertex node iff the cycle contains the vertex. Because distinct
// cycles of a cactus share at most one vertex, this bipartite graph is a
// forest. Its maximal paths alternate vertex/cycle nodes and end at vertex
// nodes (a path ending at a cycle node extends to any unused vertex of that
// cycle), so their edge counts are even.
struct CycleIncidenceForest {
    int n = 0;                                       // vertices of the host graph
    std::vector<std::vector<int>> cycles;            // vertex set of each cycle, sorted
    std::vector<std::vector<int>> cycles_of_vertex;  // inverse incidence, sorted
};
// Throws std::invalid_argument when g is not a cactus. Asserts the structural
// identity  #cycles = m - n + #components  (any violation is a logic error).
CycleIncidenceForest cycle_incidence_forest(const Graph& g);

// Longest path of the cycle adjacency structure, counted in cycle-to-cycle
// steps: 0 for a single cycle, 1 for two cycles sharing a vertex, and so on.
// Computed as D/2 - 1 where D is the maximum edge count of a path in the
// incidence forest (two-pass farthest-node sweep per tree).
// Throws std::invalid_argument when g is not a cactus or has no cycle.
int cactus_longest_cycle_path(const Graph& g);

// ---------------------------------------------------------------------------
// Exact percolation number of a cactus, with witness.
// ---------------------------------------------------------------------------
struct PercolationResult {
    int value = 0;
    std::vector<int> witness;  // a hull set whose percolation time equals value
};
// 0 with witness V for forests; otherwise cactus_longest_cycle_path + 1.
// The witness is built by peeling the cactus: at each level every end cycle
// (one whose incidence-forest eccentricity is maximal) except a designated
// far cycle loses its vertices that lie on no other cycle; all of those
// vertices except one chosen vertex per stripped cycle go into the witness,
// and the construction recurses toward the far cycle. The chosen vertex of
// the first stripped cycle then needs exactly `value` rounds to percolate.
// Per-cycle choices take the smallest-id vertex that is not an articulation
// vertex, falling back to the smallest-id choice when every candidate is an
// articulation vertex (possible when pendant trees hang off the cycle).
// The result is literally re-verified: is_hull_set and an exact percolation
// time equal to value (std::logic_error otherwise).
// Throws std::invalid_argument when g is not a cactus.
PercolationResult pn_cactus(const Graph& g);

// ---------------------------------------------------------------------------
// The local structure behind "pn(G) >= 2".
// ---------------------------------------------------------------------------
// A witness around an edge vw that some set needs two rounds to swallow v:
//   * cycle_a: a chordless cycle through the edge vw, and
//   * cycle_b: a cycle (chords allowed) through w avoiding v, such that v has
//     at most one neighbor in cycle_b minus w.
// Both cycles are stored in cyclic vertex order, which is what makes the
// membership conditions checkable in polynomial time.
struct RStructure {
    int v = -1;
    int w = -1;
    std::vector<int> cycle_a;
    std::vector<int> cycle_b;
};

// Chordless cycle through the edge vw: the shortest v-w path that avoids the
// edge itself, closed by the edge. Shortest-path distances make any chord a
// shortcut, so the result is chordless by construction (asserted anyway).
// Returns nullopt exactly when vw is a bridge.
// Throws std::invalid_argument when vw is not an edge.
std::optional<std::vector<int>> induced_cycle_through_edge(const Graph& g, int v, int w);

// A cycle through w avoiding v in which v has at most one neighbor besides w.
// Tries each allowed extra neighbor a of v (no extra neighbor first, then
// each a in ascending order): delete v and all of N(v) \ {w, a}; w lies on a
// cycle of the remainder iff its block there has >= 3 vertices, and such a
// cycle is extracted as w plus a shortest path between two of w's block
// neighbors. First success wins. Returns nullopt when no candidate works.
// Throws std::invalid_argument when vw is not an edge.
std::optional<std::vector<int>> companion_cycle(const Graph& g, int v, int w);

// Scan ordered pairs (v, w) over adjacent vertices (v ascending, then w
// ascending among v's neighbors); the two cycle searches are independent, so
// the first pair where both succeed yields the structure.
std::optional<RStructure> find_r_structure(const Graph& g);

// A set S together with the vertex that enters I(S) exactly at round two.
struct SeedSet {
    std::vector<int> set;  // sorted
    int target = -1;       // target in I^2(set) \ I(set)
};
// Builds the two-round seed from a structure: if v has exactly one neighbor
// in cycle_b minus w the seed is cycle_b minus w; if it has none, the seed is
// everything on both cycles except v and w. Validates the structure fields
// literally (std::invalid_argument on violation) and re-checks the
// postcondition target ∈ I^2(S) \ I(S) (std::logic_error on failure).
SeedSet seed_set_from_structure(const Graph& g, const RStructure& rs);

// Extends Q to a hull set S ⊇ Q with v still outside I(S), given that v
// enters I(Q) exactly at round two (precondition checked literally,
// std::invalid_argument otherwise). Construction: let V' be v, Q, and every
// vertex outside H(Q); repeatedly delete the smallest-id vertex outside H(Q)
// that shares a cycle with v in the remaining induced subgraph (shares a
// biconnected block with >= 3 vertices); what is left of V', minus v, is S.
// Postconditions re-verified: is_hull_set(G, S), v ∉ I(S), Q ⊆ S
// (std::logic_error on failure).
std::vector<int> extend_to_hull_set(const Graph& g, int v, const std::vector<int>& Q);

// The full decision "is there a hull set S with I(S) ≠ V", i.e. pn(G) >= 2:
// find a structure, build its seed, extend to a hull set. Returns the hull
// set witness, or nullopt when no structure exists (which is exactly the
// negative case). Graphs with fewer than 3 vertices have no cycles and are
// rejected immediately.
std::optional<std::vector<int>> pn_at_least_2(const Graph& g);

// ---------------------------------------------------------------------------
// Random cactus generator (for tests and cross-checks).
// ---------------------------------------------------------------------------
// Grows a cactus by repeatedly attaching, at a random existing vertex, a
// pendant edge or a cycle of length 3..6; occasionally starts a fresh
// component. Vertex count is between 1 and max_n. Deterministic per seed.
// Throws std::invalid_argument when max_n < 1.
Graph generate_random_cactus(std::uint64_t seed, int max_n);

}  // namespace cyclecon
