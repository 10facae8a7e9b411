#pragma once

// Finite simple undirected graphs on vertex set {0, ..., n-1}, plus the
// structural subroutines the rest of the library is built on: connected
// components, biconnected blocks / articulation vertices / bridges, induced
// subgraphs with id translation, BFS shortest paths with forbidden vertices,
// and the standard graph operations (complement, disjoint union, join).
//
// Conventions used throughout the library:
//   * adjacency lists are kept sorted ascending, so iteration order (and with
//     it every tie-break downstream) is deterministic;
//   * an edge is stored once in `edges` as (min,max), lexicographically sorted;
//   * vertex sets passed across the API are sorted vectors of distinct ids.

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cyclecon {

struct Graph {
    int n = 0;
    std::vector<std::vector<int>> adj;          // sorted ascending
    std::vector<std::pair<int, int>> edges;     // (u,v) with u < v, lex sorted

    // Builds a graph after validating: 0 <= u,v < n, no self-loops.
    // Parallel pairs in `pairs` are collapsed to one edge.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& pairs);

    int edge_count() const { return static_cast<int>(edges.size()); }
    int degree(int v) const { return static_cast<int>(adj[v].size()); }
    bool has_edge(int u, int v) const;
    int min_degree() const;  // 0 for the empty graph
};

// ---------------------------------------------------------------------------
// Text format: header line "n m", then m lines "u v". Everything after '#' on
// a line is a comment; blank lines are skipped. Parsing is strict: exactly m
// edge pairs must follow the header and no tokens may remain afterwards.
// Self-loops are an error; duplicate edges are collapsed after parsing.
// ---------------------------------------------------------------------------
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(const std::string& text);
Graph load_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);
std::string to_edge_list(const Graph& g);

// ---------------------------------------------------------------------------
// Components.
// ---------------------------------------------------------------------------
// comp[v] = component index; components are numbered 0,1,... in order of
// their smallest vertex. Returns the number of components.
int connected_components(const Graph& g, std::vector<int>& comp);
// The vertex sets of the components, each sorted, ordered by smallest vertex.
std::vector<std::vector<int>> component_vertex_sets(const Graph& g);
bool is_connected(const Graph& g);  // true for n <= 1

// ---------------------------------------------------------------------------
// Induced subgraph with id translation.
// ---------------------------------------------------------------------------
struct InducedSubgraph {
    Graph g;                    // on {0..k-1}, k = vertices.size()
    std::vector<int> to_orig;   // new id -> original id (sorted ascending)
    std::vector<int> from_orig; // original id -> new id, -1 if absent
};
// `vertices` may be unsorted but must contain distinct valid ids.
InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

// ---------------------------------------------------------------------------
// Biconnected blocks, articulation vertices, bridges (iterative DFS).
// ---------------------------------------------------------------------------
// A block is a maximal 2-connected subgraph or a bridge edge; isolated
// vertices belong to no block. Key fact used by the convexity machinery:
// a vertex lies on a cycle of G iff it belongs to a block with >= 3 vertices.
struct Block {
    std::vector<int> vertices;               // sorted
    std::vector<std::pair<int, int>> edges;  // normalized (min,max), lex sorted
};
struct BlockDecomposition {
    std::vector<Block> blocks;               // deterministic order (DFS from 0,1,...)
    std::vector<char> is_articulation;       // size n
    std::vector<std::pair<int, int>> bridges;  // blocks that are single edges
    std::vector<char> on_cycle;              // v on some cycle <=> in a block with >=3 vertices
    // block ids containing each vertex (a vertex can be in several blocks iff
    // it is an articulation vertex); inner lists sorted ascending.
    std::vector<std::vector<int>> blocks_of_vertex;
};
BlockDecomposition block_decomposition(const Graph& g);

// ---------------------------------------------------------------------------
// BFS shortest path from s to t avoiding a vertex set and (optionally) one
// edge. Returns the vertex sequence s..t, or nullopt if t is unreachable.
// s and t must not be forbidden. Ties are broken toward smaller vertex ids
// (sorted adjacency + FIFO BFS gives the lexicographically smallest shortest
// path under the parent-of-first-discovery rule).
// ---------------------------------------------------------------------------
std::optional<std::vector<int>> shortest_path_avoiding(
    const Graph& g, int s, int t,
    const std::vector<int>& forbidden_vertices,
    std::optional<std::pair<int, int>> forbidden_edge = std::nullopt);

// ---------------------------------------------------------------------------
// Operations.
// ---------------------------------------------------------------------------
Graph complement(const Graph& g);
// Disjoint union: vertices of b are shifted by a.n.
Graph disjoint_union(const Graph& a, const Graph& b);
// Join: disjoint union plus all edges between the two sides.
Graph join(const Graph& a, const Graph& b);

}  // namespace cyclecon
