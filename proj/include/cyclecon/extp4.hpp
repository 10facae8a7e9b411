#pragma once

// Polynomial convexity number on a structured graph class.
//
// The class is defined by: every induced subgraph on at most six vertices
// containing more than two induced P4s is a pseudo-split graph. Its members
// decompose recursively (Giakoumakis): a member is a union or join of
// members, or a pseudo-split graph / quasi-spider whose R-part is a member,
// or one of the small leaves (C5, P5, co-P5, at most one vertex).
//
// A pseudo-split graph carries a partition (S, C, R): S independent and
// |S| >= 2, C a clique and |C| >= 2, no S-R edges, complete C-R join, every
// C-vertex has an S-neighbor and every S-vertex misses some C-vertex (R may
// be empty). A spider additionally has |S| = |C| with a bijection f: C -> S,
// either N(c) ∩ S = {f(c)} for all c (thin) or N(c) ∩ S = S∖{f(c)} (thick).
// A quasi-spider arises from a spider by replacing one vertex of S ∪ C with
// two vertices forming a K2 or a co-K2 that inherit its outside adjacency.
// Replacing an S-vertex by a co-K2 or a C-vertex by a K2 again yields a
// pseudo-split graph, so only the other two replacements need dedicated
// detection.
//
// On this class the convexity number follows closed formulas: union and join
// reduce to the parts (con_union / con_join), and a pseudo-split or
// quasi-spider component has con = n-1 when it has a degree-1 vertex and
// α(G[R]) + |S| otherwise (S counted in the underlying spider for the
// dedicated quasi kinds). α itself recurses over the same tree.

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "cyclecon/graph.hpp"

namespace cyclecon {

enum class NodeKind { Single, CycleFive, PathFive, CoPathFive, Union, Join, PseudoSplit };
enum class SpiderType { Thin, Thick };
enum class ReplacementKind { K2InS, CoK2InS, K2InC, CoK2InC };

struct PseudoSplitPartition {
    std::vector<int> S, C, R;  // sorted vertex ids
};

struct QuasiSpiderInfo {
    ReplacementKind kind;
    int kept;       // the replacement vertex that stands in for the original
    int duplicate;  // its twin
};

// Result of the partition search on a single graph. Conventions:
//   * plain pseudo-split (quasi of the pseudo-split kinds included): the
//     partition covers all vertices and satisfies the literal conditions;
//   * dedicated quasi kinds (K2 on the independent side, co-K2 on the clique
//     side): `partition` describes the underlying spider on V ∖ {duplicate},
//     which does satisfy the literal conditions; the full graph adds
//     `duplicate` as a twin of `kept` on the respective side.
struct PseudoSplitFind {
    PseudoSplitPartition partition;
    std::optional<SpiderType> spider;                // set when partition is a spider
    std::vector<std::pair<int, int>> spider_pairing; // (c, f(c)) pairs, c ascending
    std::optional<QuasiSpiderInfo> quasi;
};

// Literal verification of the partition conditions; exposed because every
// acceptance of a candidate partition goes through it.
bool verify_pseudo_split(const Graph& g, const PseudoSplitPartition& p);

// Finds a pseudo-split partition (or a quasi-spider structure) of G, or
// nullopt. Deterministic. Works on any graph; decompose() calls it for
// connected, co-connected graphs that are none of the small leaves.
std::optional<PseudoSplitFind> find_pseudo_split_partition(const Graph& g);

// ---------------------------------------------------------------------------
// Decomposition tree.
// ---------------------------------------------------------------------------
struct DecompNode {
    NodeKind kind = NodeKind::Single;
    std::vector<int> vertices;  // ids in the host graph, sorted
    // Union/Join: the parts (>= 2). PseudoSplit: zero children if R is empty,
    // else exactly one child for G[R].
    std::vector<std::unique_ptr<DecompNode>> children;
    // PseudoSplit only:
    std::optional<PseudoSplitFind> split;
};

struct Decomposition {
    std::unique_ptr<DecompNode> root;
};

// Structural decomposition; nullopt when G is not in the class (rejection is
// a value, not an error). Check order: trivial size, the three 5-vertex
// leaves by direct isomorphism test, union of components, join of
// co-components, pseudo-split / quasi-spider with recursion into G[R].
std::optional<Decomposition> decompose(const Graph& g);

// Certificate check: does this tree prove that g (restricted to each node's
// vertex set) has the claimed structure? Used by tests and the generator.
bool validate_decomposition(const Graph& g, const Decomposition& d);

// ---------------------------------------------------------------------------
// Independence number via the tree.
// ---------------------------------------------------------------------------
int alpha_ext_p4_laden(const Graph& g, const DecompNode& node);
// A maximum independent set realizing it (sorted, deterministic).
std::vector<int> alpha_witness_ext_p4_laden(const Graph& g, const DecompNode& node);

// ---------------------------------------------------------------------------
// Convexity number: closed formulas.
// ---------------------------------------------------------------------------
// Union of two disjoint graphs: max(n1 + con2, con1 + n2).
int con_union(int n1, int con1, int n2, int con2);

// Join formula on precomputed data; c_i = size of the smallest connected
// component of side i (ignored unless the other side is a single vertex).
int con_join_parts(int n1, int alpha1, int c1, int n2, int alpha2, int c2);
// Convenience overload computing c_i from the graphs. Sides must be nonempty.
int con_join(const Graph& g1, const Graph& g2, int alpha1, int alpha2);

// Pseudo-split / quasi-spider component: n-1 if some vertex of g_component
// has degree 1, else alpha_R + |S| with S from the (underlying) partition.
// g_component must be exactly the component the partition lives on.
int con_pseudo_split(const Graph& g_component, const PseudoSplitFind& found, int alpha_R);

// Whole-graph convexity number over a decomposition of g.
int con_ext_p4_laden(const Graph& g, const Decomposition& d);
// A largest proper convex set realizing con (constructive, no brute force).
std::vector<int> con_witness_ext_p4_laden(const Graph& g, const Decomposition& d);

// ---------------------------------------------------------------------------
// Structured random generator: builds a random decomposition blueprint and
// materializes it; the returned tree is a valid certificate for the graph by
// construction. Deterministic per seed. The graph has at most `budget`
// vertices (and at least min(budget, 1)).
// ---------------------------------------------------------------------------
struct GeneratedExtP4Laden {
    Graph graph;
    Decomposition tree;
};
GeneratedExtP4Laden generate_random_ext_p4_laden(std::uint64_t seed, int budget);

// ---------------------------------------------------------------------------
// Slow membership validator straight from the class definition: every vertex
// subset of size 5 or 6 whose induced subgraph contains more than two
// 4-subsets inducing a P4 must itself induce a pseudo-split graph (subsets of
// size <= 4 contain at most one). Exponential in n — test/validation use only.
// ---------------------------------------------------------------------------
bool matches_literal_class_definition(const Graph& g);

}  // namespace cyclecon
