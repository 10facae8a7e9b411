#pragma once

// Hardness-construction generators and their verifiers.
//
// Two families are built here:
//
//   * independent-set embedding: any graph H is wrapped into a thick spider
//     whose convexity number equals α(H) + 3, so computing the convexity
//     number on the wrapper answers maximum-independent-set on H;
//
//   * 3-SAT percolation instances: a CNF formula with exactly three literals
//     per clause is turned into a graph that has a hull set percolating in
//     exactly k rounds (k ≥ 9 a chosen threshold) iff the formula is
//     satisfiable. The construction hangs a "perpetuation" gadget off many
//     vertices; the gadget guarantees its anchor is generated within four
//     rounds by every hull set, which synchronizes the timing argument.
//
// Generators are deterministic: vertex ids are assigned clause-major,
// role-minor, and every vertex carries a unique human-readable role label
// (see build_percolation_instance for the naming scheme).

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cyclecon/graph.hpp"

namespace cyclecon {

// ---------------------------------------------------------------------------
// CNF formulas with exactly three literals per clause.
// ---------------------------------------------------------------------------
struct CnfFormula {
    int num_variables = 0;
    // Each clause holds three signed 1-based variable indices, never zero.
    std::vector<std::array<int, 3>> clauses;
    // True when some clause repeats a literal (allowed, but worth surfacing:
    // a repeated literal weakens the clause to fewer distinct literals).
    bool has_duplicate_literals = false;
};

// Parses DIMACS CNF: optional 'c' comment lines, a "p cnf <vars> <clauses>"
// header, then 0-terminated clauses. Clauses must have exactly three
// literals and every literal must reference a declared variable. Throws
// std::runtime_error on malformed input.
CnfFormula parse_dimacs_cnf(const std::string& text);

// All position pairs {i,a,j,b} (0-based clause i, slot a) with
// clauses[i][a] == -clauses[j][b], ordered lexicographically with
// (i,a) < (j,b). Pairs inside a single clause (i == j) are included.
std::vector<std::array<int, 4>> opposite_literal_pairs(const CnfFormula& f);

// ---------------------------------------------------------------------------
// The perpetuation gadget template.
//
// Seven vertices: an anchor slot p (0) and interior slots p1..p6 (1..6).
// Attached to a graph, only the anchor keeps outside neighbors; the interior
// is fresh. Its load-bearing properties (all pinned by tests):
//   * every hull set of a host graph generates the whole gadget within four
//     interval rounds;
//   * restricted to the interior, every minimal hull set of a host meets the
//     gadget in exactly one pair drawn from A = {p1,p2,p3}, B = {p4,p5,p6},
//     or C = {p2,p3,p4,p5};
//   * p forms a triangle with p1 and p6, so once the gadget is generated, any
//     outside vertex completing a triangle with p and a just-generated
//     neighbor is generated one round later (the "perpetuation" effect).
// ---------------------------------------------------------------------------
struct PerpetuationGadget {
    static constexpr int vertex_count = 7;  // slot 0 = p, slots 1..6 = p1..p6
    static constexpr std::array<std::pair<int, int>, 12> edge_slots{{
        {0, 1}, {0, 6}, {1, 2}, {2, 3}, {3, 4}, {4, 5},
        {5, 6}, {1, 3}, {3, 5}, {2, 5}, {2, 4}, {4, 6},
    }};
    static constexpr std::array<int, 3> set_a{1, 2, 3};
    static constexpr std::array<int, 3> set_b{4, 5, 6};
    static constexpr std::array<int, 4> set_c{2, 3, 4, 5};

    // The gadget by itself, vertex ids equal to slot ids.
    static Graph graph();
};

// Returns g plus one perpetuation gadget anchored at `anchor`: six fresh
// vertices g.n .. g.n+5 playing p1..p6, twelve new edges, no other
// connections between the interior and g. Throws std::invalid_argument if
// anchor is out of range.
Graph attach_perpetuation(const Graph& g, int anchor);

// ---------------------------------------------------------------------------
// Built instances.
// ---------------------------------------------------------------------------
struct ReductionInstance {
    Graph graph;
    // labels[v] = unique role tag of vertex v (total on the vertex set).
    std::vector<std::string> labels;
    // Every attached perpetuation gadget as {p, p1, ..., p6} vertex ids.
    std::vector<std::array<int, 7>> gadgets;
    // The source formula (percolation instances only; empty otherwise).
    CnfFormula formula;
    // Percolation threshold (percolation instances only; 0 otherwise).
    int k = 0;
    // The vertex that must enter the hull exactly at round k (percolation
    // instances only; -1 otherwise).
    int target = -1;
};

// Index of the vertex carrying `label`; throws std::invalid_argument if no
// vertex does.
int vertex_with_label(const ReductionInstance& inst, const std::string& label);

// Wraps H into a thick spider with legs |S| = |C| = 3 and head G[R] ≅ H:
// vertices 0..2 form the independent side (s1..s3), 3..5 the clique side
// (c1..c3, with s_i non-adjacent to c_i only), and 6..6+n(H)-1 a copy of H
// completely joined to the clique side. Guarantees con(G) = α(H) + 3.
// Labels: "s1".."s3", "c1".."c3", "h<v>" for the copy of H vertex v.
ReductionInstance build_thick_spider_instance(const Graph& h);

// Builds the percolation instance for formula f and threshold k ≥ 9.
//
// Per clause i (1-based in labels): core vertices z[i], u[i,a], v[i,a],
// w[i,a], q[i,a], r[i,a] for a = 1..3, wired as: for each a a triangle
// u-w-v, plus u-q, q-v, u-z; for each cyclic pair (a,a'): u[a]-u[a'],
// w[a]-r[a], r[a]-w[a'], w[a]-w[a']. Perpetuation gadgets are attached to
// every q, r and z. Per opposite-literal pair (i,a)/(j,b): vertices
// y[i,a;j,b] and y'[i,a;j,b], a triangle {w[i,a], w[j,b], y}, a gadget on
// y'. One global vertex x closes a triangle {y, y', x} with every pair.
// For k > 9, a chain of k-9 levels extends x: each level adds a fresh
// gadget anchored at chain[l].p and a tip t[l] forming a triangle with the
// previous tip and the fresh anchor; the final tip is the target.
// Gadget interiors are labelled "<anchor label>.p1" .. ".p6".
//
// Throws std::invalid_argument if k < 9 or if f has no opposite-literal
// pair (then x would be isolated and the timing argument breaks down).
ReductionInstance build_percolation_instance(const CnfFormula& f, int k);

// The canonical witness for a satisfying assignment: for each clause the
// vertex v[i,c] of its first true literal, plus p1 and p2 of every gadget.
// (Seeding the v side, not the u side, keeps every clause on the same
// percolation clock regardless of how many of its literals are true; see
// the implementation note.) assignment[j] is the value of variable j+1 and
// must satisfy the formula (else std::invalid_argument). The result is
// verified before returning: it is a hull set, its hull converges in
// exactly inst.k rounds, and inst.target enters at round k and not before
// (std::logic_error otherwise). Returns the witness sorted ascending.
std::vector<int> assignment_to_witness(const ReductionInstance& inst,
                                       const std::vector<bool>& assignment);

}  // namespace cyclecon
