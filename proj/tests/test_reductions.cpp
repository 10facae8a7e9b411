#include "cyclecon/reductions.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "cyclecon/extp4.hpp"
#include "cyclecon/interval.hpp"
#include "cyclecon/oracles.hpp"
#include "doctest.h"
#include "testutil.hpp"

using namespace cyclecon;
using namespace testutil;

namespace {

bool in_layer(const HullTrace& tr, int t, int v) {
    const auto& layer = tr.layers[std::min<std::size_t>(t, tr.layers.size() - 1)];
    return std::binary_search(layer.begin(), layer.end(), v);
}

std::vector<int> vertices_with_prefix(const ReductionInstance& inst, const std::string& prefix) {
    std::vector<int> out;
    for (int v = 0; v < static_cast<int>(inst.labels.size()); ++v)
        if (inst.labels[v].rfind(prefix, 0) == 0) out.push_back(v);
    return out;
}

// Role vertices without their gadget interiors (interior labels continue
// with ".p" after the anchor label).
std::vector<int> role_vertices(const ReductionInstance& inst, const std::string& prefix) {
    std::vector<int> out;
    for (int v : vertices_with_prefix(inst, prefix))
        if (inst.labels[v].find(".p") == std::string::npos) out.push_back(v);
    return out;
}

// All minimal hull sets of g by exhaustive enumeration (a hull set is
// minimal when dropping any single element breaks it; the interval operator
// is monotone, so this is equivalent to subset-minimality).
std::vector<std::vector<int>> minimal_hull_sets(const Graph& g) {
    std::vector<std::vector<int>> out;
    for (std::uint32_t mask = 0; mask < (1u << g.n); ++mask) {
        const auto s = subset_from_mask(mask);
        if (!is_hull_set(g, s)) continue;
        bool minimal = true;
        for (std::size_t drop = 0; drop < s.size() && minimal; ++drop) {
            auto sub = s;
            sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(drop));
            if (is_hull_set(g, sub)) minimal = false;
        }
        if (minimal) out.push_back(s);
    }
    return out;
}

CnfFormula two_clause_formula() {
    return parse_dimacs_cnf("p cnf 3 2\n1 2 3 0\n-1 2 3 0\n");
}

}  // namespace

TEST_CASE("perpetuation gadget template matches its frozen shape") {
    const Graph g = PerpetuationGadget::graph();
    CHECK(g.n == 7);
    CHECK(g.edge_count() == 12);
    // Anchor p has exactly the two interior neighbors p1 and p6.
    CHECK(g.adj[0] == std::vector<int>{1, 6});
    std::vector<int> degs;
    for (int v = 0; v < g.n; ++v) degs.push_back(g.degree(v));
    std::sort(degs.begin(), degs.end());
    CHECK(degs == std::vector<int>{2, 3, 3, 4, 4, 4, 4});
}

TEST_CASE("pairs inside A, B or C generate the whole gadget") {
    const Graph g = PerpetuationGadget::graph();
    const auto check_pairs = [&](const std::vector<int>& side) {
        for (std::size_t i = 0; i < side.size(); ++i)
            for (std::size_t j = i + 1; j < side.size(); ++j) {
                const HullTrace tr = hull(g, {side[i], side[j]});
                CHECK(static_cast<int>(tr.hull().size()) == g.n);
                CHECK(tr.converged_at <= 4);
            }
    };
    check_pairs({PerpetuationGadget::set_a.begin(), PerpetuationGadget::set_a.end()});
    check_pairs({PerpetuationGadget::set_b.begin(), PerpetuationGadget::set_b.end()});
    check_pairs({PerpetuationGadget::set_c.begin(), PerpetuationGadget::set_c.end()});
}

TEST_CASE("the gadget's minimal hull sets are exactly the special pairs") {
    const Graph g = PerpetuationGadget::graph();
    const auto inside = [](const std::vector<int>& s, const auto& side) {
        return std::all_of(s.begin(), s.end(), [&](int v) {
            return std::find(side.begin(), side.end(), v) != side.end();
        });
    };
    const auto minimals = minimal_hull_sets(g);
    CHECK(minimals.size() == 10);  // 3 pairs in A, 3 in B, 6 in C, minus the 2 shared
    for (const auto& s : minimals) {
        REQUIRE(s.size() == 2);
        const bool special = inside(s, PerpetuationGadget::set_a) ||
                             inside(s, PerpetuationGadget::set_b) ||
                             inside(s, PerpetuationGadget::set_c);
        CHECK(special);
    }
}

TEST_CASE("attaching to an isolated vertex reproduces the template") {
    const Graph host = Graph::from_edges(1, {});
    const Graph g = attach_perpetuation(host, 0);
    CHECK(g.n == 7);
    CHECK(g.edges == PerpetuationGadget::graph().edges);
}

TEST_CASE("attaching twice keeps the copies disjoint away from the anchor") {
    Graph g = attach_perpetuation(Graph::from_edges(1, {}), 0);
    g = attach_perpetuation(g, 0);
    CHECK(g.n == 13);
    CHECK(g.edge_count() == 24);
    CHECK(g.degree(0) == 4);  // p1 and p6 of both copies
    for (auto [a, b] : g.edges) {
        const bool first = a <= 6 && b <= 6;
        const bool second = (a == 0 || a >= 7) && (b == 0 || b >= 7);
        CHECK((first || second));
    }
    CHECK_THROWS_AS(attach_perpetuation(g, 13), std::invalid_argument);
    CHECK_THROWS_AS(attach_perpetuation(g, -1), std::invalid_argument);
}

TEST_CASE("every hull set of a host generates the gadget within four rounds") {
    // Two hosts: a triangle reached through a pendant anchor, and a 4-cycle
    // likewise. Exhaustive over all subsets.
    const Graph tri_host =
        attach_perpetuation(Graph::from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}}), 3);
    const Graph c4_host =
        attach_perpetuation(Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {3, 4}}), 4);

    for (const Graph* gp : {&tri_host, &c4_host}) {
        const Graph& g = *gp;
        const int anchor = g.n - 7 + 1 - 1;  // the attach call's anchor: n(host) - 1
        std::vector<int> gadget_vertices{anchor};
        for (int v = g.n - 6; v < g.n; ++v) gadget_vertices.push_back(v);
        for (std::uint32_t mask = 0; mask < (1u << g.n); ++mask) {
            const auto s = subset_from_mask(mask);
            if (!is_hull_set(g, s)) continue;
            const HullTrace tr = hull(g, s);
            for (int v : gadget_vertices) CHECK(in_layer(tr, 4, v));
        }
    }
}

TEST_CASE("host minimal hull sets meet the gadget interior in one special pair") {
    const Graph tri_host =
        attach_perpetuation(Graph::from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}}), 3);
    const Graph c4_host =
        attach_perpetuation(Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {3, 4}}), 4);

    const auto check_host = [](const Graph& g, std::size_t expected_count) {
        const int base = g.n - 6;  // interior slot s lives at vertex base + s - 1
        const auto slot_set = [&](const auto& side) {
            std::vector<int> out;
            for (int s : side) out.push_back(base + s - 1);
            return out;
        };
        const auto a = slot_set(PerpetuationGadget::set_a);
        const auto b = slot_set(PerpetuationGadget::set_b);
        const auto c = slot_set(PerpetuationGadget::set_c);
        const auto inside = [](const std::vector<int>& s, const std::vector<int>& side) {
            return std::all_of(s.begin(), s.end(), [&](int v) {
                return std::find(side.begin(), side.end(), v) != side.end();
            });
        };
        const auto minimals = minimal_hull_sets(g);
        CHECK(minimals.size() == expected_count);
        for (const auto& s : minimals) {
            std::vector<int> interior;
            for (int v : s)
                if (v >= base) interior.push_back(v);
            REQUIRE(interior.size() == 2);
            CHECK((inside(interior, a) || inside(interior, b) || inside(interior, c)));
        }
    };
    // Host side: a triangle needs any 2 of its 3 vertices, a 4-cycle any 3 of
    // its 4; the gadget side contributes one of its 10 special pairs.
    check_host(tri_host, 3 * 10);
    check_host(c4_host, 4 * 10);
}

TEST_CASE("thick spider wrapper: structure and labels") {
    const Graph h = cycle_graph(5);
    const ReductionInstance inst = build_thick_spider_instance(h);
    const Graph& g = inst.graph;
    CHECK(g.n == 11);
    CHECK(inst.labels.size() == 11);
    CHECK(vertex_with_label(inst, "s1") == 0);
    CHECK(vertex_with_label(inst, "c3") == 5);
    CHECK(vertex_with_label(inst, "h4") == 10);
    CHECK_THROWS_AS(vertex_with_label(inst, "h5"), std::invalid_argument);

    // Independent side: degree 2, non-adjacent to its partner clique vertex.
    for (int i = 0; i < 3; ++i) {
        CHECK(g.degree(i) == 2);
        CHECK(!g.has_edge(i, 3 + i));
        for (int j = 0; j < 3; ++j)
            if (j != i) CHECK(g.has_edge(i, 3 + j));
    }
    // Clique side: pairwise adjacent and joined to the whole copy of H.
    for (int i = 3; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j) CHECK(g.has_edge(i, j));
    for (int v = 6; v < 11; ++v)
        for (int i = 3; i < 6; ++i) CHECK(g.has_edge(v, i));
    // The head induces H itself.
    const auto head = induced_subgraph(g, {6, 7, 8, 9, 10});
    CHECK(head.g.edges == h.edges);
}

TEST_CASE("thick spider wrapper: convexity number is alpha plus three") {
    const auto check = [](const Graph& h) {
        const ReductionInstance inst = build_thick_spider_instance(h);
        const int alpha = h.n == 0 ? 0 : oracle_independence_number(h).value;
        CHECK(oracle_convexity_number(inst.graph).value == alpha + 3);
        // The identity holds for arbitrary heads; the polynomial route
        // exists exactly when the head itself is decomposable (the wrapper
        // adds one pseudo-split layer on top of it).
        const bool head_structured = h.n == 0 || decompose(h).has_value();
        const auto d = decompose(inst.graph);
        CHECK(d.has_value() == head_structured);
        if (d) CHECK(con_ext_p4_laden(inst.graph, *d) == alpha + 3);
    };

    check(Graph::from_edges(0, {}));
    check(complete_graph(3));
    check(cycle_graph(5));
    for (int n = 1; n <= 3; ++n)
        for (std::uint64_t mask = 0; mask < graph_mask_count(n); ++mask)
            check(graph_from_mask(n, mask));
    std::mt19937_64 rng(20260822);
    for (int it = 0; it < 20; ++it) check(random_graph(rng, 4 + static_cast<int>(rng() % 3)));
}

TEST_CASE("dimacs parsing accepts the standard form") {
    const CnfFormula one = parse_dimacs_cnf("p cnf 3 1\n1 2 3 0\n");
    CHECK(one.num_variables == 3);
    REQUIRE(one.clauses.size() == 1);
    CHECK(one.clauses[0] == std::array<int, 3>{1, 2, 3});
    CHECK(!one.has_duplicate_literals);

    const CnfFormula commented = parse_dimacs_cnf(
        "c a comment\n\nc another\np cnf 3 2\n1 2 3 0\n\nc mid comment\n-1 2 3 0\n");
    REQUIRE(commented.clauses.size() == 2);
    CHECK(commented.clauses[1] == std::array<int, 3>{-1, 2, 3});

    const auto pairs = opposite_literal_pairs(commented);
    REQUIRE(pairs.size() == 1);
    CHECK(pairs[0] == std::array<int, 4>{0, 0, 1, 0});

    // Clauses may spill across line breaks; only the 0 terminates.
    const CnfFormula wrapped = parse_dimacs_cnf("p cnf 3 2\n1 2\n3 0 -1\n2 3 0\n");
    REQUIRE(wrapped.clauses.size() == 2);
    CHECK(wrapped.clauses[0] == std::array<int, 3>{1, 2, 3});
}

TEST_CASE("dimacs parsing rejects malformed input") {
    CHECK_THROWS_AS(parse_dimacs_cnf("p cnf 2 1\n1 -1 0\n"), std::runtime_error);   // width 2
    CHECK_THROWS_AS(parse_dimacs_cnf("p cnf 4 1\n1 2 3 4 0\n"), std::runtime_error);  // width 4
    CHECK_THROWS_AS(parse_dimacs_cnf("p cnf 2 1\n1 2 3 0\n"), std::runtime_error);  // out of range
    CHECK_THROWS_AS(parse_dimacs_cnf("1 2 3 0\n"), std::runtime_error);             // no header
    CHECK_THROWS_AS(parse_dimacs_cnf("p cnf 3 2\n1 2 3 0\n"), std::runtime_error);  // count drift
    CHECK_THROWS_AS(parse_dimacs_cnf("p cnf 3 1\n1 2 3\n"), std::runtime_error);    // unterminated
    CHECK_THROWS_AS(parse_dimacs_cnf("p cnf 3 1\n1 two 3 0\n"), std::runtime_error);  // non-integer
    CHECK_THROWS_AS(parse_dimacs_cnf("p dnf 3 1\n1 2 3 0\n"), std::runtime_error);  // wrong format
}

TEST_CASE("duplicate and same-clause opposite literals are recognized") {
    const CnfFormula dup = parse_dimacs_cnf("p cnf 2 1\n1 1 2 0\n");
    CHECK(dup.has_duplicate_literals);
    CHECK(opposite_literal_pairs(dup).empty());

    const CnfFormula opp = parse_dimacs_cnf("p cnf 2 1\n1 -1 2 0\n");
    CHECK(!opp.has_duplicate_literals);
    const auto pairs = opposite_literal_pairs(opp);
    REQUIRE(pairs.size() == 1);
    CHECK(pairs[0] == std::array<int, 4>{0, 0, 0, 1});
}

TEST_CASE("two clause percolation instance has the frozen shape") {
    const CnfFormula f = two_clause_formula();
    const ReductionInstance inst = build_percolation_instance(f, 9);
    const Graph& g = inst.graph;

    // 2 clauses x (16 core + 7 gadgets x 6) + one opposite pair (y, y' and
    // its gadget) + the target.
    CHECK(g.n == 125);
    CHECK(g.edge_count() == 246);
    CHECK(inst.gadgets.size() == 15);
    CHECK(inst.k == 9);
    CHECK(inst.target == vertex_with_label(inst, "x"));

    const std::set<std::string> uniq(inst.labels.begin(), inst.labels.end());
    CHECK(uniq.size() == inst.labels.size());

    for (const char* role : {"u[", "v[", "w[", "q[", "r["})
        CHECK(role_vertices(inst, role).size() == 6);
    CHECK(role_vertices(inst, "z[").size() == 2);
    CHECK(role_vertices(inst, "y[").size() == 1);
    CHECK(role_vertices(inst, "y'[").size() == 1);

    // Every q, r, z and y' anchors exactly one gadget.
    std::set<int> anchors;
    for (const auto& gd : inst.gadgets) anchors.insert(gd[0]);
    CHECK(anchors.size() == 15);
    for (const char* role : {"q[", "r[", "z[", "y'["})
        for (int v : role_vertices(inst, role)) CHECK(anchors.count(v) == 1);

    // Spot degrees: the target sees y and y'; z sees its three u's plus its
    // gadget's p1 and p6; the paired w vertices gain the opposite-pair
    // triangle on top of their six core edges.
    CHECK(g.degree(inst.target) == 2);
    CHECK(g.degree(vertex_with_label(inst, "z[1]")) == 5);
    CHECK(g.degree(vertex_with_label(inst, "w[1,1]")) == 8);
    CHECK(g.degree(vertex_with_label(inst, "w[2,1]")) == 8);
    CHECK(g.degree(vertex_with_label(inst, "w[1,2]")) == 6);
    CHECK(g.has_edge(vertex_with_label(inst, "w[1,1]"), vertex_with_label(inst, "w[2,1]")));

    // The u/v block of each clause is co-convex: its complement is convex.
    for (int i = 1; i <= 2; ++i) {
        std::vector<int> rest;
        const auto u = role_vertices(inst, "u[" + std::to_string(i) + ",");
        const auto v = role_vertices(inst, "v[" + std::to_string(i) + ",");
        for (int x = 0; x < g.n; ++x) {
            const bool in_u = std::find(u.begin(), u.end(), x) != u.end();
            const bool in_v = std::find(v.begin(), v.end(), x) != v.end();
            if (!in_u && !in_v) rest.push_back(x);
        }
        CHECK(is_convex(g, rest));
    }
}

TEST_CASE("threshold chain grows the instance by one level per round") {
    const CnfFormula f = two_clause_formula();
    const ReductionInstance base = build_percolation_instance(f, 9);
    const ReductionInstance ten = build_percolation_instance(f, 10);
    const ReductionInstance twelve = build_percolation_instance(f, 12);

    CHECK(ten.graph.n == base.graph.n + 8);
    CHECK(ten.graph.edge_count() == base.graph.edge_count() + 15);
    CHECK(ten.target == vertex_with_label(ten, "t[1]"));
    CHECK(ten.gadgets.size() == 16);

    CHECK(twelve.graph.n == base.graph.n + 3 * 8);
    CHECK(twelve.graph.edge_count() == base.graph.edge_count() + 3 * 15);
    CHECK(twelve.target == vertex_with_label(twelve, "t[3]"));

    // Each tip forms a triangle with the previous tip and its chain anchor.
    const int x = vertex_with_label(twelve, "x");
    const int t1 = vertex_with_label(twelve, "t[1]");
    const int t2 = vertex_with_label(twelve, "t[2]");
    const int p1 = vertex_with_label(twelve, "chain[1].p");
    CHECK(twelve.graph.has_edge(x, t1));
    CHECK(twelve.graph.has_edge(x, p1));
    CHECK(twelve.graph.has_edge(t1, p1));
    CHECK(twelve.graph.has_edge(t1, t2));
}

TEST_CASE("degenerate inputs are rejected") {
    const CnfFormula no_opposites = parse_dimacs_cnf("p cnf 3 1\n1 2 3 0\n");
    CHECK_THROWS_AS(build_percolation_instance(no_opposites, 9), std::invalid_argument);
    CHECK_THROWS_AS(build_percolation_instance(two_clause_formula(), 8), std::invalid_argument);

    CnfFormula broken = two_clause_formula();
    broken.clauses[0][1] = 7;  // beyond the declared variables
    CHECK_THROWS_AS(build_percolation_instance(broken, 9), std::invalid_argument);
}

TEST_CASE("canonical witness percolates in exactly nine rounds") {
    const ReductionInstance inst = build_percolation_instance(two_clause_formula(), 9);
    const std::vector<int> s = assignment_to_witness(inst, {true, true, false});

    // One v per clause (first true literal: x1 in clause 1, x2 in clause 2)
    // plus p1, p2 of all 15 gadgets.
    CHECK(s.size() == 2 + 2 * 15);
    CHECK(std::binary_search(s.begin(), s.end(), vertex_with_label(inst, "v[1,1]")));
    CHECK(std::binary_search(s.begin(), s.end(), vertex_with_label(inst, "v[2,2]")));
    CHECK(!std::binary_search(s.begin(), s.end(), vertex_with_label(inst, "u[1,1]")));

    const HullTrace tr = hull(inst.graph, s);
    REQUIRE(tr.converged_at == 9);
    // The timetable: gadget anchors by round 4, the u row by 6, the v and w
    // rows by 7, every pair vertex at exactly 8, the target at exactly 9.
    for (const char* role : {"q[", "r[", "z[", "y'["})
        for (int v : role_vertices(inst, role)) CHECK(in_layer(tr, 4, v));
    for (int v : role_vertices(inst, "u[")) CHECK(in_layer(tr, 6, v));
    for (int v : role_vertices(inst, "v[")) CHECK(in_layer(tr, 7, v));
    for (int v : role_vertices(inst, "w[")) {
        CHECK(in_layer(tr, 7, v));
        CHECK(!in_layer(tr, 5, v));
    }
    for (int v : role_vertices(inst, "y[")) {
        CHECK(in_layer(tr, 8, v));
        CHECK(!in_layer(tr, 7, v));
    }
    CHECK(!in_layer(tr, 8, inst.target));
    CHECK(in_layer(tr, 9, inst.target));

    // Every satisfying assignment of this formula passes the full check.
    for (int bits = 0; bits < 8; ++bits) {
        const std::vector<bool> a{(bits & 1) != 0, (bits & 2) != 0, (bits & 4) != 0};
        const bool clause1 = a[0] || a[1] || a[2];
        const bool clause2 = !a[0] || a[1] || a[2];
        if (clause1 && clause2)
            CHECK_NOTHROW(assignment_to_witness(inst, a));
        else
            CHECK_THROWS_AS(assignment_to_witness(inst, a), std::invalid_argument);
    }
    CHECK_THROWS_AS(assignment_to_witness(inst, {true, true}), std::invalid_argument);
}

TEST_CASE("seeding the u side instead fires one round early on multi-true clauses") {
    // Why the canonical witness seeds v and not u: under x1=x2=x3=true,
    // clause 1 has three true literals, so a u-side seed makes the hub z[1]
    // ignite in round 1 (two of its seeded neighbors are adjacent), drags
    // the false branch of the opposite pair in by round 6, and the whole
    // graph is generated a round ahead of schedule.
    const ReductionInstance inst = build_percolation_instance(two_clause_formula(), 9);
    std::vector<int> u_style;
    for (int i = 1; i <= 2; ++i)
        for (int a = 1; a <= 3; ++a) {
            const int lit = inst.formula.clauses[i - 1][a - 1];
            if (lit > 0)  // all variables true: positive literals hold
                u_style.push_back(vertex_with_label(
                    inst, "u[" + std::to_string(i) + "," + std::to_string(a) + "]"));
        }
    for (const auto& gd : inst.gadgets) {
        u_style.push_back(gd[1]);
        u_style.push_back(gd[2]);
    }
    std::sort(u_style.begin(), u_style.end());

    const HullTrace tr = hull(inst.graph, u_style);
    CHECK(static_cast<int>(tr.hull().size()) == inst.graph.n);
    CHECK(tr.converged_at == 8);  // one short of the required nine
    CHECK(in_layer(tr, 1, vertex_with_label(inst, "z[1]")));

    // The v-side canonical witness holds the schedule for the same
    // assignment.
    const std::vector<int> s = assignment_to_witness(inst, {true, true, true});
    CHECK(hull(inst.graph, s).converged_at == 9);
}

TEST_CASE("canonical witness respects higher thresholds") {
    for (int k : {10, 11}) {
        const ReductionInstance inst = build_percolation_instance(two_clause_formula(), k);
        const std::vector<int> s = assignment_to_witness(inst, {false, false, true});
        const HullTrace tr = hull(inst.graph, s);
        CHECK(tr.converged_at == k);
        CHECK(!in_layer(tr, k - 1, inst.target));
        // The previous tip still enters one round earlier.
        const int prev = k == 10 ? vertex_with_label(inst, "x")
                                 : vertex_with_label(inst, "t[" + std::to_string(k - 10) + "]");
        CHECK(in_layer(tr, k - 1, prev));
        CHECK(!in_layer(tr, k - 2, prev));
    }
}

TEST_CASE("messy formula: duplicates and same-clause opposites build and verify") {
    // Clause 1 contains an opposite pair inside itself, clause 2 repeats a
    // literal, clause 3 is a single literal said three times.
    const CnfFormula f = parse_dimacs_cnf("p cnf 2 3\n1 -1 2 0\n-2 1 1 0\n2 2 2 0\n");
    CHECK(f.has_duplicate_literals);
    const auto pairs = opposite_literal_pairs(f);
    CHECK(pairs.size() == 7);

    const ReductionInstance inst = build_percolation_instance(f, 9);
    CHECK(inst.graph.n == 3 * 58 + 7 * 8 + 1);
    const std::set<std::string> uniq(inst.labels.begin(), inst.labels.end());
    CHECK(uniq.size() == inst.labels.size());

    // Only x1 = x2 = true satisfies all three clauses.
    CHECK_NOTHROW(assignment_to_witness(inst, {true, true}));
    CHECK_THROWS_AS(assignment_to_witness(inst, {true, false}), std::invalid_argument);
    CHECK_THROWS_AS(assignment_to_witness(inst, {false, true}), std::invalid_argument);
    CHECK_THROWS_AS(assignment_to_witness(inst, {false, false}), std::invalid_argument);
}

TEST_CASE("labels round-trip to formula positions") {
    const CnfFormula f = two_clause_formula();
    const ReductionInstance inst = build_percolation_instance(f, 9);
    for (int i = 0; i < 2; ++i)
        for (int a = 0; a < 3; ++a) {
            const std::string label =
                "u[" + std::to_string(i + 1) + "," + std::to_string(a + 1) + "]";
            const int v = vertex_with_label(inst, label);
            CHECK(inst.labels[v] == label);
            // The u vertex sits where the construction says: adjacent to its
            // clause hub z and its two clause partners.
            CHECK(inst.graph.has_edge(v, vertex_with_label(inst, "z[" + std::to_string(i + 1) + "]")));
        }
    CHECK(inst.formula.clauses[1][0] == -1);
}
