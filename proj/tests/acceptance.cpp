// Acceptance gate for the cycle-convexity library.
//
// Eleven independent criteria, each printed as one line
//     [PASS] criterion N: description [X.XXs]
// or [FAIL] with a reason. The process exits 0 iff every criterion passes.
// Every tolerance — corpus sizes, seeds, case-coverage minimums, wall-clock
// budgets — is pinned as a constant in the criterion that uses it.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cyclecon/extp4.hpp"
#include "cyclecon/graph.hpp"
#include "cyclecon/interval.hpp"
#include "cyclecon/oracles.hpp"
#include "cyclecon/percolation.hpp"
#include "cyclecon/reductions.hpp"
#include "testutil.hpp"

using namespace cyclecon;
using testutil::all_pairs;
using testutil::complete_graph;
using testutil::cycle_graph;
using testutil::graph_from_mask;
using testutil::graph_mask_count;
using testutil::path_graph;
using testutil::random_graph;
using testutil::subset_from_mask;

namespace {

// ---------------------------------------------------------------------------
// Small shared helpers.
// ---------------------------------------------------------------------------

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::vector<int> random_subset(std::mt19937_64& rng, int n) {
    std::vector<int> s;
    for (int v = 0; v < n; ++v)
        if (rng() & 1) s.push_back(v);
    return s;
}

bool induces_forest(const Graph& g, const std::vector<int>& s) {
    const InducedSubgraph sub = induced_subgraph(g, s);
    std::vector<int> comp;
    const int c = connected_components(sub.g, comp);
    return sub.g.edge_count() == sub.g.n - c;
}

// Reporting plumbing: a criterion body returns true/false and may leave a
// reason; the harness prints exactly one line either way and enforces the
// wall-clock budget as part of the verdict.
struct Outcome {
    bool ok = true;
    std::string reason;

    void fail(const std::string& why) {
        if (ok) reason = why;  // keep the first reason
        ok = false;
    }
    void require(bool cond, const std::string& why) {
        if (!cond) fail(why);
    }
};

struct Criterion {
    int id;
    std::string description;
    double budget_seconds;
    std::function<void(Outcome&)> body;
};

// ---------------------------------------------------------------------------
// 1. The fast interval operator agrees with the literal cycle-search one.
// ---------------------------------------------------------------------------
void criterion_interval_equivalence(Outcome& out) {
    long long checked = 0;
    for (int n = 1; n <= 6 && out.ok; ++n) {
        for (std::uint64_t mask = 0; mask < graph_mask_count(n) && out.ok; ++mask) {
            const Graph g = graph_from_mask(n, mask);
            if (!is_connected(g)) continue;
            for (std::uint32_t sm = 0; sm < (1u << n); ++sm) {
                const std::vector<int> s = subset_from_mask(sm);
                if (interval_step(g, s) != interval_step_by_cycle_search(g, s)) {
                    std::ostringstream why;
                    why << "mismatch at n=" << n << " mask=" << mask << " subset=" << sm;
                    out.fail(why.str());
                    break;
                }
                ++checked;
            }
        }
    }

    std::mt19937_64 rng(20260301);
    for (int trial = 0; trial < 500 && out.ok; ++trial) {
        const int n = 7 + static_cast<int>(rng() % 6);  // 7..12
        const Graph g = random_graph(rng, n);
        const std::vector<int> s = random_subset(rng, n);
        out.require(interval_step(g, s) == interval_step_by_cycle_search(g, s),
                    "mismatch on random trial " + std::to_string(trial));
        ++checked;
    }
    out.require(checked > 1700000, "exhaustive sweep smaller than expected");
}

// ---------------------------------------------------------------------------
// 2. Structured convexity number vs the brute-force oracle.
// ---------------------------------------------------------------------------
void criterion_con_vs_oracle(Outcome& out) {
    for (std::uint64_t seed = 1; seed <= 500 && out.ok; ++seed) {
        const GeneratedExtP4Laden gen = generate_random_ext_p4_laden(seed, 12);
        const int fast = con_ext_p4_laden(gen.graph, gen.tree);
        const int slow = oracle_convexity_number(gen.graph).value;
        if (fast != slow) {
            out.fail("seed " + std::to_string(seed) + ": structured " + std::to_string(fast) +
                     " vs oracle " + std::to_string(slow));
            break;
        }
        const std::vector<int> witness = con_witness_ext_p4_laden(gen.graph, gen.tree);
        out.require(static_cast<int>(witness.size()) == fast && is_convex(gen.graph, witness) &&
                        static_cast<int>(witness.size()) < std::max(gen.graph.n, 1),
                    "seed " + std::to_string(seed) + ": witness does not certify the value");
    }
}

// ---------------------------------------------------------------------------
// 3. Union and join formulas vs the oracle; all three join branches covered.
// ---------------------------------------------------------------------------
void criterion_union_join_formulas(Outcome& out) {
    std::mt19937_64 rng(777001);
    int case_left_single = 0, case_right_single = 0, case_both_large = 0;

    const auto random_side = [&](int lo, int hi) {
        const int n = lo + static_cast<int>(rng() % (hi - lo + 1));
        return random_graph(rng, n);
    };

    const auto check_pair = [&](const Graph& g1, const Graph& g2) {
        if (!out.ok) return;
        // Union formula against the oracle on the disjoint union.
        const int con1 = oracle_convexity_number(g1).value;
        const int con2 = oracle_convexity_number(g2).value;
        const Graph u = disjoint_union(g1, g2);
        out.require(con_union(g1.n, con1, g2.n, con2) == oracle_convexity_number(u).value,
                    "union formula mismatch");

        // Join formula against the oracle on the join.
        const int a1 = oracle_independence_number(g1).value;
        const int a2 = oracle_independence_number(g2).value;
        const Graph j = join(g1, g2);
        out.require(con_join(g1, g2, a1, a2) == oracle_convexity_number(j).value,
                    "join formula mismatch");
        if (g1.n == 1)
            ++case_left_single;
        else if (g2.n == 1)
            ++case_right_single;
        else
            ++case_both_large;
    };

    for (int t = 0; t < 55; ++t) check_pair(random_side(1, 1), random_side(2, 6));
    for (int t = 0; t < 55; ++t) check_pair(random_side(2, 6), random_side(1, 1));
    for (int t = 0; t < 55; ++t) check_pair(random_side(2, 6), random_side(2, 6));
    for (int t = 0; t < 5; ++t) check_pair(random_side(1, 1), random_side(1, 1));

    out.require(case_left_single >= 50 && case_right_single >= 50 && case_both_large >= 50,
                "a join branch was hit fewer than 50 times");
}

// ---------------------------------------------------------------------------
// 4. Pseudo-split / quasi-spider convexity formula, both branches.
// ---------------------------------------------------------------------------
Graph make_pseudo_split(std::mt19937_64& rng, bool force_degree_one, PseudoSplitPartition& part) {
    for (;;) {
        const int s = 2 + static_cast<int>(rng() % 3);  // 2..4
        const int c = 2 + static_cast<int>(rng() % 3);  // 2..4
        const int r = static_cast<int>(rng() % 5);      // 0..4
        std::vector<std::pair<int, int>> edges;
        // Clique side and the complete join to the rest-part.
        for (int i = 0; i < c; ++i)
            for (int j = i + 1; j < c; ++j) edges.push_back({s + i, s + j});
        for (int i = 0; i < c; ++i)
            for (int j = 0; j < r; ++j) edges.push_back({s + i, s + c + j});
        for (int i = 0; i < r; ++i)
            for (int j = i + 1; j < r; ++j)
                if (rng() & 1) edges.push_back({s + c + i, s + c + j});
        // Independent side: each vertex gets a nonempty proper clique
        // neighborhood; optionally pin the first one to a single neighbor.
        std::vector<bool> covered(c, false);
        for (int i = 0; i < s; ++i) {
            const int want =
                (force_degree_one && i == 0) ? 1 : 1 + static_cast<int>(rng() % (c - 1));
            std::vector<int> picks(c);
            for (int j = 0; j < c; ++j) picks[j] = j;
            std::shuffle(picks.begin(), picks.end(), rng);
            for (int j = 0; j < want; ++j) {
                edges.push_back({i, s + picks[j]});
                covered[picks[j]] = true;
            }
        }
        if (!std::all_of(covered.begin(), covered.end(), [](bool b) { return b; })) continue;

        part.S.clear();
        part.C.clear();
        part.R.clear();
        for (int i = 0; i < s; ++i) part.S.push_back(i);
        for (int i = 0; i < c; ++i) part.C.push_back(s + i);
        for (int i = 0; i < r; ++i) part.R.push_back(s + c + i);
        return Graph::from_edges(s + c + r, edges);
    }
}

Graph make_quasi_spider(std::mt19937_64& rng, ReplacementKind kind) {
    const int k = 2 + static_cast<int>(rng() % 3);  // legs 2..4
    const bool thick = (rng() & 1) != 0;
    const int r = static_cast<int>(rng() % 4);  // 0..3
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) edges.push_back({k + i, k + j});
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < r; ++j) edges.push_back({k + i, 2 * k + j});
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j)
            if (rng() & 1) edges.push_back({2 * k + i, 2 * k + j});
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (thick ? (i != j) : (i == j)) edges.push_back({i, k + j});

    // Twin expansion: duplicate one endpoint with identical outside
    // adjacency; adjacent duplicate for the K2 kinds.
    const bool on_s = kind == ReplacementKind::K2InS || kind == ReplacementKind::CoK2InS;
    const bool twins_adjacent = kind == ReplacementKind::K2InS || kind == ReplacementKind::K2InC;
    const int replaced = on_s ? 0 : k;
    const int duplicate = 2 * k + r;
    std::vector<std::pair<int, int>> expanded = edges;
    for (auto [a, b] : edges) {
        if (a == replaced) expanded.push_back({duplicate, b});
        if (b == replaced) expanded.push_back({a, duplicate});
    }
    if (twins_adjacent) expanded.push_back({replaced, duplicate});
    return Graph::from_edges(duplicate + 1, expanded);
}

void criterion_pseudo_split_formula(Outcome& out) {
    std::mt19937_64 rng(424243);
    int branch_degree_one = 0, branch_alpha = 0;

    const auto check = [&](const Graph& g, const char* what, int index) {
        if (!out.ok) return;
        const std::string tag = std::string(what) + " " + std::to_string(index);
        const auto found = find_pseudo_split_partition(g);
        if (!found) {
            out.fail(tag + ": partition search failed");
            return;
        }
        const InducedSubgraph rest = induced_subgraph(g, found->partition.R);
        const int alpha_r = rest.g.n == 0 ? 0 : oracle_independence_number(rest.g).value;
        const int fast = con_pseudo_split(g, *found, alpha_r);
        const int slow = oracle_convexity_number(g).value;
        out.require(fast == slow, tag + ": formula " + std::to_string(fast) + " vs oracle " +
                                      std::to_string(slow));
        (g.min_degree() == 1 ? branch_degree_one : branch_alpha) += 1;
    };

    for (int t = 0; t < 25; ++t) {
        PseudoSplitPartition part;
        const Graph g = make_pseudo_split(rng, t % 2 == 0, part);
        if (out.ok) out.require(verify_pseudo_split(g, part), "constructed partition rejected");
        check(g, "pseudo-split", t);
    }
    for (int t = 0; t < 40; ++t) {
        const auto kind = static_cast<ReplacementKind>(t % 4);
        check(make_quasi_spider(rng, kind), "quasi-spider", t);
    }
    out.require(branch_degree_one >= 10 && branch_alpha >= 10,
                "a formula branch was hit fewer than 10 times");
}

// ---------------------------------------------------------------------------
// 5. Pinned values for the leaf graphs of the decomposition.
// ---------------------------------------------------------------------------
void criterion_fixed_values(Outcome& out) {
    const auto structured_con = [&](const Graph& g, const char* name) {
        const auto d = decompose(g);
        if (!d) {
            out.fail(std::string(name) + ": decomposition failed");
            return -1;
        }
        return con_ext_p4_laden(g, *d);
    };
    out.require(structured_con(cycle_graph(5), "C5") == 3, "five-cycle expected 3");
    out.require(structured_con(path_graph(5), "P5") == 4, "five-path expected 4");
    out.require(structured_con(complement(path_graph(5)), "co-P5") == 3,
                "five-path complement expected 3");
    out.require(structured_con(Graph::from_edges(1, {}), "K1") == 0, "single vertex expected 0");
}

// ---------------------------------------------------------------------------
// 6. Cactus percolation number vs oracle, witnesses replayed.
// ---------------------------------------------------------------------------
void criterion_cactus_pn(Outcome& out) {
    for (std::uint64_t seed = 1; seed <= 300 && out.ok; ++seed) {
        const Graph g = generate_random_cactus(seed, 14);
        const std::string tag = "seed " + std::to_string(seed);
        const auto cactus = is_cactus(g);
        if (!cactus.ok) {
            out.fail(tag + ": generator emitted a non-cactus");
            break;
        }
        const PercolationResult res = pn_cactus(g);
        const int slow = oracle_percolation_number(g).value;
        out.require(res.value == slow, tag + ": fast " + std::to_string(res.value) +
                                           " vs oracle " + std::to_string(slow));
        const auto t = percolation_time_of_set(g, res.witness);
        out.require(t.has_value() && *t == res.value, tag + ": witness does not replay");
    }
}

// ---------------------------------------------------------------------------
// 7. The two-round decision vs oracle, witnesses verified.
// ---------------------------------------------------------------------------
void criterion_two_round_decision(Outcome& out) {
    const auto check = [&](const Graph& g, const std::string& tag) {
        if (!out.ok) return;
        const auto mine = pn_at_least_2(g);
        const auto orac = oracle_pn_witness_at_least(g, 2);
        out.require(mine.has_value() == orac.has_value(), tag + ": decision mismatch");
        if (mine) {
            const auto t = percolation_time_of_set(g, *mine);
            out.require(t.has_value() && *t >= 2, tag + ": witness does not replay");
        }
    };

    for (int n = 1; n <= 6 && out.ok; ++n)
        for (std::uint64_t mask = 0; mask < graph_mask_count(n); ++mask) {
            const Graph g = graph_from_mask(n, mask);
            if (!is_connected(g)) continue;
            check(g, "n=" + std::to_string(n) + " mask=" + std::to_string(mask));
            if (!out.ok) break;
        }

    std::mt19937_64 rng(909090);
    for (int trial = 0; trial < 500 && out.ok; ++trial) {
        const int n = 7 + static_cast<int>(rng() % 6);
        check(random_graph(rng, n), "random trial " + std::to_string(trial));
    }
}

// ---------------------------------------------------------------------------
// 8. Perpetuation attachment: layer-4 coverage and minimal hull sets.
// ---------------------------------------------------------------------------
void criterion_gadget_property(Outcome& out) {
    // Hosts: a triangle and a four-cycle, each reached through a pendant
    // anchor, with one attachment on the anchor (10 and 11 vertices).
    const Graph tri_host =
        attach_perpetuation(Graph::from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}}), 3);
    const Graph c4_host =
        attach_perpetuation(Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {3, 4}}), 4);

    const auto check_host = [&](const Graph& g, std::size_t expected_minimal, const char* name) {
        const int base = g.n - 6;  // first interior vertex; slot s = base + s - 1
        const int anchor = base - 1;
        std::vector<int> attachment{anchor};
        for (int v = base; v < g.n; ++v) attachment.push_back(v);

        const auto special_pairs = [&] {
            std::set<std::set<int>> pairs;
            const auto add_side = [&](const auto& side) {
                for (std::size_t i = 0; i < side.size(); ++i)
                    for (std::size_t j = i + 1; j < side.size(); ++j)
                        pairs.insert({base + side[i] - 1, base + side[j] - 1});
            };
            add_side(PerpetuationGadget::set_a);
            add_side(PerpetuationGadget::set_b);
            add_side(PerpetuationGadget::set_c);
            return pairs;
        }();

        std::vector<std::uint32_t> hull_masks;
        for (std::uint32_t mask = 0; mask < (1u << g.n); ++mask) {
            const std::vector<int> s = subset_from_mask(mask);
            const HullTrace trace = hull(g, s);
            if (static_cast<int>(trace.hull().size()) != g.n) continue;
            hull_masks.push_back(mask);
            // Every hull set pulls the whole attachment in within four rounds.
            const auto& layer4 =
                trace.layers[std::min<std::size_t>(4, trace.layers.size() - 1)];
            for (int v : attachment)
                if (!std::binary_search(layer4.begin(), layer4.end(), v)) {
                    out.fail(std::string(name) + ": attachment not covered by round 4 for mask " +
                             std::to_string(mask));
                    return;
                }
        }

        std::size_t minimal = 0;
        for (std::uint32_t mask : hull_masks) {
            bool is_minimal = true;
            for (int v = 0; v < g.n && is_minimal; ++v)
                if ((mask >> v & 1) &&
                    std::binary_search(hull_masks.begin(), hull_masks.end(),
                                       mask & ~(std::uint32_t{1} << v)))
                    is_minimal = false;
            if (!is_minimal) continue;
            ++minimal;
            std::set<int> interior;
            for (int v = base; v < g.n; ++v)
                if (mask >> v & 1) interior.insert(v);
            if (special_pairs.find(interior) == special_pairs.end()) {
                out.fail(std::string(name) + ": minimal hull set " + std::to_string(mask) +
                         " does not meet the interior in one special pair");
                return;
            }
        }
        out.require(minimal == expected_minimal,
                    std::string(name) + ": minimal hull set count " + std::to_string(minimal) +
                        " != " + std::to_string(expected_minimal));
    };

    // Host side: any 2 of the triangle's 3 vertices, or any 3 of the
    // four-cycle's 4; attachment side: one of the ten special pairs.
    check_host(tri_host, 3 * 10, "triangle host");
    if (out.ok) check_host(c4_host, 4 * 10, "four-cycle host");
}

// ---------------------------------------------------------------------------
// 9. Thick-spider wrapper identity on a 30-graph corpus.
// ---------------------------------------------------------------------------
void criterion_thick_spider_corpus(Outcome& out) {
    std::vector<Graph> corpus;
    corpus.push_back(Graph::from_edges(0, {}));
    corpus.push_back(Graph::from_edges(1, {}));
    corpus.push_back(Graph::from_edges(2, {}));
    corpus.push_back(complete_graph(2));
    for (int n = 3; n <= 6; ++n) corpus.push_back(path_graph(n));
    for (int n = 3; n <= 8; ++n) corpus.push_back(cycle_graph(n));
    for (int n = 4; n <= 8; ++n) corpus.push_back(complete_graph(n));
    corpus.push_back(Graph::from_edges(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}}));  // star
    corpus.push_back(complement(cycle_graph(5)));
    corpus.push_back(join(Graph::from_edges(2, {}), Graph::from_edges(3, {})));  // K(2,3)
    // Cube.
    corpus.push_back(Graph::from_edges(8, {{0, 1},
                                           {1, 2},
                                           {2, 3},
                                           {3, 0},
                                           {4, 5},
                                           {5, 6},
                                           {6, 7},
                                           {7, 4},
                                           {0, 4},
                                           {1, 5},
                                           {2, 6},
                                           {3, 7}}));
    std::mt19937_64 rng(555555);
    while (corpus.size() < 30) corpus.push_back(random_graph(rng, 6 + rng() % 3));
    out.require(corpus.size() == 30, "corpus size drifted");

    for (std::size_t i = 0; i < corpus.size() && out.ok; ++i) {
        const Graph& h = corpus[i];
        const ReductionInstance inst = build_thick_spider_instance(h);
        const int wrapped = oracle_convexity_number(inst.graph).value;
        const int alpha = h.n == 0 ? 0 : oracle_independence_number(h).value;
        out.require(wrapped == alpha + 3, "corpus graph " + std::to_string(i) + ": wrapper " +
                                              std::to_string(wrapped) + " vs head alpha+3 " +
                                              std::to_string(alpha + 3));
    }
}

// ---------------------------------------------------------------------------
// 10. Satisfiability instances: forward witnesses hit the threshold exactly.
// ---------------------------------------------------------------------------
void criterion_sat_forward(Outcome& out) {
    const std::vector<std::string> formulas = {
        "p cnf 3 2\n1 2 3 0\n-1 2 3 0\n",
        "p cnf 2 2\n1 1 1 0\n-1 2 2 0\n",
        "p cnf 3 3\n1 -2 3 0\n2 3 -1 0\n-3 1 2 0\n",
        "p cnf 3 2\n-1 -2 -3 0\n1 2 3 0\n",
        "p cnf 2 2\n1 2 2 0\n-1 2 2 0\n",
        "p cnf 2 1\n1 -1 2 0\n",
        "p cnf 4 2\n2 3 4 0\n-4 1 2 0\n",
        "p cnf 3 3\n-1 2 3 0\n-2 3 1 0\n-3 1 2 0\n",
        "p cnf 2 3\n1 -1 2 0\n-2 1 1 0\n2 2 2 0\n",
        "p cnf 4 3\n1 2 -3 0\n3 -4 2 0\n4 -1 3 0\n",
    };

    const auto satisfies = [](const CnfFormula& f, const std::vector<bool>& assign) {
        for (const auto& clause : f.clauses) {
            bool any = false;
            for (int lit : clause) {
                const bool val = assign[static_cast<std::size_t>(std::abs(lit)) - 1];
                if (lit > 0 ? val : !val) any = true;
            }
            if (!any) return false;
        }
        return true;
    };

    for (std::size_t fi = 0; fi < formulas.size() && out.ok; ++fi) {
        const CnfFormula f = parse_dimacs_cnf(formulas[fi]);
        const std::string tag = "formula " + std::to_string(fi);
        out.require(!opposite_literal_pairs(f).empty(), tag + ": no opposite pair");

        std::vector<bool> assign;
        for (std::uint32_t bits = 0; bits < (1u << f.num_variables); ++bits) {
            std::vector<bool> candidate(f.num_variables);
            for (int j = 0; j < f.num_variables; ++j) candidate[j] = (bits >> j & 1) != 0;
            if (satisfies(f, candidate)) {
                assign = candidate;
                break;
            }
        }
        if (assign.empty() && f.num_variables > 0) {
            out.fail(tag + ": expected satisfiable");
            break;
        }

        for (int k : {9, 10}) {
            const ReductionInstance inst = build_percolation_instance(f, k);
            const std::vector<int> witness = assignment_to_witness(inst, assign);
            const HullTrace trace = hull(inst.graph, witness);
            const std::string ktag = tag + " k=" + std::to_string(k);
            out.require(static_cast<int>(trace.hull().size()) == inst.graph.n,
                        ktag + ": witness is not a hull set");
            out.require(trace.converged_at == k,
                        ktag + ": percolates in " + std::to_string(trace.converged_at) +
                            " rounds, expected exactly " + std::to_string(k));
        }
    }
}

// ---------------------------------------------------------------------------
// 11. Convex independence = induced forest; rank = largest induced forest.
// ---------------------------------------------------------------------------
void criterion_rank_forest(Outcome& out) {
    long long graphs_checked = 0;
    const auto check_graph = [&](const Graph& g, const std::string& tag) {
        int rank = 0;
        for (std::uint32_t sm = 0; sm < (1u << g.n); ++sm) {
            const std::vector<int> s = subset_from_mask(sm);
            const bool indep = is_convexly_independent(g, s);
            if (indep != induces_forest(g, s)) {
                out.fail(tag + ": equivalence fails on subset " + std::to_string(sm));
                return;
            }
            if (indep) rank = std::max(rank, static_cast<int>(s.size()));
        }
        const int lf = oracle_max_induced_forest(g).value;
        out.require(rank == lf, tag + ": rank " + std::to_string(rank) + " vs largest forest " +
                                    std::to_string(lf));
        ++graphs_checked;
    };

    for (int n = 1; n <= 5 && out.ok; ++n)
        for (std::uint64_t mask = 0; mask < graph_mask_count(n); ++mask) {
            check_graph(graph_from_mask(n, mask), "n=" + std::to_string(n) + " mask=" +
                                                      std::to_string(mask));
            if (!out.ok) break;
        }

    std::mt19937_64 rng(131313);
    for (int trial = 0; trial < 300 && out.ok; ++trial) {
        const int n = 6 + trial % 3;  // 100 each of 6, 7, 8
        check_graph(random_graph(rng, n), "random trial " + std::to_string(trial));
    }
    out.require(graphs_checked >= 1398, "family smaller than expected");
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "interval operator equals the literal cycle-search definition", 60.0,
         criterion_interval_equivalence},
        {2, "structured convexity number matches the oracle on 500 generated graphs", 300.0,
         criterion_con_vs_oracle},
        {3, "union and join formulas match the oracle, all join branches covered", 120.0,
         criterion_union_join_formulas},
        {4, "pseudo-split formula matches the oracle on both branches", 120.0,
         criterion_pseudo_split_formula},
        {5, "pinned leaf values: C5=3, P5=4, co-P5=3, single=0", 10.0, criterion_fixed_values},
        {6, "cactus percolation number matches the oracle on 300 graphs with witnesses", 300.0,
         criterion_cactus_pn},
        {7, "two-round decision matches the oracle exhaustively and on 500 random graphs", 600.0,
         criterion_two_round_decision},
        {8, "perpetuation attachment: round-4 coverage and minimal hull sets", 60.0,
         criterion_gadget_property},
        {9, "thick-spider wrapper equals head independence number plus three, 30 graphs", 120.0,
         criterion_thick_spider_corpus},
        {10, "satisfiability witnesses percolate in exactly the threshold rounds", 120.0,
         criterion_sat_forward},
        {11, "convex independence is the forest property and rank is the largest forest", 300.0,
         criterion_rank_forest},
    };

    bool all_ok = true;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            c.body(out);
        } catch (const std::exception& e) {
            out.fail(std::string("exception: ") + e.what());
        }
        const double elapsed = seconds_since(start);
        if (elapsed > c.budget_seconds)
            out.fail("exceeded the " + std::to_string(c.budget_seconds) + "s budget");

        if (out.ok) {
            std::printf("[PASS] criterion %d: %s [%.2fs]\n", c.id, c.description.c_str(), elapsed);
        } else {
            std::printf("[FAIL] criterion %d: %s [%.2fs] — %s\n", c.id, c.description.c_str(),
                        elapsed, out.reason.c_str());
            all_ok = false;
        }
        std::fflush(stdout);
    }
    return all_ok ? 0 : 1;
}
