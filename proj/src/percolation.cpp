#include "cyclecon/percolation.hpp"

#include <algorithm>
#include <queue>
#include <random>
#include <stdexcept>

#include "cyclecon/interval.hpp"

namespace cyclecon {

namespace {

bool contains_sorted(const std::vector<int>& sorted, int x) {
    return std::binary_search(sorted.begin(), sorted.end(), x);
}

std::vector<int> sorted_copy(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return v;
}

// ---------------------------------------------------------------------------
// Incidence forest as an adjacency structure. Node ids: cycle i -> i,
// vertex v -> num_cycles + v.
// ---------------------------------------------------------------------------
struct ForestView {
    int num_cycles = 0;
    int num_nodes = 0;
    std::vector<std::vector<int>> adj;
};

ForestView forest_view(const CycleIncidenceForest& f) {
    ForestView fv;
    fv.num_cycles = static_cast<int>(f.cycles.size());
    fv.num_nodes = fv.num_cycles + f.n;
    fv.adj.assign(fv.num_nodes, {});
    for (int c = 0; c < fv.num_cycles; ++c) {
        for (int v : f.cycles[c]) {
            fv.adj[c].push_back(fv.num_cycles + v);
            fv.adj[fv.num_cycles + v].push_back(c);
        }
    }
    return fv;
}

std::vector<int> forest_bfs(const ForestView& fv, int start) {
    std::vector<int> dist(fv.num_nodes, -1);
    std::queue<int> q;
    dist[start] = 0;
    q.push(start);
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        for (int y : fv.adj[x]) {
            if (dist[y] < 0) {
                dist[y] = dist[x] + 1;
                q.push(y);
            }
        }
    }
    return dist;
}

int argmax_dist(const std::vector<int>& dist) {
    int best = -1, where = -1;
    for (int i = 0; i < static_cast<int>(dist.size()); ++i) {
        if (dist[i] > best) {
            best = dist[i];
            where = i;
        }
    }
    return where;
}

// Longest-path data for the whole forest: the maximum path edge count D over
// all trees, plus per-cycle-node eccentricity within its own tree (computed
// from the two sweep endpoints; in a tree every node's eccentricity is its
// distance to one of the two ends of a longest path).
struct ForestPaths {
    int diameter = 0;                 // max path edge count over all trees
    std::vector<int> cycle_ecc;       // eccentricity of each cycle node in its tree
    std::vector<int> tree_diameter;   // diameter of the tree containing each cycle node
};

ForestPaths forest_paths(const ForestView& fv) {
    ForestPaths fp;
    fp.cycle_ecc.assign(fv.num_cycles, 0);
    fp.tree_diameter.assign(fv.num_cycles, 0);
    std::vector<char> seen(fv.num_nodes, 0);
    for (int c = 0; c < fv.num_cycles; ++c) {
        if (seen[c]) continue;
        auto d0 = forest_bfs(fv, c);
        int a = argmax_dist(d0);
        auto da = forest_bfs(fv, a);
        int b = argmax_dist(da);
        auto db = forest_bfs(fv, b);
        int dia = da[b];
        for (int x = 0; x < fv.num_cycles; ++x) {
            if (da[x] >= 0) {
                seen[x] = 1;
                fp.cycle_ecc[x] = std::max(da[x], db[x]);
                fp.tree_diameter[x] = dia;
            }
        }
        fp.diameter = std::max(fp.diameter, dia);
    }
    return fp;
}

// Cycle nodes that are ends of longest paths: their tree achieves the global
// diameter and their eccentricity is diameter - 1 (the path's penultimate
// node: longest paths end at vertex nodes).
std::vector<int> end_cycles(const ForestPaths& fp) {
    std::vector<int> out;
    for (int c = 0; c < static_cast<int>(fp.cycle_ecc.size()); ++c) {
        if (fp.tree_diameter[c] == fp.diameter && fp.cycle_ecc[c] == fp.diameter - 1) {
            out.push_back(c);
        }
    }
    return out;
}

CycleIncidenceForest forest_from_blocks(const Graph& g, const BlockDecomposition& bd) {
    CycleIncidenceForest f;
    f.n = g.n;
    f.cycles_of_vertex.assign(g.n, {});
    for (const auto& b : bd.blocks) {
        if (b.vertices.size() >= 3) {
            int id = static_cast<int>(f.cycles.size());
            f.cycles.push_back(b.vertices);
            for (int v : b.vertices) f.cycles_of_vertex[v].push_back(id);
        }
    }
    std::vector<int> comp;
    int nc = connected_components(g, comp);
    if (static_cast<int>(f.cycles.size()) != g.edge_count() - g.n + nc) {
        throw std::logic_error(
            "cycle_incidence_forest: cycle count does not match m - n + components");
    }
    return f;
}

// Smallest-id vertex of cycle c that lies on no other cycle and is not an
// articulation vertex; falls back to the smallest-id single-cycle vertex when
// every candidate is an articulation vertex (pendant trees can force this).
// Vertices are in local ids of the current graph; cycle vertex lists are
// sorted, and local order equals original order, so "smallest" is stable.
int pick_cycle_vertex(const CycleIncidenceForest& f, const BlockDecomposition& bd, int c) {
    int fallback = -1;
    for (int v : f.cycles[c]) {
        if (f.cycles_of_vertex[v].size() != 1) continue;
        if (!bd.is_articulation[v]) return v;
        if (fallback < 0) fallback = v;
    }
    if (fallback < 0) {
        throw std::logic_error("pick_cycle_vertex: end cycle has no vertex of its own");
    }
    return fallback;
}

// ---------------------------------------------------------------------------
// Witness construction for one connected cactus with at least one cycle.
// Returns the witness in local ids of h; the percolation value is D/2.
//
// Level by level: every end cycle except one designated far cycle loses its
// single-cycle vertices; of those, one chosen vertex per cycle (and the
// running target vertex v) stay out of the witness. The walk then steps from
// the current cycle toward the far cycle and repeats; the forest diameter
// must drop by exactly 2 per level. At diameter 2 everything still alive
// except v joins the witness. The target vertex of the first level then
// percolates last: its cycle is restored arc by arc as the chain of shared
// vertices percolates back from the far end.
// ---------------------------------------------------------------------------
struct ComponentResult {
    int value = 0;
    std::vector<int> witness;
};

ComponentResult pn_connected_cactus(const Graph& h) {
    {
        auto bd0 = block_decomposition(h);
        auto f0 = forest_from_blocks(h, bd0);
        if (f0.cycles.empty()) {
            ComponentResult r;
            r.value = 0;
            r.witness.resize(h.n);
            for (int i = 0; i < h.n; ++i) r.witness[i] = i;
            return r;
        }
    }

    std::vector<char> alive(h.n, 1);
    std::vector<int> witness;           // h ids
    int value = -1;                     // D/2 of the first level
    int expected_diameter = -1;
    int v = -1;                         // h id of the running target vertex
    std::vector<int> target_cycle;      // h ids, sorted: the cycle v waits on

    while (true) {
        std::vector<int> alive_list;
        for (int i = 0; i < h.n; ++i)
            if (alive[i]) alive_list.push_back(i);
        auto sub = induced_subgraph(h, alive_list);
        auto bd = block_decomposition(sub.g);
        auto f = forest_from_blocks(sub.g, bd);
        auto fv = forest_view(f);
        auto fp = forest_paths(fv);

        auto to_h = [&](const std::vector<int>& local) {
            std::vector<int> out;
            out.reserve(local.size());
            for (int x : local) out.push_back(sub.to_orig[x]);
            return out;
        };

        if (expected_diameter >= 0 && fp.diameter != expected_diameter) {
            throw std::logic_error("pn_cactus: stripping a layer did not shrink the forest by 2");
        }

        auto ends = end_cycles(fp);
        int ck = -1;  // local cycle id of the cycle v waits on
        if (v < 0) {
            value = fp.diameter / 2;
            for (int e : ends) {
                if (ck < 0 || f.cycles[e].front() < f.cycles[ck].front()) ck = e;
            }
            v = sub.to_orig[pick_cycle_vertex(f, bd, ck)];
            target_cycle = to_h(f.cycles[ck]);
        } else {
            for (int c = 0; c < static_cast<int>(f.cycles.size()) && ck < 0; ++c) {
                if (to_h(f.cycles[c]) == target_cycle) ck = c;
            }
            if (ck < 0) throw std::logic_error("pn_cactus: the target cycle vanished");
            if (std::find(ends.begin(), ends.end(), ck) == ends.end()) {
                throw std::logic_error("pn_cactus: the target cycle stopped being an end cycle");
            }
        }

        if (fp.diameter == 2) {
            for (int u : alive_list)
                if (u != v) witness.push_back(u);
            break;
        }

        // The far cycle: an end cycle at forest distance diameter - 2 from the
        // target cycle (ties to the smallest first vertex). BFS from the far
        // cycle gives the path back: parent of the target cycle is the shared
        // vertex to step to, whose parent is the next cycle of the walk.
        auto dist_ck = forest_bfs(fv, ck);
        int far = -1;
        for (int e : ends) {
            if (e == ck || dist_ck[e] != fp.diameter - 2) continue;
            if (far < 0 || f.cycles[e].front() < f.cycles[far].front()) far = e;
        }
        if (far < 0) throw std::logic_error("pn_cactus: no far cycle at the expected distance");

        std::vector<int> parent(fv.num_nodes, -1);
        {
            std::vector<int> dist(fv.num_nodes, -1);
            std::queue<int> q;
            dist[far] = 0;
            q.push(far);
            while (!q.empty()) {
                int x = q.front();
                q.pop();
                for (int y : fv.adj[x]) {
                    if (dist[y] < 0) {
                        dist[y] = dist[x] + 1;
                        parent[y] = x;
                        q.push(y);
                    }
                }
            }
        }
        int shared_node = parent[ck];
        if (shared_node < fv.num_cycles) {
            throw std::logic_error("pn_cactus: walk step is not a vertex node");
        }
        int next_v = sub.to_orig[shared_node - fv.num_cycles];
        int next_cycle = parent[shared_node];
        if (next_cycle < 0 || next_cycle >= fv.num_cycles) {
            throw std::logic_error("pn_cactus: walk step has no next cycle");
        }
        std::vector<int> next_cycle_h = to_h(f.cycles[next_cycle]);

        // Strip every end cycle except the far one; keep one vertex per
        // stripped cycle (the target vertex for ck) out of the witness.
        std::vector<int> keep_out = {v};
        std::vector<int> removed_h;
        for (int e : ends) {
            if (e == far) continue;
            if (e != ck) keep_out.push_back(sub.to_orig[pick_cycle_vertex(f, bd, e)]);
            for (int u : f.cycles[e]) {
                if (f.cycles_of_vertex[u].size() == 1) removed_h.push_back(sub.to_orig[u]);
            }
        }
        std::sort(keep_out.begin(), keep_out.end());
        for (int u : removed_h) {
            alive[u] = 0;
            if (!contains_sorted(keep_out, u)) witness.push_back(u);
        }

        v = next_v;
        target_cycle = std::move(next_cycle_h);
        expected_diameter = fp.diameter - 2;
    }

    std::sort(witness.begin(), witness.end());
    return {value, witness};
}

// Extract some cycle through w inside its (>= 3 vertex) block: w plus a
// shortest path between two of w's neighbors in the block that avoids w.
// Returns the cycle in cyclic order, in the ids of `g`.
std::vector<int> cycle_through_vertex_in_block(const Graph& g, const Block& blk, int w) {
    auto bsub = induced_subgraph(g, blk.vertices);
    int lw = bsub.from_orig[w];
    std::vector<int> nbrs;
    for (int u = 0; u < bsub.g.n; ++u) {
        if (u != lw && bsub.g.has_edge(lw, u)) nbrs.push_back(u);
    }
    if (nbrs.size() < 2) {
        throw std::logic_error("cycle_through_vertex_in_block: block is not 2-connected");
    }
    auto path = shortest_path_avoiding(bsub.g, nbrs[0], nbrs[1], {lw});
    if (!path) {
        throw std::logic_error("cycle_through_vertex_in_block: block fell apart without w");
    }
    std::vector<int> cyc = {w};
    for (int x : *path) cyc.push_back(bsub.to_orig[x]);
    return cyc;
}

void require_edge(const Graph& g, int v, int w, const char* who) {
    if (v < 0 || v >= g.n || w < 0 || w >= g.n || v == w || !g.has_edge(v, w)) {
        throw std::invalid_argument(std::string(who) + ": vw must be an edge of the graph");
    }
}

// Literal validation of the RStructure membership conditions.
void validate_r_structure(const Graph& g, const RStructure& rs) {
    require_edge(g, rs.v, rs.w, "seed_set_from_structure");
    auto check_cycle = [&](const std::vector<int>& cyc, const char* name) {
        if (cyc.size() < 3) {
            throw std::invalid_argument(std::string("seed_set_from_structure: ") + name +
                                        " is not a cycle (fewer than 3 vertices)");
        }
        auto s = sorted_copy(cyc);
        if (std::adjacent_find(s.begin(), s.end()) != s.end() || s.front() < 0 ||
            s.back() >= g.n) {
            throw std::invalid_argument(std::string("seed_set_from_structure: ") + name +
                                        " has repeated or invalid vertices");
        }
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            int a = cyc[i], b = cyc[(i + 1) % cyc.size()];
            if (!g.has_edge(a, b)) {
                throw std::invalid_argument(std::string("seed_set_from_structure: ") + name +
                                            " has a missing cycle edge");
            }
        }
        return s;
    };

    auto aset = check_cycle(rs.cycle_a, "cycle_a");
    if (!contains_sorted(aset, rs.v) || !contains_sorted(aset, rs.w)) {
        throw std::invalid_argument("seed_set_from_structure: cycle_a must contain v and w");
    }
    // v and w must be consecutive on cycle_a (the cycle goes through the edge),
    // and the cycle must be chordless: induced edge count equals its length.
    bool consecutive = false;
    for (std::size_t i = 0; i < rs.cycle_a.size(); ++i) {
        int a = rs.cycle_a[i], b = rs.cycle_a[(i + 1) % rs.cycle_a.size()];
        if ((a == rs.v && b == rs.w) || (a == rs.w && b == rs.v)) consecutive = true;
    }
    if (!consecutive) {
        throw std::invalid_argument("seed_set_from_structure: cycle_a does not use the edge vw");
    }
    if (induced_subgraph(g, aset).g.edge_count() != static_cast<int>(aset.size())) {
        throw std::invalid_argument("seed_set_from_structure: cycle_a has a chord");
    }

    auto bset = check_cycle(rs.cycle_b, "cycle_b");
    if (!contains_sorted(bset, rs.w) || contains_sorted(bset, rs.v)) {
        throw std::invalid_argument(
            "seed_set_from_structure: cycle_b must contain w and avoid v");
    }
    int v_nbrs = 0;
    for (int u : bset) {
        if (u != rs.w && g.has_edge(rs.v, u)) ++v_nbrs;
    }
    if (v_nbrs > 1) {
        throw std::invalid_argument(
            "seed_set_from_structure: v has more than one neighbor on cycle_b besides w");
    }
}

}  // namespace

// ---------------------------------------------------------------------------
// Cactus recognition and forest.
// ---------------------------------------------------------------------------

CactusCheck is_cactus(const Graph& g) {
    auto bd = block_decomposition(g);
    for (const auto& b : bd.blocks) {
        if (b.edges.size() > b.vertices.size()) {
            return {false, b.edges.front()};
        }
    }
    return {true, std::nullopt};
}

CycleIncidenceForest cycle_incidence_forest(const Graph& g) {
    auto chk = is_cactus(g);
    if (!chk.ok) throw std::invalid_argument("cycle_incidence_forest: graph is not a cactus");
    return forest_from_blocks(g, block_decomposition(g));
}

int cactus_longest_cycle_path(const Graph& g) {
    auto f = cycle_incidence_forest(g);
    if (f.cycles.empty()) {
        throw std::invalid_argument("cactus_longest_cycle_path: the cactus has no cycle");
    }
    auto fv = forest_view(f);
    auto fp = forest_paths(fv);
    return fp.diameter / 2 - 1;
}

PercolationResult pn_cactus(const Graph& g) {
    auto chk = is_cactus(g);
    if (!chk.ok) throw std::invalid_argument("pn_cactus: graph is not a cactus");

    PercolationResult res;
    for (const auto& comp : component_vertex_sets(g)) {
        auto sub = induced_subgraph(g, comp);
        auto cr = pn_connected_cactus(sub.g);
        res.value = std::max(res.value, cr.value);
        for (int v : cr.witness) res.witness.push_back(sub.to_orig[v]);
    }
    std::sort(res.witness.begin(), res.witness.end());

    if (!is_hull_set(g, res.witness)) {
        throw std::logic_error("pn_cactus: constructed witness is not a hull set");
    }
    auto t = percolation_time_of_set(g, res.witness);
    if (!t || *t != res.value) {
        throw std::logic_error("pn_cactus: witness percolation time disagrees with the value");
    }
    return res;
}

// ---------------------------------------------------------------------------
// The pn >= 2 pipeline.
// ---------------------------------------------------------------------------

std::optional<std::vector<int>> induced_cycle_through_edge(const Graph& g, int v, int w) {
    require_edge(g, v, w, "induced_cycle_through_edge");
    auto path = shortest_path_avoiding(g, v, w, {},
                                       std::make_pair(std::min(v, w), std::max(v, w)));
    if (!path) return std::nullopt;  // vw is a bridge
    // The path v..w closed by the edge wv, in cyclic order.
    std::vector<int> cyc = *path;
    auto sorted = sorted_copy(cyc);
    if (induced_subgraph(g, sorted).g.edge_count() != static_cast<int>(cyc.size())) {
        throw std::logic_error("induced_cycle_through_edge: shortest-path cycle has a chord");
    }
    return cyc;
}

std::optional<std::vector<int>> companion_cycle(const Graph& g, int v, int w) {
    require_edge(g, v, w, "companion_cycle");
    std::vector<std::optional<int>> allowed = {std::nullopt};
    for (int a : g.adj[v]) {
        if (a != w) allowed.emplace_back(a);
    }
    for (const auto& a : allowed) {
        std::vector<int> keep;
        for (int u = 0; u < g.n; ++u) {
            if (u == v) continue;
            if (u != w && (!a || u != *a) && g.has_edge(v, u)) continue;
            keep.push_back(u);
        }
        auto sub = induced_subgraph(g, keep);
        int lw = sub.from_orig[w];
        auto bd = block_decomposition(sub.g);
        if (!bd.on_cycle[lw]) continue;
        for (int bid : bd.blocks_of_vertex[lw]) {
            if (bd.blocks[bid].vertices.size() < 3) continue;
            auto cyc = cycle_through_vertex_in_block(sub.g, bd.blocks[bid], lw);
            for (int& x : cyc) x = sub.to_orig[x];
            return cyc;
        }
    }
    return std::nullopt;
}

std::optional<RStructure> find_r_structure(const Graph& g) {
    for (int v = 0; v < g.n; ++v) {
        for (int w : g.adj[v]) {
            auto a = induced_cycle_through_edge(g, v, w);
            if (!a) continue;
            auto b = companion_cycle(g, v, w);
            if (!b) continue;
            RStructure rs;
            rs.v = v;
            rs.w = w;
            rs.cycle_a = std::move(*a);
            rs.cycle_b = std::move(*b);
            return rs;
        }
    }
    return std::nullopt;
}

SeedSet seed_set_from_structure(const Graph& g, const RStructure& rs) {
    validate_r_structure(g, rs);
    auto bset = sorted_copy(rs.cycle_b);
    int v_nbrs = 0;
    for (int u : bset) {
        if (u != rs.w && g.has_edge(rs.v, u)) ++v_nbrs;
    }

    std::vector<int> s;
    if (v_nbrs == 1) {
        for (int u : bset)
            if (u != rs.w) s.push_back(u);
    } else {
        s = bset;
        for (int u : rs.cycle_a) s.push_back(u);
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        std::erase_if(s, [&](int u) { return u == rs.v || u == rs.w; });
    }

    auto round1 = interval_step(g, s);
    auto round2 = interval_step(g, round1);
    if (contains_sorted(round1, rs.v) || !contains_sorted(round2, rs.v)) {
        throw std::logic_error(
            "seed_set_from_structure: seed failed to stage the target for round two");
    }
    return {std::move(s), rs.v};
}

std::vector<int> extend_to_hull_set(const Graph& g, int v, const std::vector<int>& Q) {
    if (v < 0 || v >= g.n) {
        throw std::invalid_argument("extend_to_hull_set: target vertex out of range");
    }
    auto round1 = interval_step(g, Q);
    auto round2 = interval_step(g, round1);
    if (contains_sorted(round1, v) || !contains_sorted(round2, v)) {
        throw std::invalid_argument(
            "extend_to_hull_set: target must enter the interval exactly at round two");
    }

    auto q_sorted = sorted_copy(Q);
    auto h = hull(g, Q).layers.back();
    std::vector<char> outside(g.n, 0);  // outside the hull of Q
    for (int u = 0; u < g.n; ++u) outside[u] = 1;
    for (int u : h) outside[u] = 0;

    // v and Q plus everything outside the hull.
    std::vector<char> in_vp(g.n, 0);
    in_vp[v] = 1;
    for (int u : q_sorted) in_vp[u] = 1;
    for (int u = 0; u < g.n; ++u)
        if (outside[u]) in_vp[u] = 1;

    std::vector<char> removed(g.n, 0);
    while (true) {
        std::vector<int> cur;
        for (int u = 0; u < g.n; ++u)
            if (in_vp[u] && !removed[u]) cur.push_back(u);
        auto sub = induced_subgraph(g, cur);
        auto bd = block_decomposition(sub.g);
        int lv = sub.from_orig[v];
        int best = -1;
        for (int bid : bd.blocks_of_vertex[lv]) {
            if (bd.blocks[bid].vertices.size() < 3) continue;
            for (int u : bd.blocks[bid].vertices) {
                int orig = sub.to_orig[u];
                if (orig != v && outside[orig] && (best < 0 || orig < best)) best = orig;
            }
        }
        if (best < 0) break;
        removed[best] = 1;
    }

    std::vector<int> s;
    for (int u = 0; u < g.n; ++u) {
        if (in_vp[u] && !removed[u] && u != v) s.push_back(u);
    }

    if (!is_hull_set(g, s)) {
        throw std::logic_error("extend_to_hull_set: extension is not a hull set");
    }
    if (contains_sorted(interval_step(g, s), v)) {
        throw std::logic_error("extend_to_hull_set: target percolated in the first round");
    }
    for (int u : q_sorted) {
        if (!contains_sorted(s, u)) {
            throw std::logic_error("extend_to_hull_set: extension dropped part of the seed");
        }
    }
    return s;
}

std::optional<std::vector<int>> pn_at_least_2(const Graph& g) {
    if (g.n < 3) return std::nullopt;
    auto rs = find_r_structure(g);
    if (!rs) return std::nullopt;
    auto seed = seed_set_from_structure(g, *rs);
    return extend_to_hull_set(g, seed.target, seed.set);
}

// ---------------------------------------------------------------------------
// Random cactus generator.
// ---------------------------------------------------------------------------

Graph generate_random_cactus(std::uint64_t seed, int max_n) {
    if (max_n < 1) {
        throw std::invalid_argument("generate_random_cactus: max_n must be at least 1");
    }
    std::mt19937_64 rng(seed);
    int n_target = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_n));
    std::vector<std::pair<int, int>> edges;
    int n = 1;
    while (n < n_target) {
        int remaining = n_target - n;
        int anchor = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
        std::uint64_t roll = rng() % 8;
        if (roll == 0) {
            n += 1;  // fresh isolated vertex: starts a new component
        } else if (roll <= 2 || remaining < 2) {
            edges.emplace_back(anchor, n);  // pendant edge
            n += 1;
        } else {
            // Cycle through the anchor: adds len-1 fresh vertices.
            int cap = std::min(6, remaining + 1);
            int len = 3 + static_cast<int>(rng() % static_cast<std::uint64_t>(cap - 2));
            int prev = anchor;
            for (int i = 0; i < len - 1; ++i) {
                edges.emplace_back(prev, n + i);
                prev = n + i;
            }
            edges.emplace_back(prev, anchor);
            n += len - 1;
        }
    }
    return Graph::from_edges(n_target, edges);
}

}  // namespace cyclecon
