#include "cyclecon/graph.hpp"

#include <algorithm>
#include <fstream>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cyclecon {

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& pairs) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    std::set<std::pair<int, int>> normalized;
    for (auto [u, v] : pairs) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(u) +
                                        "," + std::to_string(v) + ") with n=" + std::to_string(n));
        if (u == v)
            throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        normalized.insert({std::min(u, v), std::max(u, v)});
    }
    Graph g;
    g.n = n;
    g.adj.assign(n, {});
    g.edges.assign(normalized.begin(), normalized.end());
    for (auto [u, v] : g.edges) {
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    for (auto& nb : g.adj) std::sort(nb.begin(), nb.end());
    return g;
}

bool Graph::has_edge(int u, int v) const {
    if (u == v) return false;
    const auto& nb = adj[u].size() <= adj[v].size() ? adj[u] : adj[v];
    int other = adj[u].size() <= adj[v].size() ? v : u;
    return std::binary_search(nb.begin(), nb.end(), other);
}

int Graph::min_degree() const {
    int d = 0;
    for (int v = 0; v < n; ++v) d = (v == 0) ? degree(0) : std::min(d, degree(v));
    return n == 0 ? 0 : d;
}

// --------------------------------------------------------------------------
// Parsing / writing.
// --------------------------------------------------------------------------

Graph parse_edge_list(std::istream& in) {
    std::vector<long long> tokens;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) {
            try {
                size_t pos = 0;
                long long value = std::stoll(tok, &pos);
                if (pos != tok.size()) throw std::invalid_argument(tok);
                tokens.push_back(value);
            } catch (const std::exception&) {
                throw std::runtime_error("edge list: non-integer token '" + tok + "'");
            }
        }
    }
    if (tokens.size() < 2) throw std::runtime_error("edge list: missing 'n m' header");
    long long n = tokens[0], m = tokens[1];
    if (n < 0 || m < 0) throw std::runtime_error("edge list: negative header value");
    if (static_cast<long long>(tokens.size()) != 2 + 2 * m)
        throw std::runtime_error("edge list: expected exactly " + std::to_string(m) +
                                 " edges after header, found " +
                                 std::to_string((tokens.size() - 2) / 2) +
                                 (tokens.size() % 2 ? " and a dangling token" : ""));
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(static_cast<size_t>(m));
    for (long long i = 0; i < m; ++i) {
        long long u = tokens[2 + 2 * i], v = tokens[3 + 2 * i];
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::runtime_error("edge list: endpoint out of range in edge " +
                                     std::to_string(u) + " " + std::to_string(v));
        if (u == v)
            throw std::runtime_error("edge list: self-loop at vertex " + std::to_string(u));
        pairs.push_back({static_cast<int>(u), static_cast<int>(v)});
    }
    return Graph::from_edges(static_cast<int>(n), pairs);
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream ss(text);
    return parse_edge_list(ss);
}

Graph load_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    return parse_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.n << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges) out << u << ' ' << v << '\n';
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream ss;
    write_edge_list(ss, g);
    return ss.str();
}

// --------------------------------------------------------------------------
// Components.
// --------------------------------------------------------------------------

int connected_components(const Graph& g, std::vector<int>& comp) {
    comp.assign(g.n, -1);
    int count = 0;
    std::vector<int> queue;
    for (int s = 0; s < g.n; ++s) {
        if (comp[s] != -1) continue;
        comp[s] = count;
        queue.assign(1, s);
        while (!queue.empty()) {
            int u = queue.back();
            queue.pop_back();
            for (int w : g.adj[u])
                if (comp[w] == -1) {
                    comp[w] = count;
                    queue.push_back(w);
                }
        }
        ++count;
    }
    return count;
}

std::vector<std::vector<int>> component_vertex_sets(const Graph& g) {
    std::vector<int> comp;
    int count = connected_components(g, comp);
    std::vector<std::vector<int>> out(count);
    for (int v = 0; v < g.n; ++v) out[comp[v]].push_back(v);
    return out;  // each inner list ascending; outer ordered by smallest vertex
}

bool is_connected(const Graph& g) {
    std::vector<int> comp;
    return connected_components(g, comp) <= 1;
}

// --------------------------------------------------------------------------
// Induced subgraph.
// --------------------------------------------------------------------------

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
    InducedSubgraph out;
    out.to_orig = vertices;
    std::sort(out.to_orig.begin(), out.to_orig.end());
    if (std::adjacent_find(out.to_orig.begin(), out.to_orig.end()) != out.to_orig.end())
        throw std::invalid_argument("induced_subgraph: duplicate vertex id");
    out.from_orig.assign(g.n, -1);
    for (size_t i = 0; i < out.to_orig.size(); ++i) {
        int v = out.to_orig[i];
        if (v < 0 || v >= g.n)
            throw std::invalid_argument("induced_subgraph: vertex id out of range");
        out.from_orig[v] = static_cast<int>(i);
    }
    std::vector<std::pair<int, int>> pairs;
    for (auto [u, v] : g.edges)
        if (out.from_orig[u] != -1 && out.from_orig[v] != -1)
            pairs.push_back({out.from_orig[u], out.from_orig[v]});
    out.g = Graph::from_edges(static_cast<int>(out.to_orig.size()), pairs);
    return out;
}

// --------------------------------------------------------------------------
// Blocks, articulation vertices, bridges. Iterative Hopcroft–Tarjan with an
// explicit edge stack; starting vertices scanned in ascending order keeps the
// block order deterministic.
// --------------------------------------------------------------------------

BlockDecomposition block_decomposition(const Graph& g) {
    BlockDecomposition out;
    out.is_articulation.assign(g.n, 0);
    out.on_cycle.assign(g.n, 0);
    out.blocks_of_vertex.assign(g.n, {});

    std::vector<int> disc(g.n, -1), low(g.n, 0), parent(g.n, -1), child_count(g.n, 0);
    std::vector<size_t> next_edge(g.n, 0);
    std::vector<std::pair<int, int>> edge_stack;
    int timer = 0;

    auto emit_block = [&](int u, int v) {
        // Pop the edge stack down to and including (u,v); that's one block.
        Block b;
        std::set<int> vset;
        while (true) {
            auto e = edge_stack.back();
            edge_stack.pop_back();
            b.edges.push_back({std::min(e.first, e.second), std::max(e.first, e.second)});
            vset.insert(e.first);
            vset.insert(e.second);
            if ((e.first == u && e.second == v) || (e.first == v && e.second == u)) break;
        }
        std::sort(b.edges.begin(), b.edges.end());
        b.vertices.assign(vset.begin(), vset.end());
        out.blocks.push_back(std::move(b));
    };

    for (int root = 0; root < g.n; ++root) {
        if (disc[root] != -1) continue;
        std::vector<int> stack = {root};
        disc[root] = low[root] = timer++;
        while (!stack.empty()) {
            int u = stack.back();
            if (next_edge[u] < g.adj[u].size()) {
                int w = g.adj[u][next_edge[u]++];
                if (disc[w] == -1) {
                    parent[w] = u;
                    ++child_count[u];
                    disc[w] = low[w] = timer++;
                    edge_stack.push_back({u, w});
                    stack.push_back(w);
                } else if (w != parent[u] && disc[w] < disc[u]) {
                    edge_stack.push_back({u, w});
                    low[u] = std::min(low[u], disc[w]);
                }
            } else {
                stack.pop_back();
                int p = parent[u];
                if (p != -1) {
                    low[p] = std::min(low[p], low[u]);
                    if (low[u] >= disc[p]) {
                        emit_block(p, u);
                        if (p != root || child_count[p] >= 2) out.is_articulation[p] = 1;
                    }
                }
            }
        }
    }

    for (size_t i = 0; i < out.blocks.size(); ++i) {
        const Block& b = out.blocks[i];
        if (b.edges.size() == 1) out.bridges.push_back(b.edges[0]);
        for (int v : b.vertices) {
            out.blocks_of_vertex[v].push_back(static_cast<int>(i));
            if (b.vertices.size() >= 3) out.on_cycle[v] = 1;
        }
    }
    std::sort(out.bridges.begin(), out.bridges.end());
    return out;
}

// --------------------------------------------------------------------------
// BFS shortest path with forbidden vertices / one forbidden edge.
// --------------------------------------------------------------------------

std::optional<std::vector<int>> shortest_path_avoiding(
    const Graph& g, int s, int t,
    const std::vector<int>& forbidden_vertices,
    std::optional<std::pair<int, int>> forbidden_edge) {
    if (s < 0 || s >= g.n || t < 0 || t >= g.n)
        throw std::invalid_argument("shortest_path_avoiding: endpoint out of range");
    std::vector<char> blocked(g.n, 0);
    for (int v : forbidden_vertices) {
        if (v < 0 || v >= g.n)
            throw std::invalid_argument("shortest_path_avoiding: forbidden vertex out of range");
        blocked[v] = 1;
    }
    if (blocked[s] || blocked[t])
        throw std::invalid_argument("shortest_path_avoiding: endpoint is forbidden");
    auto edge_banned = [&](int u, int v) {
        if (!forbidden_edge) return false;
        auto [a, b] = *forbidden_edge;
        return (u == a && v == b) || (u == b && v == a);
    };
    std::vector<int> parent(g.n, -2);
    std::queue<int> q;
    parent[s] = -1;
    q.push(s);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        if (u == t) break;
        for (int w : g.adj[u]) {
            if (blocked[w] || parent[w] != -2 || edge_banned(u, w)) continue;
            parent[w] = u;
            q.push(w);
        }
    }
    if (parent[t] == -2) return std::nullopt;
    std::vector<int> path;
    for (int v = t; v != -1; v = parent[v]) path.push_back(v);
    std::reverse(path.begin(), path.end());
    return path;
}

// --------------------------------------------------------------------------
// Operations.
// --------------------------------------------------------------------------

Graph complement(const Graph& g) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (!g.has_edge(u, v)) pairs.push_back({u, v});
    return Graph::from_edges(g.n, pairs);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<std::pair<int, int>> pairs = a.edges;
    for (auto [u, v] : b.edges) pairs.push_back({u + a.n, v + a.n});
    return Graph::from_edges(a.n + b.n, pairs);
}

Graph join(const Graph& a, const Graph& b) {
    Graph g = disjoint_union(a, b);
    std::vector<std::pair<int, int>> pairs = g.edges;
    for (int u = 0; u < a.n; ++u)
        for (int v = 0; v < b.n; ++v) pairs.push_back({u, a.n + v});
    return Graph::from_edges(g.n, pairs);
}

}  // namespace cyclecon
