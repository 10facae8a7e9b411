#include "cyclecon/oracles.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace cyclecon {

namespace {

using Mask = std::uint32_t;

struct MaskGraph {
    int n = 0;
    std::vector<Mask> adj;  // adj[v] = neighbor bitmask
    Mask full = 0;

    explicit MaskGraph(const Graph& g) : n(g.n), adj(g.n, 0) {
        for (auto [u, v] : g.edges) {
            adj[u] |= Mask{1} << v;
            adj[v] |= Mask{1} << u;
        }
        full = (n == 32) ? ~Mask{0} : ((Mask{1} << n) - 1);
    }

    // One interval step: vertices outside S with two neighbors in one
    // component of G[S]. Components found by repeated bitmask BFS.
    Mask interval_step(Mask s) const {
        Mask result = s;
        Mask remaining = s;
        while (remaining) {
            // Grow one component of G[S] from its lowest remaining vertex.
            Mask comp = remaining & (~remaining + 1);
            while (true) {
                Mask grown = comp;
                Mask scan = comp;
                while (scan) {
                    int v = std::countr_zero(scan);
                    scan &= scan - 1;
                    grown |= adj[v] & s;
                }
                if (grown == comp) break;
                comp = grown;
            }
            remaining &= ~comp;
            Mask outside = full & ~s;
            while (outside) {
                int u = std::countr_zero(outside);
                outside &= outside - 1;
                if (std::popcount(adj[u] & comp) >= 2) result |= Mask{1} << u;
            }
        }
        return result;
    }

    Mask hull(Mask s) const {
        while (true) {
            Mask next = interval_step(s);
            if (next == s) return s;
            s = next;
        }
    }

    // Number of steps to reach the fixpoint (0 if S already fixed), plus the
    // fixpoint itself.
    std::pair<Mask, int> hull_with_time(Mask s) const {
        int t = 0;
        while (true) {
            Mask next = interval_step(s);
            if (next == s) return {s, t};
            s = next;
            ++t;
        }
    }

    bool is_convex(Mask s) const { return interval_step(s) == s; }

    bool is_forest(Mask s) const {
        // |edges(G[S])| == |S| - #components(G[S])
        int vertices = std::popcount(s);
        int edge_twice = 0;
        Mask scan = s;
        while (scan) {
            int v = std::countr_zero(scan);
            scan &= scan - 1;
            edge_twice += std::popcount(adj[v] & s);
        }
        int comps = 0;
        Mask remaining = s;
        while (remaining) {
            Mask comp = remaining & (~remaining + 1);
            while (true) {
                Mask grown = comp;
                Mask sc = comp;
                while (sc) {
                    int v = std::countr_zero(sc);
                    sc &= sc - 1;
                    grown |= adj[v] & s;
                }
                if (grown == comp) break;
                comp = grown;
            }
            remaining &= ~comp;
            ++comps;
        }
        return edge_twice / 2 == vertices - comps;
    }
};

std::vector<int> mask_to_set(Mask m) {
    std::vector<int> out;
    while (m) {
        out.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return out;
}

void check_cap(const Graph& g, const OracleOptions& opt, const char* what) {
    if (g.n > opt.max_n)
        throw std::invalid_argument(std::string(what) + ": graph has " + std::to_string(g.n) +
                                    " vertices, above the oracle cap of " +
                                    std::to_string(opt.max_n));
    if (opt.max_n > 31)
        throw std::invalid_argument(std::string(what) + ": oracle cap above 31 is not supported");
}

// Next bitmask with the same popcount (Gosper's hack).
Mask next_same_popcount(Mask x) {
    Mask c = x & (~x + 1);
    Mask r = x + c;
    return (((r ^ x) >> 2) / c) | r;
}

}  // namespace

OracleSetResult oracle_convexity_number(const Graph& g, const OracleOptions& opt) {
    check_cap(g, opt, "oracle_convexity_number");
    if (g.n <= 1) return {0, {}};
    MaskGraph mg(g);
    for (int size = g.n - 1; size >= 0; --size) {
        if (size == 0) return {0, {}};  // the empty set is always convex
        Mask m = (Mask{1} << size) - 1;
        Mask limit = Mask{1} << g.n;
        while (m < limit) {
            if (mg.is_convex(m)) return {size, mask_to_set(m)};
            m = next_same_popcount(m);
        }
    }
    return {0, {}};
}

OracleSetResult oracle_percolation_number(const Graph& g, const OracleOptions& opt) {
    check_cap(g, opt, "oracle_percolation_number");
    MaskGraph mg(g);
    int best = 0;
    Mask best_witness = mg.full;  // V percolates in 0 steps
    Mask limit = (g.n == 0) ? 1 : (Mask{1} << g.n);
    for (Mask s = 0; s < limit; ++s) {
        auto [fix, t] = mg.hull_with_time(s);
        if (fix == mg.full && t > best) {
            best = t;
            best_witness = s;
        }
    }
    return {best, mask_to_set(best_witness)};
}

OracleSetResult oracle_independence_number(const Graph& g, const OracleOptions& opt) {
    check_cap(g, opt, "oracle_independence_number");
    MaskGraph mg(g);
    int best = 0;
    Mask best_witness = 0;
    Mask limit = (g.n == 0) ? 1 : (Mask{1} << g.n);
    for (Mask s = 0; s < limit; ++s) {
        if (std::popcount(s) <= best) continue;
        bool independent = true;
        Mask scan = s;
        while (scan) {
            int v = std::countr_zero(scan);
            scan &= scan - 1;
            if (mg.adj[v] & s) {
                independent = false;
                break;
            }
        }
        if (independent) {
            best = std::popcount(s);
            best_witness = s;
        }
    }
    return {best, mask_to_set(best_witness)};
}

OracleSetResult oracle_max_induced_forest(const Graph& g, const OracleOptions& opt) {
    check_cap(g, opt, "oracle_max_induced_forest");
    MaskGraph mg(g);
    int best = 0;
    Mask best_witness = 0;
    Mask limit = (g.n == 0) ? 1 : (Mask{1} << g.n);
    for (Mask s = 0; s < limit; ++s) {
        if (std::popcount(s) <= best) continue;
        if (mg.is_forest(s)) {
            best = std::popcount(s);
            best_witness = s;
        }
    }
    return {best, mask_to_set(best_witness)};
}

std::optional<std::vector<int>> oracle_pn_witness_at_least(const Graph& g, int k,
                                                           const OracleOptions& opt) {
    check_cap(g, opt, "oracle_pn_witness_at_least");
    if (k < 0) throw std::invalid_argument("oracle_pn_witness_at_least: k must be >= 0");
    MaskGraph mg(g);
    Mask limit = (g.n == 0) ? 1 : (Mask{1} << g.n);
    for (Mask s = 0; s < limit; ++s) {
        auto [fix, t] = mg.hull_with_time(s);
        if (fix == mg.full && t >= k) return mask_to_set(s);
    }
    return std::nullopt;
}

}  // namespace cyclecon
