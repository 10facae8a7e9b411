#include "cyclecon/reductions.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "cyclecon/interval.hpp"

namespace cyclecon {

namespace {

// ---------------------------------------------------------------------------
// DIMACS parsing helpers.
// ---------------------------------------------------------------------------

[[noreturn]] void parse_fail(const std::string& what) {
    throw std::runtime_error("dimacs: " + what);
}

// Strips comment lines ('c' or '%' first non-space char) and returns the
// remaining text with the header line separated out.
struct DimacsText {
    std::string header;
    std::string body;
};

DimacsText split_dimacs(const std::string& text) {
    DimacsText out;
    std::istringstream in(text);
    std::string line;
    bool have_header = false;
    while (std::getline(in, line)) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        if (line[first] == 'c' || line[first] == '%') continue;
        if (!have_header) {
            out.header = line.substr(first);
            have_header = true;
        } else {
            out.body += line;
            out.body += '\n';
        }
    }
    if (!have_header) parse_fail("missing \"p cnf\" header");
    return out;
}

// ---------------------------------------------------------------------------
// Deterministic instance assembly. Vertices are numbered in creation order;
// every vertex gets its role label at birth, so labels are total and the
// numbering is reproducible.
// ---------------------------------------------------------------------------
struct InstanceBuilder {
    int n = 0;
    std::vector<std::pair<int, int>> edge_list;
    std::vector<std::string> labels;
    std::vector<std::array<int, 7>> gadgets;

    int vertex(std::string label) {
        labels.push_back(std::move(label));
        return n++;
    }
    void edge(int a, int b) { edge_list.emplace_back(a, b); }

    // Attaches one perpetuation gadget: six fresh interior vertices labelled
    // "<anchor label>.p1" .. ".p6" plus the twelve template edges.
    void gadget(int anchor) {
        std::array<int, 7> ids{};
        ids[0] = anchor;
        for (int s = 1; s <= 6; ++s)
            ids[s] = vertex(labels[anchor] + ".p" + std::to_string(s));
        for (auto [a, b] : PerpetuationGadget::edge_slots) edge(ids[a], ids[b]);
        gadgets.push_back(ids);
    }
};

// ---------------------------------------------------------------------------
// The clause gadget core: one frozen transcription table.
//
// Slot layout: 0 = z, 1+a = u_a, 4+a = v_a, 7+a = w_a, 10+a = q_a,
// 13+a = r_a for a = 0..2. Per slot a: the triangle u-w-v plus u-q, q-v and
// u-z; per cyclic pair (a, a'): u_a-u_a', w_a-r_a, r_a-w_a', w_a-w_a'.
// The degree profile (z 3; u 6; v 3; w 6; q 2; r 2) is checked once at
// first use to guard the table against silent drift.
// ---------------------------------------------------------------------------
const std::array<std::pair<int, int>, 30>& clause_core_table() {
    static const std::array<std::pair<int, int>, 30> table{{
        // a = 0                    a = 1                     a = 2
        {1, 7}, {7, 4}, {4, 1},     {2, 8}, {8, 5}, {5, 2},   {3, 9}, {9, 6}, {6, 3},
        {1, 10}, {10, 4}, {1, 0},   {2, 11}, {11, 5}, {2, 0}, {3, 12}, {12, 6}, {3, 0},
        // cyclic (0,1)             cyclic (1,2)              cyclic (2,0)
        {1, 2}, {7, 13}, {13, 8},   {2, 3}, {8, 14}, {14, 9}, {3, 1}, {9, 15}, {15, 7},
        {7, 8},                     {8, 9},                   {9, 7},
    }};
    static const bool checked = [] {
        std::array<int, 16> deg{};
        for (auto [a, b] : table) {
            ++deg[a];
            ++deg[b];
        }
        const std::array<int, 16> want{3, 6, 6, 6, 3, 3, 3, 6, 6, 6, 2, 2, 2, 2, 2, 2};
        if (deg != want)
            throw std::logic_error("clause gadget core table: degree profile drifted");
        return true;
    }();
    (void)checked;
    return table;
}

std::string pos_label(const char* role, int i, int a) {
    return std::string(role) + "[" + std::to_string(i + 1) + "," + std::to_string(a + 1) + "]";
}

std::string pair_label(const char* role, const std::array<int, 4>& p) {
    return std::string(role) + "[" + std::to_string(p[0] + 1) + "," + std::to_string(p[1] + 1) +
           ";" + std::to_string(p[2] + 1) + "," + std::to_string(p[3] + 1) + "]";
}

void validate_formula(const CnfFormula& f) {
    for (std::size_t i = 0; i < f.clauses.size(); ++i)
        for (int lit : f.clauses[i]) {
            if (lit == 0)
                throw std::invalid_argument("formula: zero literal in clause " +
                                            std::to_string(i + 1));
            if (std::abs(lit) > f.num_variables)
                throw std::invalid_argument("formula: literal " + std::to_string(lit) +
                                            " exceeds the declared " +
                                            std::to_string(f.num_variables) + " variables");
        }
}

}  // namespace

CnfFormula parse_dimacs_cnf(const std::string& text) {
    const DimacsText parts = split_dimacs(text);

    std::istringstream header(parts.header);
    std::string p, cnf;
    int num_vars = 0, num_clauses = 0;
    if (!(header >> p >> cnf >> num_vars >> num_clauses) || p != "p" || cnf != "cnf" ||
        num_vars < 0 || num_clauses < 0)
        parse_fail("malformed header \"" + parts.header + "\"; expected \"p cnf <vars> <clauses>\"");
    std::string trailing;
    if (header >> trailing) parse_fail("trailing tokens after header");

    CnfFormula f;
    f.num_variables = num_vars;

    std::istringstream body(parts.body);
    std::vector<int> current;
    int lit = 0;
    while (body >> lit) {
        if (lit == 0) {
            if (current.size() != 3)
                parse_fail("clause " + std::to_string(f.clauses.size() + 1) + " has " +
                           std::to_string(current.size()) + " literals; exactly 3 required");
            f.clauses.push_back({current[0], current[1], current[2]});
            if (current[0] == current[1] || current[0] == current[2] || current[1] == current[2])
                f.has_duplicate_literals = true;
            current.clear();
        } else {
            if (std::abs(lit) > num_vars)
                parse_fail("literal " + std::to_string(lit) + " out of range 1.." +
                           std::to_string(num_vars));
            current.push_back(lit);
        }
    }
    if (!body.eof()) parse_fail("non-integer token in clause data");
    if (!current.empty()) parse_fail("last clause not 0-terminated");
    if (static_cast<int>(f.clauses.size()) != num_clauses)
        parse_fail("header declares " + std::to_string(num_clauses) + " clauses but " +
                   std::to_string(f.clauses.size()) + " found");
    return f;
}

std::vector<std::array<int, 4>> opposite_literal_pairs(const CnfFormula& f) {
    const int m = static_cast<int>(f.clauses.size());
    std::vector<std::array<int, 4>> pairs;
    for (int i = 0; i < m; ++i)
        for (int a = 0; a < 3; ++a)
            for (int j = i; j < m; ++j)
                for (int b = (j == i ? a + 1 : 0); b < 3; ++b)
                    if (f.clauses[i][a] == -f.clauses[j][b]) pairs.push_back({i, a, j, b});
    return pairs;
}

Graph PerpetuationGadget::graph() {
    return Graph::from_edges(vertex_count, {edge_slots.begin(), edge_slots.end()});
}

Graph attach_perpetuation(const Graph& g, int anchor) {
    if (anchor < 0 || anchor >= g.n)
        throw std::invalid_argument("attach_perpetuation: anchor " + std::to_string(anchor) +
                                    " out of range for " + std::to_string(g.n) + " vertices");
    auto pairs = g.edges;
    std::array<int, 7> ids{};
    ids[0] = anchor;
    for (int s = 1; s <= 6; ++s) ids[s] = g.n + s - 1;
    for (auto [a, b] : PerpetuationGadget::edge_slots) pairs.emplace_back(ids[a], ids[b]);
    return Graph::from_edges(g.n + 6, pairs);
}

int vertex_with_label(const ReductionInstance& inst, const std::string& label) {
    for (int v = 0; v < static_cast<int>(inst.labels.size()); ++v)
        if (inst.labels[v] == label) return v;
    throw std::invalid_argument("no vertex labelled \"" + label + "\"");
}

ReductionInstance build_thick_spider_instance(const Graph& h) {
    InstanceBuilder b;
    std::array<int, 3> s{}, c{};
    for (int i = 0; i < 3; ++i) s[i] = b.vertex("s" + std::to_string(i + 1));
    for (int i = 0; i < 3; ++i) c[i] = b.vertex("c" + std::to_string(i + 1));
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) b.edge(c[i], c[j]);
    // Thick legs: s_i sees the whole clique side except its partner c_i.
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (i != j) b.edge(s[i], c[j]);
    // Head: a copy of H completely joined to the clique side.
    std::vector<int> hv(h.n);
    for (int v = 0; v < h.n; ++v) hv[v] = b.vertex("h" + std::to_string(v));
    for (auto [x, y] : h.edges) b.edge(hv[x], hv[y]);
    for (int v = 0; v < h.n; ++v)
        for (int i = 0; i < 3; ++i) b.edge(hv[v], c[i]);

    ReductionInstance inst;
    inst.graph = Graph::from_edges(b.n, b.edge_list);
    inst.labels = std::move(b.labels);
    return inst;
}

ReductionInstance build_percolation_instance(const CnfFormula& f, int k) {
    if (k < 9)
        throw std::invalid_argument("percolation instances exist for thresholds k >= 9; got " +
                                    std::to_string(k));
    validate_formula(f);
    const auto pairs = opposite_literal_pairs(f);
    if (pairs.empty())
        throw std::invalid_argument(
            "formula has no pair of opposite literals; the target vertex would be isolated "
            "(such formulas are trivially satisfiable and are rejected)");

    const int m = static_cast<int>(f.clauses.size());
    InstanceBuilder b;
    std::vector<std::array<int, 3>> w(m);
    for (int i = 0; i < m; ++i) {
        std::array<int, 16> slot{};
        slot[0] = b.vertex("z[" + std::to_string(i + 1) + "]");
        for (int a = 0; a < 3; ++a) slot[1 + a] = b.vertex(pos_label("u", i, a));
        for (int a = 0; a < 3; ++a) slot[4 + a] = b.vertex(pos_label("v", i, a));
        for (int a = 0; a < 3; ++a) slot[7 + a] = b.vertex(pos_label("w", i, a));
        for (int a = 0; a < 3; ++a) slot[10 + a] = b.vertex(pos_label("q", i, a));
        for (int a = 0; a < 3; ++a) slot[13 + a] = b.vertex(pos_label("r", i, a));
        for (auto [x, y] : clause_core_table()) b.edge(slot[x], slot[y]);
        for (int a = 0; a < 3; ++a) b.gadget(slot[10 + a]);
        for (int a = 0; a < 3; ++a) b.gadget(slot[13 + a]);
        b.gadget(slot[0]);
        w[i] = {slot[7], slot[8], slot[9]};
    }

    std::vector<std::pair<int, int>> ys;
    for (const auto& p : pairs) {
        const int y = b.vertex(pair_label("y", p));
        const int yp = b.vertex(pair_label("y'", p));
        // Same-clause opposite pairs re-add an existing w-w edge; from_edges
        // collapses the duplicate.
        b.edge(w[p[0]][p[1]], w[p[2]][p[3]]);
        b.edge(w[p[0]][p[1]], y);
        b.edge(w[p[2]][p[3]], y);
        b.gadget(yp);
        ys.emplace_back(y, yp);
    }

    int target = b.vertex("x");
    for (auto [y, yp] : ys) {
        b.edge(y, yp);
        b.edge(y, target);
        b.edge(yp, target);
    }

    // Threshold chain: each level delays the target by exactly one round.
    for (int lvl = 1; lvl <= k - 9; ++lvl) {
        const int p = b.vertex("chain[" + std::to_string(lvl) + "].p");
        b.gadget(p);
        const int t = b.vertex("t[" + std::to_string(lvl) + "]");
        b.edge(target, t);
        b.edge(target, p);
        b.edge(t, p);
        target = t;
    }

    ReductionInstance inst;
    inst.graph = Graph::from_edges(b.n, b.edge_list);
    inst.labels = std::move(b.labels);
    inst.gadgets = std::move(b.gadgets);
    inst.formula = f;
    inst.k = k;
    inst.target = target;

    const std::set<std::string> uniq(inst.labels.begin(), inst.labels.end());
    if (uniq.size() != inst.labels.size())
        throw std::logic_error("instance labels are not distinct");
    return inst;
}

std::vector<int> assignment_to_witness(const ReductionInstance& inst,
                                       const std::vector<bool>& assignment) {
    const CnfFormula& f = inst.formula;
    if (static_cast<int>(assignment.size()) != f.num_variables)
        throw std::invalid_argument("assignment covers " + std::to_string(assignment.size()) +
                                    " variables; formula has " + std::to_string(f.num_variables));
    const auto lit_true = [&](int lit) {
        return lit > 0 ? assignment[lit - 1] : !assignment[-lit - 1];
    };
    for (std::size_t i = 0; i < f.clauses.size(); ++i) {
        const auto& cl = f.clauses[i];
        if (!lit_true(cl[0]) && !lit_true(cl[1]) && !lit_true(cl[2]))
            throw std::invalid_argument("assignment does not satisfy clause " +
                                        std::to_string(i + 1));
    }

    std::unordered_map<std::string, int> by_label;
    by_label.reserve(inst.labels.size());
    for (int v = 0; v < static_cast<int>(inst.labels.size()); ++v)
        by_label.emplace(inst.labels[v], v);

    // One generator per clause: the v vertex of its first true literal. The
    // v side is deliberate — seeding the u side instead would let a clause
    // with two or more true literals ignite its hub z in round 1 (two true
    // u's are adjacent), pull the whole w row in by round 6, and fire a pair
    // vertex at 7 and the target at k-1. Seeding v keeps every clause on the
    // same clock no matter how many of its literals are true: hubs at 4,
    // w row within 6..7, pair vertices at exactly 8, target at exactly k.
    std::vector<int> witness;
    for (std::size_t i = 0; i < f.clauses.size(); ++i)
        for (int a = 0; a < 3; ++a)
            if (lit_true(f.clauses[i][a])) {
                witness.push_back(by_label.at(pos_label("v", static_cast<int>(i), a)));
                break;
            }
    for (const auto& g : inst.gadgets) {
        witness.push_back(g[1]);
        witness.push_back(g[2]);
    }
    std::sort(witness.begin(), witness.end());

    const HullTrace trace = hull(inst.graph, witness);
    if (static_cast<int>(trace.hull().size()) != inst.graph.n)
        throw std::logic_error("canonical witness failed to generate the whole graph");
    if (trace.converged_at != inst.k)
        throw std::logic_error("canonical witness percolates in " +
                               std::to_string(trace.converged_at) + " rounds; expected " +
                               std::to_string(inst.k));
    const auto& before = trace.layers[inst.k - 1];
    if (std::binary_search(before.begin(), before.end(), inst.target))
        throw std::logic_error("target vertex generated before round " + std::to_string(inst.k));
    return witness;
}

}  // namespace cyclecon
