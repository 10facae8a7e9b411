#include "cyclecon/cli.hpp"

#include <chrono>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"

#include "cyclecon/extp4.hpp"
#include "cyclecon/graph.hpp"
#include "cyclecon/interval.hpp"
#include "cyclecon/oracles.hpp"
#include "cyclecon/percolation.hpp"
#include "cyclecon/reductions.hpp"

namespace cyclecon {

namespace {

using nlohmann::json;

class Timer {
  public:
    double ms() const {
        return std::chrono::duration<double, std::milli>(clock::now() - start_).count();
    }

  private:
    using clock = std::chrono::steady_clock;
    clock::time_point start_ = clock::now();
};

// "1,2,5" -> {1,2,5}; "" -> {}. Throws std::runtime_error on junk.
std::vector<int> parse_id_list(const std::string& text) {
    std::vector<int> ids;
    if (text.empty()) return ids;
    std::stringstream in(text);
    std::string token;
    while (std::getline(in, token, ',')) {
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(token, &used);
        } catch (const std::exception&) {
            throw std::runtime_error("bad vertex id \"" + token + "\" in id list");
        }
        if (used != token.size())
            throw std::runtime_error("bad vertex id \"" + token + "\" in id list");
        ids.push_back(value);
    }
    return ids;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open \"" + path + "\"");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

json result_doc(const std::string& problem, int value, const std::vector<int>& witness,
                const std::string& algorithm, double elapsed_ms,
                const std::vector<std::vector<int>>* layers = nullptr) {
    json doc;
    doc["problem"] = problem;
    doc["value"] = value;
    doc["witness"] = witness;
    if (layers != nullptr) doc["layers"] = *layers;
    doc["algorithm"] = algorithm;
    doc["elapsed_ms"] = elapsed_ms;
    return doc;
}

void emit(std::ostream& out, const json& doc) { out << doc.dump(2) << "\n"; }

// Distinct refusal for the one case the tool cannot answer: the graph is
// too big for brute force and no polynomial route applies.
[[noreturn]] void oracle_cap_refusal(const Graph& g, const OracleOptions& opt,
                                     const std::string& why_no_polynomial) {
    throw std::runtime_error("oracle cap exceeded: the graph has " + std::to_string(g.n) +
                             " vertices, above the brute-force cap of " +
                             std::to_string(opt.max_n) + "; " + why_no_polynomial);
}

void write_labels_sidecar(const std::string& path, const ReductionInstance& inst) {
    json map = json::object();
    for (int v = 0; v < static_cast<int>(inst.labels.size()); ++v)
        map[std::to_string(v)] = inst.labels[v];
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write \"" + path + "\"");
    out << map.dump(2) << "\n";
}

// ---------------------------------------------------------------------------
// Subcommand bodies. Each returns the process exit code.
// ---------------------------------------------------------------------------

int cmd_hull(const std::string& graph_path, const std::string& set_text, std::ostream& out) {
    const Timer timer;
    const Graph g = load_edge_list_file(graph_path);
    const std::vector<int> seed = parse_id_list(set_text);
    const HullTrace trace = hull(g, seed);
    emit(out, result_doc("hull", trace.converged_at, trace.hull(), "interval-iteration",
                         timer.ms(), &trace.layers));
    return 0;
}

int cmd_con(const std::string& graph_path, bool force_oracle, std::ostream& out) {
    const Timer timer;
    const Graph g = load_edge_list_file(graph_path);

    int value = 0;
    std::vector<int> witness;
    std::string algorithm;
    std::optional<Decomposition> dec;
    if (!force_oracle && (dec = decompose(g))) {
        value = con_ext_p4_laden(g, *dec);
        witness = con_witness_ext_p4_laden(g, *dec);
        algorithm = "structured-decomposition";
    } else {
        const OracleOptions opt;
        if (g.n > opt.max_n)
            oracle_cap_refusal(g, opt,
                               force_oracle ? "drop --oracle to allow the polynomial route"
                                            : "and no structured decomposition applies");
        const OracleSetResult res = oracle_convexity_number(g, opt);
        value = res.value;
        witness = res.witness;
        algorithm = "oracle";
    }

    // Witness sanity before emitting: convex, proper, of the stated size.
    if (static_cast<int>(witness.size()) != value || !is_convex(g, witness) ||
        (g.n > 1 && static_cast<int>(witness.size()) == g.n))
        throw std::logic_error("convexity witness failed re-verification");
    emit(out, result_doc("con", value, witness, algorithm, timer.ms()));
    return 0;
}

int cmd_pn(const std::string& graph_path, bool force_oracle, std::ostream& out) {
    const Timer timer;
    const Graph g = load_edge_list_file(graph_path);

    int value = 0;
    std::vector<int> witness;
    std::string algorithm;
    if (!force_oracle && is_cactus(g).ok) {
        const PercolationResult res = pn_cactus(g);
        value = res.value;
        witness = res.witness;
        algorithm = "cactus-incidence-forest";
    } else {
        const OracleOptions opt;
        if (g.n > opt.max_n)
            oracle_cap_refusal(g, opt,
                               force_oracle ? "drop --oracle to allow the cactus route"
                                            : "and the graph is not a cactus");
        const OracleSetResult res = oracle_percolation_number(g, opt);
        value = res.value;
        witness = res.witness;
        algorithm = "oracle";
    }

    const HullTrace trace = hull(g, witness);
    if (static_cast<int>(trace.hull().size()) != g.n || trace.converged_at != value)
        throw std::logic_error("percolation witness failed re-verification");
    emit(out, result_doc("pn", value, witness, algorithm, timer.ms(), &trace.layers));
    return 0;
}

int cmd_pn_decide(const std::string& graph_path, int k, std::ostream& out) {
    const Timer timer;
    const Graph g = load_edge_list_file(graph_path);

    std::vector<int> witness;
    std::string algorithm;
    if (k == 0) {
        // The full vertex set is a hull set that takes zero rounds.
        witness.resize(g.n);
        for (int v = 0; v < g.n; ++v) witness[v] = v;
        algorithm = "trivial";
    } else if (k == 1) {
        // A hull set needing a round exists iff some vertex lies on a cycle;
        // dropping one such vertex from V leaves everything else in place
        // and regenerates it in one round.
        const BlockDecomposition bd = block_decomposition(g);
        int on = -1;
        for (int v = 0; v < g.n && on < 0; ++v)
            if (bd.on_cycle[v]) on = v;
        if (on < 0) {
            out << "no hull set with S != V (the graph is a forest)\n";
            return 1;
        }
        for (int v = 0; v < g.n; ++v)
            if (v != on) witness.push_back(v);
        algorithm = "cycle-vertex-removal";
    } else if (k == 2) {
        auto found = pn_at_least_2(g);
        if (!found) {
            out << "no hull set with I(S) != V\n";
            return 1;
        }
        witness = std::move(*found);
        algorithm = "two-round-structure";
    } else {
        throw std::runtime_error("pn-decide supports --k 0, 1 or 2");
    }

    const HullTrace trace = hull(g, witness);
    if (static_cast<int>(trace.hull().size()) != g.n || trace.converged_at < k)
        throw std::logic_error("decision witness failed re-verification");
    emit(out, result_doc("pn-decide", k, witness, algorithm, timer.ms(), &trace.layers));
    return 0;
}

int cmd_reduce_is(const std::string& graph_path, const std::string& labels_out,
                  std::ostream& out) {
    const Graph h = load_edge_list_file(graph_path);
    const ReductionInstance inst = build_thick_spider_instance(h);
    out << "# thick spider wrapper: convexity number = independence number of the head + 3\n";
    out << "# head (copy of the input) occupies vertices 6.." << inst.graph.n - 1 << "\n";
    write_edge_list(out, inst.graph);
    if (!labels_out.empty()) write_labels_sidecar(labels_out, inst);
    return 0;
}

int cmd_reduce_sat(const std::string& cnf_path, int k, const std::string& labels_out,
                   std::ostream& out) {
    const CnfFormula f = parse_dimacs_cnf(read_text_file(cnf_path));
    const ReductionInstance inst = build_percolation_instance(f, k);
    out << "# percolation instance: some hull set needs >= " << k
        << " rounds iff the formula is satisfiable\n";
    out << "# threshold k: " << k << "\n";
    out << "# target vertex: " << inst.target << " (label " << inst.labels[inst.target] << ")\n";
    write_edge_list(out, inst.graph);
    if (!labels_out.empty()) write_labels_sidecar(labels_out, inst);
    return 0;
}

int cmd_verify_witness(const std::string& graph_path, const std::string& set_text,
                       const std::string& claim, std::ostream& out) {
    const Timer timer;
    const Graph g = load_edge_list_file(graph_path);
    const std::vector<int> s = parse_id_list(set_text);

    bool ok = false;
    if (claim == "hull-set") {
        ok = is_hull_set(g, s);
    } else if (claim == "convex") {
        ok = is_convex(g, s);
    } else if (claim.rfind("pn-time=", 0) == 0) {
        const int t = std::stoi(claim.substr(8));
        const auto time = percolation_time_of_set(g, s);
        ok = time.has_value() && *time == t;
    } else if (claim.rfind("pn-time-at-least=", 0) == 0) {
        const int t = std::stoi(claim.substr(17));
        const auto time = percolation_time_of_set(g, s);
        ok = time.has_value() && *time >= t;
    } else {
        throw std::runtime_error(
            "unknown claim \"" + claim +
            "\"; expected hull-set, convex, pn-time=<t> or pn-time-at-least=<t>");
    }

    if (!ok) {
        out << "claim failed: " << claim << "\n";
        return 1;
    }
    emit(out, result_doc("verify-witness", 1, s, "direct-check", timer.ms()));
    return 0;
}

int cmd_gen(const std::string& family, std::uint64_t seed, int size, std::ostream& out) {
    Graph g;
    if (family == "cactus") {
        g = generate_random_cactus(seed, std::max(1, size));
    } else if (family == "extp4laden") {
        g = generate_random_ext_p4_laden(seed, std::max(1, size)).graph;
    } else {
        throw std::runtime_error("unknown family \"" + family +
                                 "\"; expected cactus or extp4laden");
    }
    out << "# family: " << family << ", seed: " << seed << ", size budget: " << size << "\n";
    write_edge_list(out, g);
    return 0;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"cycle convexity toolkit: interval hulls, convexity and percolation numbers, "
                 "hardness-instance generators"};
    app.require_subcommand(1);

    std::string graph_path, set_text, claim, labels_out, family;
    std::uint64_t seed = 1;
    int k = 0, size = 12;
    bool force_oracle = false;

    CLI::App* hull_cmd = app.add_subcommand("hull", "interval iteration trace of a seed set");
    hull_cmd->add_option("graph", graph_path, "edge-list file")->required();
    hull_cmd->add_option("--set", set_text, "comma-separated vertex ids")->required();

    CLI::App* con_cmd = app.add_subcommand("con", "convexity number and a witness set");
    con_cmd->add_option("graph", graph_path, "edge-list file")->required();
    con_cmd->add_flag("--oracle", force_oracle, "force the brute-force oracle");

    CLI::App* pn_cmd = app.add_subcommand("pn", "percolation number and a witness hull set");
    pn_cmd->add_option("graph", graph_path, "edge-list file")->required();
    pn_cmd->add_flag("--oracle", force_oracle, "force the brute-force oracle");

    CLI::App* decide_cmd =
        app.add_subcommand("pn-decide", "is there a hull set percolating >= k rounds?");
    decide_cmd->add_option("graph", graph_path, "edge-list file")->required();
    decide_cmd->add_option("--k", k, "threshold (0, 1 or 2)")->required();

    CLI::App* ris_cmd =
        app.add_subcommand("reduce-is", "wrap a graph into a thick spider instance");
    ris_cmd->add_option("graph", graph_path, "edge-list file (the head H)")->required();
    ris_cmd->add_option("--labels-out", labels_out, "write the label map JSON here");

    CLI::App* rsat_cmd =
        app.add_subcommand("reduce-sat", "build a percolation instance from a 3-CNF formula");
    rsat_cmd->add_option("cnf", graph_path, "DIMACS CNF file")->required();
    rsat_cmd->add_option("--k", k, "percolation threshold (>= 9)")->required();
    rsat_cmd->add_option("--labels-out", labels_out, "write the label map JSON here");

    CLI::App* verify_cmd = app.add_subcommand("verify-witness", "recheck an emitted witness");
    verify_cmd->add_option("graph", graph_path, "edge-list file")->required();
    verify_cmd->add_option("--set", set_text, "comma-separated vertex ids")->required();
    verify_cmd
        ->add_option("--claim", claim,
                     "hull-set | convex | pn-time=<t> | pn-time-at-least=<t>")
        ->required();

    CLI::App* gen_cmd = app.add_subcommand("gen", "sample a graph from a family");
    gen_cmd->add_option("--family", family, "cactus | extp4laden")->required();
    gen_cmd->add_option("--seed", seed, "generator seed");
    gen_cmd->add_option("--size", size, "vertex budget");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (hull_cmd->parsed()) return cmd_hull(graph_path, set_text, out);
        if (con_cmd->parsed()) return cmd_con(graph_path, force_oracle, out);
        if (pn_cmd->parsed()) return cmd_pn(graph_path, force_oracle, out);
        if (decide_cmd->parsed()) return cmd_pn_decide(graph_path, k, out);
        if (ris_cmd->parsed()) return cmd_reduce_is(graph_path, labels_out, out);
        if (rsat_cmd->parsed()) return cmd_reduce_sat(graph_path, k, labels_out, out);
        if (verify_cmd->parsed()) return cmd_verify_witness(graph_path, set_text, claim, out);
        if (gen_cmd->parsed()) return cmd_gen(family, seed, size, out);
        err << "error: no subcommand\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        // Bad input values (ids out of range, malformed formulas, ...).
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        // A failed internal re-verification — never a user mistake.
        err << "internal error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace cyclecon
