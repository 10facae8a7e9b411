#pragma once

// Command-line surface of the toolkit. One invocation, one task:
//
//   hull <graph> --set 1,2,5        interval iteration trace of a seed set
//   con <graph> [--oracle]          convexity number + witness set
//   pn <graph> [--oracle]           percolation number + witness hull set
//   pn-decide <graph> --k {0,1,2}   is there a hull set percolating >= k rounds?
//   reduce-is <graph>               wrap a graph into a thick spider instance
//   reduce-sat <cnf> --k K          build a percolation instance from 3-CNF
//   verify-witness <graph> --set ... --claim ...   recheck an emitted witness
//   gen --family cactus|extp4laden --seed S --size N   sample a graph
//
// Results are printed as JSON documents with the fixed field set
//   {problem, value, witness: [ids], layers?: [[ids]], algorithm, elapsed_ms}
// except the generators (reduce-is, reduce-sat, gen), which print the graph
// in the edge-list text format (with explanatory '#' comments) and can write
// a JSON label-map sidecar via --labels-out.
//
// `con` and `pn` pick the polynomial algorithm when the instance class is
// recognized (structured decomposition, cactus incidence forest), fall back
// to the brute-force oracle below its size cap, and refuse otherwise with a
// distinct message; --oracle forces the brute-force path.

#include <iosfwd>
#include <string>
#include <vector>

namespace cyclecon {

// Runs one invocation. `args` is argv without the program name. Result
// documents go to `out`, diagnostics to `err`. Returns the exit code:
//   0  computed / decision positive / claim verified
//   1  decision negative / claim failed
//   2  input error (unknown flags, malformed files, oracle cap exceeded)
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace cyclecon
