#pragma once

// Brute-force ground truth for small graphs. These enumerate subsets with a
// dedicated bitmask engine (independent of the production interval code, so
// cross-checks exercise two genuinely different implementations) and are the
// reference every polynomial algorithm in the library is tested against.
//
// All entry points take an OracleOptions cap and refuse graphs above it with
// an exception — silently mis-reporting on an oversized instance would poison
// every downstream comparison.

#include <optional>
#include <vector>

#include "cyclecon/graph.hpp"

namespace cyclecon {

struct OracleOptions {
    int max_n = 16;  // hard refusal above this
};

struct OracleSetResult {
    int value = 0;
    std::vector<int> witness;  // sorted
};

// Largest convex set different from V; 0 for n <= 1 (witness = empty set).
// Witness: the first set found scanning sizes n-1 downward, subsets of a
// given size in ascending bitmask order.
OracleSetResult oracle_convexity_number(const Graph& g, const OracleOptions& opt = {});

// Percolation number: the maximum, over all hull sets S, of the smallest t
// with I^t(S) = V. V itself is always a hull set (t = 0), so the maximum
// exists; it is >= 1 exactly when G has a cycle (drop one cycle vertex from
// V), hence pn = 0 iff G is a forest.
// Witness: the first hull set (ascending bitmask order) achieving the max.
OracleSetResult oracle_percolation_number(const Graph& g, const OracleOptions& opt = {});

// Independence number with witness (first maximum in ascending bitmask order).
OracleSetResult oracle_independence_number(const Graph& g, const OracleOptions& opt = {});

// Largest S with G[S] a forest (= rank / maximum convexly independent set,
// an equivalence the tests verify rather than assume).
OracleSetResult oracle_max_induced_forest(const Graph& g, const OracleOptions& opt = {});

// Decision helper used by acceptance checks: is there a hull set S with
// I^(k-1)(S) != V (i.e. pn >= k)? Returns a witness if so.
std::optional<std::vector<int>> oracle_pn_witness_at_least(const Graph& g, int k,
                                                           const OracleOptions& opt = {});

}  // namespace cyclecon
