#pragma once

#include <set>

#include "cyclelab/graph.hpp"

namespace cyclelab {

struct CycleSpectrum {
    std::set<int> present;   // lengths l in [3, n] with a cycle of length l
    int longest_path = 0;    // edges
    int girth() const { return present.empty() ? 0 : *present.begin(); }
    int longest_cycle() const { return present.empty() ? 0 : *present.rbegin(); }
    bool operator==(const CycleSpectrum& o) const {
        return present == o.present && longest_path == o.longest_path;
    }
};

// Exact spectrum via DP over (subset, endpoint) per canonical start vertex.
// Hard cap n <= 14 (2^14 * 14 states per start).
CycleSpectrum cycle_spectrum_exact(const Graph& g);

// Independent enumerator: recursive DFS with canonical-start pruning.
// Cross-check oracle, capped at n <= 12.
CycleSpectrum cycle_spectrum_dfs(const Graph& g);

bool has_cycle_of_length(const Graph& g, int t);
int longest_cycle_exact(const Graph& g);

// Recovers an explicit cycle of length t, if one exists (n <= 14).
bool find_cycle_exact(const Graph& g, int t, VertexSeq& out);

struct ExCheck {
    long long edges = 0;
    long long stated = 0;    // the formula's edge count for the construction
    bool edges_match = false;
    bool ct_free = false;    // no forbidden cycle per the regime
};

// Certifies the extremal constructions at small n: the construction for
// (n, t) has its stated edge count and the oracle confirms freeness
// (no cycle >= t in the two-clique regime; no odd cycle in the bipartite
// regime). Upper bounds on ex(n, C_t) are out of scope.
ExCheck ex_check_small(int n, int t);

}  // namespace cyclelab
