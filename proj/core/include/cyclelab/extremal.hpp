#pragma once

#include <optional>

#include "cyclelab/graph.hpp"
#include "cyclelab/rational.hpp"
#include "cyclelab/rng.hpp"

namespace cyclelab {

struct ExtremalQuery {
    long long n = 0;
    long long t = 0;
    Rational gamma{1, 20};  // only consulted for even t
};

// A fraction of C(n,2), kept exact. `absolute` is the displayed integer edge
// count (numerator over C(n,2)).
struct ExtremalValue {
    long long num = 0;
    long long den = 1;  // always C(n,2)
    long long absolute = 0;
    Rational value() const { return Rational(num, den); }
};

// g^gamma(t,n): odd t uses g_o, even t uses g_e^gamma. Three-branch even
// case with thresholds t >= (n+3)/2 and t < gamma*n; two-branch odd case.
ExtremalValue g_function(const ExtremalQuery& q);

// w(t,n): two-clique threshold for t >= (n+3)/2, bipartite bound below;
// equals g_o(t,n) for odd t.
ExtremalValue woodall_threshold(long long t, long long n);

// More than this many edges forces a path of length >= t: floor((t-1)n/2).
long long eg_path_bound(long long t, long long n);

// More than this many edges forces a cycle of length >= t: floor((n-1)(t-1)/2).
long long eg_cycle_bound(long long t, long long n);

// Two cliques of orders t-1 and n-t+2 sharing exactly one vertex; has
// C(t-1,2)+C(n-t+2,2) edges and no cycle of length >= t. Requires
// (n+3)/2 <= t <= n.
Graph build_woodall_graph(int n, int t);

// Complete bipartite K_{floor(n/2),ceil(n/2)}: floor(n^2/4) edges, no odd cycle.
Graph build_bipartite_extremal(int n);

// floor(n/t) disjoint K_t plus a clique on the remainder; no path of length t.
Graph build_clique_blocks(int n, int t);

struct OverlayResult {
    Graph subgraph;       // G intersected with the best extremal placement
    long long kept = 0;   // edges of the intersection
    bool bound_met = false;  // kept * C(n,2) >= ex(n,C_t) * e(G)
    long long bound_num = 0, bound_den = 1;  // the target fraction ex/C(n,2)
    int best_trial = -1;
};

// Random placements of the extremal example W_t; returns the best
// intersection over `trials` placements. The intersection is C_t-free by
// construction; the averaging argument guarantees the bound in expectation,
// so bound_met reports whether this run achieved it.
OverlayResult overlay_lower_bound(const Graph& g, int t, int trials, RngStream rng);

}  // namespace cyclelab
