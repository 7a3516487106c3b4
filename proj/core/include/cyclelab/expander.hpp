#pragma once

#include <optional>
#include <string>

#include "cyclelab/generators.hpp"
#include "cyclelab/graph.hpp"
#include "cyclelab/rational.hpp"
#include "cyclelab/rng.hpp"

namespace cyclelab {

struct ExpanderParams {
    Rational B;    // size cap for expanded sets
    Rational ell;  // expansion factor
};

struct ExpanderWitness {
    int side = 0;  // 0 = left, 1 = right
    VertexSet x;
    long long gamma_size = 0;  // |Gamma(X)| into the other side
};

struct ExpanderVerdict {
    bool holds = true;
    VerdictMode mode = VerdictMode::Exact;
    long long checked = 0;
    std::optional<ExpanderWitness> witness;
};

// (B,ell)-bipartite-expander: every X inside one side with 1 <= |X| <= B has
// |Gamma(X)| >= ell |X| on the other side. Exact mode enumerates all subsets
// up to size B (budget-guarded); sampled mode draws random subsets.
ExpanderVerdict check_bipartite_expander(const Graph& g, const VertexSet& v1, const VertexSet& v2,
                                         const ExpanderParams& params, VerdictMode mode,
                                         long long budget, RngStream& rng);

struct CleanupStep {
    int side = 0;
    VertexSet removed;
    long long gamma_size = 0;  // the violated expansion count at removal time
};

struct EpsPropertyWitness {
    VertexSet a1, a2;  // both of size in [eps*m, 2*eps*m], zero cross edges
};

struct CleanupTrace {
    bool success = false;
    std::vector<CleanupStep> steps;
    VertexSet u1, u2;                          // on success
    std::optional<EpsPropertyWitness> eps_witness;  // on failure
    ExpanderVerdict final_check;               // verification of the success pair
    std::string note;
};

// Iterative removal of low-expansion subsets of size <= eps*m, one at a time.
// Ends either with trimmed sides (|U_i| >= (1-eps)|V_i|) whose pair passes an
// (a*min(|V1|,|V2|), b)-bipartite-expander check, or with a concrete
// eps-property counterexample: two sets of size in [eps*m, 2*eps*m] with zero
// cross edges. Violator search is greedy (singletons, then sets grown by
// largest neighborhood overlap); when the greedy pass finds nothing and the
// final exact check still fails, the exact violator re-enters the loop.
CleanupTrace cleanup_to_expander(const Graph& g, const VertexSet& v1, const VertexSet& v2,
                                 Rational eps, Rational m, Rational a, Rational b,
                                 long long verify_budget = 200000);

struct CorollaryParams {
    ExpanderParams bipartite;  // B is a coefficient of x = min(|V1|,|V2|)
    ExpanderParams plain;
};

// Case 1: (6 eps x, 1/(8 eps) + 1)-bipartite, hence (12 eps x, 1/(16 eps))-plain.
// Case 2: (x/10, 9)-bipartite, hence (x/5, 4)-plain. Requires 0 < eps < 1/85.
CorollaryParams corollary_params(Rational eps, int which_case);

struct DfsPartition {
    VertexSet s_set, t_set;  // |S| = |T|, no S-T edges
    VertexSeq path;          // spans U = V \ (S u T)
};

// DFS snapshot partition: returns the first moment the unvisited and
// fully-explored buckets balance; the DFS stack at that moment is the path.
// Neighbor order is ascending vertex id unless a stream is supplied.
DfsPartition dfs_path_partition(const Graph& g, RngStream* rng = nullptr);

// Best DFS path over randomized restarts, with a second sweep from the
// deepest vertex found (exact on trees, heuristic elsewhere).
VertexSeq longest_path_greedy(const Graph& g, RngStream& rng, int restarts);

}  // namespace cyclelab
