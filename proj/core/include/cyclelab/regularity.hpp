#pragma once

#include <optional>

#include "cyclelab/generators.hpp"
#include "cyclelab/graph.hpp"
#include "cyclelab/rational.hpp"
#include "cyclelab/rng.hpp"

namespace cyclelab {

// Near-equipartition of 0..n-1 into k clusters; sizes differ by at most 1.
struct ClusterPartition {
    int n = 0;
    int k = 0;
    std::vector<int> assignment;              // vertex -> cluster
    std::vector<std::vector<int>> clusters;   // cluster -> sorted vertices
    const std::vector<int>& cluster(int i) const { return clusters[i]; }
};

ClusterPartition equipartition(int n, int k, RngStream& rng);

// p-density d_{G,p}(U,W) = e(U,W) / (p |U| |W|), exact.
Rational p_density(const Graph& g, const VertexSet& u, const VertexSet& w, Rational p);

struct PairWitness {
    VertexSet u1, u2;
    long long edges = 0;
};

struct PairVerdict {
    bool holds = true;
    VerdictMode mode = VerdictMode::Exact;
    long long checked = 0;
    std::optional<PairWitness> witness;
};

// eps-property: every U1 <= V1, U2 <= V2 with |Ui| >= eps*m span an edge.
// Exact mode enumerates subsets of V1 at the threshold size only (supersets
// of edge-spanning pairs span edges, so this is complete) and tests the
// other side via the complement of the joint neighborhood. Sampled mode
// draws `budget` random threshold-size pairs. A failure witness is a pair of
// threshold-size sets with exactly zero cross edges.
PairVerdict check_eps_property(const Graph& g, const VertexSet& v1, const VertexSet& v2,
                               Rational eps, Rational m, VerdictMode mode, long long budget,
                               RngStream& rng);

// (eps,p)-regularity: |d(U,W) - d(U',W')| <= eps over all qualifying
// sub-pairs. Exact over every qualifying subset pair (tiny sides only);
// sampled otherwise. Witness deviations are recomputed exactly.
PairVerdict check_eps_regular_pair(const Graph& g, const VertexSet& u, const VertexSet& w,
                                   Rational eps, Rational p, VerdictMode mode, long long budget,
                                   RngStream& rng);

enum class EpsGraphMode { Exact, Sampled, DerivedFromR };

struct EpsilonGraph {
    Graph s;  // on cluster indices [k]
    Rational eps;
    EpsGraphMode mode = EpsGraphMode::Sampled;
    long long pairs_positive = 0;
};

struct ReducedGraph {
    Graph r;  // on cluster indices [k]
    Rational rho, eps, p;
};

EpsilonGraph build_epsilon_graph(const Graph& g, const ClusterPartition& pi, Rational eps,
                                 VerdictMode mode, long long budget, RngStream& rng);

ReducedGraph build_reduced_graph(const Graph& g, const ClusterPartition& pi, Rational rho,
                                 Rational eps, Rational p, VerdictMode mode, long long budget,
                                 RngStream& rng);

// S >= R without re-checking: a regular pair with p-density >= rho has the
// eps-property when eps < rho < 1/2.
EpsilonGraph epsilon_graph_from_reduced(const ReducedGraph& rg);

// e(R) >= (x + tau) * C(k,2), exactly.
bool reduced_edge_bound_check(const ReducedGraph& rg, Rational x, Rational tau);

// ceil(eps * m) but at least 1: the minimum qualifying subset size.
long long eps_threshold_size(Rational eps, Rational m);

}  // namespace cyclelab
