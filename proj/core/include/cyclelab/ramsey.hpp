#pragma once

#include <optional>
#include <string>
#include <variant>

#include "cyclelab/graph.hpp"
#include "cyclelab/rng.hpp"

namespace cyclelab {

struct EdgeColoring {
    int r = 1;
    std::vector<int> colors;  // parallel to g.edges()
};

EdgeColoring color_random(const Graph& g, int r, RngStream& rng);
Graph color_class(const Graph& g, const EdgeColoring& coloring, int color);

struct BipartiteResult {
    bool bipartite = false;
    std::vector<int> coloring;  // 2-coloring when bipartite (-1 on isolated)
    VertexSeq odd_cycle;        // verified odd cycle otherwise
};

BipartiteResult is_bipartite(const Graph& g);

// Exact shortest odd cycle via parity BFS (bipartite double cover); empty
// sequence if the graph is bipartite.
VertexSeq shortest_odd_cycle(const Graph& g);

struct DisjointPathsResult {
    bool found = false;
    std::vector<VertexSeq> paths;  // `count` pairwise vertex-disjoint A-B paths
    VertexSet cut;                 // else a vertex cut of size < count
};

// Menger via unit-vertex-capacity max-flow: either `count` pairwise
// vertex-disjoint paths from A to B, or a separating cut smaller than count.
DisjointPathsResult disjoint_paths(const Graph& g, const VertexSet& a, const VertexSet& b,
                                   int count);

struct BlockCutTree {
    std::vector<VertexSet> blocks;  // 2-connected blocks incl. bridges/isolated vertices
    VertexSet cut_vertices;
    // bipartite incidence: block index -> cut vertex ids (forest)
    std::vector<std::vector<int>> block_cuts;
    long long total_block_size() const;
    bool incidence_is_forest() const;
};

BlockCutTree block_cut_tree(const Graph& g);

struct DiameterCheck {
    int diameter = 0;
    int bound = 0;  // ceil(3k/(delta+1)) - 1
    bool within_bound = false;
};

DiameterCheck diameter_check(const Graph& g);

struct LongOddCycleResult {
    VertexSeq best;  // the longest verified odd cycle found
    std::vector<std::string> stages;
    VertexSeq c0, c1, c2;  // per-stage cycles (c2 may be even)
};

// Three-step construction: shortest odd cycle, a mid-length odd cycle grown
// from one of its edges (path + short return + parity fix along C0), then a
// long cycle in the remainder joined back through C1 by two disjoint paths
// with the parity chosen along C1. Throws if g is bipartite.
LongOddCycleResult long_odd_cycle(const Graph& g, double delta_prime, RngStream& rng);

struct MonoOddResult {
    bool found = false;
    int color = -1;
    VertexSeq cycle;
    long long bound_num = 0, bound_den = 1;  // k / (r * 2^(r+4))
    bool meets_bound = false;
    std::string note;  // e.g. "all color classes bipartite"
    std::vector<std::string> trace;
};

// Picks the most bipartite-far color class (greedy max-cut deficiency as the
// farness estimate; non-bipartiteness itself is exact), extracts the farthest
// block of its block-cut tree, and runs the three-step construction inside.
MonoOddResult monochromatic_odd_cycle(const Graph& g, const EdgeColoring& coloring, double eps,
                                      RngStream& rng);

}  // namespace cyclelab
