#pragma once

#include <optional>
#include <string>
#include <variant>

#include "cyclelab/expander.hpp"
#include "cyclelab/graph.hpp"
#include "cyclelab/rational.hpp"
#include "cyclelab/rng.hpp"

namespace cyclelab {

struct TreeSpec {
    int r = 2;        // arity >= 1
    int h = 0;        // depth >= 0
    long long ell = 1;  // joining path length >= 1
};

struct RootedTree {
    int n = 0;
    int root = 0;
    std::vector<int> parent;                 // parent[root] = -1
    std::vector<std::vector<int>> children;
    int max_degree() const;
    std::vector<int> bfs_order() const;
};

// Two r-ary depth-h trees joined by a path of length ell between their roots.
struct TrhlTree {
    TreeSpec spec;
    RootedTree tree;            // rooted at root_a
    int root_a = 0, root_b = 0;
    std::vector<int> join_path;  // root_a .. root_b (ell+1 vertices)
    std::vector<int> leaves_a, leaves_b;  // depth-h leaves per copy (r^h each)
    std::vector<int> parity;     // bipartition class, parity[root_a] = 0
    int n() const { return tree.n; }
};

TrhlTree make_trhl(const TreeSpec& spec);

// Single r-ary depth-h tree with its depth-h leaf list and parity classes.
struct RhTree {
    RootedTree tree;
    std::vector<int> leaves;
    std::vector<int> parity;
};

RhTree make_rh_tree(int r, int h);

// Path between two vertices of a tree, via parent pointers.
VertexSeq tree_path(const RootedTree& t, int from, int to);

struct TreeEmbedding {
    std::vector<int> map;      // abstract vertex -> host vertex
    std::vector<int> side;     // 0 = left of the pair, 1 = right
};

struct EmbedFailure {
    std::string stage;
    std::string detail;
    int stuck_abstract = -1;
};

using EmbedOutcome = std::variant<TreeEmbedding, EmbedFailure>;

// Greedy BFS-order embedding into a bipartite pair, preferring host vertices
// with the most unused cross-neighbors, with bounded backtracking
// (budget in retreat steps; default 50 * |T|). `blocked` vertices are never
// used. The tree must have max degree <= max_degree_cap. Success output is
// verified before returning.
EmbedOutcome fp_embed_tree(const BipartitePair& pair, const RootedTree& tree, int root_host,
                           int max_degree_cap, RngStream* rng = nullptr,
                           long long backtrack_budget = -1,
                           const std::vector<char>* blocked = nullptr);

// Independent certificate check: injectivity, adjacency preservation, side
// alternation, and (for trhl shapes) exact leaf depth / leaf side.
bool verify_pair_embedding(const BipartitePair& pair, const RootedTree& tree,
                           const std::vector<int>& map, std::string* why = nullptr);

struct TrhlEmbedding {
    TrhlTree shape;
    std::vector<int> map;    // abstract -> host
    std::string mode;        // "corner" (reserved blocks) or "shared-region"
    std::vector<std::string> trace;
};

using TrhlOutcome = std::variant<TrhlEmbedding, EmbedFailure>;

// Small-tree route: cleans the pair to a case-1 expander and embeds
// T^(r,h)_ell with r = floor(1/(16 eps)) - 2, h minimal with r^h >= eps*m.
// Rejects eps with r < 2 ("arity < 2"). Needs 1 <= ell <= 2*eps*m.
TrhlOutcome embed_small_trhl(const Graph& g, const VertexSet& v1, const VertexSet& v2,
                             Rational eps, Rational m, long long ell, RngStream& rng);

// Large-tree route (r = 2, h minimal with 2^h >= eps*m, ell up to
// 2(1-48 eps)m): reserves four corner blocks of ceil(21 eps m), cleans each
// to a case-2 expander, finds a path of length ell-4+q in the middle blocks,
// scans the first/last q path vertices of the prescribed parity for corner
// attachments, embeds one T^(2,h) per corner and splices. If ell is even the
// parity/corner dispatch places all leaves in leaf_side (0 = v1, 1 = v2).
// When the reserved blocks are infeasible or fail, retries in shared-region
// mode: same pipeline with the corner trees embedded in the pair leftovers.
TrhlOutcome embed_large_trhl(const Graph& g, const VertexSet& v1, const VertexSet& v2,
                             Rational eps, Rational m, long long ell, int leaf_side,
                             RngStream& rng);

}  // namespace cyclelab
