#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace cyclelab {

inline long long binom2(long long x) { return x < 2 ? 0 : x * (x - 1) / 2; }

using VertexSeq = std::vector<int>;
using VertexSet = std::vector<int>;
using Edge = std::pair<int, int>;

// Immutable simple undirected graph on dense vertex ids 0..n-1.
// Neighbor lists are kept sorted so adjacency queries are logarithmic and
// iteration order is deterministic. "Deleting" edges means building a new
// Graph; certificates hold references that stay valid.
class Graph {
public:
    Graph() = default;

    // Edges may arrive in any order/orientation; duplicates and self-loops
    // are rejected.
    static Graph from_edges(int n, std::vector<Edge> edges);

    // Text format: line 1 "n m", then m lines "u v" with 0 <= u < v < n.
    static Graph load(std::istream& in);
    static Graph load_file(const std::string& path);
    void save(std::ostream& out) const;
    void save_file(const std::string& path) const;

    int n() const { return n_; }
    long long m() const { return static_cast<long long>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    int min_degree() const;

    bool has_edge(int u, int v) const;
    void check_vertex(int v) const;

    bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

private:
    int n_ = 0;
    std::vector<Edge> edges_;             // sorted, each with first < second
    std::vector<std::vector<int>> adj_;   // sorted neighbor lists
};

struct CycleCheck {
    bool ok = false;
    long long length = 0;
    std::string reason;   // first violated condition, empty when ok
    int fail_index = -1;  // index in seq where the violation was detected
};

struct PathCheck {
    bool ok = false;
    long long length = 0;  // edges
    std::string reason;
    int fail_index = -1;
};

// Accepts iff seq has t distinct in-range vertices, consecutive pairs
// (cyclically) are edges, and |seq| == t.
CycleCheck verify_cycle(const Graph& g, const VertexSeq& seq, long long t);

// Accepts iff vertices are distinct and consecutive pairs are edges;
// a single vertex is a path of length 0.
PathCheck verify_path(const Graph& g, const VertexSeq& seq);

// External neighborhood: neighbors of X excluding X itself.
VertexSet neighborhood(const Graph& g, const VertexSet& x);

struct InducedSubgraph {
    Graph graph;
    std::vector<int> to_host;  // new id -> original id (sorted)
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& u);

// Number of edges with one endpoint in U and one in W; U and W must be disjoint.
long long count_pair_edges(const Graph& g, const VertexSet& u, const VertexSet& w);

// View of the bipartite subgraph induced by (left, right) inside a host
// graph. Edge queries and neighbor iteration are restricted to left x right.
class BipartitePair {
public:
    BipartitePair(const Graph& host, VertexSet left, VertexSet right);

    const Graph& host() const { return *host_; }
    const VertexSet& left() const { return left_; }
    const VertexSet& right() const { return right_; }
    // 0 = left, 1 = right, -1 = not in the pair
    int side_of(int v) const { return v < static_cast<int>(side_.size()) ? side_[v] : -1; }

    // Neighbors of v on the opposite side of the pair, sorted.
    const std::vector<int>& cross_neighbors(int v) const;
    long long cross_edges() const;

private:
    const Graph* host_;
    VertexSet left_, right_;
    std::vector<int> side_;
    mutable std::vector<std::vector<int>> cross_;  // lazily filled per vertex
    mutable std::vector<char> cross_ready_;
};

}  // namespace cyclelab
