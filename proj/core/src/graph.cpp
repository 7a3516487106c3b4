#include "cyclelab/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace cyclelab {

Graph Graph::from_edges(int n, std::vector<Edge> edges) {
    if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
    Graph g;
    g.n_ = n;
    for (auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("Graph: vertex id out of range");
        if (u == v) throw std::invalid_argument("Graph: self-loop");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("Graph: parallel edge");
    g.edges_ = std::move(edges);
    g.adj_.assign(n, {});
    for (auto [u, v] : g.edges_) {
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (auto& a : g.adj_) std::sort(a.begin(), a.end());
    return g;
}

Graph Graph::load(std::istream& in) {
    long long n, m;
    if (!(in >> n >> m)) throw std::runtime_error("graph load: missing header");
    if (n < 0 || m < 0) throw std::runtime_error("graph load: bad header");
    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(m));
    for (long long i = 0; i < m; ++i) {
        long long u, v;
        if (!(in >> u >> v)) throw std::runtime_error("graph load: truncated edge list");
        if (u < 0 || v < 0 || u >= n || v >= n || u >= v)
            throw std::runtime_error("graph load: bad edge line " + std::to_string(i + 1));
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    auto sorted = edges;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::runtime_error("graph load: duplicate edge");
    return from_edges(static_cast<int>(n), std::move(edges));
}

Graph Graph::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return load(in);
}

void Graph::save(std::ostream& out) const {
    out << n_ << ' ' << edges_.size() << '\n';
    for (auto [u, v] : edges_) out << u << ' ' << v << '\n';
}

void Graph::save_file(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path);
    save(out);
}

int Graph::min_degree() const {
    int d = n_ == 0 ? 0 : degree(0);
    for (int v = 1; v < n_; ++v) d = std::min(d, degree(v));
    return d;
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return false;
    const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
    int target = adj_[u].size() <= adj_[v].size() ? v : u;
    return std::binary_search(a.begin(), a.end(), target);
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("vertex id out of range");
}

CycleCheck verify_cycle(const Graph& g, const VertexSeq& seq, long long t) {
    CycleCheck c;
    if (static_cast<long long>(seq.size()) != t) {
        c.reason = "length mismatch: sequence has " + std::to_string(seq.size()) +
                   " vertices, expected " + std::to_string(t);
        return c;
    }
    if (t < 3) {
        c.reason = "cycle length must be at least 3";
        return c;
    }
    std::vector<char> seen(g.n(), 0);
    for (size_t i = 0; i < seq.size(); ++i) {
        int v = seq[i];
        if (v < 0 || v >= g.n()) {
            c.reason = "vertex out of range";
            c.fail_index = static_cast<int>(i);
            return c;
        }
        if (seen[v]) {
            c.reason = "repeated vertex " + std::to_string(v);
            c.fail_index = static_cast<int>(i);
            return c;
        }
        seen[v] = 1;
    }
    for (size_t i = 0; i < seq.size(); ++i) {
        int u = seq[i], v = seq[(i + 1) % seq.size()];
        if (!g.has_edge(u, v)) {
            c.reason = "missing edge " + std::to_string(u) + "-" + std::to_string(v);
            c.fail_index = static_cast<int>(i);
            return c;
        }
    }
    c.ok = true;
    c.length = t;
    return c;
}

PathCheck verify_path(const Graph& g, const VertexSeq& seq) {
    PathCheck c;
    if (seq.empty()) {
        c.reason = "empty sequence";
        return c;
    }
    std::vector<char> seen(g.n(), 0);
    for (size_t i = 0; i < seq.size(); ++i) {
        int v = seq[i];
        if (v < 0 || v >= g.n()) {
            c.reason = "vertex out of range";
            c.fail_index = static_cast<int>(i);
            return c;
        }
        if (seen[v]) {
            c.reason = "repeated vertex " + std::to_string(v);
            c.fail_index = static_cast<int>(i);
            return c;
        }
        seen[v] = 1;
    }
    for (size_t i = 0; i + 1 < seq.size(); ++i) {
        if (!g.has_edge(seq[i], seq[i + 1])) {
            c.reason = "missing edge " + std::to_string(seq[i]) + "-" + std::to_string(seq[i + 1]);
            c.fail_index = static_cast<int>(i);
            return c;
        }
    }
    c.ok = true;
    c.length = static_cast<long long>(seq.size()) - 1;
    return c;
}

VertexSet neighborhood(const Graph& g, const VertexSet& x) {
    std::vector<char> in_x(g.n(), 0), out(g.n(), 0);
    for (int v : x) {
        g.check_vertex(v);
        in_x[v] = 1;
    }
    for (int v : x)
        for (int w : g.neighbors(v))
            if (!in_x[w]) out[w] = 1;
    VertexSet res;
    for (int v = 0; v < g.n(); ++v)
        if (out[v]) res.push_back(v);
    return res;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& u) {
    std::vector<int> to_host(u);
    std::sort(to_host.begin(), to_host.end());
    to_host.erase(std::unique(to_host.begin(), to_host.end()), to_host.end());
    std::vector<int> to_new(g.n(), -1);
    for (size_t i = 0; i < to_host.size(); ++i) {
        g.check_vertex(to_host[i]);
        to_new[to_host[i]] = static_cast<int>(i);
    }
    std::vector<Edge> edges;
    for (auto [a, b] : g.edges())
        if (to_new[a] >= 0 && to_new[b] >= 0)
            edges.emplace_back(to_new[a], to_new[b]);
    InducedSubgraph res;
    res.graph = Graph::from_edges(static_cast<int>(to_host.size()), std::move(edges));
    res.to_host = std::move(to_host);
    return res;
}

long long count_pair_edges(const Graph& g, const VertexSet& u, const VertexSet& w) {
    std::vector<char> in_u(g.n(), 0), in_w(g.n(), 0);
    for (int v : u) {
        g.check_vertex(v);
        in_u[v] = 1;
    }
    for (int v : w) {
        g.check_vertex(v);
        if (in_u[v]) throw std::invalid_argument("count_pair_edges: sets overlap at " + std::to_string(v));
        in_w[v] = 1;
    }
    long long cnt = 0;
    for (int v : u)
        for (int x : g.neighbors(v))
            if (in_w[x]) ++cnt;
    return cnt;
}

BipartitePair::BipartitePair(const Graph& host, VertexSet left, VertexSet right)
    : host_(&host), left_(std::move(left)), right_(std::move(right)) {
    side_.assign(host.n(), -1);
    for (int v : left_) {
        host.check_vertex(v);
        side_[v] = 0;
    }
    for (int v : right_) {
        host.check_vertex(v);
        if (side_[v] == 0) throw std::invalid_argument("BipartitePair: sides overlap");
        side_[v] = 1;
    }
    cross_.resize(host.n());
    cross_ready_.assign(host.n(), 0);
}

const std::vector<int>& BipartitePair::cross_neighbors(int v) const {
    host_->check_vertex(v);
    if (!cross_ready_[v]) {
        int s = side_[v];
        std::vector<int> out;
        if (s == 0 || s == 1) {
            for (int w : host_->neighbors(v))
                if (side_[w] == 1 - s) out.push_back(w);
        }
        cross_[v] = std::move(out);
        cross_ready_[v] = 1;
    }
    return cross_[v];
}

long long BipartitePair::cross_edges() const {
    long long cnt = 0;
    for (int v : left_) cnt += static_cast<long long>(cross_neighbors(v).size());
    return cnt;
}

}  // namespace cyclelab
