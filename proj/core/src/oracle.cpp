#include "cyclelab/oracle.hpp"

#include <bit>
#include <stdexcept>

#include "cyclelab/extremal.hpp"

namespace cyclelab {

namespace {

constexpr int kDpCap = 14;
constexpr int kDfsCap = 12;

std::vector<unsigned> adjacency_masks(const Graph& g) {
    std::vector<unsigned> adj(g.n(), 0);
    for (auto [u, v] : g.edges()) {
        adj[u] |= 1u << v;
        adj[v] |= 1u << u;
    }
    return adj;
}

}  // namespace

CycleSpectrum cycle_spectrum_exact(const Graph& g) {
    int n = g.n();
    if (n > kDpCap) throw std::invalid_argument("cycle_spectrum_exact: n > 14");
    CycleSpectrum spec;
    if (n == 0) return spec;
    auto adj = adjacency_masks(g);

    // dp[mask] = bitmask of endpoints v such that some path starting at s
    // spans exactly `mask` and ends at v; masks are restricted to vertices
    // >= s so every cycle is found once, at its minimum vertex.
    for (int s = 0; s < n; ++s) {
        unsigned universe = 0;
        for (int v = s; v < n; ++v) universe |= 1u << v;
        int bits = n - s;
        std::vector<unsigned> dp(1u << bits, 0);
        auto idx = [&](unsigned mask) { return mask >> s; };
        dp[idx(1u << s)] = 1u << s;
        for (unsigned rel = 1; rel < (1u << bits); ++rel) {
            unsigned mask = rel << s;
            if (!(mask & (1u << s))) continue;
            unsigned ends = dp[rel];
            if (!ends) continue;
            int len = std::popcount(mask);
            // close a cycle back to s
            if (len >= 3) {
                unsigned closers = ends & adj[s] & ~(1u << s);
                if (closers) spec.present.insert(len);
            }
            if (len - 1 > spec.longest_path) spec.longest_path = len - 1;
            unsigned cand = ends;
            while (cand) {
                int v = std::countr_zero(cand);
                cand &= cand - 1;
                unsigned ext = adj[v] & universe & ~mask;
                while (ext) {
                    int u = std::countr_zero(ext);
                    ext &= ext - 1;
                    dp[idx(mask | (1u << u))] |= 1u << u;
                }
            }
        }
    }
    // The per-start DP above restricts paths to vertices >= s, which is
    // complete for cycles but not for longest path; rerun without the
    // restriction for paths.
    {
        std::vector<unsigned> dp(1u << n, 0);
        for (int v = 0; v < n; ++v) dp[1u << v] = 1u << v;
        for (unsigned mask = 1; mask < (1u << n); ++mask) {
            unsigned ends = dp[mask];
            if (!ends) continue;
            int len = std::popcount(mask);
            if (len - 1 > spec.longest_path) spec.longest_path = len - 1;
            unsigned cand = ends;
            while (cand) {
                int v = std::countr_zero(cand);
                cand &= cand - 1;
                unsigned ext = adj[v] & ~mask;
                while (ext) {
                    int u = std::countr_zero(ext);
                    ext &= ext - 1;
                    dp[mask | (1u << u)] |= 1u << u;
                }
            }
        }
    }
    return spec;
}

namespace {

struct DfsEnv {
    const std::vector<unsigned>* adj;
    int start;
    unsigned visited;
    CycleSpectrum* spec;
};

void dfs_enumerate(DfsEnv& env, int v, int depth) {
    // depth = number of vertices on the current path
    if (depth - 1 > env.spec->longest_path) env.spec->longest_path = depth - 1;
    if (depth >= 3 && ((*env.adj)[v] >> env.start & 1u)) env.spec->present.insert(depth);
    unsigned ext = (*env.adj)[v] & ~env.visited;
    while (ext) {
        int u = std::countr_zero(ext);
        ext &= ext - 1;
        if (u < env.start) continue;  // canonical start pruning (cycles only)
        env.visited |= 1u << u;
        dfs_enumerate(env, u, depth + 1);
        env.visited &= ~(1u << u);
    }
}

// Unrestricted path DFS for the longest-path part of the DFS oracle.
void dfs_longest(const std::vector<unsigned>& adj, int v, unsigned visited, int depth, int& best) {
    if (depth - 1 > best) best = depth - 1;
    unsigned ext = adj[v] & ~visited;
    while (ext) {
        int u = std::countr_zero(ext);
        ext &= ext - 1;
        dfs_longest(adj, u, visited | (1u << u), depth + 1, best);
    }
}

}  // namespace

CycleSpectrum cycle_spectrum_dfs(const Graph& g) {
    int n = g.n();
    if (n > kDfsCap) throw std::invalid_argument("cycle_spectrum_dfs: n > 12");
    CycleSpectrum spec;
    if (n == 0) return spec;
    auto adj = adjacency_masks(g);
    for (int s = 0; s < n; ++s) {
        DfsEnv env{&adj, s, 1u << s, &spec};
        dfs_enumerate(env, s, 1);
    }
    int best = 0;
    for (int s = 0; s < n; ++s) dfs_longest(adj, s, 1u << s, 1, best);
    spec.longest_path = best;
    return spec;
}

bool has_cycle_of_length(const Graph& g, int t) {
    return cycle_spectrum_exact(g).present.count(t) > 0;
}

int longest_cycle_exact(const Graph& g) { return cycle_spectrum_exact(g).longest_cycle(); }

namespace {

bool find_cycle_dfs(const std::vector<unsigned>& adj, int start, int v, unsigned visited,
                    int depth, int t, VertexSeq& path) {
    if (depth == t) return (adj[v] >> start & 1u) != 0;
    unsigned ext = adj[v] & ~visited;
    while (ext) {
        int u = std::countr_zero(ext);
        ext &= ext - 1;
        if (u < start) continue;
        path.push_back(u);
        if (find_cycle_dfs(adj, start, u, visited | (1u << u), depth + 1, t, path)) return true;
        path.pop_back();
    }
    return false;
}

}  // namespace

bool find_cycle_exact(const Graph& g, int t, VertexSeq& out) {
    if (g.n() > kDpCap) throw std::invalid_argument("find_cycle_exact: n > 14");
    if (t < 3 || t > g.n()) return false;
    if (!has_cycle_of_length(g, t)) return false;
    auto adj = adjacency_masks(g);
    for (int s = 0; s < g.n(); ++s) {
        VertexSeq path{s};
        if (find_cycle_dfs(adj, s, s, 1u << s, 1, t, path)) {
            out = path;
            return true;
        }
    }
    return false;
}

ExCheck ex_check_small(int n, int t) {
    if (n > kDpCap) throw std::invalid_argument("ex_check_small: n > 14");
    ExCheck res;
    if (2 * t >= n + 3) {
        Graph g = build_woodall_graph(n, t);
        res.edges = g.m();
        res.stated = binom2(t - 1) + binom2(n - t + 2);
        res.edges_match = res.edges == res.stated;
        res.ct_free = cycle_spectrum_exact(g).longest_cycle() < t;
    } else if (t % 2 == 1) {
        Graph g = build_bipartite_extremal(n);
        res.edges = g.m();
        res.stated = static_cast<long long>(n) * n / 4;
        res.edges_match = res.edges == res.stated;
        auto spec = cycle_spectrum_exact(g);
        res.ct_free = true;
        for (int l : spec.present)
            if (l % 2 == 1) res.ct_free = false;
    } else {
        throw std::invalid_argument("ex_check_small: no construction for short even cycles");
    }
    return res;
}

}  // namespace cyclelab
