#include "cyclelab/extremal.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cyclelab {

namespace {

long long two_clique_count(long long t, long long n) {
    return binom2(t - 1) + binom2(n - t + 2) + 1;
}

}  // namespace

ExtremalValue g_function(const ExtremalQuery& q) {
    long long n = q.n, t = q.t;
    if (n < 3 || t < 3 || t > n) throw std::invalid_argument("g_function: need 3 <= t <= n");
    ExtremalValue v;
    v.den = binom2(n);
    if (t % 2 == 1) {
        v.num = (2 * t >= n + 3) ? two_clique_count(t, n) : n * n / 4 + 1;
    } else {
        const Rational& gamma = q.gamma;
        if (gamma <= Rational(0) || gamma >= Rational(1))
            throw std::invalid_argument("g_function: gamma out of (0,1)");
        if (2 * t >= n + 3) {
            v.num = two_clique_count(t, n);
        } else if (Rational(t) >= gamma * Rational(n)) {
            v.num = n * (t - 1) / 2 + 1;
        } else {
            v.num = 0;
        }
    }
    v.absolute = v.num;
    return v;
}

ExtremalValue woodall_threshold(long long t, long long n) {
    if (n < 3 || t < 3 || t > n) throw std::invalid_argument("woodall_threshold: need 3 <= t <= n");
    ExtremalValue v;
    v.den = binom2(n);
    v.num = (2 * t >= n + 3) ? two_clique_count(t, n) : n * n / 4 + 1;
    v.absolute = v.num;
    return v;
}

long long eg_path_bound(long long t, long long n) {
    if (t < 1) throw std::invalid_argument("eg_path_bound: t >= 1");
    return (t - 1) * n / 2;
}

long long eg_cycle_bound(long long t, long long n) {
    if (t < 3) throw std::invalid_argument("eg_cycle_bound: t >= 3");
    return (n - 1) * (t - 1) / 2;
}

Graph build_woodall_graph(int n, int t) {
    if (!(2 * t >= n + 3 && t <= n)) throw std::invalid_argument("build_woodall_graph: need (n+3)/2 <= t <= n");
    // Clique A on {0..t-2}, clique B on {t-2..n-1}; vertex t-2 is shared.
    std::vector<Edge> edges;
    for (int u = 0; u < t - 1; ++u)
        for (int v = u + 1; v < t - 1; ++v) edges.emplace_back(u, v);
    for (int u = t - 2; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph::from_edges(n, std::move(edges));
}

Graph build_bipartite_extremal(int n) {
    if (n < 2) throw std::invalid_argument("build_bipartite_extremal: n >= 2");
    int a = n / 2;
    std::vector<Edge> edges;
    for (int u = 0; u < a; ++u)
        for (int v = a; v < n; ++v) edges.emplace_back(u, v);
    return Graph::from_edges(n, std::move(edges));
}

Graph build_clique_blocks(int n, int t) {
    if (t < 1 || t > n) throw std::invalid_argument("build_clique_blocks: need 1 <= t <= n");
    std::vector<Edge> edges;
    int blocks = n / t;
    for (int b = 0; b < blocks; ++b)
        for (int u = b * t; u < (b + 1) * t; ++u)
            for (int v = u + 1; v < (b + 1) * t; ++v) edges.emplace_back(u, v);
    for (int u = blocks * t; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph::from_edges(n, std::move(edges));
}

OverlayResult overlay_lower_bound(const Graph& g, int t, int trials, RngStream rng) {
    int n = g.n();
    if (n < 3 || t < 3 || t > n) throw std::invalid_argument("overlay_lower_bound: need 3 <= t <= n");
    if (trials < 1) throw std::invalid_argument("overlay_lower_bound: trials >= 1");
    Graph wt;
    if (2 * t >= n + 3) {
        wt = build_woodall_graph(n, t);
    } else if (t % 2 == 1) {
        wt = build_bipartite_extremal(n);
    } else {
        throw std::invalid_argument("overlay_lower_bound: no extremal construction for even t < (n+3)/2");
    }

    OverlayResult res;
    res.bound_num = wt.m();  // = ex(n, C_t) for the covered regimes
    res.bound_den = binom2(n);

    std::vector<int> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 0);
    long long best = -1;
    std::vector<int> best_sigma;
    for (int trial = 0; trial < trials; ++trial) {
        rng.shuffle(sigma);
        long long kept = 0;
        for (auto [a, b] : wt.edges())
            if (g.has_edge(sigma[a], sigma[b])) ++kept;
        if (kept > best) {
            best = kept;
            best_sigma = sigma;
            res.best_trial = trial;
        }
    }
    std::vector<Edge> kept_edges;
    for (auto [a, b] : wt.edges())
        if (g.has_edge(best_sigma[a], best_sigma[b]))
            kept_edges.emplace_back(best_sigma[a], best_sigma[b]);
    res.subgraph = Graph::from_edges(n, std::move(kept_edges));
    res.kept = best;
    // kept >= (ex(n,C_t)/C(n,2)) * e(G), compared exactly
    res.bound_met =
        static_cast<__int128>(res.kept) * res.bound_den >= static_cast<__int128>(res.bound_num) * g.m();
    return res;
}

}  // namespace cyclelab
