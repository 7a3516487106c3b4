#include "cyclelab/regularity.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cyclelab {

ClusterPartition equipartition(int n, int k, RngStream& rng) {
    if (k < 1 || k > n) throw std::invalid_argument("equipartition: need 1 <= k <= n");
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    rng.shuffle(perm);
    std::vector<int> sizes(k, n / k);
    for (int i = 0; i < n % k; ++i) sizes[i]++;
    rng.shuffle(sizes);
    ClusterPartition pi;
    pi.n = n;
    pi.k = k;
    pi.assignment.assign(n, -1);
    pi.clusters.assign(k, {});
    int at = 0;
    for (int c = 0; c < k; ++c) {
        for (int i = 0; i < sizes[c]; ++i) {
            pi.assignment[perm[at]] = c;
            pi.clusters[c].push_back(perm[at]);
            ++at;
        }
        std::sort(pi.clusters[c].begin(), pi.clusters[c].end());
    }
    return pi;
}

Rational p_density(const Graph& g, const VertexSet& u, const VertexSet& w, Rational p) {
    if (u.empty() || w.empty()) throw std::invalid_argument("p_density: empty side");
    if (p.num <= 0) throw std::invalid_argument("p_density: p must be positive");
    long long e = count_pair_edges(g, u, w);
    return Rational(e) / (p * Rational(static_cast<long long>(u.size()) * static_cast<long long>(w.size())));
}

long long eps_threshold_size(Rational eps, Rational m) {
    long long s = ceil_ll(eps * m);
    return std::max<long long>(1, s);
}

namespace {

long long binom_capped(long long n, long long k, long long cap) {
    if (k < 0 || k > n) return 0;
    cap = std::min(cap, 4000000000000000LL);  // keep r*(n) inside int64
    k = std::min(k, n - k);
    long long r = 1;
    for (long long i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > cap) return cap + 1;
    }
    return r;
}

// advances `idx` to the next k-combination of [0, n); returns false after the last
bool next_combination(std::vector<int>& idx, int n) {
    int k = static_cast<int>(idx.size());
    for (int i = k - 1; i >= 0; --i) {
        if (idx[i] < n - k + i) {
            ++idx[i];
            for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

VertexSet pick_subset(const VertexSet& v, const std::vector<int>& idx) {
    VertexSet out;
    out.reserve(idx.size());
    for (int i : idx) out.push_back(v[i]);
    return out;
}

VertexSet random_subset(const VertexSet& v, long long s, RngStream& rng) {
    std::vector<int> pool(v);
    rng.shuffle(pool);
    pool.resize(static_cast<size_t>(s));
    std::sort(pool.begin(), pool.end());
    return pool;
}

}  // namespace

PairVerdict check_eps_property(const Graph& g, const VertexSet& v1, const VertexSet& v2,
                               Rational eps, Rational m, VerdictMode mode, long long budget,
                               RngStream& rng) {
    for (int v : v1)
        for (int w : v2)
            if (v == w) throw std::invalid_argument("check_eps_property: sides overlap");
    long long s = eps_threshold_size(eps, m);
    PairVerdict verdict;
    verdict.mode = mode;
    if (static_cast<long long>(v1.size()) < s || static_cast<long long>(v2.size()) < s) {
        // no qualifying subsets at all: the property holds vacuously
        return verdict;
    }

    std::vector<char> in_v2(g.n(), 0);
    for (int v : v2) in_v2[v] = 1;

    // returns true iff a witness was produced for this U1
    auto examine = [&](const VertexSet& u1) {
        std::vector<char> hit(g.n(), 0);
        for (int v : u1)
            for (int w : g.neighbors(v))
                if (in_v2[w]) hit[w] = 1;
        VertexSet free2;
        for (int w : v2)
            if (!hit[w]) {
                free2.push_back(w);
                if (static_cast<long long>(free2.size()) == s) break;
            }
        if (static_cast<long long>(free2.size()) < s) return false;
        PairWitness wit;
        wit.u1 = u1;
        wit.u2 = std::move(free2);
        wit.edges = count_pair_edges(g, wit.u1, wit.u2);  // 0 by construction, recounted anyway
        verdict.witness = std::move(wit);
        verdict.holds = false;
        return true;
    };

    if (mode == VerdictMode::Exact) {
        long long work = binom_capped(static_cast<long long>(v1.size()), s, budget) +
                         binom_capped(static_cast<long long>(v2.size()), s, budget);
        if (work > budget)
            throw std::invalid_argument("check_eps_property: exact enumeration exceeds budget");
        std::vector<int> idx(static_cast<size_t>(s));
        std::iota(idx.begin(), idx.end(), 0);
        do {
            ++verdict.checked;
            if (examine(pick_subset(v1, idx))) return verdict;
        } while (next_combination(idx, static_cast<int>(v1.size())));
        return verdict;
    }

    for (long long it = 0; it < budget; ++it) {
        ++verdict.checked;
        if (examine(random_subset(v1, s, rng))) return verdict;
    }
    return verdict;
}

PairVerdict check_eps_regular_pair(const Graph& g, const VertexSet& u, const VertexSet& w,
                                   Rational eps, Rational p, VerdictMode mode, long long budget,
                                   RngStream& rng) {
    if (u.empty() || w.empty()) throw std::invalid_argument("check_eps_regular_pair: empty side");
    if (p.num <= 0) throw std::invalid_argument("check_eps_regular_pair: p must be positive");
    PairVerdict verdict;
    verdict.mode = mode;
    long long su = std::max<long long>(1, ceil_ll(eps * Rational(static_cast<long long>(u.size()))));
    long long sw = std::max<long long>(1, ceil_ll(eps * Rational(static_cast<long long>(w.size()))));
    Rational base = p_density(g, u, w, p);

    auto deviation_exceeds = [&](const VertexSet& u2, const VertexSet& w2) {
        Rational d = p_density(g, u2, w2, p);
        Rational diff = d >= base ? d - base : base - d;
        if (diff <= eps) return false;
        PairWitness wit;
        wit.u1 = u2;
        wit.u2 = w2;
        wit.edges = count_pair_edges(g, u2, w2);
        verdict.witness = std::move(wit);
        verdict.holds = false;
        return true;
    };

    if (mode == VerdictMode::Exact) {
        // all qualifying sizes on both sides
        long long total = 0;
        for (long long a = su; a <= static_cast<long long>(u.size()); ++a)
            total += binom_capped(static_cast<long long>(u.size()), a, budget);
        long long total_w = 0;
        for (long long b = sw; b <= static_cast<long long>(w.size()); ++b)
            total_w += binom_capped(static_cast<long long>(w.size()), b, budget);
        if (total > budget || total_w > budget ||
            (total > 0 && total_w > budget / total))
            throw std::invalid_argument("check_eps_regular_pair: exact enumeration exceeds budget");
        for (long long a = su; a <= static_cast<long long>(u.size()); ++a) {
            std::vector<int> iu(static_cast<size_t>(a));
            std::iota(iu.begin(), iu.end(), 0);
            do {
                VertexSet u2 = pick_subset(u, iu);
                for (long long b = sw; b <= static_cast<long long>(w.size()); ++b) {
                    std::vector<int> iw(static_cast<size_t>(b));
                    std::iota(iw.begin(), iw.end(), 0);
                    do {
                        ++verdict.checked;
                        if (deviation_exceeds(u2, pick_subset(w, iw))) return verdict;
                    } while (next_combination(iw, static_cast<int>(w.size())));
                }
            } while (next_combination(iu, static_cast<int>(u.size())));
        }
        return verdict;
    }

    for (long long it = 0; it < budget; ++it) {
        long long a = su + rng.below_ll(static_cast<long long>(u.size()) - su + 1);
        long long b = sw + rng.below_ll(static_cast<long long>(w.size()) - sw + 1);
        ++verdict.checked;
        if (deviation_exceeds(random_subset(u, a, rng), random_subset(w, b, rng))) return verdict;
    }
    return verdict;
}

EpsilonGraph build_epsilon_graph(const Graph& g, const ClusterPartition& pi, Rational eps,
                                 VerdictMode mode, long long budget, RngStream& rng) {
    EpsilonGraph eg;
    eg.eps = eps;
    eg.mode = mode == VerdictMode::Exact ? EpsGraphMode::Exact : EpsGraphMode::Sampled;
    Rational m(pi.n, pi.k);
    std::vector<Edge> edges;
    for (int i = 0; i < pi.k; ++i)
        for (int j = i + 1; j < pi.k; ++j) {
            auto v = check_eps_property(g, pi.cluster(i), pi.cluster(j), eps, m, mode, budget, rng);
            if (v.holds) {
                edges.emplace_back(i, j);
                ++eg.pairs_positive;
            }
        }
    eg.s = Graph::from_edges(pi.k, std::move(edges));
    return eg;
}

ReducedGraph build_reduced_graph(const Graph& g, const ClusterPartition& pi, Rational rho,
                                 Rational eps, Rational p, VerdictMode mode, long long budget,
                                 RngStream& rng) {
    ReducedGraph rg;
    rg.rho = rho;
    rg.eps = eps;
    rg.p = p;
    std::vector<Edge> edges;
    for (int i = 0; i < pi.k; ++i)
        for (int j = i + 1; j < pi.k; ++j) {
            const auto& vi = pi.cluster(i);
            const auto& vj = pi.cluster(j);
            if (p_density(g, vi, vj, p) < rho) continue;
            auto v = check_eps_regular_pair(g, vi, vj, eps, p, mode, budget, rng);
            if (v.holds) edges.emplace_back(i, j);
        }
    rg.r = Graph::from_edges(pi.k, std::move(edges));
    return rg;
}

EpsilonGraph epsilon_graph_from_reduced(const ReducedGraph& rg) {
    if (!(rg.eps < rg.rho && rg.rho < Rational(1, 2)))
        throw std::invalid_argument("epsilon_graph_from_reduced: requires eps < rho < 1/2");
    EpsilonGraph eg;
    eg.eps = rg.eps;
    eg.mode = EpsGraphMode::DerivedFromR;
    eg.s = rg.r;
    eg.pairs_positive = rg.r.m();
    return eg;
}

bool reduced_edge_bound_check(const ReducedGraph& rg, Rational x, Rational tau) {
    Rational lhs(rg.r.m());
    Rational rhs = (x + tau) * Rational(binom2(rg.r.n()));
    return lhs >= rhs;
}

}  // namespace cyclelab
