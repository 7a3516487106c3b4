#include "cyclelab/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace cyclelab {

Graph sample_gnp(int n, double p, RngStream& rng) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("sample_gnp: p out of [0,1]");
    std::vector<Edge> edges;
    long long total = binom2(n);
    if (p >= 1.0) {
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
        return Graph::from_edges(n, std::move(edges));
    }
    if (p > 0.0) {
        double log1mp = std::log1p(-p);
        long long i = -1;
        for (;;) {
            double u = rng.unit();
            // skip ~ Geometric(p): floor(log(1-u)/log(1-p)) pairs are absent
            double skip = std::floor(std::log1p(-u) / log1mp);
            if (skip > static_cast<double>(total)) break;
            i += 1 + static_cast<long long>(skip);
            if (i >= total) break;
            // invert the linearized index: i = C(u,2)-style row-major over u<v
            int a = static_cast<int>((1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(i))) / 2.0);
            while (binom2(a) > i) --a;
            while (binom2(a + 1) <= i) ++a;
            int b = static_cast<int>(i - binom2(a));
            edges.emplace_back(b, a);
        }
    }
    return Graph::from_edges(n, std::move(edges));
}

Graph keep_each_edge(const Graph& g, double p, RngStream& rng) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("keep_each_edge: p out of [0,1]");
    std::vector<Edge> kept;
    for (const auto& e : g.edges())
        if (rng.unit() < p) kept.push_back(e);
    return Graph::from_edges(g.n(), std::move(kept));
}

namespace {

Rational uniformity_bound(const Rational& p, const Rational& eta, size_t u, size_t w) {
    return (Rational(1) + eta) * p * Rational(static_cast<long long>(u) * static_cast<long long>(w));
}

// e <= (1+eta) p |U||W|, exactly.
bool uniformity_ok(long long e, const Rational& p, const Rational& eta, size_t u, size_t w) {
    return Rational(e) <= uniformity_bound(p, eta, u, w);
}

std::vector<int> mask_to_set(unsigned mask) {
    std::vector<int> s;
    for (int v = 0; mask; ++v, mask >>= 1)
        if (mask & 1) s.push_back(v);
    return s;
}

}  // namespace

UniformityVerdict check_upper_uniform(const Graph& g, Rational p, Rational eta, VerdictMode mode,
                                      long long budget, RngStream& rng) {
    int n = g.n();
    long long smin = ceil_ll(eta * Rational(n));
    if (smin < 1) smin = 1;
    UniformityVerdict verdict;
    verdict.mode = mode;

    auto record_witness = [&](VertexSet u, VertexSet w) {
        long long e = count_pair_edges(g, u, w);
        if (uniformity_ok(e, p, eta, u.size(), w.size())) return false;
        UniformityWitness wit;
        wit.bound = uniformity_bound(p, eta, u.size(), w.size());
        wit.u = std::move(u);
        wit.w = std::move(w);
        wit.edges = e;
        verdict.witness = std::move(wit);
        verdict.holds = false;
        return true;
    };

    if (mode == VerdictMode::Exact) {
        if (n > 24) throw std::invalid_argument("check_upper_uniform: exact mode needs n <= 24");
        // count qualifying unordered pairs first and enforce the budget
        long long count = 0;
        for (unsigned um = 1; um < (1u << n); ++um) {
            int usz = __builtin_popcount(um);
            if (usz < smin) continue;
            unsigned rest = (~um) & ((1u << n) - 1);
            // enumerate W inside the complement; to count unordered pairs once,
            // require min(U) < min(W)
            int mu = __builtin_ctz(um);
            for (unsigned wm = rest; wm; wm = (wm - 1) & rest) {
                if (__builtin_popcount(wm) < smin) continue;
                if (__builtin_ctz(wm) < mu) continue;
                ++count;
                if (count > budget)
                    throw std::invalid_argument("check_upper_uniform: exact enumeration exceeds budget");
            }
        }
        for (unsigned um = 1; um < (1u << n); ++um) {
            int usz = __builtin_popcount(um);
            if (usz < smin) continue;
            unsigned rest = (~um) & ((1u << n) - 1);
            int mu = __builtin_ctz(um);
            for (unsigned wm = rest; wm; wm = (wm - 1) & rest) {
                if (__builtin_popcount(wm) < smin) continue;
                if (__builtin_ctz(wm) < mu) continue;
                ++verdict.pairs_checked;
                if (record_witness(mask_to_set(um), mask_to_set(wm))) return verdict;
            }
        }
        return verdict;
    }

    // sampled: |U|,|W| uniform in [smin, n/2], vertex sets uniform
    long long smax = std::max<long long>(smin, n / 2);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (long long it = 0; it < budget; ++it) {
        long long su = smin + rng.below_ll(smax - smin + 1);
        long long sw = smin + rng.below_ll(smax - smin + 1);
        if (su + sw > n) {
            --it;  // resample; at tiny n some size pairs are infeasible
            continue;
        }
        rng.shuffle(perm);
        VertexSet u(perm.begin(), perm.begin() + su);
        VertexSet w(perm.begin() + su, perm.begin() + su + sw);
        ++verdict.pairs_checked;
        if (record_witness(std::move(u), std::move(w))) return verdict;
    }
    return verdict;
}

std::optional<int> regular_degree(const Graph& g) {
    if (g.n() == 0) return 0;
    int d = g.degree(0);
    for (int v = 1; v < g.n(); ++v)
        if (g.degree(v) != d) return std::nullopt;
    return d;
}

namespace {

// Power iteration for the top eigenvalue of (shift*I + sign*A) restricted to
// the complement of the all-ones vector. Returns the Rayleigh quotient.
double shifted_power_iteration(const Graph& g, double shift, double sign, int iter_cap, double tol) {
    int n = g.n();
    std::vector<double> x(n), y(n);
    // deterministic start vector, orthogonal to all-ones
    for (int i = 0; i < n; ++i) x[i] = (i % 2 == 0 ? 1.0 : -1.0) + 1.0 / (i + 2.0);
    auto deflate = [&](std::vector<double>& v) {
        double mean = 0;
        for (double a : v) mean += a;
        mean /= n;
        for (double& a : v) a -= mean;
    };
    auto normalize = [&](std::vector<double>& v) {
        double s = 0;
        for (double a : v) s += a * a;
        s = std::sqrt(s);
        if (s > 0)
            for (double& a : v) a /= s;
        return s;
    };
    deflate(x);
    normalize(x);
    double prev = 0;
    for (int it = 0; it < iter_cap; ++it) {
        for (int v = 0; v < n; ++v) {
            double acc = shift * x[v];
            for (int w : g.neighbors(v)) acc += sign * x[w];
            y[v] = acc;
        }
        deflate(y);
        double rayleigh = 0;
        for (int v = 0; v < n; ++v) rayleigh += x[v] * y[v];
        normalize(y);
        std::swap(x, y);
        if (it > 4 && std::abs(rayleigh - prev) <= tol * std::max(1.0, std::abs(rayleigh))) return rayleigh;
        prev = rayleigh;
    }
    return prev;
}

}  // namespace

double estimate_lambda(const Graph& g) {
    auto deg = regular_degree(g);
    if (!deg) throw std::invalid_argument("estimate_lambda: graph is not regular");
    int n = g.n();
    if (n <= 1) return 0.0;
    double d = *deg;
    // spectrum of (dI + A) is d + lambda_i >= 0: converges to d + lambda_max
    double hi = shifted_power_iteration(g, d, +1.0, 10000, 1e-9) - d;
    // spectrum of (dI - A) is d - lambda_i >= 0: converges to d - lambda_min
    double lo = d - shifted_power_iteration(g, d, -1.0, 10000, 1e-9);
    return std::max(std::abs(hi), std::abs(lo));
}

MixingVerdict mixing_lemma_check(const Graph& g, int d, double lambda, long long budget,
                                 RngStream& rng) {
    auto deg = regular_degree(g);
    if (!deg || *deg != d) throw std::invalid_argument("mixing_lemma_check: graph is not d-regular");
    int n = g.n();
    MixingVerdict verdict;

    auto check_pair = [&](VertexSet a, VertexSet b) {
        long long e = count_pair_edges(g, a, b);
        double expected = static_cast<double>(d) / n * static_cast<double>(a.size()) * b.size();
        double slack = lambda * std::sqrt(static_cast<double>(a.size()) * b.size());
        ++verdict.pairs_checked;
        if (std::abs(e - expected) <= slack) return false;
        MixingWitness wit;
        wit.a = std::move(a);
        wit.b = std::move(b);
        wit.edges = e;
        wit.expected = expected;
        wit.slack = slack;
        verdict.witness = std::move(wit);
        verdict.holds = false;
        return true;
    };

    if (n <= 16) {
        verdict.mode = VerdictMode::Exact;
        for (unsigned am = 1; am < (1u << n); ++am) {
            unsigned rest = (~am) & ((1u << n) - 1);
            int ma = __builtin_ctz(am);
            for (unsigned bm = rest; bm; bm = (bm - 1) & rest) {
                if (__builtin_ctz(bm) < ma) continue;
                if (check_pair(mask_to_set(am), mask_to_set(bm))) return verdict;
            }
        }
        return verdict;
    }

    verdict.mode = VerdictMode::Sampled;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (long long it = 0; it < budget; ++it) {
        long long sa = 1 + rng.below_ll(n / 2);
        long long sb = 1 + rng.below_ll(n / 2);
        rng.shuffle(perm);
        VertexSet a(perm.begin(), perm.begin() + sa);
        VertexSet b(perm.begin() + sa, perm.begin() + sa + sb);
        if (check_pair(std::move(a), std::move(b))) return verdict;
    }
    return verdict;
}

Graph random_regular(int n, int d, RngStream& rng, int restart_cap) {
    if (d < 0 || d >= n) throw std::invalid_argument("random_regular: need 0 <= d < n");
    if ((static_cast<long long>(n) * d) % 2 != 0)
        throw std::invalid_argument("random_regular: n*d must be even");
    if (d == 0) return Graph::from_edges(n, {});

    for (int attempt = 0; attempt < restart_cap; ++attempt) {
        std::vector<int> stubs;
        stubs.reserve(static_cast<size_t>(n) * d);
        for (int v = 0; v < n; ++v)
            for (int i = 0; i < d; ++i) stubs.push_back(v);
        std::vector<Edge> edges;
        std::vector<std::vector<int>> nbr(n);
        auto connected = [&](int u, int v) {
            const auto& a = nbr[u].size() <= nbr[v].size() ? nbr[u] : nbr[v];
            int t = nbr[u].size() <= nbr[v].size() ? v : u;
            return std::find(a.begin(), a.end(), t) != a.end();
        };
        bool dead = false;
        while (!stubs.empty() && !dead) {
            rng.shuffle(stubs);
            std::vector<int> leftover;
            bool progress = false;
            for (size_t i = 0; i + 1 < stubs.size(); i += 2) {
                int u = stubs[i], v = stubs[i + 1];
                if (u == v || connected(u, v)) {
                    leftover.push_back(u);
                    leftover.push_back(v);
                    continue;
                }
                edges.emplace_back(u, v);
                nbr[u].push_back(v);
                nbr[v].push_back(u);
                progress = true;
            }
            if (stubs.size() % 2 == 1) leftover.push_back(stubs.back());
            if (!progress && !leftover.empty()) dead = true;
            stubs = std::move(leftover);
        }
        if (!dead && stubs.empty()) return Graph::from_edges(n, std::move(edges));
    }
    throw std::runtime_error("random_regular: restart cap exceeded, retry with a new stream");
}

}  // namespace cyclelab
