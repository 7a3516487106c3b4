#include "cyclelab/stitcher.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "cyclelab/extremal.hpp"

namespace cyclelab {

namespace {

constexpr int kMaxK = 20;

// stitching machinery runs at the tree-regime eps even when the S-graph was
// built with a larger verdict eps; 1/172 keeps the split-cluster route
// (which doubles eps) inside the 1/85 window as well
Rational clamp_eps(Rational eps) {
    Rational cap(1, 172);
    return eps < cap ? eps : cap;
}

int min_h(Rational target, int r) {
    int h = 0;
    Rational cap(1);
    while (cap < target) {
        cap = cap * Rational(r);
        ++h;
        if (h > 60) throw std::invalid_argument("min_h: overflow");
    }
    return h;
}

long long small_tree_arity(Rational eps) {
    return floor_ll(Rational(1) / (Rational(16) * eps)) - 2;
}

}  // namespace

SGraphIndex::SGraphIndex(const Graph& s) : s_(&s) {
    int k = s.n();
    if (k > kMaxK) throw std::invalid_argument("SGraphIndex: k > 20");
    if (k == 0) return;
    std::vector<unsigned> adj(k, 0);
    for (auto [u, v] : s.edges()) {
        adj[u] |= 1u << v;
        adj[v] |= 1u << u;
    }

    // longest path: dp over all masks, any start
    std::vector<unsigned> dp(1u << k, 0);
    for (int v = 0; v < k; ++v) dp[1u << v] = 1u << v;
    unsigned best_mask = 1u;
    int best_end = 0;
    for (unsigned mask = 1; mask < (1u << k); ++mask) {
        unsigned ends = dp[mask];
        if (!ends) continue;
        if (std::popcount(mask) > std::popcount(best_mask)) {
            best_mask = mask;
            best_end = std::countr_zero(ends);
        }
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
    longest_len_ = std::popcount(best_mask) - 1;
    // reconstruct by peeling endpoints
    {
        VertexSeq rev;
        unsigned mask = best_mask;
        int v = best_end;
        rev.push_back(v);
        while (std::popcount(mask) > 1) {
            unsigned prev_mask = mask & ~(1u << v);
            unsigned cands = dp[prev_mask] & adj[v];
            int u = std::countr_zero(cands);
            mask = prev_mask;
            v = u;
            rev.push_back(v);
        }
        std::reverse(rev.begin(), rev.end());
        longest_path_ = rev;
    }

    // cycle lengths: per canonical start
    for (int st = 0; st < k; ++st) {
        int bits = k - st;
        std::vector<unsigned> dps(1u << bits, 0);
        auto idx = [&](unsigned mask) { return mask >> st; };
        dps[idx(1u << st)] = 1u << st;
        for (unsigned rel = 1; rel < (1u << bits); ++rel) {
            unsigned mask = rel << st;
            if (!(mask & (1u << st))) continue;
            unsigned ends = dps[rel];
            if (!ends) continue;
            int len = std::popcount(mask);
            if (len >= 3 && (ends & adj[st] & ~(1u << st))) cycle_lengths_.insert(len);
            unsigned cand = ends;
            while (cand) {
                int v = std::countr_zero(cand);
                cand &= cand - 1;
                // only vertices >= the canonical start extend the path
                unsigned ext = adj[v] & ~mask & (~0u << st);
                while (ext) {
                    int u = std::countr_zero(ext);
                    ext &= ext - 1;
                    dps[idx(mask | (1u << u))] |= 1u << u;
                }
            }
        }
    }
}

VertexSeq SGraphIndex::cycle_of_length(int b) const {
    const Graph& s = *s_;
    int k = s.n();
    if (b < 3 || b > k || !cycle_lengths_.count(b)) return {};
    std::vector<unsigned> adj(k, 0);
    for (auto [u, v] : s.edges()) {
        adj[u] |= 1u << v;
        adj[v] |= 1u << u;
    }
    for (int st = 0; st < k; ++st) {
        int bits = k - st;
        std::vector<unsigned> dps(1u << bits, 0);
        auto idx = [&](unsigned mask) { return mask >> st; };
        dps[idx(1u << st)] = 1u << st;
        for (unsigned rel = 1; rel < (1u << bits); ++rel) {
            unsigned mask = rel << st;
            unsigned ends = dps[rel];
            if (!ends) continue;
            unsigned cand = ends;
            while (cand) {
                int v = std::countr_zero(cand);
                cand &= cand - 1;
                unsigned ext = adj[v] & ~mask & (~0u << st);
                while (ext) {
                    int u = std::countr_zero(ext);
                    ext &= ext - 1;
                    dps[idx(mask | (1u << u))] |= 1u << u;
                }
            }
        }
        // search for a closable mask of size b containing st
        for (unsigned rel = 1; rel < (1u << bits); ++rel) {
            unsigned mask = rel << st;
            if (std::popcount(mask) != b) continue;
            unsigned closers = dps[rel] & adj[st] & ~(1u << st);
            if (!closers) continue;
            // reconstruct path st -> v
            int v = std::countr_zero(closers);
            VertexSeq rev{v};
            unsigned cur = mask;
            while (std::popcount(cur) > 1) {
                unsigned prev_mask = cur & ~(1u << v);
                unsigned cands = dps[idx(prev_mask)] & adj[v];
                v = std::countr_zero(cands);
                cur = prev_mask;
                rev.push_back(v);
            }
            std::reverse(rev.begin(), rev.end());
            return rev;
        }
    }
    return {};
}

long long plan_total(const StitchPlan& plan) {
    long long total = 0;
    for (const auto& step : plan.order) {
        const TreeJob& job = plan.jobs[static_cast<size_t>(step.job)];
        total += job.spec.ell + 2LL * job.spec.h;
    }
    total += static_cast<long long>(plan.order.size());  // one edge after each step
    if (plan.odd_vertex_close) total += 1;               // v_b contributes one extra edge
    return total;
}

namespace {

void validate_ell(long long ell, long long lo, const Rational& hi, const char* what) {
    if (ell < lo || Rational(ell) > hi)
        throw std::invalid_argument(std::string(what) + " out of range [" + std::to_string(lo) +
                                    ", " + hi.str() + "]: got " + std::to_string(ell));
}

}  // namespace

StitchPlan plan_even_cycle(const std::vector<int>& s_path, long long t, Rational eps, Rational m,
                           int k) {
    if (t < 4 || t % 2 != 0) throw std::invalid_argument("plan_even_cycle: t must be even and >= 4");
    int b = static_cast<int>(s_path.size()) - 1;
    if (b < 1 || b % 2 != 1) throw std::invalid_argument("plan_even_cycle: path length b must be odd");
    Rational ex = clamp_eps(eps);
    Rational em = ex * m;
    Rational big_cap = Rational(2) * (Rational(1) - Rational(48) * ex) * m;

    StitchPlan plan;
    plan.t = t;
    plan.b = b;
    plan.item1 = true;
    plan.cluster_seq = s_path;

    long long r_small = small_tree_arity(ex);
    if (Rational(t) <= Rational(2) * em && r_small >= 2) {
        plan.regime = "A-small-t";
        plan.r = static_cast<int>(r_small);
        plan.h = min_h(em, plan.r);
        long long ell = t - 2LL * plan.h - 1;
        validate_ell(ell, 1, Rational(2) * em, "A: ell");
        plan.jobs.push_back(TreeJob{{s_path[0], -1}, {s_path[1], -1},
                                    TreeSpec{plan.r, plan.h, ell}, -1});
        plan.order = {{0, 0}};
    } else if (b == 1) {
        plan.regime = "B-single-pair";
        plan.r = 2;
        plan.h = min_h(em, 2);
        long long ell = t - 1 - 2LL * plan.h;
        validate_ell(ell, 1, big_cap, "B: ell");
        plan.jobs.push_back(TreeJob{{s_path[0], -1}, {s_path[1], -1}, TreeSpec{2, plan.h, ell}, -1});
        plan.order = {{0, 0}};
    } else if (b == 3) {
        plan.regime = "C-two-pairs";
        plan.r = 2;
        plan.h = min_h(em, 2);
        long long L = t - 4LL * plan.h - 2;
        if (L < 4) throw std::invalid_argument("plan_even_cycle: t too small for the b=3 regime");
        long long l1 = L / 2, l3 = L / 2;
        if (l1 % 2 != 0) {
            l1 += 1;
            l3 -= 1;
        }
        validate_ell(l1, 2, big_cap, "C: ell1");
        validate_ell(l3, 2, big_cap, "C: ell3");
        plan.jobs.push_back(
            TreeJob{{s_path[0], -1}, {s_path[1], -1}, TreeSpec{2, plan.h, l1}, 1});
        plan.jobs.push_back(
            TreeJob{{s_path[2], -1}, {s_path[3], -1}, TreeSpec{2, plan.h, l3}, 0});
        plan.order = {{0, 0}, {1, 1}};
    } else {
        plan.regime = "D-split-chain";
        plan.r = 2;
        plan.h = min_h(em, 2);
        // split-cluster route doubles eps; stay within the tree regime
        if (Rational(2) * ex >= Rational(1, 85))
            throw std::invalid_argument("plan_even_cycle: eps too large for split clusters");
        Rational half_m = m / Rational(2) - Rational(1);
        Rational half_cap = Rational(2) * (Rational(1) - Rational(48) * (em / half_m)) * half_m;
        long long l0 =
            floor_odd(Rational(t - b + 1) / Rational(b + 1)) - 2LL * plan.h;
        validate_ell(l0, 1, half_cap, "D: ell0");
        long long lstar = (l0 + 2LL * plan.h) * (b - 3) / 2 + (b - 5) / 2 - 2LL * plan.h;
        long long ends = t - 2 * lstar - 8LL * plan.h - 4;
        if (ends < 4 || ends % 2 != 0)
            throw std::invalid_argument("plan_even_cycle: endpoint trees infeasible at this t");
        long long l1 = ends / 2, lb = ends / 2;
        if (l1 % 2 != 0) {
            l1 += 1;
            lb -= 1;
        }
        validate_ell(l1, 2, big_cap, "D: ell1");
        validate_ell(lb, 2, big_cap, "D: ellb");

        // job 0: (V1, V2) with leaves in V2; then the U-chain and U'-chain over
        // split interior clusters; last job: (V_b, V_{b+1}) with leaves in V_b
        plan.jobs.push_back(
            TreeJob{{s_path[0], -1}, {s_path[1], -1}, TreeSpec{2, plan.h, l1}, 1});
        int chain_pairs = (b - 3) / 2;  // interior tree count per chain
        std::vector<int> u_jobs, up_jobs;
        for (int i = 2; i <= (b - 1) / 2; ++i) {
            int ca = s_path[static_cast<size_t>(2 * i - 2)];
            int cb = s_path[static_cast<size_t>(2 * i - 1)];
            plan.jobs.push_back(TreeJob{{ca, 0}, {cb, 0}, TreeSpec{2, plan.h, l0}, -1});
            u_jobs.push_back(static_cast<int>(plan.jobs.size()) - 1);
            plan.jobs.push_back(TreeJob{{ca, 1}, {cb, 1}, TreeSpec{2, plan.h, l0}, -1});
            up_jobs.push_back(static_cast<int>(plan.jobs.size()) - 1);
        }
        plan.jobs.push_back(TreeJob{{s_path[static_cast<size_t>(b - 1)], -1},
                                    {s_path[static_cast<size_t>(b)], -1},
                                    TreeSpec{2, plan.h, lb}, 0});
        int end1 = static_cast<int>(plan.jobs.size()) - 1;

        plan.order.push_back({0, 0});  // end0: enter A, exit B
        for (int j : up_jobs) plan.order.push_back({j, 0});
        plan.order.push_back({end1, 1});  // enter copy B, exit copy A
        for (int i = chain_pairs - 1; i >= 0; --i) plan.order.push_back({u_jobs[static_cast<size_t>(i)], 1});
    }
    plan.planned_total = plan_total(plan);
    if (plan.planned_total != t)
        throw std::logic_error("plan_even_cycle: bookkeeping does not sum to t");
    return plan;
}

StitchPlan plan_odd_cycle(const std::vector<int>& s_cycle, long long t, Rational eps, Rational m,
                          int k) {
    if (t < 3 || t % 2 != 1) throw std::invalid_argument("plan_odd_cycle: t must be odd and >= 3");
    int b = static_cast<int>(s_cycle.size());
    if (b < 3 || b % 2 != 1) throw std::invalid_argument("plan_odd_cycle: cycle length b must be odd");
    Rational ex = clamp_eps(eps);
    Rational em = ex * m;

    StitchPlan plan;
    plan.t = t;
    plan.b = b;
    plan.item1 = false;
    plan.regime = "odd-chain";
    plan.cluster_seq = s_cycle;

    long long r_small = small_tree_arity(ex);
    Rational cap;
    if (Rational(t) <= Rational(2) * em && r_small >= 2) {
        plan.r = static_cast<int>(r_small);
        cap = Rational(2) * em;
    } else {
        plan.r = 2;
        cap = Rational(2) * (Rational(1) - Rational(48) * ex) * m;
    }
    plan.h = min_h(em, plan.r);

    long long l0 = 0;
    if (b >= 5) {
        l0 = floor_odd(Rational(2 * t - 2 - (1 + 2LL * plan.h) * (b - 1)) / Rational(b - 1));
        validate_ell(l0, 1, cap, "odd: ell0");
    }
    long long l1 = t - 1 - (b - 1) / 2 - static_cast<long long>(plan.h) * (b - 1) -
                   (b - 3) / 2 * l0;
    validate_ell(l1, 1, cap, "odd: ell1");
    if (l1 % 2 != 1 || (b >= 5 && l0 % 2 != 1))
        throw std::invalid_argument("plan_odd_cycle: parity bookkeeping failed");

    for (int i = 1; i <= (b - 1) / 2; ++i) {
        int ca = s_cycle[static_cast<size_t>(2 * i - 2)];
        int cb = s_cycle[static_cast<size_t>(2 * i - 1)];
        plan.jobs.push_back(
            TreeJob{{ca, -1}, {cb, -1}, TreeSpec{plan.r, plan.h, i == 1 ? l1 : l0}, -1});
        plan.order.push_back({i - 1, 0});
    }
    plan.odd_vertex_close = true;
    plan.vb_cluster = s_cycle.back();
    plan.planned_total = plan_total(plan);
    if (plan.planned_total != t)
        throw std::logic_error("plan_odd_cycle: bookkeeping does not sum to t");
    return plan;
}

namespace {

struct EmbeddedJob {
    TrhlEmbedding emb;
    VertexSet leaves_host[2];            // images of copy A / copy B leaf sets
    std::vector<std::pair<int, int>> leaf_abs[2];  // (host, abstract) per copy
};

// first edge between two host sets in deterministic (sorted) order
std::optional<std::pair<int, int>> first_edge_between(const Graph& g, VertexSet a, VertexSet b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    for (int u : a)
        for (int v : b)
            if (g.has_edge(u, v)) return std::make_pair(u, v);
    return std::nullopt;
}

bool past_deadline(const ExecOptions& opts) {
    return opts.deadline && std::chrono::steady_clock::now() > *opts.deadline;
}

}  // namespace

ExecResult execute_plan(const Graph& g0, const ClusterPartition& pi, const StitchPlan& plan,
                        Rational eps, const ExecOptions& opts, RngStream& rng) {
    ExecResult res;
    Rational ex = clamp_eps(eps);
    Rational m(pi.n, pi.k);
    Rational em = ex * m;

    // materialize split halves once, rng-deterministic
    std::vector<std::array<VertexSet, 2>> halves(static_cast<size_t>(pi.k));
    std::vector<char> split_needed(static_cast<size_t>(pi.k), 0);
    for (const auto& job : plan.jobs)
        for (const auto& region : {job.region_a, job.region_b})
            if (region.half >= 0) split_needed[static_cast<size_t>(region.cluster)] = 1;
    RngStream split_rng = rng.substream(0xC1u);
    for (int c = 0; c < pi.k; ++c) {
        if (!split_needed[static_cast<size_t>(c)]) continue;
        VertexSet v = pi.cluster(c);
        split_rng.shuffle(v);
        size_t mid = v.size() / 2;
        halves[static_cast<size_t>(c)][0].assign(v.begin(), v.begin() + mid);
        halves[static_cast<size_t>(c)][1].assign(v.begin() + mid, v.end());
        for (auto& hv : halves[static_cast<size_t>(c)]) std::sort(hv.begin(), hv.end());
    }
    auto region_vertices = [&](const HostRegion& r) -> VertexSet {
        if (r.half < 0) return pi.cluster(r.cluster);
        return halves[static_cast<size_t>(r.cluster)][static_cast<size_t>(r.half)];
    };

    // embed every job
    std::vector<EmbeddedJob> embedded(plan.jobs.size());
    for (size_t j = 0; j < plan.jobs.size(); ++j) {
        if (past_deadline(opts)) {
            res.failure = StageFailure{"timeout", "deadline during tree embedding", static_cast<int>(j)};
            return res;
        }
        const TreeJob& job = plan.jobs[j];
        VertexSet va = region_vertices(job.region_a);
        VertexSet vb = region_vertices(job.region_b);
        Rational m_e(static_cast<long long>(std::min(va.size(), vb.size())));
        if (m_e.num == 0) {
            res.failure = StageFailure{"embed", "empty host region", static_cast<int>(j)};
            return res;
        }
        Rational eps_e = em / m_e;
        bool done = false;
        std::string last_fail;
        for (int attempt = 0; attempt <= opts.tree_retries && !done; ++attempt) {
            RngStream sub = rng.substream(0x7E0 + j * 16 + static_cast<size_t>(attempt));
            TrhlOutcome out =
                job.spec.r == 2
                    ? embed_large_trhl(g0, va, vb, eps_e, m_e, job.spec.ell, job.leaf_side, sub)
                    : embed_small_trhl(g0, va, vb, ex, m, job.spec.ell, sub);
            if (auto* emb = std::get_if<TrhlEmbedding>(&out)) {
                embedded[j].emb = std::move(*emb);
                done = true;
            } else {
                auto& f = std::get<EmbedFailure>(out);
                last_fail = f.stage + ": " + f.detail;
            }
        }
        if (!done) {
            res.failure = StageFailure{"embed", last_fail, static_cast<int>(j)};
            return res;
        }
        const auto& shape = embedded[j].emb.shape;
        for (int copy = 0; copy < 2; ++copy) {
            const auto& leaves = copy == 0 ? shape.leaves_a : shape.leaves_b;
            for (int lv : leaves) {
                int hv = embedded[j].emb.map[static_cast<size_t>(lv)];
                embedded[j].leaves_host[copy].push_back(hv);
                embedded[j].leaf_abs[copy].emplace_back(hv, lv);
            }
        }
    }

    // connectors between consecutive steps; entry/exit leaves per step
    size_t steps = plan.order.size();
    std::vector<int> enter_leaf_abs(steps, -1), exit_leaf_abs(steps, -1);
    auto abstract_of = [&](int job, int copy, int host) {
        for (auto& [hv, av] : embedded[static_cast<size_t>(job)].leaf_abs[copy])
            if (hv == host) return av;
        return -1;
    };
    for (size_t i = 0; i < steps; ++i) {
        size_t nxt = (i + 1) % steps;
        bool wrap = nxt == 0;
        if (plan.odd_vertex_close && wrap) continue;  // handled by v_b below
        const PlanStep& a = plan.order[i];
        const PlanStep& b = plan.order[nxt];
        int exit_copy = 1 - a.enter_copy;
        auto edge = first_edge_between(g0, embedded[static_cast<size_t>(a.job)].leaves_host[exit_copy],
                                       embedded[static_cast<size_t>(b.job)].leaves_host[b.enter_copy]);
        if (!edge) {
            StageFailure f;
            f.stage = "connector";
            f.detail = "no edge between consecutive leaf sets (steps " + std::to_string(i) + "," +
                       std::to_string(nxt) + ")";
            f.leaf_set_a = embedded[static_cast<size_t>(a.job)].leaves_host[exit_copy];
            f.leaf_set_b = embedded[static_cast<size_t>(b.job)].leaves_host[b.enter_copy];
            res.failure = std::move(f);
            return res;
        }
        exit_leaf_abs[i] = abstract_of(a.job, exit_copy, edge->first);
        enter_leaf_abs[nxt] = abstract_of(b.job, b.enter_copy, edge->second);
    }

    int vb_vertex = -1;
    if (plan.odd_vertex_close) {
        const PlanStep& last = plan.order.back();
        const PlanStep& first = plan.order.front();
        int exit_copy = 1 - last.enter_copy;
        const auto& tail = embedded[static_cast<size_t>(last.job)].leaves_host[exit_copy];
        const auto& head = embedded[static_cast<size_t>(first.job)].leaves_host[first.enter_copy];
        std::vector<char> in_tail(g0.n(), 0), in_head(g0.n(), 0);
        for (int v : tail) in_tail[v] = 1;
        for (int v : head) in_head[v] = 1;
        for (int v : pi.cluster(plan.vb_cluster)) {
            int hit_tail = -1, hit_head = -1;
            for (int w : g0.neighbors(v)) {
                if (hit_tail < 0 && in_tail[w]) hit_tail = w;
                if (hit_head < 0 && in_head[w]) hit_head = w;
                if (hit_tail >= 0 && hit_head >= 0) break;
            }
            if (hit_tail >= 0 && hit_head >= 0) {
                vb_vertex = v;
                exit_leaf_abs[steps - 1] = abstract_of(last.job, exit_copy, hit_tail);
                enter_leaf_abs[0] = abstract_of(first.job, first.enter_copy, hit_head);
                break;
            }
        }
        if (vb_vertex < 0) {
            StageFailure f;
            f.stage = "closing-vertex";
            f.detail = "no vertex of cluster " + std::to_string(plan.vb_cluster) +
                       " adjacent to both end leaf sets";
            f.leaf_set_a = head;
            f.leaf_set_b = tail;
            res.failure = std::move(f);
            return res;
        }
    }

    // assemble the cycle: per-step tree paths joined by the chosen edges
    VertexSeq cycle;
    for (size_t i = 0; i < steps; ++i) {
        const PlanStep& st = plan.order[i];
        const auto& ej = embedded[static_cast<size_t>(st.job)];
        VertexSeq seg = tree_path(ej.emb.shape.tree, enter_leaf_abs[i], exit_leaf_abs[i]);
        for (int av : seg) cycle.push_back(ej.emb.map[static_cast<size_t>(av)]);
    }
    if (plan.odd_vertex_close) cycle.push_back(vb_vertex);

    auto check = verify_cycle(g0, cycle, plan.t);
    if (!check.ok) {
        res.failure = StageFailure{"verify", check.reason, -1};
        return res;
    }
    CycleCertificate cert;
    cert.cycle = std::move(cycle);
    cert.t = plan.t;
    cert.plan = plan;
    cert.trace.push_back("regime " + plan.regime + ", b=" + std::to_string(plan.b));
    for (size_t j = 0; j < embedded.size(); ++j)
        cert.trace.push_back("job " + std::to_string(j) + " mode " + embedded[j].emb.mode);
    res.certificate = std::move(cert);
    return res;
}

FindCycleResult find_cycle_of_length(const Graph& g, long long t, const FindCycleParams& params,
                                     RngStream& rng, const ClusterPartition* planted) {
    FindCycleResult out;
    int n = g.n();
    if (t < 3 || t > n) throw std::invalid_argument("find_cycle_of_length: need 3 <= t <= n");
    if (params.k < 2 || params.k > kMaxK)
        throw std::invalid_argument("find_cycle_of_length: need 2 <= k <= 20");
    if (!(params.beta > Rational(0) && params.beta < Rational(1)))
        throw std::invalid_argument("find_cycle_of_length: beta out of (0,1)");
    Rational ex = clamp_eps(params.eps);
    Rational gamma = params.gamma.value_or(
        Rational(2) * (Rational(1) - Rational(48) * ex) / Rational(params.k));

    // advisory lower window from the corollary: C1 * log n / log(1/beta)
    double lowert = params.c1 * std::log(static_cast<double>(n)) /
                    std::log(1.0 / params.beta.to_double());
    out.below_advisory_window = static_cast<double>(t) < lowert;

    // e(S) threshold annotation
    {
        ExtremalQuery q{n, t, gamma};
        auto gv = g_function(q);
        out.s_threshold = (gv.value() + params.beta / Rational(32)) * Rational(binom2(params.k));
    }

    for (int attempt = 0; attempt <= params.partition_retries; ++attempt) {
        RngStream attempt_rng = rng.substream(0xA770 + static_cast<std::uint64_t>(attempt));
        ClusterPartition pi;
        if (planted && attempt == 0) {
            pi = *planted;
        } else {
            pi = equipartition(n, params.k, attempt_rng);
        }
        if (pi.k > kMaxK) throw std::invalid_argument("find_cycle_of_length: partition k > 20");
        Rational m(n, pi.k);
        RngStream verdict_rng = attempt_rng.substream(1);
        EpsilonGraph s =
            build_epsilon_graph(g, pi, params.eps, params.s_mode, params.s_budget, verdict_rng);
        out.s_edges = s.s.m();
        SGraphIndex idx(s.s);

        std::vector<StitchPlan> plans;
        std::vector<std::string> regimes_seen;
        auto add_plan = [&](StitchPlan&& p) {
            // regime A ignores b beyond the first edge; avoid duplicates
            if (p.regime == "A-small-t" &&
                std::find(regimes_seen.begin(), regimes_seen.end(), p.regime) != regimes_seen.end())
                return;
            regimes_seen.push_back(p.regime);
            plans.push_back(std::move(p));
        };
        if (t % 2 == 0) {
            VertexSeq lp = idx.longest_path();
            int lmax = idx.longest_path_length();
            std::vector<int> b_candidates;
            for (int b : {3, 1, 5, 7, 9, 11, 13, 15, 17, 19})
                if (b <= lmax) b_candidates.push_back(b);
            for (int b : b_candidates) {
                std::vector<int> sub(lp.begin(), lp.begin() + b + 1);
                try {
                    add_plan(plan_even_cycle(sub, t, params.eps, m, pi.k));
                } catch (const std::invalid_argument&) {
                    // regime/window mismatch at this b
                }
            }
        } else {
            for (int b : idx.cycle_lengths()) {
                if (b % 2 != 1) continue;
                VertexSeq cyc = idx.cycle_of_length(b);
                try {
                    add_plan(plan_odd_cycle(cyc, t, params.eps, m, pi.k));
                } catch (const std::invalid_argument&) {
                }
            }
        }
        if (plans.empty()) {
            out.attempts.push_back("attempt " + std::to_string(attempt) + ": e(S)=" +
                                   std::to_string(s.s.m()) + ", no plannable substructure");
            continue;
        }
        for (const auto& plan : plans) {
            for (int er = 0; er <= params.exec_retries; ++er) {
                RngStream exec_rng = attempt_rng.substream(0xE0 + static_cast<std::uint64_t>(er) * 64 +
                                                           static_cast<std::uint64_t>(plan.b));
                ExecResult er_res = execute_plan(g, pi, plan, params.eps, params.exec, exec_rng);
                if (er_res.ok()) {
                    out.certificate = std::move(er_res.certificate);
                    out.attempts.push_back("attempt " + std::to_string(attempt) + ": success (" +
                                           plan.regime + ", b=" + std::to_string(plan.b) + ")");
                    return out;
                }
                out.attempts.push_back("attempt " + std::to_string(attempt) + ": " + plan.regime +
                                       " b=" + std::to_string(plan.b) + " failed at " +
                                       er_res.failure->stage);
                if (er_res.failure->stage == "timeout") return out;
            }
        }
    }
    return out;
}

}  // namespace cyclelab
