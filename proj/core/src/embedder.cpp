#include "cyclelab/embedder.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace cyclelab {

int RootedTree::max_degree() const {
    int best = 0;
    for (int v = 0; v < n; ++v) {
        int d = static_cast<int>(children[v].size()) + (parent[v] >= 0 ? 1 : 0);
        best = std::max(best, d);
    }
    return best;
}

std::vector<int> RootedTree::bfs_order() const {
    std::vector<int> order;
    order.reserve(n);
    std::deque<int> q{root};
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        order.push_back(v);
        for (int c : children[v]) q.push_back(c);
    }
    return order;
}

namespace {

// grows an r-ary depth-h subtree below `root`; returns depth-h leaves
std::vector<int> grow_rary(RootedTree& t, std::vector<int>& parity, int root, int r, int h) {
    std::vector<int> frontier{root};
    for (int level = 1; level <= h; ++level) {
        std::vector<int> next;
        for (int v : frontier) {
            for (int i = 0; i < r; ++i) {
                int u = t.n++;
                t.parent.push_back(v);
                t.children.push_back({});
                t.children[v].push_back(u);
                parity.push_back(parity[v] ^ 1);
                next.push_back(u);
            }
        }
        frontier = std::move(next);
    }
    return frontier;
}

}  // namespace

TrhlTree make_trhl(const TreeSpec& spec) {
    if (spec.r < 1 || spec.h < 0 || spec.ell < 1)
        throw std::invalid_argument("make_trhl: need r >= 1, h >= 0, ell >= 1");
    TrhlTree t;
    t.spec = spec;
    RootedTree& tr = t.tree;
    tr.n = 0;
    // join path first: root_a = 0, then ell more vertices ending at root_b
    tr.parent.push_back(-1);
    tr.children.push_back({});
    t.parity.push_back(0);
    tr.n = 1;
    t.root_a = 0;
    t.join_path.push_back(0);
    for (long long i = 1; i <= spec.ell; ++i) {
        int u = tr.n++;
        tr.parent.push_back(u - 1);
        tr.children.push_back({});
        tr.children[u - 1].push_back(u);
        t.parity.push_back(t.parity[u - 1] ^ 1);
        t.join_path.push_back(u);
    }
    t.root_b = t.join_path.back();
    tr.root = t.root_a;
    t.leaves_a = grow_rary(tr, t.parity, t.root_a, spec.r, spec.h);
    t.leaves_b = grow_rary(tr, t.parity, t.root_b, spec.r, spec.h);
    return t;
}

RhTree make_rh_tree(int r, int h) {
    if (r < 1 || h < 0) throw std::invalid_argument("make_rh_tree: need r >= 1, h >= 0");
    RhTree t;
    t.tree.n = 1;
    t.tree.root = 0;
    t.tree.parent.push_back(-1);
    t.tree.children.push_back({});
    t.parity.push_back(0);
    t.leaves = grow_rary(t.tree, t.parity, 0, r, h);
    return t;
}

VertexSeq tree_path(const RootedTree& t, int from, int to) {
    std::vector<int> up_from, up_to;
    std::vector<int> depth(t.n, -1);
    // depths via parent chain lengths (cheap for our tree sizes)
    auto depth_of = [&](int v) {
        int d = 0;
        for (int x = v; t.parent[x] >= 0; x = t.parent[x]) ++d;
        return d;
    };
    int a = from, b = to;
    int da = depth_of(a), db = depth_of(b);
    while (da > db) {
        up_from.push_back(a);
        a = t.parent[a];
        --da;
    }
    while (db > da) {
        up_to.push_back(b);
        b = t.parent[b];
        --db;
    }
    while (a != b) {
        up_from.push_back(a);
        up_to.push_back(b);
        a = t.parent[a];
        b = t.parent[b];
    }
    up_from.push_back(a);
    std::reverse(up_to.begin(), up_to.end());
    up_from.insert(up_from.end(), up_to.begin(), up_to.end());
    return up_from;
}

bool verify_pair_embedding(const BipartitePair& pair, const RootedTree& tree,
                           const std::vector<int>& map, std::string* why) {
    auto fail = [&](const std::string& r) {
        if (why) *why = r;
        return false;
    };
    if (static_cast<int>(map.size()) != tree.n) return fail("map size mismatch");
    std::vector<char> used(pair.host().n(), 0);
    for (int v = 0; v < tree.n; ++v) {
        int hv = map[v];
        if (hv < 0 || hv >= pair.host().n()) return fail("image out of range");
        if (pair.side_of(hv) < 0) return fail("image outside the pair");
        if (used[hv]) return fail("not injective at host vertex " + std::to_string(hv));
        used[hv] = 1;
    }
    for (int v = 0; v < tree.n; ++v) {
        int p = tree.parent[v];
        if (p < 0) continue;
        if (!pair.host().has_edge(map[v], map[p])) return fail("abstract edge not a host edge");
        if (pair.side_of(map[v]) == pair.side_of(map[p])) return fail("edge does not alternate sides");
    }
    return true;
}

EmbedOutcome fp_embed_tree(const BipartitePair& pair, const RootedTree& tree, int root_host,
                           int max_degree_cap, RngStream* rng, long long backtrack_budget,
                           const std::vector<char>* blocked) {
    if (tree.max_degree() > max_degree_cap)
        return EmbedFailure{"precondition", "tree max degree exceeds cap", -1};
    if (pair.side_of(root_host) < 0)
        return EmbedFailure{"precondition", "root host not inside the pair", -1};
    if (blocked && (*blocked)[root_host])
        return EmbedFailure{"precondition", "root host is blocked", -1};
    if (backtrack_budget < 0) backtrack_budget = 50LL * tree.n;

    const Graph& g = pair.host();
    std::vector<int> order = tree.bfs_order();
    std::vector<int> pos_of(tree.n);
    for (int i = 0; i < tree.n; ++i) pos_of[order[i]] = i;

    std::vector<int> map(tree.n, -1);
    std::vector<char> used(g.n(), 0);

    auto free_degree = [&](int hv) {
        int d = 0;
        for (int w : pair.cross_neighbors(hv))
            if (!used[w] && !(blocked && (*blocked)[w])) ++d;
        return d;
    };

    // per-position candidate lists, built lazily when the position is entered
    std::vector<std::vector<int>> cands(tree.n);
    std::vector<size_t> cursor(tree.n, 0);

    auto build_candidates = [&](int pos) {
        int av = order[pos];
        if (pos == 0) {
            cands[pos] = {root_host};
            cursor[pos] = 0;
            return;
        }
        int pa = tree.parent[av];
        int ph = map[pa];
        std::vector<std::pair<int, int>> scored;  // (-free_degree, host)
        for (int w : pair.cross_neighbors(ph)) {
            if (used[w] || (blocked && (*blocked)[w])) continue;
            scored.emplace_back(-free_degree(w), w);
        }
        std::sort(scored.begin(), scored.end());
        if (rng && scored.size() > 1) {
            // shuffle within equal scores to keep retries diverse
            size_t i = 0;
            while (i < scored.size()) {
                size_t j = i;
                while (j < scored.size() && scored[j].first == scored[i].first) ++j;
                for (size_t a = j - 1; a > i; --a) {
                    size_t b = i + rng->below(a - i + 1);
                    std::swap(scored[a], scored[b]);
                }
                i = j;
            }
        }
        cands[pos].clear();
        for (auto& [s, w] : scored) cands[pos].push_back(w);
        cursor[pos] = 0;
    };

    long long retreats = 0;
    int pos = 0;
    build_candidates(0);
    while (pos < tree.n) {
        int av = order[pos];
        bool placed = false;
        while (cursor[pos] < cands[pos].size()) {
            int hv = cands[pos][cursor[pos]++];
            if (used[hv]) continue;
            map[av] = hv;
            used[hv] = 1;
            placed = true;
            break;
        }
        if (placed) {
            ++pos;
            if (pos < tree.n) build_candidates(pos);
            continue;
        }
        // retreat
        if (pos == 0 || ++retreats > backtrack_budget)
            return EmbedFailure{"embed", "stuck frontier (backtrack budget exhausted)", order[pos]};
        --pos;
        used[map[order[pos]]] = 0;
        map[order[pos]] = -1;
    }

    TreeEmbedding emb;
    emb.map = std::move(map);
    emb.side.resize(tree.n);
    for (int v = 0; v < tree.n; ++v) emb.side[v] = pair.side_of(emb.map[v]);
    std::string why;
    if (!verify_pair_embedding(pair, tree, emb.map, &why))
        return EmbedFailure{"verify", why, -1};
    return emb;
}

namespace {

long long two_pow_at_least(Rational target, int base, int* h_out) {
    // smallest h >= 0 with base^h >= target
    int h = 0;
    Rational cap(1);
    Rational b(base);
    while (cap < target) {
        cap = cap * b;
        ++h;
        if (h > 62) throw std::invalid_argument("tree depth overflow");
    }
    *h_out = h;
    long long v = 1;
    for (int i = 0; i < h; ++i) v *= base;
    return v;
}

VertexSet take_first(const VertexSet& v, long long cnt) {
    VertexSet out(v.begin(), v.begin() + std::min<long long>(cnt, static_cast<long long>(v.size())));
    return out;
}

VertexSet minus(const VertexSet& v, const std::vector<char>& drop) {
    VertexSet out;
    for (int x : v)
        if (!drop[x]) out.push_back(x);
    return out;
}

}  // namespace

TrhlOutcome embed_small_trhl(const Graph& g, const VertexSet& v1, const VertexSet& v2,
                             Rational eps, Rational m, long long ell, RngStream& rng) {
    if (eps <= Rational(0)) return EmbedFailure{"precondition", "eps must be positive", -1};
    long long r = floor_ll(Rational(1) / (Rational(16) * eps)) - 2;
    if (r < 2) return EmbedFailure{"precondition", "arity < 2 (eps too large for the small-tree branch)", -1};
    if (eps >= Rational(1, 85)) return EmbedFailure{"precondition", "eps out of (0, 1/85)", -1};
    Rational em = eps * m;
    if (ell < 1 || Rational(ell) > Rational(2) * em)
        return EmbedFailure{"precondition", "ell out of [1, 2*eps*m]", -1};
    int h = 0;
    two_pow_at_least(em, static_cast<int>(r), &h);

    auto cp = corollary_params(eps, 1);
    CleanupTrace cleanup = cleanup_to_expander(g, v1, v2, eps, m, cp.bipartite.B, cp.bipartite.ell);
    if (!cleanup.success)
        return EmbedFailure{"cleanup", "eps-property counterexample found during cleanup", -1};

    TrhlTree shape = make_trhl(TreeSpec{static_cast<int>(r), h, ell});
    int cap = static_cast<int>(floor_ll(Rational(1) / (Rational(16) * eps))) - 1;
    BipartitePair pair(g, cleanup.u1, cleanup.u2);

    // try a few high-degree roots on each side
    std::vector<std::pair<int, int>> roots;
    for (const VertexSet* side : {&cleanup.u1, &cleanup.u2}) {
        for (int v : *side) roots.emplace_back(-static_cast<int>(pair.cross_neighbors(v).size()), v);
    }
    std::sort(roots.begin(), roots.end());
    int tries = std::min<int>(8, static_cast<int>(roots.size()));
    TrhlEmbedding result;
    for (int i = 0; i < tries; ++i) {
        auto out = fp_embed_tree(pair, shape.tree, roots[i].second, cap, &rng);
        if (auto* emb = std::get_if<TreeEmbedding>(&out)) {
            result.shape = shape;
            result.map = emb->map;
            result.mode = "corner";
            result.trace.push_back("cleanup removed " + std::to_string(cleanup.steps.size()) + " sets");
            return result;
        }
    }
    return EmbedFailure{"embed", "all root choices failed", -1};
}

namespace {

struct LargeCtx {
    const Graph* g;
    VertexSet v1, v2;
    Rational em;        // eps * m threshold
    long long ell;
    int h;
    int leaf_side;      // -1 for odd ell
    long long q;
    long long path_len;  // ell - 4 + q
};

// bipartite pair as a standalone graph over cross edges only
struct PairGraph {
    Graph graph;
    std::vector<int> to_host;
    std::vector<int> side;  // side per local vertex
};

PairGraph build_pair_graph(const Graph& g, const VertexSet& a, const VertexSet& b) {
    PairGraph pg;
    pg.to_host = a;
    pg.to_host.insert(pg.to_host.end(), b.begin(), b.end());
    std::vector<int> local(g.n(), -1);
    for (size_t i = 0; i < pg.to_host.size(); ++i) local[pg.to_host[i]] = static_cast<int>(i);
    pg.side.assign(pg.to_host.size(), 1);
    for (size_t i = 0; i < a.size(); ++i) pg.side[i] = 0;
    std::vector<char> in_a(g.n(), 0);
    for (int v : a) in_a[v] = 1;
    std::vector<Edge> edges;
    for (int v : a)
        for (int w : g.neighbors(v))
            if (local[w] >= 0 && !in_a[w]) edges.emplace_back(local[v], local[w]);
    pg.graph = Graph::from_edges(static_cast<int>(pg.to_host.size()), std::move(edges));
    return pg;
}

// longest path attempt: DFS partition first, then greedy restarts
VertexSeq find_host_path(const PairGraph& pg, long long want_vertices, RngStream& rng) {
    DfsPartition dp = dfs_path_partition(pg.graph, &rng);
    VertexSeq best = dp.path;
    if (static_cast<long long>(best.size()) < want_vertices) {
        VertexSeq alt = longest_path_greedy(pg.graph, rng, 6);
        if (alt.size() > best.size()) best = std::move(alt);
    }
    if (static_cast<long long>(best.size()) < want_vertices) return {};
    best.resize(static_cast<size_t>(want_vertices));
    // map back to host ids
    for (int& v : best) v = pg.to_host[v];
    return best;
}

}  // namespace

TrhlOutcome embed_large_trhl(const Graph& g, const VertexSet& v1, const VertexSet& v2,
                             Rational eps, Rational m, long long ell, int leaf_side,
                             RngStream& rng) {
    if (!(eps > Rational(0) && eps < Rational(1, 85)))
        return EmbedFailure{"precondition", "eps out of (0, 1/85)", -1};
    Rational em = eps * m;
    if (ell < 1 || Rational(ell) > Rational(2) * (Rational(1) - Rational(48) * eps) * m)
        return EmbedFailure{"precondition", "ell out of [1, 2(1-48eps)m]", -1};
    if (ell % 2 == 0 && leaf_side != 0 && leaf_side != 1)
        return EmbedFailure{"precondition", "even ell requires leaf_side 0 or 1", -1};

    int h = 0;
    two_pow_at_least(em, 2, &h);
    long long q = 4 * std::max<long long>(1, ceil_ll(em));
    long long path_edges = ell - 4 + q;
    if (path_edges < 1) return EmbedFailure{"precondition", "ell too small for the path stage", -1};
    long long path_vertices = path_edges + 1;

    TrhlTree shape = make_trhl(TreeSpec{2, h, ell});
    std::vector<std::string> trace;

    if (ell <= 2) {
        // the path/pigeonhole machinery degenerates; greedily place the whole
        // tree, which is tiny at this ell
        BipartitePair whole(g, v1, v2);
        std::vector<std::pair<int, int>> roots;
        for (const VertexSet* side : {&v1, &v2})
            for (int v : *side) roots.emplace_back(-static_cast<int>(whole.cross_neighbors(v).size()), v);
        std::sort(roots.begin(), roots.end());
        for (int i = 0; i < std::min<int>(8, static_cast<int>(roots.size())); ++i) {
            if (ell % 2 == 0) {
                int rs = (h % 2 == 0) ? leaf_side : 1 - leaf_side;
                if (whole.side_of(roots[i].second) != rs) continue;
            }
            auto out = fp_embed_tree(whole, shape.tree, roots[i].second, 3, &rng);
            if (auto* emb = std::get_if<TreeEmbedding>(&out)) {
                TrhlEmbedding result;
                result.shape = shape;
                result.map = emb->map;
                result.mode = "shared-region";
                result.trace.push_back("direct whole-tree embedding (ell <= 2)");
                return result;
            }
        }
        return EmbedFailure{"embed", "direct embedding failed at ell <= 2", -1};
    }

    long long corner = ceil_ll(Rational(21) * em);
    bool corner_feasible =
        corner >= 1 &&
        2 * corner < static_cast<long long>(std::min(v1.size(), v2.size())) &&
        static_cast<long long>(std::min(v1.size(), v2.size())) - 2 * corner >= path_vertices / 2;

    // side of the tree roots: for even ell all leaves must land in leaf_side,
    // and a depth-h leaf flips sides h times from its root
    int root_side = -1;
    if (ell % 2 == 0) root_side = (h % 2 == 0) ? leaf_side : 1 - leaf_side;

    auto attempt = [&](bool faithful) -> TrhlOutcome {
        VertexSet x1, x2;
        // corner pools per corner pair: pair 0 hosts tree A, pair 1 hosts tree B
        VertexSet pool1_v1, pool1_v2, pool2_v1, pool2_v2;
        if (faithful) {
            VertexSet u11 = take_first(v1, corner);
            VertexSet u12(v1.begin() + corner, v1.begin() + 2 * corner);
            VertexSet u21 = take_first(v2, corner);
            VertexSet u22(v2.begin() + corner, v2.begin() + 2 * corner);
            auto cp = corollary_params(eps, 2);
            Rational mc(corner);
            Rational eps_c = em / mc;
            CleanupTrace c1 = cleanup_to_expander(g, u11, u21, eps_c, mc, cp.bipartite.B, cp.bipartite.ell);
            CleanupTrace c2 = cleanup_to_expander(g, u12, u22, eps_c, mc, cp.bipartite.B, cp.bipartite.ell);
            if (!c1.success || !c2.success)
                return EmbedFailure{"corner-cleanup", "corner pair failed expander cleanup", -1};
            pool1_v1 = c1.u1;
            pool1_v2 = c1.u2;
            pool2_v1 = c2.u1;
            pool2_v2 = c2.u2;
            // vertices cleaned away by the expander step return to the middle pool
            std::vector<char> in_corner(g.n(), 0);
            for (const auto* s : {&pool1_v1, &pool1_v2, &pool2_v1, &pool2_v2})
                for (int v : *s) in_corner[v] = 1;
            x1 = minus(v1, in_corner);
            x2 = minus(v2, in_corner);
            long long xcap = floor_ll(m - Rational(43) * em);
            if (xcap > 0) {
                if (static_cast<long long>(x1.size()) > xcap) x1 = take_first(x1, xcap);
                if (static_cast<long long>(x2.size()) > xcap) x2 = take_first(x2, xcap);
            }
        } else {
            x1 = v1;
            x2 = v2;
        }

        PairGraph middle = build_pair_graph(g, x1, x2);
        VertexSeq path = find_host_path(middle, path_vertices, rng);
        if (path.empty())
            return EmbedFailure{"path", "no path of length " + std::to_string(path_edges) +
                                            " in the middle blocks", -1};

        BipartitePair whole(g, v1, v2);
        std::vector<char> used(g.n(), 0);
        for (int v : path) used[v] = 1;

        // tree pools: in faithful mode the cleaned corner pairs; in shared
        // mode everything outside the path
        VertexSet t1_v1, t1_v2, t2_v1, t2_v2;
        if (faithful) {
            t1_v1 = pool1_v1;
            t1_v2 = pool1_v2;
            t2_v1 = pool2_v1;
            t2_v2 = pool2_v2;
        } else {
            t1_v1 = minus(v1, used);
            t1_v2 = minus(v2, used);
            t2_v1 = t1_v1;
            t2_v2 = t1_v2;
        }

        int side_u1 = whole.side_of(path.front());
        // required parity of s: side(u_s) must be opposite the root side;
        // for odd ell the paper scans odd s (u_s on the side of u*)
        std::vector<long long> s_candidates;
        for (long long s = 1; s <= q - 1; ++s) {
            int side_us = side_u1 ^ static_cast<int>((s - 1) % 2);
            if (ell % 2 == 1) {
                if (s % 2 != 1) continue;
            } else {
                if (side_us != 1 - root_side) continue;
            }
            s_candidates.push_back(s);
        }

        RhTree corner_tree = make_rh_tree(2, h);
        auto root_candidates = [&](int path_vertex, const VertexSet& pool_v1,
                                   const VertexSet& pool_v2, int want_side) {
            std::vector<char> in_pool(g.n(), 0);
            const VertexSet& pool = want_side == 0 ? pool_v1 : pool_v2;
            for (int v : pool) in_pool[v] = 1;
            std::vector<int> roots;
            for (int w : g.neighbors(path_vertex))
                if (in_pool[w] && !used[w]) roots.push_back(w);
            return roots;
        };

        std::vector<char> in_want(g.n(), 0);
        if (ell % 2 == 0) {
            const VertexSet& want = leaf_side == 0 ? v1 : v2;
            for (int v : want) in_want[v] = 1;
        }
        int fp_attempts = 0;
        const int fp_attempt_cap = 80;
        for (long long s : s_candidates) {
            // v_j = path[path_vertices - j] counting from the far end (v_1 = back)
            int us = path[static_cast<size_t>(s - 1)];
            int vqs = path[static_cast<size_t>(path_vertices - (q - s))];
            // roots: opposite side of the attachment vertex (cross edges only);
            // for even ell this equals root_side by the s-parity filter
            int rs1 = 1 - whole.side_of(us);
            int rs2 = 1 - whole.side_of(vqs);
            auto roots1 = root_candidates(us, t1_v1, t1_v2, rs1);
            if (roots1.empty()) continue;
            auto roots2 = root_candidates(vqs, t2_v1, t2_v2, rs2);
            if (roots2.empty()) continue;
            if (roots1.size() > 4) roots1.resize(4);
            if (roots2.size() > 4) roots2.resize(4);

            for (int w1 : roots1) {
                if (++fp_attempts > fp_attempt_cap)
                    return EmbedFailure{"attach", "attachment attempt budget exhausted", -1};
                BipartitePair pair1(g, t1_v1, t1_v2);
                auto out1 = fp_embed_tree(pair1, corner_tree.tree, w1, 3, &rng, -1, &used);
                if (std::holds_alternative<EmbedFailure>(out1)) continue;
                auto emb1 = std::get<TreeEmbedding>(out1);
                std::vector<char> used2 = used;
                for (int hv : emb1.map) used2[hv] = 1;
                for (int w2 : roots2) {
                    if (used2[w2]) continue;
                    BipartitePair pair2(g, t2_v1, t2_v2);
                    auto out2 = fp_embed_tree(pair2, corner_tree.tree, w2, 3, &rng, -1, &used2);
                    if (std::holds_alternative<EmbedFailure>(out2)) continue;
                    auto emb2 = std::get<TreeEmbedding>(out2);

                    // splice into the abstract trhl shape
                    TrhlEmbedding result;
                    result.shape = shape;
                    result.mode = faithful ? "corner" : "shared-region";
                    result.trace = trace;
                    result.trace.push_back("s=" + std::to_string(s));
                    result.map.assign(shape.n(), -1);
                    auto map_copy = [&](int shape_root, const TreeEmbedding& emb) {
                        std::vector<std::pair<int, int>> st{{shape_root, corner_tree.tree.root}};
                        while (!st.empty()) {
                            auto [sv, cv] = st.back();
                            st.pop_back();
                            result.map[sv] = emb.map[cv];
                            // children below the root inside the copy: the shape's
                            // copy children exclude the join-path neighbor
                            std::vector<int> shape_kids;
                            for (int c : shape.tree.children[sv])
                                if (std::find(shape.join_path.begin(), shape.join_path.end(), c) ==
                                    shape.join_path.end())
                                    shape_kids.push_back(c);
                            const auto& copy_kids = corner_tree.tree.children[cv];
                            for (size_t i = 0; i < shape_kids.size(); ++i)
                                st.emplace_back(shape_kids[i], copy_kids[i]);
                        }
                    };
                    map_copy(shape.root_a, emb1);
                    map_copy(shape.root_b, emb2);
                    // join path: root_a, u_s ... v_{q-s}, root_b
                    for (long long i = 1; i < static_cast<long long>(shape.join_path.size()) - 1; ++i)
                        result.map[shape.join_path[static_cast<size_t>(i)]] =
                            path[static_cast<size_t>(s - 1 + (i - 1))];

                    // full verification against the whole pair
                    std::string why;
                    if (!verify_pair_embedding(whole, shape.tree, result.map, &why)) {
                        continue;  // try other roots
                    }
                    if (ell % 2 == 0) {
                        bool ok = true;
                        for (int lv : shape.leaves_a)
                            if (!in_want[result.map[lv]]) ok = false;
                        for (int lv : shape.leaves_b)
                            if (!in_want[result.map[lv]]) ok = false;
                        if (!ok) continue;
                    }
                    return result;
                }
            }
        }
        return EmbedFailure{"attach", "no attachment index admitted both corner trees", -1};
    };

    if (corner_feasible) {
        auto out = attempt(true);
        if (std::holds_alternative<TrhlEmbedding>(out)) return out;
        trace.push_back("corner mode failed: " + std::get<EmbedFailure>(out).stage);
    } else {
        trace.push_back("corner blocks infeasible at these sizes");
    }
    return attempt(false);
}

}  // namespace cyclelab
