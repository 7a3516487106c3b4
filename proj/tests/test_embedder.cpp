#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cyclelab/embedder.hpp"
#include "cyclelab/generators.hpp"

using namespace cyclelab;

namespace {

Graph complete_bipartite(int a, int b) {
    std::vector<Edge> e;
    for (int u = 0; u < a; ++u)
        for (int v = a; v < a + b; ++v) e.emplace_back(u, v);
    return Graph::from_edges(a + b, std::move(e));
}

Graph random_bipartite(int a, int b, double p, RngStream& rng) {
    std::vector<Edge> e;
    for (int u = 0; u < a; ++u)
        for (int v = a; v < a + b; ++v)
            if (rng.unit() < p) e.emplace_back(u, v);
    return Graph::from_edges(a + b, std::move(e));
}

VertexSet iota_set(int from, int count) {
    VertexSet s;
    for (int i = 0; i < count; ++i) s.push_back(from + i);
    return s;
}

long long trhl_vertex_count(int r, int h, long long ell) {
    if (r == 1) return ell + 1 + 2LL * h;
    long long copy = 0, pw = 1;
    for (int i = 0; i <= h; ++i) {
        copy += pw;
        pw *= r;
    }
    return ell - 1 + 2 * copy;
}

// longest path length of a tree by double BFS
int tree_longest_path(const RootedTree& t) {
    std::vector<std::vector<int>> adj(t.n);
    for (int v = 0; v < t.n; ++v)
        if (t.parent[v] >= 0) {
            adj[v].push_back(t.parent[v]);
            adj[t.parent[v]].push_back(v);
        }
    auto far = [&](int s) {
        std::vector<int> dist(t.n, -1);
        std::vector<int> q{s};
        dist[s] = 0;
        for (size_t i = 0; i < q.size(); ++i)
            for (int w : adj[q[i]])
                if (dist[w] < 0) {
                    dist[w] = dist[q[i]] + 1;
                    q.push_back(w);
                }
        int best = s;
        for (int v = 0; v < t.n; ++v)
            if (dist[v] > dist[best]) best = v;
        return std::make_pair(best, dist[best]);
    };
    auto [a, d1] = far(0);
    auto [b, d2] = far(a);
    return d2;
}

// independent leaf-depth check: every leaf of each copy at depth exactly h
void check_leaf_depths(const TrhlTree& t) {
    auto depth_to = [&](int v, int root) {
        int d = 0;
        int x = v;
        while (x != root && x >= 0) {
            x = t.tree.parent[x];
            ++d;
        }
        REQUIRE(x == root);
        return d;
    };
    for (int lv : t.leaves_a) CHECK(depth_to(lv, t.root_a) == t.spec.h);
    for (int lv : t.leaves_b) CHECK(depth_to(lv, t.root_b) == t.spec.h + t.spec.ell);
}

}  // namespace

TEST_CASE("make_trhl worked examples") {
    auto t1 = make_trhl({2, 1, 1});
    CHECK(t1.n() == 6);
    CHECK(tree_longest_path(t1.tree) == 3);
    CHECK(t1.leaves_a.size() == 2);
    CHECK(t1.leaves_b.size() == 2);

    auto t2 = make_trhl({2, 2, 3});
    CHECK(t2.n() == 16);
    CHECK(tree_longest_path(t2.tree) == 7);

    auto t3 = make_trhl({5, 0, 4});
    CHECK(t3.n() == 5);
    CHECK(tree_longest_path(t3.tree) == 4);
    CHECK(t3.leaves_a == std::vector<int>{t3.root_a});

    CHECK_THROWS(make_trhl({0, 1, 1}));
    CHECK_THROWS(make_trhl({2, -1, 1}));
    CHECK_THROWS(make_trhl({2, 1, 0}));
}

TEST_CASE("make_trhl matches the closed-form count and path length on the full grid") {
    for (int r = 2; r <= 6; ++r)
        for (int h = 0; h <= 6; ++h)
            for (long long ell = 1; ell <= 20; ++ell) {
                if (trhl_vertex_count(r, h, ell) > 120000) continue;
                auto t = make_trhl({r, h, ell});
                CHECK(t.n() == trhl_vertex_count(r, h, ell));
                CHECK(tree_longest_path(t.tree) == ell + 2 * h);
                long long leaves = 1;
                for (int i = 0; i < h; ++i) leaves *= r;
                CHECK(static_cast<long long>(t.leaves_a.size()) == leaves);
                CHECK(static_cast<long long>(t.leaves_b.size()) == leaves);
                if (t.n() <= 2000) check_leaf_depths(t);
            }
}

TEST_CASE("fp embed: star into a complete pair") {
    Graph kb = complete_bipartite(20, 20);
    BipartitePair pair(kb, iota_set(0, 20), iota_set(20, 20));
    auto star = make_rh_tree(5, 1);
    RngStream rng(1, 0);
    auto out = fp_embed_tree(pair, star.tree, 3, 6, &rng);
    REQUIRE(std::holds_alternative<TreeEmbedding>(out));
    auto emb = std::get<TreeEmbedding>(out);
    CHECK(verify_pair_embedding(pair, star.tree, emb.map));
    CHECK(emb.map[0] == 3);
    for (int leaf : star.leaves) CHECK(emb.map[leaf] >= 20);
}

TEST_CASE("fp embed: failure on a matching host") {
    std::vector<Edge> me;
    for (int i = 0; i < 5; ++i) me.emplace_back(i, 5 + i);
    Graph match = Graph::from_edges(10, std::move(me));
    BipartitePair pair(match, iota_set(0, 5), iota_set(5, 5));
    auto k12 = make_rh_tree(2, 1);
    RngStream rng(2, 0);
    auto out = fp_embed_tree(pair, k12.tree, 0, 3, &rng);
    CHECK(std::holds_alternative<EmbedFailure>(out));
}

TEST_CASE("fp embed: random bipartite hosts, verified every time") {
    int success = 0;
    for (int s = 0; s < 20; ++s) {
        RngStream rng(100, static_cast<std::uint64_t>(s));
        Graph g = random_bipartite(200, 200, 0.1, rng);
        BipartitePair pair(g, iota_set(0, 200), iota_set(200, 200));
        auto t25 = make_rh_tree(2, 5);  // 63 vertices
        int root = 0;
        for (int v = 0; v < 200; ++v)
            if (pair.cross_neighbors(v).size() > pair.cross_neighbors(root).size()) root = v;
        auto out = fp_embed_tree(pair, t25.tree, root, 3, &rng);
        if (auto* emb = std::get_if<TreeEmbedding>(&out)) {
            CHECK(verify_pair_embedding(pair, t25.tree, emb->map));
            ++success;
        }
    }
    CHECK(success >= 18);  // regression baseline
}

TEST_CASE("embed_small_trhl: arity degenerates for large eps") {
    Graph kb = complete_bipartite(64, 64);
    RngStream rng(3, 0);
    auto out = embed_small_trhl(kb, iota_set(0, 64), iota_set(64, 64), Rational(1, 32),
                                Rational(64), 3, rng);
    REQUIRE(std::holds_alternative<EmbedFailure>(out));
    CHECK(std::get<EmbedFailure>(out).detail.find("arity") != std::string::npos);
}

TEST_CASE("embed_small_trhl: dense random pair at eps=1/100") {
    RngStream rng(4, 0);
    Graph g = random_bipartite(500, 500, 0.2, rng);
    auto out = embed_small_trhl(g, iota_set(0, 500), iota_set(500, 500), Rational(1, 100),
                                Rational(500), 9, rng);
    REQUIRE(std::holds_alternative<TrhlEmbedding>(out));
    auto& emb = std::get<TrhlEmbedding>(out);
    CHECK(emb.shape.spec.r == 4);
    CHECK(emb.shape.spec.h == 2);
    CHECK(emb.shape.n() == 50);
    BipartitePair pair(g, iota_set(0, 500), iota_set(500, 500));
    CHECK(verify_pair_embedding(pair, emb.shape.tree, emb.map));
}

TEST_CASE("embed_small_trhl: minimal ell") {
    RngStream rng(5, 0);
    Graph g = random_bipartite(400, 400, 0.25, rng);
    auto out = embed_small_trhl(g, iota_set(0, 400), iota_set(400, 400), Rational(1, 100),
                                Rational(400), 1, rng);
    REQUIRE(std::holds_alternative<TrhlEmbedding>(out));
}

namespace {

void check_trhl_embedding(const Graph& g, const VertexSet& v1, const VertexSet& v2,
                          const TrhlEmbedding& emb, int leaf_side) {
    BipartitePair pair(g, v1, v2);
    std::string why;
    REQUIRE_MESSAGE(verify_pair_embedding(pair, emb.shape.tree, emb.map, &why), why);
    if (emb.shape.spec.ell % 2 == 0) {
        const VertexSet& want = leaf_side == 0 ? v1 : v2;
        std::vector<char> in_want(g.n(), 0);
        for (int v : want) in_want[v] = 1;
        for (int lv : emb.shape.leaves_a) CHECK(in_want[emb.map[lv]]);
        for (int lv : emb.shape.leaves_b) CHECK(in_want[emb.map[lv]]);
    }
}

}  // namespace

TEST_CASE("embed_large_trhl: planted two-block pair, odd ell") {
    // two disjoint K_{50,50} blocks bridged by a 0.5-density middle
    RngStream rng(6, 0);
    int m = 200;
    std::vector<Edge> e;
    for (int u = 0; u < 50; ++u)
        for (int v = m; v < m + 50; ++v) e.emplace_back(u, v);
    for (int u = 50; u < 100; ++u)
        for (int v = m + 50; v < m + 100; ++v) e.emplace_back(u, v);
    for (int u = 100; u < m; ++u)
        for (int v = m + 100; v < 2 * m; ++v)
            if (rng.unit() < 0.5) e.emplace_back(u, v);
    // cross wiring so the pair is well connected
    for (int u = 0; u < m; ++u)
        for (int v = m; v < 2 * m; ++v)
            if (rng.unit() < 0.3) e.emplace_back(u, v);
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
    Graph g = Graph::from_edges(2 * m, std::move(e));
    auto out = embed_large_trhl(g, iota_set(0, m), iota_set(m, m), Rational(1, 100), Rational(m),
                                151, -1, rng);
    REQUIRE(std::holds_alternative<TrhlEmbedding>(out));
    auto& emb = std::get<TrhlEmbedding>(out);
    CHECK(tree_longest_path(emb.shape.tree) == 151 + 2 * emb.shape.spec.h);
    check_trhl_embedding(g, iota_set(0, m), iota_set(m, m), emb, -1);
}

TEST_CASE("embed_large_trhl: even ell places all leaves on the requested side") {
    RngStream rng(7, 0);
    int m = 200;
    Graph g = random_bipartite(m, m, 0.3, rng);
    for (int side = 0; side < 2; ++side) {
        RngStream r2(8, static_cast<std::uint64_t>(side));
        auto out = embed_large_trhl(g, iota_set(0, m), iota_set(m, m), Rational(1, 100), Rational(m),
                                    150, side, r2);
        REQUIRE(std::holds_alternative<TrhlEmbedding>(out));
        check_trhl_embedding(g, iota_set(0, m), iota_set(m, m), std::get<TrhlEmbedding>(out), side);
    }
}

TEST_CASE("embed_large_trhl: empty pair fails at the path stage") {
    Graph empty = Graph::from_edges(100, {});
    RngStream rng(9, 0);
    auto out = embed_large_trhl(empty, iota_set(0, 50), iota_set(50, 50), Rational(1, 90),
                                Rational(50), 21, -1, rng);
    REQUIRE(std::holds_alternative<EmbedFailure>(out));
    auto& f = std::get<EmbedFailure>(out);
    CHECK((f.stage == "path" || f.stage == "corner-cleanup"));
}

TEST_CASE("embed_large_trhl: ell out of range rejected") {
    Graph kb = complete_bipartite(50, 50);
    RngStream rng(10, 0);
    auto out = embed_large_trhl(kb, iota_set(0, 50), iota_set(50, 50), Rational(1, 90),
                                Rational(50), 99, -1, rng);
    REQUIRE(std::holds_alternative<EmbedFailure>(out));
    CHECK(std::get<EmbedFailure>(out).stage == "precondition");
}
