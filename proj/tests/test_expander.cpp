#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cyclelab/expander.hpp"
#include "cyclelab/generators.hpp"

using namespace cyclelab;

namespace {

Graph complete_bipartite(int a, int b) {
    std::vector<Edge> e;
    for (int u = 0; u < a; ++u)
        for (int v = a; v < a + b; ++v) e.emplace_back(u, v);
    return Graph::from_edges(a + b, std::move(e));
}

Graph complete(int n) {
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return Graph::from_edges(n, std::move(e));
}

Graph cycle(int n) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, std::move(e));
}

Graph path_graph(int n) {
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph::from_edges(n, std::move(e));
}

VertexSet iota_set(int from, int count) {
    VertexSet s;
    for (int i = 0; i < count; ++i) s.push_back(from + i);
    return s;
}

}  // namespace

TEST_CASE("bipartite expander checks") {
    RngStream rng(1, 0);
    Graph kb = complete_bipartite(8, 8);
    auto v = check_bipartite_expander(kb, iota_set(0, 8), iota_set(8, 8),
                                      ExpanderParams{Rational(4), Rational(2)}, VerdictMode::Exact,
                                      100000, rng);
    CHECK(v.holds);

    // perfect matching: singletons already fail 2-expansion
    std::vector<Edge> me;
    for (int i = 0; i < 6; ++i) me.emplace_back(i, 6 + i);
    Graph match = Graph::from_edges(12, std::move(me));
    auto w = check_bipartite_expander(match, iota_set(0, 6), iota_set(6, 6),
                                      ExpanderParams{Rational(3), Rational(2)}, VerdictMode::Exact,
                                      100000, rng);
    CHECK_FALSE(w.holds);
    REQUIRE(w.witness.has_value());
    CHECK(w.witness->x.size() == 1);
    CHECK(w.witness->gamma_size == 1);

    // C_8 as a 4+4 pair: two sides {0,2,4,6} and {1,3,5,7}
    Graph c8 = cycle(8);
    auto c = check_bipartite_expander(c8, {0, 2, 4, 6}, {1, 3, 5, 7},
                                      ExpanderParams{Rational(2), Rational(3, 2)},
                                      VerdictMode::Exact, 100000, rng);
    CHECK(c.holds);
}

TEST_CASE("cleanup: complete pair succeeds with nothing removed") {
    Graph kb = complete_bipartite(20, 20);
    auto trace = cleanup_to_expander(kb, iota_set(0, 20), iota_set(20, 20), Rational(1, 10),
                                     Rational(20), Rational(1, 10), Rational(4));
    CHECK(trace.success);
    CHECK(trace.steps.empty());
    CHECK(trace.u1.size() == 20);
    CHECK(trace.final_check.holds);
}

TEST_CASE("cleanup: empty pair emits an exactly-verified eps witness") {
    Graph empty = Graph::from_edges(40, {});
    auto trace = cleanup_to_expander(empty, iota_set(0, 20), iota_set(20, 20), Rational(1, 10),
                                     Rational(20), Rational(1, 10), Rational(4));
    CHECK_FALSE(trace.success);
    REQUIRE(trace.eps_witness.has_value());
    const auto& w = *trace.eps_witness;
    CHECK(Rational(static_cast<long long>(w.a1.size())) >= Rational(2));  // >= eps*m = 2
    CHECK(Rational(static_cast<long long>(w.a2.size())) >= Rational(2));
    CHECK(count_pair_edges(empty, w.a1, w.a2) == 0);
}

TEST_CASE("cleanup: planted hole is removed and the rest verifies") {
    // K_{20,20} with vertices 0..3 (left) disconnected from the right except
    // for one weak neighbor each: they violate 2-expansion and get trimmed
    std::vector<Edge> e;
    for (int u = 0; u < 20; ++u)
        for (int v = 20; v < 40; ++v) {
            if (u < 4) continue;
            e.emplace_back(u, v);
        }
    for (int u = 0; u < 4; ++u) e.emplace_back(u, 20 + u);
    Graph g = Graph::from_edges(40, std::move(e));
    auto trace = cleanup_to_expander(g, iota_set(0, 20), iota_set(20, 20), Rational(1, 5),
                                     Rational(20), Rational(1, 10), Rational(2));
    CHECK(trace.success);
    CHECK_FALSE(trace.steps.empty());
    CHECK(trace.final_check.holds);
    CHECK(trace.u1.size() >= 16);
    // removed vertices are exactly the planted weak ones
    for (const auto& step : trace.steps)
        for (int v : step.removed) CHECK(v < 4);
}

TEST_CASE("corollary params") {
    auto c1 = corollary_params(Rational(1, 100), 1);
    CHECK(c1.bipartite.B == Rational(6, 100));
    CHECK(c1.bipartite.ell == Rational(27, 2));  // 1/(8*0.01)+1 = 13.5
    CHECK(c1.plain.B == Rational(12, 100));
    CHECK(c1.plain.ell == Rational(100, 16));  // 6.25

    auto c2 = corollary_params(Rational(1, 100), 2);
    CHECK(c2.bipartite.B == Rational(1, 10));
    CHECK(c2.bipartite.ell == Rational(9));
    CHECK(c2.plain.B == Rational(1, 5));
    CHECK(c2.plain.ell == Rational(4));

    // the remark's halving: (A, ell+1)-bipartite => (2A, ell/2)-plain
    CHECK(c1.plain.B == Rational(2) * c1.bipartite.B);
    CHECK(c1.plain.ell == (c1.bipartite.ell - Rational(1)) / Rational(2));

    CHECK_THROWS(corollary_params(Rational(1, 50), 1));  // eps >= 1/85
    CHECK_THROWS(corollary_params(Rational(1, 100), 3));
}

namespace {

void check_dfs_partition(const Graph& g, const DfsPartition& p) {
    CHECK(p.s_set.size() == p.t_set.size());
    CHECK(count_pair_edges(g, p.s_set, p.t_set) == 0);
    CHECK(p.s_set.size() + p.t_set.size() + p.path.size() == static_cast<size_t>(g.n()));
    if (!p.path.empty()) CHECK(verify_path(g, p.path).ok);
    // disjointness
    std::vector<char> seen(g.n(), 0);
    for (const auto* s : {&p.s_set, &p.t_set})
        for (int v : *s) {
            CHECK_FALSE(seen[v]);
            seen[v] = 1;
        }
    for (int v : p.path) {
        CHECK_FALSE(seen[v]);
        seen[v] = 1;
    }
}

}  // namespace

TEST_CASE("dfs partition: canonical cases") {
    Graph empty = Graph::from_edges(4, {});
    auto p = dfs_path_partition(empty);
    CHECK(p.path.empty());
    CHECK(p.s_set.size() == 2);
    CHECK(p.t_set.size() == 2);

    Graph k6 = complete(6);
    auto pk = dfs_path_partition(k6);
    CHECK(pk.s_set.empty());
    CHECK(pk.t_set.empty());
    CHECK(pk.path.size() == 6);
    check_dfs_partition(k6, pk);

    Graph star = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
    check_dfs_partition(star, dfs_path_partition(star));
}

TEST_CASE("dfs partition invariants over random graphs") {
    RngStream rng(2, 0);
    for (double p : {0.05, 0.2, 0.8}) {
        for (int rep = 0; rep < 120; ++rep) {
            RngStream grng = rng.substream(static_cast<std::uint64_t>(rep * 10 + p * 100));
            int n = 2 + static_cast<int>(grng.below(49));
            Graph g = sample_gnp(n, p, grng);
            RngStream drng = grng.substream(1);
            check_dfs_partition(g, dfs_path_partition(g, &drng));
            check_dfs_partition(g, dfs_path_partition(g));  // deterministic order too
        }
    }
}

TEST_CASE("longest path greedy") {
    RngStream rng(3, 0);
    Graph pg = path_graph(30);
    auto p = longest_path_greedy(pg, rng, 4);
    CHECK(p.size() == 30);  // double sweep finds the whole path
    CHECK(verify_path(pg, p).ok);

    Graph c = cycle(24);
    auto pc = longest_path_greedy(c, rng, 4);
    CHECK(pc.size() == 24);  // n-1 edges
    CHECK(verify_path(c, pc).ok);

    Graph g = sample_gnp(300, 8.0 / 300, rng);
    auto pr = longest_path_greedy(g, rng, 10);
    CHECK(verify_path(g, pr).ok);
    CHECK(pr.size() >= 150);  // regression baseline, not ground truth
}
