#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cyclelab/extremal.hpp"
#include "cyclelab/generators.hpp"
#include "cyclelab/oracle.hpp"

using namespace cyclelab;

namespace {

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

}  // namespace

TEST_CASE("spectrum of canonical graphs") {
    auto c7 = cycle_spectrum_exact(cycle(7));
    CHECK(c7.present == std::set<int>{7});
    CHECK(c7.longest_path == 6);

    auto k5 = cycle_spectrum_exact(complete(5));
    CHECK(k5.present == std::set<int>{3, 4, 5});

    for (int n = 4; n <= 10; ++n) {
        auto kn = cycle_spectrum_exact(complete(n));
        std::set<int> want;
        for (int l = 3; l <= n; ++l) want.insert(l);
        CHECK(kn.present == want);
        CHECK(kn.longest_path == n - 1);
    }
}

TEST_CASE("woodall construction certified by the oracle") {
    Graph w = build_woodall_graph(12, 8);
    CHECK(w.m() == 36);
    CHECK(cycle_spectrum_exact(w).longest_cycle() == 7);
}

TEST_CASE("has_cycle_of_length consistency") {
    Graph c9 = cycle(9);
    CHECK(has_cycle_of_length(c9, 9));
    CHECK_FALSE(has_cycle_of_length(c9, 8));
    CHECK_FALSE(has_cycle_of_length(build_bipartite_extremal(10), 5));
    CHECK(longest_cycle_exact(complete(6)) == 6);
}

TEST_CASE("dual-oracle agreement on random instances") {
    RngStream rng(42, 0);
    for (int rep = 0; rep < 60; ++rep) {
        Graph g = sample_gnp(10, 0.4, rng);
        CHECK(cycle_spectrum_exact(g) == cycle_spectrum_dfs(g));
    }
    for (int rep = 0; rep < 20; ++rep) {
        Graph g = sample_gnp(12, 0.3, rng);
        CHECK(cycle_spectrum_exact(g) == cycle_spectrum_dfs(g));
    }
}

TEST_CASE("spectrum monotone under edge addition") {
    RngStream rng(43, 0);
    for (int rep = 0; rep < 50; ++rep) {
        Graph g = sample_gnp(10, 0.3, rng);
        auto before = cycle_spectrum_exact(g);
        // add one absent edge
        int u = -1, v = -1;
        for (int a = 0; a < g.n() && u < 0; ++a)
            for (int b = a + 1; b < g.n() && u < 0; ++b)
                if (!g.has_edge(a, b)) {
                    u = a;
                    v = b;
                }
        if (u < 0) continue;
        std::vector<Edge> e(g.edges());
        e.emplace_back(u, v);
        auto after = cycle_spectrum_exact(Graph::from_edges(g.n(), std::move(e)));
        for (int l : before.present) CHECK(after.present.count(l) == 1);
        CHECK(after.longest_path >= before.longest_path);
    }
}

TEST_CASE("find_cycle_exact returns a verified cycle") {
    RngStream rng(44, 0);
    for (int rep = 0; rep < 20; ++rep) {
        Graph g = sample_gnp(11, 0.4, rng);
        auto spec = cycle_spectrum_exact(g);
        for (int l : spec.present) {
            VertexSeq seq;
            REQUIRE(find_cycle_exact(g, l, seq));
            CHECK(verify_cycle(g, seq, l).ok);
        }
    }
}

TEST_CASE("ex_check_small certifies both construction regimes") {
    auto w = ex_check_small(8, 6);
    CHECK(w.edges == 16);  // C(5,2)+C(4,2)
    CHECK(w.edges_match);
    CHECK(w.ct_free);

    auto b = ex_check_small(7, 5);
    CHECK(b.edges == 12);  // floor(49/4)
    CHECK(b.edges_match);
    CHECK(b.ct_free);

    auto e = ex_check_small(6, 5);
    CHECK(e.edges_match);
    CHECK(e.ct_free);

    CHECK_THROWS(ex_check_small(20, 6));
}

TEST_CASE("caps enforced") {
    CHECK_THROWS(cycle_spectrum_exact(complete(15)));
    CHECK_THROWS(cycle_spectrum_dfs(complete(13)));
}
