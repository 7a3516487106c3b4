#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "cyclelab/generators.hpp"
#include "cyclelab/graph.hpp"
#include "cyclelab/rng.hpp"

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

Graph path(int n) {
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph::from_edges(n, std::move(e));
}

}  // namespace

TEST_CASE("construction rejects bad input") {
    CHECK_THROWS(Graph::from_edges(3, {{0, 0}}));
    CHECK_THROWS(Graph::from_edges(3, {{0, 1}, {1, 0}}));
    CHECK_THROWS(Graph::from_edges(2, {{0, 2}}));
}

TEST_CASE("degree sum equals twice the edge count") {
    RngStream rng(7, 0);
    for (int rep = 0; rep < 50; ++rep) {
        Graph g = sample_gnp(40, 0.2, rng);
        long long sum = 0;
        for (int v = 0; v < g.n(); ++v) sum += g.degree(v);
        CHECK(sum == 2 * g.m());
    }
}

TEST_CASE("verify_cycle accepts and rejects per the contract") {
    Graph k3 = complete(3);
    CHECK(verify_cycle(k3, {0, 1, 2}, 3).ok);

    Graph p3 = path(3);
    auto rej = verify_cycle(p3, {0, 1, 2}, 3);
    CHECK_FALSE(rej.ok);
    CHECK(rej.reason.find("missing edge") != std::string::npos);

    Graph c6 = cycle(6);
    auto mism = verify_cycle(c6, {0, 1, 2, 3, 4, 5}, 5);
    CHECK_FALSE(mism.ok);
    CHECK(mism.reason.find("length mismatch") != std::string::npos);

    auto rep = verify_cycle(complete(4), {0, 1, 0, 2}, 4);
    CHECK_FALSE(rep.ok);
    CHECK(rep.reason.find("repeated") != std::string::npos);
}

TEST_CASE("accepted cycle induces min degree >= 2") {
    RngStream rng(11, 0);
    for (int rep = 0; rep < 30; ++rep) {
        Graph g = sample_gnp(12, 0.5, rng);
        // try the identity order as a candidate cycle; when accepted, check
        VertexSeq seq;
        for (int i = 0; i < g.n(); ++i) seq.push_back(i);
        auto res = verify_cycle(g, seq, g.n());
        if (res.ok) {
            auto sub = induced_subgraph(g, seq);
            CHECK(sub.graph.min_degree() >= 2);
        }
    }
    CHECK(verify_cycle(cycle(8), {0, 1, 2, 3, 4, 5, 6, 7}, 8).ok);
}

TEST_CASE("verify_path") {
    CHECK(verify_path(Graph::from_edges(1, {}), {0}).ok);
    CHECK(verify_path(Graph::from_edges(1, {}), {0}).length == 0);
    Graph k4 = complete(4);
    auto ok = verify_path(k4, {0, 1, 2, 3});
    CHECK(ok.ok);
    CHECK(ok.length == 3);
    CHECK_FALSE(verify_path(k4, {0, 1, 0}).ok);
}

TEST_CASE("neighborhood excludes the set itself") {
    Graph star = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(neighborhood(star, {0}) == VertexSet{1, 2, 3});
    Graph k4 = complete(4);
    CHECK(neighborhood(k4, {0, 1}) == VertexSet{2, 3});
    Graph empty = Graph::from_edges(5, {});
    CHECK(neighborhood(empty, {0, 3}).empty());

    RngStream rng(3, 0);
    for (int rep = 0; rep < 20; ++rep) {
        Graph g = sample_gnp(15, 0.3, rng);
        VertexSet x{1, 4, 7};
        auto nb = neighborhood(g, x);
        for (int v : x) CHECK(std::find(nb.begin(), nb.end(), v) == nb.end());
    }
}

TEST_CASE("induced subgraph and relabeling") {
    Graph k5 = complete(5);
    auto sub = induced_subgraph(k5, {1, 3, 4});
    CHECK(sub.graph.n() == 3);
    CHECK(sub.graph.m() == 3);
    CHECK(sub.to_host == VertexSet{1, 3, 4});

    Graph c6 = cycle(6);
    auto alt = induced_subgraph(c6, {0, 2, 4});
    CHECK(alt.graph.m() == 0);

    auto whole = induced_subgraph(c6, {0, 1, 2, 3, 4, 5});
    CHECK(whole.graph == c6);
}

TEST_CASE("count_pair_edges basics and the partition identity") {
    Graph k33 = Graph::from_edges(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5},
                                      {2, 3}, {2, 4}, {2, 5}});
    CHECK(count_pair_edges(k33, {0, 1, 2}, {3, 4, 5}) == 9);
    CHECK(count_pair_edges(Graph::from_edges(4, {}), {0}, {1}) == 0);
    Graph c4 = cycle(4);
    CHECK(count_pair_edges(c4, {0, 2}, {1, 3}) == 4);
    CHECK_THROWS(count_pair_edges(c4, {0, 1}, {1, 2}));

    RngStream rng(5, 0);
    for (int rep = 0; rep < 40; ++rep) {
        Graph g = sample_gnp(20, 0.3, rng);
        VertexSet u, uc;
        for (int v = 0; v < g.n(); ++v) (rng.below(2) ? u : uc).push_back(v);
        long long inside = induced_subgraph(g, u).graph.m();
        long long outside = induced_subgraph(g, uc).graph.m();
        CHECK(inside + outside + count_pair_edges(g, u, uc) == g.m());
    }
}

TEST_CASE("text format round trip and load errors") {
    RngStream rng(9, 0);
    Graph g = sample_gnp(25, 0.2, rng);
    std::stringstream ss;
    g.save(ss);
    Graph h = Graph::load(ss);
    CHECK(g == h);

    std::stringstream bad1("3 1\n2 2\n");
    CHECK_THROWS(Graph::load(bad1));
    std::stringstream bad2("3 2\n0 1\n0 1\n");
    CHECK_THROWS(Graph::load(bad2));
    std::stringstream bad3("3 1\n1 0\n");  // requires u < v
    CHECK_THROWS(Graph::load(bad3));
}

TEST_CASE("bipartite pair view restricts to cross edges") {
    Graph g = Graph::from_edges(5, {{0, 1}, {0, 3}, {1, 3}, {2, 3}, {3, 4}});
    BipartitePair pair(g, {0, 1}, {3, 4});
    CHECK(pair.cross_neighbors(0) == std::vector<int>{3});
    CHECK(pair.cross_neighbors(3) == std::vector<int>{0, 1});
    CHECK(pair.cross_edges() == 2);  // 0-3 and 1-3; 3-4 is same-side
    CHECK(pair.side_of(2) == -1);
}
