#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "cyclelab/generators.hpp"
#include "cyclelab/regularity.hpp"

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

VertexSet iota_set(int from, int count) {
    VertexSet s;
    for (int i = 0; i < count; ++i) s.push_back(from + i);
    return s;
}

}  // namespace

TEST_CASE("equipartition sizes") {
    RngStream rng(1, 0);
    auto p1 = equipartition(10, 2, rng);
    CHECK(p1.clusters[0].size() == 5);
    CHECK(p1.clusters[1].size() == 5);

    auto p2 = equipartition(10, 3, rng);
    std::multiset<size_t> sizes{p2.clusters[0].size(), p2.clusters[1].size(),
                                p2.clusters[2].size()};
    CHECK(sizes == std::multiset<size_t>{3, 3, 4});

    auto p3 = equipartition(6, 6, rng);
    for (auto& c : p3.clusters) CHECK(c.size() == 1);

    for (int n : {17, 100, 1000}) {
        for (int k : {2, 3, 7, 16}) {
            auto p = equipartition(n, k, rng);
            size_t lo = static_cast<size_t>(n / k), hi = static_cast<size_t>((n + k - 1) / k);
            std::vector<char> seen(static_cast<size_t>(n), 0);
            for (auto& c : p.clusters) {
                CHECK(c.size() >= lo);
                CHECK(c.size() <= hi);
                for (int v : c) {
                    CHECK_FALSE(seen[static_cast<size_t>(v)]);
                    seen[static_cast<size_t>(v)] = 1;
                }
            }
        }
    }
    CHECK_THROWS(equipartition(5, 6, rng));
}

TEST_CASE("p_density exact values") {
    Graph kb = complete_bipartite(3, 3);
    CHECK(p_density(kb, iota_set(0, 3), iota_set(3, 3), Rational(1)) == Rational(1));
    Graph empty = Graph::from_edges(6, {});
    CHECK(p_density(empty, iota_set(0, 3), iota_set(3, 3), Rational(1, 2)) == Rational(0));
    // K_{3,3} minus one edge at p = 1/2: (8/9)/(1/2) = 16/9
    std::vector<Edge> e;
    for (int u = 0; u < 3; ++u)
        for (int v = 3; v < 6; ++v)
            if (!(u == 0 && v == 3)) e.emplace_back(u, v);
    Graph kb_minus = Graph::from_edges(6, std::move(e));
    CHECK(p_density(kb_minus, iota_set(0, 3), iota_set(3, 3), Rational(1, 2)) == Rational(16, 9));
    CHECK_THROWS(p_density(kb, {}, iota_set(3, 3), Rational(1)));
}

TEST_CASE("eps property: trivial and witness cases") {
    RngStream rng(2, 0);
    Graph kb = complete_bipartite(5, 5);
    auto v = check_eps_property(kb, iota_set(0, 5), iota_set(5, 5), Rational(1, 5), Rational(5),
                                VerdictMode::Exact, 1000000, rng);
    CHECK(v.holds);

    Graph empty = Graph::from_edges(10, {});
    auto w = check_eps_property(empty, iota_set(0, 5), iota_set(5, 5), Rational(1, 5), Rational(5),
                                VerdictMode::Exact, 1000000, rng);
    CHECK_FALSE(w.holds);
    REQUIRE(w.witness.has_value());
    CHECK(w.witness->edges == 0);
    CHECK(count_pair_edges(empty, w.witness->u1, w.witness->u2) == 0);

    // K_{5,5} minus a perfect matching at threshold size 2: still holds
    std::vector<Edge> e;
    for (int u = 0; u < 5; ++u)
        for (int v = 5; v < 10; ++v)
            if (v - 5 != u) e.emplace_back(u, v);
    Graph minus = Graph::from_edges(10, std::move(e));
    auto m = check_eps_property(minus, iota_set(0, 5), iota_set(5, 5), Rational(2, 5), Rational(5),
                                VerdictMode::Exact, 1000000, rng);
    CHECK(m.holds);
}

TEST_CASE("eps property: threshold-size-only enumeration equals all-sizes enumeration") {
    RngStream rng(3, 0);
    for (int rep = 0; rep < 30; ++rep) {
        RngStream grng = rng.substream(static_cast<std::uint64_t>(rep));
        std::vector<Edge> e;
        double p = rep % 2 == 0 ? 0.1 : 0.35;
        for (int u = 0; u < 8; ++u)
            for (int v = 8; v < 16; ++v)
                if (grng.unit() < p) e.emplace_back(u, v);
        Graph g = Graph::from_edges(16, std::move(e));
        Rational eps(1, 4), m(8);
        auto verdict = check_eps_property(g, iota_set(0, 8), iota_set(8, 8), eps, m,
                                          VerdictMode::Exact, 10000000, rng);
        // full enumeration over *all* qualifying sizes
        long long s = eps_threshold_size(eps, m);
        bool holds = true;
        for (unsigned um = 1; um < (1u << 8) && holds; ++um) {
            if (__builtin_popcount(um) < s) continue;
            for (unsigned wm = 1; wm < (1u << 8); ++wm) {
                if (__builtin_popcount(wm) < s) continue;
                VertexSet u1, u2;
                for (int i = 0; i < 8; ++i) {
                    if (um >> i & 1) u1.push_back(i);
                    if (wm >> i & 1) u2.push_back(8 + i);
                }
                if (count_pair_edges(g, u1, u2) == 0) {
                    holds = false;
                    break;
                }
            }
        }
        CHECK(verdict.holds == holds);
    }
}

TEST_CASE("eps property monotone in eps") {
    RngStream rng(4, 0);
    for (int rep = 0; rep < 20; ++rep) {
        RngStream grng = rng.substream(static_cast<std::uint64_t>(rep));
        std::vector<Edge> e;
        for (int u = 0; u < 8; ++u)
            for (int v = 8; v < 16; ++v)
                if (grng.unit() < 0.3) e.emplace_back(u, v);
        Graph g = Graph::from_edges(16, std::move(e));
        bool prev = false;
        for (Rational eps : {Rational(1, 8), Rational(1, 4), Rational(3, 8), Rational(1, 2)}) {
            auto v = check_eps_property(g, iota_set(0, 8), iota_set(8, 8), eps, Rational(8),
                                        VerdictMode::Exact, 10000000, rng);
            if (prev) CHECK(v.holds);  // held at smaller eps => holds at larger
            prev = v.holds;
        }
    }
}

TEST_CASE("eps regular pair: trivial cases") {
    RngStream rng(5, 0);
    Graph kb = complete_bipartite(4, 4);
    auto v = check_eps_regular_pair(kb, iota_set(0, 4), iota_set(4, 4), Rational(3, 10),
                                    Rational(1), VerdictMode::Exact, 10000000, rng);
    CHECK(v.holds);
    Graph empty = Graph::from_edges(8, {});
    auto w = check_eps_regular_pair(empty, iota_set(0, 4), iota_set(4, 4), Rational(3, 10),
                                    Rational(1), VerdictMode::Exact, 10000000, rng);
    CHECK(w.holds);
}

TEST_CASE("eps regular pair: planted irregularity is caught with a reproducible witness") {
    // left half {0,1} fully wired to the right, left half {2,3} empty
    std::vector<Edge> e;
    for (int u = 0; u < 2; ++u)
        for (int v = 4; v < 8; ++v) e.emplace_back(u, v);
    Graph g = Graph::from_edges(8, std::move(e));
    RngStream rng(6, 0);
    auto v = check_eps_regular_pair(g, iota_set(0, 4), iota_set(4, 4), Rational(3, 10), Rational(1),
                                    VerdictMode::Exact, 10000000, rng);
    CHECK_FALSE(v.holds);
    REQUIRE(v.witness.has_value());
    Rational base = p_density(g, iota_set(0, 4), iota_set(4, 4), Rational(1));
    Rational dev = p_density(g, v.witness->u1, v.witness->u2, Rational(1));
    Rational diff = dev >= base ? dev - base : base - dev;
    CHECK(diff > Rational(3, 10));
}

TEST_CASE("epsilon graph and reduced graph on planted instances") {
    RngStream rng(7, 0);
    Graph k24 = complete(24);
    auto pi = equipartition(24, 4, rng);
    auto s = build_epsilon_graph(k24, pi, Rational(1, 3), VerdictMode::Exact, 10000000, rng);
    CHECK(s.s.m() == binom2(4));
    auto r = build_reduced_graph(k24, pi, Rational(1, 4), Rational(1, 3), Rational(1),
                                 VerdictMode::Sampled, 300, rng);
    CHECK(r.r.m() == binom2(4));

    Graph empty = Graph::from_edges(24, {});
    auto s0 = build_epsilon_graph(empty, pi, Rational(1, 3), VerdictMode::Exact, 10000000, rng);
    CHECK(s0.s.m() == 0);

    // planted: k=4 clusters of 6, cross pairs wired with probability 0.9
    RngStream grng(8, 0);
    std::vector<Edge> e;
    auto pi2 = equipartition(24, 4, rng);
    for (int u = 0; u < 24; ++u)
        for (int v = u + 1; v < 24; ++v)
            if (pi2.assignment[u] != pi2.assignment[v] && grng.unit() < 0.9) e.emplace_back(u, v);
    Graph planted = Graph::from_edges(24, std::move(e));
    auto s2 = build_epsilon_graph(planted, pi2, Rational(1, 3), VerdictMode::Exact, 10000000, rng);
    CHECK(s2.s.m() == binom2(4));
}

TEST_CASE("derived-from-R mode requires rho > eps and copies R") {
    RngStream rng(9, 0);
    Graph k20 = complete(20);
    auto pi = equipartition(20, 4, rng);
    auto r = build_reduced_graph(k20, pi, Rational(1, 5), Rational(1, 50), Rational(1),
                                 VerdictMode::Sampled, 200, rng);
    auto s = epsilon_graph_from_reduced(r);
    CHECK(s.mode == EpsGraphMode::DerivedFromR);
    CHECK(s.s == r.r);

    ReducedGraph bad = r;
    bad.eps = Rational(1, 3);
    bad.rho = Rational(1, 4);
    CHECK_THROWS(epsilon_graph_from_reduced(bad));
}

TEST_CASE("R-edges are S-edges on planted dense regular pairs") {
    RngStream rng(10, 0);
    RngStream grng(11, 0);
    std::vector<Edge> e;
    auto pi = equipartition(32, 4, rng);
    for (int u = 0; u < 32; ++u)
        for (int v = u + 1; v < 32; ++v)
            if (pi.assignment[u] != pi.assignment[v] && grng.unit() < 0.85) e.emplace_back(u, v);
    Graph g = Graph::from_edges(32, std::move(e));
    auto r = build_reduced_graph(g, pi, Rational(1, 2), Rational(1, 4), Rational(1),
                                 VerdictMode::Exact, 4000000, rng);
    auto s = build_epsilon_graph(g, pi, Rational(1, 4), VerdictMode::Exact, 4000000, rng);
    for (auto [i, j] : r.r.edges()) CHECK(s.s.has_edge(i, j));
}

TEST_CASE("reduced edge bound check") {
    RngStream rng(12, 0);
    auto pi = equipartition(40, 5, rng);
    Graph k40 = complete(40);
    auto r = build_reduced_graph(k40, pi, Rational(1, 4), Rational(1, 3), Rational(1),
                                 VerdictMode::Sampled, 100, rng);
    CHECK(reduced_edge_bound_check(r, Rational(1, 2), Rational(1, 2)));  // e(R)=10 = C(5,2)
    ReducedGraph empty_r;
    empty_r.r = Graph::from_edges(5, {});
    CHECK_FALSE(reduced_edge_bound_check(empty_r, Rational(0), Rational(1, 10)));
    // k=20, e(R)=120, x=0.5, tau=0.1: 120 >= 0.6*190
    ReducedGraph r20;
    std::vector<Edge> re;
    for (int u = 0; u < 20 && re.size() < 120; ++u)
        for (int v = u + 1; v < 20 && re.size() < 120; ++v) re.emplace_back(u, v);
    r20.r = Graph::from_edges(20, std::move(re));
    CHECK(reduced_edge_bound_check(r20, Rational(1, 2), Rational(1, 10)));
}
