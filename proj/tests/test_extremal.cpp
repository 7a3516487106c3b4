#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cyclelab/extremal.hpp"
#include "cyclelab/generators.hpp"
#include "cyclelab/oracle.hpp"

using namespace cyclelab;

namespace {

// Independent reference: the displayed case formulas, written directly.
long long ref_g_num(long long n, long long t, const Rational& gamma) {
    auto c2 = [](long long x) { return x < 2 ? 0LL : x * (x - 1) / 2; };
    if (t % 2 == 1) {
        if (2 * t >= n + 3) return c2(t - 1) + c2(n - t + 2) + 1;
        return n * n / 4 + 1;
    }
    if (2 * t >= n + 3) return c2(t - 1) + c2(n - t + 2) + 1;
    // t >= gamma*n  <=>  t*gamma.den >= gamma.num*n
    if (static_cast<__int128>(t) * gamma.den >= static_cast<__int128>(gamma.num) * n)
        return n * (t - 1) / 2 + 1;
    return 0;
}

long long ref_w_num(long long n, long long t) {
    auto c2 = [](long long x) { return x < 2 ? 0LL : x * (x - 1) / 2; };
    if (2 * t >= n + 3) return c2(t - 1) + c2(n - t + 2) + 1;
    return n * n / 4 + 1;
}

}  // namespace

TEST_CASE("g_function worked examples") {
    CHECK(g_function({10, 7, Rational(1, 20)}).num == 26);
    CHECK(g_function({10, 7, Rational(1, 20)}).den == 45);
    CHECK(g_function({20, 5, Rational(1, 20)}).num == 101);
    CHECK(g_function({20, 5, Rational(1, 20)}).den == 190);
    CHECK(g_function({20, 6, Rational(1, 2)}).num == 0);
    CHECK(g_function({20, 10, Rational(1, 4)}).num == 91);
}

TEST_CASE("woodall threshold worked examples") {
    auto w = woodall_threshold(8, 12);
    CHECK(w.num == 37);
    CHECK(w.den == 66);
    auto w2 = woodall_threshold(5, 20);
    CHECK(w2.num == 101);
    CHECK(w2.num == g_function({20, 5, Rational(1, 20)}).num);
    // both branches exceed half of C(n,2)
    for (long long n = 5; n <= 60; ++n)
        for (long long t = 3; t <= n; t += 2) {
            auto v = woodall_threshold(t, n);
            CHECK(2 * v.num > v.den);
        }
}

TEST_CASE("erdos-gallai bounds") {
    CHECK(eg_path_bound(3, 10) == 10);
    CHECK(eg_path_bound(1, 7) == 0);
    CHECK(eg_path_bound(6, 6) == 15);
    CHECK(eg_cycle_bound(4, 6) == 7);
    CHECK(eg_cycle_bound(3, 5) == 4);
    for (long long n = 3; n <= 30; ++n) CHECK(eg_cycle_bound(n, n) == (n - 1) * (n - 1) / 2);
}

TEST_CASE("full-grid agreement with direct substitution") {
    for (long long n = 3; n <= 200; ++n) {
        for (long long t = 3; t <= n; ++t) {
            for (Rational gamma : {Rational(1, 20), Rational(1, 5)}) {
                auto g = g_function({n, t, gamma});
                CHECK(g.num == ref_g_num(n, t, gamma));
                CHECK(g.den == binom2(n));
                auto w = woodall_threshold(t, n);
                CHECK(w.num == ref_w_num(n, t));
                if (t % 2 == 1) CHECK(w.num == g.num);
            }
        }
    }
}

TEST_CASE("g monotonicity (remark-style sweep)") {
    for (long long n = 10; n <= 120; n += 11) {
        for (Rational gamma : {Rational(1, 20), Rational(1, 5)}) {
            auto g = [&](long long t) { return g_function({n, t, gamma}).value(); };
            for (long long t = 2; 4 * t < n + 3 && 2 * t + 2 <= n; ++t) {
                if (2 * t + 1 >= 3) {
                    CHECK(g(2 * t + 1) >= g(2 * t));
                    if (2 * t - 1 >= 3) CHECK(g(2 * t + 1) >= g(2 * t - 1));
                }
                CHECK(g(2 * t + 2) >= g(2 * t));
            }
            for (long long t = (n + 3) / 2 + 1; t + 1 <= n; ++t) CHECK(g(t + 1) >= g(t));
        }
    }
}

TEST_CASE("woodall graph construction") {
    Graph w = build_woodall_graph(12, 8);
    CHECK(w.n() == 12);
    CHECK(w.m() == binom2(7) + binom2(6));
    CHECK(cycle_spectrum_exact(w).longest_cycle() == 7);

    Graph w2 = build_woodall_graph(5, 4);
    CHECK(w2.m() == 6);
    CHECK(cycle_spectrum_exact(w2).longest_cycle() == 3);

    Graph w3 = build_woodall_graph(8, 8);  // t = n: pendant K_2
    CHECK(w3.min_degree() == 1);
    CHECK(cycle_spectrum_exact(w3).longest_cycle() == 7);

    CHECK_THROWS(build_woodall_graph(12, 5));
}

TEST_CASE("bipartite extremal and clique blocks") {
    Graph b7 = build_bipartite_extremal(7);
    CHECK(b7.m() == 12);
    for (int l : cycle_spectrum_exact(b7).present) CHECK(l % 2 == 0);

    Graph b4 = build_bipartite_extremal(4);
    CHECK(b4.m() == 4);
    CHECK(cycle_spectrum_exact(b4).present == std::set<int>{4});

    Graph blocks = build_clique_blocks(9, 3);
    CHECK(blocks.m() == 9);
    CHECK(cycle_spectrum_exact(blocks).longest_path == 2);

    Graph rem = build_clique_blocks(11, 4);  // two K_4 plus K_3
    CHECK(rem.m() == 2 * binom2(4) + binom2(3));
}

TEST_CASE("overlay lower bound: complete host meets the bound with equality") {
    Graph k10 = build_clique_blocks(10, 10);  // K_10
    RngStream rng(5, 0);
    auto res = overlay_lower_bound(k10, 7, 5, rng);
    CHECK(res.kept == woodall_threshold(7, 10).num - 1);  // = ex(10, C_7)
    CHECK(res.bound_met);
    CHECK(cycle_spectrum_exact(res.subgraph).present.count(7) == 0);
}

TEST_CASE("overlay lower bound: empty graph") {
    Graph empty = Graph::from_edges(10, {});
    RngStream rng(6, 0);
    auto res = overlay_lower_bound(empty, 7, 3, rng);
    CHECK(res.kept == 0);
    CHECK(res.bound_met);
}

TEST_CASE("overlay lower bound on random hosts is C_t-free and usually meets the bound") {
    RngStream rng(7, 0);
    int met = 0;
    for (int inst = 0; inst < 20; ++inst) {
        RngStream grng = rng.substream(inst);
        Graph g = sample_gnp(12, 0.5, grng);
        auto res = overlay_lower_bound(g, 9, 200, rng.substream(1000 + inst));
        CHECK_FALSE(has_cycle_of_length(res.subgraph, 9));
        if (res.bound_met) ++met;
    }
    CHECK(met >= 18);
    CHECK_THROWS(overlay_lower_bound(sample_gnp(12, 0.5, rng), 6, 5, rng));  // even short t
}
