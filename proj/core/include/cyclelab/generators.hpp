#pragma once

#include <optional>

#include "cyclelab/graph.hpp"
#include "cyclelab/rational.hpp"
#include "cyclelab/rng.hpp"

namespace cyclelab {

enum class VerdictMode { Exact, Sampled };

inline const char* mode_name(VerdictMode m) { return m == VerdictMode::Exact ? "exact" : "sampled"; }

// G(n,p): every pair independently with probability p, geometric skipping
// over the linearized pair index.
Graph sample_gnp(int n, double p, RngStream& rng);

// G(p): keep each edge of g independently with probability p.
Graph keep_each_edge(const Graph& g, double p, RngStream& rng);

struct UniformityWitness {
    VertexSet u, w;
    long long edges = 0;
    Rational bound;  // (1+eta) * p * |U| * |W|
};

struct UniformityVerdict {
    bool holds = true;
    VerdictMode mode = VerdictMode::Exact;
    long long pairs_checked = 0;
    std::optional<UniformityWitness> witness;
};

// (p,eta)-upper-uniformity per Def: all disjoint U,W with |U|,|W| >= eta*n
// satisfy e(U,W) <= (1+eta) p |U||W|. Exact mode enumerates every qualifying
// unordered pair (feasible only at tiny n, guarded by `budget`); sampled mode
// draws `budget` random qualifying pairs. Witnesses are exact either way.
UniformityVerdict check_upper_uniform(const Graph& g, Rational p, Rational eta, VerdictMode mode,
                                      long long budget, RngStream& rng);

// Second adjacency eigenvalue (largest absolute value among non-principal
// ones) of a d-regular graph, via power iteration deflated against the
// all-ones vector. Two runs on opposite spectral shifts capture the most
// positive and most negative eigenvalue; returns the max absolute value.
double estimate_lambda(const Graph& g);

struct MixingWitness {
    VertexSet a, b;
    long long edges = 0;
    double expected = 0;
    double slack = 0;  // lambda * sqrt(|A||B|)
};

struct MixingVerdict {
    bool holds = true;
    VerdictMode mode = VerdictMode::Exact;
    long long pairs_checked = 0;
    std::optional<MixingWitness> witness;
};

// Expander mixing bound |e(A,B) - (d/n)|A||B|| <= lambda sqrt(|A||B|) over
// disjoint pairs; exact for n <= 16, sampled with `budget` draws otherwise.
MixingVerdict mixing_lemma_check(const Graph& g, int d, double lambda, long long budget,
                                 RngStream& rng);

// Configuration-model d-regular graph: repeated stub pairing, discarding
// loops/multi-edges, with full restarts on dead ends (uniform-ish, not
// exactly uniform). Throws after `restart_cap` failed restarts.
Graph random_regular(int n, int d, RngStream& rng, int restart_cap = 200);

// Degree of a regular graph, or nullopt.
std::optional<int> regular_degree(const Graph& g);

}  // namespace cyclelab
