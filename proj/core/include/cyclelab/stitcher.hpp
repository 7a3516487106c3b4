#pragma once

#include <chrono>
#include <optional>
#include <set>
#include <string>

#include "cyclelab/embedder.hpp"
#include "cyclelab/graph.hpp"
#include "cyclelab/rational.hpp"
#include "cyclelab/regularity.hpp"
#include "cyclelab/rng.hpp"

namespace cyclelab {

// Exact substructure search on small graphs (cluster graphs, k <= 20):
// longest path and cycle lengths by DP over (subset, endpoint).
class SGraphIndex {
public:
    explicit SGraphIndex(const Graph& s);
    int longest_path_length() const { return longest_len_; }  // edges
    VertexSeq longest_path() const { return longest_path_; }
    const std::set<int>& cycle_lengths() const { return cycle_lengths_; }
    bool has_cycle_of_length(int b) const { return cycle_lengths_.count(b) > 0; }
    // an explicit cycle of length b, empty if none
    VertexSeq cycle_of_length(int b) const;

private:
    const Graph* s_;
    int longest_len_ = 0;
    VertexSeq longest_path_;
    std::set<int> cycle_lengths_;
};

struct HostRegion {
    int cluster = -1;
    int half = -1;  // -1 whole cluster, 0/1 the two halves of a split cluster
};

struct TreeJob {
    HostRegion region_a, region_b;
    TreeSpec spec;
    int leaf_side = -1;  // -1 free (odd ell); 0 both leaf sets in region_a, 1 in region_b
};

struct PlanStep {
    int job = 0;
    int enter_copy = 0;  // 0 = copy A, 1 = copy B; the traversal exits at 1 - enter_copy
};

// Executable recipe produced by the planners: a cyclic job traversal whose
// bookkeeping sums to exactly t before any host work.
struct StitchPlan {
    long long t = 0;
    int b = 0;          // path/cycle length in S
    bool item1 = true;  // true: even-cycle branch, false: odd-cycle branch
    std::string regime; // "A-small-t", "B-single-pair", "C-two-pairs", "D-split-chain", "odd-chain"
    std::vector<int> cluster_seq;
    int r = 2, h = 0;
    std::vector<TreeJob> jobs;
    std::vector<PlanStep> order;
    bool odd_vertex_close = false;
    int vb_cluster = -1;
    long long planned_total = 0;
};

// planned cycle length from the bookkeeping alone
long long plan_total(const StitchPlan& plan);

// Even-cycle branch: s_path is a path in S of odd length b (b+1 clusters).
// Throws when t/b/parity fall outside the branch's windows; eps above the
// 1/85 tree regime is clamped for the embedding math.
StitchPlan plan_even_cycle(const std::vector<int>& s_path, long long t, Rational eps, Rational m,
                           int k);

// Odd-cycle branch: s_cycle is an odd cycle in S (b clusters).
StitchPlan plan_odd_cycle(const std::vector<int>& s_cycle, long long t, Rational eps, Rational m,
                          int k);

struct StageFailure {
    std::string stage;  // "embed", "connector", "closing-vertex", "path", ...
    std::string detail;
    int job = -1;
    // when a connector or closing search came up empty, the exact leaf-image
    // sets involved (a checkable eps-property counterexample candidate)
    VertexSet leaf_set_a, leaf_set_b;
};

struct CycleCertificate {
    VertexSeq cycle;
    long long t = 0;
    StitchPlan plan;
    std::vector<std::string> trace;
};

struct ExecOptions {
    int tree_retries = 2;
    std::optional<std::chrono::steady_clock::time_point> deadline;
};

struct ExecResult {
    std::optional<CycleCertificate> certificate;
    std::optional<StageFailure> failure;
    bool ok() const { return certificate.has_value(); }
};

ExecResult execute_plan(const Graph& g0, const ClusterPartition& pi, const StitchPlan& plan,
                        Rational eps, const ExecOptions& opts, RngStream& rng);

struct FindCycleParams {
    Rational beta{1, 10};
    std::optional<Rational> gamma;  // default 2(1-48*eps_x)/k
    Rational eps{1, 100};
    int k = 12;
    VerdictMode s_mode = VerdictMode::Sampled;
    long long s_budget = 32;
    int partition_retries = 5;
    int exec_retries = 2;
    ExecOptions exec;
    double c1 = 2.5;  // paper requires any constant > 2.1
};

struct FindCycleResult {
    std::optional<CycleCertificate> certificate;
    bool below_advisory_window = false;  // t under C1 log n / log(1/beta); attempted anyway
    long long s_edges = 0;
    // e(S) threshold from the corollary: (g^gamma(t,n) + beta/32) * C(k,2)
    Rational s_threshold;
    std::vector<std::string> attempts;  // per-attempt outcome lines
    bool ok() const { return certificate.has_value(); }
};

// Top-level: equipartition, eps-graph, exact substructure search in S,
// plan + execute with retries over fresh partitions. If `planted` is given
// it is used for the first attempt.
FindCycleResult find_cycle_of_length(const Graph& g, long long t, const FindCycleParams& params,
                                     RngStream& rng, const ClusterPartition* planted = nullptr);

}  // namespace cyclelab
