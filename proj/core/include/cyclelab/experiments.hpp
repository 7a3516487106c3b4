#pragma once

#include <string>
#include <vector>

#include "cyclelab/rational.hpp"
#include "cyclelab/rng.hpp"
#include "cyclelab/stitcher.hpp"

namespace cyclelab {

// Batch laboratory configuration. Parameter defaults follow the usual
// pipeline conventions: rho = 10*eps, delta = 48*eps, gamma = 2(1-48eps)/k.
struct ExperimentConfig {
    std::string kind = "turan";  // turan | robustness | ramsey
    std::string model = "gnp";   // gnp | regular | planted | file
    std::string input_file;     // when model == file
    int n = 1000;
    double p = 0.02;
    int d = 10;  // regular model
    Rational beta{1, 10};
    Rational eps{1, 100};
    std::optional<Rational> gamma;
    int k = 12;
    std::vector<long long> t_list;
    int trials = 5;
    std::uint64_t master_seed = 1;
    // turan deletion style: "random" keeps a uniform edge subset at the
    // threshold count; "adversarial" keeps the overlay intersection plus
    // random extras to the same count
    std::string deletion = "random";
    // robustness scenario: a | b | c
    std::string scenario = "a";
    std::string f_growth = "log";  // the omega(1/p) surplus in scenario b
    // ramsey settings
    int r = 2;
    std::string pattern = "random";  // random | balanced-cut | three-color | doubling
    // verdict settings for the stitcher
    long long s_budget = 32;
    int partition_retries = 5;
    double c1 = 2.5;
    // timing = "none": deterministic output, no wall-clock cutoffs (seconds
    // column prints 0.000); timing = "wall": measured seconds + 60 s budget
    std::string timing = "none";
    double time_budget_seconds = 60.0;
    int threads = 0;  // 0 = env CYCLELAB_THREADS or 1
};

ExperimentConfig load_config(const std::string& path);

struct ReportRow {
    int trial = 0;
    long long t = 0;
    std::string parity;
    std::string scenario;
    std::string outcome;  // success | failure | expected-failure | ...
    std::string stage;
    long long edges_kept = 0;
    long long threshold_num = 0, threshold_den = 1;
    double seconds = 0;
    std::string cert_path;
};

struct Report {
    std::vector<ReportRow> rows;
    std::vector<std::string> annotations;
    int successes() const;
    std::string to_csv() const;  // fixed columns, deterministic order
};

Report run_turan(const ExperimentConfig& config, const std::string& out_dir);
Report run_robustness(const ExperimentConfig& config, const std::string& out_dir);
Report run_ramsey(const ExperimentConfig& config, const std::string& out_dir);

// certificate (de)serialization; saved certificates re-verify on load
void save_certificate(const CycleCertificate& cert, const std::string& path);
bool reverify_certificate(const Graph& g, const std::string& path, std::string* why = nullptr);

}  // namespace cyclelab
