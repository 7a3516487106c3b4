// cyclelab: command-line laboratory for long-cycle extremal machinery.
// Exit codes: 0 = ran, 2 = config/usage error, 3 = I/O error.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cyclelab/embedder.hpp"
#include "cyclelab/expander.hpp"
#include "cyclelab/experiments.hpp"
#include "cyclelab/extremal.hpp"
#include "cyclelab/generators.hpp"
#include "cyclelab/oracle.hpp"
#include "cyclelab/ramsey.hpp"
#include "cyclelab/regularity.hpp"
#include "cyclelab/stitcher.hpp"

using namespace cyclelab;
using nlohmann::json;

namespace {

Graph read_graph(const std::string& path) {
    if (path.empty() || path == "-") return Graph::load(std::cin);
    return Graph::load_file(path);
}

void write_graph(const Graph& g, const std::string& path) {
    if (path.empty() || path == "-") {
        g.save(std::cout);
        return;
    }
    g.save_file(path);
}

VertexSet parse_ids(const std::string& csv) {
    VertexSet out;
    std::string cur;
    for (char c : csv) {
        if (c == ',') {
            if (!cur.empty()) out.push_back(std::stoi(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(std::stoi(cur));
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cyclelab: long cycles in sparse random and pseudo-random graphs"};
    app.require_subcommand(1);

    // ---- gen ----
    auto* gen = app.add_subcommand("gen", "random graph generators");
    gen->require_subcommand(1);
    int gn = 100, gd = 4;
    double gp = 0.1;
    std::uint64_t seed = 1;
    std::string out_file;
    auto* gnp = gen->add_subcommand("gnp", "binomial random graph G(n,p)");
    gnp->add_option("--n", gn)->required();
    gnp->add_option("--p", gp)->required();
    gnp->add_option("--seed", seed);
    gnp->add_option("--out", out_file);
    auto* greg = gen->add_subcommand("regular", "random d-regular graph");
    greg->add_option("--n", gn)->required();
    greg->add_option("--d", gd)->required();
    greg->add_option("--seed", seed);
    greg->add_option("--out", out_file);

    // ---- check ----
    auto* check = app.add_subcommand("check", "pseudo-randomness verdicts");
    check->require_subcommand(1);
    std::string in_file, c_p = "1/2", c_eta = "1/10", c_mode = "sampled";
    long long budget = 2000;
    auto* cu = check->add_subcommand("uniformity", "(p,eta)-upper-uniformity");
    cu->add_option("--in", in_file);
    cu->add_option("--p", c_p);
    cu->add_option("--eta", c_eta);
    cu->add_option("--mode", c_mode)->check(CLI::IsMember({"exact", "sampled"}));
    cu->add_option("--budget", budget);
    cu->add_option("--seed", seed);
    int cm_d = 4;
    double cm_lambda = -1;
    auto* cm = check->add_subcommand("mixing", "expander mixing bound");
    cm->add_option("--in", in_file);
    cm->add_option("--d", cm_d)->required();
    cm->add_option("--lambda", cm_lambda);
    cm->add_option("--budget", budget);
    cm->add_option("--seed", seed);

    // ---- sgraph ----
    auto* sg = app.add_subcommand("sgraph", "epsilon-graph / reduced graph of a partition");
    std::string s_eps = "1/100", s_rho, s_p = "1";
    int s_k = 12;
    std::string s_mode = "sampled", s_out;
    sg->add_option("--in", in_file);
    sg->add_option("--eps", s_eps);
    sg->add_option("--k", s_k);
    sg->add_option("--mode", s_mode)->check(CLI::IsMember({"exact", "sampled", "derived"}));
    sg->add_option("--rho", s_rho);
    sg->add_option("--p", s_p);
    sg->add_option("--budget", budget);
    sg->add_option("--seed", seed);
    sg->add_option("--out", s_out);

    // ---- embed ----
    auto* em = app.add_subcommand("embed", "tree embeddings into a bipartite pair");
    em->require_subcommand(1);
    auto* emt = em->add_subcommand("trhl", "embed T^(r,h)_ell");
    int e_r = 2, e_h = -1;
    long long e_ell = 5;
    std::string e_left, e_right, e_eps = "1/100";
    emt->add_option("--in", in_file);
    emt->add_option("--r", e_r);
    emt->add_option("--h", e_h);
    emt->add_option("--ell", e_ell)->required();
    emt->add_option("--left", e_left)->required();
    emt->add_option("--right", e_right)->required();
    emt->add_option("--eps", e_eps);
    emt->add_option("--seed", seed);

    // ---- expander ----
    auto* ex = app.add_subcommand("expander", "expander cleanup and DFS partition");
    ex->require_subcommand(1);
    auto* exc = ex->add_subcommand("cleanup", "iterative cleanup to a bipartite expander");
    std::string x_eps = "1/100", x_a = "1/10", x_b = "9", x_left, x_right;
    exc->add_option("--in", in_file);
    exc->add_option("--eps", x_eps);
    exc->add_option("--a", x_a);
    exc->add_option("--b", x_b);
    exc->add_option("--left", x_left)->required();
    exc->add_option("--right", x_right)->required();
    auto* exd = ex->add_subcommand("dfs-partition", "S/T/U path partition snapshot");
    exd->add_option("--in", in_file);
    exd->add_option("--seed", seed);

    // ---- find-cycle ----
    auto* fc = app.add_subcommand("find-cycle", "cycle of exactly prescribed length");
    long long f_t = 10;
    std::string f_beta = "1/10", f_gamma, f_eps = "1/100", f_cert;
    int f_k = 12;
    fc->add_option("--t", f_t)->required();
    fc->add_option("--beta", f_beta);
    fc->add_option("--gamma", f_gamma);
    fc->add_option("--eps", f_eps);
    fc->add_option("--k", f_k);
    fc->add_option("--seed", seed);
    fc->add_option("--in", in_file);
    fc->add_option("--budget", budget);
    fc->add_option("--cert", f_cert);

    // ---- extremal ----
    auto* xt = app.add_subcommand("extremal", "closed-form extremal values");
    long long xt_n = 0, xt_t = 0;
    std::string xt_gamma = "1/20";
    bool xt_table = false;
    xt->add_option("--n", xt_n)->required();
    xt->add_option("--t", xt_t);
    xt->add_option("--gamma", xt_gamma);
    xt->add_flag("--table", xt_table);

    // ---- oracle ----
    auto* orc = app.add_subcommand("oracle", "exact small-instance ground truth");
    orc->require_subcommand(1);
    auto* ors = orc->add_subcommand("spectrum", "full cycle spectrum (n <= 14)");
    ors->add_option("--in", in_file);
    auto* orh = orc->add_subcommand("has-cycle", "cycle of length t present?");
    long long or_t = 3;
    orh->add_option("--in", in_file);
    orh->add_option("--t", or_t)->required();

    // ---- ramsey ----
    auto* rm = app.add_subcommand("ramsey", "monochromatic odd cycle machinery");
    rm->require_subcommand(1);
    auto* rmm = rm->add_subcommand("mono-odd", "monochromatic odd cycle in a random coloring");
    int rm_r = 2;
    double rm_eps = 0.05;
    rmm->add_option("--in", in_file);
    rmm->add_option("--r", rm_r);
    rmm->add_option("--eps", rm_eps);
    rmm->add_option("--seed", seed);

    // ---- experiment ----
    auto* exp = app.add_subcommand("experiment", "batch experiment drivers");
    exp->require_subcommand(1);
    std::string cfg_path, exp_out = ".";
    for (const char* name : {"turan", "robustness", "ramsey"}) {
        auto* sub = exp->add_subcommand(name, std::string(name) + " experiment");
        sub->add_option("--config", cfg_path)->required();
        sub->add_option("--out", exp_out);
    }

    CLI11_PARSE(app, argc, argv);

    try {
        if (gnp->parsed()) {
            RngStream rng(seed, 0);
            write_graph(sample_gnp(gn, gp, rng), out_file);
        } else if (greg->parsed()) {
            RngStream rng(seed, 0);
            write_graph(random_regular(gn, gd, rng), out_file);
        } else if (cu->parsed()) {
            Graph g = read_graph(in_file);
            RngStream rng(seed, 0);
            auto v = check_upper_uniform(g, parse_rational(c_p), parse_rational(c_eta),
                                         c_mode == "exact" ? VerdictMode::Exact : VerdictMode::Sampled,
                                         budget, rng);
            json j{{"holds", v.holds}, {"mode", mode_name(v.mode)}, {"pairs_checked", v.pairs_checked}};
            if (v.witness) {
                j["witness"] = {{"u", v.witness->u}, {"w", v.witness->w}, {"edges", v.witness->edges},
                                {"bound", v.witness->bound.str()}};
            }
            std::cout << j.dump(2) << '\n';
        } else if (cm->parsed()) {
            Graph g = read_graph(in_file);
            double lambda = cm_lambda >= 0 ? cm_lambda : estimate_lambda(g);
            RngStream rng(seed, 0);
            auto v = mixing_lemma_check(g, cm_d, lambda, budget, rng);
            json j{{"holds", v.holds}, {"lambda", lambda}, {"mode", mode_name(v.mode)},
                   {"pairs_checked", v.pairs_checked}};
            std::cout << j.dump(2) << '\n';
        } else if (sg->parsed()) {
            Graph g = read_graph(in_file);
            RngStream rng(seed, 0);
            auto pi = equipartition(g.n(), s_k, rng);
            json j;
            j["k"] = s_k;
            if (s_mode == "derived") {
                Rational rho = s_rho.empty() ? parse_rational(s_eps) * Rational(10)
                                             : parse_rational(s_rho);
                auto rg = build_reduced_graph(g, pi, rho, parse_rational(s_eps),
                                              parse_rational(s_p), VerdictMode::Sampled, budget, rng);
                auto eg = epsilon_graph_from_reduced(rg);
                j["mode"] = "derived-from-R";
                j["r_edges"] = rg.r.m();
                json edges = json::array();
                for (auto [u, v] : eg.s.edges()) edges.push_back({u, v});
                j["s_edges"] = edges;
            } else {
                auto eg = build_epsilon_graph(g, pi, parse_rational(s_eps),
                                              s_mode == "exact" ? VerdictMode::Exact
                                                                : VerdictMode::Sampled,
                                              budget, rng);
                j["mode"] = s_mode;
                json edges = json::array();
                for (auto [u, v] : eg.s.edges()) edges.push_back({u, v});
                j["s_edges"] = edges;
            }
            if (s_out.empty()) {
                std::cout << j.dump(2) << '\n';
            } else {
                std::ofstream out(s_out);
                if (!out) throw std::runtime_error("cannot open " + s_out);
                out << j.dump(2) << '\n';
            }
        } else if (emt->parsed()) {
            Graph g = read_graph(in_file);
            RngStream rng(seed, 0);
            VertexSet left = parse_ids(e_left), right = parse_ids(e_right);
            Rational eps = parse_rational(e_eps);
            Rational m(static_cast<long long>(std::min(left.size(), right.size())));
            TrhlOutcome out = e_r == 2 ? embed_large_trhl(g, left, right, eps, m, e_ell, 0, rng)
                                       : embed_small_trhl(g, left, right, eps, m, e_ell, rng);
            if (auto* emb = std::get_if<TrhlEmbedding>(&out)) {
                json j{{"ok", true}, {"mode", emb->mode}, {"map", emb->map}};
                std::cout << j.dump(2) << '\n';
            } else {
                auto& f = std::get<EmbedFailure>(out);
                json j{{"ok", false}, {"stage", f.stage}, {"detail", f.detail}};
                std::cout << j.dump(2) << '\n';
            }
        } else if (exc->parsed()) {
            Graph g = read_graph(in_file);
            VertexSet left = parse_ids(x_left), right = parse_ids(x_right);
            Rational m(static_cast<long long>(std::min(left.size(), right.size())));
            auto trace = cleanup_to_expander(g, left, right, parse_rational(x_eps), m,
                                             parse_rational(x_a), parse_rational(x_b));
            json j{{"success", trace.success}, {"steps", trace.steps.size()}, {"note", trace.note}};
            if (trace.success) {
                j["u1"] = trace.u1;
                j["u2"] = trace.u2;
                j["final_check_holds"] = trace.final_check.holds;
            } else if (trace.eps_witness) {
                j["eps_witness"] = {{"a1", trace.eps_witness->a1}, {"a2", trace.eps_witness->a2}};
            }
            std::cout << j.dump(2) << '\n';
        } else if (exd->parsed()) {
            Graph g = read_graph(in_file);
            RngStream rng(seed, 0);
            auto dp = dfs_path_partition(g, &rng);
            json j{{"s", dp.s_set}, {"t", dp.t_set}, {"path", dp.path}};
            std::cout << j.dump(2) << '\n';
        } else if (fc->parsed()) {
            Graph g = read_graph(in_file);
            RngStream rng(seed, 0);
            FindCycleParams params;
            params.beta = parse_rational(f_beta);
            if (!f_gamma.empty()) params.gamma = parse_rational(f_gamma);
            params.eps = parse_rational(f_eps);
            params.k = f_k;
            params.s_budget = budget;
            auto res = find_cycle_of_length(g, f_t, params, rng);
            json j{{"ok", res.ok()}, {"t", f_t}, {"s_edges", res.s_edges},
                   {"s_threshold", res.s_threshold.str()},
                   {"below_advisory_window", res.below_advisory_window},
                   {"attempts", res.attempts}};
            if (res.ok()) {
                j["cycle_length"] = res.certificate->cycle.size();
                if (!f_cert.empty()) save_certificate(*res.certificate, f_cert);
            }
            std::cout << j.dump(2) << '\n';
        } else if (xt->parsed()) {
            std::cout << "n,t,parity,g_num,g_den,w_num,w_den,eg_path,eg_cycle\n";
            auto emit = [&](long long t) {
                ExtremalQuery q{xt_n, t, parse_rational(xt_gamma)};
                auto gv = g_function(q);
                auto wv = woodall_threshold(t, xt_n);
                std::cout << xt_n << ',' << t << ',' << (t % 2 == 0 ? "even" : "odd") << ','
                          << gv.num << ',' << gv.den << ',' << wv.num << ',' << wv.den << ','
                          << eg_path_bound(t, xt_n) << ',' << eg_cycle_bound(t, xt_n) << '\n';
            };
            if (xt_table) {
                for (long long t = 3; t <= xt_n; ++t) emit(t);
            } else {
                if (xt_t < 3) throw CLI::ValidationError("--t", "required without --table");
                emit(xt_t);
            }
        } else if (ors->parsed()) {
            Graph g = read_graph(in_file);
            auto spec = cycle_spectrum_exact(g);
            json j{{"present", std::vector<int>(spec.present.begin(), spec.present.end())},
                   {"longest_path", spec.longest_path}};
            std::cout << j.dump(2) << '\n';
        } else if (orh->parsed()) {
            Graph g = read_graph(in_file);
            std::cout << (has_cycle_of_length(g, static_cast<int>(or_t)) ? "true" : "false") << '\n';
        } else if (rmm->parsed()) {
            Graph g = read_graph(in_file);
            RngStream rng(seed, 0);
            auto col = color_random(g, rm_r, rng);
            auto res = monochromatic_odd_cycle(g, col, rm_eps, rng);
            json j{{"found", res.found}, {"color", res.color}, {"length", res.cycle.size()},
                   {"bound_num", res.bound_num}, {"bound_den", res.bound_den},
                   {"meets_bound", res.meets_bound}, {"note", res.note}, {"trace", res.trace}};
            std::cout << j.dump(2) << '\n';
        } else if (exp->parsed()) {
            auto cfg = load_config(cfg_path);
            Report rep;
            std::string kind = exp->get_subcommands().front()->get_name();
            cfg.kind = kind;
            if (kind == "turan") rep = run_turan(cfg, exp_out);
            else if (kind == "robustness") rep = run_robustness(cfg, exp_out);
            else rep = run_ramsey(cfg, exp_out);
            std::filesystem::create_directories(exp_out);
            std::string csv_path = (std::filesystem::path(exp_out) / "report.csv").string();
            std::ofstream out(csv_path);
            if (!out) throw std::runtime_error("cannot open " + csv_path);
            out << rep.to_csv();
            std::cout << "wrote " << csv_path << " (" << rep.rows.size() << " rows, "
                      << rep.successes() << " successes)\n";
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const std::runtime_error& e) {
        std::cerr << "i/o error: " << e.what() << '\n';
        return 3;
    }
    return 0;
}
