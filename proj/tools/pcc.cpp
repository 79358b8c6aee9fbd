#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "pcc/expansion.hpp"
#include "pcc/generators.hpp"
#include "pcc/io.hpp"
#include "pcc/random_lb.hpp"
#include "pcc/solver.hpp"

namespace {

using pcc::json;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;

void emit_error(const std::string& message) {
    json err;
    err["error"] = message;
    std::cerr << err.dump() << "\n";
}

json load_config(const std::string& path) {
    if (path.empty()) return json::object();
    json cfg = json::parse(pcc::read_text_file(path));
    if (!cfg.is_object()) throw std::invalid_argument("config file must hold a JSON object");
    return cfg;
}

// config-file keys mirror the long flag names; an explicit flag wins
template <class T>
void cfg_fill(const json& cfg, const std::string& key, const CLI::Option* opt, T& target) {
    if (opt->count() == 0 && cfg.contains(key)) target = cfg.at(key).get<T>();
}

bool cfg_present(const json& cfg, const std::string& key, const CLI::Option* opt) {
    return opt->count() > 0 || cfg.contains(key);
}

void write_or_print(const std::string& out_path, const std::string& content) {
    if (out_path.empty())
        std::cout << content;
    else
        pcc::write_text_file(out_path, content);
}

std::string report_text(const json& j) { return j.dump(2) + "\n"; }

struct GenerateArgs {
    std::string config;
    std::string kind;
    int p = 1, t = 1, base = 2, s = -1;
    int n = 0, leaves = 0, rows = 0, cols = 0;
    double q = 0.0;
    std::uint64_t seed = 1;
    long long limit = pcc::kDefaultMaterializeLimit;
    std::string out, dot;
    CLI::Option *kind_opt, *p_opt, *t_opt, *base_opt, *s_opt, *n_opt, *leaves_opt, *rows_opt,
        *cols_opt, *q_opt, *seed_opt, *limit_opt, *out_opt, *dot_opt;
};

int run_generate(GenerateArgs& a) {
    json cfg = load_config(a.config);
    cfg_fill(cfg, "kind", a.kind_opt, a.kind);
    cfg_fill(cfg, "p", a.p_opt, a.p);
    cfg_fill(cfg, "t", a.t_opt, a.t);
    cfg_fill(cfg, "base", a.base_opt, a.base);
    cfg_fill(cfg, "s", a.s_opt, a.s);
    cfg_fill(cfg, "n", a.n_opt, a.n);
    cfg_fill(cfg, "leaves", a.leaves_opt, a.leaves);
    cfg_fill(cfg, "rows", a.rows_opt, a.rows);
    cfg_fill(cfg, "cols", a.cols_opt, a.cols);
    cfg_fill(cfg, "q", a.q_opt, a.q);
    cfg_fill(cfg, "seed", a.seed_opt, a.seed);
    cfg_fill(cfg, "limit", a.limit_opt, a.limit);
    cfg_fill(cfg, "out", a.out_opt, a.out);
    cfg_fill(cfg, "dot", a.dot_opt, a.dot);
    if (a.kind.empty()) throw std::invalid_argument("generate: --kind is required");

    pcc::Graph g;
    if (a.kind == "family" || a.kind == "family-subdivided") {
        pcc::FamilyParams params;
        params.p = a.p;
        params.t = a.t;
        params.base_size = a.base;
        params.subdivision = a.s;
        g = a.kind == "family" ? pcc::family_graph(params, a.limit)
                               : pcc::family_subdivided(params, a.limit);
    } else if (a.kind == "gnp") {
        if (!cfg_present(cfg, "n", a.n_opt)) throw std::invalid_argument("gnp: --n is required");
        if (!cfg_present(cfg, "q", a.q_opt)) throw std::invalid_argument("gnp: --q is required");
        g = pcc::gnp(a.n, a.q, a.seed);
    } else if (a.kind == "path") {
        g = pcc::path_graph(a.n);
    } else if (a.kind == "cycle") {
        g = pcc::cycle_graph(a.n);
    } else if (a.kind == "clique") {
        g = pcc::clique_graph(a.n);
    } else if (a.kind == "star") {
        g = pcc::star_graph(a.leaves);
    } else if (a.kind == "grid") {
        g = pcc::grid_graph(a.rows, a.cols);
    } else {
        throw std::invalid_argument("generate: unknown kind '" + a.kind + "'");
    }

    write_or_print(a.out, pcc::graph_to_json(g).dump() + "\n");
    if (!a.dot.empty()) pcc::write_text_file(a.dot, pcc::graph_to_dot(g));
    return kExitOk;
}

struct VerifyArgs {
    std::string config, graph, coloring, witness;
    int p = 0, p1 = 0, p2 = 0;
    CLI::Option *graph_opt, *coloring_opt, *witness_opt, *p_opt, *p1_opt, *p2_opt;
};

int run_verify(VerifyArgs& a) {
    json cfg = load_config(a.config);
    cfg_fill(cfg, "graph", a.graph_opt, a.graph);
    cfg_fill(cfg, "coloring", a.coloring_opt, a.coloring);
    cfg_fill(cfg, "witness", a.witness_opt, a.witness);
    cfg_fill(cfg, "p", a.p_opt, a.p);
    cfg_fill(cfg, "p1", a.p1_opt, a.p1);
    cfg_fill(cfg, "p2", a.p2_opt, a.p2);
    if (a.graph.empty() || a.coloring.empty())
        throw std::invalid_argument("verify: --graph and --coloring are required");
    bool split = cfg_present(cfg, "p1", a.p1_opt) || cfg_present(cfg, "p2", a.p2_opt);
    bool single = cfg_present(cfg, "p", a.p_opt);
    if (split == single)
        throw std::invalid_argument("verify: pass either --p or both --p1 and --p2");
    if (split && !(cfg_present(cfg, "p1", a.p1_opt) && cfg_present(cfg, "p2", a.p2_opt)))
        throw std::invalid_argument("verify: split mode needs both --p1 and --p2");

    pcc::Graph g = pcc::graph_from_json(json::parse(pcc::read_text_file(a.graph)));
    json cj = json::parse(pcc::read_text_file(a.coloring));
    pcc::Verdict verdict;
    if (split) {
        pcc::SplitColoring sc = pcc::split_from_json(cj);
        verdict = pcc::is_p1p2_centered(g, sc, a.p1, a.p2);
    } else {
        pcc::Coloring f = pcc::coloring_from_json(cj);
        verdict = pcc::is_p_centered(g, f, a.p);
    }
    std::cout << report_text(pcc::verdict_to_json(verdict));
    if (!verdict.centered && !a.witness.empty())
        pcc::write_text_file(a.witness, report_text(pcc::witness_to_json(*verdict.witness)));
    return verdict.centered ? kExitOk : kExitViolation;
}

struct SolveArgs {
    std::string config, graph, out;
    int p = 1;
    long long max_nodes = 20'000'000;
    double max_seconds = 0.0;
    CLI::Option *graph_opt, *out_opt, *p_opt, *nodes_opt, *seconds_opt;
};

int run_solve(SolveArgs& a) {
    json cfg = load_config(a.config);
    cfg_fill(cfg, "graph", a.graph_opt, a.graph);
    cfg_fill(cfg, "out", a.out_opt, a.out);
    cfg_fill(cfg, "p", a.p_opt, a.p);
    cfg_fill(cfg, "max-nodes", a.nodes_opt, a.max_nodes);
    cfg_fill(cfg, "max-seconds", a.seconds_opt, a.max_seconds);
    if (a.graph.empty()) throw std::invalid_argument("solve: --graph is required");

    pcc::Graph g = pcc::graph_from_json(json::parse(pcc::read_text_file(a.graph)));
    pcc::SolveBudget budget;
    budget.max_nodes = a.max_nodes;
    budget.max_seconds = a.max_seconds;
    pcc::SolveResult res = pcc::chi_p_exact(g, a.p, budget);
    std::string text = report_text(pcc::solve_to_json(res));
    std::cout << text;
    if (!a.out.empty()) pcc::write_text_file(a.out, text);
    return res.status == pcc::SolveResult::Status::exact ? kExitOk : kExitBudget;
}

struct BoundsArgs {
    std::string config, kind = "janson", out;
    std::int64_t n = 0;
    int p = 1, t = 1, base = 2, s = -1;
    double q = 0.0;
    CLI::Option *kind_opt, *n_opt, *p_opt, *t_opt, *base_opt, *s_opt, *q_opt, *out_opt;
};

int run_bounds(BoundsArgs& a) {
    json cfg = load_config(a.config);
    cfg_fill(cfg, "kind", a.kind_opt, a.kind);
    cfg_fill(cfg, "n", a.n_opt, a.n);
    cfg_fill(cfg, "p", a.p_opt, a.p);
    cfg_fill(cfg, "t", a.t_opt, a.t);
    cfg_fill(cfg, "base", a.base_opt, a.base);
    cfg_fill(cfg, "s", a.s_opt, a.s);
    cfg_fill(cfg, "q", a.q_opt, a.q);
    cfg_fill(cfg, "out", a.out_opt, a.out);

    json out;
    if (a.kind == "janson") {
        std::optional<double> q_override;
        if (cfg_present(cfg, "q", a.q_opt)) q_override = a.q;
        out = pcc::janson_to_json(pcc::janson_report(a.n, a.p, q_override));
    } else if (a.kind == "threshold") {
        double q = pcc::q_threshold(a.n, a.p);
        auto [lo, hi] = pcc::degree_window_at(a.n, q);
        out["n"] = a.n;
        out["p"] = a.p;
        out["q"] = q;
        out["degree_window"] = json::array({lo, hi});
        out["min_valid_n"] = a.p >= 2 ? json(pcc::min_valid_n(a.p)) : json(nullptr);
    } else if (a.kind == "size") {
        pcc::FamilyParams params;
        params.p = a.p;
        params.t = a.t;
        params.base_size = a.base;
        params.subdivision = a.s;
        pcc::FamilySize size = pcc::family_size(params);
        out["p"] = a.p;
        out["t"] = a.t;
        out["base"] = a.base;
        out["vertices"] = size.vertices.str();
        out["edges"] = size.edges.str();
        if (cfg_present(cfg, "s", a.s_opt)) {
            int s_eff = params.effective_subdivision();
            out["s"] = s_eff;
            out["subdivided_vertices"] = pcc::bigint(size.vertices + size.edges * s_eff).str();
            out["subdivided_edges"] = pcc::bigint(size.edges * (s_eff + 1)).str();
        }
    } else {
        throw std::invalid_argument("bounds: unknown kind '" + a.kind + "'");
    }
    std::string text = report_text(out);
    std::cout << text;
    if (!a.out.empty()) pcc::write_text_file(a.out, text);
    return kExitOk;
}

struct NablaArgs {
    std::string config, graph, mode = "exact", out;
    int r = 0;
    int limit = pcc::default_nabla_limit();
    CLI::Option *graph_opt, *mode_opt, *out_opt, *r_opt, *limit_opt;
};

int run_nabla(NablaArgs& a) {
    json cfg = load_config(a.config);
    cfg_fill(cfg, "graph", a.graph_opt, a.graph);
    cfg_fill(cfg, "mode", a.mode_opt, a.mode);
    cfg_fill(cfg, "out", a.out_opt, a.out);
    cfg_fill(cfg, "r", a.r_opt, a.r);
    cfg_fill(cfg, "limit", a.limit_opt, a.limit);
    if (a.graph.empty()) throw std::invalid_argument("nabla: --graph is required");

    pcc::Graph g = pcc::graph_from_json(json::parse(pcc::read_text_file(a.graph)));
    pcc::NablaResult res;
    if (a.mode == "exact")
        res = pcc::nabla_r_exact(g, a.r, a.limit);
    else if (a.mode == "greedy")
        res = pcc::nabla_r_greedy(g, a.r);
    else
        throw std::invalid_argument("nabla: mode must be exact or greedy");
    std::string text = report_text(pcc::nabla_to_json(res));
    std::cout << text;
    if (!a.out.empty()) pcc::write_text_file(a.out, text);
    return kExitOk;
}

struct ExperimentArgs {
    std::string config, out;
    int n = 16, p = 2, trials = 50, colorings = 20, exact_limit = 12;
    std::uint64_t seed = 1;
    double q = 0.0;
    long long max_nodes = 200'000;
    double max_seconds = 0.0;
    CLI::Option *out_opt, *n_opt, *p_opt, *trials_opt, *colorings_opt, *exact_opt, *seed_opt,
        *q_opt, *nodes_opt, *seconds_opt;
};

int run_experiment(ExperimentArgs& a) {
    json cfg = load_config(a.config);
    cfg_fill(cfg, "out", a.out_opt, a.out);
    cfg_fill(cfg, "n", a.n_opt, a.n);
    cfg_fill(cfg, "p", a.p_opt, a.p);
    cfg_fill(cfg, "trials", a.trials_opt, a.trials);
    cfg_fill(cfg, "colorings", a.colorings_opt, a.colorings);
    cfg_fill(cfg, "exact-limit", a.exact_opt, a.exact_limit);
    cfg_fill(cfg, "seed", a.seed_opt, a.seed);
    cfg_fill(cfg, "max-nodes", a.nodes_opt, a.max_nodes);
    cfg_fill(cfg, "max-seconds", a.seconds_opt, a.max_seconds);

    pcc::ProbeParams params;
    params.n = a.n;
    params.p = a.p;
    params.seed = a.seed;
    params.trials = a.trials;
    if (cfg_present(cfg, "q", a.q_opt)) params.q_override = a.q;
    params.colorings_per_trial = a.colorings;
    params.exact_limit = a.exact_limit;
    params.budget.max_nodes = a.max_nodes;
    params.budget.max_seconds = a.max_seconds;

    auto rows = pcc::lower_bound_experiment(params);
    write_or_print(a.out, pcc::experiment_csv(rows));
    for (const auto& row : rows)
        if (row.status == "lower_bound_only" || row.status == "timeout") return kExitBudget;
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"p-centered coloring toolkit"};
    app.require_subcommand(1);

    GenerateArgs gen;
    auto* cmd_gen = app.add_subcommand("generate", "build a graph and serialize it");
    cmd_gen->add_option("--config", gen.config, "JSON config; flags override its keys");
    gen.kind_opt = cmd_gen->add_option("--kind", gen.kind,
                                       "family | family-subdivided | gnp | path | cycle | "
                                       "clique | star | grid");
    gen.p_opt = cmd_gen->add_option("--p", gen.p, "family depth parameter");
    gen.t_opt = cmd_gen->add_option("--t", gen.t, "family width parameter");
    gen.base_opt = cmd_gen->add_option("--base", gen.base, "family base size (>= 2)");
    gen.s_opt = cmd_gen->add_option("--s", gen.s, "subdivision length (-1 = 6t)");
    gen.n_opt = cmd_gen->add_option("--n", gen.n, "vertex count (gnp/path/cycle/clique)");
    gen.leaves_opt = cmd_gen->add_option("--leaves", gen.leaves, "star leaf count");
    gen.rows_opt = cmd_gen->add_option("--rows", gen.rows, "grid rows");
    gen.cols_opt = cmd_gen->add_option("--cols", gen.cols, "grid columns");
    gen.q_opt = cmd_gen->add_option("--q", gen.q, "gnp edge probability");
    gen.seed_opt = cmd_gen->add_option("--seed", gen.seed, "gnp seed");
    gen.limit_opt = cmd_gen->add_option("--limit", gen.limit, "materialization vertex cap");
    gen.out_opt = cmd_gen->add_option("--out", gen.out, "graph JSON path (default stdout)");
    gen.dot_opt = cmd_gen->add_option("--dot", gen.dot, "also write graphviz text here");

    VerifyArgs ver;
    auto* cmd_ver = app.add_subcommand("verify", "check a coloring for centeredness");
    cmd_ver->add_option("--config", ver.config, "JSON config; flags override its keys");
    ver.graph_opt = cmd_ver->add_option("--graph", ver.graph, "graph JSON file");
    ver.coloring_opt = cmd_ver->add_option("--coloring", ver.coloring, "coloring JSON file");
    ver.p_opt = cmd_ver->add_option("--p", ver.p, "single color budget");
    ver.p1_opt = cmd_ver->add_option("--p1", ver.p1, "A1 palette budget (split mode)");
    ver.p2_opt = cmd_ver->add_option("--p2", ver.p2, "A2 palette budget (split mode)");
    ver.witness_opt = cmd_ver->add_option("--witness", ver.witness,
                                          "write the violating subgraph here on failure");

    SolveArgs sol;
    auto* cmd_sol = app.add_subcommand("solve", "exact chi_p via branch and bound");
    cmd_sol->add_option("--config", sol.config, "JSON config; flags override its keys");
    sol.graph_opt = cmd_sol->add_option("--graph", sol.graph, "graph JSON file");
    sol.p_opt = cmd_sol->add_option("--p", sol.p, "color budget");
    sol.nodes_opt = cmd_sol->add_option("--max-nodes", sol.max_nodes, "search node budget");
    sol.seconds_opt = cmd_sol->add_option("--max-seconds", sol.max_seconds,
                                          "wall budget (0 = unlimited; breaks rerun identity "
                                          "of node counts under load)");
    sol.out_opt = cmd_sol->add_option("--out", sol.out, "also write the result JSON here");

    BoundsArgs bnd;
    auto* cmd_bnd = app.add_subcommand("bounds", "probability and size calculators");
    cmd_bnd->add_option("--config", bnd.config, "JSON config; flags override its keys");
    bnd.kind_opt = cmd_bnd->add_option("--kind", bnd.kind, "janson | threshold | size");
    bnd.n_opt = cmd_bnd->add_option("--n", bnd.n, "vertex count");
    bnd.p_opt = cmd_bnd->add_option("--p", bnd.p, "color budget / family depth");
    bnd.t_opt = cmd_bnd->add_option("--t", bnd.t, "family width parameter");
    bnd.base_opt = cmd_bnd->add_option("--base", bnd.base, "family base size");
    bnd.s_opt = cmd_bnd->add_option("--s", bnd.s, "subdivision length (-1 = 6t)");
    bnd.q_opt = cmd_bnd->add_option("--q", bnd.q, "explicit edge probability");
    bnd.out_opt = cmd_bnd->add_option("--out", bnd.out, "also write the report JSON here");

    NablaArgs nab;
    auto* cmd_nab = app.add_subcommand("nabla", "greatest reduced average density");
    cmd_nab->add_option("--config", nab.config, "JSON config; flags override its keys");
    nab.graph_opt = cmd_nab->add_option("--graph", nab.graph, "graph JSON file");
    nab.r_opt = cmd_nab->add_option("--r", nab.r, "shallow-minor radius");
    nab.mode_opt = cmd_nab->add_option("--mode", nab.mode, "exact | greedy");
    nab.limit_opt = cmd_nab->add_option("--limit", nab.limit, "exact-mode vertex cap");
    nab.out_opt = cmd_nab->add_option("--out", nab.out, "also write the result JSON here");

    ExperimentArgs exp;
    auto* cmd_exp = app.add_subcommand("experiment", "random-graph lower-bound sweep");
    cmd_exp->add_option("--config", exp.config, "JSON config; flags override its keys");
    exp.n_opt = cmd_exp->add_option("--n", exp.n, "vertices per sampled graph");
    exp.p_opt = cmd_exp->add_option("--p", exp.p, "color budget");
    exp.seed_opt = cmd_exp->add_option("--seed", exp.seed, "master seed");
    exp.trials_opt = cmd_exp->add_option("--trials", exp.trials, "number of sampled graphs");
    exp.q_opt = cmd_exp->add_option("--q", exp.q, "edge probability override");
    exp.colorings_opt = cmd_exp->add_option("--colorings", exp.colorings,
                                            "random colorings probed per trial");
    exp.exact_opt = cmd_exp->add_option("--exact-limit", exp.exact_limit,
                                        "largest n solved exactly (greedy above)");
    exp.nodes_opt = cmd_exp->add_option("--max-nodes", exp.max_nodes, "solver node budget");
    exp.seconds_opt = cmd_exp->add_option("--max-seconds", exp.max_seconds,
                                          "solver wall budget (0 = unlimited)");
    exp.out_opt = cmd_exp->add_option("--out", exp.out, "CSV path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        emit_error(e.what());
        return kExitInput;
    }

    try {
        if (cmd_gen->parsed()) return run_generate(gen);
        if (cmd_ver->parsed()) return run_verify(ver);
        if (cmd_sol->parsed()) return run_solve(sol);
        if (cmd_bnd->parsed()) return run_bounds(bnd);
        if (cmd_nab->parsed()) return run_nabla(nab);
        if (cmd_exp->parsed()) return run_experiment(exp);
        emit_error("no subcommand given");
        return kExitInput;
    } catch (const std::exception& e) {
        emit_error(e.what());
        return kExitInput;
    }
}
