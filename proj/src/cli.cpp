#include "subhit/cli.hpp"

#include "subhit/caps.hpp"
#include "subhit/cnf.hpp"
#include "subhit/colorful_solver.hpp"
#include "subhit/errors.hpp"
#include "subhit/hardness.hpp"
#include "subhit/io.hpp"
#include "subhit/oracle.hpp"
#include "subhit/pattern.hpp"
#include "subhit/plain_solver.hpp"
#include "subhit/treedecomp.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <string>
#include <vector>

namespace subhit {

namespace {

Graph load_pattern(const std::string& name, const std::string& file) {
    if (!name.empty() && !file.empty())
        throw ParseError("give either a pattern name or a pattern file, not both");
    if (!name.empty())
        return pattern_from_name(name);
    if (!file.empty())
        return read_gr_file(file);
    throw ParseError("a pattern is required (--pattern or --pattern-file)");
}

void print_certificate(std::ostream& out, const std::vector<int>& hs) {
    out << "certificate:";
    for (int v : hs)
        out << ' ' << v + 1;
    out << '\n';
}

std::string colorful_method(const PatternInfo& info) {
    if (!info.connected)
        return "split";
    if (info.is_path)
        return "path-cut";
    if (info.is_clique)
        return "clique-dp";
    return "chunk-dp";
}

std::string plain_method(const PatternInfo& info) {
    if (info.is_clique && info.connected)
        return "plain-clique-dp";
    if (info.all_components_cliques)
        return "unsupported";
    return "witness-dp";
}

struct AnalyzeArgs {
    std::string pattern, pattern_file;
};

int cmd_analyze(const AnalyzeArgs& a, const Caps& caps, std::ostream& out) {
    Graph h = load_pattern(a.pattern, a.pattern_file);
    PatternInfo info = analyze_pattern(h, caps);
    int chunks = 0, sep_chunks = 0;
    for (const Slice& s : info.slices) {
        chunks += s.chunk;
        sep_chunks += s.separator_chunk;
    }
    out << "pattern: n=" << h.n() << " m=" << h.m() << '\n';
    out << "mu=" << info.mu << " muStar=" << info.mu_star << '\n';
    out << "slices=" << info.slices.size() << " chunks=" << chunks
        << " separatorChunks=" << sep_chunks << '\n';
    out << "minimalSeparators=" << info.minimal_separators.size() << '\n';
    out << "connected=" << (info.connected ? "yes" : "no")
        << " path=" << (info.is_path ? "yes" : "no")
        << " clique=" << (info.is_clique ? "yes" : "no")
        << " allComponentsCliques="
        << (info.all_components_cliques ? "yes" : "no") << '\n';
    out << "colorfulSolver=" << colorful_method(info) << '\n';
    out << "plainSolver=" << plain_method(info) << '\n';
    return 0;
}

struct SolveArgs {
    std::string graph, pattern, pattern_file, coloring, td_file;
    bool check_oracle = false;
    bool dump_states = false;
    bool certificate = false;
    int threads = 1;
};

int cmd_solve(const SolveArgs& a, const Caps& caps, std::ostream& out) {
    if (a.threads < 1)
        throw ParseError("--threads must be at least 1");
    Graph g = read_gr_file(a.graph);
    Graph h = load_pattern(a.pattern, a.pattern_file);
    PatternInfo info = analyze_pattern(h, caps);
    TreeDecomposition td;
    if (a.td_file.empty()) {
        td = heuristic_decompose(g);
    } else {
        td = read_td_file(a.td_file);
        ValidationReport rep = validate(g, td);
        if (!rep.ok)
            throw ParseError("invalid tree decomposition: " + rep.violation);
    }
    NiceDecomposition nd = make_nice(g, td);
    SolveOptions opts;
    opts.dump_states = a.dump_states;
    opts.threads = a.threads;

    SolveResult res;
    bool colorful = !a.coloring.empty();
    ColoredGraph cg;
    if (colorful) {
        cg.g = g;
        cg.color = read_coloring_file(a.coloring, g.n());
        cg.check(h.n());
        res = solve_colorful(cg, nd, info, caps, opts);
    } else if (info.is_clique && info.connected) {
        res = solve_plain_clique(g, nd, info);
    } else {
        res = solve_plain(g, nd, info, caps, opts);
    }

    out << "optimum=" << res.optimum << '\n';
    out << "method=" << res.stats.method << '\n';
    out << "t=" << res.stats.t << " niceNodes=" << res.stats.nice_nodes << '\n';
    out << "peakStates=" << res.stats.peak_states
        << " totalStates=" << res.stats.total_states << '\n';
    if (a.certificate)
        print_certificate(out, res.hitting_set);
    for (const std::string& line : res.state_dump)
        out << line << '\n';
    if (a.check_oracle) {
        int ora = colorful ? oracle_optimum(cg, info, caps)
                           : oracle_optimum(g, info, caps);
        bool ok = ora == res.optimum;
        out << "oracle=" << ora << " agreement=" << (ok ? "yes" : "no") << '\n';
        if (!ok)
            return 4;
    }
    return 0;
}

struct OracleArgs {
    std::string graph, pattern, pattern_file, coloring;
    int budget = -1;
    bool certificate = false;
};

int cmd_oracle(const OracleArgs& a, const Caps& caps, std::ostream& out) {
    Graph g = read_gr_file(a.graph);
    Graph h = load_pattern(a.pattern, a.pattern_file);
    PatternInfo info = analyze_pattern(h, caps);
    std::vector<int> sol;
    int res;
    if (!a.coloring.empty()) {
        ColoredGraph cg;
        cg.g = g;
        cg.color = read_coloring_file(a.coloring, g.n());
        cg.check(h.n());
        res = oracle_optimum(cg, info, caps, a.budget, &sol);
    } else {
        res = oracle_optimum(g, info, caps, a.budget, &sol);
    }
    out << "optimum=" << res << '\n';
    if (a.budget >= 0 && res > a.budget)
        out << "budgetExceeded=yes\n";
    else if (a.certificate)
        print_certificate(out, sol);
    return 0;
}

void write_outputs(const ReductionOutput& ro, const std::string& prefix,
                   std::ostream& out) {
    {
        std::ofstream f(prefix + ".gr");
        if (!f.good())
            throw ParseError("cannot write " + prefix + ".gr");
        write_gr(f, ro.graph);
    }
    if (!ro.color.empty()) {
        std::ofstream f(prefix + ".color");
        write_coloring(f, ro.color);
    }
    {
        std::ofstream f(prefix + ".td");
        write_td(f, ro.td, ro.graph.n());
    }
    {
        std::ofstream f(prefix + ".json");
        f << ro.manifest << '\n';
    }
    out << "k=" << ro.k << " width=" << ro.width << '\n';
    out << "hostVertices=" << ro.graph.n() << " hostEdges=" << ro.graph.m()
        << '\n';
    out << "wrote " << prefix << ".gr"
        << (!ro.color.empty() ? " " + prefix + ".color" : std::string())
        << ' ' << prefix << ".td " << prefix << ".json\n";
}

// Oracle cross-check of a generated instance, feasible only on small
// hosts. `expect_yes` < 0 means the answer is unknown; `exact_k` demands
// optimum == k instead of a yes/no match.
int verify_gen(const ReductionOutput& ro, const PatternInfo& info,
               const Caps& caps, int expect_yes, bool exact_k,
               std::ostream& out) {
    if (ro.graph.n() > caps.oracle_vertices) {
        out << "verify: oracle=skipped hostVertices=" << ro.graph.n()
            << " cap=" << caps.oracle_vertices << '\n';
        return 0;
    }
    int budget = exact_k ? -1 : ro.k;
    int opt;
    if (ro.color.empty())
        opt = oracle_optimum(ro.graph, info, caps, budget);
    else
        opt = oracle_optimum(ro.colored(), info, caps, budget);
    bool yes = opt <= ro.k;
    out << "verify: oracle optimum=" << opt << " k=" << ro.k << " yes="
        << (yes ? "yes" : "no") << '\n';
    if (exact_k && opt != ro.k) {
        out << "verify: MISMATCH optimum differs from k\n";
        return 4;
    }
    if (expect_yes >= 0 && yes != (expect_yes == 1)) {
        out << "verify: MISMATCH formula satisfiability disagrees\n";
        return 4;
    }
    return 0;
}

struct GenVcArgs {
    std::string g0, pattern, pattern_file, prefix;
    bool verify = false;
};

int cmd_gen_vc(const GenVcArgs& a, const Caps& caps, std::ostream& out) {
    Graph g0 = read_gr_file(a.g0);
    Graph h = load_pattern(a.pattern, a.pattern_file);
    ReductionOutput ro = gen_vc(g0, h, caps);
    write_outputs(ro, a.prefix, out);
    if (a.verify)
        return verify_gen(ro, analyze_pattern(h, caps), caps, -1, true, out);
    return 0;
}

struct GenCnfArgs {
    std::string cnf, pattern, pattern_file, prefix;
    int hh = 2;
    bool verify = false;
};

int cmd_gen_colorful(const GenCnfArgs& a, const Caps& caps, std::ostream& out) {
    CnfFormula f = read_dimacs_file(a.cnf);
    CnfFormula clean = is_clean(f) ? f : clean_3cnf(f);
    Graph h = load_pattern(a.pattern, a.pattern_file);
    ReductionOutput ro = gen_colorful(clean, h, caps);
    write_outputs(ro, a.prefix, out);
    if (a.verify) {
        int expect = f.nvars <= 30 ? (brute_force_sat(f) ? 1 : 0) : -1;
        return verify_gen(ro, analyze_pattern(h, caps), caps, expect, false, out);
    }
    return 0;
}

int cmd_gen_hh(const GenCnfArgs& a, const Caps& caps, std::ostream& out) {
    CnfFormula f = read_dimacs_file(a.cnf);
    CnfFormula clean = is_clean(f) ? f : clean_3cnf(f);
    ReductionOutput ro = gen_hh(clean, a.hh, caps);
    write_outputs(ro, a.prefix, out);
    if (a.verify) {
        int expect = f.nvars <= 30 ? (brute_force_sat(f) ? 1 : 0) : -1;
        return verify_gen(ro, analyze_pattern(make_hh(a.hh), caps), caps,
                          expect, false, out);
    }
    return 0;
}

struct TdArgs {
    std::string graph, validate_file, out_file;
    bool nice = false;
};

int cmd_td(const TdArgs& a, std::ostream& out) {
    Graph g = read_gr_file(a.graph);
    if (!a.validate_file.empty()) {
        TreeDecomposition td = read_td_file(a.validate_file);
        ValidationReport rep = validate(g, td);
        if (!rep.ok) {
            out << "valid=no violation=" << rep.violation << '\n';
            return 1;
        }
        out << "valid=yes width=" << td.width() << " bags=" << td.bags.size()
            << '\n';
        return 0;
    }
    TreeDecomposition td = heuristic_decompose(g);
    out << "width=" << td.width() << " bags=" << td.bags.size() << '\n';
    if (a.nice) {
        NiceDecomposition nd = make_nice(g, td);
        out << "niceNodes=" << nd.nodes.size() << " t=" << nd.t << '\n';
    }
    if (!a.out_file.empty()) {
        std::ofstream f(a.out_file);
        if (!f.good())
            throw ParseError("cannot write " + a.out_file);
        write_td(f, td, g.n());
        out << "wrote " << a.out_file << '\n';
    }
    return 0;
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"exact pattern subgraph hitting on graphs of small treewidth"};
    app.set_version_flag("--version", "subhit 0.1.0");
    app.require_subcommand(1);

    AnalyzeArgs an;
    CLI::App* analyze = app.add_subcommand(
        "analyze", "pattern structure and solver selection");
    analyze->add_option("--pattern", an.pattern,
                        "pattern name, e.g. P_4, C_5, K_4, K_2,3, paw, H_2");
    analyze->add_option("--pattern-file", an.pattern_file,
                        "pattern as a .gr file");

    SolveArgs so;
    CLI::App* solve = app.add_subcommand(
        "solve", "minimum deletion set on a host graph");
    solve->add_option("--graph", so.graph, "host graph (.gr)")->required();
    solve->add_option("--pattern", so.pattern, "pattern name");
    solve->add_option("--pattern-file", so.pattern_file, "pattern .gr file");
    solve->add_option("--coloring", so.coloring,
                      "host coloring; switches to the colorful problem");
    solve->add_option("--td", so.td_file,
                      "tree decomposition (.td); default is min-fill");
    solve->add_flag("--check-oracle", so.check_oracle,
                    "cross-check against the brute-force oracle");
    solve->add_flag("--dump-states", so.dump_states, "print the DP tables");
    solve->add_flag("--certificate", so.certificate,
                    "print one optimal deletion set, 1-based");
    solve->add_option("--threads", so.threads, "worker threads (reserved)");

    OracleArgs or_;
    CLI::App* oracle = app.add_subcommand(
        "oracle", "brute-force optimum on a small host");
    oracle->add_option("--graph", or_.graph, "host graph (.gr)")->required();
    oracle->add_option("--pattern", or_.pattern, "pattern name");
    oracle->add_option("--pattern-file", or_.pattern_file, "pattern .gr file");
    oracle->add_option("--coloring", or_.coloring, "host coloring");
    oracle->add_option("--budget", or_.budget,
                       "stop once the optimum provably exceeds this");
    oracle->add_flag("--certificate", or_.certificate,
                     "print one optimal deletion set, 1-based");

    CLI::App* gen = app.add_subcommand("gen", "hard instance generators");
    gen->require_subcommand(1);
    GenVcArgs gv;
    CLI::App* genvc = gen->add_subcommand(
        "vc", "vertex cover reduction (colorful)");
    genvc->add_option("--g0", gv.g0, "source graph (.gr)")->required();
    genvc->add_option("--pattern", gv.pattern, "pattern name");
    genvc->add_option("--pattern-file", gv.pattern_file, "pattern .gr file");
    genvc->add_option("--out-prefix", gv.prefix, "output path prefix")
        ->required();
    genvc->add_flag("--verify", gv.verify, "oracle cross-check when feasible");

    GenCnfArgs gc;
    CLI::App* gencol = gen->add_subcommand(
        "colorful", "3-SAT reduction (colorful, needs mu >= 2)");
    gencol->add_option("--cnf", gc.cnf, "formula (DIMACS)")->required();
    gencol->add_option("--pattern", gc.pattern, "pattern name");
    gencol->add_option("--pattern-file", gc.pattern_file, "pattern .gr file");
    gencol->add_option("--out-prefix", gc.prefix, "output path prefix")
        ->required();
    gencol->add_flag("--verify", gc.verify, "oracle cross-check when feasible");

    GenCnfArgs gh;
    CLI::App* genhh = gen->add_subcommand(
        "hh", "3-SAT reduction to plain hitting of the K_{2,h} pattern");
    genhh->add_option("--cnf", gh.cnf, "formula (DIMACS)")->required();
    genhh->add_option("--hh", gh.hh, "pattern parameter h >= 2");
    genhh->add_option("--out-prefix", gh.prefix, "output path prefix")
        ->required();
    genhh->add_flag("--verify", gh.verify, "oracle cross-check when feasible");

    TdArgs tda;
    CLI::App* td = app.add_subcommand(
        "td", "tree decompositions: compute or validate");
    td->add_option("--graph", tda.graph, "graph (.gr)")->required();
    td->add_option("--validate", tda.validate_file,
                   "check this .td instead of computing one");
    td->add_option("--out", tda.out_file, "write the computed .td here");
    td->add_flag("--nice", tda.nice, "also report the nice form size");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        const Caps caps = caps_from_env();
        if (analyze->parsed())
            return cmd_analyze(an, caps, out);
        if (solve->parsed())
            return cmd_solve(so, caps, out);
        if (oracle->parsed())
            return cmd_oracle(or_, caps, out);
        if (gen->parsed()) {
            if (genvc->parsed())
                return cmd_gen_vc(gv, caps, out);
            if (gencol->parsed())
                return cmd_gen_colorful(gc, caps, out);
            if (genhh->parsed())
                return cmd_gen_hh(gh, caps, out);
        }
        if (td->parsed())
            return cmd_td(tda, out);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const UnsupportedPatternError& e) {
        err << "error: " << e.what() << '\n';
        return 3;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

} // namespace subhit
