#include "subhit/cnf.hpp"
#include "subhit/colorful_solver.hpp"
#include "subhit/hardness.hpp"
#include "subhit/oracle.hpp"
#include "subhit/pattern.hpp"
#include "subhit/plain_solver.hpp"
#include "subhit/errors.hpp"
#include "subhit/treedecomp.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <utility>
#include <vector>

namespace py = pybind11;
using namespace subhit;

namespace {

Graph graph_from(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges)
        g.add_edge(u, v);
    return g;
}

Graph pattern_from(const py::object& pattern) {
    if (py::isinstance<py::str>(pattern))
        return pattern_from_name(pattern.cast<std::string>());
    auto [n, edges] =
        pattern.cast<std::pair<int, std::vector<std::pair<int, int>>>>();
    return graph_from(n, edges);
}

py::dict analyze_dict(const Graph& h) {
    Caps caps;
    PatternInfo info = analyze_pattern(h, caps);
    int chunks = 0, sep_chunks = 0;
    for (const Slice& s : info.slices) {
        chunks += s.chunk;
        sep_chunks += s.separator_chunk;
    }
    py::dict d;
    d["n"] = h.n();
    d["m"] = h.m();
    d["mu"] = info.mu;
    d["mu_star"] = info.mu_star;
    d["slices"] = static_cast<int>(info.slices.size());
    d["chunks"] = chunks;
    d["separator_chunks"] = sep_chunks;
    d["minimal_separators"] = info.minimal_separators;
    d["connected"] = info.connected;
    d["is_path"] = info.is_path;
    d["is_clique"] = info.is_clique;
    d["all_components_cliques"] = info.all_components_cliques;
    return d;
}

py::dict solve_dict(const SolveResult& res) {
    py::dict d;
    d["optimum"] = res.optimum;
    d["hitting_set"] = res.hitting_set;
    d["method"] = res.stats.method;
    return d;
}

py::dict reduction_dict(const ReductionOutput& out) {
    py::dict d;
    d["n"] = out.graph.n();
    d["edges"] = out.graph.edges();
    d["color"] = out.color;
    d["k"] = out.k;
    d["width"] = out.width;
    d["manifest"] = out.manifest;
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact solvers for (colorful) H-subgraph hitting on graphs of "
              "small treewidth";
    m.attr("__version__") = "0.1.0";

    m.def(
        "analyze",
        [](const py::object& pattern) { return analyze_dict(pattern_from(pattern)); },
        py::arg("pattern"),
        "Structural analysis of a pattern given by name or (n, edges).");

    m.def(
        "solve",
        [](int n, const std::vector<std::pair<int, int>>& edges,
           const py::object& pattern, const std::vector<int>& color) {
            Caps caps = caps_from_env();
            Graph h = pattern_from(pattern);
            PatternInfo info = analyze_pattern(h, caps);
            Graph g = graph_from(n, edges);
            NiceDecomposition nd = make_nice(g, heuristic_decompose(g));
            if (color.empty())
                return solve_dict(solve_plain(g, nd, info, caps));
            ColoredGraph cg{g, color};
            return solve_dict(solve_colorful(cg, nd, info, caps));
        },
        py::arg("n"), py::arg("edges"), py::arg("pattern"),
        py::arg("color") = std::vector<int>{},
        "Minimum deletion set so no (color-respecting) pattern copy remains.");

    m.def(
        "oracle",
        [](int n, const std::vector<std::pair<int, int>>& edges,
           const py::object& pattern, const std::vector<int>& color,
           int budget) {
            Caps caps = caps_from_env();
            PatternInfo info = analyze_pattern(pattern_from(pattern), caps);
            Graph g = graph_from(n, edges);
            if (color.empty())
                return oracle_optimum(g, info, caps, budget);
            return oracle_optimum(ColoredGraph{g, color}, info, caps, budget);
        },
        py::arg("n"), py::arg("edges"), py::arg("pattern"),
        py::arg("color") = std::vector<int>{}, py::arg("budget") = -1,
        "Reference optimum by explicit occurrence enumeration.");

    m.def(
        "treewidth",
        [](int n, const std::vector<std::pair<int, int>>& edges) {
            Graph g = graph_from(n, edges);
            TreeDecomposition td = heuristic_decompose(g);
            contract_check(validate(g, td).ok, "heuristic decomposition invalid");
            return td.width();
        },
        py::arg("n"), py::arg("edges"),
        "Width of the min-fill heuristic tree decomposition.");

    m.def(
        "clean_3cnf",
        [](int nvars, const std::vector<std::vector<int>>& clauses) {
            CnfFormula clean = clean_3cnf(CnfFormula{nvars, clauses});
            return std::make_pair(clean.nvars, clean.clauses);
        },
        py::arg("nvars"), py::arg("clauses"),
        "Equisatisfiable formula where every variable occurs exactly three "
        "times with both signs and clauses have 2 or 3 distinct variables.");

    m.def(
        "is_clean",
        [](int nvars, const std::vector<std::vector<int>>& clauses) {
            return is_clean(CnfFormula{nvars, clauses});
        },
        py::arg("nvars"), py::arg("clauses"),
        "Whether the formula is already in clean form.");

    m.def(
        "gen_vc",
        [](int g0_n, const std::vector<std::pair<int, int>>& g0_edges,
           const py::object& pattern) {
            Caps caps = caps_from_env();
            return reduction_dict(
                gen_vc(graph_from(g0_n, g0_edges), pattern_from(pattern), caps));
        },
        py::arg("g0_n"), py::arg("g0_edges"), py::arg("pattern"),
        "Vertex-cover reduction to colorful pattern hitting.");

    m.def(
        "gen_colorful",
        [](int nvars, const std::vector<std::vector<int>>& clauses,
           const py::object& pattern) {
            Caps caps = caps_from_env();
            CnfFormula f{nvars, clauses};
            if (!is_clean(f))
                f = clean_3cnf(f);
            return reduction_dict(gen_colorful(f, pattern_from(pattern), caps));
        },
        py::arg("nvars"), py::arg("clauses"), py::arg("pattern"),
        "3-SAT reduction to colorful pattern hitting (cleans the input if "
        "needed).");

    m.def(
        "gen_hh",
        [](int nvars, const std::vector<std::vector<int>>& clauses, int hh) {
            Caps caps = caps_from_env();
            CnfFormula f{nvars, clauses};
            if (!is_clean(f))
                f = clean_3cnf(f);
            return reduction_dict(gen_hh(f, hh, caps));
        },
        py::arg("nvars"), py::arg("clauses"), py::arg("hh") = 2,
        "3-SAT reduction to plain H_hh-subgraph hitting (cleans the input if "
        "needed).");

    py::register_exception<UnsupportedPatternError>(m, "UnsupportedPatternError",
                                                    PyExc_ValueError);
    py::register_exception<ResourceLimitError>(m, "ResourceLimitError",
                                               PyExc_RuntimeError);
    py::register_exception<ContractViolationError>(m, "ContractViolationError",
                                                   PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
}
