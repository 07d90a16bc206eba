#include "subhit/hardness.hpp"

#include "subhit/errors.hpp"
#include "subhit/oracle.hpp"

#include <json.hpp>

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <iterator>
#include <map>
#include <numeric>
#include <utility>

namespace subhit {

namespace {

using nlohmann::json;

int pos_in(const std::vector<int>& sorted, int v) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), v);
    assert(it != sorted.end() && *it == v);
    return static_cast<int>(it - sorted.begin());
}

std::vector<int> sorted_union(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> r;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

// Sorted component of start in g minus the blocked vertices.
std::vector<int> reach(const Graph& g, int start, const std::vector<char>& blocked) {
    std::vector<char> seen(g.n(), 0);
    std::vector<int> stack{start}, comp;
    seen[start] = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        comp.push_back(u);
        for (int w : g.neighbors(u))
            if (!seen[w] && !blocked[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
    }
    std::sort(comp.begin(), comp.end());
    return comp;
}

std::vector<int> neighborhood(const Graph& g, const std::vector<int>& verts) {
    std::vector<char> in(g.n(), 0);
    for (int v : verts)
        in[v] = 1;
    std::vector<int> nb;
    for (int v : verts)
        for (int w : g.neighbors(v))
            if (!in[w])
                nb.push_back(w);
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    return nb;
}

bool is_cutvertex(const Graph& g, int v) {
    std::vector<char> blocked(g.n(), 0);
    std::vector<int> comp = reach(g, v, blocked);
    if (comp.size() <= 2)
        return false;
    blocked[v] = 1;
    int start = comp[0] == v ? comp[1] : comp[0];
    return reach(g, start, blocked).size() != comp.size() - 1;
}

// Host under construction. Fresh copy vertices take the color
// recolor[pattern vertex]; plain hosts leave colored false.
struct HostBuilder {
    Graph g;
    std::vector<int> color;
    bool colored = false;
    std::vector<int> recolor;

    int add(int c) {
        int v = g.add_vertex();
        color.push_back(c);
        return v;
    }

    // Copy of h[verts], with identify mapping some of verts onto existing
    // host vertices. Returns the image of every copied vertex.
    std::map<int, int> copy(const Graph& h, const std::vector<int>& verts,
                            const std::map<int, int>& identify) {
        std::map<int, int> img;
        for (int p : verts) {
            auto it = identify.find(p);
            if (it != identify.end()) {
                if (colored)
                    contract_check(color[it->second] == recolor[p],
                                   "identification changes a vertex color");
                img[p] = it->second;
            } else {
                img[p] = add(colored ? recolor[p] : -1);
            }
        }
        for (std::size_t i = 0; i < verts.size(); ++i)
            for (std::size_t j = i + 1; j < verts.size(); ++j)
                if (h.has_edge(verts[i], verts[j]))
                    g.add_edge(img.at(verts[i]), img.at(verts[j]));
        return img;
    }
};

// Three copies of H[D] between contacts u and v: the middle copy is glued
// to the u-side copy at S[0] and to the v-side copy at S[1], the outer
// copies' alpha vertices land on the contacts.
void attach_or_gadget(HostBuilder& b, const Graph& h, const SeparatorChoice& sc,
                      int alpha, int u, int v) {
    int c = sc.S[0], d = sc.S[1];
    std::map<int, int> mid = b.copy(h, sc.D, {});
    b.copy(h, sc.D, {{alpha, u}, {c, mid.at(c)}});
    b.copy(h, sc.D, {{alpha, v}, {d, mid.at(d)}});
}

// Star decomposition: root bag {0..root_count-1}, one child bag per
// component of the rest, extended by the root bag.
TreeDecomposition star_td(const Graph& g, int root_count) {
    TreeDecomposition td;
    std::vector<int> root(root_count);
    std::iota(root.begin(), root.end(), 0);
    td.bags.push_back(root);
    std::vector<char> seen(g.n(), 0);
    for (int v = root_count; v < g.n(); ++v) {
        if (seen[v])
            continue;
        std::vector<int> comp, stack{v};
        seen[v] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (int w : g.neighbors(u))
                if (w >= root_count && !seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        std::vector<int> bag = root;
        bag.insert(bag.end(), comp.begin(), comp.end());
        td.tree_edges.emplace_back(0, static_cast<int>(td.bags.size()));
        td.bags.push_back(std::move(bag));
    }
    return td;
}

ReductionOutput finish(HostBuilder&& b, int root_count, int k, json extra) {
    ReductionOutput out;
    out.graph = std::move(b.g);
    if (b.colored)
        out.color = std::move(b.color);
    out.k = k;
    out.td = star_td(out.graph, root_count);
    ValidationReport rep = validate(out.graph, out.td);
    contract_check(rep.ok, "generated decomposition invalid: " + rep.violation);
    out.width = out.td.width();
    extra["host_vertices"] = out.graph.n();
    extra["host_edges"] = out.graph.m();
    extra["k"] = k;
    extra["width"] = out.width;
    out.manifest = extra.dump(2);
    return out;
}

long long ipow(long long base, int e) {
    long long r = 1;
    for (int i = 0; i < e; ++i) {
        r *= base;
        if (r > (1LL << 40))
            return r;
    }
    return r;
}

int min_base(int arity, long long target) {
    int s = 1;
    while (ipow(s, arity) < target)
        ++s;
    return s;
}

// t-th function into {0..s-1} as a digit vector, lexicographic in t.
std::vector<int> nth_function(long long t, int arity, int s) {
    std::vector<int> vals(arity, 0);
    for (int pos = arity - 1; pos >= 0; --pos) {
        vals[pos] = static_cast<int>(t % s);
        t /= s;
    }
    assert(t == 0);
    return vals;
}

struct Occurrence {
    int clause;
    int lit;
    bool positive;
};

std::vector<std::vector<Occurrence>> occurrences_by_var(const CnfFormula& f) {
    std::vector<std::vector<Occurrence>> occ(f.nvars + 1);
    for (int c = 0; c < f.m(); ++c)
        for (int j = 0; j < static_cast<int>(f.clauses[c].size()); ++j) {
            int lit = f.clauses[c][j];
            occ[std::abs(lit)].push_back({c, j, lit > 0});
        }
    return occ;
}

// One private function per clause literal, assigned in formula order so
// distinct literals never share one.
struct LiteralFunctions {
    std::vector<std::vector<int>> fvals;
    std::vector<std::vector<int>> index;
};

LiteralFunctions assign_functions(const CnfFormula& f, int arity, int s) {
    LiteralFunctions lf;
    lf.index.resize(f.m());
    long long t = 0;
    for (int c = 0; c < f.m(); ++c) {
        lf.index[c].resize(f.clauses[c].size());
        for (std::size_t j = 0; j < f.clauses[c].size(); ++j) {
            lf.index[c][j] = static_cast<int>(lf.fvals.size());
            lf.fvals.push_back(nth_function(t++, arity, s));
        }
    }
    contract_check(t <= ipow(s, arity), "function supply exhausted");
    return lf;
}

} // namespace

ColoredGraph ReductionOutput::colored() const {
    contract_check(!color.empty() || graph.n() == 0,
                   "reduction output has no colors");
    ColoredGraph cg;
    cg.g = graph;
    cg.color = color;
    return cg;
}

SeparatorChoice choose_separator(const Graph& h, const PatternInfo& info) {
    contract_check(info.mu >= 1, "separator choice needs a pattern with mu >= 1");
    const int n = h.n();
    std::vector<char> cut(n, 0);
    for (int v = 0; v < n; ++v)
        cut[v] = is_cutvertex(h, v);
    std::vector<char> blocked(n, 0);
    for (int a = 0; a < n; ++a) {
        if (cut[a])
            continue;
        for (int b = a + 1; b < n; ++b) {
            if (cut[b])
                continue;
            for (const std::vector<int>& S : info.minimal_separators) {
                if (static_cast<int>(S.size()) != info.mu)
                    continue;
                if (std::binary_search(S.begin(), S.end(), a) ||
                    std::binary_search(S.begin(), S.end(), b))
                    continue;
                std::fill(blocked.begin(), blocked.end(), 0);
                for (int c : S)
                    blocked[c] = 1;
                std::vector<int> A = reach(h, a, blocked);
                if (std::binary_search(A.begin(), A.end(), b))
                    continue;
                std::vector<int> B = reach(h, b, blocked);
                if (neighborhood(h, A) != S || neighborhood(h, B) != S)
                    continue;
                SeparatorChoice sc;
                sc.a = a;
                sc.b = b;
                sc.S = S;
                sc.A = std::move(A);
                sc.B = std::move(B);
                std::fill(blocked.begin(), blocked.end(), 0);
                sc.D = reach(h, a, blocked);
                assert(std::binary_search(sc.D.begin(), sc.D.end(), b));
                return sc;
            }
        }
    }
    throw ContractViolationError(
        "no separation with non-cutvertex endpoints found");
}

GadgetInstance build_or_gadget(const Graph& h, const Caps& caps) {
    PatternInfo info = analyze_pattern(h, caps);
    contract_check(info.mu >= 2, "OR gadget needs mu >= 2");
    SeparatorChoice sc = choose_separator(h, info);
    HostBuilder b;
    b.colored = true;
    b.recolor.assign(h.n(), -1);
    for (std::size_t i = 0; i < sc.D.size(); ++i)
        b.recolor[sc.D[i]] = static_cast<int>(i);
    GadgetInstance gi;
    gi.pattern = h.induced(sc.D);
    int u = b.add(b.recolor[sc.a]);
    int v = b.add(b.recolor[sc.a]);
    attach_or_gadget(b, h, sc, sc.a, u, v);
    gi.g.g = std::move(b.g);
    gi.g.color = std::move(b.color);
    gi.attachments = {u, v};
    return gi;
}

GadgetInstance build_alpha_r_cycle(const Graph& h, int r, const Caps& caps) {
    contract_check(r >= 2, "gadget cycle needs r >= 2");
    PatternInfo info = analyze_pattern(h, caps);
    contract_check(info.mu >= 2, "OR gadget needs mu >= 2");
    SeparatorChoice sc = choose_separator(h, info);
    HostBuilder b;
    b.colored = true;
    b.recolor.assign(h.n(), -1);
    for (std::size_t i = 0; i < sc.D.size(); ++i)
        b.recolor[sc.D[i]] = static_cast<int>(i);
    GadgetInstance gi;
    gi.pattern = h.induced(sc.D);
    gi.attachments.resize(r);
    for (int i = 0; i < r; ++i)
        gi.attachments[i] = b.add(b.recolor[sc.a]);
    for (int i = 0; i < r; ++i)
        attach_or_gadget(b, h, sc, sc.a, gi.attachments[i],
                         gi.attachments[(i + 1) % r]);
    gi.g.g = std::move(b.g);
    gi.g.color = std::move(b.color);
    return gi;
}

ReductionOutput gen_vc(const Graph& g0, const Graph& h, const Caps& caps) {
    std::vector<int> C;
    for (const auto& comp : h.components()) {
        bool path = true;
        int edges = 0;
        for (int v : comp) {
            if (h.degree(v) > 2)
                path = false;
            edges += h.degree(v);
        }
        if (edges / 2 != static_cast<int>(comp.size()) - 1)
            path = false;
        if (!path) {
            C = comp;
            break;
        }
    }
    if (C.empty())
        throw UnsupportedPatternError(
            "vertex cover reduction needs a pattern component that is not a path");
    std::vector<int> noncut;
    for (int v : C)
        if (!is_cutvertex(h, v))
            noncut.push_back(v);
    contract_check(noncut.size() >= 3,
                   "too few non-cutvertices in the gadget component");
    const int va = noncut[0], vb = noncut[1], vc = noncut[2];

    HostBuilder b;
    b.colored = true;
    b.recolor.resize(h.n());
    std::iota(b.recolor.begin(), b.recolor.end(), 0);
    for (int u = 0; u < g0.n(); ++u)
        b.add(va);
    for (auto [u, v] : g0.edges())
        b.g.add_edge(u, v);

    // Per edge: a free copy and two contact copies chained to it, so that
    // killing every copy needs one endpoint plus one deletion per edge.
    for (auto [u, v] : g0.edges()) {
        auto mid = b.copy(h, C, {});
        b.copy(h, C, {{va, u}, {vb, mid.at(vb)}});
        b.copy(h, C, {{va, v}, {vc, mid.at(vc)}});
    }

    std::vector<int> rest;
    for (int v = 0; v < h.n(); ++v)
        if (!std::binary_search(C.begin(), C.end(), v))
            rest.push_back(v);
    if (!rest.empty())
        for (int i = 0; i < g0.m() + g0.n() + 1; ++i)
            b.copy(h, rest, {});

    std::vector<std::vector<int>> edge_sets;
    for (auto [u, v] : g0.edges())
        edge_sets.push_back({u, v});
    const int vc_size = min_hitting_set(g0.n(), edge_sets, caps);
    const int k = vc_size + g0.m();

    json extra;
    extra["kind"] = "vc";
    extra["g0_vertices"] = g0.n();
    extra["g0_edges"] = g0.m();
    extra["vertex_cover"] = vc_size;
    extra["contacts"] = {va, vb, vc};
    extra["pattern_vertices"] = h.n();
    return finish(std::move(b), g0.n(), k, std::move(extra));
}

ReductionOutput gen_colorful(const CnfFormula& clean, const Graph& h,
                             const Caps& caps) {
    contract_check(is_clean(clean), "gen_colorful needs a clean formula");
    PatternInfo info = analyze_pattern(h, caps);
    if (info.mu < 2)
        throw UnsupportedPatternError(
            "3-SAT reduction needs mu >= 2; use the vertex cover reduction");
    SeparatorChoice sc = choose_separator(h, info);
    const int mu = static_cast<int>(sc.S.size());
    assert(mu == info.mu);
    const int n = clean.nvars;
    const int m = clean.m();
    const int s = min_base(mu, 3LL * n);

    HostBuilder b;
    b.colored = true;
    b.recolor.resize(h.n());
    std::iota(b.recolor.begin(), b.recolor.end(), 0);

    // Shared separator pool: s copies of S, one column per S position.
    for (int i = 0; i < s; ++i)
        for (int c : sc.S)
            b.add(c);
    auto w_id = [&](int i, int spos) { return i * mu + spos; };

    LiteralFunctions lf = assign_functions(clean, mu, s);
    auto identify_sep = [&](int li) {
        std::map<int, int> ident;
        for (int pos = 0; pos < mu; ++pos)
            ident[sc.S[pos]] = w_id(lf.fvals[li][pos], pos);
        return ident;
    };

    const std::vector<int> NA = sorted_union(sc.A, sc.S);
    const std::vector<int> NB = sorted_union(sc.B, sc.S);
    auto occ = occurrences_by_var(clean);

    // Variable gadgets: one a-side copy per occurrence, a dummy contact,
    // and a 4-cycle of OR gadgets with the minority occurrence sitting
    // between the two majority ones.
    for (int x = 1; x <= n; ++x) {
        const auto& o = occ[x];
        assert(o.size() == 3);
        int positives = o[0].positive + o[1].positive + o[2].positive;
        bool majority = positives >= 2;
        std::vector<int> maj, mino;
        std::vector<int> a_img(3);
        for (int i = 0; i < 3; ++i) {
            auto img = b.copy(h, NA, identify_sep(lf.index[o[i].clause][o[i].lit]));
            a_img[i] = img.at(sc.a);
            (o[i].positive == majority ? maj : mino).push_back(i);
        }
        int ax = b.add(sc.a);
        const int cyc[4] = {a_img[maj[0]], a_img[mino[0]], a_img[maj[1]], ax};
        for (int i = 0; i < 4; ++i)
            attach_or_gadget(b, h, sc, sc.a, cyc[i], cyc[(i + 1) % 4]);
    }

    // Clause gadgets: one b-side copy per literal and a cycle of OR
    // gadgets in literal order.
    for (int c = 0; c < m; ++c) {
        int r = static_cast<int>(clean.clauses[c].size());
        std::vector<int> b_img(r);
        for (int j = 0; j < r; ++j)
            b_img[j] = b.copy(h, NB, identify_sep(lf.index[c][j])).at(sc.b);
        for (int j = 0; j < r; ++j)
            attach_or_gadget(b, h, sc, sc.b, b_img[j], b_img[(j + 1) % r]);
    }

    // Fillers: the remaining components of H[D] - S under every possible
    // separator assignment, so embeddings are never starved of them.
    int fillers = 0;
    {
        std::vector<char> blocked(h.n(), 0), seen(h.n(), 0);
        for (int c : sc.S)
            blocked[c] = 1;
        for (int v : sc.D) {
            if (blocked[v] || seen[v])
                continue;
            std::vector<int> L = reach(h, v, blocked);
            for (int u : L)
                seen[u] = 1;
            if (L == sc.A || L == sc.B)
                continue;
            std::vector<int> NL = neighborhood(h, L);
            for (int u : NL)
                contract_check(std::binary_search(sc.S.begin(), sc.S.end(), u),
                               "filler neighborhood leaves the separator");
            const int arity = static_cast<int>(NL.size());
            const std::vector<int> verts = sorted_union(L, NL);
            for (long long t = 0; t < ipow(s, arity); ++t) {
                std::vector<int> vals = nth_function(t, arity, s);
                std::map<int, int> ident;
                for (int pos = 0; pos < arity; ++pos)
                    ident[NL[pos]] = w_id(vals[pos], pos_in(sc.S, NL[pos]));
                b.copy(h, verts, ident);
                ++fillers;
            }
        }
    }

    const int k = 12 * n - m;

    // Pattern leftovers outside D; k + 1 disjoint copies keep deletions
    // inside the gadgets.
    std::vector<int> rest;
    for (int v = 0; v < h.n(); ++v)
        if (!std::binary_search(sc.D.begin(), sc.D.end(), v))
            rest.push_back(v);
    if (!rest.empty())
        for (int i = 0; i <= k; ++i)
            b.copy(h, rest, {});

    json extra;
    extra["kind"] = "colorful-3sat";
    extra["variables"] = n;
    extra["clauses"] = m;
    extra["s"] = s;
    extra["mu"] = mu;
    extra["a"] = sc.a;
    extra["b"] = sc.b;
    extra["separator"] = sc.S;
    extra["fillers"] = fillers;
    extra["pattern_vertices"] = h.n();
    return finish(std::move(b), s * mu, k, std::move(extra));
}

ReductionOutput gen_hh(const CnfFormula& clean, int hh, const Caps& caps) {
    contract_check(is_clean(clean), "gen_hh needs a clean formula");
    contract_check(hh >= 2, "gen_hh needs hh >= 2");
    (void)caps;
    const Graph hg = make_hh(hh);
    const int n = clean.nvars;
    const int m = clean.m();
    const int s = min_base(hh, 3LL * n);

    HostBuilder b;
    for (int j = 0; j < s; ++j)
        for (int i = 0; i < hh; ++i)
            b.add(-1);
    auto w_id = [&](int j, int i) { return j * hh + i; };

    LiteralFunctions lf = assign_functions(clean, hh, s);
    std::vector<int> all_h(hg.n());
    std::iota(all_h.begin(), all_h.end(), 0);
    // Pattern copy glued at a contact pair onto its two degree-hh vertices.
    auto attach = [&](int u, int v) { b.copy(hg, all_h, {{0, u}, {1, v}}); };
    // Hub adjacent to the shared vertices selected by literal li.
    auto hub = [&](int li) {
        int v = b.add(-1);
        for (int i = 0; i < hh; ++i)
            b.g.add_edge(v, w_id(lf.fvals[li][i], i));
        return v;
    };

    auto occ = occurrences_by_var(clean);
    // Variable gadgets: three occurrence hubs plus a dummy, pattern copies
    // on the four pairs of a 4-cycle with the minority hub in the middle.
    for (int x = 1; x <= n; ++x) {
        const auto& o = occ[x];
        assert(o.size() == 3);
        int positives = o[0].positive + o[1].positive + o[2].positive;
        bool majority = positives >= 2;
        std::vector<int> maj, mino;
        std::vector<int> a_img(3);
        for (int i = 0; i < 3; ++i) {
            a_img[i] = hub(lf.index[o[i].clause][o[i].lit]);
            (o[i].positive == majority ? maj : mino).push_back(i);
        }
        int ax = b.add(-1);
        attach(a_img[maj[0]], a_img[mino[0]]);
        attach(a_img[maj[1]], a_img[mino[0]]);
        attach(a_img[maj[0]], ax);
        attach(a_img[maj[1]], ax);
    }
    // Clause gadgets: one hub per literal, a pattern copy on every pair.
    for (int c = 0; c < m; ++c) {
        int r = static_cast<int>(clean.clauses[c].size());
        std::vector<int> b_img(r);
        for (int j = 0; j < r; ++j)
            b_img[j] = hub(lf.index[c][j]);
        for (int j1 = 0; j1 < r; ++j1)
            for (int j2 = j1 + 1; j2 < r; ++j2)
                attach(b_img[j1], b_img[j2]);
    }

    const int k = 5 * n - m;

    json extra;
    extra["kind"] = "hh-3sat";
    extra["h"] = hh;
    extra["variables"] = n;
    extra["clauses"] = m;
    extra["s"] = s;
    extra["pattern_vertices"] = hg.n();
    return finish(std::move(b), s * hh, k, std::move(extra));
}

} // namespace subhit
