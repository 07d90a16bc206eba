#include "subhit/graph.hpp"

#include "subhit/errors.hpp"

#include <algorithm>
#include <cstdlib>

namespace subhit {

int Graph::add_vertex() {
    adj_.emplace_back();
    return n() - 1;
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n() || v >= n())
        throw ContractViolationError("add_edge: vertex out of range");
    if (u == v)
        throw ContractViolationError("add_edge: loops are not allowed");
    auto it = std::lower_bound(adj_[u].begin(), adj_[u].end(), v);
    if (it != adj_[u].end() && *it == v)
        return;
    adj_[u].insert(it, v);
    adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
    ++m_;
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n() || v >= n() || u == v)
        return false;
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> es;
    es.reserve(m_);
    for (int u = 0; u < n(); ++u)
        for (int v : adj_[u])
            if (u < v)
                es.emplace_back(u, v);
    return es;
}

std::vector<std::vector<int>> Graph::components() const {
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(n(), 0);
    for (int s = 0; s < n(); ++s) {
        if (seen[s])
            continue;
        std::vector<int> comp, stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (int w : adj_[u])
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool Graph::connected() const {
    if (n() <= 1)
        return true;
    return components().size() == 1;
}

Graph Graph::induced(const std::vector<int>& verts,
                     std::vector<int>* new_to_old) const {
    std::vector<int> vs = verts;
    std::sort(vs.begin(), vs.end());
    if (std::adjacent_find(vs.begin(), vs.end()) != vs.end())
        throw ContractViolationError("induced: duplicate vertex");
    std::vector<int> old_to_new(n(), -1);
    for (int i = 0; i < static_cast<int>(vs.size()); ++i) {
        if (vs[i] < 0 || vs[i] >= n())
            throw ContractViolationError("induced: vertex out of range");
        old_to_new[vs[i]] = i;
    }
    Graph sub(static_cast<int>(vs.size()));
    for (int i = 0; i < static_cast<int>(vs.size()); ++i)
        for (int w : adj_[vs[i]])
            if (old_to_new[w] > i)
                sub.add_edge(i, old_to_new[w]);
    if (new_to_old)
        *new_to_old = vs;
    return sub;
}

int BoundariedGraph::label_of(int v) const {
    for (std::size_t i = 0; i < boundary.size(); ++i)
        if (boundary[i] == v)
            return labels[i];
    return 0;
}

int BoundariedGraph::vertex_with_label(int l) const {
    for (std::size_t i = 0; i < boundary.size(); ++i)
        if (labels[i] == l)
            return boundary[i];
    return -1;
}

void BoundariedGraph::check() const {
    if (boundary.size() != labels.size())
        throw ContractViolationError("boundaried graph: boundary/labels size mismatch");
    if (!std::is_sorted(boundary.begin(), boundary.end()) ||
        std::adjacent_find(boundary.begin(), boundary.end()) != boundary.end())
        throw ContractViolationError("boundaried graph: boundary not sorted unique");
    std::vector<int> ls = labels;
    std::sort(ls.begin(), ls.end());
    if (std::adjacent_find(ls.begin(), ls.end()) != ls.end())
        throw ContractViolationError("boundaried graph: labels not injective");
    for (std::size_t i = 0; i < boundary.size(); ++i) {
        if (boundary[i] < 0 || boundary[i] >= g.n())
            throw ContractViolationError("boundaried graph: boundary vertex out of range");
        if (labels[i] < 1)
            throw ContractViolationError("boundaried graph: labels must be >= 1");
    }
}

void ColoredGraph::check(int pattern_n) const {
    if (static_cast<int>(color.size()) != g.n())
        throw ContractViolationError("colored graph: color array size mismatch");
    for (int c : color)
        if (c < 0 || c >= pattern_n)
            throw ContractViolationError("colored graph: color out of range");
}

int SmallGraph::add_vertex(int lab, int col, int origin) {
    if (n >= 64)
        throw ResourceLimitError("small graph cap exceeded (witness_vertices=64)");
    adj.push_back(0);
    label.push_back(lab);
    color.push_back(col);
    orig.push_back(origin);
    return n++;
}

void SmallGraph::add_edge(int u, int v) {
    adj[u] |= std::uint64_t{1} << v;
    adj[v] |= std::uint64_t{1} << u;
}

std::uint64_t SmallGraph::vertex_mask() const {
    return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

int SmallGraph::vertex_with_label(int l) const {
    for (int v = 0; v < n; ++v)
        if (label[v] == l)
            return v;
    return -1;
}

std::uint64_t SmallGraph::boundary_mask() const {
    std::uint64_t m = 0;
    for (int v = 0; v < n; ++v)
        if (label[v] != 0)
            m |= std::uint64_t{1} << v;
    return m;
}

SmallGraph SmallGraph::sub(std::uint64_t keep) const {
    SmallGraph s;
    std::vector<int> old_to_new(n, -1);
    for (int v = 0; v < n; ++v)
        if ((keep >> v) & 1u)
            old_to_new[v] = s.add_vertex(label[v], color[v], orig[v]);
    for (int v = 0; v < n; ++v) {
        if (old_to_new[v] < 0)
            continue;
        std::uint64_t nb = adj[v] & keep;
        while (nb) {
            int w = __builtin_ctzll(nb);
            nb &= nb - 1;
            if (w > v)
                s.add_edge(old_to_new[v], old_to_new[w]);
        }
    }
    return s;
}

std::string SmallGraph::encode() const {
    std::string s;
    s.reserve(static_cast<std::size_t>(n) * 10 + 1);
    s.push_back(static_cast<char>(n));
    for (int v = 0; v < n; ++v) {
        for (int b = 0; b < 8; ++b)
            s.push_back(static_cast<char>((adj[v] >> (8 * b)) & 0xff));
        s.push_back(static_cast<char>(label[v]));
        s.push_back(static_cast<char>(color[v] + 1));
    }
    return s;
}

SmallGraph to_small(const BoundariedGraph& bg) {
    if (bg.g.n() > 64)
        throw ResourceLimitError("small graph cap exceeded (witness_vertices=64)");
    SmallGraph s;
    for (int v = 0; v < bg.g.n(); ++v)
        s.add_vertex(bg.label_of(v), -1, v);
    for (auto [u, v] : bg.g.edges())
        s.add_edge(u, v);
    return s;
}

SmallGraph to_small(const ColoredGraph& cg) {
    if (cg.g.n() > 64)
        throw ResourceLimitError("small graph cap exceeded (witness_vertices=64)");
    SmallGraph s;
    for (int v = 0; v < cg.g.n(); ++v)
        s.add_vertex(0, cg.color[v], v);
    for (auto [u, v] : cg.g.edges())
        s.add_edge(u, v);
    return s;
}

SmallGraph glue(const SmallGraph& g1, const SmallGraph& g2) {
    SmallGraph out = g1;
    std::vector<int> map2(g2.n, -1);
    for (int v = 0; v < g2.n; ++v) {
        if (g2.label[v] != 0) {
            int u = out.vertex_with_label(g2.label[v]);
            if (u >= 0) {
                map2[v] = u;
                continue;
            }
        }
        map2[v] = out.add_vertex(g2.label[v], g2.color[v], g2.orig[v]);
    }
    for (int v = 0; v < g2.n; ++v) {
        std::uint64_t nb = g2.adj[v];
        while (nb) {
            int w = __builtin_ctzll(nb);
            nb &= nb - 1;
            if (w > v)
                out.add_edge(map2[v], map2[w]);
        }
    }
    return out;
}

BoundariedGraph glue(const BoundariedGraph& g1, const BoundariedGraph& g2) {
    return from_small(glue(to_small(g1), to_small(g2)));
}

BoundariedGraph from_small(const SmallGraph& sg) {
    BoundariedGraph bg;
    bg.g = Graph(sg.n);
    for (int v = 0; v < sg.n; ++v) {
        std::uint64_t nb = sg.adj[v];
        while (nb) {
            int w = __builtin_ctzll(nb);
            nb &= nb - 1;
            if (w > v)
                bg.g.add_edge(v, w);
        }
        if (sg.label[v] != 0) {
            bg.boundary.push_back(v);
            bg.labels.push_back(sg.label[v]);
        }
    }
    return bg;
}

} // namespace subhit
