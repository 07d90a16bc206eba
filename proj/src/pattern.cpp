#include "subhit/pattern.hpp"

#include "subhit/errors.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>

namespace subhit {

namespace {

std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

// Closed/open neighborhoods of a vertex mask.
std::uint64_t nbrs(const Graph& h, std::uint64_t mask) {
    std::uint64_t out = 0;
    for (int v = 0; v < h.n(); ++v)
        if ((mask >> v) & 1u)
            for (int w : h.neighbors(v))
                out |= bit(w);
    return out & ~mask;
}

bool connected_mask(const Graph& h, std::uint64_t mask) {
    if (mask == 0)
        return false;
    int start = __builtin_ctzll(mask);
    std::uint64_t seen = bit(start), frontier = seen;
    while (frontier) {
        std::uint64_t next = 0;
        for (int v = 0; v < h.n(); ++v)
            if ((frontier >> v) & 1u)
                for (int w : h.neighbors(v))
                    if (((mask >> w) & 1u) && !((seen >> w) & 1u))
                        next |= bit(w);
        seen |= next;
        frontier = next;
    }
    return seen == mask;
}

// Components of H - removed, as masks.
std::vector<std::uint64_t> components_without(const Graph& h,
                                              std::uint64_t removed) {
    std::vector<std::uint64_t> comps;
    std::uint64_t todo = ((h.n() == 64 ? ~std::uint64_t{0}
                                       : (std::uint64_t{1} << h.n()) - 1)) &
                         ~removed;
    while (todo) {
        int s = __builtin_ctzll(todo);
        std::uint64_t comp = bit(s), frontier = comp;
        while (frontier) {
            std::uint64_t next = 0;
            for (int v = 0; v < h.n(); ++v)
                if ((frontier >> v) & 1u)
                    for (int w : h.neighbors(v))
                        if ((todo >> w) & 1u && !((comp >> w) & 1u))
                            next |= bit(w);
            comp |= next;
            frontier = next;
        }
        comps.push_back(comp);
        todo &= ~comp;
    }
    return comps;
}

bool separates(const Graph& h, int a, int b, std::uint64_t s) {
    std::uint64_t seen = bit(a), frontier = seen;
    while (frontier) {
        std::uint64_t next = 0;
        for (int v = 0; v < h.n(); ++v)
            if ((frontier >> v) & 1u)
                for (int w : h.neighbors(v))
                    if (!((s >> w) & 1u) && !((seen >> w) & 1u))
                        next |= bit(w);
        seen |= next;
        frontier = next;
    }
    return !((seen >> b) & 1u);
}

std::vector<int> mask_to_vec(std::uint64_t mask) {
    std::vector<int> out;
    while (mask) {
        out.push_back(__builtin_ctzll(mask));
        mask &= mask - 1;
    }
    return out;
}

} // namespace

int PatternInfo::slice_by_verts(std::uint64_t verts) const {
    for (std::size_t i = 0; i < slices.size(); ++i)
        if (slices[i].verts == verts)
            return static_cast<int>(i);
    return -1;
}

PatternInfo analyze_pattern(const Graph& h, const Caps& caps) {
    if (h.n() == 0)
        throw ContractViolationError("pattern must have at least one vertex");
    if (h.n() > caps.pattern_vertices)
        throw ResourceLimitError("pattern exceeds cap (pattern_vertices=" +
                                 std::to_string(caps.pattern_vertices) + ")");
    PatternInfo info;
    info.h = h;
    const int n = h.n();
    const std::uint64_t all = (std::uint64_t{1} << n) - 1;

    for (std::uint64_t d = 0;; ++d) {
        std::uint64_t boundary = 0;
        for (int v = 0; v < n; ++v)
            if ((d >> v) & 1u)
                for (int w : h.neighbors(v))
                    if (!((d >> w) & 1u))
                        boundary |= bit(v);
        std::uint64_t interior = d & ~boundary;
        if (nbrs(h, interior) == boundary) {
            Slice s;
            s.verts = d;
            s.boundary = boundary;
            s.interior = interior;
            s.chunk = interior != 0 && connected_mask(h, interior);
            if (s.chunk)
                for (std::uint64_t comp : components_without(h, d))
                    if (nbrs(h, comp) == boundary) {
                        s.separator_chunk = true;
                        break;
                    }
            info.slices.push_back(s);
        }
        if (d == all)
            break;
    }
    std::sort(info.slices.begin(), info.slices.end(),
              [](const Slice& a, const Slice& b) {
                  if (a.size() != b.size())
                      return a.size() < b.size();
                  return a.verts < b.verts;
              });
    info.full_slice_id = info.slice_by_verts(all);

    for (const Slice& s : info.slices)
        if (s.chunk)
            info.mu_star = std::max(info.mu_star, s.boundary_size());

    std::vector<std::uint64_t> seps;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            if (h.has_edge(a, b))
                continue;
            std::uint64_t pool = all & ~bit(a) & ~bit(b);
            // Iterate subsets of the pool; keep candidates minimal per pair.
            std::uint64_t s = 0;
            while (true) {
                if (separates(h, a, b, s)) {
                    bool minimal = true;
                    for (int x : mask_to_vec(s))
                        if (separates(h, a, b, s & ~bit(x))) {
                            minimal = false;
                            break;
                        }
                    if (minimal)
                        seps.push_back(s);
                }
                if (s == pool)
                    break;
                s = (s - pool) & pool; // next subset of pool
            }
        }
    std::sort(seps.begin(), seps.end());
    seps.erase(std::unique(seps.begin(), seps.end()), seps.end());
    std::sort(seps.begin(), seps.end(), [](std::uint64_t a, std::uint64_t b) {
        if (popcount64(a) != popcount64(b))
            return popcount64(a) < popcount64(b);
        return a < b;
    });
    for (std::uint64_t s : seps) {
        info.minimal_separators.push_back(mask_to_vec(s));
        info.mu = std::max(info.mu, popcount64(s));
    }

    info.comps = h.components();
    info.connected = info.comps.size() == 1;
    info.is_clique = h.m() == n * (n - 1) / 2;
    info.all_components_cliques = true;
    for (const auto& comp : info.comps) {
        int k = static_cast<int>(comp.size());
        int edges = 0;
        for (int v : comp)
            for (int w : h.neighbors(v))
                if (w > v)
                    ++edges;
        if (edges != k * (k - 1) / 2)
            info.all_components_cliques = false;
    }

    if (info.connected) {
        int deg1 = 0, deg2 = 0;
        for (int v = 0; v < n; ++v) {
            if (h.degree(v) == 1)
                ++deg1;
            else if (h.degree(v) == 2)
                ++deg2;
        }
        if (n == 1 || (deg1 == 2 && deg1 + deg2 == n)) {
            info.is_path = true;
            int start = 0;
            for (int v = 0; v < n; ++v)
                if (h.degree(v) <= 1) {
                    start = v;
                    break;
                }
            info.path_order.push_back(start);
            int prev = -1, cur = start;
            while (static_cast<int>(info.path_order.size()) < n) {
                int next = -1;
                for (int w : h.neighbors(cur))
                    if (w != prev)
                        next = w;
                prev = cur;
                cur = next;
                info.path_order.push_back(cur);
            }
        }
    }
    return info;
}

CoreSplit core_slice_and_peelings(const PatternInfo& info, std::uint64_t P) {
    const Graph& h = info.h;
    std::uint64_t bd = 0;
    for (int v = 0; v < h.n(); ++v)
        if ((P >> v) & 1u)
            for (int w : h.neighbors(v))
                if (!((P >> w) & 1u))
                    bd |= bit(v);
    std::uint64_t interior = P & ~bd;
    std::uint64_t core_verts = interior | nbrs(h, interior);
    CoreSplit cs;
    cs.slice_id = info.slice_by_verts(core_verts);
    if (cs.slice_id < 0)
        throw ContractViolationError("core slice does not exist; broken slice table");
    cs.peelings = P & ~core_verts;
    return cs;
}

Piece piece_for_tchunk(const PatternInfo& info, const TChunk& tc,
                       bool colored) {
    const Slice& s = info.slices[tc.slice_id];
    Piece piece;
    piece.colored = colored;
    std::vector<int> verts = mask_to_vec(s.verts);
    std::size_t bi = 0;
    for (int v : verts) {
        if ((s.boundary >> v) & 1u)
            piece.add_vertex(v, tc.labels[bi++]);
        else
            piece.add_vertex(v, 0);
    }
    assert(bi == tc.labels.size());
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (info.h.has_edge(verts[i], verts[j]))
                piece.add_edge(static_cast<int>(i), static_cast<int>(j));
    return piece;
}

std::vector<TChunk> enumerate_t_chunks(const PatternInfo& info,
                                       const std::vector<int>& label_pool,
                                       bool separator_only) {
    std::vector<TChunk> out;
    for (std::size_t i = 0; i < info.slices.size(); ++i) {
        const Slice& s = info.slices[i];
        if (!s.chunk || (separator_only && !s.separator_chunk))
            continue;
        int b = s.boundary_size();
        if (b > static_cast<int>(label_pool.size()))
            continue;
        // Injective labelings, lexicographic over the sorted boundary.
        std::vector<int> labeling(b), chosen;
        std::vector<char> used(label_pool.size(), 0);
        auto rec = [&](auto&& self, int pos) -> void {
            if (pos == b) {
                out.push_back({static_cast<int>(i), labeling});
                return;
            }
            for (std::size_t j = 0; j < label_pool.size(); ++j) {
                if (used[j])
                    continue;
                used[j] = 1;
                labeling[pos] = label_pool[j];
                self(self, pos + 1);
                used[j] = 0;
            }
        };
        rec(rec, 0);
    }
    return out;
}

Graph make_path(int k) {
    Graph g(k);
    for (int i = 0; i + 1 < k; ++i)
        g.add_edge(i, i + 1);
    return g;
}

Graph make_cycle(int k) {
    if (k < 3)
        throw ContractViolationError("cycle needs at least 3 vertices");
    Graph g = make_path(k);
    g.add_edge(k - 1, 0);
    return g;
}

Graph make_clique(int k) {
    Graph g(k);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            g.add_edge(i, j);
    return g;
}

Graph make_biclique(int a, int b) {
    Graph g(a + b);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j)
            g.add_edge(i, a + j);
    return g;
}

Graph make_paw() {
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    g.add_edge(1, 3);
    return g;
}

Graph make_hh(int h) {
    if (h < 1)
        throw ContractViolationError("H_h needs h >= 1");
    // 0 = a, 1 = b, 2..h+1 = common neighbors, then two triangle tips each.
    Graph g(h + 6);
    for (int i = 0; i < h; ++i) {
        g.add_edge(0, 2 + i);
        g.add_edge(1, 2 + i);
    }
    int p = h + 2;
    g.add_edge(0, p);
    g.add_edge(0, p + 1);
    g.add_edge(p, p + 1);
    g.add_edge(1, p + 2);
    g.add_edge(1, p + 3);
    g.add_edge(p + 2, p + 3);
    return g;
}

Graph pattern_from_name(const std::string& name) {
    std::string s;
    for (char c : name)
        if (c != '_' && c != '{' && c != '}')
            s.push_back(c);
    if (s == "paw")
        return make_paw();
    if (s.size() < 2)
        throw ParseError("unknown pattern name: " + name);
    char kind = s[0];
    std::string rest = s.substr(1);
    auto parse_int = [&](const std::string& t) {
        if (t.empty() ||
            !std::all_of(t.begin(), t.end(), [](char c) { return std::isdigit(c); }))
            throw ParseError("unknown pattern name: " + name);
        return std::stoi(t);
    };
    auto comma = rest.find(',');
    if (kind == 'K' && comma != std::string::npos)
        return make_biclique(parse_int(rest.substr(0, comma)),
                             parse_int(rest.substr(comma + 1)));
    int k = parse_int(rest);
    switch (kind) {
    case 'P':
        if (k < 1)
            throw ParseError("path needs at least 1 vertex: " + name);
        return make_path(k);
    case 'C':
        if (k < 3)
            throw ParseError("cycle needs at least 3 vertices: " + name);
        return make_cycle(k);
    case 'K':
        if (k < 1)
            throw ParseError("clique needs at least 1 vertex: " + name);
        return make_clique(k);
    case 'H':
        return make_hh(k);
    default:
        throw ParseError("unknown pattern name: " + name);
    }
}

} // namespace subhit
