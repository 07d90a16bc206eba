#include "subhit/colorful_solver.hpp"

#include "subhit/embed.hpp"
#include "subhit/errors.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>
#include <queue>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace subhit {

namespace {

constexpr int kInf = 1 << 29;

struct FlowNet {
    struct Arc {
        int to;
        int cap;
        int rev;
    };
    std::vector<std::vector<Arc>> arcs;
    std::vector<int> level;
    std::vector<int> it;

    explicit FlowNet(int n) : arcs(n) {}

    void add(int u, int v, int cap) {
        arcs[u].push_back({v, cap, static_cast<int>(arcs[v].size())});
        arcs[v].push_back({u, 0, static_cast<int>(arcs[u].size()) - 1});
    }

    bool bfs(int s, int t) {
        level.assign(arcs.size(), -1);
        std::queue<int> q;
        level[s] = 0;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (const Arc& a : arcs[u])
                if (a.cap > 0 && level[a.to] < 0) {
                    level[a.to] = level[u] + 1;
                    q.push(a.to);
                }
        }
        return level[t] >= 0;
    }

    int dfs(int u, int t, int f) {
        if (u == t) return f;
        for (int& i = it[u]; i < static_cast<int>(arcs[u].size()); ++i) {
            Arc& a = arcs[u][i];
            if (a.cap > 0 && level[a.to] == level[u] + 1) {
                int d = dfs(a.to, t, std::min(f, a.cap));
                if (d > 0) {
                    a.cap -= d;
                    arcs[a.to][a.rev].cap += d;
                    return d;
                }
            }
        }
        return 0;
    }

    int max_flow(int s, int t) {
        int flow = 0;
        while (bfs(s, t)) {
            it.assign(arcs.size(), 0);
            int f;
            while ((f = dfs(s, t, kInf)) > 0) flow += f;
        }
        return flow;
    }

    std::vector<char> residual_reachable(int s) const {
        std::vector<char> seen(arcs.size(), 0);
        std::queue<int> q;
        seen[s] = 1;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (const Arc& a : arcs[u])
                if (a.cap > 0 && !seen[a.to]) {
                    seen[a.to] = 1;
                    q.push(a.to);
                }
        }
        return seen;
    }
};

// Cost order with a deterministic tie break.
bool better_del(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

template <typename Map, typename Key>
void upsert_min(Map& m, Key key, std::vector<int> del) {
    auto it = m.find(key);
    if (it == m.end())
        m.emplace(std::move(key), std::move(del));
    else if (better_del(del, it->second))
        it->second = std::move(del);
}

std::vector<int> insert_sorted(const std::vector<int>& xs, int v) {
    std::vector<int> out = xs;
    out.insert(std::lower_bound(out.begin(), out.end(), v), v);
    return out;
}

std::vector<int> erase_sorted(const std::vector<int>& xs, int v) {
    std::vector<int> out;
    out.reserve(xs.size() - 1);
    for (int x : xs)
        if (x != v) out.push_back(x);
    return out;
}

// One host vertex per pattern color, pairwise adjacent.
bool kept_has_sigma_clique(const ColoredGraph& g, const std::vector<int>& kept,
                           int h) {
    std::vector<std::vector<int>> by_color(h);
    for (int v : kept) by_color[g.color[v]].push_back(v);
    for (int c = 0; c < h; ++c)
        if (by_color[c].empty()) return false;
    std::vector<int> pick(h, -1);
    std::function<bool(int)> rec = [&](int c) {
        if (c == h) return true;
        for (int v : by_color[c]) {
            bool ok = true;
            for (int d = 0; d < c && ok; ++d) ok = g.g.has_edge(pick[d], v);
            if (!ok) continue;
            pick[c] = v;
            if (rec(c + 1)) return true;
        }
        return false;
    };
    return rec(0);
}

std::string join_ints(const std::vector<int>& xs) {
    std::ostringstream os;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) os << ',';
        os << xs[i];
    }
    return os.str();
}

const char* kind_name(NodeKind k) {
    switch (k) {
    case NodeKind::leaf: return "leaf";
    case NodeKind::introduce: return "introduce";
    case NodeKind::forget: return "forget";
    case NodeKind::join: return "join";
    }
    return "?";
}

// ---- chunk DP over slice states ----

using ChunkKey = std::pair<int, std::vector<int>>; // (slice id, labels)
using ChunkSet = std::vector<ChunkKey>;            // sorted ascending
using StateKey = std::pair<std::vector<int>, ChunkSet>;
using StateMap = std::map<StateKey, std::vector<int>>;

bool uses_label(const ChunkKey& c, int l) {
    return std::find(c.second.begin(), c.second.end(), l) != c.second.end();
}

// State validity for a chunk: the label-induced boundary map lands on kept
// bag vertices of matching color and preserves the boundary edges of the
// chunk. A chunk with a pinned-boundary embedding is always valid, so only
// valid chunks ever need an embedding test.
bool chunk_valid(const ColoredGraph& g, const PatternInfo& info,
                 const std::vector<int>& label_vertex, const TChunk& c) {
    const Slice& sl = info.slices[c.slice_id];
    std::vector<int> bverts;
    for (int v = 0; v < info.h.n(); ++v)
        if ((sl.boundary >> v) & 1u) bverts.push_back(v);
    std::vector<int> img(bverts.size(), -1);
    for (std::size_t i = 0; i < bverts.size(); ++i) {
        int u = label_vertex[c.labels[i]];
        if (u < 0 || g.color[u] != bverts[i]) return false;
        img[i] = u;
    }
    for (std::size_t i = 0; i < bverts.size(); ++i)
        for (std::size_t j = i + 1; j < bverts.size(); ++j)
            if (info.h.has_edge(bverts[i], bverts[j]) &&
                !g.g.has_edge(img[i], img[j]))
                return false;
    return true;
}

SmallGraph corner_base(const ColoredGraph& g, const NiceDecomposition& nd,
                       const std::vector<int>& kept) {
    SmallGraph s;
    for (int v : kept) s.add_vertex(nd.lambda[v], g.color[v], v);
    const int k = static_cast<int>(kept.size());
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (g.g.has_edge(kept[i], kept[j])) s.add_edge(i, j);
    return s;
}

// Glues a fresh copy of the chunk onto the corner graph, identifying its
// boundary with the bag vertices carrying the chunk's labels. Valid chunks
// never add an edge between two bag vertices.
void glue_chunk(SmallGraph& s, const PatternInfo& info, const ChunkKey& c) {
    const Slice& sl = info.slices[c.first];
    std::vector<int> verts;
    for (int v = 0; v < info.h.n(); ++v)
        if ((sl.verts >> v) & 1u) verts.push_back(v);
    std::vector<int> image(info.h.n(), -1);
    std::size_t bi = 0;
    for (int v : verts) {
        if ((sl.boundary >> v) & 1u) {
            int u = s.vertex_with_label(c.second[bi++]);
            contract_check(u >= 0, "glue_chunk: boundary label missing in bag");
            contract_check(s.color[u] == v, "glue_chunk: boundary color clash");
            image[v] = u;
        } else {
            image[v] = s.add_vertex(0, v, -1);
        }
    }
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j) {
            int a = verts[i], b = verts[j];
            if (!info.h.has_edge(a, b)) continue;
            bool ab = (sl.boundary >> a) & 1u;
            bool bb = (sl.boundary >> b) & 1u;
            if (ab && bb)
                contract_check(s.has_edge(image[a], image[b]),
                               "glue_chunk: new edge between bag vertices");
            else
                s.add_edge(image[a], image[b]);
        }
}

bool chunk_embeds(const PatternInfo& info, const ChunkKey& c,
                  const SmallGraph& host) {
    TChunk tc{c.first, c.second};
    Piece p = piece_for_tchunk(info, tc, true);
    return find_embedding(p, host, 0);
}

} // namespace

std::vector<ComponentInstance> split_components(const ColoredGraph& g,
                                                const PatternInfo& info) {
    g.check(info.h.n());
    std::vector<ComponentInstance> out;
    out.reserve(info.comps.size());
    for (const std::vector<int>& comp : info.comps) {
        ComponentInstance inst;
        std::vector<int> cpos(info.h.n(), -1);
        for (std::size_t i = 0; i < comp.size(); ++i)
            cpos[comp[i]] = static_cast<int>(i);
        inst.pattern = info.h.induced(comp, nullptr);
        for (int v = 0; v < g.g.n(); ++v)
            if (cpos[g.color[v]] >= 0) inst.host_vertices.push_back(v);
        inst.g.g = g.g.induced(inst.host_vertices, nullptr);
        inst.g.color.resize(inst.host_vertices.size());
        for (std::size_t i = 0; i < inst.host_vertices.size(); ++i)
            inst.g.color[i] = cpos[g.color[inst.host_vertices[i]]];
        out.push_back(std::move(inst));
    }
    return out;
}

SolveResult solve_path(const ColoredGraph& g, const PatternInfo& info) {
    contract_check(info.is_path, "solve_path: pattern is not a path");
    g.check(info.h.n());
    const int h = info.h.n();
    const int n = g.g.n();

    std::vector<int> pos(h, 0);
    for (int i = 0; i < h; ++i) pos[info.path_order[i]] = i;

    // s = 0, t = 1, v_in = 2 + 2v, v_out = 3 + 2v. Only the unit arcs
    // v_in -> v_out are cuttable, so a minimum cut is a vertex set.
    FlowNet net(2 + 2 * n);
    for (int v = 0; v < n; ++v) {
        int layer = pos[g.color[v]];
        net.add(2 + 2 * v, 3 + 2 * v, 1);
        if (layer == 0) net.add(0, 2 + 2 * v, kInf);
        if (layer == h - 1) net.add(3 + 2 * v, 1, kInf);
    }
    for (auto [u, v] : g.g.edges()) {
        if (pos[g.color[v]] == pos[g.color[u]] + 1)
            net.add(3 + 2 * u, 2 + 2 * v, kInf);
        if (pos[g.color[u]] == pos[g.color[v]] + 1)
            net.add(3 + 2 * v, 2 + 2 * u, kInf);
    }

    SolveResult res;
    res.optimum = net.max_flow(0, 1);
    std::vector<char> reach = net.residual_reachable(0);
    for (int v = 0; v < n; ++v)
        if (reach[2 + 2 * v] && !reach[3 + 2 * v]) res.hitting_set.push_back(v);
    contract_check(static_cast<int>(res.hitting_set.size()) == res.optimum,
                   "solve_path: cut size differs from flow value");
    res.stats.method = "path-cut";
    return res;
}

SolveResult solve_clique(const ColoredGraph& g, const NiceDecomposition& nd,
                         const PatternInfo& info) {
    contract_check(info.is_clique, "solve_clique: pattern is not a clique");
    g.check(info.h.n());
    const int h = info.h.n();

    using CliqueMap = std::map<std::vector<int>, std::vector<int>>;
    std::vector<CliqueMap> table(nd.nodes.size());

    SolveResult res;
    res.stats.method = "clique-dp";
    res.stats.nice_nodes = static_cast<int>(nd.nodes.size());
    res.stats.t = nd.t;

    for (int x : nd.postorder()) {
        const NiceNode& node = nd.nodes[x];
        CliqueMap& out = table[x];
        switch (node.kind) {
        case NodeKind::leaf:
            out.emplace(std::vector<int>{}, std::vector<int>{});
            break;
        case NodeKind::introduce: {
            CliqueMap& in = table[node.children[0]];
            for (const auto& [xhat, del] : in) {
                upsert_min(out, insert_sorted(xhat, node.vertex), del);
                std::vector<int> kept;
                std::set_difference(node.bag.begin(), node.bag.end(),
                                    xhat.begin(), xhat.end(),
                                    std::back_inserter(kept));
                if (!kept_has_sigma_clique(g, kept, h))
                    upsert_min(out, xhat, del);
            }
            in.clear();
            break;
        }
        case NodeKind::forget: {
            CliqueMap& in = table[node.children[0]];
            const int v = node.vertex;
            for (const auto& [xhat, del] : in) {
                if (std::binary_search(xhat.begin(), xhat.end(), v))
                    upsert_min(out, erase_sorted(xhat, v),
                               insert_sorted(del, v));
                else
                    upsert_min(out, xhat, del);
            }
            in.clear();
            break;
        }
        case NodeKind::join: {
            CliqueMap& a = table[node.children[0]];
            CliqueMap& b = table[node.children[1]];
            for (const auto& [xhat, dela] : a) {
                auto it = b.find(xhat);
                if (it == b.end()) continue;
                std::vector<int> merged;
                std::merge(dela.begin(), dela.end(), it->second.begin(),
                           it->second.end(), std::back_inserter(merged));
                upsert_min(out, xhat, std::move(merged));
            }
            a.clear();
            b.clear();
            break;
        }
        }
        res.stats.total_states += static_cast<std::int64_t>(out.size());
        res.stats.peak_states = std::max(
            res.stats.peak_states, static_cast<std::int64_t>(out.size()));
    }

    auto it = table[nd.root].find(std::vector<int>{});
    contract_check(it != table[nd.root].end(),
                   "solve_clique: root state missing");
    res.optimum = static_cast<int>(it->second.size());
    res.hitting_set = it->second;
    return res;
}

SolveResult solve_general(const ColoredGraph& g, const NiceDecomposition& nd,
                          const PatternInfo& info, const Caps& caps,
                          const SolveOptions& opts) {
    contract_check(info.connected, "solve_general: pattern must be connected");
    g.check(info.h.n());
    const Piece hpiece = piece_from_pattern(info.h, true);

    std::vector<StateMap> table(nd.nodes.size());

    SolveResult res;
    res.stats.method = "chunk-dp";
    res.stats.nice_nodes = static_cast<int>(nd.nodes.size());
    res.stats.t = nd.t;

    std::int64_t steps = 0;
    auto bump = [&]() {
        if (++steps > caps.state_limit)
            throw ResourceLimitError(
                "solve_general: search steps exceed cap (state_limit=" +
                std::to_string(caps.state_limit) + ")");
    };

    for (int x : nd.postorder()) {
        const NiceNode& node = nd.nodes[x];
        StateMap& out = table[x];
        switch (node.kind) {
        case NodeKind::leaf:
            out.emplace(StateKey{{}, {}}, std::vector<int>{});
            break;
        case NodeKind::introduce: {
            StateMap& in = table[node.children[0]];
            const int v = node.vertex;
            const int lv = nd.lambda[v];
            for (const auto& [key, del] : in) {
                bump();
                const std::vector<int>& xhat = key.first;
                const ChunkSet& cset = key.second;
                upsert_min(out, StateKey{insert_sorted(xhat, v), cset}, del);

                std::vector<int> kept;
                std::set_difference(node.bag.begin(), node.bag.end(),
                                    xhat.begin(), xhat.end(),
                                    std::back_inserter(kept));
                std::vector<int> label_vertex(nd.t + 1, -1);
                std::vector<int> pool;
                pool.reserve(kept.size());
                for (int u : kept) {
                    label_vertex[nd.lambda[u]] = u;
                    pool.push_back(nd.lambda[u]);
                }
                std::sort(pool.begin(), pool.end());

                std::vector<ChunkKey> valid;
                for (const TChunk& c : enumerate_t_chunks(info, pool, true))
                    if (chunk_valid(g, info, label_vertex, c))
                        valid.push_back({c.slice_id, c.labels});
                std::sort(valid.begin(), valid.end());

                std::vector<ChunkKey> candidates;
                for (const ChunkKey& c : valid)
                    if (uses_label(c, lv)) candidates.push_back(c);
                for (const ChunkKey& c : cset)
                    contract_check(
                        std::binary_search(valid.begin(), valid.end(), c),
                        "solve_general: state carries an invalid chunk");

                SmallGraph base = corner_base(g, nd, kept);
                for (const ChunkKey& c : cset) glue_chunk(base, info, c);
                // The corner graph only grows with the chunk set, so a
                // sigma-H-subgraph here kills every extension.
                if (find_embedding(hpiece, base, 0)) continue;

                ChunkSet included;
                std::function<void(std::size_t, const SmallGraph&)> rec =
                    [&](std::size_t i, const SmallGraph& cur) {
                        bump();
                        if (i == candidates.size()) {
                            ChunkSet full;
                            std::merge(cset.begin(), cset.end(),
                                       included.begin(), included.end(),
                                       std::back_inserter(full));
                            for (const ChunkKey& c : valid) {
                                if (std::binary_search(full.begin(),
                                                       full.end(), c))
                                    continue;
                                if (chunk_embeds(info, c, cur)) return;
                            }
                            upsert_min(out, StateKey{xhat, std::move(full)},
                                       del);
                            return;
                        }
                        rec(i + 1, cur);
                        SmallGraph next = cur;
                        glue_chunk(next, info, candidates[i]);
                        if (find_embedding(hpiece, next, 0)) return;
                        included.push_back(candidates[i]);
                        rec(i + 1, next);
                        included.pop_back();
                    };
                rec(0, base);
            }
            in.clear();
            break;
        }
        case NodeKind::forget: {
            StateMap& in = table[node.children[0]];
            const int v = node.vertex;
            const int lv = nd.lambda[v];
            for (const auto& [key, del] : in) {
                bump();
                const std::vector<int>& xhat = key.first;
                const ChunkSet& cset = key.second;
                if (std::binary_search(xhat.begin(), xhat.end(), v)) {
                    upsert_min(out, StateKey{erase_sorted(xhat, v), cset},
                               insert_sorted(del, v));
                } else {
                    ChunkSet filtered;
                    for (const ChunkKey& c : cset)
                        if (!uses_label(c, lv)) filtered.push_back(c);
                    upsert_min(out, StateKey{xhat, std::move(filtered)}, del);
                }
            }
            in.clear();
            break;
        }
        case NodeKind::join: {
            StateMap& a = table[node.children[0]];
            StateMap& b = table[node.children[1]];
            for (const auto& [key, dela] : a) {
                bump();
                auto it = b.find(key);
                if (it == b.end()) continue;
                std::vector<int> merged;
                std::merge(dela.begin(), dela.end(), it->second.begin(),
                           it->second.end(), std::back_inserter(merged));
                upsert_min(out, key, std::move(merged));
            }
            a.clear();
            b.clear();
            break;
        }
        }

        res.stats.total_states += static_cast<std::int64_t>(out.size());
        res.stats.peak_states = std::max(
            res.stats.peak_states, static_cast<std::int64_t>(out.size()));
        if (res.stats.total_states > caps.state_limit)
            throw ResourceLimitError(
                "solve_general: state count exceeds cap (state_limit=" +
                std::to_string(caps.state_limit) + ")");

        std::vector<int> bag_labels;
        for (int u : node.bag) bag_labels.push_back(nd.lambda[u]);
        std::sort(bag_labels.begin(), bag_labels.end());
        std::size_t nchunks =
            enumerate_t_chunks(info, bag_labels, true).size();
        if (node.bag.size() + nchunks < 62)
            contract_check(out.size() <= (std::uint64_t{1}
                                          << (node.bag.size() + nchunks)),
                           "solve_general: states exceed structural bound");

        if (opts.dump_states) {
            std::ostringstream os;
            os << "node " << x << ' ' << kind_name(node.kind);
            if (node.vertex >= 0) os << " v=" << node.vertex;
            os << " bag={" << join_ints(node.bag) << "} states=" << out.size();
            res.state_dump.push_back(os.str());
            for (const auto& [key, del] : out) {
                std::ostringstream ls;
                ls << "  X={" << join_ints(key.first) << "} C={";
                for (std::size_t i = 0; i < key.second.size(); ++i) {
                    if (i) ls << ' ';
                    ls << 's' << key.second[i].first << '['
                       << join_ints(key.second[i].second) << ']';
                }
                ls << "} cost=" << del.size();
                res.state_dump.push_back(ls.str());
            }
        }
    }

    auto it = table[nd.root].find(StateKey{{}, {}});
    contract_check(it != table[nd.root].end(),
                   "solve_general: root state missing");
    res.optimum = static_cast<int>(it->second.size());
    res.hitting_set = it->second;
    return res;
}

SolveResult solve_colorful(const ColoredGraph& g, const NiceDecomposition& nd,
                           const PatternInfo& info, const Caps& caps,
                           const SolveOptions& opts) {
    g.check(info.h.n());
    if (info.connected) {
        if (info.is_path) return solve_path(g, info);
        if (info.is_clique) return solve_clique(g, nd, info);
        return solve_general(g, nd, info, caps, opts);
    }

    std::vector<ComponentInstance> insts = split_components(g, info);
    SolveResult best;
    int best_idx = -1;
    for (std::size_t i = 0; i < insts.size(); ++i) {
        ComponentInstance& inst = insts[i];
        SolveResult r;
        if (inst.host_vertices.empty()) {
            r.stats.method = "empty-region";
        } else {
            PatternInfo ci = analyze_pattern(inst.pattern, caps);
            if (ci.is_path) {
                r = solve_path(inst.g, ci);
            } else {
                // Restricting every bag to an induced subgraph keeps the
                // decomposition valid, so the region inherits the host's.
                TreeDecomposition td;
                std::vector<int> newid(g.g.n(), -1);
                for (std::size_t j = 0; j < inst.host_vertices.size(); ++j)
                    newid[inst.host_vertices[j]] = static_cast<int>(j);
                td.bags.reserve(nd.nodes.size());
                for (const NiceNode& node : nd.nodes) {
                    std::vector<int> b;
                    for (int u : node.bag)
                        if (newid[u] >= 0) b.push_back(newid[u]);
                    td.bags.push_back(std::move(b));
                }
                for (std::size_t j = 0; j < nd.nodes.size(); ++j)
                    for (int c : nd.nodes[j].children)
                        td.tree_edges.push_back({static_cast<int>(j), c});
                NiceDecomposition cnd = make_nice(inst.g.g, td);
                r = ci.is_clique ? solve_clique(inst.g, cnd, ci)
                                 : solve_general(inst.g, cnd, ci, caps, opts);
            }
            for (int& v : r.hitting_set) v = inst.host_vertices[v];
        }
        if (best_idx < 0 || r.optimum < best.optimum) {
            best = std::move(r);
            best_idx = static_cast<int>(i);
        }
    }
    contract_check(best_idx >= 0, "solve_colorful: pattern has no components");
    best.stats.method =
        "split[" + std::to_string(best_idx) + "]:" + best.stats.method;
    return best;
}

} // namespace subhit
