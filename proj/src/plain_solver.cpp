#include "subhit/plain_solver.hpp"

#include "subhit/errors.hpp"
#include "subhit/profile.hpp"
#include "subhit/witness.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace subhit {

namespace {

// Witnesses are compacted once they carry more than this many non-boundary
// vertices; two compacted witnesses glued at a join then stay within the
// 64-vertex SmallGraph budget for bags of up to 28 vertices.
constexpr int kCompactThreshold = 18;

bool better_del(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

std::vector<int> insert_sorted(const std::vector<int>& xs, int v) {
    std::vector<int> out = xs;
    out.insert(std::lower_bound(out.begin(), out.end(), v), v);
    return out;
}

std::vector<int> erase_sorted(const std::vector<int>& xs, int v) {
    std::vector<int> out;
    out.reserve(xs.size());
    for (int x : xs)
        if (x != v) out.push_back(x);
    return out;
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

struct PlainState {
    SmallGraph witness;
    std::vector<int> del;
};

// Key: (deleted bag subset, profile encoding). Equal profiles make partial
// solutions interchangeable, so only the cheapest representative survives.
using PlainKey = std::pair<std::vector<int>, std::string>;
using PlainMap = std::map<PlainKey, PlainState>;

void upsert_min(PlainMap& m, PlainKey key, PlainState st) {
    auto it = m.find(key);
    if (it == m.end())
        m.emplace(std::move(key), std::move(st));
    else if (better_del(st.del, it->second.del))
        it->second = std::move(st);
}

// Pairwise adjacent h-subset of the kept bag, chosen ascending.
bool kept_has_clique(const Graph& g, const std::vector<int>& kept, int h) {
    std::vector<int> chosen;
    std::function<bool(std::size_t)> rec = [&](std::size_t start) {
        if (static_cast<int>(chosen.size()) == h) return true;
        for (std::size_t i = start; i < kept.size(); ++i) {
            bool ok = true;
            for (int u : chosen)
                if (!g.has_edge(u, kept[i])) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            chosen.push_back(kept[i]);
            if (rec(i + 1)) return true;
            chosen.pop_back();
        }
        return false;
    };
    return rec(0);
}

} // namespace

SolveResult solve_plain(const Graph& g, const NiceDecomposition& nd,
                        const PatternInfo& info, const Caps& caps,
                        const SolveOptions& opts) {
    if (info.all_components_cliques && !info.connected)
        throw UnsupportedPatternError(
            "plain solver: pattern is a disjoint union of cliques; this "
            "case has no bounded-treewidth algorithm here");

    ProfileCache cache(info);

    SolveResult res;
    res.stats.method = "witness-dp";
    res.stats.nice_nodes = static_cast<int>(nd.nodes.size());
    res.stats.t = nd.t;

    std::int64_t steps = 0;
    auto bump = [&]() {
        if (++steps > caps.state_limit)
            throw ResourceLimitError(
                "solve_plain: search steps exceed cap (state_limit=" +
                std::to_string(caps.state_limit) + ")");
    };

    // A pattern copy among kept vertices can never be destroyed later (kept
    // vertices are never deleted), so such states are dropped immediately.
    auto settle = [&](PlainMap& out, const std::vector<int>& xhat,
                      SmallGraph witness, std::vector<int> del) {
        const ExtendedProfile* prof = &cache.get(witness);
        if (prof->contains_full_slice(info)) return;
        std::string enc = prof->encode();
        int interior = witness.n - popcount64(witness.boundary_mask());
        if (interior > kCompactThreshold) {
            witness = minimize_witness(info, build_witness(info, witness, caps));
            assert(cache.get(witness).encode() == enc);
        }
        upsert_min(out, PlainKey{xhat, std::move(enc)},
                   PlainState{std::move(witness), std::move(del)});
    };

    std::vector<PlainMap> table(nd.nodes.size());

    for (int x : nd.postorder()) {
        const NiceNode& node = nd.nodes[x];
        PlainMap& out = table[x];
        switch (node.kind) {
        case NodeKind::leaf: {
            SmallGraph empty;
            settle(out, {}, empty, {});
            break;
        }
        case NodeKind::introduce: {
            PlainMap& in = table[node.children[0]];
            const int v = node.vertex;
            for (const auto& [key, st] : in) {
                bump();
                const std::vector<int>& xhat = key.first;
                upsert_min(out, PlainKey{insert_sorted(xhat, v), key.second},
                           st);

                // Kept branch: v joins the witness boundary; its processed
                // neighbors all sit in the bag, found by their labels.
                SmallGraph w2 = st.witness;
                int nv = w2.add_vertex(nd.lambda[v], -1, v);
                for (int u : node.bag) {
                    if (u == v ||
                        std::binary_search(xhat.begin(), xhat.end(), u))
                        continue;
                    if (!g.has_edge(u, v)) continue;
                    int wi = w2.vertex_with_label(nd.lambda[u]);
                    contract_check(wi >= 0,
                                   "solve_plain: bag vertex missing from "
                                   "witness boundary");
                    w2.add_edge(wi, nv);
                }
                settle(out, xhat, std::move(w2), st.del);
            }
            in.clear();
            break;
        }
        case NodeKind::forget: {
            PlainMap& in = table[node.children[0]];
            const int v = node.vertex;
            for (const auto& [key, st] : in) {
                bump();
                const std::vector<int>& xhat = key.first;
                if (std::binary_search(xhat.begin(), xhat.end(), v)) {
                    upsert_min(out, PlainKey{erase_sorted(xhat, v), key.second},
                               PlainState{st.witness,
                                          insert_sorted(st.del, v)});
                } else {
                    SmallGraph w2 = st.witness;
                    int wi = w2.vertex_with_label(nd.lambda[v]);
                    contract_check(wi >= 0,
                                   "solve_plain: forgotten vertex missing "
                                   "from witness boundary");
                    w2.label[wi] = 0;
                    settle(out, xhat, std::move(w2), st.del);
                }
            }
            in.clear();
            break;
        }
        case NodeKind::join: {
            PlainMap& a = table[node.children[0]];
            PlainMap& b = table[node.children[1]];
            for (const auto& [keya, sta] : a) {
                for (auto itb = b.lower_bound(PlainKey{keya.first, {}});
                     itb != b.end() && itb->first.first == keya.first; ++itb) {
                    const PlainState& stb = itb->second;
                    bump();
                    // Interiors represent disjoint forgotten vertices, so
                    // gluing on the shared bag boundary is exact.
                    SmallGraph merged = glue(sta.witness, stb.witness);
                    std::vector<int> del;
                    std::merge(sta.del.begin(), sta.del.end(),
                               stb.del.begin(), stb.del.end(),
                               std::back_inserter(del));
                    settle(out, keya.first, std::move(merged),
                           std::move(del));
                }
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
                "solve_plain: state count exceeds cap (state_limit=" +
                std::to_string(caps.state_limit) + ")");

        if (opts.dump_states) {
            std::ostringstream os;
            os << "node " << x << ' ' << kind_name(node.kind);
            if (node.vertex >= 0) os << " v=" << node.vertex;
            os << " bag={" << join_ints(node.bag) << "} states=" << out.size();
            res.state_dump.push_back(os.str());
            for (const auto& [key, st] : out) {
                std::ostringstream ls;
                ls << "  X={" << join_ints(key.first) << "} witness_n="
                   << st.witness.n << " profile="
                   << cache.get(st.witness).fingerprint()
                   << " cost=" << st.del.size();
                res.state_dump.push_back(ls.str());
            }
        }
    }

    const PlainMap& rootm = table[nd.root];
    contract_check(!rootm.empty(), "solve_plain: no feasible root state");
    const PlainState* best = nullptr;
    for (const auto& [key, st] : rootm)
        if (!best || better_del(st.del, best->del)) best = &st;
    res.optimum = static_cast<int>(best->del.size());
    res.hitting_set = best->del;
    return res;
}

SolveResult solve_plain_clique(const Graph& g, const NiceDecomposition& nd,
                               const PatternInfo& info) {
    contract_check(info.is_clique && info.connected,
                   "solve_plain_clique: pattern is not a single clique");
    const int h = info.h.n();

    using CliqueMap = std::map<std::vector<int>, std::vector<int>>;
    std::vector<CliqueMap> table(nd.nodes.size());

    SolveResult res;
    res.stats.method = "plain-clique-dp";
    res.stats.nice_nodes = static_cast<int>(nd.nodes.size());
    res.stats.t = nd.t;

    auto upsert = [](CliqueMap& m, std::vector<int> key,
                     std::vector<int> del) {
        auto it = m.find(key);
        if (it == m.end())
            m.emplace(std::move(key), std::move(del));
        else if (better_del(del, it->second))
            it->second = std::move(del);
    };

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
                upsert(out, insert_sorted(xhat, node.vertex), del);
                std::vector<int> kept;
                std::set_difference(node.bag.begin(), node.bag.end(),
                                    xhat.begin(), xhat.end(),
                                    std::back_inserter(kept));
                if (!kept_has_clique(g, kept, h)) upsert(out, xhat, del);
            }
            in.clear();
            break;
        }
        case NodeKind::forget: {
            CliqueMap& in = table[node.children[0]];
            const int v = node.vertex;
            for (const auto& [xhat, del] : in) {
                if (std::binary_search(xhat.begin(), xhat.end(), v))
                    upsert(out, erase_sorted(xhat, v), insert_sorted(del, v));
                else
                    upsert(out, xhat, del);
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
                upsert(out, xhat, std::move(merged));
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
                   "solve_plain_clique: root state missing");
    res.optimum = static_cast<int>(it->second.size());
    res.hitting_set = it->second;
    return res;
}

} // namespace subhit
