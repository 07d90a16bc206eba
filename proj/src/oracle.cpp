#include "subhit/oracle.hpp"

#include "subhit/embed.hpp"
#include "subhit/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <set>
#include <string>
#include <unordered_map>

namespace subhit {

namespace {

std::vector<std::vector<int>> occurrences_impl(const Graph& g,
                                               const std::vector<int>* color,
                                               const PatternInfo& info,
                                               const Caps& caps) {
    if (g.n() > caps.oracle_vertices)
        throw ResourceLimitError("occurrences: host has " + std::to_string(g.n()) +
                                 " vertices, cap (oracle_vertices=" +
                                 std::to_string(caps.oracle_vertices) + ")");
    Piece piece = piece_from_pattern(info.h, color != nullptr);
    std::set<std::vector<int>> images;
    enumerate_embeddings(piece, g, color, nullptr, [&](const std::vector<int>& image) {
        std::vector<int> verts = image;
        std::sort(verts.begin(), verts.end());
        images.insert(std::move(verts));
        return true;
    });
    return {images.begin(), images.end()};
}

constexpr int kInfinity = std::numeric_limits<int>::max() / 4;

// Branch-and-bound core. Families are kept sorted (each set ascending, the
// family lexicographic); memo keys rename vertices by first appearance so
// structurally identical subproblems from different gadgets coincide.
class HittingSolver {
public:
    explicit HittingSolver(const Caps& caps) : caps_(caps) {}

    // Returns the exact optimum if it is < ub, otherwise any lower bound
    // that is >= ub. `solution` is filled only in the exact case.
    int solve(std::vector<std::vector<int>> sets, int ub, std::vector<int>* solution);

private:
    struct MemoEntry {
        int exact = -1;
        std::vector<int> solution; // in renamed ids
        int lower_bound = 0;
    };

    const Caps& caps_;
    std::int64_t nodes_ = 0;
    std::unordered_map<std::string, MemoEntry> memo_;

    static void normalize(std::vector<std::vector<int>>& sets);
    static void reduce(std::vector<std::vector<int>>& sets, std::vector<int>& forced);
    static int packing_bound(const std::vector<std::vector<int>>& sets);
    static int greedy_cover(const std::vector<std::vector<int>>& sets,
                            std::vector<int>* picks);
    static std::vector<std::vector<std::vector<int>>> split_components(
        const std::vector<std::vector<int>>& sets);

    int branch(const std::vector<std::vector<int>>& sets, int ub,
               std::vector<int>* solution);
};

void HittingSolver::normalize(std::vector<std::vector<int>>& sets) {
    for (auto& s : sets) std::sort(s.begin(), s.end());
    std::sort(sets.begin(), sets.end());
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
}

// Exact reductions: unit sets force their vertex; a vertex whose sets are
// all covered by another vertex's sets is never needed; supersets of kept
// sets are redundant (only attempted on small families).
void HittingSolver::reduce(std::vector<std::vector<int>>& sets, std::vector<int>& forced) {
    bool changed = true;
    while (changed) {
        changed = false;
        normalize(sets);

        for (const auto& s : sets) {
            if (s.size() == 1) {
                int v = s[0];
                forced.push_back(v);
                std::vector<std::vector<int>> rest;
                for (auto& o : sets)
                    if (!std::binary_search(o.begin(), o.end(), v)) rest.push_back(std::move(o));
                sets = std::move(rest);
                changed = true;
                break;
            }
        }
        if (changed) continue;
        if (sets.empty()) break;

        std::unordered_map<int, std::vector<int>> containing;
        for (std::size_t i = 0; i < sets.size(); ++i)
            for (int v : sets[i]) containing[v].push_back(static_cast<int>(i));

        // Dominated vertex: drop u when sets(u) subset of sets(v). Candidates
        // v are confined to u's first set.
        int drop = -1;
        for (auto& [u, occ] : containing) {
            for (int v : sets[occ[0]]) {
                if (v == u) continue;
                const auto& occ_v = containing[v];
                if (occ_v.size() < occ.size()) continue;
                if (std::includes(occ_v.begin(), occ_v.end(), occ.begin(), occ.end())) {
                    drop = u;
                    break;
                }
            }
            if (drop >= 0) break;
        }
        if (drop >= 0) {
            for (auto& s : sets) s.erase(std::remove(s.begin(), s.end(), drop), s.end());
            changed = true;
            continue;
        }

        if (sets.size() <= 400) {
            std::vector<std::size_t> order(sets.size());
            for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
            std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
                return sets[a].size() < sets[b].size();
            });
            std::vector<char> dead(sets.size(), 0);
            for (std::size_t ii = 0; ii < order.size(); ++ii)
                for (std::size_t jj = 0; jj < ii; ++jj) {
                    std::size_t i = order[ii], j = order[jj];
                    if (dead[i] || dead[j]) continue;
                    if (std::includes(sets[i].begin(), sets[i].end(),
                                      sets[j].begin(), sets[j].end())) {
                        dead[i] = 1;
                        break;
                    }
                }
            std::vector<std::vector<int>> kept;
            for (std::size_t i = 0; i < sets.size(); ++i)
                if (!dead[i]) kept.push_back(std::move(sets[i]));
            if (kept.size() != sets.size()) changed = true;
            sets = std::move(kept);
        }
    }
}

int HittingSolver::packing_bound(const std::vector<std::vector<int>>& sets) {
    std::vector<std::size_t> order(sets.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (sets[a].size() != sets[b].size()) return sets[a].size() < sets[b].size();
        return sets[a] < sets[b];
    });
    std::set<int> used;
    int packed = 0;
    for (std::size_t i : order) {
        bool disjoint = true;
        for (int v : sets[i])
            if (used.count(v)) { disjoint = false; break; }
        if (disjoint) {
            ++packed;
            used.insert(sets[i].begin(), sets[i].end());
        }
    }
    return packed;
}

int HittingSolver::greedy_cover(const std::vector<std::vector<int>>& sets,
                                std::vector<int>* picks) {
    std::vector<char> hit(sets.size(), 0);
    std::size_t remaining = sets.size();
    int count = 0;
    while (remaining > 0) {
        std::unordered_map<int, int> cover;
        for (std::size_t i = 0; i < sets.size(); ++i)
            if (!hit[i])
                for (int v : sets[i]) ++cover[v];
        int best = -1, best_cover = 0;
        for (auto [v, c] : cover)
            if (c > best_cover || (c == best_cover && v < best)) {
                best = v;
                best_cover = c;
            }
        ++count;
        if (picks) picks->push_back(best);
        for (std::size_t i = 0; i < sets.size(); ++i)
            if (!hit[i] && std::binary_search(sets[i].begin(), sets[i].end(), best)) {
                hit[i] = 1;
                --remaining;
            }
    }
    return count;
}

std::vector<std::vector<std::vector<int>>> HittingSolver::split_components(
    const std::vector<std::vector<int>>& sets) {
    std::vector<int> parent(sets.size());
    for (std::size_t i = 0; i < sets.size(); ++i) parent[i] = static_cast<int>(i);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::unordered_map<int, int> owner; // vertex -> set index
    for (std::size_t i = 0; i < sets.size(); ++i)
        for (int v : sets[i]) {
            auto [it, fresh] = owner.emplace(v, static_cast<int>(i));
            if (!fresh) parent[find(static_cast<int>(i))] = find(it->second);
        }
    std::unordered_map<int, std::size_t> comp_of;
    std::vector<std::vector<std::vector<int>>> comps;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        int root = find(static_cast<int>(i));
        auto [it, fresh] = comp_of.emplace(root, comps.size());
        if (fresh) comps.emplace_back();
        comps[it->second].push_back(sets[i]);
    }
    return comps;
}

int HittingSolver::solve(std::vector<std::vector<int>> sets, int ub,
                         std::vector<int>* solution) {
    if (++nodes_ > caps_.state_limit)
        throw ResourceLimitError("min_hitting_set: node count exceeds cap (state_limit=" +
                                 std::to_string(caps_.state_limit) + ")");
    std::vector<int> forced;
    reduce(sets, forced);
    const int base = static_cast<int>(forced.size());
    if (base >= ub) return base;
    if (sets.empty()) {
        if (solution) *solution = forced;
        return base;
    }

    // Rename vertices by first appearance for the memo key.
    std::unordered_map<int, int> rename;
    std::vector<int> back;
    std::string key;
    for (const auto& s : sets) {
        for (int v : s) {
            auto [it, fresh] = rename.emplace(v, static_cast<int>(back.size()));
            if (fresh) back.push_back(v);
            int r = it->second;
            key.push_back(static_cast<char>(r & 0xff));
            key.push_back(static_cast<char>((r >> 8) & 0xff));
        }
        key.push_back('\xff');
        key.push_back('\xff');
    }

    auto mit = memo_.find(key);
    if (mit != memo_.end()) {
        const MemoEntry& e = mit->second;
        if (e.exact >= 0) {
            if (base + e.exact < ub && solution) {
                *solution = forced;
                for (int r : e.solution) solution->push_back(back[r]);
            }
            return base + e.exact;
        }
        if (base + e.lower_bound >= ub) return base + e.lower_bound;
    }

    auto comps = split_components(sets);
    std::vector<int> comp_lb(comps.size());
    int lb_total = base;
    for (std::size_t i = 0; i < comps.size(); ++i) {
        comp_lb[i] = packing_bound(comps[i]);
        lb_total += comp_lb[i];
    }

    int result;
    std::vector<int> local; // solution in original ids, without `forced`
    if (lb_total >= ub) {
        result = lb_total - base;
    } else if (comps.size() > 1) {
        int acc = 0, lb_rest = lb_total - base;
        bool exact = true;
        for (std::size_t i = 0; i < comps.size(); ++i) {
            lb_rest -= comp_lb[i];
            std::vector<int> sub;
            int r = solve(std::move(comps[i]), ub - base - acc - lb_rest, &sub);
            acc += r;
            if (base + acc + lb_rest >= ub) {
                exact = false;
                acc += lb_rest;
                break;
            }
            local.insert(local.end(), sub.begin(), sub.end());
        }
        result = acc;
        if (!exact) local.clear();
    } else {
        result = branch(sets, ub - base, &local);
    }

    MemoEntry& e = memo_[key];
    if (base + result < ub) {
        e.exact = result;
        e.solution.clear();
        for (int v : local) e.solution.push_back(rename[v]);
        if (solution) {
            *solution = forced;
            solution->insert(solution->end(), local.begin(), local.end());
        }
    } else {
        e.lower_bound = std::max(e.lower_bound, result);
    }
    return base + result;
}

int HittingSolver::branch(const std::vector<std::vector<int>>& sets, int ub,
                          std::vector<int>* solution) {
    std::vector<int> greedy;
    int best = greedy_cover(sets, &greedy);
    if (best < ub) {
        *solution = greedy;
    } else {
        best = ub;
    }
    if (best <= packing_bound(sets)) return best;

    std::size_t pick = 0;
    for (std::size_t i = 1; i < sets.size(); ++i)
        if (sets[i].size() < sets[pick].size()) pick = i;

    std::unordered_map<int, int> cover;
    for (const auto& s : sets)
        for (int v : s) ++cover[v];
    std::vector<int> order = sets[pick];
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (cover[a] != cover[b]) return cover[a] > cover[b];
        return a < b;
    });

    for (int v : order) {
        if (best <= 1) break; // any branch costs at least the pick itself
        std::vector<std::vector<int>> rest;
        for (const auto& s : sets)
            if (!std::binary_search(s.begin(), s.end(), v)) rest.push_back(s);
        std::vector<int> sub;
        int r = 1 + solve(std::move(rest), best - 1, &sub);
        if (r < best) {
            best = r;
            sub.push_back(v);
            *solution = std::move(sub);
        }
    }
    return best;
}

} // namespace

std::vector<std::vector<int>> occurrences(const Graph& g, const PatternInfo& info,
                                          const Caps& caps) {
    return occurrences_impl(g, nullptr, info, caps);
}

std::vector<std::vector<int>> occurrences(const ColoredGraph& g, const PatternInfo& info,
                                          const Caps& caps) {
    g.check(info.h.n());
    return occurrences_impl(g.g, &g.color, info, caps);
}

int min_hitting_set(int n, const std::vector<std::vector<int>>& family,
                    const Caps& caps, int budget, std::vector<int>* solution) {
    std::vector<std::vector<int>> sets = family;
    for (auto& s : sets) {
        contract_check(!s.empty(), "min_hitting_set: empty set is unhittable");
        for (int v : s)
            contract_check(v >= 0 && v < n, "min_hitting_set: vertex out of range");
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
    }
    const int ub = budget >= 0 ? budget + 1 : kInfinity;
    HittingSolver solver(caps);
    std::vector<int> sol;
    int value = solver.solve(std::move(sets), ub, &sol);
    if (value >= ub) return budget + 1;
    std::sort(sol.begin(), sol.end());
    if (solution) *solution = std::move(sol);
    return value;
}

int oracle_optimum(const Graph& g, const PatternInfo& info, const Caps& caps,
                   int budget, std::vector<int>* solution) {
    return min_hitting_set(g.n(), occurrences(g, info, caps), caps, budget, solution);
}

int oracle_optimum(const ColoredGraph& g, const PatternInfo& info, const Caps& caps,
                   int budget, std::vector<int>* solution) {
    return min_hitting_set(g.g.n(), occurrences(g, info, caps), caps, budget, solution);
}

} // namespace subhit
