#include "subhit/treedecomp.hpp"

#include "subhit/errors.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <string>

namespace subhit {

namespace {

std::string vec_str(const std::vector<int>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(v[i]);
    }
    return s + "}";
}

std::vector<int> bag_plus(const std::vector<int>& bag, int v) {
    std::vector<int> out = bag;
    out.insert(std::lower_bound(out.begin(), out.end(), v), v);
    return out;
}

std::vector<int> bag_minus(const std::vector<int>& bag, int v) {
    std::vector<int> out;
    out.reserve(bag.size());
    for (int w : bag)
        if (w != v)
            out.push_back(w);
    return out;
}

} // namespace

int TreeDecomposition::width() const {
    int w = -1;
    for (const auto& bag : bags)
        w = std::max(w, static_cast<int>(bag.size()) - 1);
    return w;
}

ValidationReport validate(const Graph& g, const TreeDecomposition& td) {
    ValidationReport rep;
    auto fail = [&](std::string msg) {
        rep.ok = false;
        rep.violation = std::move(msg);
        return rep;
    };
    const int nb = static_cast<int>(td.bags.size());
    if (nb == 0) {
        if (g.n() > 0)
            return fail("graph has vertices but the decomposition has no bags");
        if (!td.tree_edges.empty())
            return fail("no bags but tree edges are present");
        return rep;
    }
    for (auto [a, b] : td.tree_edges) {
        if (a < 0 || a >= nb || b < 0 || b >= nb)
            return fail("tree edge (" + std::to_string(a) + "," +
                        std::to_string(b) + ") references a missing bag");
        if (a == b)
            return fail("tree edge is a self-loop at bag " + std::to_string(a));
    }
    if (static_cast<int>(td.tree_edges.size()) != nb - 1)
        return fail("tree on " + std::to_string(nb) + " bags needs " +
                    std::to_string(nb - 1) + " edges, got " +
                    std::to_string(td.tree_edges.size()));
    std::vector<std::vector<int>> adj(nb);
    for (auto [a, b] : td.tree_edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    {
        std::vector<char> seen(nb, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int cnt = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : adj[u])
                if (!seen[v]) {
                    seen[v] = 1;
                    ++cnt;
                    stack.push_back(v);
                }
        }
        if (cnt != nb)
            return fail("tree on the bags is disconnected");
    }
    std::vector<std::vector<int>> bags_of(g.n());
    for (int i = 0; i < nb; ++i) {
        const auto& bag = td.bags[i];
        for (std::size_t j = 0; j < bag.size(); ++j) {
            int v = bag[j];
            if (v < 0 || v >= g.n())
                return fail("bag " + std::to_string(i) +
                            " contains out-of-range vertex " + std::to_string(v));
            if (j > 0 && bag[j - 1] >= v)
                return fail("bag " + std::to_string(i) +
                            " is not sorted strictly ascending: " + vec_str(bag));
            bags_of[v].push_back(i);
        }
    }
    for (int v = 0; v < g.n(); ++v) {
        if (bags_of[v].empty())
            return fail("vertex " + std::to_string(v) + " appears in no bag");
        std::vector<char> inset(nb, 0), seen(nb, 0);
        for (int i : bags_of[v])
            inset[i] = 1;
        std::vector<int> stack{bags_of[v][0]};
        seen[bags_of[v][0]] = 1;
        std::size_t cnt = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : adj[u])
                if (inset[w] && !seen[w]) {
                    seen[w] = 1;
                    ++cnt;
                    stack.push_back(w);
                }
        }
        if (cnt != bags_of[v].size())
            return fail("vertex " + std::to_string(v) +
                        " appears in a disconnected set of bags");
    }
    for (auto [u, v] : g.edges()) {
        bool covered = false;
        for (int i : bags_of[u])
            if (std::binary_search(td.bags[i].begin(), td.bags[i].end(), v)) {
                covered = true;
                break;
            }
        if (!covered)
            return fail("edge {" + std::to_string(u) + "," + std::to_string(v) +
                        "} is contained in no bag");
    }
    return rep;
}

TreeDecomposition heuristic_decompose(const Graph& g) {
    TreeDecomposition td;
    const int n = g.n();
    if (n == 0) {
        td.bags.push_back({});
        return td;
    }
    std::vector<std::set<int>> adj(n);
    for (auto [u, v] : g.edges()) {
        adj[u].insert(v);
        adj[v].insert(u);
    }
    std::vector<char> active(n, 1);
    std::vector<int> elim_step(n, -1);
    std::vector<std::vector<int>> elim_nbrs(n);
    std::vector<int> order;
    order.reserve(n);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        long best_fill = -1;
        for (int v = 0; v < n; ++v) {
            if (!active[v])
                continue;
            long fill = 0;
            for (auto it = adj[v].begin(); it != adj[v].end(); ++it)
                for (auto jt = std::next(it); jt != adj[v].end(); ++jt)
                    if (!adj[*it].count(*jt))
                        ++fill;
            if (best < 0 || fill < best_fill) {
                best = v;
                best_fill = fill;
            }
        }
        std::vector<int> nb(adj[best].begin(), adj[best].end());
        elim_nbrs[best] = nb;
        elim_step[best] = step;
        order.push_back(best);
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                adj[nb[i]].insert(nb[j]);
                adj[nb[j]].insert(nb[i]);
            }
        for (int w : nb)
            adj[w].erase(best);
        adj[best].clear();
        active[best] = 0;
    }
    std::vector<int> last_root;
    for (int step = 0; step < n; ++step) {
        int v = order[step];
        std::vector<int> bag = bag_plus(elim_nbrs[v], v);
        td.bags.push_back(bag);
        if (!elim_nbrs[v].empty()) {
            // A vertex's neighbors at elimination all come later in the
            // order; attach to the bag of the earliest of them.
            int parent = -1;
            for (int w : elim_nbrs[v])
                if (parent < 0 || elim_step[w] < parent)
                    parent = elim_step[w];
            td.tree_edges.push_back({step, parent});
        } else {
            // Component root; chain roots so the tree stays connected.
            if (!last_root.empty())
                td.tree_edges.push_back({last_root.back(), step});
            last_root.push_back(step);
        }
    }
    return td;
}

std::vector<int> NiceDecomposition::postorder() const {
    std::vector<int> out;
    if (root < 0)
        return out;
    std::vector<std::pair<int, int>> stack{{root, 0}};
    while (!stack.empty()) {
        int u = stack.back().first;
        int& i = stack.back().second;
        if (i < static_cast<int>(nodes[u].children.size())) {
            int c = nodes[u].children[i];
            ++i;
            stack.push_back({c, 0});
        } else {
            out.push_back(u);
            stack.pop_back();
        }
    }
    return out;
}

int make_nice_factor() { return 8; }

void compute_lambda(NiceDecomposition& nd, int n) {
    nd.lambda.assign(n, 0);
    std::vector<int> order = nd.postorder();
    // Reverse postorder visits ancestors first, so at a forget node every
    // other bag vertex already carries its label.
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const NiceNode& node = nd.nodes[*it];
        if (node.kind != NodeKind::forget)
            continue;
        std::vector<char> used(nd.t + 2, 0);
        for (int w : node.bag)
            if (nd.lambda[w] <= nd.t + 1)
                used[nd.lambda[w]] = 1;
        int l = 1;
        while (used[l])
            ++l;
        nd.lambda[node.vertex] = l;
    }
}

NiceDecomposition make_nice(const Graph& g, const TreeDecomposition& td) {
    ValidationReport rep = validate(g, td);
    if (!rep.ok)
        throw ContractViolationError("invalid tree decomposition: " +
                                     rep.violation);

    // Prune bags that are subsets of a neighbor; afterwards there are at
    // most max(1, n) bags.
    std::vector<std::vector<int>> bags = td.bags;
    std::vector<std::set<int>> adj(bags.size());
    for (auto [a, b] : td.tree_edges) {
        adj[a].insert(b);
        adj[b].insert(a);
    }
    std::vector<char> alive(bags.size(), 1);
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < bags.size() && !changed; ++i) {
            if (!alive[i])
                continue;
            for (int j : adj[i]) {
                if (!std::includes(bags[j].begin(), bags[j].end(),
                                   bags[i].begin(), bags[i].end()))
                    continue;
                for (int k : adj[i])
                    if (k != j) {
                        adj[k].erase(static_cast<int>(i));
                        adj[k].insert(j);
                        adj[j].insert(k);
                    }
                adj[j].erase(static_cast<int>(i));
                adj[i].clear();
                alive[i] = 0;
                changed = true;
                break;
            }
        }
    }
    std::vector<int> keep;
    std::vector<int> remap(bags.size(), -1);
    for (std::size_t i = 0; i < bags.size(); ++i)
        if (alive[i]) {
            remap[i] = static_cast<int>(keep.size());
            keep.push_back(static_cast<int>(i));
        }
    std::vector<std::vector<int>> pbags, padj;
    for (int i : keep) {
        pbags.push_back(bags[i]);
        std::vector<int> row;
        for (int j : adj[i])
            row.push_back(remap[j]);
        padj.push_back(row);
    }

    NiceDecomposition nd;
    auto mk = [&](NodeKind k, int vertex, std::vector<int> bag,
                  std::vector<int> children) {
        NiceNode node;
        node.kind = k;
        node.vertex = vertex;
        node.bag = std::move(bag);
        node.children = std::move(children);
        nd.nodes.push_back(std::move(node));
        return static_cast<int>(nd.nodes.size()) - 1;
    };
    // Forget what is in `from` only, then introduce what is in `to` only.
    auto adapt = [&](int cur, const std::vector<int>& from,
                     const std::vector<int>& to) {
        std::vector<int> bag = from;
        for (int v : from)
            if (!std::binary_search(to.begin(), to.end(), v)) {
                bag = bag_minus(bag, v);
                cur = mk(NodeKind::forget, v, bag, {cur});
            }
        for (int v : to)
            if (!std::binary_search(from.begin(), from.end(), v)) {
                bag = bag_plus(bag, v);
                cur = mk(NodeKind::introduce, v, bag, {cur});
            }
        return cur;
    };
    auto build = [&](auto&& self, int u, int parent) -> int {
        std::vector<int> tops;
        for (int c : padj[u])
            if (c != parent) {
                int tc = self(self, c, u);
                tops.push_back(adapt(tc, pbags[c], pbags[u]));
            }
        if (tops.empty()) {
            int leaf = mk(NodeKind::leaf, -1, {}, {});
            return adapt(leaf, {}, pbags[u]);
        }
        int cur = tops[0];
        for (std::size_t i = 1; i < tops.size(); ++i)
            cur = mk(NodeKind::join, -1, pbags[u], {cur, tops[i]});
        return cur;
    };
    int top = build(build, 0, -1);
    nd.root = adapt(top, pbags[0], {});
    for (std::size_t i = 0; i < nd.nodes.size(); ++i)
        for (int c : nd.nodes[i].children)
            nd.nodes[c].parent = static_cast<int>(i);
    nd.nodes[nd.root].parent = -1;
    for (const NiceNode& node : nd.nodes)
        nd.t = std::max(nd.t, static_cast<int>(node.bag.size()));
    compute_lambda(nd, g.n());
    return nd;
}

void NiceDecomposition::check(const Graph& g) const {
    auto fail = [](const std::string& msg) {
        throw ContractViolationError("nice decomposition: " + msg);
    };
    if (root < 0 || root >= static_cast<int>(nodes.size()))
        fail("missing root");
    if (!nodes[root].bag.empty())
        fail("root bag is not empty");
    if (nodes[root].parent != -1)
        fail("root has a parent");
    std::vector<int> order = postorder();
    if (order.size() != nodes.size())
        fail("nodes unreachable from the root");
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const NiceNode& node = nodes[i];
        for (int c : node.children) {
            if (c < 0 || c >= static_cast<int>(nodes.size()))
                fail("child index out of range");
            if (nodes[c].parent != static_cast<int>(i))
                fail("parent/child links disagree");
        }
        if (static_cast<int>(node.bag.size()) > t)
            fail("bag larger than t");
        switch (node.kind) {
        case NodeKind::leaf:
            if (!node.children.empty() || !node.bag.empty())
                fail("leaf node with children or a nonempty bag");
            break;
        case NodeKind::introduce: {
            if (node.children.size() != 1)
                fail("introduce node without exactly one child");
            const auto& cb = nodes[node.children[0]].bag;
            if (std::binary_search(cb.begin(), cb.end(), node.vertex))
                fail("introduced vertex already in the child bag");
            if (node.bag != bag_plus(cb, node.vertex))
                fail("introduce bag is not child bag plus the vertex");
            break;
        }
        case NodeKind::forget: {
            if (node.children.size() != 1)
                fail("forget node without exactly one child");
            const auto& cb = nodes[node.children[0]].bag;
            if (!std::binary_search(cb.begin(), cb.end(), node.vertex))
                fail("forgotten vertex missing from the child bag");
            if (node.bag != bag_minus(cb, node.vertex))
                fail("forget bag is not child bag minus the vertex");
            break;
        }
        case NodeKind::join:
            if (node.children.size() != 2)
                fail("join node without exactly two children");
            if (nodes[node.children[0]].bag != node.bag ||
                nodes[node.children[1]].bag != node.bag)
                fail("join children bags differ from the join bag");
            break;
        }
    }
    TreeDecomposition flat;
    for (const NiceNode& node : nodes)
        flat.bags.push_back(node.bag);
    for (std::size_t i = 0; i < nodes.size(); ++i)
        for (int c : nodes[i].children)
            flat.tree_edges.push_back({static_cast<int>(i), c});
    ValidationReport rep = validate(g, flat);
    if (!rep.ok)
        fail(rep.violation);
    if (static_cast<int>(lambda.size()) != g.n())
        fail("lambda size differs from the vertex count");
    for (int v = 0; v < g.n(); ++v)
        if (lambda[v] < 1 || lambda[v] > t)
            fail("vertex " + std::to_string(v) + " has label " +
                 std::to_string(lambda[v]) + " outside 1.." + std::to_string(t));
    for (const NiceNode& node : nodes) {
        std::vector<char> used(t + 1, 0);
        for (int v : node.bag) {
            if (used[lambda[v]])
                fail("two bag vertices share label " + std::to_string(lambda[v]));
            used[lambda[v]] = 1;
        }
    }
}

} // namespace subhit
