#include "subhit/embed.hpp"

#include "subhit/errors.hpp"

#include <algorithm>

namespace subhit {

int Piece::add_vertex(int hv, int req) {
    adj.push_back(0);
    hvertex.push_back(hv);
    breq.push_back(req);
    return k++;
}

void Piece::add_edge(int a, int b) {
    adj[a] |= std::uint64_t{1} << b;
    adj[b] |= std::uint64_t{1} << a;
}

Piece piece_from_pattern(const Graph& h, bool colored) {
    Piece p;
    p.colored = colored;
    for (int v = 0; v < h.n(); ++v)
        p.add_vertex(v);
    for (auto [u, v] : h.edges())
        p.add_edge(u, v);
    return p;
}

std::vector<int> piece_order(const Piece& p) {
    std::vector<int> order;
    std::vector<char> visited(p.k, 0);
    auto bfs_from = [&](int s) {
        std::size_t head = order.size();
        order.push_back(s);
        visited[s] = 1;
        while (head < order.size()) {
            int u = order[head++];
            for (int w = 0; w < p.k; ++w)
                if (((p.adj[u] >> w) & 1u) && !visited[w]) {
                    visited[w] = 1;
                    order.push_back(w);
                }
        }
    };
    for (int v = 0; v < p.k; ++v)
        if (p.breq[v] != 0 && !visited[v])
            bfs_from(v);
    while (static_cast<int>(order.size()) < p.k) {
        int best = -1;
        for (int v = 0; v < p.k; ++v)
            if (!visited[v] &&
                (best < 0 || popcount64(p.adj[v]) > popcount64(p.adj[best])))
                best = v;
        bfs_from(best);
    }
    return order;
}

namespace {

void check_color_contract(const Piece& p, const std::vector<int>& host_color) {
    if (!p.colored)
        return;
    for (int c : host_color)
        if (c < 0)
            throw ContractViolationError(
                "embedding: colored piece into a host with uncolored vertices");
}

// Mask-based search over hosts with at most 64 vertices.
struct SmallSearch {
    const Piece& p;
    const SmallGraph& host;
    const std::function<bool(const std::vector<int>&)>& cb;
    std::vector<int> order;
    std::vector<int> image;
    std::uint64_t used = 0;
    std::uint64_t free_mask;
    bool stopped = false;

    SmallSearch(const Piece& pc, const SmallGraph& h, std::uint64_t forbidden,
                const std::function<bool(const std::vector<int>&)>& f)
        : p(pc), host(h), cb(f), order(piece_order(pc)), image(pc.k, -1),
          free_mask(h.vertex_mask() & ~forbidden) {}

    bool admissible(int pv, int hv) const {
        if (p.breq[pv] == -1 && host.label[hv] == 0)
            return false;
        if (p.breq[pv] > 0 && host.label[hv] != p.breq[pv])
            return false;
        if (p.colored && host.color[hv] != p.hvertex[pv])
            return false;
        return true;
    }

    void rec(std::size_t depth) {
        if (stopped)
            return;
        if (depth == order.size()) {
            if (!cb(image))
                stopped = true;
            return;
        }
        int pv = order[depth];
        std::uint64_t cands = free_mask & ~used;
        for (std::size_t d = 0; d < depth; ++d) {
            int qv = order[d];
            if ((p.adj[pv] >> qv) & 1u)
                cands &= host.adj[image[qv]];
        }
        while (cands) {
            int hv = __builtin_ctzll(cands);
            cands &= cands - 1;
            if (!admissible(pv, hv))
                continue;
            image[pv] = hv;
            used |= std::uint64_t{1} << hv;
            rec(depth + 1);
            used &= ~(std::uint64_t{1} << hv);
            image[pv] = -1;
            if (stopped)
                return;
        }
    }
};

// List-based search for arbitrarily large hosts.
struct BigSearch {
    const Piece& p;
    const Graph& host;
    const std::vector<int>* host_color;
    const std::vector<char>* forbidden;
    const std::function<bool(const std::vector<int>&)>& cb;
    std::vector<int> order;
    std::vector<int> image;
    std::vector<char> used;
    bool stopped = false;

    BigSearch(const Piece& pc, const Graph& h, const std::vector<int>* col,
              const std::vector<char>* forb,
              const std::function<bool(const std::vector<int>&)>& f)
        : p(pc), host(h), host_color(col), forbidden(forb), cb(f),
          order(piece_order(pc)), image(pc.k, -1), used(h.n(), 0) {}

    bool admissible(int pv, int hv, std::size_t depth) const {
        if (used[hv] || (forbidden && (*forbidden)[hv]))
            return false;
        if (p.breq[pv] != 0)
            return false; // boundary requirements only exist on small hosts
        if (p.colored && (*host_color)[hv] != p.hvertex[pv])
            return false;
        for (std::size_t d = 0; d < depth; ++d) {
            int qv = order[d];
            if (((p.adj[pv] >> qv) & 1u) && !host.has_edge(hv, image[qv]))
                return false;
        }
        return true;
    }

    void rec(std::size_t depth) {
        if (stopped)
            return;
        if (depth == order.size()) {
            if (!cb(image))
                stopped = true;
            return;
        }
        int pv = order[depth];
        // Anchor on a placed pattern neighbor when one exists: its image's
        // adjacency list is the candidate set, already sorted ascending.
        int anchor = -1;
        for (std::size_t d = 0; d < depth && anchor < 0; ++d)
            if ((p.adj[pv] >> order[d]) & 1u)
                anchor = image[order[d]];
        auto try_vertex = [&](int hv) {
            if (!admissible(pv, hv, depth))
                return;
            image[pv] = hv;
            used[hv] = 1;
            rec(depth + 1);
            used[hv] = 0;
            image[pv] = -1;
        };
        if (anchor >= 0) {
            for (int hv : host.neighbors(anchor)) {
                try_vertex(hv);
                if (stopped)
                    return;
            }
        } else {
            for (int hv = 0; hv < host.n(); ++hv) {
                try_vertex(hv);
                if (stopped)
                    return;
            }
        }
    }
};

} // namespace

void enumerate_embeddings(const Piece& p, const SmallGraph& host,
                          std::uint64_t forbidden,
                          const std::function<bool(const std::vector<int>&)>& cb) {
    if (p.colored)
        check_color_contract(p, host.color);
    SmallSearch s(p, host, forbidden, cb);
    s.rec(0);
}

bool find_embedding(const Piece& p, const SmallGraph& host,
                    std::uint64_t forbidden, std::vector<int>* image) {
    bool found = false;
    enumerate_embeddings(p, host, forbidden, [&](const std::vector<int>& img) {
        found = true;
        if (image)
            *image = img;
        return false;
    });
    return found;
}

void enumerate_embeddings(const Piece& p, const Graph& host,
                          const std::vector<int>* host_color,
                          const std::vector<char>* forbidden,
                          const std::function<bool(const std::vector<int>&)>& cb) {
    if (p.colored) {
        if (!host_color)
            throw ContractViolationError(
                "embedding: colored piece into an uncolored host");
        check_color_contract(p, *host_color);
    }
    for (int req : p.breq)
        if (req != 0)
            throw ContractViolationError(
                "embedding: boundary requirements need a boundaried host");
    BigSearch s(p, host, host_color, forbidden, cb);
    s.rec(0);
}

bool find_embedding(const Piece& p, const Graph& host,
                    const std::vector<int>* host_color,
                    const std::vector<char>* forbidden, std::vector<int>* image) {
    bool found = false;
    enumerate_embeddings(p, host, host_color, forbidden,
                         [&](const std::vector<int>& img) {
                             found = true;
                             if (image)
                                 *image = img;
                             return false;
                         });
    return found;
}

} // namespace subhit
