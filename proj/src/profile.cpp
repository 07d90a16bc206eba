#include "subhit/profile.hpp"

#include "subhit/embed.hpp"
#include "subhit/errors.hpp"

#include <algorithm>
#include <cassert>

namespace subhit {

namespace {

// Profiles are tabulated over all subsets of the boundary label positions;
// the position count is bounded to keep the tables small.
constexpr int kMaxProfileBoundary = 16;

std::vector<int> mask_vertices(std::uint64_t mask) {
    std::vector<int> out;
    for (int v = 0; v < 64; ++v)
        if ((mask >> v) & 1u) out.push_back(v);
    return out;
}

// Keeps `sup` an antichain of minimal supports under subset order.
void add_support(std::vector<std::uint32_t>& sup, std::uint32_t s) {
    for (std::uint32_t x : sup)
        if ((x & s) == x) return;
    std::size_t w = 0;
    for (std::size_t i = 0; i < sup.size(); ++i)
        if ((sup[i] & s) != s) sup[w++] = sup[i];
    sup.resize(w);
    sup.push_back(s);
}

void append_u32(std::string& out, std::uint32_t x) {
    for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((x >> (8 * i)) & 0xff));
}

void append_u64(std::string& out, std::uint64_t x) {
    for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((x >> (8 * i)) & 0xff));
}

} // namespace

std::vector<std::uint32_t> admissible_y_masks(int nlabels, int max_del) {
    assert(nlabels >= 0 && nlabels <= kMaxProfileBoundary);
    std::vector<std::uint32_t> masks;
    for (std::uint32_t m = 0; m < (1u << nlabels); ++m)
        if (__builtin_popcount(m) <= max_del) masks.push_back(m);
    std::stable_sort(masks.begin(), masks.end(),
                     [](std::uint32_t a, std::uint32_t b) {
                         int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
                         return pa != pb ? pa < pb : a < b;
                     });
    return masks;
}

ExtendedProfile extended_profile(const PatternInfo& info, const SmallGraph& host) {
    ExtendedProfile prof;
    for (int v = 0; v < host.n; ++v)
        if (host.label[v] > 0) prof.boundary_labels.push_back(host.label[v]);
    std::sort(prof.boundary_labels.begin(), prof.boundary_labels.end());
    const int b = static_cast<int>(prof.boundary_labels.size());
    contract_check(std::adjacent_find(prof.boundary_labels.begin(),
                                      prof.boundary_labels.end()) == prof.boundary_labels.end(),
                   "extended_profile: duplicate boundary labels");
    if (b > kMaxProfileBoundary)
        throw ResourceLimitError("extended_profile: boundary has " + std::to_string(b) +
                                 " labels, tabulation cap is " +
                                 std::to_string(kMaxProfileBoundary));

    std::vector<int> pos_of_label(prof.boundary_labels.empty()
                                      ? 1
                                      : prof.boundary_labels.back() + 1,
                                  -1);
    for (int i = 0; i < b; ++i) pos_of_label[prof.boundary_labels[i]] = i;
    auto label_pos = [&](int lab) {
        assert(lab > 0 && lab < static_cast<int>(pos_of_label.size()));
        return pos_of_label[lab];
    };

    const int h = info.h.n();
    std::vector<std::vector<std::uint32_t>> masks_by_del(h + 1);

    for (std::size_t sid = 0; sid < info.slices.size(); ++sid) {
        const Slice& s = info.slices[sid];
        if (s.verts == 0) continue; // trivially present, carries no information

        std::vector<int> verts = mask_vertices(s.verts);
        const int k = static_cast<int>(verts.size());
        Piece piece;
        for (int v : verts)
            piece.add_vertex(v, ((s.boundary >> v) & 1u) ? -1 : 0);
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                if (info.h.has_edge(verts[i], verts[j])) piece.add_edge(i, j);

        // Minimal boundary-label supports per realized boundary labeling.
        std::map<std::vector<int>, std::vector<std::uint32_t>> supports;
        std::vector<int> tuple;
        enumerate_embeddings(piece, host, 0, [&](const std::vector<int>& image) {
            tuple.clear();
            std::uint32_t sup = 0;
            for (int i = 0; i < k; ++i) {
                int lab = host.label[image[i]];
                if (((s.boundary >> verts[i]) & 1u) != 0) tuple.push_back(lab);
                if (lab > 0) sup |= 1u << label_pos(lab);
            }
            add_support(supports[tuple], sup);
            return true;
        });
        if (supports.empty()) continue;

        const int max_del = h - k;
        auto& masks = masks_by_del[max_del];
        if (masks.empty()) masks = admissible_y_masks(b, std::min(max_del, b));
        const std::size_t words = (masks.size() + 63) / 64;

        for (auto& [tup, sup] : supports) {
            std::vector<std::uint64_t> table(words, 0);
            for (std::size_t i = 0; i < masks.size(); ++i) {
                bool alive = false;
                for (std::uint32_t sm : sup)
                    if ((sm & masks[i]) == 0) { alive = true; break; }
                if (alive) table[i / 64] |= std::uint64_t{1} << (i % 64);
            }
            prof.entries.emplace(std::make_pair(static_cast<int>(sid), tup),
                                 std::move(table));
        }
    }
    return prof;
}

ExtendedProfile extended_profile(const PatternInfo& info, const BoundariedGraph& host) {
    host.check();
    return extended_profile(info, to_small(host));
}

std::string ExtendedProfile::encode() const {
    std::string out;
    append_u32(out, static_cast<std::uint32_t>(boundary_labels.size()));
    for (int lab : boundary_labels) append_u32(out, static_cast<std::uint32_t>(lab));
    append_u32(out, static_cast<std::uint32_t>(entries.size()));
    for (const auto& [key, table] : entries) {
        append_u32(out, static_cast<std::uint32_t>(key.first));
        append_u32(out, static_cast<std::uint32_t>(key.second.size()));
        for (int lab : key.second) append_u32(out, static_cast<std::uint32_t>(lab));
        append_u32(out, static_cast<std::uint32_t>(table.size()));
        for (std::uint64_t w : table) append_u64(out, w);
    }
    return out;
}

std::uint64_t ExtendedProfile::fingerprint() const {
    std::uint64_t hash = 0xcbf29ce484222325ull;
    for (char c : encode()) {
        hash ^= static_cast<unsigned char>(c);
        hash *= 0x100000001b3ull;
    }
    return hash;
}

bool ExtendedProfile::contains_full_slice(const PatternInfo& info) const {
    auto it = entries.find({info.full_slice_id, {}});
    if (it == entries.end()) return false;
    contract_check(!it->second.empty() && (it->second[0] & 1u) != 0,
                   "extended_profile: stored entry misses the empty deletion set");
    return true;
}

bool profile_implies(const ExtendedProfile& p, const ExtendedProfile& q) {
    if (p.boundary_labels != q.boundary_labels) return false;
    for (const auto& [key, table] : p.entries) {
        auto it = q.entries.find(key);
        if (it == q.entries.end()) return false; // stored tables are never all-zero
        contract_check(it->second.size() == table.size(),
                       "profile_implies: table length mismatch");
        for (std::size_t i = 0; i < table.size(); ++i)
            if ((table[i] & ~it->second[i]) != 0) return false;
    }
    return true;
}

bool witness_subgraph_check(const PatternInfo& info, const BoundariedGraph& g1,
                            const BoundariedGraph& g2) {
    std::vector<int> l1 = g1.labels, l2 = g2.labels;
    std::sort(l1.begin(), l1.end());
    std::sort(l2.begin(), l2.end());
    contract_check(l1 == l2, "witness_subgraph_check: boundary label sets differ");
    return profile_implies(extended_profile(info, g1), extended_profile(info, g2));
}

const ExtendedProfile& ProfileCache::get(const SmallGraph& host) {
    std::string key = host.encode();
    auto it = cache_.find(key);
    if (it == cache_.end()) {
        auto prof = std::make_unique<ExtendedProfile>(extended_profile(*info_, host));
        it = cache_.emplace(std::move(key), std::move(prof)).first;
    }
    return *it->second;
}

} // namespace subhit
