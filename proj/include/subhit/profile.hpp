#ifndef SUBHIT_PROFILE_HPP
#define SUBHIT_PROFILE_HPP

#include "subhit/graph.hpp"
#include "subhit/pattern.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace subhit {

// Deletion sets over nlabels boundary positions: every mask with popcount
// <= max_del, ordered by (popcount, value). Position i refers to the i-th
// smallest boundary label of the host.
std::vector<std::uint32_t> admissible_y_masks(int nlabels, int max_del);

// Extended profile of a boundaried graph G against a pattern H: for every
// Y inside the boundary with |Y| <= |V(H)|, which t-slices of size at most
// |V(H)| - |Y| embed into G minus Y. Stored as one truth table per
// realized (slice, boundary labeling) pair; bit i of the table is set iff
// some embedding survives deleting the i-th admissible label set. Tables
// over admissible masks are canonical, so equality of this struct is
// exactly profile equivalence.
struct ExtendedProfile {
    std::vector<int> boundary_labels;  // sorted ascending
    // key: (slice id, labels of the slice boundary in ascending slice-vertex
    // order); value: packed truth table, admissible_y_masks order.
    std::map<std::pair<int, std::vector<int>>, std::vector<std::uint64_t>> entries;

    bool operator==(const ExtendedProfile& o) const {
        return boundary_labels == o.boundary_labels && entries == o.entries;
    }
    std::string encode() const;
    std::uint64_t fingerprint() const;
    // True iff the whole pattern embeds with nothing deleted.
    bool contains_full_slice(const PatternInfo& info) const;
};

ExtendedProfile extended_profile(const PatternInfo& info, const SmallGraph& host);
ExtendedProfile extended_profile(const PatternInfo& info, const BoundariedGraph& host);

// Entrywise containment: every recorded embedding of p survives in q.
// Requires equal boundary label sets; holds whenever p's graph is a
// subgraph of q's graph with the same boundary.
bool profile_implies(const ExtendedProfile& p, const ExtendedProfile& q);

// True iff profile(g1 minus Y) is contained in profile(g2 minus Y) for all
// admissible Y. Throws ContractViolationError on boundary mismatch.
bool witness_subgraph_check(const PatternInfo& info, const BoundariedGraph& g1,
                            const BoundariedGraph& g2);

// Memoizes extended_profile per host; keyed by SmallGraph::encode().
class ProfileCache {
public:
    explicit ProfileCache(const PatternInfo& info) : info_(&info) {}
    const ExtendedProfile& get(const SmallGraph& host);
    std::size_t size() const { return cache_.size(); }

private:
    const PatternInfo* info_;
    std::unordered_map<std::string, std::unique_ptr<ExtendedProfile>> cache_;
};

} // namespace subhit

#endif
