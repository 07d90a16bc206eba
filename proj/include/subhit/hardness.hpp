#ifndef SUBHIT_HARDNESS_HPP
#define SUBHIT_HARDNESS_HPP

#include "subhit/caps.hpp"
#include "subhit/cnf.hpp"
#include "subhit/graph.hpp"
#include "subhit/pattern.hpp"
#include "subhit/treedecomp.hpp"

#include <string>
#include <vector>

namespace subhit {

// Host instance produced by a generator, with a valid tree decomposition
// certifying `width` and a JSON manifest of the construction parameters.
// `color` maps host vertices to pattern vertices for colorful instances
// and is empty for plain ones. `k` is the deletion budget: the source
// instance is a yes-instance iff at most k deletions suffice.
struct ReductionOutput {
    Graph graph;
    std::vector<int> color;
    int k = 0;
    TreeDecomposition td;
    int width = 0;
    std::string manifest;

    ColoredGraph colored() const;
};

// Smallest separation of the pattern: non-cutvertices a and b separated
// by a minimal ab-separator S with |S| = mu. A and B are the components
// of a and b in H - S, D the component of H containing both; all sorted.
// Deterministic: lexicographically smallest (a, b, S). Requires mu >= 1.
struct SeparatorChoice {
    int a = -1;
    int b = -1;
    std::vector<int> S;
    std::vector<int> A, B, D;
};

SeparatorChoice choose_separator(const Graph& h, const PatternInfo& info);

// Standalone gadget host. Colors refer to `pattern` (the pattern component
// spanning the chosen separation, renumbered); `attachments` lists the
// designated contact vertices.
struct GadgetInstance {
    ColoredGraph g;
    Graph pattern;
    std::vector<int> attachments;
};

// OR gadget between two fresh contact vertices: three pattern-component
// copies, the middle one glued to the outer two at separator vertices,
// contacts identified with the outer copies' a-vertices. Any hitting set
// needs two gadget vertices, one of them a non-contact; {contact, inner}
// pairs suffice. Requires mu >= 2.
GadgetInstance build_or_gadget(const Graph& h, const Caps& caps);

// Cycle of r OR gadgets through r fresh contact vertices. Its minimum
// hitting set has size exactly r + ceil(r / 2). Requires mu >= 2, r >= 2.
GadgetInstance build_alpha_r_cycle(const Graph& h, int r, const Caps& caps);

// Vertex cover reduction: colorful instance whose optimum is exactly
// vc(g0) + |E(g0)|, with a star decomposition around V(g0). k is that
// optimum; the cover is computed exactly, so g0 should stay small.
// Requires a pattern component that is not a path.
ReductionOutput gen_vc(const Graph& g0, const Graph& h, const Caps& caps);

// 3-SAT reduction to colorful hitting for patterns with mu >= 2: the
// formula must be clean, k = 12n - m, and the decomposition width is
// s * mu plus a constant, where s is minimal with s^mu >= 3n. The
// formula is satisfiable iff the optimum is at most k.
ReductionOutput gen_colorful(const CnfFormula& clean, const Graph& h, const Caps& caps);

// 3-SAT reduction to plain hitting of the pattern K_{2,hh} with a
// triangle on both degree-hh vertices: the formula must be clean,
// k = 5n - m, and the decomposition width is s * hh plus a constant,
// where s is minimal with s^hh >= 3n. Satisfiable iff optimum <= k.
// Requires hh >= 2.
ReductionOutput gen_hh(const CnfFormula& clean, int hh, const Caps& caps);

} // namespace subhit

#endif
