#pragma once

#include <set>
#include <string>

#include "lcl/graph.hpp"
#include "lcl/problem.hpp"
#include "lcl/regtree.hpp"

namespace lcl {

// Radius-1 problem on rooted binary trees:
//   S1  the root gets a color >= 1
//   S2  color 1 forces a right child with a color >= 1
//   S3  color >= 2 forces a left child colored exactly one less
// The frontier rule keeps only S1, for truncations of infinite trees.
LocalProblem sigma_problem();

// Radius-1 problem on anchor components:
//   P1  an anchor has exactly one neighbor with a color >= 1
//   P2, P3  as S2/S3 at non-anchor vertices
// The frontier rule keeps only P1.
LocalProblem pi_problem();

// Number of 0s between `position` and the next 1 of stem . cycle^omega.
unsigned k_of(const BranchWitness& w, std::size_t position);

// Colors each prefix s of the witness branch with k_of(w, |s|) + 1 and every
// other vertex of truncate(a, depth) with 0.
Coloring sigma_coloring_from_branch(const TreeAutomaton& a, const BranchWitness& w,
                                    unsigned depth);

// Follows favorite children (right child after color 1, left child after
// color >= 2) from the root for as long as the required child exists in the
// truncation; returns the traced bit string.
std::string extract_branch(const StructuredGraph& truncation, const Coloring& f);

struct ComponentSpec {
    TreeAutomaton a0;
    TreeAutomaton a1;
    unsigned depth = 0;
};

// One anchor joined to the roots of both tree truncations. Vertex ids are
// "anchor" and "t<i>/<bits>".
StructuredGraph build_component(const ComponentSpec& spec);

// True iff at least one of the two presented trees has a branch with
// infinitely many 1s; equivalently, the infinite component admits a
// Pi-coloring.
bool component_colorable(const TreeAutomaton& a0, const TreeAutomaton& a1);

// Sigma-colors the first tree not in F (tree 0 preferred) and sends every
// other vertex, including the anchor, to 0. Throws not_colorable when both
// trees are in F.
Coloring pi_coloring_for_component(const ComponentSpec& spec);

// Anchors plus every vertex with at least one child: the conventional
// checked set for lenient verification of truncations and components.
std::set<std::string> lenient_checked_set(const StructuredGraph& g);

}  // namespace lcl
