#pragma once

#include <map>
#include <set>
#include <string>

#include "lcl/graph.hpp"
#include "lcl/problem.hpp"

namespace lcl {

// Replaces every edge of a structured graph by a finite gadget, erasing all
// explicit structure. An edge x-y becomes a path x-m1-m2-m3-m4-y with a
// pendant path of 2 vertices at m4 and a pendant path at m1 whose length
// encodes the edge: 3 for anchor-root (m1 on the anchor side), 4 for a left
// child and 5 for a right child (m1 on the parent side). Original vertices
// keep their ids and are marked Plain; gadget vertices are Aux. The result is
// acyclic with maximum degree 3.
StructuredGraph encode(const StructuredGraph& g);

// Orders of every vertex: k is an order of x when some path x-x1-...-xk has
// x1..x(k-1) of degree 2 and xk of degree 1.
using OrderSet = std::map<std::string, std::set<unsigned>>;
OrderSet vertex_orders(const StructuredGraph& g);

// Reconstructs the original structured graph from an encode image using only
// the graph structure: originals are the vertices all of whose neighbors have
// degree 3, anchors the originals with a neighbor of order 3, adjacency comes
// from length-5 paths, and sides from the order-4/5 pendants. Throws
// not_in_image (subject: a diagnostic vertex) when the rules are inconsistent.
// Tree indices are recovered per anchor by the lexicographic order of its
// root neighbors; degree-0 vertices decode as Plain.
StructuredGraph decode(const StructuredGraph& gstar);

// Radius-7 problem on encoded graphs: passes unconditionally at auxiliary
// vertices and applies the anchor/child rules of pi at original vertices,
// reading anchor status, children sides and neighbor colors out of the
// gadgets inside the ball. Auxiliary colors never affect the verdict.
LocalProblem lift_problem();

}  // namespace lcl
