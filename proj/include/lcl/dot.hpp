#pragma once

#include <string>

#include "lcl/graph.hpp"

namespace lcl {

// Deterministic DOT text for a graph, with colors rendered as labels when a
// coloring is supplied. Auxiliary vertices are drawn distinctly from the
// rest.
std::string export_dot(const StructuredGraph& g, const Coloring* f = nullptr);

}  // namespace lcl
