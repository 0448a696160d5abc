#pragma once

#include <string>

#include <json.hpp>

#include "lcl/gadget.hpp"
#include "lcl/graph.hpp"
#include "lcl/problem.hpp"
#include "lcl/regtree.hpp"
#include "lcl/sigma_pi.hpp"
#include "lcl/solver.hpp"

namespace lcl {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json; // fixed key order for byte-stable output

// Graph files: {"mode": "structured"|"plain", "vertices": [{"id", "kind",
// "tree"?, "root"?}], "edges": [{"a", "b", "kind", "parent"?, "side"?}]}.
// Emission is canonical: vertices sorted by id, edges sorted with a < b.
StructuredGraph graph_from_json(const json& j);
StructuredGraph graph_from_json(const json& j, bool structured_override);
ojson graph_to_json(const StructuredGraph& g);

// Coloring files: {"colors": {id: color, ...}}; zero colors are omitted.
Coloring coloring_from_json(const json& j);
ojson coloring_to_json(const Coloring& f);

// Automaton files: {"states": [...], "initial": s, "delta": {state: {"0": s,
// "1": s}}}; a missing (state, bit) key means that child is absent.
TreeAutomaton parse_automaton(const json& j);
ojson automaton_to_json(const TreeAutomaton& a);

// Component spec files: {"a0": automaton, "a1": automaton, "depth": d}.
ComponentSpec component_from_json(const json& j);

ojson fdecision_to_json(const FDecision& d);
ojson verdict_to_json(const Verdict& v);
ojson solve_result_to_json(const SolveResult& r);
ojson orders_to_json(const OrderSet& orders);

// Canonical text form used everywhere a JSON document is written out.
std::string dump_json(const ojson& j);

}  // namespace lcl
