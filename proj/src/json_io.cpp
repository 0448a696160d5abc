#include "lcl/json_io.hpp"

#include <algorithm>

#include "lcl/errors.hpp"

namespace lcl {

namespace {

const json& field(const json& j, const char* name) {
    auto it = j.find(name);
    if (it == j.end()) fail("malformed_input", std::string("missing field '") + name + "'");
    return *it;
}

std::string string_field(const json& j, const char* name) {
    const json& v = field(j, name);
    if (!v.is_string()) fail("malformed_input", std::string("field '") + name + "' must be a string");
    return v.get<std::string>();
}

std::uint64_t uint_field(const json& j, const char* name) {
    const json& v = field(j, name);
    if (!v.is_number_unsigned())
        fail("malformed_input", std::string("field '") + name + "' must be a non-negative integer");
    return v.get<std::uint64_t>();
}

VertexKind kind_from_string(const std::string& s) {
    if (s == "anchor") return VertexKind::Anchor;
    if (s == "tree") return VertexKind::Tree;
    if (s == "plain") return VertexKind::Plain;
    if (s == "aux") return VertexKind::Aux;
    fail("malformed_input", "unknown vertex kind '" + s + "'");
}

const char* kind_to_string(VertexKind k) {
    switch (k) {
    case VertexKind::Anchor: return "anchor";
    case VertexKind::Tree: return "tree";
    case VertexKind::Plain: return "plain";
    case VertexKind::Aux: return "aux";
    }
    return "?";
}

StructuredGraph graph_from_json_impl(const json& j, std::optional<bool> structured_override) {
    if (!j.is_object()) fail("malformed_input", "graph document must be a JSON object");
    bool structured = true;
    if (auto it = j.find("mode"); it != j.end()) {
        std::string mode = it->get<std::string>();
        if (mode == "plain")
            structured = false;
        else if (mode != "structured")
            fail("malformed_input", "graph mode must be 'structured' or 'plain'");
    }
    if (structured_override) structured = *structured_override;

    std::vector<VertexDecl> vertices;
    const json& vs = field(j, "vertices");
    if (!vs.is_array()) fail("malformed_input", "'vertices' must be an array");
    for (const json& vj : vs) {
        VertexDecl d;
        d.id = string_field(vj, "id");
        if (vj.contains("kind")) d.kind = kind_from_string(string_field(vj, "kind"));
        if (d.kind == VertexKind::Tree) {
            if (vj.contains("tree")) d.tree_index = static_cast<int>(uint_field(vj, "tree"));
            if (vj.contains("root")) {
                const json& r = field(vj, "root");
                if (!r.is_boolean()) fail("malformed_input", "'root' must be a boolean");
                d.is_root = r.get<bool>();
            }
        }
        vertices.push_back(std::move(d));
    }

    std::vector<EdgeDecl> edges;
    const json& es = field(j, "edges");
    if (!es.is_array()) fail("malformed_input", "'edges' must be an array");
    for (const json& ej : es) {
        EdgeDecl e;
        e.a = string_field(ej, "a");
        e.b = string_field(ej, "b");
        std::string kind = ej.contains("kind") ? string_field(ej, "kind") : "unlabeled";
        if (kind == "anchor_root") {
            e.kind = EdgeKind::AnchorRoot;
        } else if (kind == "parent_child") {
            e.kind = EdgeKind::ParentChild;
            e.parent = string_field(ej, "parent");
            std::string side = string_field(ej, "side");
            if (side == "left")
                e.side = Side::Left;
            else if (side == "right")
                e.side = Side::Right;
            else
                fail("malformed_input", "edge side must be 'left' or 'right'");
        } else if (kind == "unlabeled") {
            e.kind = EdgeKind::Unlabeled;
        } else {
            fail("malformed_input", "unknown edge kind '" + kind + "'");
        }
        edges.push_back(std::move(e));
    }
    return StructuredGraph::build(vertices, edges, structured);
}

}  // namespace

StructuredGraph graph_from_json(const json& j) { return graph_from_json_impl(j, std::nullopt); }

StructuredGraph graph_from_json(const json& j, bool structured_override) {
    return graph_from_json_impl(j, structured_override);
}

ojson graph_to_json(const StructuredGraph& g) {
    ojson out;
    out["mode"] = g.structured() ? "structured" : "plain";
    out["vertices"] = ojson::array();
    for (const VertexDecl& v : g.vertex_decls()) { // ids() sorted, so this is canonical
        ojson vj;
        vj["id"] = v.id;
        vj["kind"] = kind_to_string(v.kind);
        if (v.kind == VertexKind::Tree) {
            vj["tree"] = v.tree_index;
            vj["root"] = v.is_root;
        }
        out["vertices"].push_back(std::move(vj));
    }
    out["edges"] = ojson::array();
    for (const EdgeDecl& e : g.edge_decls()) {
        ojson ej;
        ej["a"] = e.a;
        ej["b"] = e.b;
        switch (e.kind) {
        case EdgeKind::AnchorRoot: ej["kind"] = "anchor_root"; break;
        case EdgeKind::Unlabeled: ej["kind"] = "unlabeled"; break;
        case EdgeKind::ParentChild:
            ej["kind"] = "parent_child";
            ej["parent"] = e.parent;
            ej["side"] = e.side == Side::Left ? "left" : "right";
            break;
        }
        out["edges"].push_back(std::move(ej));
    }
    return out;
}

Coloring coloring_from_json(const json& j) {
    if (!j.is_object()) fail("malformed_input", "coloring document must be a JSON object");
    const json& cs = field(j, "colors");
    if (!cs.is_object()) fail("malformed_input", "'colors' must be an object");
    Coloring f;
    for (auto it = cs.begin(); it != cs.end(); ++it) {
        if (!it.value().is_number_unsigned())
            fail("malformed_input", "color of '" + it.key() + "' must be a non-negative integer");
        f.set(it.key(), it.value().get<Color>());
    }
    return f;
}

ojson coloring_to_json(const Coloring& f) {
    ojson out;
    out["colors"] = ojson::object();
    for (const auto& [id, c] : f.colors) // std::map: sorted ids
        if (c != 0) out["colors"][id] = c;
    return out;
}

TreeAutomaton parse_automaton(const json& j) {
    if (!j.is_object()) fail("malformed_input", "automaton document must be a JSON object");
    const json& sj = field(j, "states");
    if (!sj.is_array()) fail("malformed_input", "'states' must be an array");
    std::vector<std::string> states;
    for (const json& s : sj) {
        if (!s.is_string()) fail("malformed_input", "state names must be strings");
        states.push_back(s.get<std::string>());
    }
    std::string initial = string_field(j, "initial");

    std::vector<std::array<int, 2>> delta(states.size(), {-1, -1});
    auto state_index = [&](const std::string& name) -> int {
        for (std::size_t i = 0; i < states.size(); ++i)
            if (states[i] == name) return static_cast<int>(i);
        fail("unknown_state", "state '" + name + "' not declared", name);
    };
    const json& dj = field(j, "delta");
    if (!dj.is_object()) fail("malformed_input", "'delta' must be an object");
    for (auto it = dj.begin(); it != dj.end(); ++it) {
        int from = state_index(it.key());
        if (!it.value().is_object())
            fail("malformed_input", "delta row for '" + it.key() + "' must be an object");
        for (auto bit_it = it.value().begin(); bit_it != it.value().end(); ++bit_it) {
            int bit;
            if (bit_it.key() == "0")
                bit = 0;
            else if (bit_it.key() == "1")
                bit = 1;
            else
                fail("malformed_input", "delta keys must be '0' or '1'");
            if (!bit_it.value().is_string())
                fail("malformed_input", "delta targets must be state names");
            delta[static_cast<std::size_t>(from)][bit] =
                state_index(bit_it.value().get<std::string>());
        }
    }
    return TreeAutomaton(std::move(states), initial, delta);
}

ojson automaton_to_json(const TreeAutomaton& a) {
    ojson out;
    std::vector<std::string> sorted = a.states();
    std::sort(sorted.begin(), sorted.end());
    out["states"] = sorted;
    out["initial"] = a.state_name(a.initial());

    ojson delta = ojson::object();
    for (const std::string& name : sorted) {
        int s = -1;
        for (std::size_t i = 0; i < a.states().size(); ++i)
            if (a.states()[i] == name) s = static_cast<int>(i);
        ojson row = ojson::object();
        if (int t = a.next(s, 0); t >= 0) row["0"] = a.state_name(t);
        if (int t = a.next(s, 1); t >= 0) row["1"] = a.state_name(t);
        if (!row.empty()) delta[name] = std::move(row);
    }
    out["delta"] = std::move(delta);
    return out;
}

ComponentSpec component_from_json(const json& j) {
    if (!j.is_object()) fail("malformed_input", "component document must be a JSON object");
    ComponentSpec spec{parse_automaton(field(j, "a0")), parse_automaton(field(j, "a1")),
                       static_cast<unsigned>(uint_field(j, "depth"))};
    return spec;
}

ojson fdecision_to_json(const FDecision& d) {
    ojson out;
    if (d.in_f) {
        out["kind"] = "in_f";
    } else {
        out["kind"] = "not_in_f";
        out["stem"] = d.witness->stem;
        out["cycle"] = d.witness->cycle;
    }
    return out;
}

ojson verdict_to_json(const Verdict& v) {
    ojson out;
    out["ok"] = v.ok;
    out["failures"] = v.failures;
    return out;
}

ojson solve_result_to_json(const SolveResult& r) {
    ojson out;
    if (r.sat) {
        out["result"] = "sat";
        out["coloring"] = coloring_to_json(r.coloring)["colors"];
    } else {
        out["result"] = "unsat";
    }
    return out;
}

ojson orders_to_json(const OrderSet& orders) {
    ojson out = ojson::object();
    for (const auto& [id, set] : orders) {
        std::vector<unsigned> sorted(set.begin(), set.end());
        out[id] = sorted;
    }
    return out;
}

std::string dump_json(const ojson& j) { return j.dump(2) + "\n"; }

}  // namespace lcl
