#include "lcl/dot.hpp"

#include <sstream>

namespace lcl {

namespace {

std::string quoted(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace

std::string export_dot(const StructuredGraph& g, const Coloring* f) {
    std::ostringstream out;
    out << "graph lcl {\n";
    out << "  node [shape=circle, style=filled];\n";
    for (std::uint32_t v = 0; v < g.size(); ++v) {
        const std::string& id = g.id_of(v);
        std::string label = id;
        if (f) label += "\\n" + std::to_string(f->get(id));
        const char* fill = "lightgray";
        switch (g.kind(v)) {
        case VertexKind::Anchor: fill = "gold"; break;
        case VertexKind::Tree: fill = "lightblue"; break;
        case VertexKind::Plain: fill = "lightblue"; break;
        case VertexKind::Aux: fill = "gray25"; break;
        }
        out << "  " << quoted(id) << " [label=" << quoted(label) << ", fillcolor=" << fill;
        if (g.kind(v) == VertexKind::Aux) out << ", shape=point";
        out << "];\n";
    }
    for (const EdgeDecl& e : g.edge_decls()) {
        out << "  " << quoted(e.a) << " -- " << quoted(e.b);
        switch (e.kind) {
        case EdgeKind::AnchorRoot: out << " [label=\"anchor\"]"; break;
        case EdgeKind::ParentChild:
            out << " [label=\"" << (e.side == Side::Left ? "L" : "R") << "\"]";
            break;
        case EdgeKind::Unlabeled: break;
        }
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace lcl
