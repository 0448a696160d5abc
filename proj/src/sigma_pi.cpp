#include "lcl/sigma_pi.hpp"

#include <algorithm>

#include "lcl/errors.hpp"

namespace lcl {

namespace {

// S2/S3 at the ball root; shared by sigma and pi.
bool child_rules(const RootedBall& b) {
    Color c = b.colors[0];
    if (c == 1) {
        auto right = b.child(0, Side::Right);
        return right && b.colors[*right] >= 1;
    }
    if (c >= 2) {
        auto left = b.child(0, Side::Left);
        return left && b.colors[*left] == c - 1;
    }
    return true;
}

bool root_rule(const RootedBall& b) {
    return b.has_parent(0) || b.colors[0] >= 1;
}

bool anchor_rule(const RootedBall& b) {
    std::size_t positive = 0;
    for (const Arc& a : b.adj[0])
        if (b.colors[a.to] >= 1) ++positive;
    return positive == 1;
}

}  // namespace

LocalProblem sigma_problem() {
    LocalProblem p;
    p.name = "sigma";
    p.radius = 1;
    p.predicate = [](const RootedBall& b) { return root_rule(b) && child_rules(b); };
    p.frontier = [](const RootedBall& b) { return root_rule(b); };
    return p;
}

LocalProblem pi_problem() {
    LocalProblem p;
    p.name = "pi";
    p.radius = 1;
    p.predicate = [](const RootedBall& b) {
        if (b.kinds[0] == VertexKind::Anchor) return anchor_rule(b);
        return child_rules(b);
    };
    p.frontier = [](const RootedBall& b) {
        if (b.kinds[0] == VertexKind::Anchor) return anchor_rule(b);
        return true;
    };
    return p;
}

unsigned k_of(const BranchWitness& w, std::size_t position) {
    if (w.cycle.empty()) fail("witness_invalid", "witness cycle is empty");
    auto bit = [&](std::size_t i) {
        return i < w.stem.size() ? w.stem[i] : w.cycle[(i - w.stem.size()) % w.cycle.size()];
    };
    // A 1 must show up within the remaining stem plus one full cycle.
    std::size_t window =
        (position < w.stem.size() ? w.stem.size() - position : 0) + w.cycle.size();
    for (std::size_t j = 0; j < window; ++j)
        if (bit(position + j) == '1') return static_cast<unsigned>(j);
    fail("no_subsequent_one", "branch has no 1 after position " + std::to_string(position));
}

Coloring sigma_coloring_from_branch(const TreeAutomaton& a, const BranchWitness& w,
                                    unsigned depth) {
    validate_witness(a, w);
    Coloring f;
    std::string prefix = branch_prefix(w, depth);
    for (unsigned j = 0; j <= depth; ++j)
        f.set(prefix.substr(0, j), k_of(w, j) + 1);
    return f;
}

std::string extract_branch(const StructuredGraph& truncation, const Coloring& f) {
    // The root is the unique parentless vertex.
    std::optional<std::uint32_t> root;
    for (std::uint32_t v = 0; v < truncation.size(); ++v) {
        bool parented = false;
        for (const Arc& a : truncation.arcs(v))
            if (is_parent_arc(a.tag)) parented = true;
        if (!parented) {
            if (root) fail("malformed_input", "graph has more than one root");
            root = v;
        }
    }
    if (!root) fail("malformed_input", "graph has no root");

    if (f.get(truncation.id_of(*root)) < 1)
        fail("root_not_positive", "root color is 0; no branch to extract",
             truncation.id_of(*root));

    std::string bits;
    std::uint32_t v = *root;
    while (true) {
        Color c = f.get(truncation.id_of(v));
        Side want = c == 1 ? Side::Right : Side::Left;
        std::optional<std::uint32_t> fav;
        bool has_any_child = false;
        for (const Arc& a : truncation.arcs(v)) {
            if (!is_child_arc(a.tag)) continue;
            has_any_child = true;
            if (a.tag == (want == Side::Right ? ArcTag::ChildRight : ArcTag::ChildLeft))
                fav = a.to;
        }
        if (!fav) {
            if (has_any_child)
                fail("stuck_interior",
                     "vertex '" + truncation.id_of(v) + "' (color " + std::to_string(c) +
                         ") lacks its favorite child",
                     truncation.id_of(v));
            return bits; // reached the truncation frontier
        }
        bits += want == Side::Right ? '1' : '0';
        v = *fav;
    }
}

StructuredGraph build_component(const ComponentSpec& spec) {
    std::vector<VertexDecl> vertices;
    std::vector<EdgeDecl> edges;
    vertices.push_back({"anchor", VertexKind::Anchor, 0, false});
    for (int i = 0; i < 2; ++i) {
        const TreeAutomaton& a = i == 0 ? spec.a0 : spec.a1;
        std::string prefix = "t" + std::to_string(i) + "/";
        StructuredGraph tree = truncate(a, spec.depth);
        for (const auto& v : tree.vertex_decls())
            vertices.push_back({prefix + v.id, VertexKind::Tree, i, v.is_root});
        for (const auto& e : tree.edge_decls())
            edges.push_back({prefix + e.a, prefix + e.b, e.kind, prefix + e.parent, e.side});
        edges.push_back({"anchor", prefix, EdgeKind::AnchorRoot});
    }
    return StructuredGraph::build(vertices, edges, true);
}

bool component_colorable(const TreeAutomaton& a0, const TreeAutomaton& a1) {
    return !decide_F(a0).in_f || !decide_F(a1).in_f;
}

Coloring pi_coloring_for_component(const ComponentSpec& spec) {
    for (int i = 0; i < 2; ++i) {
        const TreeAutomaton& a = i == 0 ? spec.a0 : spec.a1;
        FDecision d = decide_F(a);
        if (d.in_f) continue;
        Coloring on_tree = sigma_coloring_from_branch(a, *d.witness, spec.depth);
        Coloring f;
        std::string prefix = "t" + std::to_string(i) + "/";
        for (const auto& [id, color] : on_tree.colors) f.set(prefix + id, color);
        return f;
    }
    fail("not_colorable", "both trees are in F; the component has no Pi-coloring");
}

std::set<std::string> lenient_checked_set(const StructuredGraph& g) {
    std::set<std::string> checked;
    for (std::uint32_t v = 0; v < g.size(); ++v) {
        if (g.kind(v) == VertexKind::Anchor) {
            checked.insert(g.id_of(v));
            continue;
        }
        for (const Arc& a : g.arcs(v))
            if (is_child_arc(a.tag)) {
                checked.insert(g.id_of(v));
                break;
            }
    }
    return checked;
}

}  // namespace lcl
