#include "lcl/graph.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <set>

#include "lcl/errors.hpp"

namespace lcl {

ArcTag mirror(ArcTag tag) {
    switch (tag) {
    case ArcTag::ChildLeft: return ArcTag::ParentLeft;
    case ArcTag::ChildRight: return ArcTag::ParentRight;
    case ArcTag::ParentLeft: return ArcTag::ChildLeft;
    case ArcTag::ParentRight: return ArcTag::ChildRight;
    default: return tag;
    }
}

bool is_child_arc(ArcTag tag) {
    return tag == ArcTag::ChildLeft || tag == ArcTag::ChildRight;
}

bool is_parent_arc(ArcTag tag) {
    return tag == ArcTag::ParentLeft || tag == ArcTag::ParentRight;
}

StructuredGraph StructuredGraph::build(const std::vector<VertexDecl>& vertices,
                                       const std::vector<EdgeDecl>& edges, bool structured) {
    StructuredGraph g;
    g.structured_ = structured;

    g.ids_.reserve(vertices.size());
    for (const auto& v : vertices) g.ids_.push_back(v.id);
    std::sort(g.ids_.begin(), g.ids_.end());
    for (std::size_t i = 1; i < g.ids_.size(); ++i) {
        if (g.ids_[i] == g.ids_[i - 1])
            fail("duplicate_vertex", "vertex id declared twice: '" + g.ids_[i] + "'", g.ids_[i]);
    }
    for (std::uint32_t i = 0; i < g.ids_.size(); ++i) g.index_.emplace(g.ids_[i], i);

    g.kinds_.assign(g.ids_.size(), VertexKind::Plain);
    g.tree_indices_.assign(g.ids_.size(), 0);
    g.root_flags_.assign(g.ids_.size(), 0);
    for (const auto& v : vertices) {
        std::uint32_t i = g.index_.at(v.id);
        g.kinds_[i] = v.kind;
        if (v.kind == VertexKind::Tree) {
            if (v.tree_index != 0 && v.tree_index != 1)
                fail("malformed_input", "tree_index must be 0 or 1 for vertex '" + v.id + "'",
                     v.id);
            g.tree_indices_[i] = v.tree_index;
            g.root_flags_[i] = v.is_root ? 1 : 0;
        }
    }

    g.adj_.assign(g.ids_.size(), {});
    std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
    for (const auto& e : edges) {
        auto ita = g.index_.find(e.a);
        auto itb = g.index_.find(e.b);
        if (ita == g.index_.end())
            fail("unknown_endpoint", "edge endpoint '" + e.a + "' is not a declared vertex", e.a);
        if (itb == g.index_.end())
            fail("unknown_endpoint", "edge endpoint '" + e.b + "' is not a declared vertex", e.b);
        std::uint32_t a = ita->second, b = itb->second;
        if (a == b) fail("self_loop", "self-loop at vertex '" + e.a + "'", e.a);
        auto key = std::minmax(a, b);
        if (!seen.insert({key.first, key.second}).second)
            fail("duplicate_edge", "parallel edge between '" + e.a + "' and '" + e.b + "'", e.a);

        ArcTag from_a = ArcTag::Unlabeled;
        if (e.kind == EdgeKind::AnchorRoot) {
            from_a = ArcTag::AnchorRoot;
        } else if (e.kind == EdgeKind::ParentChild) {
            bool parent_is_a;
            if (e.parent == e.a)
                parent_is_a = true;
            else if (e.parent == e.b)
                parent_is_a = false;
            else
                fail("malformed_input",
                     "parent '" + e.parent + "' is not an endpoint of edge " + e.a + "-" + e.b,
                     e.parent);
            ArcTag child_tag = e.side == Side::Left ? ArcTag::ChildLeft : ArcTag::ChildRight;
            from_a = parent_is_a ? child_tag : mirror(child_tag);
        }
        g.adj_[a].push_back({b, from_a});
        g.adj_[b].push_back({a, mirror(from_a)});
    }
    for (auto& arcs : g.adj_)
        std::sort(arcs.begin(), arcs.end(),
                  [](const Arc& x, const Arc& y) { return x.to < y.to; });

    // No vertex may have two children on the same side.
    for (std::uint32_t v = 0; v < g.size(); ++v) {
        int left = 0, right = 0;
        for (const Arc& a : g.adj_[v]) {
            if (a.tag == ArcTag::ChildLeft) ++left;
            if (a.tag == ArcTag::ChildRight) ++right;
        }
        if (left > 1 || right > 1)
            fail("duplicate_side", "vertex '" + g.ids_[v] + "' has two children on one side",
                 g.ids_[v]);
    }

    if (structured) {
        for (std::uint32_t v = 0; v < g.size(); ++v)
            if (g.adj_[v].size() > 3)
                fail("degree_exceeded",
                     "vertex '" + g.ids_[v] + "' has degree " + std::to_string(g.adj_[v].size()) +
                         " (max 3 in structured mode)",
                     g.ids_[v]);
        // Acyclicity via BFS forest.
        std::vector<std::uint8_t> visited(g.size(), 0);
        for (std::uint32_t s = 0; s < g.size(); ++s) {
            if (visited[s]) continue;
            std::deque<std::pair<std::uint32_t, std::uint32_t>> queue; // (vertex, bfs parent)
            queue.push_back({s, s});
            visited[s] = 1;
            while (!queue.empty()) {
                auto [v, from] = queue.front();
                queue.pop_front();
                for (const Arc& a : g.adj_[v]) {
                    if (a.to == from) continue; // parallel edges already rejected
                    if (visited[a.to])
                        fail("cycle_detected", "cycle through vertex '" + g.ids_[a.to] + "'",
                             g.ids_[a.to]);
                    visited[a.to] = 1;
                    queue.push_back({a.to, v});
                }
            }
        }
    }
    return g;
}

std::uint32_t StructuredGraph::index_of(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) fail("unknown_vertex", "unknown vertex '" + id + "'", id);
    return it->second;
}

VertexDecl StructuredGraph::vertex_decl(std::uint32_t v) const {
    VertexDecl d;
    d.id = ids_[v];
    d.kind = kinds_[v];
    if (d.kind == VertexKind::Tree) {
        d.tree_index = tree_indices_[v];
        d.is_root = root_flags_[v] != 0;
    }
    return d;
}

std::vector<VertexDecl> StructuredGraph::vertex_decls() const {
    std::vector<VertexDecl> out;
    out.reserve(size());
    for (std::uint32_t v = 0; v < size(); ++v) out.push_back(vertex_decl(v));
    return out;
}

std::vector<EdgeDecl> StructuredGraph::edge_decls() const {
    std::vector<EdgeDecl> out;
    for (std::uint32_t v = 0; v < size(); ++v) {
        for (const Arc& a : adj_[v]) {
            if (a.to < v) continue;
            EdgeDecl e;
            e.a = ids_[v];
            e.b = ids_[a.to];
            switch (a.tag) {
            case ArcTag::AnchorRoot: e.kind = EdgeKind::AnchorRoot; break;
            case ArcTag::Unlabeled: e.kind = EdgeKind::Unlabeled; break;
            case ArcTag::ChildLeft:
                e.kind = EdgeKind::ParentChild;
                e.parent = e.a;
                e.side = Side::Left;
                break;
            case ArcTag::ChildRight:
                e.kind = EdgeKind::ParentChild;
                e.parent = e.a;
                e.side = Side::Right;
                break;
            case ArcTag::ParentLeft:
                e.kind = EdgeKind::ParentChild;
                e.parent = e.b;
                e.side = Side::Left;
                break;
            case ArcTag::ParentRight:
                e.kind = EdgeKind::ParentChild;
                e.parent = e.b;
                e.side = Side::Right;
                break;
            }
            out.push_back(std::move(e));
        }
    }
    // ids_ is sorted, so iterating by index already yields (a, b)-sorted edges.
    return out;
}

bool StructuredGraph::operator==(const StructuredGraph& other) const {
    return structured_ == other.structured_ && ids_ == other.ids_ && kinds_ == other.kinds_ &&
           tree_indices_ == other.tree_indices_ && root_flags_ == other.root_flags_ &&
           adj_ == other.adj_;
}

bool RootedBall::has_parent(std::uint32_t v) const {
    for (const Arc& a : adj[v])
        if (is_parent_arc(a.tag)) return true;
    return false;
}

std::optional<std::uint32_t> RootedBall::child(std::uint32_t v, Side side) const {
    ArcTag want = side == Side::Left ? ArcTag::ChildLeft : ArcTag::ChildRight;
    for (const Arc& a : adj[v])
        if (a.tag == want) return a.to;
    return std::nullopt;
}

RootedBall ball(const StructuredGraph& g, const Coloring& f, const std::string& root,
                unsigned radius) {
    std::uint32_t r = g.index_of(root);

    std::vector<std::uint32_t> order;
    std::unordered_map<std::uint32_t, std::uint32_t> local; // graph index -> ball index
    std::vector<unsigned> dist;
    order.push_back(r);
    local.emplace(r, 0);
    dist.push_back(0);
    for (std::size_t head = 0; head < order.size(); ++head) {
        std::uint32_t v = order[head];
        if (dist[head] == radius) continue;
        for (const Arc& a : g.arcs(v)) {
            if (local.count(a.to)) continue;
            local.emplace(a.to, static_cast<std::uint32_t>(order.size()));
            order.push_back(a.to);
            dist.push_back(dist[head] + 1);
        }
    }

    RootedBall b;
    b.radius = radius;
    b.depth = std::move(dist);
    b.ids.reserve(order.size());
    b.adj.resize(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        std::uint32_t v = order[i];
        b.ids.push_back(g.id_of(v));
        b.kinds.push_back(g.kind(v));
        b.tree_indices.push_back(g.tree_index(v));
        b.root_flags.push_back(g.is_root(v) ? 1 : 0);
        b.colors.push_back(f.get(g.id_of(v)));
        for (const Arc& a : g.arcs(v)) {
            auto it = local.find(a.to);
            if (it != local.end()) b.adj[i].push_back({it->second, a.tag});
        }
        std::sort(b.adj[i].begin(), b.adj[i].end(),
                  [](const Arc& x, const Arc& y) { return x.to < y.to; });
    }
    return b;
}

namespace {

const char* arc_tag_token(ArcTag tag) {
    switch (tag) {
    case ArcTag::AnchorRoot: return "ar";
    case ArcTag::Unlabeled: return "un";
    case ArcTag::ChildLeft: return "cl";
    case ArcTag::ChildRight: return "cr";
    case ArcTag::ParentLeft: return "pl";
    case ArcTag::ParentRight: return "pr";
    }
    return "??";
}

void append_kind_token(std::string& out, VertexKind kind, int tree_index, bool is_root) {
    switch (kind) {
    case VertexKind::Anchor: out += 'A'; return;
    case VertexKind::Plain: out += 'P'; return;
    case VertexKind::Aux: out += 'X'; return;
    case VertexKind::Tree:
        out += 'T';
        out += tree_index == 0 ? '0' : '1';
        out += is_root ? 'R' : 'N';
        return;
    }
}

std::string encode_node(const RootedBall& b, std::uint32_t v, std::uint32_t from) {
    std::string out = "(";
    append_kind_token(out, b.kinds[v], b.tree_indices[v], b.root_flags[v] != 0);
    out += ':';
    out += std::to_string(b.colors[v]);
    out += '{';
    std::vector<std::string> children;
    for (const Arc& a : b.adj[v]) {
        if (a.to == from) continue;
        children.push_back(arc_tag_token(a.tag) + encode_node(b, a.to, v));
    }
    std::sort(children.begin(), children.end());
    for (const auto& c : children) out += c;
    out += "})";
    return out;
}

}  // namespace

BallType canonical_type(const RootedBall& b) {
    std::size_t arc_count = 0;
    for (const auto& arcs : b.adj) arc_count += arcs.size();
    if (b.size() > 0 && arc_count != 2 * (b.size() - 1))
        fail("not_a_tree", "ball is not a tree (contains a cycle)");
    if (b.size() == 0) fail("not_a_tree", "empty ball");
    return BallType{"r" + std::to_string(b.radius) + ";" + encode_node(b, 0, 0), b.radius};
}

namespace {

struct TypeParser {
    const std::string& s;
    std::size_t pos = 0;
    RootedBall& out;

    char peek() const {
        if (pos >= s.size()) fail("malformed_input", "truncated ball type encoding");
        return s[pos];
    }
    char take() {
        char c = peek();
        ++pos;
        return c;
    }
    void expect(char c) {
        if (take() != c) fail("malformed_input", "bad ball type encoding near byte " +
                                                     std::to_string(pos));
    }

    unsigned number() {
        std::size_t start = pos;
        while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
        if (pos == start) fail("malformed_input", "expected number in ball type encoding");
        unsigned value = 0;
        std::from_chars(s.data() + start, s.data() + pos, value);
        return value;
    }

    ArcTag arc_tag() {
        char a = take(), b = take();
        if (a == 'a' && b == 'r') return ArcTag::AnchorRoot;
        if (a == 'u' && b == 'n') return ArcTag::Unlabeled;
        if (a == 'c' && b == 'l') return ArcTag::ChildLeft;
        if (a == 'c' && b == 'r') return ArcTag::ChildRight;
        if (a == 'p' && b == 'l') return ArcTag::ParentLeft;
        if (a == 'p' && b == 'r') return ArcTag::ParentRight;
        fail("malformed_input", "unknown arc tag in ball type encoding");
    }

    std::uint32_t node(unsigned depth) {
        expect('(');
        VertexKind kind;
        int tree_index = 0;
        bool root_flag = false;
        switch (take()) {
        case 'A': kind = VertexKind::Anchor; break;
        case 'P': kind = VertexKind::Plain; break;
        case 'X': kind = VertexKind::Aux; break;
        case 'T': {
            kind = VertexKind::Tree;
            tree_index = take() == '1' ? 1 : 0;
            root_flag = take() == 'R';
            break;
        }
        default: fail("malformed_input", "unknown kind tag in ball type encoding");
        }
        expect(':');
        Color color = number();
        expect('{');

        auto v = static_cast<std::uint32_t>(out.ids.size());
        out.ids.push_back("n" + std::to_string(v));
        out.kinds.push_back(kind);
        out.tree_indices.push_back(tree_index);
        out.root_flags.push_back(root_flag ? 1 : 0);
        out.colors.push_back(color);
        out.adj.emplace_back();
        out.depth.push_back(depth);

        while (peek() != '}') {
            ArcTag tag = arc_tag();
            std::uint32_t child = node(depth + 1);
            out.adj[v].push_back({child, tag});
            out.adj[child].push_back({v, mirror(tag)});
        }
        expect('}');
        expect(')');
        return v;
    }
};

}  // namespace

RootedBall decode_ball_type(const BallType& type) {
    RootedBall b;
    TypeParser p{type.encoding, 0, b};
    p.expect('r');
    b.radius = p.number();
    p.expect(';');
    p.node(0);
    if (p.pos != type.encoding.size())
        fail("malformed_input", "trailing bytes in ball type encoding");
    return b;
}

}  // namespace lcl
