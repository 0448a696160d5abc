#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace lcl {

using Color = std::uint32_t;

enum class VertexKind : std::uint8_t { Anchor, Tree, Plain, Aux };
enum class EdgeKind : std::uint8_t { AnchorRoot, ParentChild, Unlabeled };
enum class Side : std::uint8_t { Left, Right };

// Declarative vertex description used for construction and (de)serialization.
struct VertexDecl {
    std::string id;
    VertexKind kind = VertexKind::Plain;
    int tree_index = 0;   // only meaningful for VertexKind::Tree
    bool is_root = false; // only meaningful for VertexKind::Tree

    bool operator==(const VertexDecl&) const = default;
};

struct EdgeDecl {
    std::string a;
    std::string b;
    EdgeKind kind = EdgeKind::Unlabeled;
    std::string parent = {}; // for ParentChild: which endpoint is the parent
    Side side = Side::Left;

    bool operator==(const EdgeDecl&) const = default;
};

// How an incident edge looks from one endpoint. ChildLeft means the arc
// target is this vertex's left child; ParentLeft means the target is this
// vertex's parent and this vertex is its left child.
enum class ArcTag : std::uint8_t {
    AnchorRoot,
    Unlabeled,
    ChildLeft,
    ChildRight,
    ParentLeft,
    ParentRight,
};

ArcTag mirror(ArcTag tag);
bool is_child_arc(ArcTag tag);
bool is_parent_arc(ArcTag tag);

struct Arc {
    std::uint32_t to;
    ArcTag tag;

    bool operator==(const Arc&) const = default;
};

// Finite undirected graph with vertex kinds and edge kinds. In structured
// mode (the default) the graph must be acyclic with maximum degree 3; plain
// mode relaxes both so that arbitrary candidate inputs (e.g. for the gadget
// decoder) can still be represented.
class StructuredGraph {
public:
    static StructuredGraph build(const std::vector<VertexDecl>& vertices,
                                 const std::vector<EdgeDecl>& edges,
                                 bool structured = true);

    std::size_t size() const { return ids_.size(); }
    bool structured() const { return structured_; }

    const std::vector<std::string>& ids() const { return ids_; }
    const std::string& id_of(std::uint32_t index) const { return ids_[index]; }
    std::uint32_t index_of(const std::string& id) const; // throws unknown_vertex
    bool contains(const std::string& id) const { return index_.count(id) > 0; }

    VertexKind kind(std::uint32_t v) const { return kinds_[v]; }
    int tree_index(std::uint32_t v) const { return tree_indices_[v]; }
    bool is_root(std::uint32_t v) const { return root_flags_[v] != 0; }
    VertexDecl vertex_decl(std::uint32_t v) const;

    std::span<const Arc> arcs(std::uint32_t v) const { return adj_[v]; }
    std::size_t degree(std::uint32_t v) const { return adj_[v].size(); }

    // Canonical edge list: endpoints ordered lexicographically, edges sorted.
    std::vector<EdgeDecl> edge_decls() const;
    std::vector<VertexDecl> vertex_decls() const;

    bool operator==(const StructuredGraph& other) const;

private:
    std::vector<std::string> ids_; // sorted lexicographically
    std::unordered_map<std::string, std::uint32_t> index_;
    std::vector<VertexKind> kinds_;
    std::vector<int> tree_indices_;
    std::vector<std::uint8_t> root_flags_;
    std::vector<std::vector<Arc>> adj_; // arcs sorted by target index
    bool structured_ = true;
};

// Total coloring; ids absent from the map have color 0.
struct Coloring {
    std::map<std::string, Color> colors;

    Color get(const std::string& id) const {
        auto it = colors.find(id);
        return it == colors.end() ? 0 : it->second;
    }
    void set(const std::string& id, Color c) {
        if (c == 0)
            colors.erase(id);
        else
            colors[id] = c;
    }

    bool operator==(const Coloring&) const = default;
};

// Induced colored subgraph of all vertices within the radius around a root,
// stored index-based for cheap predicate evaluation. Vertex 0 is the root and
// the order is breadth-first with neighbors visited in lexicographic id order.
struct RootedBall {
    unsigned radius = 0;
    std::vector<std::string> ids;
    std::vector<VertexKind> kinds;
    std::vector<int> tree_indices;
    std::vector<std::uint8_t> root_flags;
    std::vector<Color> colors;
    std::vector<std::vector<Arc>> adj;
    std::vector<unsigned> depth; // distance from the ball root

    std::size_t size() const { return ids.size(); }
    std::size_t degree(std::uint32_t v) const { return adj[v].size(); }

    bool has_parent(std::uint32_t v) const;
    std::optional<std::uint32_t> child(std::uint32_t v, Side side) const;
};

RootedBall ball(const StructuredGraph& g, const Coloring& f, const std::string& root,
                unsigned radius);

// Canonical isomorphism type of a rooted colored ball. Two balls get equal
// encodings exactly when a root-, kind-, side- and color-preserving
// isomorphism exists between them. The encoding is a self-describing byte
// string: "r<radius>;" followed by the recursive node form
// "(<kind-tag>:<color>{<arc-tag><child>...})" with children sorted bytewise.
struct BallType {
    std::string encoding;
    unsigned radius = 0;

    bool operator==(const BallType&) const = default;
    auto operator<=>(const BallType&) const = default;
};

BallType canonical_type(const RootedBall& b); // throws not_a_tree on cyclic balls

// Rebuilds a canonical representative ball (synthetic vertex ids) from an
// encoding produced by canonical_type.
RootedBall decode_ball_type(const BallType& type);

}  // namespace lcl
