#include "lcl/gadget.hpp"

#include <algorithm>
#include <deque>
#include <optional>

#include "lcl/errors.hpp"

namespace lcl {

namespace {

unsigned pendant_length(EdgeKind kind, Side side) {
    if (kind == EdgeKind::AnchorRoot) return 3;
    return side == Side::Left ? 4 : 5;
}

}  // namespace

StructuredGraph encode(const StructuredGraph& g) {
    if (!g.structured())
        fail("not_structured", "encode requires a structured-mode graph");
    for (std::uint32_t v = 0; v < g.size(); ++v) {
        if (g.kind(v) == VertexKind::Aux)
            fail("not_structured", "vertex '" + g.id_of(v) + "' is already auxiliary",
                 g.id_of(v));
        if (g.kind(v) == VertexKind::Anchor)
            for (const Arc& a : g.arcs(v))
                if (a.tag != ArcTag::AnchorRoot)
                    fail("not_structured",
                         "anchor '" + g.id_of(v) + "' has a non anchor-root edge", g.id_of(v));
    }

    std::vector<VertexDecl> vertices;
    std::vector<EdgeDecl> edges;
    for (std::uint32_t v = 0; v < g.size(); ++v)
        vertices.push_back({g.id_of(v), VertexKind::Plain, 0, false});

    for (const EdgeDecl& e : g.edge_decls()) {
        std::string head, tail; // head gets the kind-encoding pendant
        unsigned pendant;
        if (e.kind == EdgeKind::AnchorRoot) {
            bool a_anchor = g.kind(g.index_of(e.a)) == VertexKind::Anchor;
            bool b_anchor = g.kind(g.index_of(e.b)) == VertexKind::Anchor;
            if (a_anchor == b_anchor)
                fail("not_structured",
                     "anchor-root edge " + e.a + "-" + e.b + " needs exactly one anchor endpoint",
                     e.a);
            head = a_anchor ? e.a : e.b;
            tail = a_anchor ? e.b : e.a;
            pendant = 3;
        } else if (e.kind == EdgeKind::ParentChild) {
            head = e.parent;
            tail = e.parent == e.a ? e.b : e.a;
            pendant = pendant_length(e.kind, e.side);
        } else {
            fail("not_structured", "unlabeled edge " + e.a + "-" + e.b + " cannot be encoded",
                 e.a);
        }

        std::string host = std::min(e.a, e.b) + "~" + std::max(e.a, e.b);
        auto aux = [&](const std::string& tag) { return host + "#" + tag; };
        auto add_vertex = [&](const std::string& id) {
            vertices.push_back({id, VertexKind::Aux, 0, false});
        };
        auto add_edge = [&](const std::string& a, const std::string& b) {
            edges.push_back({a, b, EdgeKind::Unlabeled});
        };

        for (int i = 1; i <= 4; ++i) add_vertex(aux("m" + std::to_string(i)));
        add_edge(head, aux("m1"));
        add_edge(aux("m1"), aux("m2"));
        add_edge(aux("m2"), aux("m3"));
        add_edge(aux("m3"), aux("m4"));
        add_edge(aux("m4"), tail);
        for (unsigned i = 1; i <= pendant; ++i) add_vertex(aux("a" + std::to_string(i)));
        add_edge(aux("m1"), aux("a1"));
        for (unsigned i = 1; i < pendant; ++i)
            add_edge(aux("a" + std::to_string(i)), aux("a" + std::to_string(i + 1)));
        add_vertex(aux("b1"));
        add_vertex(aux("b2"));
        add_edge(aux("m4"), aux("b1"));
        add_edge(aux("b1"), aux("b2"));
    }
    return StructuredGraph::build(vertices, edges, true);
}

namespace {

// Forced walk used by order computation and gadget recovery: starting with
// the edge from -> first, keep going while the current vertex has degree 2.
// Returns the visited path (first included); ok is false when the walk runs
// into a cycle.
struct Walk {
    std::vector<std::uint32_t> path;
    bool ok = true;
};

template <typename G>
std::size_t degree_of(const G& g, std::uint32_t v) {
    if constexpr (requires { g.degree(v); })
        return g.degree(v);
    else
        return g.adj[v].size();
}

template <typename G>
Walk forced_walk(const G& g, std::uint32_t from, std::uint32_t first) {
    Walk w;
    std::set<std::uint32_t> visited{from, first};
    std::uint32_t prev = from, cur = first;
    w.path.push_back(first);
    while (degree_of(g, cur) == 2) {
        std::uint32_t next = cur;
        if constexpr (requires { g.arcs(cur); }) {
            for (const Arc& a : g.arcs(cur))
                if (a.to != prev) next = a.to;
        } else {
            for (const Arc& a : g.adj[cur])
                if (a.to != prev) next = a.to;
        }
        if (visited.count(next)) {
            w.ok = false;
            return w;
        }
        visited.insert(next);
        w.path.push_back(next);
        prev = cur;
        cur = next;
    }
    return w;
}

}  // namespace

OrderSet vertex_orders(const StructuredGraph& g) {
    OrderSet orders;
    for (std::uint32_t v = 0; v < g.size(); ++v) {
        auto& set = orders[g.id_of(v)];
        for (const Arc& a : g.arcs(v)) {
            Walk w = forced_walk(g, v, a.to);
            if (w.ok && g.degree(w.path.back()) == 1)
                set.insert(static_cast<unsigned>(w.path.size()));
        }
    }
    return orders;
}

namespace {

struct RecoveredGadget {
    std::uint32_t head = 0;       // anchor or parent end
    std::uint32_t tail = 0;       // root or child end
    unsigned pendant = 0;         // 3 = anchor-root, 4 = left, 5 = right
    std::vector<std::uint32_t> aux; // sorted auxiliary vertices of the gadget
};

[[noreturn]] void not_in_image(const StructuredGraph& g, std::uint32_t v,
                               const std::string& why) {
    fail("not_in_image", "not an encode image: " + why + " (at vertex '" + g.id_of(v) + "')",
         g.id_of(v));
}

}  // namespace

StructuredGraph decode(const StructuredGraph& gstar) {
    const auto n = static_cast<std::uint32_t>(gstar.size());
    if (n == 0) return StructuredGraph::build({}, {}, true);

    std::vector<std::uint8_t> original(n, 1);
    for (std::uint32_t v = 0; v < n; ++v)
        for (const Arc& a : gstar.arcs(v))
            if (gstar.degree(a.to) != 3) {
                original[v] = 0;
                break;
            }
    bool any_original = std::find(original.begin(), original.end(), 1) != original.end();
    if (!any_original) not_in_image(gstar, 0, "no original vertices found");

    // Discover one gadget per incident edge of every original vertex.
    std::map<std::pair<std::uint32_t, std::uint32_t>, RecoveredGadget> gadgets;
    for (std::uint32_t x = 0; x < n; ++x) {
        if (!original[x]) continue;
        for (const Arc& xarc : gstar.arcs(x)) {
            std::uint32_t u = xarc.to;
            if (original[u]) not_in_image(gstar, u, "two originals are directly adjacent");
            if (gstar.degree(u) != 3) not_in_image(gstar, u, "gadget head must have degree 3");

            std::vector<Walk> branches;
            for (const Arc& a : gstar.arcs(u))
                if (a.to != x) branches.push_back(forced_walk(gstar, u, a.to));
            if (branches.size() != 2 || !branches[0].ok || !branches[1].ok)
                not_in_image(gstar, u, "malformed gadget head");

            auto is_pendant = [&](const Walk& w) {
                return gstar.degree(w.path.back()) == 1 && w.path.size() >= 2 &&
                       w.path.size() <= 5;
            };
            auto is_main = [&](const Walk& w) {
                return gstar.degree(w.path.back()) == 3 && w.path.size() == 3;
            };
            const Walk* pend = nullptr;
            const Walk* main_walk = nullptr;
            if (is_pendant(branches[0]) && is_main(branches[1])) {
                pend = &branches[0];
                main_walk = &branches[1];
            } else if (is_pendant(branches[1]) && is_main(branches[0])) {
                pend = &branches[1];
                main_walk = &branches[0];
            } else {
                not_in_image(gstar, u, "gadget head needs one pendant and one length-3 path");
            }

            std::uint32_t z = main_walk->path.back();
            std::uint32_t w_mid = main_walk->path[1];
            std::optional<std::uint32_t> y;
            std::optional<Walk> zpend;
            for (const Arc& a : gstar.arcs(z)) {
                if (a.to == w_mid) continue;
                if (original[a.to]) {
                    if (y) not_in_image(gstar, z, "far gadget head touches two originals");
                    y = a.to;
                } else {
                    Walk zw = forced_walk(gstar, z, a.to);
                    if (!zw.ok || !is_pendant(zw))
                        not_in_image(gstar, z, "far gadget head has a malformed pendant");
                    if (zpend) not_in_image(gstar, z, "far gadget head has two pendants");
                    zpend = std::move(zw);
                }
            }
            if (!y || !zpend) not_in_image(gstar, z, "far gadget head is incomplete");

            unsigned lu = static_cast<unsigned>(pend->path.size());
            unsigned lz = static_cast<unsigned>(zpend->path.size());
            RecoveredGadget gadget;
            if (lu >= 3 && lz == 2) {
                gadget.head = x;
                gadget.tail = *y;
                gadget.pendant = lu;
            } else if (lu == 2 && lz >= 3) {
                gadget.head = *y;
                gadget.tail = x;
                gadget.pendant = lz;
            } else {
                not_in_image(gstar, u, "pendant lengths " + std::to_string(lu) + "/" +
                                           std::to_string(lz) + " match no gadget");
            }
            gadget.aux.push_back(u);
            for (std::uint32_t p : pend->path) gadget.aux.push_back(p);
            for (std::uint32_t p : main_walk->path) gadget.aux.push_back(p);
            for (std::uint32_t p : zpend->path) gadget.aux.push_back(p);
            std::sort(gadget.aux.begin(), gadget.aux.end());

            auto key = std::minmax(x, *y);
            auto [it, inserted] = gadgets.emplace(key, gadget);
            if (!inserted && !(it->second.head == gadget.head &&
                               it->second.pendant == gadget.pendant &&
                               it->second.aux == gadget.aux))
                not_in_image(gstar, u, "inconsistent recovery from the two gadget ends");
        }
    }

    // Every auxiliary vertex must belong to exactly one gadget, and every
    // edge must be accounted for.
    std::vector<int> owner(n, -1);
    std::size_t edge_budget = 0;
    int gadget_index = 0;
    for (const auto& [key, gadget] : gadgets) {
        (void)key;
        for (std::uint32_t v : gadget.aux) {
            if (original[v]) not_in_image(gstar, v, "original vertex inside a gadget");
            if (owner[v] >= 0 && owner[v] != gadget_index)
                not_in_image(gstar, v, "auxiliary vertex shared between gadgets");
            owner[v] = gadget_index;
        }
        edge_budget += 5 + (gadget.aux.size() - 4); // main path edges + pendant edges
        ++gadget_index;
    }
    for (std::uint32_t v = 0; v < n; ++v)
        if (!original[v] && owner[v] < 0)
            not_in_image(gstar, v, "auxiliary vertex not covered by any gadget");
    std::size_t edge_total = 0;
    for (std::uint32_t v = 0; v < n; ++v) edge_total += gstar.degree(v);
    if (edge_total / 2 != edge_budget)
        not_in_image(gstar, 0, "edge count does not match the recovered gadgets");

    // Assemble the recovered structured graph.
    std::vector<std::uint8_t> anchor(n, 0), is_child(n, 0);
    std::vector<int> parent_of(n, -1);
    for (const auto& [key, gadget] : gadgets) {
        (void)key;
        if (gadget.pendant == 3) {
            anchor[gadget.head] = 1;
        } else {
            is_child[gadget.tail] = 1;
            if (parent_of[gadget.tail] < 0 ||
                gstar.id_of(static_cast<std::uint32_t>(parent_of[gadget.tail])) >
                    gstar.id_of(gadget.head))
                parent_of[gadget.tail] = static_cast<int>(gadget.head);
        }
    }

    // Tree indices: walk up to the top of the parent chain; if the top hangs
    // off an anchor, the index is the rank of the top among that anchor's
    // root neighbors in id order.
    std::map<std::uint32_t, std::vector<std::uint32_t>> anchor_roots;
    for (const auto& [key, gadget] : gadgets) {
        (void)key;
        if (gadget.pendant == 3) anchor_roots[gadget.head].push_back(gadget.tail);
    }
    for (auto& [a, roots] : anchor_roots) {
        (void)a;
        std::sort(roots.begin(), roots.end(), [&](std::uint32_t p, std::uint32_t q) {
            return gstar.id_of(p) < gstar.id_of(q);
        });
    }
    std::map<std::uint32_t, std::pair<std::uint32_t, int>> root_anchor; // root -> (anchor, rank)
    for (const auto& [a, roots] : anchor_roots)
        for (std::size_t i = 0; i < roots.size(); ++i) {
            auto it = root_anchor.find(roots[i]);
            std::pair<std::uint32_t, int> entry{a, static_cast<int>(std::min<std::size_t>(i, 1))};
            if (it == root_anchor.end() || gstar.id_of(a) < gstar.id_of(it->second.first))
                root_anchor[roots[i]] = entry;
        }
    auto tree_index_of = [&](std::uint32_t v) {
        std::uint32_t top = v;
        while (parent_of[top] >= 0) top = static_cast<std::uint32_t>(parent_of[top]);
        auto it = root_anchor.find(top);
        return it == root_anchor.end() ? 0 : it->second.second;
    };

    std::vector<VertexDecl> vertices;
    std::vector<EdgeDecl> edges;
    for (std::uint32_t v = 0; v < n; ++v) {
        if (!original[v]) continue;
        VertexDecl d;
        d.id = gstar.id_of(v);
        if (anchor[v]) {
            d.kind = VertexKind::Anchor;
        } else if (gstar.degree(v) == 0) {
            d.kind = VertexKind::Plain;
        } else {
            d.kind = VertexKind::Tree;
            d.tree_index = tree_index_of(v);
            d.is_root = is_child[v] == 0;
        }
        vertices.push_back(std::move(d));
    }
    for (const auto& [key, gadget] : gadgets) {
        (void)key;
        EdgeDecl e;
        e.a = gstar.id_of(gadget.head);
        e.b = gstar.id_of(gadget.tail);
        if (gadget.pendant == 3) {
            e.kind = EdgeKind::AnchorRoot;
        } else {
            e.kind = EdgeKind::ParentChild;
            e.parent = e.a;
            e.side = gadget.pendant == 4 ? Side::Left : Side::Right;
        }
        edges.push_back(std::move(e));
    }
    try {
        return StructuredGraph::build(vertices, edges, true);
    } catch (const Error& e) {
        fail("not_in_image", "recovered graph is not structured: " + std::string(e.what()),
             e.subject());
    }
}

namespace {

// One gadget seen from an original ball root standing at the head (anchor or
// parent) side: the pendant length at the adjacent head and the far original.
struct HeadGadget {
    unsigned pendant = 0;
    std::uint32_t y = 0;
};

// Reads all head-side gadgets around the ball root. Gadgets where the root
// stands at the tail side carry no information for the lifted rules and are
// skipped after their cheap length-2 pendant fingerprint. Returns nullopt
// when the neighborhood does not look like an encode image.
//
// With radius 7 every consulted vertex sits at depth <= 6, where in-ball
// degrees equal true degrees, so the far head's 2-pendant can never be
// confused with a degree-2 neighbor (whose forced walk ends on a degree-3
// head instead of a degree-1 tip).
std::optional<std::vector<HeadGadget>> scan_gadgets(const RootedBall& b) {
    std::vector<HeadGadget> out;
    for (const Arc& root_arc : b.adj[0]) {
        std::uint32_t u = root_arc.to;
        if (b.degree(u) != 3) return std::nullopt;
        std::vector<Walk> branches;
        for (const Arc& a : b.adj[u])
            if (a.to != 0) branches.push_back(forced_walk(b, u, a.to));
        if (branches.size() != 2 || !branches[0].ok || !branches[1].ok) return std::nullopt;

        auto is_pendant = [&](const Walk& w) {
            return b.degree(w.path.back()) == 1 && w.path.size() >= 2 && w.path.size() <= 5;
        };
        auto is_main = [&](const Walk& w) {
            return b.degree(w.path.back()) == 3 && w.path.size() == 3;
        };
        const Walk* pend = nullptr;
        const Walk* main_walk = nullptr;
        if (is_pendant(branches[0]) && is_main(branches[1])) {
            pend = &branches[0];
            main_walk = &branches[1];
        } else if (is_pendant(branches[1]) && is_main(branches[0])) {
            pend = &branches[1];
            main_walk = &branches[0];
        } else {
            return std::nullopt;
        }
        unsigned lu = static_cast<unsigned>(pend->path.size());
        if (lu == 2) continue; // root stands at the tail side of this gadget

        std::uint32_t z = main_walk->path.back();
        std::uint32_t w_mid = main_walk->path[1];
        std::optional<std::uint32_t> y;
        bool zpend_seen = false;
        for (const Arc& a : b.adj[z]) {
            if (a.to == w_mid) continue;
            Walk zw = forced_walk(b, z, a.to);
            if (!zw.ok) return std::nullopt;
            bool pendant_shape = b.degree(zw.path.back()) == 1 && zw.path.size() == 2;
            if (pendant_shape && !zpend_seen) {
                zpend_seen = true;
            } else if (!y) {
                y = a.to;
            } else {
                return std::nullopt;
            }
        }
        if (!y || !zpend_seen) return std::nullopt;
        out.push_back({lu, *y});
    }
    return out;
}

bool eval_pi_star(const RootedBall& b, bool frontier_only) {
    // Auxiliary vertices pass unconditionally.
    for (const Arc& a : b.adj[0])
        if (b.degree(a.to) != 3) return true;

    auto gadgets = scan_gadgets(b);
    if (!gadgets) return false;

    bool is_anchor = false;
    for (const HeadGadget& g : *gadgets)
        if (g.pendant == 3) is_anchor = true;

    if (is_anchor) {
        std::size_t positive = 0;
        for (const HeadGadget& g : *gadgets)
            if (b.colors[g.y] >= 1) ++positive;
        return positive == 1;
    }
    if (frontier_only) return true;

    Color c = b.colors[0];
    if (c == 1) {
        for (const HeadGadget& g : *gadgets)
            if (g.pendant == 5 && b.colors[g.y] >= 1) return true;
        return false;
    }
    if (c >= 2) {
        for (const HeadGadget& g : *gadgets)
            if (g.pendant == 4 && b.colors[g.y] == c - 1) return true;
        return false;
    }
    return true;
}

}  // namespace

LocalProblem lift_problem() {
    LocalProblem p;
    p.name = "pi-star";
    // Radius 7, not 6: neighbor colors sit at distance 5 and gadget pendant
    // tips at distance 6, but certifying that a distance-6 vertex is a
    // pendant tip (degree 1) rather than the head of a further gadget
    // (degree 3) needs its incident edges, which reach distance 7. At radius
    // 6 the two cases produce isomorphic balls, so no predicate of the ball
    // type can separate them.
    p.radius = 7;
    p.predicate = [](const RootedBall& b) { return eval_pi_star(b, false); };
    p.frontier = [](const RootedBall& b) { return eval_pi_star(b, true); };
    // The rules only read the root color and the far originals of head-side
    // gadgets; declaring that lets the solver treat the radius-7 ball like a
    // radius-1 one.
    p.support = [](const RootedBall& b) {
        std::vector<std::uint32_t> slots{0};
        for (const Arc& a : b.adj[0])
            if (b.degree(a.to) != 3) return slots; // auxiliary root reads nothing
        if (auto gadgets = scan_gadgets(b))
            for (const HeadGadget& g : *gadgets) slots.push_back(g.y);
        return slots;
    };
    return p;
}

}  // namespace lcl
