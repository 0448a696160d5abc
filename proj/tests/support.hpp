#pragma once

// Shared helpers for the unit and acceptance suites: a deterministic rng,
// random instance generators, and the independent brute-force oracles the
// library-side algorithms are checked against.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "lcl/gadget.hpp"
#include "lcl/graph.hpp"
#include "lcl/regtree.hpp"
#include "lcl/sigma_pi.hpp"

namespace testsupport {

// splitmix64: tiny, seedable, identical across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed = 0) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    // Uniform in [0, n).
    std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }
    bool chance(unsigned percent) { return below(100) < percent; }

private:
    std::uint64_t state_;
};

// Random rooted structured tree ball: a random tree shape on up to
// max_vertices vertices with random kinds, edge kinds and colors. Vertex 0 of
// the returned declarations is the intended root.
struct RandomBallSpec {
    std::vector<lcl::VertexDecl> vertices;
    std::vector<lcl::EdgeDecl> edges;
    std::string root;
    lcl::Coloring colors;
    unsigned radius = 0;
};

inline RandomBallSpec random_ball_spec(Rng& rng, std::size_t max_vertices,
                                       unsigned max_color = 4) {
    std::size_t n = 1 + rng.below(max_vertices);
    RandomBallSpec spec;
    std::vector<unsigned> depth(n, 0);
    std::vector<std::size_t> parent(n, 0);
    std::vector<std::size_t> degree(n, 0);
    std::vector<std::set<lcl::Side>> used_sides(n);

    auto id_of = [](std::size_t i) { return "v" + std::to_string(i); };
    for (std::size_t i = 0; i < n; ++i) {
        lcl::VertexDecl v;
        v.id = id_of(i);
        switch (rng.below(4)) {
        case 0: v.kind = lcl::VertexKind::Anchor; break;
        case 1:
            v.kind = lcl::VertexKind::Tree;
            v.tree_index = static_cast<int>(rng.below(2));
            v.is_root = rng.chance(30);
            break;
        case 2: v.kind = lcl::VertexKind::Plain; break;
        default: v.kind = lcl::VertexKind::Aux; break;
        }
        spec.vertices.push_back(v);
        if (lcl::Color c = static_cast<lcl::Color>(rng.below(max_color + 1)); c > 0)
            spec.colors.set(v.id, c);
    }
    for (std::size_t i = 1; i < n; ++i) {
        // Attach to a random earlier vertex with room (degree < 3).
        std::size_t p;
        do {
            p = rng.below(i);
        } while (degree[p] >= 3);
        parent[i] = p;
        depth[i] = depth[p] + 1;
        ++degree[p];
        ++degree[i];

        lcl::EdgeDecl e;
        e.a = id_of(p);
        e.b = id_of(i);
        switch (rng.below(4)) {
        case 0: e.kind = lcl::EdgeKind::AnchorRoot; break;
        case 1: e.kind = lcl::EdgeKind::Unlabeled; break;
        default: {
            e.kind = lcl::EdgeKind::ParentChild;
            bool down = rng.chance(75); // p is the parent
            e.parent = down ? e.a : e.b;
            std::size_t owner = down ? p : i;
            lcl::Side side = rng.chance(50) ? lcl::Side::Left : lcl::Side::Right;
            if (used_sides[owner].count(side)) side = side == lcl::Side::Left
                                                          ? lcl::Side::Right
                                                          : lcl::Side::Left;
            if (used_sides[owner].count(side)) {
                e.kind = lcl::EdgeKind::Unlabeled;
                e.parent.clear();
            } else {
                used_sides[owner].insert(side);
                e.side = side;
            }
            break;
        }
        }
        spec.edges.push_back(e);
    }
    spec.root = id_of(0);
    spec.radius = *std::max_element(depth.begin(), depth.end());
    return spec;
}

// Renames the vertices of a ball spec by a random permutation.
inline RandomBallSpec permuted(const RandomBallSpec& spec, Rng& rng) {
    std::size_t n = spec.vertices.size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);

    std::map<std::string, std::string> rename;
    for (std::size_t i = 0; i < n; ++i)
        rename[spec.vertices[i].id] = "w" + std::to_string(perm[i]);

    RandomBallSpec out = spec;
    for (auto& v : out.vertices) v.id = rename[v.id];
    for (auto& e : out.edges) {
        e.a = rename[e.a];
        e.b = rename[e.b];
        if (!e.parent.empty()) e.parent = rename[e.parent];
    }
    out.root = rename.at(spec.root);
    lcl::Coloring colors;
    for (const auto& [id, c] : spec.colors.colors) colors.set(rename.at(id), c);
    out.colors = colors;
    return out;
}

// Brute-force root-preserving isomorphism between two tree balls: recursive
// matching of children multisets, preserving kinds, colors and arc tags.
// Sentinel parent NONE marks the root call, where every arc is a child.
inline bool balls_isomorphic(const lcl::RootedBall& a, const lcl::RootedBall& b) {
    if (a.size() != b.size()) return false;
    constexpr std::uint32_t NONE = 0xffffffffu;

    auto node_label = [](const lcl::RootedBall& x, std::uint32_t v) {
        return std::make_tuple(x.kinds[v], x.tree_indices[v], x.root_flags[v], x.colors[v]);
    };

    std::function<bool(std::uint32_t, std::uint32_t, std::uint32_t, std::uint32_t)> match =
        [&](std::uint32_t v, std::uint32_t w, std::uint32_t pv, std::uint32_t pw) -> bool {
        if (node_label(a, v) != node_label(b, w)) return false;
        std::vector<lcl::Arc> ca, cb;
        for (const lcl::Arc& arc : a.adj[v])
            if (arc.to != pv) ca.push_back(arc);
        for (const lcl::Arc& arc : b.adj[w])
            if (arc.to != pw) cb.push_back(arc);
        if (ca.size() != cb.size()) return false;
        std::vector<bool> used(cb.size(), false);
        std::function<bool(std::size_t)> assign = [&](std::size_t i) -> bool {
            if (i == ca.size()) return true;
            for (std::size_t j = 0; j < cb.size(); ++j) {
                if (used[j] || ca[i].tag != cb[j].tag) continue;
                used[j] = true;
                if (match(ca[i].to, cb[j].to, v, w) && assign(i + 1)) return true;
                used[j] = false;
            }
            return false;
        };
        return assign(0);
    };
    return match(0, 0, NONE, NONE);
}

// Independent lasso search: enumerate all defined paths up to
// 2*|states|^2 steps and report whether some path revisits a state with a 1
// strictly inside the revisited stretch.
inline bool brute_force_not_in_f(const lcl::TreeAutomaton& a) {
    std::size_t limit = 2 * a.state_count() * a.state_count();
    struct Frame {
        int state;
        std::vector<int> states_seen;    // path states, including current
        std::vector<char> bits;
    };
    std::vector<Frame> stack;
    stack.push_back({a.initial(), {a.initial()}, {}});
    while (!stack.empty()) {
        Frame f = stack.back();
        stack.pop_back();
        for (std::size_t i = 0; i + 1 < f.states_seen.size(); ++i) {
            if (f.states_seen[i] != f.state) continue;
            for (std::size_t j = i; j < f.bits.size(); ++j)
                if (f.bits[j] == '1') return true;
        }
        if (f.bits.size() >= limit) continue;
        for (int bit = 0; bit < 2; ++bit) {
            int t = a.next(f.state, bit);
            if (t < 0) continue;
            Frame g = f;
            g.state = t;
            g.states_seen.push_back(t);
            g.bits.push_back(static_cast<char>('0' + bit));
            stack.push_back(std::move(g));
        }
    }
    return false;
}

inline const std::vector<lcl::TreeAutomaton>& corpus2() {
    static const std::vector<lcl::TreeAutomaton> c = lcl::enumerate_automata(2);
    return c;
}

inline lcl::TreeAutomaton full_binary_automaton() {
    return lcl::TreeAutomaton({"q"}, "q", {{{0, 0}}});
}

inline lcl::TreeAutomaton zero_only_automaton() {
    return lcl::TreeAutomaton({"q"}, "q", {{{0, -1}}});
}

}  // namespace testsupport
