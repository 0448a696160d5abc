#include <doctest.h>

#include <array>
#include <thread>

#include "lcl/errors.hpp"
#include "lcl/graph.hpp"

#include "../support.hpp"

using namespace lcl;
using testsupport::Rng;

namespace {

StructuredGraph path3() {
    return StructuredGraph::build(
        {{"a", VertexKind::Plain}, {"b", VertexKind::Plain}, {"c", VertexKind::Plain}},
        {{"a", "b", EdgeKind::Unlabeled}, {"b", "c", EdgeKind::Unlabeled}});
}

std::string code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return "";
}

}  // namespace

TEST_CASE("build_structured_graph: minimal anchor-root pair") {
    StructuredGraph g = StructuredGraph::build(
        {{"x", VertexKind::Anchor}, {"y", VertexKind::Tree, 0, true}},
        {{"x", "y", EdgeKind::AnchorRoot}});
    CHECK(g.size() == 2);
    CHECK(g.kind(g.index_of("x")) == VertexKind::Anchor);
    CHECK(g.is_root(g.index_of("y")));
    CHECK(g.arcs(g.index_of("x"))[0].tag == ArcTag::AnchorRoot);
}

TEST_CASE("build_structured_graph: degenerate inputs") {
    CHECK(code_of([] {
              StructuredGraph::build({{"x"}, {"x"}}, {});
          }) == "duplicate_vertex");
    CHECK(code_of([] {
              StructuredGraph::build({{"x"}}, {{"x", "x", EdgeKind::Unlabeled}});
          }) == "self_loop");
    CHECK(code_of([] {
              StructuredGraph::build({{"x"}}, {{"x", "y", EdgeKind::Unlabeled}});
          }) == "unknown_endpoint");
    CHECK(code_of([] {
              StructuredGraph::build({{"x"}, {"y"}},
                                     {{"x", "y", EdgeKind::Unlabeled},
                                      {"y", "x", EdgeKind::Unlabeled}});
          }) == "duplicate_edge");
    CHECK(code_of([] {
              StructuredGraph::build({{"x"}, {"y"}},
                                     {{"x", "y", EdgeKind::ParentChild, "z", Side::Left}});
          }) == "malformed_input");
}

TEST_CASE("build_structured_graph: a 4-regular vertex exceeds max degree 3") {
    std::vector<VertexDecl> vs{{"c"}, {"n1"}, {"n2"}, {"n3"}, {"n4"}};
    std::vector<EdgeDecl> es;
    for (int i = 1; i <= 4; ++i) es.push_back({"c", "n" + std::to_string(i)});
    CHECK(code_of([&] { StructuredGraph::build(vs, es); }) == "degree_exceeded");
    CHECK_NOTHROW(StructuredGraph::build(vs, es, false)); // plain mode allows it
}

TEST_CASE("build_structured_graph: cycles rejected in structured mode only") {
    std::vector<VertexDecl> vs{{"a"}, {"b"}, {"c"}};
    std::vector<EdgeDecl> es{{"a", "b"}, {"b", "c"}, {"a", "c"}};
    CHECK(code_of([&] { StructuredGraph::build(vs, es); }) == "cycle_detected");
    StructuredGraph plain = StructuredGraph::build(vs, es, false);
    CHECK(plain.size() == 3);
    CHECK_FALSE(plain.structured());
}

TEST_CASE("build_structured_graph: two children on one side") {
    CHECK(code_of([] {
              StructuredGraph::build({{"p"}, {"c1"}, {"c2"}},
                                     {{"p", "c1", EdgeKind::ParentChild, "p", Side::Left},
                                      {"p", "c2", EdgeKind::ParentChild, "p", Side::Left}});
          }) == "duplicate_side");
}

TEST_CASE("ball: radius zero and breadth cut-off") {
    StructuredGraph g = path3();
    Coloring f;
    f.set("b", 2);

    RootedBall b0 = ball(g, f, "b", 0);
    CHECK(b0.size() == 1);
    CHECK(b0.ids[0] == "b");
    CHECK(b0.colors[0] == 2);

    RootedBall b1 = ball(g, f, "b", 1);
    CHECK(b1.size() == 3);

    RootedBall ba = ball(g, f, "a", 1);
    CHECK(ba.size() == 2);
    CHECK(ba.ids == std::vector<std::string>{"a", "b"});

    CHECK_THROWS_AS((void)ball(g, f, "zzz", 1), Error);
}

TEST_CASE("ball: vertex set equals brute-force BFS distances") {
    Rng rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        auto spec = testsupport::random_ball_spec(rng, 12);
        StructuredGraph g = StructuredGraph::build(spec.vertices, spec.edges, false);
        unsigned r = static_cast<unsigned>(rng.below(4));
        RootedBall b = ball(g, spec.colors, spec.root, r);

        // Brute-force distances.
        std::map<std::string, unsigned> dist;
        dist[spec.root] = 0;
        std::vector<std::string> frontier{spec.root};
        unsigned d = 0;
        while (!frontier.empty()) {
            std::vector<std::string> next;
            for (const auto& id : frontier)
                for (const Arc& a : g.arcs(g.index_of(id))) {
                    const std::string& nid = g.id_of(a.to);
                    if (!dist.count(nid)) {
                        dist[nid] = d + 1;
                        next.push_back(nid);
                    }
                }
            frontier = std::move(next);
            ++d;
        }
        std::set<std::string> expected;
        for (const auto& [id, dd] : dist)
            if (dd <= r) expected.insert(id);
        std::set<std::string> actual(b.ids.begin(), b.ids.end());
        CHECK(actual == expected);
    }
}

TEST_CASE("canonical_type: single-vertex identity and relabeling") {
    StructuredGraph g1 = StructuredGraph::build({{"x", VertexKind::Plain}}, {});
    StructuredGraph g2 = StructuredGraph::build({{"renamed", VertexKind::Plain}}, {});
    Coloring f;
    CHECK(canonical_type(ball(g1, f, "x", 0)) == canonical_type(ball(g2, f, "renamed", 0)));

    StructuredGraph g3 = StructuredGraph::build({{"x", VertexKind::Anchor}}, {});
    CHECK(canonical_type(ball(g1, f, "x", 0)) != canonical_type(ball(g3, f, "x", 0)));
}

TEST_CASE("canonical_type: path rooted at end vs middle") {
    StructuredGraph g = path3();
    Coloring zero;
    CHECK(canonical_type(ball(g, zero, "a", 1)) != canonical_type(ball(g, zero, "b", 1)));
}

TEST_CASE("canonical_type: radius is part of the type") {
    StructuredGraph g = StructuredGraph::build({{"x", VertexKind::Plain}}, {});
    Coloring zero;
    BallType t0 = canonical_type(ball(g, zero, "x", 0));
    BallType t1 = canonical_type(ball(g, zero, "x", 1));
    CHECK(t0 != t1); // same one-vertex subgraph, different radius
    CHECK(t1.radius == 1);
}

TEST_CASE("canonical_type: cyclic ball rejected") {
    StructuredGraph tri = StructuredGraph::build({{"a"}, {"b"}, {"c"}},
                                                 {{"a", "b"}, {"b", "c"}, {"a", "c"}}, false);
    Coloring zero;
    CHECK_THROWS_AS((void)canonical_type(ball(tri, zero, "a", 2)), Error);
}

TEST_CASE("canonical_type: invariant under random relabelings") {
    Rng rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        auto spec = testsupport::random_ball_spec(rng, 10);
        auto renamed = testsupport::permuted(spec, rng);
        StructuredGraph g1 = StructuredGraph::build(spec.vertices, spec.edges);
        StructuredGraph g2 = StructuredGraph::build(renamed.vertices, renamed.edges);
        BallType t1 = canonical_type(ball(g1, spec.colors, spec.root, spec.radius));
        BallType t2 = canonical_type(ball(g2, renamed.colors, renamed.root, renamed.radius));
        CHECK(t1 == t2);
    }
}

TEST_CASE("canonical_type: agrees with brute-force isomorphism") {
    Rng rng(13);
    for (int trial = 0; trial < 60; ++trial) {
        auto s1 = testsupport::random_ball_spec(rng, 7, 2);
        auto s2 = testsupport::random_ball_spec(rng, 7, 2);
        StructuredGraph g1 = StructuredGraph::build(s1.vertices, s1.edges);
        StructuredGraph g2 = StructuredGraph::build(s2.vertices, s2.edges);
        unsigned r = std::max(s1.radius, s2.radius);
        RootedBall b1 = ball(g1, s1.colors, s1.root, r);
        RootedBall b2 = ball(g2, s2.colors, s2.root, r);
        bool same_type = canonical_type(b1).encoding == canonical_type(b2).encoding;
        CHECK(same_type == testsupport::balls_isomorphic(b1, b2));
    }
}

TEST_CASE("shared graphs are safe to read concurrently") {
    Rng rng(19);
    auto spec = testsupport::random_ball_spec(rng, 12);
    const StructuredGraph g = StructuredGraph::build(spec.vertices, spec.edges);
    const Coloring f = spec.colors;
    const BallType expected = canonical_type(ball(g, f, spec.root, spec.radius));

    std::vector<std::thread> workers;
    std::array<bool, 4> agreed{};
    for (std::size_t t = 0; t < agreed.size(); ++t)
        workers.emplace_back([&, t] {
            bool ok = true;
            for (int i = 0; i < 200; ++i)
                ok = ok && canonical_type(ball(g, f, spec.root, spec.radius)) == expected;
            agreed[t] = ok;
        });
    for (auto& w : workers) w.join();
    for (bool ok : agreed) CHECK(ok);
}

TEST_CASE("decode_ball_type: rejects malformed encodings") {
    for (const char* bad : {"", "r1;", "r1;(A:0{)", "r1;(Z:0{})", "r1;(A:0{})junk"}) {
        CHECK_THROWS_AS((void)decode_ball_type(BallType{bad, 1}), Error);
    }
}

TEST_CASE("decode_ball_type: round-trips the canonical form") {
    Rng rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        auto spec = testsupport::random_ball_spec(rng, 9);
        StructuredGraph g = StructuredGraph::build(spec.vertices, spec.edges);
        BallType t = canonical_type(ball(g, spec.colors, spec.root, spec.radius));
        RootedBall rebuilt = decode_ball_type(t);
        CHECK(canonical_type(rebuilt) == t);
    }
}
