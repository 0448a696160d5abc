#include "lcl/problem.hpp"

#include "lcl/errors.hpp"

namespace lcl {

Verdict verify(const StructuredGraph& g, const Coloring& f, const LocalProblem& problem,
               const CheckMode& mode) {
    for (const auto& [id, color] : f.colors) {
        (void)color;
        if (!g.contains(id))
            fail("coloring_not_total",
                 "coloring mentions vertex '" + id + "' that is not in the graph", id);
    }
    if (mode.kind == CheckKind::Lenient) {
        for (const auto& id : mode.checked)
            if (!g.contains(id))
                fail("unknown_vertex", "checked set mentions unknown vertex '" + id + "'", id);
    }

    Verdict verdict;
    for (std::uint32_t v = 0; v < g.size(); ++v) {
        const std::string& id = g.id_of(v);
        RootedBall b = ball(g, f, id, problem.radius);
        bool full = mode.kind == CheckKind::Strict || mode.checked.count(id) > 0;
        bool ok = full ? problem.eval(b) : problem.eval_frontier(b);
        if (!ok) verdict.failures.push_back(id);
    }
    verdict.ok = verdict.failures.empty();
    return verdict; // ids_ sorted, so failures already lexicographic
}

LocalProblem proper_coloring_problem() {
    LocalProblem p;
    p.name = "proper";
    p.radius = 1;
    p.predicate = [](const RootedBall& b) {
        for (const Arc& a : b.adj[0])
            if (b.colors[a.to] == b.colors[0]) return false;
        return true;
    };
    return p;
}

LocalProblem problem_from_pass_table(std::string name, unsigned radius,
                                     std::set<std::string> passing_encodings) {
    LocalProblem p;
    p.name = std::move(name);
    p.radius = radius;
    p.predicate = [table = std::move(passing_encodings)](const RootedBall& b) {
        return table.count(canonical_type(b).encoding) > 0;
    };
    return p;
}

}  // namespace lcl
