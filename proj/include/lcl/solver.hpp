#pragma once

#include <cstdint>

#include "lcl/graph.hpp"
#include "lcl/problem.hpp"

namespace lcl {

struct SolveResult {
    bool sat = false;
    Coloring coloring; // a witness when sat

    bool operator==(const SolveResult&) const = default;
};

// Exact search for a coloring V(g) -> {0, .., k-1} passing the problem under
// the given mode. Backtracking over vertices in lexicographic id order with
// ascending colors; after each assignment every applicable vertex whose full
// ball is colored is tested, and vertices whose partially colored ball admits
// no passing completion prune the branch early (this never changes the
// answer or the witness, only skips doomed subtrees). UNSAT is certified by
// exhaustion.
SolveResult solve_finite_palette(const StructuredGraph& g, const LocalProblem& problem,
                                 unsigned k, const CheckMode& mode);

// Ground truth by plain enumeration of all k^|V| colorings. Refuses instances
// with k^|V| above the cap.
SolveResult exhaustive_oracle(const StructuredGraph& g, const LocalProblem& problem, unsigned k,
                              const CheckMode& mode, std::uint64_t cap = 10'000'000);

}  // namespace lcl
