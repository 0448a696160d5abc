#pragma once

#include <functional>
#include <set>
#include <string>
#include <vector>

#include "lcl/graph.hpp"

namespace lcl {

using BallPredicate = std::function<bool(const RootedBall&)>;

// A local coloring problem: a radius plus a pass/fail rule on ball types.
// Predicates are supplied as code over the ball's canonical structure; they
// must be isomorphism-invariant (pass(type) below evaluates the predicate on
// the canonical representative of a type, so the two routes always agree).
//
// `frontier` is the part of the rule that stays meaningful at vertices whose
// child slots are not fully visible in a finite truncation (root/anchor
// rules). Lenient verification applies `predicate` at checked vertices and
// `frontier` everywhere else; an empty frontier passes unconditionally.
//
// `support`, when set, returns the ball positions whose colors the rule may
// read (a superset is fine, the root is always included); both predicates
// must be constant in every other color. The solver uses it to check and
// tabulate large-radius rules over a handful of cells instead of the whole
// ball. Unset means the whole ball is read.
struct LocalProblem {
    std::string name;
    unsigned radius = 1;
    BallPredicate predicate;
    BallPredicate frontier;
    std::function<std::vector<std::uint32_t>(const RootedBall&)> support;

    bool eval(const RootedBall& b) const { return predicate(b); }
    bool eval_frontier(const RootedBall& b) const { return frontier ? frontier(b) : true; }

    bool pass(const BallType& type) const { return predicate(decode_ball_type(type)); }
    bool pass_frontier(const BallType& type) const {
        return frontier ? frontier(decode_ball_type(type)) : true;
    }
};

struct Verdict {
    bool ok = true;
    std::vector<std::string> failures; // sorted vertex ids
};

enum class CheckKind { Strict, Lenient };

struct CheckMode {
    CheckKind kind = CheckKind::Strict;
    std::set<std::string> checked; // only used for Lenient

    static CheckMode strict() { return {}; }
    static CheckMode lenient(std::set<std::string> checked) {
        return {CheckKind::Lenient, std::move(checked)};
    }
};

// Evaluates the problem at every vertex (Strict) or at the checked set with
// the frontier rule elsewhere (Lenient). Failures are reported in
// lexicographic id order.
Verdict verify(const StructuredGraph& g, const Coloring& f, const LocalProblem& problem,
               const CheckMode& mode);

// Radius-1 problem: no two adjacent vertices share a color.
LocalProblem proper_coloring_problem();

// Extensional problem form: passes exactly the listed canonical encodings.
LocalProblem problem_from_pass_table(std::string name, unsigned radius,
                                     std::set<std::string> passing_encodings);

}  // namespace lcl
