#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "lcl/graph.hpp"

namespace lcl {

// Finite presentation of a pruned set-theoretic binary tree: the tree is the
// prefix-closed language of the deterministic partial automaton. A missing
// (state, bit) transition means that child is absent.
class TreeAutomaton {
public:
    TreeAutomaton(std::vector<std::string> states, const std::string& initial,
                  const std::vector<std::array<int, 2>>& delta);

    std::size_t state_count() const { return states_.size(); }
    const std::vector<std::string>& states() const { return states_; }
    int initial() const { return initial_; }
    // -1 when the transition is absent.
    int next(int state, int bit) const { return delta_[static_cast<std::size_t>(state)][bit]; }
    const std::string& state_name(int s) const { return states_[static_cast<std::size_t>(s)]; }

    // Runs the automaton along a bit string; nullopt when some step is undefined.
    std::optional<int> run(std::string_view bits) const;

    std::vector<int> reachable_states() const;

private:
    std::vector<std::string> states_;
    int initial_ = 0;
    std::vector<std::array<int, 2>> delta_;
};

// Eventually periodic branch stem . cycle^omega.
struct BranchWitness {
    std::string stem;
    std::string cycle;

    bool operator==(const BranchWitness&) const = default;
};

struct FDecision {
    bool in_f = true;
    std::optional<BranchWitness> witness; // present exactly when !in_f

    bool operator==(const FDecision&) const = default;
};

// ok -> nullopt; otherwise the name of a reachable state with no outgoing
// transition (unreachable states are exempt).
std::optional<std::string> validate_pruned(const TreeAutomaton& a);

// True iff the delta-path along `bits` is defined from the initial state.
bool membership(const TreeAutomaton& a, std::string_view bits);

// Rooted structured tree of all members of length <= depth. Vertex ids are
// the bit strings themselves ("" for the root); bit 0 is a left child and
// bit 1 a right child. Requires a pruned automaton.
StructuredGraph truncate(const TreeAutomaton& a, unsigned depth);

// Decides membership of the presented tree in F (every branch has finitely
// many 1s). NotInF comes with the minimal lasso witness: shortest stem, then
// shortest cycle, ties broken lexicographically with 0 < 1; the cycle returns
// to the stem's end state and contains at least one 1.
FDecision decide_F(const TreeAutomaton& a);

// First n bits of stem . cycle^omega.
std::string branch_prefix(const BranchWitness& w, std::size_t n);

// Throws witness_invalid unless every prefix of the witness branch is a
// member of a's tree and the cycle is nonempty and contains a 1.
void validate_witness(const TreeAutomaton& a, const BranchWitness& w);

// All pruned automata with up to max_states reachable states (max 3),
// deduplicated up to state renaming, in a deterministic order.
std::vector<TreeAutomaton> enumerate_automata(unsigned max_states);

}  // namespace lcl
