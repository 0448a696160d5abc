#include "lcl/regtree.hpp"

#include <algorithm>
#include <deque>
#include <tuple>

#include "lcl/errors.hpp"

namespace lcl {

TreeAutomaton::TreeAutomaton(std::vector<std::string> states, const std::string& initial,
                             const std::vector<std::array<int, 2>>& delta)
    : states_(std::move(states)), delta_(delta) {
    if (states_.empty()) fail("malformed_input", "automaton needs at least one state");
    {
        auto sorted = states_;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            fail("malformed_input", "duplicate state name");
    }
    if (delta_.size() != states_.size())
        fail("malformed_input", "delta table size does not match state count");
    initial_ = -1;
    for (std::size_t i = 0; i < states_.size(); ++i)
        if (states_[i] == initial) initial_ = static_cast<int>(i);
    if (initial_ < 0) fail("unknown_state", "initial state '" + initial + "' not declared", initial);
    for (const auto& row : delta_)
        for (int bit = 0; bit < 2; ++bit)
            if (row[bit] < -1 || row[bit] >= static_cast<int>(states_.size()))
                fail("unknown_state", "transition target out of range");
}

std::optional<int> TreeAutomaton::run(std::string_view bits) const {
    int state = initial_;
    for (char c : bits) {
        if (c != '0' && c != '1')
            fail("malformed_input", std::string("bit string contains '") + c + "'");
        state = next(state, c - '0');
        if (state < 0) return std::nullopt;
    }
    return state;
}

std::vector<int> TreeAutomaton::reachable_states() const {
    std::vector<std::uint8_t> seen(states_.size(), 0);
    std::vector<int> order;
    order.push_back(initial_);
    seen[static_cast<std::size_t>(initial_)] = 1;
    for (std::size_t head = 0; head < order.size(); ++head) {
        for (int bit = 0; bit < 2; ++bit) {
            int t = next(order[head], bit);
            if (t >= 0 && !seen[static_cast<std::size_t>(t)]) {
                seen[static_cast<std::size_t>(t)] = 1;
                order.push_back(t);
            }
        }
    }
    return order;
}

std::optional<std::string> validate_pruned(const TreeAutomaton& a) {
    for (int s : a.reachable_states())
        if (a.next(s, 0) < 0 && a.next(s, 1) < 0) return a.state_name(s);
    return std::nullopt;
}

namespace {

void require_pruned(const TreeAutomaton& a) {
    if (auto bad = validate_pruned(a))
        fail("not_pruned", "reachable state '" + *bad + "' has no outgoing transition", *bad);
}

}  // namespace

bool membership(const TreeAutomaton& a, std::string_view bits) {
    return a.run(bits).has_value();
}

StructuredGraph truncate(const TreeAutomaton& a, unsigned depth) {
    require_pruned(a);
    std::vector<VertexDecl> vertices;
    std::vector<EdgeDecl> edges;
    // BFS over member strings of length <= depth.
    std::deque<std::pair<std::string, int>> queue;
    queue.push_back({"", a.initial()});
    vertices.push_back({"", VertexKind::Tree, 0, true});
    while (!queue.empty()) {
        auto [s, state] = queue.front();
        queue.pop_front();
        if (s.size() == depth) continue;
        for (int bit = 0; bit < 2; ++bit) {
            int t = a.next(state, bit);
            if (t < 0) continue;
            std::string child = s + static_cast<char>('0' + bit);
            vertices.push_back({child, VertexKind::Tree, 0, false});
            edges.push_back({s, child, EdgeKind::ParentChild, s,
                             bit == 0 ? Side::Left : Side::Right});
            queue.push_back({child, t});
        }
    }
    return StructuredGraph::build(vertices, edges, true);
}

FDecision decide_F(const TreeAutomaton& a) {
    require_pruned(a);
    const auto n = static_cast<std::size_t>(a.state_count());

    // Shortest (then lexicographically least) stem to every reachable state.
    std::vector<std::optional<std::string>> stem(n);
    std::deque<int> queue;
    stem[static_cast<std::size_t>(a.initial())] = "";
    queue.push_back(a.initial());
    while (!queue.empty()) {
        int s = queue.front();
        queue.pop_front();
        for (int bit = 0; bit < 2; ++bit) {
            int t = a.next(s, bit);
            if (t < 0 || stem[static_cast<std::size_t>(t)]) continue;
            stem[static_cast<std::size_t>(t)] =
                *stem[static_cast<std::size_t>(s)] + static_cast<char>('0' + bit);
            queue.push_back(t);
        }
    }

    // Shortest (then lexicographically least) word cycling back to q with at
    // least one 1: BFS over (state, has-seen-1) pairs.
    auto min_cycle = [&](int q) -> std::optional<std::string> {
        std::vector<std::optional<std::string>> word(2 * n);
        std::deque<std::pair<int, int>> bfs; // (state, flag)
        word[static_cast<std::size_t>(q)] = "";
        bfs.push_back({q, 0});
        while (!bfs.empty()) {
            auto [s, flag] = bfs.front();
            bfs.pop_front();
            const std::string& w = *word[static_cast<std::size_t>(s) + n * flag];
            for (int bit = 0; bit < 2; ++bit) {
                int t = a.next(s, bit);
                if (t < 0) continue;
                int nflag = flag | bit;
                if (t == q && nflag == 1) return w + static_cast<char>('0' + bit);
                auto& slot = word[static_cast<std::size_t>(t) + n * nflag];
                if (slot) continue;
                slot = w + static_cast<char>('0' + bit);
                bfs.push_back({t, nflag});
            }
        }
        return std::nullopt;
    };

    std::optional<BranchWitness> best;
    auto better = [](const BranchWitness& x, const BranchWitness& y) {
        return std::make_tuple(x.stem.size(), x.cycle.size(), std::cref(x.stem),
                               std::cref(x.cycle)) <
               std::make_tuple(y.stem.size(), y.cycle.size(), std::cref(y.stem),
                               std::cref(y.cycle));
    };
    for (std::size_t q = 0; q < n; ++q) {
        if (!stem[q]) continue;
        auto cyc = min_cycle(static_cast<int>(q));
        if (!cyc) continue;
        BranchWitness w{*stem[q], *cyc};
        if (!best || better(w, *best)) best = std::move(w);
    }
    if (best) return FDecision{false, std::move(best)};
    return FDecision{true, std::nullopt};
}

std::string branch_prefix(const BranchWitness& w, std::size_t n) {
    if (w.cycle.empty()) fail("witness_invalid", "witness cycle is empty");
    std::string out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (i < w.stem.size())
            out += w.stem[i];
        else
            out += w.cycle[(i - w.stem.size()) % w.cycle.size()];
    }
    return out;
}

void validate_witness(const TreeAutomaton& a, const BranchWitness& w) {
    if (w.cycle.empty()) fail("witness_invalid", "witness cycle is empty");
    if (w.cycle.find('1') == std::string::npos)
        fail("witness_invalid", "witness cycle contains no 1");
    for (char c : w.stem + w.cycle)
        if (c != '0' && c != '1') fail("witness_invalid", "witness contains a non-bit character");

    auto state = a.run(w.stem);
    if (!state) fail("witness_invalid", "witness stem leaves the tree");
    // Follow cycle iterations until the boundary state repeats; every later
    // iteration then retraces a verified one.
    std::vector<std::uint8_t> seen(a.state_count(), 0);
    int s = *state;
    while (!seen[static_cast<std::size_t>(s)]) {
        seen[static_cast<std::size_t>(s)] = 1;
        for (char c : w.cycle) {
            s = a.next(s, c - '0');
            if (s < 0) fail("witness_invalid", "witness branch leaves the tree");
        }
    }
}

std::vector<TreeAutomaton> enumerate_automata(unsigned max_states) {
    if (max_states > 3) fail("corpus_too_large", "enumeration is limited to 3 states");

    std::vector<TreeAutomaton> out;
    for (unsigned n = 1; n <= max_states; ++n) {
        std::vector<std::string> names;
        for (unsigned i = 0; i < n; ++i) names.push_back("q" + std::to_string(i));

        // Every delta table: each of 2n slots is -1 (absent) or a state.
        std::vector<std::array<int, 2>> delta(n, {-1, -1});
        std::size_t slots = 2 * static_cast<std::size_t>(n);
        std::vector<int> choice(slots, -1);
        while (true) {
            for (std::size_t i = 0; i < slots; ++i) delta[i / 2][i % 2] = choice[i];

            bool pruned = true;
            for (unsigned s = 0; s < n && pruned; ++s)
                if (delta[s][0] < 0 && delta[s][1] < 0) pruned = false;

            if (pruned) {
                // Canonical representative of the renaming class: breadth-first
                // discovery from state 0 (bit 0 before bit 1) must enumerate
                // the states in order and reach all of them.
                std::vector<int> discovered;
                std::vector<std::uint8_t> seen(n, 0);
                discovered.push_back(0);
                seen[0] = 1;
                for (std::size_t head = 0; head < discovered.size(); ++head) {
                    for (int bit = 0; bit < 2; ++bit) {
                        int t = delta[static_cast<std::size_t>(discovered[head])][bit];
                        if (t >= 0 && !seen[static_cast<std::size_t>(t)]) {
                            seen[static_cast<std::size_t>(t)] = 1;
                            discovered.push_back(t);
                        }
                    }
                }
                bool canonical = discovered.size() == n;
                for (std::size_t i = 0; canonical && i < discovered.size(); ++i)
                    if (discovered[i] != static_cast<int>(i)) canonical = false;
                if (canonical) out.emplace_back(names, "q0", delta);
            }

            // Next table in odometer order over {-1, 0, .., n-1} per slot.
            bool rolled_over = true;
            for (std::size_t i = slots; i-- > 0;) {
                if (choice[i] + 1 < static_cast<int>(n)) {
                    ++choice[i];
                    rolled_over = false;
                    break;
                }
                choice[i] = -1;
            }
            if (rolled_over) break;
        }
    }
    return out;
}

}  // namespace lcl
