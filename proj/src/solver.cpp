#include "lcl/solver.hpp"

#include <algorithm>

#include "lcl/errors.hpp"

namespace lcl {

namespace {

constexpr std::uint64_t kTableLimit = 4096;

std::uint64_t pow_capped(std::uint64_t base, std::uint64_t exp, std::uint64_t cap) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (r > cap / std::max<std::uint64_t>(base, 1)) return cap + 1;
        r *= base;
        if (r > cap) return cap + 1;
    }
    return r;
}

// One vertex whose rule gets evaluated, with its cached ball structure.
// `slots[i]` is a ball position the rule may read and `members[i]` the graph
// position it maps to; colors at the slots are rewritten before each
// evaluation (everything else stays 0, which is sound because the rule is
// constant there by the support contract). When small enough, the rule is
// tabulated over all k^|slots| color tuples (index: sum colors[i] * k^i).
struct CheckUnit {
    RootedBall ball;
    std::vector<std::uint32_t> slots;
    std::vector<std::uint32_t> members;
    std::uint32_t trigger = 0; // largest member position
    bool frontier_rule = false;
    std::vector<std::uint8_t> table;

    bool eval_live(const LocalProblem& problem, const std::vector<Color>& assignment) {
        for (std::size_t i = 0; i < members.size(); ++i)
            ball.colors[slots[i]] = assignment[members[i]];
        return frontier_rule ? problem.eval_frontier(ball) : problem.eval(ball);
    }

    bool eval_complete(const LocalProblem& problem, const std::vector<Color>& assignment,
                       unsigned k) {
        if (table.empty()) return eval_live(problem, assignment);
        std::uint64_t idx = 0, mult = 1;
        for (std::size_t i = 0; i < members.size(); ++i) {
            idx += assignment[members[i]] * mult;
            mult *= k;
        }
        return table[idx] != 0;
    }

    // True iff some completion of the members above `assigned_up_to` passes.
    // Only called when a table exists.
    bool some_completion_passes(const std::vector<Color>& assignment, unsigned k,
                                std::uint32_t assigned_up_to) {
        std::uint64_t base = 0;
        std::vector<std::uint64_t> free_mults;
        std::uint64_t mult = 1;
        for (std::size_t i = 0; i < members.size(); ++i) {
            if (members[i] <= assigned_up_to)
                base += assignment[members[i]] * mult;
            else
                free_mults.push_back(mult);
            mult *= k;
        }
        std::vector<unsigned> digits(free_mults.size(), 0);
        while (true) {
            std::uint64_t idx = base;
            for (std::size_t i = 0; i < digits.size(); ++i) idx += digits[i] * free_mults[i];
            if (table[idx]) return true;
            std::size_t i = digits.size();
            while (i-- > 0) {
                if (++digits[i] < k) break;
                digits[i] = 0;
                if (i == 0) return false;
            }
            if (digits.empty()) return false;
        }
    }
};

struct Instance {
    std::vector<CheckUnit> units;
    std::vector<std::vector<std::uint32_t>> units_by_member; // per graph position
};

Instance build_instance(const StructuredGraph& g, const LocalProblem& problem, unsigned k,
                        const CheckMode& mode, bool tabulate) {
    if (k < 1) fail("malformed_input", "palette size must be at least 1");
    if (mode.kind == CheckKind::Lenient)
        for (const auto& id : mode.checked)
            if (!g.contains(id))
                fail("unknown_vertex", "checked set mentions unknown vertex '" + id + "'", id);

    Instance inst;
    inst.units_by_member.resize(g.size());
    Coloring zero;
    for (std::uint32_t v = 0; v < g.size(); ++v) {
        const std::string& id = g.id_of(v);
        bool full = mode.kind == CheckKind::Strict || mode.checked.count(id) > 0;
        if (!full && !problem.frontier) continue;

        CheckUnit unit;
        unit.ball = ball(g, zero, id, problem.radius);
        unit.frontier_rule = !full;
        if (problem.support) {
            unit.slots = problem.support(unit.ball);
            std::sort(unit.slots.begin(), unit.slots.end());
            unit.slots.erase(std::unique(unit.slots.begin(), unit.slots.end()),
                             unit.slots.end());
            if (unit.slots.empty() || unit.slots.front() != 0)
                unit.slots.insert(unit.slots.begin(), 0);
        } else {
            unit.slots.resize(unit.ball.size());
            for (std::uint32_t i = 0; i < unit.ball.size(); ++i) unit.slots[i] = i;
        }
        unit.members.reserve(unit.slots.size());
        for (std::uint32_t slot : unit.slots)
            unit.members.push_back(g.index_of(unit.ball.ids[slot]));
        unit.trigger = *std::max_element(unit.members.begin(), unit.members.end());

        if (tabulate) {
            std::uint64_t combos = pow_capped(k, unit.members.size(), kTableLimit);
            if (combos <= kTableLimit) {
                unit.table.resize(combos, 0);
                std::fill(unit.ball.colors.begin(), unit.ball.colors.end(), 0);
                for (std::uint64_t idx = 0; idx < combos; ++idx) {
                    std::uint64_t rest = idx;
                    for (std::uint32_t slot : unit.slots) {
                        unit.ball.colors[slot] = static_cast<Color>(rest % k);
                        rest /= k;
                    }
                    bool pass = unit.frontier_rule ? problem.eval_frontier(unit.ball)
                                                   : problem.eval(unit.ball);
                    unit.table[idx] = pass ? 1 : 0;
                }
                // A rule that passes for every tuple can never fail or prune.
                if (std::find(unit.table.begin(), unit.table.end(), 0) == unit.table.end())
                    continue;
            }
        }

        auto unit_index = static_cast<std::uint32_t>(inst.units.size());
        for (std::uint32_t m : unit.members) inst.units_by_member[m].push_back(unit_index);
        inst.units.push_back(std::move(unit));
    }
    return inst;
}

Coloring to_coloring(const StructuredGraph& g, const std::vector<Color>& assignment) {
    Coloring f;
    for (std::uint32_t v = 0; v < g.size(); ++v) f.set(g.id_of(v), assignment[v]);
    return f;
}

}  // namespace

SolveResult solve_finite_palette(const StructuredGraph& g, const LocalProblem& problem,
                                 unsigned k, const CheckMode& mode) {
    Instance inst = build_instance(g, problem, k, mode, true);
    const auto n = static_cast<std::uint32_t>(g.size());
    std::vector<Color> assignment(n, 0);

    if (n == 0) return {true, {}};

    // A vertex read by no rule can stay at color 0: any solution can be
    // normalized to 0 there, and 0 is what the plain search would emit.
    std::vector<std::uint8_t> constrained(n, 0);
    for (const CheckUnit& unit : inst.units)
        for (std::uint32_t m : unit.members) constrained[m] = 1;

    // Iterative backtracking; assignment[0..p] are set.
    std::uint32_t p = 0;
    std::vector<Color> next_color(n, 0);
    while (true) {
        if (next_color[p] >= k) {
            // Exhausted this position; backtrack.
            if (p == 0) return {false, {}};
            next_color[p] = 0;
            --p;
            continue;
        }
        assignment[p] = next_color[p];
        next_color[p] = constrained[p] ? next_color[p] + 1 : k;

        bool ok = true;
        for (std::uint32_t ui : inst.units_by_member[p]) {
            CheckUnit& unit = inst.units[ui];
            if (unit.trigger == p) {
                if (!unit.eval_complete(problem, assignment, k)) {
                    ok = false;
                    break;
                }
            } else if (unit.trigger > p && !unit.table.empty()) {
                if (!unit.some_completion_passes(assignment, k, p)) {
                    ok = false;
                    break;
                }
            }
        }
        if (!ok) continue;

        if (p + 1 == n) {
            Coloring f = to_coloring(g, assignment);
            if (!verify(g, f, problem, mode).ok)
                throw std::logic_error("solver produced a coloring that fails verification");
            return {true, std::move(f)};
        }
        ++p;
    }
}

SolveResult exhaustive_oracle(const StructuredGraph& g, const LocalProblem& problem, unsigned k,
                              const CheckMode& mode, std::uint64_t cap) {
    if (k < 1) fail("malformed_input", "palette size must be at least 1");
    std::uint64_t total = pow_capped(k, g.size(), cap);
    if (total > cap)
        fail("instance_too_large", "k^|V| = " + std::to_string(k) + "^" +
                                       std::to_string(g.size()) + " exceeds the cap of " +
                                       std::to_string(cap));

    Instance inst = build_instance(g, problem, k, mode, true);
    const auto n = static_cast<std::uint32_t>(g.size());
    std::vector<Color> assignment(n, 0);

    for (std::uint64_t count = 0; count < total; ++count) {
        bool pass = true;
        for (CheckUnit& unit : inst.units)
            if (!unit.eval_complete(problem, assignment, k)) {
                pass = false;
                break;
            }
        if (pass) return {true, to_coloring(g, assignment)};
        for (std::uint32_t i = n; i-- > 0;) {
            if (++assignment[i] < k) break;
            assignment[i] = 0;
        }
    }
    return {false, {}};
}

}  // namespace lcl
