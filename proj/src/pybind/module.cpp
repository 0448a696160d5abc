#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "lcl/dot.hpp"
#include "lcl/errors.hpp"
#include "lcl/gadget.hpp"
#include "lcl/json_io.hpp"
#include "lcl/registry.hpp"
#include "lcl/sigma_pi.hpp"
#include "lcl/solver.hpp"

namespace py = pybind11;

namespace {

lcl::Coloring coloring_from_dict(const std::map<std::string, lcl::Color>& colors) {
    lcl::Coloring f;
    for (const auto& [id, c] : colors) f.set(id, c);
    return f;
}

std::map<std::string, lcl::Color> coloring_to_dict(const lcl::Coloring& f) {
    std::map<std::string, lcl::Color> out;
    for (const auto& [id, c] : f.colors)
        if (c != 0) out[id] = c;
    return out;
}

lcl::CheckMode mode_from_checked(const std::optional<std::vector<std::string>>& checked) {
    if (!checked) return lcl::CheckMode::strict();
    return lcl::CheckMode::lenient({checked->begin(), checked->end()});
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "workbench for locally checkable colorings on automaton-presented trees";

    py::register_exception<lcl::Error>(m, "Error");

    py::class_<lcl::StructuredGraph>(m, "StructuredGraph")
        .def_static(
            "from_json",
            [](const std::string& text, bool structured_override, bool use_override) {
                lcl::json j = lcl::json::parse(text);
                return use_override ? lcl::graph_from_json(j, structured_override)
                                    : lcl::graph_from_json(j);
            },
            py::arg("text"), py::arg("structured_override") = true,
            py::arg("use_override") = false)
        .def("to_json",
             [](const lcl::StructuredGraph& g) { return lcl::dump_json(lcl::graph_to_json(g)); })
        .def_property_readonly("n", &lcl::StructuredGraph::size)
        .def_property_readonly("ids", &lcl::StructuredGraph::ids)
        .def("degree",
             [](const lcl::StructuredGraph& g, const std::string& id) {
                 return g.degree(g.index_of(id));
             })
        .def("__eq__", [](const lcl::StructuredGraph& a,
                          const lcl::StructuredGraph& b) { return a == b; })
        .def("__len__", &lcl::StructuredGraph::size)
        .def("__repr__", [](const lcl::StructuredGraph& g) {
            return "<StructuredGraph with " + std::to_string(g.size()) + " vertices>";
        });

    py::class_<lcl::TreeAutomaton>(m, "TreeAutomaton")
        .def_static("from_json",
                    [](const std::string& text) {
                        return lcl::parse_automaton(lcl::json::parse(text));
                    })
        .def("to_json",
             [](const lcl::TreeAutomaton& a) {
                 return lcl::dump_json(lcl::automaton_to_json(a));
             })
        .def_property_readonly("states", &lcl::TreeAutomaton::states)
        .def("__repr__", [](const lcl::TreeAutomaton& a) {
            return "<TreeAutomaton with " + std::to_string(a.state_count()) + " states>";
        });

    py::class_<lcl::BranchWitness>(m, "BranchWitness")
        .def(py::init<std::string, std::string>(), py::arg("stem"), py::arg("cycle"))
        .def_readonly("stem", &lcl::BranchWitness::stem)
        .def_readonly("cycle", &lcl::BranchWitness::cycle)
        .def("__repr__", [](const lcl::BranchWitness& w) {
            return "BranchWitness(stem='" + w.stem + "', cycle='" + w.cycle + "')";
        });

    py::class_<lcl::FDecision>(m, "FDecision")
        .def_readonly("in_f", &lcl::FDecision::in_f)
        .def_property_readonly("witness",
                               [](const lcl::FDecision& d) {
                                   return d.witness ? py::cast(*d.witness) : py::none().cast<py::object>();
                               })
        .def("__repr__", [](const lcl::FDecision& d) {
            return d.in_f ? std::string("FDecision(in_f=True)")
                          : "FDecision(in_f=False, witness=('" + d.witness->stem + "', '" +
                                d.witness->cycle + "'))";
        });

    py::class_<lcl::LocalProblem>(m, "LocalProblem")
        .def_readonly("name", &lcl::LocalProblem::name)
        .def_readonly("radius", &lcl::LocalProblem::radius)
        .def("__repr__", [](const lcl::LocalProblem& p) {
            return "<LocalProblem '" + p.name + "' radius " + std::to_string(p.radius) + ">";
        });

    py::class_<lcl::Verdict>(m, "Verdict")
        .def_readonly("ok", &lcl::Verdict::ok)
        .def_readonly("failures", &lcl::Verdict::failures)
        .def("__bool__", [](const lcl::Verdict& v) { return v.ok; })
        .def("__repr__", [](const lcl::Verdict& v) {
            return v.ok ? std::string("Verdict(ok=True)")
                        : "Verdict(ok=False, failures=" + std::to_string(v.failures.size()) + ")";
        });

    m.def("sigma_problem", &lcl::sigma_problem);
    m.def("pi_problem", &lcl::pi_problem);
    m.def("proper_coloring_problem", &lcl::proper_coloring_problem);
    m.def("lift_problem", &lcl::lift_problem);
    m.def("problem_by_name", &lcl::problem_by_name, py::arg("name"));

    m.def("validate_pruned", &lcl::validate_pruned, py::arg("automaton"),
          "None when pruned, else the name of a childless reachable state");
    m.def("membership", &lcl::membership, py::arg("automaton"), py::arg("bits"));
    m.def("truncate", &lcl::truncate, py::arg("automaton"), py::arg("depth"));
    m.def("decide_f", &lcl::decide_F, py::arg("automaton"));
    m.def("branch_prefix", &lcl::branch_prefix, py::arg("witness"), py::arg("n"));
    m.def("enumerate_automata", &lcl::enumerate_automata, py::arg("max_states"));

    m.def("k_of", &lcl::k_of, py::arg("witness"), py::arg("position"));
    m.def(
        "sigma_coloring_from_branch",
        [](const lcl::TreeAutomaton& a, const lcl::BranchWitness& w, unsigned depth) {
            return coloring_to_dict(lcl::sigma_coloring_from_branch(a, w, depth));
        },
        py::arg("automaton"), py::arg("witness"), py::arg("depth"));
    m.def(
        "extract_branch",
        [](const lcl::StructuredGraph& g, const std::map<std::string, lcl::Color>& colors) {
            return lcl::extract_branch(g, coloring_from_dict(colors));
        },
        py::arg("truncation"), py::arg("colors"));
    m.def(
        "build_component",
        [](const lcl::TreeAutomaton& a0, const lcl::TreeAutomaton& a1, unsigned depth) {
            return lcl::build_component({a0, a1, depth});
        },
        py::arg("a0"), py::arg("a1"), py::arg("depth"));
    m.def("component_colorable", &lcl::component_colorable, py::arg("a0"), py::arg("a1"));
    m.def(
        "pi_coloring_for_component",
        [](const lcl::TreeAutomaton& a0, const lcl::TreeAutomaton& a1, unsigned depth) {
            return coloring_to_dict(lcl::pi_coloring_for_component({a0, a1, depth}));
        },
        py::arg("a0"), py::arg("a1"), py::arg("depth"));
    m.def("lenient_checked_set", [](const lcl::StructuredGraph& g) {
        auto set = lcl::lenient_checked_set(g);
        return std::vector<std::string>(set.begin(), set.end());
    });

    m.def(
        "verify",
        [](const lcl::StructuredGraph& g, const std::map<std::string, lcl::Color>& colors,
           const lcl::LocalProblem& problem,
           const std::optional<std::vector<std::string>>& checked) {
            return lcl::verify(g, coloring_from_dict(colors), problem,
                               mode_from_checked(checked));
        },
        py::arg("graph"), py::arg("colors"), py::arg("problem"),
        py::arg("checked") = py::none(),
        "checked=None verifies strictly; a list of ids verifies leniently at that set");
    m.def(
        "solve_finite_palette",
        [](const lcl::StructuredGraph& g, const lcl::LocalProblem& problem, unsigned k,
           const std::optional<std::vector<std::string>>& checked)
            -> std::optional<std::map<std::string, lcl::Color>> {
            lcl::SolveResult r =
                lcl::solve_finite_palette(g, problem, k, mode_from_checked(checked));
            if (!r.sat) return std::nullopt;
            return coloring_to_dict(r.coloring);
        },
        py::arg("graph"), py::arg("problem"), py::arg("palette"), py::arg("checked") = py::none(),
        "returns the witness coloring as a dict, or None when unsat");
    m.def(
        "exhaustive_oracle",
        [](const lcl::StructuredGraph& g, const lcl::LocalProblem& problem, unsigned k,
           const std::optional<std::vector<std::string>>& checked, std::uint64_t cap)
            -> std::optional<std::map<std::string, lcl::Color>> {
            lcl::SolveResult r =
                lcl::exhaustive_oracle(g, problem, k, mode_from_checked(checked), cap);
            if (!r.sat) return std::nullopt;
            return coloring_to_dict(r.coloring);
        },
        py::arg("graph"), py::arg("problem"), py::arg("palette"), py::arg("checked") = py::none(),
        py::arg("cap") = 10'000'000ULL);

    m.def("encode", &lcl::encode, py::arg("graph"));
    m.def("decode", &lcl::decode, py::arg("gstar"));
    m.def(
        "vertex_orders",
        [](const lcl::StructuredGraph& g) {
            std::map<std::string, std::vector<unsigned>> out;
            for (const auto& [id, orders] : lcl::vertex_orders(g))
                out[id] = {orders.begin(), orders.end()};
            return out;
        },
        py::arg("graph"));

    m.def(
        "ball_type",
        [](const lcl::StructuredGraph& g, const std::map<std::string, lcl::Color>& colors,
           const std::string& root, unsigned radius) {
            return lcl::canonical_type(lcl::ball(g, coloring_from_dict(colors), root, radius))
                .encoding;
        },
        py::arg("graph"), py::arg("colors"), py::arg("root"), py::arg("radius"),
        "canonical encoding of the rooted colored ball");

    m.def(
        "export_dot",
        [](const lcl::StructuredGraph& g,
           const std::optional<std::map<std::string, lcl::Color>>& colors) {
            if (!colors) return lcl::export_dot(g);
            lcl::Coloring f = coloring_from_dict(*colors);
            return lcl::export_dot(g, &f);
        },
        py::arg("graph"), py::arg("colors") = py::none());
}
