#include "lcl/registry.hpp"

#include "lcl/errors.hpp"
#include "lcl/gadget.hpp"
#include "lcl/sigma_pi.hpp"

namespace lcl {

LocalProblem problem_by_name(const std::string& name) {
    if (name == "sigma") return sigma_problem();
    if (name == "pi") return pi_problem();
    if (name == "pi-star") return lift_problem();
    if (name == "proper" || name == "proper-k") return proper_coloring_problem();
    fail("malformed_input", "unknown problem '" + name + "' (try: sigma, pi, pi-star, proper-k)");
}

std::vector<std::string> problem_names() { return {"sigma", "pi", "pi-star", "proper-k"}; }

}  // namespace lcl
