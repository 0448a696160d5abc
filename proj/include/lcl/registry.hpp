#pragma once

#include <string>
#include <vector>

#include "lcl/problem.hpp"

namespace lcl {

// Built-in problems by CLI name: "sigma", "pi", "pi-star", "proper"
// (alias "proper-k").
LocalProblem problem_by_name(const std::string& name);
std::vector<std::string> problem_names();

}  // namespace lcl
