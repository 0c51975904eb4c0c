#pragma once

#include <string>
#include <vector>

#include "ssg/automaton.hpp"

namespace ssg {

// Compiled-in example groups: "grigorchuk", "odometer", "reflection",
// "gupta_sidki_3", "trivial".
std::vector<std::string> builtin_names();
bool is_builtin(const std::string& name);
GroupPtr builtin_group(const std::string& name);

}  // namespace ssg
