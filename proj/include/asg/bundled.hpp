#pragma once

#include <string>
#include <vector>

#include "asg/automaton.hpp"

namespace asg {

/// Names of the automata shipped with the library.
std::vector<std::string> bundled_names();

/// Definition document of a bundled automaton; throws Error for unknown names.
std::string bundled_document(const std::string& name);

Automaton bundled_automaton(const std::string& name);

}  // namespace asg
