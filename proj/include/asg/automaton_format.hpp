#pragma once

#include <string>
#include <string_view>

#include "asg/automaton.hpp"

namespace asg {

/// Parses the line-oriented automaton document:
///
///     # comment
///     alphabet: 3
///     trivial: e
///     gen a: perm=(0 1 2) sections=[e,e,e]
///     gen b: perm=id sections=[a,b,e]
///     involutions: a
///
/// Sections name a state, `name^-1`, or the trivial state. Inverses of
/// non-involutive generators are synthesized unless declared as `gen name^-1`.
Automaton parse_automaton(std::string_view text);

/// Inverse of parse_automaton up to comments and whitespace.
std::string serialize_automaton(const Automaton& aut);

/// Cycle notation such as "(0 1 2)(3 4)", or "id".
std::string cycle_notation(const std::vector<int>& permutation);

Automaton load_automaton_file(const std::string& path);

}  // namespace asg
