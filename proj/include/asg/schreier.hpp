#pragma once

#include "asg/automaton.hpp"
#include "asg/rotation_graph.hpp"

namespace asg {

/// Empty graph on d^n word vertices whose colors are the automaton's generating set.
RotationGraph empty_level_graph(const Automaton& aut, int n, std::size_t limit = kDefaultVertexLimit);

/// Schreier graph on X^n: half-edge (v,s) is paired with (s(v), s^-1).
RotationGraph build_schreier(const Automaton& aut, int n, std::size_t limit = kDefaultVertexLimit);

/// Tile graph: the Schreier pairing restricted to half-edges with s|_v trivial.
RotationGraph build_tile(const Automaton& aut, int n, std::size_t limit = kDefaultVertexLimit);

}  // namespace asg
