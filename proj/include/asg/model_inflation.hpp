#pragma once

#include <string>
#include <vector>

#include "asg/periodic_word.hpp"
#include "asg/rotation_graph.hpp"

namespace asg {

/// Orbit {((p, x), t), ((q, y), t^-1)} of the model graph: t(x) = y and t|_x is trivial.
struct ModelEdge {
  std::size_t p;
  Word x;
  std::size_t q;
  Word y;
  State witness;
};

/// n-th iterated model graph on P x X^n.
struct ModelGraph {
  Automaton automaton;
  int order = 0;
  std::vector<EventuallyPeriodicWord> sequences;
  std::vector<ModelEdge> edges;

  std::size_t vertex_count() const;
  /// Vertex index p * d^n + rank(x).
  std::size_t vertex_index(std::size_t p, const Word& x) const;
  std::string vertex_label(std::size_t p, const Word& x) const;
};

/// Whether (p, q, t) extends to a left-infinite Moore-diagram path ending at t
/// that reads p and writes q. Indexed [p][q][t] over the given sequences.
std::vector<std::vector<std::vector<bool>>> model_relation(const Automaton& aut, const std::vector<EventuallyPeriodicWord>& p);

/// Throws NotBounded for automata that are not bounded.
ModelGraph model_graph(const Automaton& aut, int n, std::size_t limit = kDefaultVertexLimit);

/// Tile graph of level r + n built from d^n copies of the level-r tile plus model edges.
RotationGraph inflate(const RotationGraph& tile, const ModelGraph& model, std::size_t limit = kDefaultVertexLimit);

/// Adds the half-edges (v, s) with s|_v nontrivial to a level-n tile graph.
RotationGraph complete_to_schreier(const RotationGraph& tile, const Automaton& aut);

struct InflationReport {
  bool pass = false;
  std::size_t expected_edges = 0;
  std::size_t inflated_edges = 0;
  std::vector<std::string> differences;
};

/// Compares inflate(tile_r, M_n) with the directly built tile graph of level r + n.
InflationReport verify_inflation(const Automaton& aut, int r, int n, std::size_t limit = kDefaultVertexLimit);

std::string export_model_dot(const ModelGraph& m);

/// Level n with d^n == vertex_count; throws DimensionMismatch otherwise.
int level_of(std::size_t vertex_count, int d);

}  // namespace asg
