#pragma once

#include <string>
#include <vector>

#include "asg/automaton.hpp"
#include "asg/covering.hpp"
#include "asg/rotation_graph.hpp"

namespace asg {

/// Generalized replacement product of level-n and level-r Schreier graphs.
/// Vertex (v, u) with v in X^n, u in X^r has index rank(v) * d^r + rank(u);
/// every orbit carries its EdgeClass.
struct ProductGraph {
  RotationGraph graph;
  int n = 0;
  int r = 0;
  int alphabet_size = 2;

  /// Index of u·v in the level n + r Schreier graph.
  std::size_t concatenated_index(std::size_t product_vertex) const;
};

ProductGraph gen_replacement(const Automaton& aut, int n, int r, std::size_t limit = kDefaultVertexLimit);

struct IsoReport {
  bool pass = false;
  std::vector<std::string> differences;
};

/// Checks that (v, u) -> u·v maps the product onto the level n + r Schreier graph.
IsoReport verify_iso_to_schreier(const ProductGraph& p, const Automaton& aut, std::size_t limit = kDefaultVertexLimit);

/// Gamma_{n+r} -> Gamma_r keeping the first r letters, checked to be unramified.
CoveringMap covering_projection(const Automaton& aut, int n, int r, std::size_t limit = kDefaultVertexLimit);

/// Relabels the product graph along (v, u) -> u·v.
RotationGraph concatenate_labels(const ProductGraph& p);

}  // namespace asg
