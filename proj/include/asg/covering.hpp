#pragma once

#include <functional>
#include <string>
#include <vector>

#include "asg/automaton.hpp"
#include "asg/rotation_graph.hpp"

namespace asg {

/// Color-preserving vertex projection from a total graph onto a base graph.
struct CoveringMap {
  RotationGraph total;
  RotationGraph base;
  std::vector<std::size_t> vertex_map;  ///< total vertex -> base vertex
};

/// Gamma_upper -> Gamma_lower, keeping the first `lower` letters of each word.
CoveringMap level_covering(const Automaton& aut, int upper, int lower, std::size_t limit = kDefaultVertexLimit);

/// Sheet count of an unramified covering. Throws NotACovering at the first
/// total vertex whose half-edges do not map bijectively onto those below it.
std::size_t check_unramified(const CoveringMap& c);

/// Deck transformations as total-vertex permutations. Element 0 is the
/// identity; elements are sorted by the image of root().
struct DeckGroup {
  std::size_t root = 0;  ///< least vertex over base vertex 0
  std::vector<std::vector<std::size_t>> elements;
  std::vector<std::vector<std::size_t>> table;  ///< table[i][j] = elements[i] after elements[j]

  std::size_t order() const { return elements.size(); }
  std::size_t element_of_image(std::size_t image_of_root) const;
  std::size_t inverse(std::size_t g) const;
  std::size_t element_order(std::size_t g) const;
  std::size_t power(std::size_t g, std::size_t k) const;
  bool is_abelian() const;
};

/// Deck group by path-lifting extension from root(). Throws DisconnectedGraph
/// if the total graph is not connected.
DeckGroup deck_group(const CoveringMap& c);

bool is_normal(const CoveringMap& c);
bool is_normal(const CoveringMap& c, const DeckGroup& g);

/// BFS tree from vertex 0 exploring colors in order; loops never enter it.
struct SpanningTree {
  std::size_t root = 0;
  std::vector<HalfEdge> parent;  ///< half-edge at the parent leading to the vertex
  std::vector<std::size_t> order;  ///< reached vertices in BFS order
  std::vector<bool> in_tree;  ///< per half-edge

  bool spans() const { return order.size() == parent.size(); }
  /// Orbits of the graph not in the tree, ordered by their smaller half-edge.
  std::vector<Edge> non_tree_edges(const RotationGraph& g) const;
};

/// `allowed` restricts which half-edges the tree may use.
SpanningTree spanning_tree(const RotationGraph& g, const std::function<bool(HalfEdge)>& allowed = {});

/// Sheets of a normal covering labeled by deck elements. The identity sheet
/// is the lift of the base tree through DeckGroup::root.
struct SheetLabeling {
  SpanningTree tree;
  std::vector<std::size_t> identity_lift;  ///< base vertex -> total vertex
  std::vector<std::size_t> sheet_of;       ///< total vertex -> deck element
};

/// Throws NotNormal if the covering is not normal.
SheetLabeling label_sheets(const CoveringMap& c, const DeckGroup& g, SpanningTree tree);

/// Normalized Frobenius element of the base half-edge h: the sheet reached
/// by lifting h from the identity sheet.
std::size_t frobenius(const CoveringMap& c, const SheetLabeling& s, HalfEdge h);

/// Action of each deck element on the last letter for Gamma_{n+1} -> Gamma_n.
/// Throws ValidationError if an element does not act on the last letter alone.
std::vector<std::vector<int>> last_letter_action(const CoveringMap& c, const DeckGroup& g, int d);

enum class GaloisVerdict { Pass, Fail, HypothesisNotMet };
const char* to_string(GaloisVerdict v);

struct FrobeniusRow {
  std::string edge;         ///< "u -s- v" in the base
  std::string restriction;  ///< name of s|_u
  std::size_t element = 0;
  std::vector<int> permutation;  ///< sheet permutation of the Frobenius element
  std::vector<int> expected;     ///< root permutation of s|_u
};

struct GaloisReport {
  GaloisVerdict verdict = GaloisVerdict::Fail;
  int level = 0;
  int alphabet_size = 0;
  std::size_t root_group_order = 0;
  bool bounded = false;
  bool level_transitive = false;
  std::size_t sheets = 0;
  std::size_t deck_order = 0;
  bool normal = false;
  std::vector<std::vector<int>> deck_action;  ///< per deck element, on the last letter
  std::vector<FrobeniusRow> rows;
  std::vector<std::string> notes;
};

/// Checks that Gamma_{n+1} -> Gamma_n is normal with deck group acting on the
/// last letter as Psi, and that the Frobenius element of each non-tree edge
/// (u, s) acts as the root permutation of s|_u.
GaloisReport verify_galois_theorem(const Automaton& aut, int n, std::size_t limit = kDefaultVertexLimit);

std::string format_galois_report(const GaloisReport& r);

}  // namespace asg
