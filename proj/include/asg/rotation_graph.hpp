#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "asg/algebra/ring_matrix.hpp"
#include "asg/words.hpp"

namespace asg {

/// Half-edge id: vertex * color_count + color.
using HalfEdge = std::size_t;

inline constexpr std::size_t kNoHalfEdge = static_cast<std::size_t>(-1);

enum class EdgeKind { Regular, Loop, HalfLoop };
const char* to_string(EdgeKind k);

/// Extra per-edge label used by replacement products.
enum class EdgeClass : std::uint8_t { None, Sheet, ModelLift, SchreierLift };
const char* to_string(EdgeClass c);

/// One orbit of the pairing involution.
struct Edge {
  HalfEdge first;   ///< the smaller half-edge id of the orbit
  HalfEdge second;  ///< its partner (equal to `first` for a half-loop)
  std::size_t from;
  std::size_t to;
  int color;  ///< color of `first`
  EdgeKind kind;
};

/// Colored multigraph stored as half-edges with a pairing involution.
///
/// Each vertex has at most one half-edge per color. A present half-edge is
/// paired with another present half-edge (or with itself, a half-loop).
class RotationGraph {
 public:
  RotationGraph() = default;
  RotationGraph(std::size_t vertex_count, std::vector<std::string> color_names, std::vector<int> color_inverse);

  std::size_t vertex_count() const { return vertex_count_; }
  int color_count() const { return static_cast<int>(color_names_.size()); }
  const std::vector<std::string>& color_names() const { return color_names_; }
  const std::string& color_name(int c) const { return color_names_.at(static_cast<std::size_t>(c)); }
  int color_inverse(int c) const { return color_inverse_.at(static_cast<std::size_t>(c)); }

  HalfEdge half_edge(std::size_t vertex, int color) const {
    return vertex * static_cast<std::size_t>(color_names_.size()) + static_cast<std::size_t>(color);
  }
  std::size_t vertex_of(HalfEdge h) const { return h / color_names_.size(); }
  int color_of(HalfEdge h) const { return static_cast<int>(h % color_names_.size()); }
  std::size_t half_edge_capacity() const { return partner_.size(); }

  bool present(HalfEdge h) const { return partner_[h] != kNoHalfEdge; }
  HalfEdge partner(HalfEdge h) const { return partner_[h]; }
  EdgeClass edge_class(HalfEdge h) const { return class_.empty() ? EdgeClass::None : class_[h]; }

  /// Pairs two half-edges (a == b makes a half-loop). Re-adding an identical
  /// pair is a no-op; conflicting pairings throw ValidationError.
  void connect(HalfEdge a, HalfEdge b, EdgeClass cls = EdgeClass::None);
  void disconnect(HalfEdge h);

  /// Vertex labels; defaults to the decimal index.
  void set_labels(std::vector<std::string> labels) { labels_ = std::move(labels); }
  /// Labels vertices by the words of length n over d letters in lexicographic order.
  void set_word_labels(int d, int n) {
    label_alphabet_ = d;
    label_length_ = n;
  }
  std::string label(std::size_t v) const;

  /// Orbits of the pairing, ordered by their smaller half-edge id.
  std::vector<Edge> edges() const;
  std::size_t edge_count() const;
  std::size_t half_edge_count() const;

  /// Same vertex count, colors and pairing.
  bool same_incidence(const RotationGraph& other) const { return partner_ == other.partner_ && color_names_ == other.color_names_ && vertex_count_ == other.vertex_count_; }

 private:
  std::size_t vertex_count_ = 0;
  std::vector<std::string> color_names_;
  std::vector<int> color_inverse_;
  std::vector<HalfEdge> partner_;
  std::vector<EdgeClass> class_;
  std::vector<std::string> labels_;
  int label_alphabet_ = 0;
  int label_length_ = 0;
};

struct GraphStats {
  std::size_t vertex_count = 0;
  std::size_t edge_count = 0;
  std::size_t regular_edges = 0;
  std::size_t loops = 0;
  std::size_t half_loops = 0;
  std::vector<long long> degree;
  long long rank_minus_one = 0;  ///< |E| - |V|
};

GraphStats graph_stats(const RotationGraph& g);

/// A: half-loops add 1 to the diagonal, full loops 2.
IntMatrix adjacency_matrix(const RotationGraph& g);
/// Q: diagonal matrix of degree - 1.
IntMatrix degree_minus_one_matrix(const RotationGraph& g);

/// Half-loops are ignored; the empty graph counts as connected.
bool is_connected(const RotationGraph& g);

/// Vertex-indexed component ids via the pairing.
std::vector<std::size_t> components(const RotationGraph& g);

/// Renders the graph in DOT: one record per orbit with color and kind.
std::string export_dot(const RotationGraph& g, const std::string& name = "G");

/// Edge-by-edge difference of two graphs with identical vertex sets and
/// colors; empty when the pairings coincide.
std::vector<std::string> incidence_diff(const RotationGraph& expected, const RotationGraph& actual, std::size_t max_lines = 20);

}  // namespace asg
