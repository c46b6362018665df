#include "asg/rotation_graph.hpp"

#include <numeric>
#include <sstream>

namespace asg {

const char* to_string(EdgeKind k) {
  switch (k) {
    case EdgeKind::Regular:
      return "regular";
    case EdgeKind::Loop:
      return "loop";
    case EdgeKind::HalfLoop:
      return "halfloop";
  }
  return "regular";
}

const char* to_string(EdgeClass c) {
  switch (c) {
    case EdgeClass::None:
      return "none";
    case EdgeClass::Sheet:
      return "sheet";
    case EdgeClass::ModelLift:
      return "model";
    case EdgeClass::SchreierLift:
      return "schreier";
  }
  return "none";
}

RotationGraph::RotationGraph(std::size_t vertex_count, std::vector<std::string> color_names, std::vector<int> color_inverse)
    : vertex_count_(vertex_count),
      color_names_(std::move(color_names)),
      color_inverse_(std::move(color_inverse)),
      partner_(vertex_count_ * color_names_.size(), kNoHalfEdge) {
  if (color_inverse_.size() != color_names_.size()) throw DimensionMismatch("color inverse table size");
}

void RotationGraph::connect(HalfEdge a, HalfEdge b, EdgeClass cls) {
  if (a >= partner_.size() || b >= partner_.size()) throw ValidationError("half-edge out of range");
  if (partner_[a] == b && partner_[b] == a) return;
  if (partner_[a] != kNoHalfEdge || partner_[b] != kNoHalfEdge) {
    throw ValidationError("half-edge at vertex " + label(vertex_of(a)) + " color " + color_name(color_of(a)) +
                          " is already paired differently");
  }
  partner_[a] = b;
  partner_[b] = a;
  if (cls != EdgeClass::None) {
    if (class_.empty()) class_.assign(partner_.size(), EdgeClass::None);
    class_[a] = cls;
    class_[b] = cls;
  }
}

void RotationGraph::disconnect(HalfEdge h) {
  const HalfEdge p = partner_[h];
  if (p == kNoHalfEdge) return;
  partner_[h] = kNoHalfEdge;
  partner_[p] = kNoHalfEdge;
}

std::string RotationGraph::label(std::size_t v) const {
  if (v < labels_.size()) return labels_[v];
  if (label_alphabet_ > 0) return word_label(index_word(v, label_alphabet_, label_length_), label_alphabet_);
  return std::to_string(v);
}

std::vector<Edge> RotationGraph::edges() const {
  std::vector<Edge> out;
  for (HalfEdge h = 0; h < partner_.size(); ++h) {
    const HalfEdge p = partner_[h];
    if (p == kNoHalfEdge || p < h) continue;
    Edge e{h, p, vertex_of(h), vertex_of(p), color_of(h), EdgeKind::Regular};
    if (p == h) {
      e.kind = EdgeKind::HalfLoop;
    } else if (e.from == e.to) {
      e.kind = EdgeKind::Loop;
    }
    out.push_back(e);
  }
  return out;
}

std::size_t RotationGraph::edge_count() const {
  std::size_t n = 0;
  for (HalfEdge h = 0; h < partner_.size(); ++h) {
    if (partner_[h] != kNoHalfEdge && partner_[h] >= h) ++n;
  }
  return n;
}

std::size_t RotationGraph::half_edge_count() const {
  std::size_t n = 0;
  for (HalfEdge p : partner_) n += p != kNoHalfEdge ? 1 : 0;
  return n;
}

GraphStats graph_stats(const RotationGraph& g) {
  GraphStats s;
  s.vertex_count = g.vertex_count();
  s.degree.assign(s.vertex_count, 0);
  for (HalfEdge h = 0; h < g.half_edge_capacity(); ++h) {
    if (g.present(h)) ++s.degree[g.vertex_of(h)];
  }
  for (const auto& e : g.edges()) {
    ++s.edge_count;
    switch (e.kind) {
      case EdgeKind::Regular:
        ++s.regular_edges;
        break;
      case EdgeKind::Loop:
        ++s.loops;
        break;
      case EdgeKind::HalfLoop:
        ++s.half_loops;
        break;
    }
  }
  s.rank_minus_one = static_cast<long long>(s.edge_count) - static_cast<long long>(s.vertex_count);
  return s;
}

IntMatrix adjacency_matrix(const RotationGraph& g) {
  const auto n = static_cast<Eigen::Index>(g.vertex_count());
  IntMatrix a = IntMatrix::Zero(n, n);
  for (HalfEdge h = 0; h < g.half_edge_capacity(); ++h) {
    if (!g.present(h)) continue;
    a(static_cast<Eigen::Index>(g.vertex_of(h)), static_cast<Eigen::Index>(g.vertex_of(g.partner(h)))) += 1;
  }
  return a;
}

IntMatrix degree_minus_one_matrix(const RotationGraph& g) {
  const GraphStats s = graph_stats(g);
  const auto n = static_cast<Eigen::Index>(s.vertex_count);
  IntMatrix q = IntMatrix::Zero(n, n);
  for (Eigen::Index v = 0; v < n; ++v) q(v, v) = s.degree[static_cast<std::size_t>(v)] - 1;
  return q;
}

std::vector<std::size_t> components(const RotationGraph& g) {
  std::vector<std::size_t> parent(g.vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (HalfEdge h = 0; h < g.half_edge_capacity(); ++h) {
    if (!g.present(h)) continue;
    const std::size_t a = find(g.vertex_of(h));
    const std::size_t b = find(g.vertex_of(g.partner(h)));
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  for (std::size_t v = 0; v < parent.size(); ++v) parent[v] = find(v);
  return parent;
}

bool is_connected(const RotationGraph& g) {
  for (std::size_t root : components(g)) {
    if (root != 0) return false;
  }
  return true;
}

std::string export_dot(const RotationGraph& g, const std::string& name) {
  std::ostringstream os;
  os << "graph \"" << name << "\" {\n";
  for (std::size_t v = 0; v < g.vertex_count(); ++v) os << "  \"" << g.label(v) << "\";\n";
  for (const auto& e : g.edges()) {
    os << "  \"" << g.label(e.from) << "\" -- \"" << g.label(e.to) << "\" [color=\"" << g.color_name(e.color)
       << "\", kind=\"" << to_string(e.kind) << "\"";
    if (g.edge_class(e.first) != EdgeClass::None) os << ", class=\"" << to_string(g.edge_class(e.first)) << "\"";
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

std::vector<std::string> incidence_diff(const RotationGraph& expected, const RotationGraph& actual, std::size_t max_lines) {
  std::vector<std::string> out;
  if (expected.vertex_count() != actual.vertex_count() || expected.color_names() != actual.color_names()) {
    out.push_back("vertex sets or colors differ");
    return out;
  }
  auto describe = [](const RotationGraph& g, HalfEdge h) {
    if (!g.present(h)) return std::string("absent");
    const HalfEdge p = g.partner(h);
    return g.label(g.vertex_of(p)) + "/" + g.color_name(g.color_of(p));
  };
  for (HalfEdge h = 0; h < expected.half_edge_capacity() && out.size() < max_lines; ++h) {
    if (expected.present(h) == actual.present(h) && (!expected.present(h) || expected.partner(h) == actual.partner(h))) continue;
    out.push_back("half-edge " + expected.label(expected.vertex_of(h)) + "/" + expected.color_name(expected.color_of(h)) +
                  ": expected " + describe(expected, h) + ", got " + describe(actual, h));
  }
  return out;
}

}  // namespace asg
