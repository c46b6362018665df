#include "asg/replacement_product.hpp"

#include "asg/schreier.hpp"

namespace asg {

std::size_t ProductGraph::concatenated_index(std::size_t product_vertex) const {
  std::size_t dr = 1;
  std::size_t dn = 1;
  for (int i = 0; i < r; ++i) dr *= static_cast<std::size_t>(alphabet_size);
  for (int i = 0; i < n; ++i) dn *= static_cast<std::size_t>(alphabet_size);
  const std::size_t v = product_vertex / dr;
  const std::size_t u = product_vertex % dr;
  return u * dn + v;
}

ProductGraph gen_replacement(const Automaton& aut, int n, int r, std::size_t limit) {
  if (n < 0 || r < 0) throw ValidationError("levels must be non-negative");
  const int d = aut.alphabet_size();
  checked_power(d, n + r, limit);
  const std::size_t dn = checked_power(d, n, limit);
  const std::size_t dr = checked_power(d, r, limit);
  ProductGraph p{empty_level_graph(aut, n + r, limit), n, r, d};
  RotationGraph& g = p.graph;
  std::vector<std::string> labels(dn * dr);
  for (std::size_t v = 0; v < dn; ++v) {
    for (std::size_t u = 0; u < dr; ++u) {
      labels[v * dr + u] = "(" + word_label(index_word(v, d, n), d) + "," + word_label(index_word(u, d, r), d) + ")";
    }
  }
  g.set_labels(std::move(labels));

  const auto& colors = aut.colors();
  for (std::size_t v = 0; v < dn; ++v) {
    for (std::size_t u = 0; u < dr; ++u) {
      for (int c = 0; c < g.color_count(); ++c) {
        const HalfEdge h = g.half_edge(v * dr + u, c);
        if (g.present(h)) continue;
        Word uw = index_word(u, d, r);
        const State t = aut.act(colors[static_cast<std::size_t>(c)], uw);
        const std::size_t u2 = word_index(uw, d);
        const int back_color = g.color_inverse(c);
        if (t == Automaton::trivial()) {
          g.connect(h, g.half_edge(v * dr + u2, back_color), EdgeClass::Sheet);
          continue;
        }
        Word vw = index_word(v, d, n);
        const State tv = aut.act(t, vw);
        const EdgeClass cls = tv == Automaton::trivial() ? EdgeClass::ModelLift : EdgeClass::SchreierLift;
        g.connect(h, g.half_edge(word_index(vw, d) * dr + u2, back_color), cls);
      }
    }
  }
  return p;
}

RotationGraph concatenate_labels(const ProductGraph& p) {
  RotationGraph out(p.graph.vertex_count(), p.graph.color_names(), [&] {
    std::vector<int> inv;
    for (int c = 0; c < p.graph.color_count(); ++c) inv.push_back(p.graph.color_inverse(c));
    return inv;
  }());
  out.set_word_labels(p.alphabet_size, p.n + p.r);
  for (const auto& e : p.graph.edges()) {
    out.connect(out.half_edge(p.concatenated_index(e.from), e.color),
                out.half_edge(p.concatenated_index(e.to), p.graph.color_of(e.second)), p.graph.edge_class(e.first));
  }
  return out;
}

IsoReport verify_iso_to_schreier(const ProductGraph& p, const Automaton& aut, std::size_t limit) {
  IsoReport rep;
  rep.differences = incidence_diff(build_schreier(aut, p.n + p.r, limit), concatenate_labels(p));
  rep.pass = rep.differences.empty();
  return rep;
}

CoveringMap covering_projection(const Automaton& aut, int n, int r, std::size_t limit) {
  if (n < 0 || r < 0) throw ValidationError("levels must be non-negative");
  CoveringMap c = level_covering(aut, n + r, r, limit);
  check_unramified(c);
  return c;
}

}  // namespace asg
