#include "asg/schreier.hpp"

namespace asg {

namespace {

RotationGraph build_level(const Automaton& aut, int n, std::size_t limit, bool tile_only) {
  RotationGraph g = empty_level_graph(aut, n, limit);
  const int d = aut.alphabet_size();
  const auto& colors = aut.colors();
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    for (int c = 0; c < static_cast<int>(colors.size()); ++c) {
      const HalfEdge h = g.half_edge(v, c);
      if (g.present(h)) continue;
      Word w = index_word(v, d, n);
      const State restr = aut.act(colors[static_cast<std::size_t>(c)], w);
      if (tile_only && restr != Automaton::trivial()) continue;
      g.connect(h, g.half_edge(word_index(w, d), g.color_inverse(c)));
    }
  }
  return g;
}

}  // namespace

RotationGraph empty_level_graph(const Automaton& aut, int n, std::size_t limit) {
  if (n < 0) throw ValidationError("level must be non-negative");
  const std::size_t count = checked_power(aut.alphabet_size(), n, limit);
  std::vector<std::string> names;
  std::vector<int> inverse;
  for (State s : aut.colors()) {
    names.push_back(aut.name(s));
    inverse.push_back(aut.color_index(aut.inverse(s)));
  }
  RotationGraph g(count, std::move(names), std::move(inverse));
  g.set_word_labels(aut.alphabet_size(), n);
  return g;
}

RotationGraph build_schreier(const Automaton& aut, int n, std::size_t limit) { return build_level(aut, n, limit, false); }

RotationGraph build_tile(const Automaton& aut, int n, std::size_t limit) { return build_level(aut, n, limit, true); }

}  // namespace asg
