#include "asg/model_inflation.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <tuple>

#include "asg/schreier.hpp"

namespace asg {

int level_of(std::size_t vertex_count, int d) {
  int n = 0;
  std::size_t p = 1;
  while (p < vertex_count) {
    p *= static_cast<std::size_t>(d);
    ++n;
  }
  if (p != vertex_count) throw DimensionMismatch(std::to_string(vertex_count) + " is not a power of " + std::to_string(d));
  return n;
}

std::size_t ModelGraph::vertex_count() const {
  std::size_t per = 1;
  for (int i = 0; i < order; ++i) per *= static_cast<std::size_t>(automaton.alphabet_size());
  return sequences.size() * per;
}

std::size_t ModelGraph::vertex_index(std::size_t p, const Word& x) const {
  std::size_t per = 1;
  for (int i = 0; i < order; ++i) per *= static_cast<std::size_t>(automaton.alphabet_size());
  return p * per + word_index(x, automaton.alphabet_size());
}

std::string ModelGraph::vertex_label(std::size_t p, const Word& x) const {
  return "p#" + std::to_string(p) + "|" + word_label(x, automaton.alphabet_size());
}

std::vector<std::vector<std::vector<bool>>> model_relation(const Automaton& aut, const std::vector<EventuallyPeriodicWord>& p) {
  const std::size_t np = p.size();
  const std::size_t k = aut.state_count();
  std::vector<std::size_t> shifted(np);
  for (std::size_t i = 0; i < np; ++i) {
    auto it = std::lower_bound(p.begin(), p.end(), p[i].shift());
    if (it == p.end() || !(*it == p[i].shift())) throw ValidationError("post-critical set is not closed under shift");
    shifted[i] = static_cast<std::size_t>(it - p.begin());
  }
  // Greatest fixed point: start from everything over nontrivial states and prune.
  std::vector<std::vector<std::vector<bool>>> rel(np, std::vector<std::vector<bool>>(np, std::vector<bool>(k, true)));
  for (auto& row : rel) {
    for (auto& cell : row) cell[0] = false;
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t a = 0; a < np; ++a) {
      for (std::size_t b = 0; b < np; ++b) {
        const int xa = p[a].last();
        const int xb = p[b].last();
        for (State t = 1; t < static_cast<State>(k); ++t) {
          if (!rel[a][b][static_cast<std::size_t>(t)]) continue;
          bool witnessed = false;
          for (State u = 1; u < static_cast<State>(k) && !witnessed; ++u) {
            auto [y, sec] = aut.act_letter(u, xa);
            witnessed = y == xb && sec == t && rel[shifted[a]][shifted[b]][static_cast<std::size_t>(u)];
          }
          if (!witnessed) {
            rel[a][b][static_cast<std::size_t>(t)] = false;
            changed = true;
          }
        }
      }
    }
  }
  return rel;
}

ModelGraph model_graph(const Automaton& aut, int n, std::size_t limit) {
  if (n < 1) throw ValidationError("model graph order must be at least 1");
  ModelGraph m{aut, n, post_critical_sequences(aut), {}};
  const int d = aut.alphabet_size();
  const std::size_t words = checked_power(d, n, limit);
  checked_power(d, n, limit / std::max<std::size_t>(1, m.sequences.size()));
  const auto rel = model_relation(aut, m.sequences);
  const std::size_t np = m.sequences.size();

  using Key = std::tuple<std::size_t, std::size_t, State>;  // (vertex, partner vertex, color)
  std::set<std::pair<Key, Key>> seen;
  for (std::size_t a = 0; a < np; ++a) {
    for (std::size_t b = 0; b < np; ++b) {
      for (State t = 1; t < static_cast<State>(aut.state_count()); ++t) {
        if (!rel[a][b][static_cast<std::size_t>(t)]) continue;
        for (std::size_t xi = 0; xi < words; ++xi) {
          const Word x = index_word(xi, d, n);
          Word y = x;
          if (aut.act(t, y) != Automaton::trivial()) continue;
          const std::size_t from = m.vertex_index(a, x);
          const std::size_t to = m.vertex_index(b, y);
          Key k1{from, to, t};
          Key k2{to, from, aut.inverse(t)};
          if (k2 < k1) std::swap(k1, k2);
          if (seen.insert({k1, k2}).second) m.edges.push_back({a, x, b, y, t});
        }
      }
    }
  }
  return m;
}

RotationGraph inflate(const RotationGraph& tile, const ModelGraph& model, std::size_t limit) {
  const Automaton& aut = model.automaton;
  const int d = aut.alphabet_size();
  const int r = level_of(tile.vertex_count(), d);
  const int n = model.order;
  RotationGraph out = empty_level_graph(aut, r + n, limit);
  if (out.color_names() != tile.color_names()) throw DimensionMismatch("tile graph and model graph use different generating sets");
  const std::size_t copies = checked_power(d, n, limit);

  for (const auto& e : tile.edges()) {
    for (std::size_t x = 0; x < copies; ++x) {
      out.connect(out.half_edge(e.from * copies + x, e.color), out.half_edge(e.to * copies + x, tile.color_of(e.second)));
    }
  }

  std::vector<Word> truncations;
  for (const auto& p : model.sequences) truncations.push_back(p.truncate(r));
  const auto& colors = aut.colors();
  for (const auto& e : model.edges) {
    const Word& pr = truncations[e.p];
    const Word& qr = truncations[e.q];
    for (int c = 0; c < static_cast<int>(colors.size()); ++c) {
      Word img = pr;
      if (aut.act(colors[static_cast<std::size_t>(c)], img) != e.witness || img != qr) continue;
      const std::size_t from = word_index(pr, d) * copies + word_index(e.x, d);
      const std::size_t to = word_index(qr, d) * copies + word_index(e.y, d);
      out.connect(out.half_edge(from, c), out.half_edge(to, out.color_inverse(c)));
    }
  }
  return out;
}

RotationGraph complete_to_schreier(const RotationGraph& tile, const Automaton& aut) {
  const int d = aut.alphabet_size();
  const int n = level_of(tile.vertex_count(), d);
  RotationGraph g = tile;
  const auto& colors = aut.colors();
  if (static_cast<int>(colors.size()) != g.color_count()) throw DimensionMismatch("tile graph colors do not match the automaton");
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    for (int c = 0; c < g.color_count(); ++c) {
      const HalfEdge h = g.half_edge(v, c);
      if (g.present(h)) continue;
      Word w = index_word(v, d, n);
      if (aut.act(colors[static_cast<std::size_t>(c)], w) == Automaton::trivial()) continue;
      g.connect(h, g.half_edge(word_index(w, d), g.color_inverse(c)));
    }
  }
  return g;
}

InflationReport verify_inflation(const Automaton& aut, int r, int n, std::size_t limit) {
  checked_power(aut.alphabet_size(), r + n, limit);
  const RotationGraph expected = build_tile(aut, r + n, limit);
  const RotationGraph inflated = inflate(build_tile(aut, r, limit), model_graph(aut, n, limit), limit);
  InflationReport rep;
  rep.expected_edges = expected.edge_count();
  rep.inflated_edges = inflated.edge_count();
  rep.differences = incidence_diff(expected, inflated);
  rep.pass = rep.differences.empty();
  return rep;
}

std::string export_model_dot(const ModelGraph& m) {
  std::ostringstream os;
  os << "graph \"model_" << m.order << "\" {\n";
  const int d = m.automaton.alphabet_size();
  std::size_t per = 1;
  for (int i = 0; i < m.order; ++i) per *= static_cast<std::size_t>(d);
  for (std::size_t p = 0; p < m.sequences.size(); ++p) {
    for (std::size_t x = 0; x < per; ++x) os << "  \"" << m.vertex_label(p, index_word(x, d, m.order)) << "\";\n";
  }
  for (const auto& e : m.edges) {
    os << "  \"" << m.vertex_label(e.p, e.x) << "\" -- \"" << m.vertex_label(e.q, e.y) << "\" [color=\""
       << m.automaton.name(e.witness) << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace asg
