#include "asg/covering.hpp"

#include <algorithm>
#include <deque>
#include <optional>
#include <set>
#include <sstream>

#include "asg/schreier.hpp"

namespace asg {

namespace {

constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

/// Unique color-preserving automorphism over the base sending root to image, if any.
std::optional<std::vector<std::size_t>> extend(const CoveringMap& c, std::size_t root, std::size_t image) {
  const RotationGraph& g = c.total;
  std::vector<std::size_t> phi(g.vertex_count(), kUnset);
  std::vector<bool> hit(g.vertex_count(), false);
  phi[root] = image;
  hit[image] = true;
  std::deque<std::size_t> queue{root};
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    const std::size_t w = phi[v];
    if (c.vertex_map[v] != c.vertex_map[w]) return std::nullopt;
    for (int col = 0; col < g.color_count(); ++col) {
      const HalfEdge h = g.half_edge(v, col);
      const HalfEdge k = g.half_edge(w, col);
      if (g.present(h) != g.present(k)) return std::nullopt;
      if (!g.present(h)) continue;
      const HalfEdge hp = g.partner(h);
      const HalfEdge kp = g.partner(k);
      if (g.color_of(hp) != g.color_of(kp) || (hp == h) != (kp == k)) return std::nullopt;
      const std::size_t x = g.vertex_of(hp);
      const std::size_t y = g.vertex_of(kp);
      if (phi[x] == kUnset) {
        if (hit[y]) return std::nullopt;
        phi[x] = y;
        hit[y] = true;
        queue.push_back(x);
      } else if (phi[x] != y) {
        return std::nullopt;
      }
    }
  }
  if (std::find(phi.begin(), phi.end(), kUnset) != phi.end()) return std::nullopt;
  return phi;
}

std::string edge_text(const RotationGraph& g, const Edge& e) {
  return g.label(e.from) + " -" + g.color_name(e.color) + "- " + g.label(e.to);
}

std::string permutation_text(const std::vector<int>& p) {
  std::string out = "[";
  for (std::size_t i = 0; i < p.size(); ++i) out += (i ? " " : "") + std::to_string(p[i]);
  return out + "]";
}

}  // namespace

CoveringMap level_covering(const Automaton& aut, int upper, int lower, std::size_t limit) {
  if (lower < 0 || upper < lower) throw ValidationError("covering levels must satisfy 0 <= lower <= upper");
  CoveringMap c{build_schreier(aut, upper, limit), build_schreier(aut, lower, limit), {}};
  const std::size_t fiber = checked_power(aut.alphabet_size(), upper - lower, limit);
  c.vertex_map.resize(c.total.vertex_count());
  for (std::size_t v = 0; v < c.vertex_map.size(); ++v) c.vertex_map[v] = v / fiber;
  return c;
}

std::size_t check_unramified(const CoveringMap& c) {
  const RotationGraph& t = c.total;
  const RotationGraph& b = c.base;
  if (c.vertex_map.size() != t.vertex_count()) throw DimensionMismatch("vertex map does not cover the total graph");
  if (t.color_names() != b.color_names()) throw DimensionMismatch("total and base graphs use different colors");
  std::vector<std::size_t> fiber(b.vertex_count(), 0);
  for (std::size_t v = 0; v < t.vertex_count(); ++v) {
    const std::size_t u = c.vertex_map[v];
    const int vi = static_cast<int>(v);
    if (u >= b.vertex_count()) throw NotACovering(vi, "image outside the base graph");
    ++fiber[u];
    for (int col = 0; col < t.color_count(); ++col) {
      const HalfEdge h = t.half_edge(v, col);
      const HalfEdge k = b.half_edge(u, col);
      if (t.present(h) != b.present(k)) throw NotACovering(vi, "color " + t.color_name(col) + " present on one side only");
      if (!t.present(h)) continue;
      const HalfEdge hp = t.partner(h);
      const HalfEdge kp = b.partner(k);
      if (t.color_of(hp) != b.color_of(kp) || c.vertex_map[t.vertex_of(hp)] != b.vertex_of(kp)) {
        throw NotACovering(vi, "edge of color " + t.color_name(col) + " does not project onto the base edge");
      }
    }
  }
  if (fiber.empty()) return 0;
  for (std::size_t u = 0; u < fiber.size(); ++u) {
    if (fiber[u] != fiber[0]) {
      const auto first = std::find(c.vertex_map.begin(), c.vertex_map.end(), u);
      const int v = first == c.vertex_map.end() ? 0 : static_cast<int>(first - c.vertex_map.begin());
      throw NotACovering(v, "fibers have different sizes");
    }
  }
  return fiber[0];
}

std::size_t DeckGroup::element_of_image(std::size_t image_of_root) const {
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (elements[i][root] == image_of_root) return i;
  }
  throw ValidationError("no deck element sends the root to " + std::to_string(image_of_root));
}

std::size_t DeckGroup::inverse(std::size_t g) const {
  for (std::size_t h = 0; h < order(); ++h) {
    if (table[g][h] == 0) return h;
  }
  throw ValidationError("deck element without inverse");
}

std::size_t DeckGroup::power(std::size_t g, std::size_t k) const {
  std::size_t out = 0;
  for (std::size_t i = 0; i < k; ++i) out = table[g][out];
  return out;
}

std::size_t DeckGroup::element_order(std::size_t g) const {
  std::size_t k = 1;
  for (std::size_t x = g; x != 0; x = table[g][x]) ++k;
  return k;
}

bool DeckGroup::is_abelian() const {
  for (std::size_t i = 0; i < order(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (table[i][j] != table[j][i]) return false;
    }
  }
  return true;
}

DeckGroup deck_group(const CoveringMap& c) {
  if (c.total.vertex_count() == 0) throw ValidationError("empty total graph");
  if (!is_connected(c.total)) throw DisconnectedGraph("deck group needs a connected total graph");
  DeckGroup dg;
  for (std::size_t v = 0; v < c.vertex_map.size(); ++v) {
    if (c.vertex_map[v] == 0) {
      dg.root = v;
      break;
    }
  }
  for (std::size_t w = 0; w < c.vertex_map.size(); ++w) {
    if (c.vertex_map[w] != c.vertex_map[dg.root]) continue;
    if (auto phi = extend(c, dg.root, w)) dg.elements.push_back(std::move(*phi));
  }
  std::vector<std::size_t> by_image(c.total.vertex_count(), kUnset);
  for (std::size_t i = 0; i < dg.order(); ++i) by_image[dg.elements[i][dg.root]] = i;
  dg.table.assign(dg.order(), std::vector<std::size_t>(dg.order()));
  for (std::size_t i = 0; i < dg.order(); ++i) {
    for (std::size_t j = 0; j < dg.order(); ++j) dg.table[i][j] = by_image[dg.elements[i][dg.elements[j][dg.root]]];
  }
  return dg;
}

bool is_normal(const CoveringMap& c, const DeckGroup& g) { return g.order() == check_unramified(c); }

bool is_normal(const CoveringMap& c) { return is_normal(c, deck_group(c)); }

std::vector<Edge> SpanningTree::non_tree_edges(const RotationGraph& g) const {
  std::vector<Edge> out;
  for (const auto& e : g.edges()) {
    if (!in_tree[e.first]) out.push_back(e);
  }
  return out;
}

SpanningTree spanning_tree(const RotationGraph& g, const std::function<bool(HalfEdge)>& allowed) {
  SpanningTree t;
  t.parent.assign(g.vertex_count(), kNoHalfEdge);
  t.in_tree.assign(g.half_edge_capacity(), false);
  if (g.vertex_count() == 0) return t;
  std::vector<bool> seen(g.vertex_count(), false);
  seen[0] = true;
  t.order.push_back(0);
  for (std::size_t i = 0; i < t.order.size(); ++i) {
    const std::size_t v = t.order[i];
    for (int col = 0; col < g.color_count(); ++col) {
      const HalfEdge h = g.half_edge(v, col);
      if (!g.present(h) || (allowed && !allowed(h))) continue;
      const HalfEdge p = g.partner(h);
      const std::size_t w = g.vertex_of(p);
      if (seen[w]) continue;
      seen[w] = true;
      t.parent[w] = h;
      t.in_tree[h] = true;
      t.in_tree[p] = true;
      t.order.push_back(w);
    }
  }
  return t;
}

SheetLabeling label_sheets(const CoveringMap& c, const DeckGroup& g, SpanningTree tree) {
  if (!is_normal(c, g)) throw NotNormal("sheets are labeled by deck elements only for normal coverings");
  if (!tree.spans()) throw ValidationError("spanning tree does not reach every base vertex");
  SheetLabeling s;
  s.identity_lift.assign(c.base.vertex_count(), kUnset);
  s.identity_lift[tree.root] = g.root;
  for (std::size_t v : tree.order) {
    if (v == tree.root) continue;
    const HalfEdge h = tree.parent[v];
    const std::size_t up = s.identity_lift[c.base.vertex_of(h)];
    s.identity_lift[v] = c.total.vertex_of(c.total.partner(c.total.half_edge(up, c.base.color_of(h))));
  }
  s.sheet_of.assign(c.total.vertex_count(), kUnset);
  for (std::size_t e = 0; e < g.order(); ++e) {
    for (std::size_t lift : s.identity_lift) s.sheet_of[g.elements[e][lift]] = e;
  }
  s.tree = std::move(tree);
  return s;
}

std::size_t frobenius(const CoveringMap& c, const SheetLabeling& s, HalfEdge h) {
  const std::size_t start = s.identity_lift[c.base.vertex_of(h)];
  return s.sheet_of[c.total.vertex_of(c.total.partner(c.total.half_edge(start, c.base.color_of(h))))];
}

std::vector<std::vector<int>> last_letter_action(const CoveringMap& c, const DeckGroup& g, int d) {
  std::vector<std::vector<int>> out;
  const auto du = static_cast<std::size_t>(d);
  for (const auto& phi : g.elements) {
    std::vector<int> perm(du);
    for (std::size_t x = 0; x < du; ++x) perm[x] = static_cast<int>(phi[g.root + x] % du);
    for (std::size_t v = 0; v < phi.size(); ++v) {
      if (phi[v] != (v / du) * du + static_cast<std::size_t>(perm[v % du])) {
        throw ValidationError("deck element moves more than the last letter at vertex " + c.total.label(v));
      }
    }
    out.push_back(std::move(perm));
  }
  return out;
}

const char* to_string(GaloisVerdict v) {
  switch (v) {
    case GaloisVerdict::Pass:
      return "PASS";
    case GaloisVerdict::Fail:
      return "FAIL";
    case GaloisVerdict::HypothesisNotMet:
      return "HYPOTHESIS NOT MET";
  }
  return "FAIL";
}

GaloisReport verify_galois_theorem(const Automaton& aut, int n, std::size_t limit) {
  if (n < 0) throw ValidationError("level must be non-negative");
  GaloisReport r;
  r.level = n;
  r.alphabet_size = aut.alphabet_size();
  const int d = r.alphabet_size;
  const PermutationGroup psi = root_permutation_group(aut);
  r.root_group_order = psi.order();
  r.bounded = activity_class(aut).kind == ActivityKind::Bounded;
  r.level_transitive = is_level_transitive(aut, n + 1, limit);

  const CoveringMap c = level_covering(aut, n + 1, n, limit);
  r.sheets = check_unramified(c);
  bool hypotheses = true;
  if (r.root_group_order != static_cast<std::size_t>(d)) {
    r.notes.push_back("root permutation group has order " + std::to_string(r.root_group_order) + ", alphabet size " + std::to_string(d));
    hypotheses = false;
  }
  if (!r.bounded) {
    r.notes.push_back("automaton is not bounded");
    hypotheses = false;
  }
  if (!r.level_transitive) {
    r.notes.push_back("action is not transitive on level " + std::to_string(n + 1));
    r.verdict = GaloisVerdict::HypothesisNotMet;
    return r;
  }

  const DeckGroup dg = deck_group(c);
  r.deck_order = dg.order();
  r.normal = dg.order() == r.sheets;
  bool pass = true;
  try {
    r.deck_action = last_letter_action(c, dg, d);
  } catch (const ValidationError& e) {
    r.notes.push_back(e.what());
    pass = false;
  }
  if (!hypotheses) {
    r.verdict = GaloisVerdict::HypothesisNotMet;
    return r;
  }
  if (!r.normal) {
    r.notes.push_back("covering is not normal");
    r.verdict = GaloisVerdict::Fail;
    return r;
  }
  if (pass) {
    std::vector<std::vector<int>> action = r.deck_action;
    std::sort(action.begin(), action.end());
    if (action != psi.elements) {
      r.notes.push_back("deck group action on the last letter differs from the root permutation group");
      pass = false;
    }
  }

  const RotationGraph tile = build_tile(aut, n, limit);
  SpanningTree tree = spanning_tree(c.base, [&](HalfEdge h) { return tile.present(h); });
  if (!tree.spans()) {
    r.notes.push_back("tile graph of level " + std::to_string(n) + " is disconnected");
    r.verdict = GaloisVerdict::Fail;
    return r;
  }
  const SheetLabeling sheets = label_sheets(c, dg, std::move(tree));
  std::set<std::size_t> generated{0};
  for (const auto& e : sheets.tree.non_tree_edges(c.base)) {
    FrobeniusRow row;
    row.edge = edge_text(c.base, e);
    const State s = aut.colors()[static_cast<std::size_t>(e.color)];
    const State restricted = aut.restriction(s, index_word(e.from, d, n));
    row.restriction = aut.name(restricted);
    row.element = frobenius(c, sheets, e.first);
    if (!r.deck_action.empty()) row.permutation = r.deck_action[row.element];
    row.expected = aut.state(restricted).permutation;
    if (row.permutation != row.expected) pass = false;
    generated.insert(row.element);
    r.rows.push_back(std::move(row));
  }
  // Close the Frobenius elements under composition.
  for (bool grew = true; grew;) {
    grew = false;
    for (std::size_t a : std::vector<std::size_t>(generated.begin(), generated.end())) {
      for (std::size_t b : std::vector<std::size_t>(generated.begin(), generated.end())) grew |= generated.insert(dg.table[a][b]).second;
    }
  }
  if (generated.size() != dg.order()) {
    r.notes.push_back("Frobenius elements generate a proper subgroup of the deck group");
    pass = false;
  }
  r.verdict = pass ? GaloisVerdict::Pass : GaloisVerdict::Fail;
  return r;
}

std::string format_galois_report(const GaloisReport& r) {
  std::ostringstream os;
  os << "level " << r.level << " -> " << r.level + 1 << ": " << to_string(r.verdict) << "\n";
  os << "  alphabet size " << r.alphabet_size << ", root permutation group order " << r.root_group_order << "\n";
  os << "  bounded " << (r.bounded ? "yes" : "no") << ", level-transitive " << (r.level_transitive ? "yes" : "no") << "\n";
  os << "  sheets " << r.sheets << ", deck group order " << r.deck_order << ", " << (r.normal ? "normal" : "non-normal") << "\n";
  for (std::size_t i = 0; i < r.deck_action.size(); ++i) {
    os << "  deck element " << i << " acts on the last letter as " << permutation_text(r.deck_action[i]) << "\n";
  }
  for (const auto& row : r.rows) {
    os << "  frobenius " << row.edge << " restriction " << row.restriction << " element " << row.element << " "
       << permutation_text(row.permutation) << " expected " << permutation_text(row.expected) << "\n";
  }
  for (const auto& note : r.notes) os << "  note: " << note << "\n";
  return os.str();
}

}  // namespace asg
