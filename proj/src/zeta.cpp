#include "asg/zeta.hpp"

#include <algorithm>
#include <numeric>

#include "asg/algebra/charpoly.hpp"

namespace asg {

namespace {

/// Regular graphs with more vertices than this use the characteristic polynomial path.
constexpr std::size_t kBareissVertexLimit = 24;

void require_connected(const RotationGraph& g) {
  if (!is_connected(g)) throw DisconnectedGraph("zeta function of a disconnected graph");
}

IntPoly with_rank_factor(const IntPoly& det, const RotationGraph& g) {
  return times_one_minus_t2_power(det, static_cast<int>(graph_stats(g).rank_minus_one));
}

/// det(I - tA + q t^2 I) = sum_k a_k (1 + q t^2)^k t^(n-k) where det(xI - A) = sum_k a_k x^k.
IntPoly scalar_q_determinant(const IntMatrix& a, long long q) {
  const IntPoly chi = characteristic_polynomial(a);
  const auto n = static_cast<int>(a.rows());
  const IntPoly s(std::vector<Integer>{Integer(1), Integer(0), Integer(q)});
  IntPoly sk(Integer(1));
  IntPoly out;
  for (int k = 0; k <= n; ++k) {
    const Integer& ak = chi.coefficient(static_cast<std::size_t>(k));
    if (!is_zero(ak)) out += IntPoly::monomial(ak, n - k) * sk;
    sk *= s;
  }
  return out;
}

std::vector<HalfEdge> present_half_edges(const RotationGraph& g) {
  std::vector<HalfEdge> out;
  for (HalfEdge h = 0; h < g.half_edge_capacity(); ++h) {
    if (!g.present(h)) continue;
    if (g.vertex_of(g.partner(h)) == g.vertex_of(h)) {
      throw LoopsUnsupported("non-backtracking matrix of a graph with loops at vertex " + g.label(g.vertex_of(h)));
    }
    out.push_back(h);
  }
  return out;
}

/// Successor lists of the non-backtracking operator, indexed like present_half_edges.
std::vector<std::vector<std::size_t>> hashimoto_successors(const RotationGraph& g) {
  const std::vector<HalfEdge> arcs = present_half_edges(g);
  std::vector<std::size_t> index(g.half_edge_capacity(), 0);
  for (std::size_t i = 0; i < arcs.size(); ++i) index[arcs[i]] = i;
  std::vector<std::vector<std::size_t>> next(arcs.size());
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    const HalfEdge back = g.partner(arcs[i]);
    const std::size_t head = g.vertex_of(back);
    for (int c = 0; c < g.color_count(); ++c) {
      const HalfEdge h = g.half_edge(head, c);
      if (g.present(h) && h != back) next[i].push_back(index[h]);
    }
  }
  return next;
}

}  // namespace

IntPoly ihara_zeta_reciprocal_bareiss(const RotationGraph& g) {
  require_connected(g);
  return with_rank_factor(determinant(ihara_bass_matrix(adjacency_matrix(g), degree_minus_one_matrix(g))), g);
}

IntPoly ihara_zeta_reciprocal(const RotationGraph& g) {
  require_connected(g);
  const GraphStats s = graph_stats(g);
  const bool regular = std::adjacent_find(s.degree.begin(), s.degree.end(), std::not_equal_to<>()) == s.degree.end();
  if (!regular || s.vertex_count <= kBareissVertexLimit) return ihara_zeta_reciprocal_bareiss(g);
  return with_rank_factor(scalar_q_determinant(adjacency_matrix(g), s.degree.front() - 1), g);
}

IntMatrix hashimoto_matrix(const RotationGraph& g) {
  const auto next = hashimoto_successors(g);
  const auto n = static_cast<Eigen::Index>(next.size());
  IntMatrix b = IntMatrix::Zero(n, n);
  for (std::size_t i = 0; i < next.size(); ++i) {
    for (std::size_t j : next[i]) b(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = 1;
  }
  return b;
}

IntPoly hashimoto_zeta_reciprocal(const RotationGraph& g) {
  std::vector<Integer> c = characteristic_polynomial(hashimoto_matrix(g)).coefficients();
  c.resize(present_half_edges(g).size() + 1);
  std::reverse(c.begin(), c.end());
  return IntPoly(std::move(c));
}

std::vector<Integer> prime_cycle_counts(const RotationGraph& g, int length) {
  const auto next = hashimoto_successors(g);
  const std::size_t n = next.size();
  std::vector<std::vector<Integer>> power(n, std::vector<Integer>(n, Integer(0)));
  for (std::size_t i = 0; i < n; ++i) power[i][i] = 1;
  std::vector<Integer> counts;
  for (int m = 1; m <= length; ++m) {
    std::vector<std::vector<Integer>> step(n, std::vector<Integer>(n, Integer(0)));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (is_zero(power[i][j])) continue;
        for (std::size_t k : next[j]) step[i][k] += power[i][j];
      }
    }
    power = std::move(step);
    Integer trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += power[i][i];
    counts.push_back(trace);
  }
  return counts;
}

bool log_series_matches(const IntPoly& reciprocal, const std::vector<Integer>& counts) {
  const std::size_t order = counts.size() + 1;
  std::vector<Integer> series(order, Integer(0));
  for (std::size_t m = 0; m < counts.size(); ++m) series[m + 1] = counts[m];
  const IntPoly lhs = (IntPoly::variable() * reciprocal.derivative()).truncated(order);
  const IntPoly rhs = (-(reciprocal * IntPoly(std::move(series)))).truncated(order);
  return lhs == rhs;
}

ABundle a_matrices(const CoveringMap& c, const DeckGroup& g, const SheetLabeling& s) {
  if (!is_normal(c, g)) throw NotNormal("A-matrices need a normal covering");
  ABundle ab;
  const auto n = static_cast<Eigen::Index>(c.base.vertex_count());
  ab.a.assign(g.order(), IntMatrix::Zero(n, n));
  for (std::size_t i = 0; i < c.base.vertex_count(); ++i) {
    const std::size_t x = s.identity_lift[i];
    for (int col = 0; col < c.total.color_count(); ++col) {
      const HalfEdge h = c.total.half_edge(x, col);
      if (!c.total.present(h)) continue;
      const std::size_t y = c.total.vertex_of(c.total.partner(h));
      ab.a[s.sheet_of[y]](static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(c.vertex_map[y])) += 1;
    }
  }
  ab.q = degree_minus_one_matrix(c.base);
  ab.base_rank_minus_one = graph_stats(c.base).rank_minus_one;
  ab.cover_rank_minus_one = graph_stats(c.total).rank_minus_one;
  ab.sheets = g.order();
  return ab;
}

CharacterTable character_table(const DeckGroup& g) {
  if (!g.is_abelian()) throw NonAbelianUnsupported("characters are implemented for abelian deck groups only");
  const std::size_t order = g.order();
  CharacterTable t;
  std::vector<bool> in_span(order, false);
  in_span[0] = true;
  std::size_t span = 1;
  while (span < order) {
    std::size_t best = order;
    std::size_t best_order = 0;
    for (std::size_t e = 0; e < order; ++e) {
      if (in_span[e]) continue;
      const std::size_t k = g.element_order(e);
      if (k <= best_order) continue;
      bool meets = false;
      for (std::size_t j = 1; j < k && !meets; ++j) meets = in_span[g.power(e, j)];
      if (!meets) {
        best = e;
        best_order = k;
      }
    }
    if (best == order) throw Error("cyclic decomposition of the deck group failed");
    std::vector<bool> grown = in_span;
    for (std::size_t h = 0; h < order; ++h) {
      if (!in_span[h]) continue;
      for (std::size_t j = 0; j < best_order; ++j) grown[g.table[g.power(best, j)][h]] = true;
    }
    in_span = std::move(grown);
    span *= best_order;
    t.generators.push_back(best);
    t.orders.push_back(static_cast<int>(best_order));
  }
  t.value_order = std::accumulate(t.orders.begin(), t.orders.end(), 1, [](int a, int b) { return std::lcm(a, b); });

  const std::size_t rank = t.orders.size();
  t.exponents.assign(order, std::vector<int>(rank, 0));
  std::vector<int> coords(rank, 0);
  for (std::size_t idx = 0; idx < order; ++idx) {
    std::size_t e = 0;
    for (std::size_t i = 0; i < rank; ++i) e = g.table[g.power(t.generators[i], static_cast<std::size_t>(coords[i]))][e];
    t.exponents[e] = coords;
    for (std::size_t i = rank; i-- > 0;) {
      if (++coords[i] < t.orders[i]) break;
      coords[i] = 0;
    }
  }

  const int big = t.value_order;
  for (std::size_t chi = 0; chi < order; ++chi) {
    std::vector<int> k(rank);
    std::size_t rest = chi;
    for (std::size_t i = rank; i-- > 0;) {
      k[i] = static_cast<int>(rest % static_cast<std::size_t>(t.orders[i]));
      rest /= static_cast<std::size_t>(t.orders[i]);
    }
    std::vector<CycInt> row;
    for (std::size_t e = 0; e < order; ++e) {
      long long power = 0;
      for (std::size_t i = 0; i < rank; ++i) power += static_cast<long long>(k[i]) * t.exponents[e][i] * (big / t.orders[i]);
      row.push_back(big == 1 ? CycInt(1) : CycInt::root_of_unity(big, power % big));
    }
    t.values.push_back(std::move(row));
  }
  return t;
}

bool orthogonality_holds(const CharacterTable& t) {
  const auto n = static_cast<long long>(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t j = 0; j < t.size(); ++j) {
      CycInt sum(0);
      for (std::size_t e = 0; e < t.values[i].size(); ++e) sum += t.values[i][e] * t.values[j][e].conjugate();
      if (sum != CycInt(i == j ? n : 0)) return false;
    }
  }
  return true;
}

int l_exponent(const ABundle& ab, bool trivial_character) {
  if (trivial_character) return static_cast<int>(ab.base_rank_minus_one);
  if (ab.sheets < 2) throw ValidationError("nontrivial character on a one-sheeted covering");
  const long long diff = ab.cover_rank_minus_one - ab.base_rank_minus_one;
  const auto step = static_cast<long long>(ab.sheets) - 1;
  if (diff % step != 0) throw ExactDivisionFailure("rank difference is not divisible by the number of nontrivial characters");
  return static_cast<int>(diff / step);
}

RingMatrix<CycInt> twisted_adjacency(const ABundle& ab, const CharacterTable& t, std::size_t character) {
  const Eigen::Index n = ab.q.rows();
  RingMatrix<CycInt> out(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      CycInt sum(0);
      for (std::size_t e = 0; e < ab.a.size(); ++e) {
        if (!is_zero(ab.a[e](i, j))) sum += t.values[character][e] * CycInt(ab.a[e](i, j));
      }
      out(i, j) = sum;
    }
  }
  return out;
}

CycPoly artin_l_reciprocal(const ABundle& ab, const CharacterTable& t, std::size_t character) {
  const RingMatrix<CycInt> q = map_entries(ab.q, [](const Integer& v) { return CycInt(v); });
  const CycPoly det = determinant(ihara_bass_matrix(twisted_adjacency(ab, t, character), q));
  return times_one_minus_t2_power(det, l_exponent(ab, character == 0));
}

ProductReport verify_product_formula(const CoveringMap& c) {
  ProductReport r;
  r.sheets = check_unramified(c);
  r.deck = deck_group(c);
  if (r.deck.order() != r.sheets) {
    throw NotNormal("covering has " + std::to_string(r.deck.order()) + " deck transformations for " + std::to_string(r.sheets) + " sheets");
  }
  r.characters = character_table(r.deck);
  r.labeling = label_sheets(c, r.deck, spanning_tree(c.base));
  r.bundle = a_matrices(c, r.deck, r.labeling);
  bool pass = true;

  IntMatrix sum = IntMatrix::Zero(r.bundle.q.rows(), r.bundle.q.cols());
  for (const auto& a : r.bundle.a) sum += a;
  if (!same_entries(sum, adjacency_matrix(c.base))) {
    r.notes.push_back("sum of A-matrices differs from the base adjacency matrix");
    pass = false;
  }
  if (!orthogonality_holds(r.characters)) {
    r.notes.push_back("character table fails orthogonality");
    pass = false;
  }

  CycPoly product(CycInt(1));
  for (std::size_t chi = 0; chi < r.characters.size(); ++chi) {
    r.exponents.push_back(l_exponent(r.bundle, chi == 0));
    r.factors.push_back(artin_l_reciprocal(r.bundle, r.characters, chi));
    product *= r.factors.back();
  }
  r.cover_zeta = ihara_zeta_reciprocal(c.total);
  r.base_zeta = ihara_zeta_reciprocal(c.base);
  if (r.factors.front() != to_cyc_poly(r.base_zeta)) {
    r.notes.push_back("trivial-character factor differs from the base zeta reciprocal");
    pass = false;
  }
  try {
    r.product = to_integer_poly(product);
  } catch (const NotRationalInteger& e) {
    r.notes.push_back(std::string("product of L-functions: ") + e.what());
    pass = false;
  }
  if (r.product != r.cover_zeta) {
    r.notes.push_back("product of L-functions differs from the total graph's zeta reciprocal");
    pass = false;
  }
  r.pass = pass;
  return r;
}

}  // namespace asg
