#include "asg/oracles.hpp"

#include <algorithm>
#include <numeric>

namespace asg::oracle {

IntPolyMatrix random_poly_matrix(std::mt19937& rng, int size, int max_degree, int max_coefficient) {
  std::uniform_int_distribution<int> degree(-1, max_degree);
  std::uniform_int_distribution<int> coeff(-max_coefficient, max_coefficient);
  IntPolyMatrix m(size, size);
  for (int i = 0; i < size; ++i) {
    for (int j = 0; j < size; ++j) {
      std::vector<Integer> c(static_cast<std::size_t>(degree(rng) + 1));
      for (auto& v : c) v = coeff(rng);
      m(i, j) = IntPoly(std::move(c));
    }
  }
  return m;
}

namespace {

void extend_walk(const RotationGraph& g, HalfEdge first, HalfEdge last, int steps, int length, std::vector<Integer>& counts) {
  const HalfEdge back = g.partner(last);
  const std::size_t here = g.vertex_of(back);
  if (here == g.vertex_of(first) && first != back) counts[static_cast<std::size_t>(steps - 1)] += 1;
  if (steps == length) return;
  for (int c = 0; c < g.color_count(); ++c) {
    const HalfEdge h = g.half_edge(here, c);
    if (g.present(h) && h != back) extend_walk(g, first, h, steps + 1, length, counts);
  }
}

}  // namespace

std::vector<Integer> closed_walk_counts(const RotationGraph& g, int length) {
  std::vector<Integer> counts(static_cast<std::size_t>(length), Integer(0));
  for (HalfEdge h = 0; h < g.half_edge_capacity(); ++h) {
    if (!g.present(h)) continue;
    if (g.vertex_of(g.partner(h)) == g.vertex_of(h)) throw LoopsUnsupported("walk enumeration on a graph with loops");
    extend_walk(g, h, h, 1, length, counts);
  }
  return counts;
}

bool cyclic_families_equivalent(const std::vector<IntMatrix>& ours, const std::vector<IntMatrix>& theirs) {
  const auto m = static_cast<int>(ours.size());
  if (theirs.size() != ours.size() || m == 0) return false;
  const Eigen::Index n = ours[0].rows();
  std::vector<int> units;
  for (int u = 1; u <= m; ++u) {
    if (std::gcd(u, m) == 1) units.push_back(u % m);
  }
  std::vector<Eigen::Index> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    for (int u : units) {
      // Sheet shifts s_i, with s_0 fixed to 0 since a common shift changes nothing.
      std::vector<int> shift(static_cast<std::size_t>(n), 0);
      while (true) {
        bool ok = true;
        for (int k = 0; k < m && ok; ++k) {
          for (Eigen::Index i = 0; i < n && ok; ++i) {
            for (Eigen::Index j = 0; j < n && ok; ++j) {
              const int moved = ((k + shift[static_cast<std::size_t>(j)] - shift[static_cast<std::size_t>(i)]) % m + m) % m;
              ok = ours[static_cast<std::size_t>(moved)](i, j) ==
                   theirs[static_cast<std::size_t>((u * k) % m)](perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
            }
          }
        }
        if (ok) return true;
        std::size_t pos = 1;
        while (pos < shift.size() && ++shift[pos] == m) shift[pos++] = 0;
        if (pos >= shift.size()) break;
      }
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace asg::oracle
