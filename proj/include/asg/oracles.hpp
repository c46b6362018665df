#pragma once

#include <random>
#include <vector>

#include "asg/algebra/ring_matrix.hpp"
#include "asg/rotation_graph.hpp"

/// Slow, independent reference computations used to cross-check the main algorithms.
namespace asg::oracle {

/// Cofactor expansion along the first row.
template <class S>
S laplace_determinant(const RingMatrix<S>& m) {
  const Eigen::Index n = m.rows();
  if (n == 0) return S(1);
  if (n == 1) return m(0, 0);
  S total(0);
  for (Eigen::Index j = 0; j < n; ++j) {
    RingMatrix<S> minor(n - 1, n - 1);
    for (Eigen::Index r = 1; r < n; ++r) {
      Eigen::Index c2 = 0;
      for (Eigen::Index c = 0; c < n; ++c) {
        if (c == j) continue;
        minor(r - 1, c2++) = m(r, c);
      }
    }
    S term = m(0, j) * laplace_determinant(minor);
    total = (j % 2 == 0) ? total + term : total - term;
  }
  return total;
}

/// Square matrix of integer polynomials with the given size, degree bound and coefficient range.
IntPolyMatrix random_poly_matrix(std::mt19937& rng, int size, int max_degree, int max_coefficient);

/// N_1..N_L by depth-first enumeration of closed non-backtracking tailless walks.
std::vector<Integer> closed_walk_counts(const RotationGraph& g, int length);

/// Whether two families of matrices indexed by the powers of a generator of Z/m
/// agree after permuting the base vertices, moving each vertex's lift to another
/// sheet and applying an automorphism of Z/m.
bool cyclic_families_equivalent(const std::vector<IntMatrix>& ours, const std::vector<IntMatrix>& theirs);

}  // namespace asg::oracle
