#pragma once

#include <utility>

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>

#include "asg/algebra/cyclotomic.hpp"
#include "asg/algebra/polynomial.hpp"

namespace Eigen {

template <class S>
struct NumTraits<asg::Polynomial<S>> : GenericNumTraits<asg::Polynomial<S>> {
  using Real = asg::Polynomial<S>;
  using NonInteger = asg::Polynomial<S>;
  using Nested = asg::Polynomial<S>;
  using Literal = asg::Polynomial<S>;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 8,
    MulCost = 32
  };
};

template <>
struct NumTraits<asg::CycInt> : GenericNumTraits<asg::CycInt> {
  using Real = asg::CycInt;
  using NonInteger = asg::CycInt;
  using Nested = asg::CycInt;
  using Literal = asg::CycInt;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 4,
    MulCost = 16
  };
};

}  // namespace Eigen

namespace asg {

template <class S>
using RingMatrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;

using IntMatrix = RingMatrix<Integer>;
using IntPolyMatrix = RingMatrix<IntPoly>;
using CycPolyMatrix = RingMatrix<CycPoly>;

/// Block row-major Kronecker product.
template <class S>
RingMatrix<S> kronecker(const RingMatrix<S>& a, const RingMatrix<S>& b) {
  RingMatrix<S> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      for (Eigen::Index k = 0; k < b.rows(); ++k) {
        for (Eigen::Index l = 0; l < b.cols(); ++l) {
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
      }
    }
  }
  return out;
}

/// Fraction-free (Bareiss) determinant over an integral domain.
/// Pivots on the first nonzero entry of the column; the 0x0 determinant is 1.
template <class S>
S determinant(RingMatrix<S> m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("determinant of a non-square matrix");
  const Eigen::Index n = m.rows();
  if (n == 0) return S(1);
  bool negate = false;
  S prev(1);
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    Eigen::Index pivot = k;
    while (pivot < n && is_zero(m(pivot, k))) ++pivot;
    if (pivot == n) return S(0);
    if (pivot != k) {
      m.row(k).swap(m.row(pivot));
      negate = !negate;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        S num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        auto q = exact_divide(num, prev);
        if (!q) throw ExactDivisionFailure("Bareiss step did not divide exactly");
        m(i, j) = std::move(*q);
      }
      m(i, k) = S(0);
    }
    prev = m(k, k);
  }
  S det = m(n - 1, n - 1);
  return negate ? S(0) - det : det;
}

/// Entrywise equality; also compares shapes.
template <class A, class B>
bool same_entries(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (!(a(i, j) == b(i, j))) return false;
    }
  }
  return true;
}

/// Entrywise map into another scalar ring.
template <class S, class F>
auto map_entries(const RingMatrix<S>& m, F&& f) {
  using Out = decltype(f(std::declval<const S&>()));
  RingMatrix<Out> out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = f(m(i, j));
  }
  return out;
}

/// I - t*A + t^2*Q as a polynomial matrix.
template <class S>
RingMatrix<Polynomial<S>> ihara_bass_matrix(const RingMatrix<S>& a, const RingMatrix<S>& q) {
  if (a.rows() != a.cols() || q.rows() != a.rows() || q.cols() != a.cols()) {
    throw DimensionMismatch("adjacency and degree matrices differ in shape");
  }
  RingMatrix<Polynomial<S>> out(a.rows(), a.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      S one = i == j ? S(1) : S(0);
      out(i, j) = Polynomial<S>(std::vector<S>{one, S(0) - a(i, j), q(i, j)});
    }
  }
  return out;
}

}  // namespace asg
