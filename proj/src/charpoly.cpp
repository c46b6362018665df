#include "asg/algebra/charpoly.hpp"

#include <cstdint>

namespace asg {

namespace {

using u64 = std::uint64_t;

u64 power_mod(u64 b, u64 e, u64 p) {
  u64 r = 1;
  b %= p;
  while (e) {
    if (e & 1U) r = r * b % p;
    b = b * b % p;
    e >>= 1U;
  }
  return r;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 q = 2; q * q <= n; ++q) {
    if (n % q == 0) return false;
  }
  return true;
}

u64 to_residue(const Integer& v, u64 p) {
  Integer r = v % Integer(p);
  if (r < 0) r += p;
  return static_cast<u64>(r);
}

/// Coefficients of det(xI - M) mod p, low degree first.
std::vector<u64> charpoly_mod(std::vector<std::vector<u64>> h, u64 p) {
  const std::size_t n = h.size();
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t i = j + 1;
    while (i < n && h[i][j] == 0) ++i;
    if (i == n) continue;
    if (i != j + 1) {
      std::swap(h[i], h[j + 1]);
      for (auto& row : h) std::swap(row[i], row[j + 1]);
    }
    const u64 inv = power_mod(h[j + 1][j], p - 2, p);
    for (std::size_t k = j + 2; k < n; ++k) {
      if (h[k][j] == 0) continue;
      const u64 u = h[k][j] * inv % p;
      for (std::size_t c = 0; c < n; ++c) h[k][c] = (h[k][c] + (p - u) * h[j + 1][c]) % p;
      for (std::size_t r = 0; r < n; ++r) h[r][j + 1] = (h[r][j + 1] + u * h[r][k]) % p;
    }
  }
  // p_{m+1} = (x - h_mm) p_m - sum_{i<m} h_im (h_{i+1,i} ... h_{m,m-1}) p_i
  std::vector<std::vector<u64>> polys{{1}};
  for (std::size_t m = 0; m < n; ++m) {
    std::vector<u64> next(m + 2, 0);
    const auto& pm = polys[m];
    for (std::size_t k = 0; k <= m; ++k) {
      next[k + 1] = (next[k + 1] + pm[k]) % p;
      next[k] = (next[k] + (p - h[m][m]) * pm[k]) % p;
    }
    u64 chain = 1;
    for (std::size_t i = m; i-- > 0;) {
      chain = chain * h[i + 1][i] % p;
      if (chain == 0) break;
      const u64 f = h[i][m] * chain % p;
      for (std::size_t k = 0; k < polys[i].size(); ++k) next[k] = (next[k] + (p - f) * polys[i][k]) % p;
    }
    polys.push_back(std::move(next));
  }
  return polys[n];
}

}  // namespace

IntPoly characteristic_polynomial_faddeev(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw DimensionMismatch("characteristic polynomial of a non-square matrix");
  const Eigen::Index n = a.rows();
  std::vector<Integer> c(static_cast<std::size_t>(n) + 1);
  c[static_cast<std::size_t>(n)] = 1;
  IntMatrix m = IntMatrix::Zero(n, n);
  for (Eigen::Index k = 1; k <= n; ++k) {
    IntMatrix next = IntMatrix::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index l = 0; l < n; ++l) {
        if (is_zero(a(i, l))) continue;
        for (Eigen::Index j = 0; j < n; ++j) next(i, j) += a(i, l) * m(l, j);
      }
      next(i, i) += c[static_cast<std::size_t>(n - k + 1)];
    }
    m = std::move(next);
    Integer trace = 0;
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j < n; ++j) trace += a(i, j) * m(j, i);
    }
    auto q = exact_divide(Integer(-trace), Integer(k));
    if (!q) throw ExactDivisionFailure("Faddeev-LeVerrier trace not divisible");
    c[static_cast<std::size_t>(n - k)] = *q;
  }
  return IntPoly(std::move(c));
}

IntPoly characteristic_polynomial(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw DimensionMismatch("characteristic polynomial of a non-square matrix");
  const auto n = static_cast<std::size_t>(a.rows());
  Integer row_max = 0;
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    Integer s = 0;
    for (Eigen::Index j = 0; j < a.cols(); ++j) s += abs(a(i, j));
    if (s > row_max) row_max = s;
  }
  Integer bound = 1;
  for (std::size_t i = 0; i < n; ++i) bound *= row_max + 1;

  std::vector<Integer> value(n + 1, Integer(0));
  Integer modulus = 1;
  u64 p = (u64{1} << 31U) - 1;
  while (modulus <= 2 * bound) {
    while (!is_prime(p)) --p;
    std::vector<std::vector<u64>> h(n, std::vector<u64>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) h[i][j] = to_residue(a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)), p);
    }
    const std::vector<u64> r = charpoly_mod(std::move(h), p);
    const u64 inv = power_mod(to_residue(modulus, p), p - 2, p);
    for (std::size_t k = 0; k <= n; ++k) {
      const u64 cur = to_residue(value[k], p);
      const u64 step = (r[k] + p - cur) % p * inv % p;
      value[k] += modulus * step;
    }
    modulus *= p;
    --p;
  }
  for (auto& v : value) {
    v %= modulus;
    if (v < 0) v += modulus;
    if (2 * v > modulus) v -= modulus;
  }
  return IntPoly(std::move(value));
}

}  // namespace asg
