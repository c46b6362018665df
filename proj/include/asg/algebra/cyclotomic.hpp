#pragma once

#include <optional>
#include <ostream>
#include <vector>

#include "asg/algebra/integer.hpp"
#include "asg/algebra/polynomial.hpp"

namespace asg {

/// Largest cyclotomic order supported.
inline constexpr int kMaxCyclotomicOrder = 64;

/// Integer coefficients of the m-th cyclotomic polynomial, low degree first.
/// Throws std::out_of_range when m is outside 1..kMaxCyclotomicOrder.
const std::vector<long long>& cyclotomic_polynomial(int m);

int euler_phi(int m);

/// Element of Z[zeta_m] in the power basis 1, zeta, ..., zeta^(phi(m)-1).
///
/// Order-1 values are rational integers and combine with any order; mixing
/// two different orders above 1 raises OrderMismatch.
class CycInt {
 public:
  CycInt() : order_(1), coeffs_(1) {}
  CycInt(long long n) : order_(1), coeffs_{Integer(n)} {}        // NOLINT
  CycInt(const Integer& n) : order_(1), coeffs_{n} {}            // NOLINT
  CycInt(int order, std::vector<Integer> coeffs);

  /// zeta_m^k.
  static CycInt root_of_unity(int order, long long k);

  int order() const { return order_; }
  const std::vector<Integer>& coefficients() const { return coeffs_; }

  bool is_zero() const;
  /// True when the value lies in Z (all non-constant coordinates vanish).
  bool is_rational_integer() const;
  Integer to_integer() const;

  /// Image under the automorphism zeta -> zeta^k, gcd(k, m) = 1.
  CycInt galois(long long k) const;
  CycInt conjugate() const { return galois(-1); }
  /// Product of all Galois conjugates; a rational integer.
  Integer norm() const;

  /// Same value expressed over order m (requires this order to be 1 or m).
  CycInt promoted(int m) const;

  CycInt& operator+=(const CycInt& o);
  CycInt& operator-=(const CycInt& o);
  CycInt& operator*=(const CycInt& o) { return *this = *this * o; }

  friend CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
  friend CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }
  friend CycInt operator-(const CycInt& a);
  friend CycInt operator*(const CycInt& a, const CycInt& b);
  friend bool operator==(const CycInt& a, const CycInt& b);
  friend bool operator!=(const CycInt& a, const CycInt& b) { return !(a == b); }
  friend std::ostream& operator<<(std::ostream& os, const CycInt& a);

 private:
  static int common_order(const CycInt& a, const CycInt& b);
  /// Builds a reduced element from an arbitrary-length coefficient list.
  static CycInt reduce(int order, std::vector<Integer> raw);

  int order_;
  std::vector<Integer> coeffs_;
};

inline bool is_zero(const CycInt& a) { return a.is_zero(); }
inline CycInt conjugate(const CycInt& a) { return a.conjugate(); }
std::optional<CycInt> exact_divide(const CycInt& a, const CycInt& b);

using IntPoly = Polynomial<Integer>;
using CycPoly = Polynomial<CycInt>;

/// Demotes a polynomial with rational-integer coefficients.
/// Throws NotRationalInteger naming the first offending coefficient.
IntPoly to_integer_poly(const CycPoly& p);

inline CycPoly to_cyc_poly(const IntPoly& p) {
  return p.map([](const Integer& c) { return CycInt(c); });
}

}  // namespace asg
