#pragma once

#include "asg/algebra/cyclotomic.hpp"
#include "asg/algebra/ring_matrix.hpp"

namespace asg {

/// det(xI - M) by Faddeev-LeVerrier over the integers. O(n^4); used as an oracle.
IntPoly characteristic_polynomial_faddeev(const IntMatrix& m);

/// det(xI - M) by Hessenberg reduction modulo word-size primes and Chinese
/// remaindering against the bound |coefficients| <= (1 + max row sum)^n.
IntPoly characteristic_polynomial(const IntMatrix& m);

}  // namespace asg
