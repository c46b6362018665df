#pragma once

#include <optional>

#include <boost/multiprecision/cpp_int.hpp>

namespace asg {

// Expression templates are disabled so that Integer behaves like a plain
// value type inside Eigen matrices and std containers.
using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                              boost::multiprecision::et_off>;

inline bool is_zero(const Integer& a) { return a.is_zero(); }

inline std::optional<Integer> exact_divide(const Integer& a, const Integer& b) {
  if (b.is_zero()) return std::nullopt;
  Integer q;
  Integer r;
  boost::multiprecision::divide_qr(a, b, q, r);
  if (!r.is_zero()) return std::nullopt;
  return q;
}

inline Integer conjugate(const Integer& a) { return a; }

}  // namespace asg
