#pragma once

#include <initializer_list>

#include "asg/algebra/cyclotomic.hpp"

namespace testing_support {

inline asg::IntPoly P(std::initializer_list<long long> coeffs) {
  std::vector<asg::Integer> c;
  for (long long v : coeffs) c.emplace_back(v);
  return asg::IntPoly(std::move(c));
}

// (1 - t^2)^e * product of factors, each given low degree first.
inline asg::IntPoly with_rank_factor(int e, std::initializer_list<asg::IntPoly> factors) {
  asg::IntPoly out(1);
  for (const auto& f : factors) out *= f;
  return asg::times_one_minus_t2_power(out, e);
}

}  // namespace testing_support
