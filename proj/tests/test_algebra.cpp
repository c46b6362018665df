#include <doctest.h>

#include <random>

#include "asg/algebra/ring_matrix.hpp"
#include "asg/oracles.hpp"
#include "poly_helpers.hpp"

using namespace asg;
using testing_support::P;

namespace {

IntPolyMatrix random_poly_matrix(std::mt19937& rng, int n, int max_degree) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> deg(0, max_degree);
  IntPolyMatrix m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      std::vector<Integer> c(static_cast<std::size_t>(deg(rng)) + 1);
      for (auto& x : c) x = coeff(rng);
      m(i, j) = IntPoly(std::move(c));
    }
  }
  return m;
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == std::vector<long long>{-1, 1});
  CHECK(cyclotomic_polynomial(3) == std::vector<long long>{1, 1, 1});
  CHECK(cyclotomic_polynomial(4) == std::vector<long long>{1, 0, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<long long>{1, 0, -1, 0, 1});
  CHECK(euler_phi(64) == 32);
  CHECK_THROWS_AS(cyclotomic_polynomial(65), std::out_of_range);
  CHECK_THROWS_AS(cyclotomic_polynomial(0), std::out_of_range);
}

TEST_CASE("cyclotomic integer arithmetic") {
  const CycInt i4 = CycInt::root_of_unity(4, 1);
  CHECK(i4 * i4 == CycInt(-1));
  const CycInt z3 = CycInt::root_of_unity(3, 1);
  CHECK((CycInt(1) + z3 + z3 * z3).is_zero());
  CHECK(z3.conjugate() == z3 * z3);
  CHECK(CycInt(5) * z3 == CycInt(3, {Integer(0), Integer(5)}));
  CHECK(CycInt::root_of_unity(4, 2) == CycInt(-1));
  CHECK((i4 * i4).is_rational_integer());
  CHECK_THROWS_AS(i4 + z3, OrderMismatch);
  CHECK(CycInt(1 - 1).is_zero());

  // (1 + i) has norm 2; (1 + i)^3 / (1 + i) = (1 + i)^2 = 2i.
  const CycInt u = CycInt(1) + i4;
  CHECK(u.norm() == 2);
  auto q = exact_divide(u * u * u, u);
  REQUIRE(q.has_value());
  CHECK(*q == CycInt(2) * i4);
  CHECK_FALSE(exact_divide(CycInt(1), u).has_value());
}

TEST_CASE("sums of roots of unity") {
  for (int m : {1, 2, 3, 4, 5, 6, 8, 12}) {
    for (int i = 0; i < m; ++i) {
      CycInt sum(0);
      for (int j = 0; j < m; ++j) sum += CycInt::root_of_unity(m, static_cast<long long>(i) * j);
      CHECK(sum == CycInt(i == 0 ? m : 0));
    }
  }
}

TEST_CASE("polynomial arithmetic") {
  const IntPoly p = P({1, -2, 3});
  CHECK(p * IntPoly(1) == p);
  CHECK((p - p).is_zero());
  CHECK(IntPoly().degree() == IntPoly::kZeroDegree);
  CHECK(P({0, 0}).is_zero());
  CHECK(P({-1, 1}) * P({1, 1}) == P({-1, 0, 1}));
  CHECK(divide_exactly(P({-1, 0, 1}), P({1, 1})) == P({-1, 1}));
  CHECK_THROWS_AS(divide_exactly(P({1, 0, 1}), P({1, 1})), ExactDivisionFailure);
  CHECK(times_one_minus_t2_power(P({1}), 2) == P({1, 0, -2, 0, 1}));
  CHECK(times_one_minus_t2_power(P({1, 0, -2, 0, 1}), -1) == P({1, 0, -1}));
  CHECK(p.evaluate(Integer(2)) == 9);
  CHECK(P({1, 1}).pow(3) == P({1, 3, 3, 1}));
}

TEST_CASE("demotion to integer polynomials") {
  const CycInt i4 = CycInt::root_of_unity(4, 1);
  CycPoly p(std::vector<CycInt>{CycInt(3).promoted(4), CycInt(-2).promoted(4)});
  CHECK(to_integer_poly(p) == P({3, -2}));
  CycPoly bad(std::vector<CycInt>{CycInt(1), CycInt::root_of_unity(3, 1)});
  CHECK_THROWS_AS(to_integer_poly(bad), NotRationalInteger);
  try {
    to_integer_poly(bad);
  } catch (const NotRationalInteger& e) {
    CHECK(e.index() == 1);
  }
  CHECK(to_integer_poly(CycPoly(i4) * CycPoly(conjugate(i4))) == P({1}));
}

TEST_CASE("kronecker product") {
  IntMatrix a(2, 2);
  a << 0, 1, 1, 0;
  IntMatrix b(1, 1);
  b << 2;
  IntMatrix expect(2, 2);
  expect << 0, 2, 2, 0;
  CHECK(same_entries(kronecker(a, b), expect));
  IntMatrix one(1, 1);
  one << 1;
  CHECK(same_entries(kronecker(a, one), a));
  IntMatrix i2 = IntMatrix::Identity(2, 2);
  IntMatrix i3 = IntMatrix::Identity(3, 3);
  IntMatrix i6 = IntMatrix::Identity(6, 6);
  CHECK(same_entries(kronecker(i2, i3), i6));
}

TEST_CASE("determinant basics") {
  CHECK(determinant(IntPolyMatrix(0, 0)) == IntPoly(1));
  CHECK(determinant(IntPolyMatrix(IntPolyMatrix::Identity(5, 5))) == IntPoly(1));
  CHECK_THROWS_AS(determinant(IntPolyMatrix(2, 3)), DimensionMismatch);

  IntMatrix a(2, 2);
  a << 3, 1, 1, 3;
  IntMatrix q(2, 2);
  q << 3, 0, 0, 3;
  CHECK(determinant(ihara_bass_matrix(a, q)) == P({1, -6, 14, -18, 9}));
  CHECK(P({1, -6, 14, -18, 9}) == P({-1, 1}) * P({-1, 3}) * P({1, -2, 3}));

  IntMatrix sing(2, 2);
  sing << 0, 0, 0, 5;
  CHECK(determinant(sing) == 0);
  IntMatrix swap(2, 2);
  swap << 0, 1, 1, 0;
  CHECK(determinant(swap) == -1);
}

TEST_CASE("Bareiss agrees with cofactor expansion on random matrices") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 4;
    IntPolyMatrix m = random_poly_matrix(rng, n, 2);
    if (trial % 7 == 0) m.row(0).setZero();
    CHECK(determinant(m) == asg::oracle::laplace_determinant(m));
  }
}

TEST_CASE("determinant properties") {
  std::mt19937 rng(777);
  for (int trial = 0; trial < 20; ++trial) {
    IntPolyMatrix a = random_poly_matrix(rng, 3, 2);
    IntPolyMatrix b = random_poly_matrix(rng, 3, 2);
    IntPolyMatrix ab = a * b;
    CHECK(determinant(ab) == determinant(a) * determinant(b));
    CHECK(determinant(IntPolyMatrix(a.transpose())) == determinant(a));
    IntPolyMatrix perm = a;
    perm.row(0).swap(perm.row(2));
    perm.col(0).swap(perm.col(2));
    CHECK(determinant(perm) == determinant(a));
    for (long long t0 : {0LL, 1LL, -1LL}) {
      IntMatrix at = map_entries(a, [&](const IntPoly& p) { return p.evaluate(Integer(t0)); });
      CHECK(determinant(at) == determinant(a).evaluate(Integer(t0)));
    }
  }
}

TEST_CASE("conjugation commutes with the determinant") {
  std::mt19937 rng(4242);
  std::uniform_int_distribution<int> coeff(-2, 2);
  for (int trial = 0; trial < 10; ++trial) {
    CycPolyMatrix m(3, 3);
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        std::vector<CycInt> c(2);
        for (auto& x : c) x = CycInt(4, {Integer(coeff(rng)), Integer(coeff(rng))});
        m(i, j) = CycPoly(std::move(c));
      }
    }
    CycPolyMatrix mc = map_entries(m, [](const CycPoly& p) { return conjugate(p); });
    CHECK(conjugate(determinant(m)) == determinant(mc));
    CHECK(determinant(m) == asg::oracle::laplace_determinant(m));
  }
}
