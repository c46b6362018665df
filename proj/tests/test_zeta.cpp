#include <doctest.h>

#include <random>

#include "asg/algebra/charpoly.hpp"
#include "asg/bundled.hpp"
#include "asg/error.hpp"
#include "asg/oracles.hpp"
#include "asg/poly_json.hpp"
#include "asg/schreier.hpp"
#include "asg/zeta.hpp"
#include "poly_helpers.hpp"

using namespace asg;
using testing_support::P;

namespace {

RotationGraph cycle(std::size_t n) {
  RotationGraph g(n, {"s", "s^-1"}, {1, 0});
  for (std::size_t v = 0; v < n; ++v) g.connect(g.half_edge(v, 0), g.half_edge((v + 1) % n, 1));
  return g;
}

RotationGraph complete4() {
  RotationGraph g(4, {"x", "y", "z"}, {0, 1, 2});
  for (int c = 0; c < 3; ++c) {
    for (std::size_t v = 0; v < 4; ++v) g.connect(g.half_edge(v, c), g.half_edge(v ^ static_cast<std::size_t>(c + 1), c));
  }
  return g;
}

}  // namespace

TEST_CASE("Ihara zeta of small graphs") {
  const IntPoly one_minus_t3 = P({1, 0, 0, -1});
  CHECK(ihara_zeta_reciprocal(cycle(3)) == one_minus_t3 * one_minus_t3);
  CHECK(hashimoto_zeta_reciprocal(cycle(3)) == one_minus_t3 * one_minus_t3);

  RotationGraph edge(2, {"x"}, {0});
  edge.connect(edge.half_edge(0, 0), edge.half_edge(1, 0));
  CHECK(ihara_zeta_reciprocal(edge) == P({1}));

  RotationGraph loop(1, {"s", "s^-1"}, {1, 0});
  loop.connect(loop.half_edge(0, 0), loop.half_edge(0, 1));
  CHECK(ihara_zeta_reciprocal(loop) == P({1, -2, 1}));
  CHECK_THROWS_AS(hashimoto_zeta_reciprocal(loop), LoopsUnsupported);

  RotationGraph two(2, {"x"}, {0});
  CHECK_THROWS_AS(ihara_zeta_reciprocal(two), DisconnectedGraph);
}

TEST_CASE("Hashimoto and Bass agree on K4") {
  const RotationGraph k4 = complete4();
  const IntPoly z = ihara_zeta_reciprocal(k4);
  CHECK(z == hashimoto_zeta_reciprocal(k4));
  CHECK(z.degree() == 12);
  const auto counts = prime_cycle_counts(k4, 8);
  CHECK(counts == oracle::closed_walk_counts(k4, 8));
  CHECK(log_series_matches(z, counts));
}

TEST_CASE("fast Ihara path agrees with Bareiss") {
  for (const char* name : {"grigorchuk", "basilica", "gupta_sidki_3"}) {
    CAPTURE(name);
    const Automaton aut = bundled_automaton(name);
    const RotationGraph g = build_schreier(aut, aut.alphabet_size() == 2 ? 5 : 3);
    CHECK(ihara_zeta_reciprocal(g) == ihara_zeta_reciprocal_bareiss(g));
  }
}

TEST_CASE("modular characteristic polynomial agrees with Faddeev-LeVerrier") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> entry(-50, 50);
  for (int n = 1; n <= 9; ++n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) m(i, j) = entry(rng);
    }
    CHECK(characteristic_polynomial(m) == characteristic_polynomial_faddeev(m));
  }
}

TEST_CASE("polynomial JSON round trip") {
  Integer big = 1;
  big <<= 80;
  const IntPoly p(std::vector<Integer>{Integer(1), -big, Integer(3)});
  const nlohmann::json j = poly_to_json(p);
  CHECK(j["variable"] == "t");
  CHECK(j["coefficients"][1].is_string());
  CHECK(int_poly_from_json(j) == p);

  const CycPoly c(std::vector<CycInt>{CycInt(1).promoted(4), CycInt::root_of_unity(4, 1), CycInt(-2).promoted(4)});
  CHECK(cyc_poly_from_json(poly_to_json(c, 4)) == c);
}
