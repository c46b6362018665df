#include <doctest.h>

#include "asg/bundled.hpp"
#include "asg/covering.hpp"
#include "asg/error.hpp"
#include "asg/model_inflation.hpp"
#include "asg/replacement_product.hpp"
#include "asg/schreier.hpp"

using namespace asg;

TEST_CASE("inflation reproduces tile graphs") {
  for (const char* name : {"basilica", "grigorchuk", "gupta_sidki_3"}) {
    CAPTURE(name);
    const Automaton aut = bundled_automaton(name);
    for (int r = 1; r <= 2; ++r) {
      for (int n = 1; n <= 2; ++n) CHECK(verify_inflation(aut, r, n).pass);
    }
  }
}

TEST_CASE("tile plus restricted edges is the Schreier graph") {
  const Automaton aut = bundled_automaton("basilica");
  for (int n = 1; n <= 5; ++n) CHECK(complete_to_schreier(build_tile(aut, n), aut).same_incidence(build_schreier(aut, n)));
}

TEST_CASE("model graphs need bounded automata") {
  const Automaton aut = bundled_automaton("linear");
  if (activity_class(aut).kind != ActivityKind::Bounded) CHECK_THROWS_AS(model_graph(aut, 1), NotBounded);
}

TEST_CASE("replacement product is isomorphic to the Schreier graph") {
  for (const char* name : {"grigorchuk", "basilica", "hanoi", "bsv_3"}) {
    CAPTURE(name);
    const Automaton aut = bundled_automaton(name);
    for (int n = 1; n <= 2; ++n) {
      for (int r = 1; r <= 2; ++r) CHECK(verify_iso_to_schreier(gen_replacement(aut, n, r), aut).pass);
    }
  }
}

TEST_CASE("sheet edges form copies of the tile graph") {
  const Automaton aut = bundled_automaton("basilica");
  const int n = 2;
  const int r = 2;
  const ProductGraph p = gen_replacement(aut, n, r);
  std::size_t sheet = 0;
  std::size_t sheet_or_model = 0;
  for (const auto& e : p.graph.edges()) {
    const EdgeClass c = p.graph.edge_class(e.first);
    sheet += c == EdgeClass::Sheet;
    sheet_or_model += c == EdgeClass::Sheet || c == EdgeClass::ModelLift;
  }
  CHECK(sheet == 4 * build_tile(aut, r).edge_count());
  const ProductGraph one = gen_replacement(aut, 1, r);
  std::size_t one_count = 0;
  for (const auto& e : one.graph.edges()) {
    const EdgeClass c = one.graph.edge_class(e.first);
    one_count += c == EdgeClass::Sheet || c == EdgeClass::ModelLift;
  }
  CHECK(one_count == build_tile(aut, r + 1).edge_count());
  CHECK(sheet_or_model > sheet);
}

TEST_CASE("level coverings") {
  SUBCASE("Basilica is a normal double cover") {
    const CoveringMap c = level_covering(bundled_automaton("basilica"), 3, 2);
    CHECK(check_unramified(c) == 2);
    const DeckGroup g = deck_group(c);
    CHECK(g.order() == 2);
    CHECK(is_normal(c));
  }
  SUBCASE("BSV over four letters") {
    const CoveringMap c = level_covering(bundled_automaton("bsv_4"), 2, 1);
    CHECK(check_unramified(c) == 4);
    CHECK(deck_group(c).order() == 4);
    CHECK(deck_group(c).is_abelian());
  }
  SUBCASE("Hanoi is not normal") {
    const CoveringMap c = level_covering(bundled_automaton("hanoi"), 2, 1);
    CHECK(check_unramified(c) == 3);
    CHECK(deck_group(c).order() == 1);
    CHECK_FALSE(is_normal(c));
  }
  SUBCASE("identity covering") {
    const CoveringMap c = level_covering(bundled_automaton("grigorchuk"), 3, 3);
    CHECK(check_unramified(c) == 1);
    CHECK(deck_group(c).order() == 1);
  }
  CHECK_THROWS_AS(level_covering(bundled_automaton("grigorchuk"), 1, 2), Error);
}

TEST_CASE("deck group multiplication table") {
  const CoveringMap c = level_covering(bundled_automaton("bsv_3"), 3, 2);
  const DeckGroup g = deck_group(c);
  REQUIRE(g.order() == 3);
  for (std::size_t i = 0; i < g.order(); ++i) {
    CHECK(g.table[0][i] == i);
    CHECK(g.table[i][g.inverse(i)] == 0);
  }
}

TEST_CASE("Galois harness verdicts") {
  CHECK(verify_galois_theorem(bundled_automaton("grigorchuk"), 2).verdict == GaloisVerdict::Pass);
  CHECK(verify_galois_theorem(bundled_automaton("basilica"), 3).verdict == GaloisVerdict::Pass);
  const GaloisReport h = verify_galois_theorem(bundled_automaton("hanoi"), 1);
  CHECK(h.verdict == GaloisVerdict::HypothesisNotMet);
  CHECK(h.root_group_order == 6);
  CHECK(h.deck_order == 1);
}
