#include <doctest.h>

#include "asg/automaton_format.hpp"
#include "asg/bundled.hpp"
#include "asg/error.hpp"
#include "asg/periodic_word.hpp"
#include "asg/schreier.hpp"

using namespace asg;

TEST_CASE("Grigorchuk automaton basics") {
  const Automaton g = bundled_automaton("grigorchuk");
  CHECK(g.alphabet_size() == 2);
  CHECK(g.colors().size() == 4);
  for (State s : g.generators()) CHECK(g.is_involution(s));
  CHECK(activity_class(g).kind == ActivityKind::Bounded);
  CHECK(root_permutation_group(g).order() == 2);
  for (int n = 1; n <= 5; ++n) CHECK(is_level_transitive(g, n));
  Word w{0, 1, 1};
  CHECK(g.act(g.find("b"), w) == Automaton::trivial());
  CHECK(w == Word{0, 0, 1});
  Word ones{1, 1, 1};
  CHECK(g.act(g.find("b"), ones) == g.find("b"));
  CHECK(ones == Word{1, 1, 1});
}

TEST_CASE("activity classes") {
  CHECK(activity_class(bundled_automaton("basilica")).kind == ActivityKind::Bounded);
  CHECK(activity_class(bundled_automaton("hanoi")).kind == ActivityKind::Bounded);
  const Automaton add = parse_automaton("alphabet: 2\ntrivial: e\ngen a: perm=(0 1) sections=[e,a]\ngen b: perm=(0 1) sections=[b,b]\n");
  CHECK(activity_class(add).kind == ActivityKind::Exponential);
}

TEST_CASE("format round trip for every bundled automaton") {
  for (const auto& name : bundled_names()) {
    CAPTURE(name);
    const Automaton aut = bundled_automaton(name);
    CHECK(parse_automaton(serialize_automaton(aut)) == aut);
  }
}

TEST_CASE("data files agree with the bundled automata") {
  for (const auto& name : bundled_names()) {
    CAPTURE(name);
    CHECK(load_automaton_file(std::string(ASG_SOURCE_DIR) + "/data/automata/" + name + ".atm") == bundled_automaton(name));
  }
}

TEST_CASE("malformed documents are rejected") {
  CHECK_THROWS_AS(parse_automaton("alphabet: x\n"), ParseError);
  CHECK_THROWS_AS(parse_automaton("alphabet: 2\ntrivial: e\ngen a: perm=(0 1) sections=[e]\n"), Error);
  CHECK_THROWS_AS(parse_automaton("alphabet: 2\ntrivial: e\ngen a: perm=(0 1) sections=[e,z]\n"), Error);
  CHECK_THROWS_AS(load_automaton_file("/nonexistent/file.atm"), Error);
}

TEST_CASE("Schreier and tile graphs") {
  const Automaton g = bundled_automaton("grigorchuk");
  for (int n = 1; n <= 6; ++n) {
    const RotationGraph s = build_schreier(g, n);
    const RotationGraph t = build_tile(g, n);
    CHECK(s.vertex_count() == (std::size_t{1} << n));
    CHECK(s.half_edge_count() == s.vertex_count() * 4);
    CHECK(t.half_edge_count() < s.half_edge_count());
    CHECK(is_connected(s));
    CHECK(is_connected(t));
  }
  CHECK_THROWS_AS(build_schreier(g, 20, 1000), LimitExceeded);
}

TEST_CASE("Basilica post-critical set") {
  const Automaton b = bundled_automaton("basilica");
  const auto p = post_critical_sequences(b);
  REQUIRE(p.size() == 3);
  CHECK(p[0].to_string(2) == "(0)^-w");
  CHECK(p[1].to_string(2) == "(01)^-w");
  CHECK(p[2].to_string(2) == "(10)^-w");
  CHECK(p[1].shift() == p[2]);
  CHECK(p[1].truncate(3) == Word{1, 0, 1});
  CHECK(post_critical_vertices(p, 3).size() == 3);
}

TEST_CASE("eventually periodic words are canonical") {
  CHECK(EventuallyPeriodicWord({0, 1, 0, 1}, {}) == EventuallyPeriodicWord({0, 1}, {}));
  CHECK(EventuallyPeriodicWord({0, 1}, {0}) == EventuallyPeriodicWord({1, 0}, {}));
  CHECK_THROWS_AS(EventuallyPeriodicWord({}, {0}), ValidationError);
}
