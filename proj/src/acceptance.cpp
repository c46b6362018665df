#include "asg/acceptance.hpp"

#include <functional>
#include <initializer_list>
#include <random>
#include <set>
#include <sstream>

#include "asg/bundled.hpp"
#include "asg/model_inflation.hpp"
#include "asg/oracles.hpp"
#include "asg/replacement_product.hpp"
#include "asg/schreier.hpp"
#include "asg/zeta.hpp"

namespace asg {

namespace {

IntPoly poly(std::initializer_list<long long> coeffs) {
  std::vector<Integer> c;
  for (long long v : coeffs) c.emplace_back(v);
  return IntPoly(std::move(c));
}

/// (1 - t^2)^e times the product of the factors.
IntPoly expand(int e, std::initializer_list<IntPoly> factors) {
  IntPoly out(1);
  for (const auto& f : factors) out *= f;
  return times_one_minus_t2_power(out, e);
}

IntMatrix matrix(int n, std::initializer_list<long long> entries) {
  IntMatrix m(n, n);
  auto it = entries.begin();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m(i, j) = *it++;
  }
  return m;
}

// Linear factors and quadratics shared by the worked examples, low degree first.
const IntPoly t_minus_1 = poly({-1, 1});
const IntPoly t_plus_1 = poly({1, 1});
const IntPoly three_t_minus_1 = poly({-1, 3});
const IntPoly three_t_plus_1 = poly({1, 3});
const IntPoly q_3t2_plus_1 = poly({1, 0, 3});
const IntPoly q_3t2_minus_2t_plus_1 = poly({1, -2, 3});
const IntPoly q_3t2_minus_t_plus_1 = poly({1, -1, 3});
const IntPoly q_3t2_plus_2t_plus_1 = poly({1, 2, 3});

class Checker {
 public:
  explicit Checker(CriterionResult& r) : r_(r) {}

  void check(const std::string& what, const std::function<bool()>& f) {
    bool ok = false;
    std::string extra;
    try {
      ok = f();
    } catch (const std::exception& e) {
      extra = std::string(" (") + e.what() + ")";
    }
    r_.details.push_back(std::string(ok ? "ok   " : "FAIL ") + what + extra);
    all_ &= ok;
  }

  void note(const std::string& text) { r_.details.push_back("     " + text); }
  bool all() const { return all_; }

 private:
  CriterionResult& r_;
  bool all_ = true;
};

IntPoly integer_factor(const ProductReport& r, std::size_t character) { return to_integer_poly(r.factors.at(character)); }

/// A(gen^k) for k = 0..m-1 where gen generates the cyclic deck group.
std::vector<IntMatrix> cyclic_family(const ProductReport& r) {
  if (r.characters.generators.size() != 1) throw NonAbelianUnsupported("deck group is not cyclic");
  std::vector<IntMatrix> out;
  for (std::size_t k = 0; k < r.deck.order(); ++k) out.push_back(r.bundle.a[r.deck.power(r.characters.generators[0], k)]);
  return out;
}

ProductReport product_report(const std::string& name, int lower) {
  return verify_product_formula(level_covering(bundled_automaton(name), lower + 1, lower));
}

void criterion_bsv(Checker& c) {
  const ProductReport r = product_report("bsv_4", 1);
  const IntPoly quartic_minus = poly({1, -2, 2, -6, 9});
  const IntPoly quartic_plus = poly({1, 2, 2, 6, 9});
  const IntPoly even_quartic = poly({1, 0, -2, 0, 9});
  const IntPoly base = expand(4, {t_minus_1, t_plus_1, three_t_minus_1, three_t_plus_1, q_3t2_plus_1, q_3t2_plus_1});
  c.check("zeta(Gamma_1) reciprocal", [&] { return r.base_zeta == base; });
  c.check("trivial character L equals zeta(Gamma_1) reciprocal", [&] { return integer_factor(r, 0) == base; });
  c.check("L of the characters of order 4 (both)", [&] {
    const IntPoly expected = expand(4, {quartic_minus, quartic_plus});
    return integer_factor(r, 1) == expected && integer_factor(r, 3) == expected;
  });
  c.check("L of the character of order 2", [&] { return integer_factor(r, 2) == expand(4, {even_quartic, even_quartic}); });
  c.check("zeta(Gamma_2) reciprocal", [&] {
    return r.cover_zeta == expand(16, {t_minus_1, t_plus_1, three_t_minus_1, three_t_plus_1, q_3t2_plus_1, q_3t2_plus_1, even_quartic,
                                       even_quartic, quartic_minus, quartic_minus, quartic_plus, quartic_plus});
  });
  c.check("A(id), A(g), A(g^2), A(g^3) up to relabeling", [&] {
    const IntMatrix a_id = matrix(4, {0, 2, 0, 0, 2, 0, 2, 0, 0, 2, 0, 2, 0, 0, 2, 0});
    const IntMatrix a_g = matrix(4, {0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0});
    const IntMatrix zero = IntMatrix::Zero(4, 4);
    return oracle::cyclic_families_equivalent(cyclic_family(r), {a_id, a_g, zero, a_g});
  });
  c.check("product formula", [&] { return r.pass; });
}

void criterion_grigorchuk(Checker& c) {
  const ProductReport r = product_report("grigorchuk", 1);
  const IntPoly quartic = poly({1, -2, 2, -6, 9});
  c.check("zeta(Gamma_1) reciprocal", [&] { return r.base_zeta == expand(5, {t_minus_1, three_t_minus_1, q_3t2_minus_2t_plus_1}); });
  c.check("L of the nontrivial character", [&] { return integer_factor(r, 1) == expand(3, {quartic}); });
  c.check("zeta(Gamma_2) reciprocal", [&] { return r.cover_zeta == expand(8, {t_minus_1, three_t_minus_1, q_3t2_minus_2t_plus_1, quartic}); });
  c.check("product of L-functions equals zeta(Gamma_2) reciprocal", [&] { return r.pass && r.product == r.cover_zeta; });
}

void criterion_basilica(Checker& c) {
  const ProductReport r = product_report("basilica", 2);
  const IntPoly even_quartic = poly({1, 0, -2, 0, 9});
  const IntPoly sextic = poly({1, -2, 1, -4, 3, -18, 27});
  c.check("zeta(Gamma_2) reciprocal", [&] { return r.base_zeta == expand(4, {t_minus_1, three_t_minus_1, q_3t2_plus_1, even_quartic}); });
  c.check("L of the nontrivial character", [&] { return integer_factor(r, 1) == expand(4, {q_3t2_minus_2t_plus_1, sextic}); });
  c.check("zeta(Gamma_3) reciprocal", [&] {
    return r.cover_zeta == expand(8, {t_minus_1, three_t_minus_1, q_3t2_plus_1, q_3t2_minus_2t_plus_1, even_quartic, sextic});
  });
  c.check("product formula", [&] { return r.pass; });
}

void criterion_fabrykowski_gupta(Checker& c) {
  const ProductReport r = product_report("fabrykowski_gupta", 1);
  const IntPoly quartic = poly({1, -2, 1, -6, 9});
  const IntPoly displayed = expand(3, {q_3t2_minus_t_plus_1, q_3t2_minus_t_plus_1, quartic, quartic});
  c.check("zeta(Gamma_1) reciprocal", [&] {
    return r.base_zeta == expand(3, {t_minus_1, three_t_minus_1, q_3t2_minus_t_plus_1, q_3t2_minus_t_plus_1});
  });
  c.check("zeta(Gamma_2) reciprocal", [&] {
    return r.cover_zeta == expand(9, {t_minus_1, three_t_minus_1, q_3t2_minus_t_plus_1, q_3t2_minus_t_plus_1, q_3t2_minus_t_plus_1,
                                      q_3t2_minus_t_plus_1, quartic, quartic});
  });
  c.check("the two nontrivial L-functions are complex conjugates", [&] { return conjugate(r.factors.at(1)) == r.factors.at(2); });
  const IntPoly product = to_integer_poly(r.factors.at(1) * r.factors.at(2));
  c.check("determinant parts of the two nontrivial L-functions multiply to the displayed expression", [&] {
    return times_one_minus_t2_power(product, -(r.exponents.at(1) + r.exponents.at(2))) == times_one_minus_t2_power(displayed, -3);
  });
  c.check("product of the two nontrivial L-functions equals (1-t^2)^3 times the displayed expression", [&] {
    return product == times_one_minus_t2_power(displayed, 3);
  });
  c.note("the displayed expression carries (1-t^2)^3; the product carries (1-t^2)^" + std::to_string(r.exponents.at(1) + r.exponents.at(2)) +
         ", as forced by zeta(Gamma_2)");
  c.check("product formula", [&] { return r.pass; });
}

void criterion_gupta_sidki(Checker& c) {
  const ProductReport r = product_report("gupta_sidki_3", 1);
  const IntPoly quartic = poly({1, -2, 4, -6, 9});
  const IntPoly nontrivial = expand(3, {q_3t2_plus_2t_plus_1, quartic});
  c.check("zeta(Gamma_1) reciprocal", [&] {
    return r.base_zeta == expand(3, {t_minus_1, three_t_minus_1, q_3t2_minus_t_plus_1, q_3t2_minus_t_plus_1});
  });
  c.check("L of both nontrivial characters", [&] { return integer_factor(r, 1) == nontrivial && integer_factor(r, 2) == nontrivial; });
  c.check("zeta(Gamma_2) reciprocal", [&] {
    return r.cover_zeta == expand(9, {t_minus_1, three_t_minus_1, q_3t2_minus_t_plus_1, q_3t2_minus_t_plus_1, q_3t2_plus_2t_plus_1,
                                      q_3t2_plus_2t_plus_1, quartic, quartic});
  });
  c.check("product formula", [&] { return r.pass; });
}

void criterion_linear(Checker& c) {
  const ProductReport r = product_report("linear", 2);
  const IntPoly quartic_minus = poly({1, -2, 4, -6, 9});
  const IntPoly quartic_plus = poly({1, 2, 4, 6, 9});
  c.check("A(id), A(g) up to relabeling", [&] {
    const IntMatrix a_id = matrix(4, {2, 1, 0, 0, 1, 0, 1, 1, 0, 1, 0, 1, 0, 1, 1, 0});
    const IntMatrix a_g = matrix(4, {0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 2, 0, 1, 1, 0, 0});
    return oracle::cyclic_families_equivalent(cyclic_family(r), {a_id, a_g});
  });
  c.check("zeta(Gamma_2) reciprocal", [&] {
    return r.base_zeta == expand(4, {t_minus_1, three_t_minus_1, q_3t2_plus_1, q_3t2_minus_2t_plus_1, q_3t2_plus_2t_plus_1});
  });
  c.check("L of the nontrivial character", [&] { return integer_factor(r, 1) == expand(4, {quartic_minus, quartic_plus}); });
  c.check("zeta(Gamma_3) reciprocal", [&] {
    return r.cover_zeta ==
           expand(8, {t_minus_1, three_t_minus_1, q_3t2_plus_1, q_3t2_minus_2t_plus_1, q_3t2_plus_2t_plus_1, quartic_minus, quartic_plus});
  });
  c.check("product formula", [&] { return r.pass; });
  const Automaton linear = bundled_automaton("linear");
  for (int n = 1; n <= 6; ++n) {
    c.check("Gamma_" + std::to_string(n + 1) + " over Gamma_" + std::to_string(n) + " is normal with deck group of order 2", [&] {
      const CoveringMap cov = level_covering(linear, n + 1, n);
      const DeckGroup g = deck_group(cov);
      return g.order() == 2 && is_normal(cov, g);
    });
  }
}

void criterion_galois(Checker& c) {
  struct Case {
    const char* name;
    int max_level;
    std::size_t order;
  };
  const std::vector<Case> cases = {{"grigorchuk", 5, 2}, {"basilica", 5, 2},      {"fabrykowski_gupta", 3, 3}, {"gupta_sidki_3", 3, 3},
                                   {"bsv_2", 3, 2},      {"bsv_3", 3, 3},         {"bsv_4", 3, 4},             {"bsv_5", 3, 5}};
  for (const auto& k : cases) {
    const Automaton aut = bundled_automaton(k.name);
    for (int n = 1; n <= k.max_level; ++n) {
      c.check(std::string(k.name) + " level " + std::to_string(n) + ": PASS with deck group of order " + std::to_string(k.order), [&] {
        const GaloisReport r = verify_galois_theorem(aut, n);
        return r.verdict == GaloisVerdict::Pass && r.deck_order == k.order;
      });
    }
  }
  const Automaton hanoi = bundled_automaton("hanoi");
  for (int n = 1; n <= 3; ++n) {
    c.check("hanoi level " + std::to_string(n) + ": root group of order 6, covering non-normal", [&] {
      const GaloisReport r = verify_galois_theorem(hanoi, n);
      return r.verdict == GaloisVerdict::HypothesisNotMet && r.root_group_order == 6 && !r.normal && r.deck_order < 3;
    });
  }
}

bool is_bounded(const Automaton& aut) { return activity_class(aut).kind == ActivityKind::Bounded; }

void criterion_structure(Checker& c) {
  for (const auto& name : bundled_names()) {
    const Automaton aut = bundled_automaton(name);
    const int d = aut.alphabet_size();
    if (is_bounded(aut)) {
      int checks = 0;
      c.check(name + ": inflation of tile graphs for all d^(r+n) <= 4096", [&] {
        for (int r = 1; checked_power(d, r + 1, 1U << 30U) <= 4096; ++r) {
          for (int n = 1; checked_power(d, r + n, 1U << 30U) <= 4096; ++n) {
            if (!verify_inflation(aut, r, n).pass) return false;
            ++checks;
          }
        }
        return checks > 0;
      });
      c.check(name + ": tile graphs connected for n <= 8", [&] {
        for (int n = 1; n <= 8; ++n) {
          if (!is_connected(build_tile(aut, n, std::size_t{1} << 22U))) return false;
        }
        return true;
      });
    }
    const int max_total = d == 2 ? 12 : (d <= 4 ? 7 : 5);
    c.check(name + ": replacement product isomorphic to Gamma_(n+r) for n + r <= " + std::to_string(max_total), [&] {
      for (int total = 0; total <= max_total; ++total) {
        for (int r = 0; r <= total; ++r) {
          if (!verify_iso_to_schreier(gen_replacement(aut, total - r, r), aut).pass) return false;
        }
      }
      return true;
    });
  }

  const Automaton basilica = bundled_automaton("basilica");
  c.check("basilica post-critical set {0^-w, (01)^-w, (10)^-w}", [&] {
    const auto p = post_critical_sequences(basilica);
    return p == std::vector<EventuallyPeriodicWord>{{{0}, {}}, {{0, 1}, {}}, {{1, 0}, {}}};
  });
  c.check("basilica model edges {p1 1, p3 0} and {p1 1, p2 1}", [&] {
    const ModelGraph m = model_graph(basilica, 1);
    std::set<std::set<std::pair<std::size_t, Word>>> got;
    for (const auto& e : m.edges) got.insert({{e.p, e.x}, {e.q, e.y}});
    const std::set<std::set<std::pair<std::size_t, Word>>> expected = {{{0, {1}}, {2, {0}}}, {{0, {1}}, {1, {1}}}};
    return got == expected;
  });
}

/// Connected loop-free Schreier and tile graphs of the bundled automata with at most 64 arcs.
std::vector<std::pair<std::string, RotationGraph>> loop_free_graphs() {
  std::vector<std::pair<std::string, RotationGraph>> out;
  for (const auto& name : bundled_names()) {
    const Automaton aut = bundled_automaton(name);
    for (int n = 1; n <= 6; ++n) {
      if (checked_power(aut.alphabet_size(), n, 1U << 30U) > 64) break;
      for (bool tile : {false, true}) {
        RotationGraph g = tile ? build_tile(aut, n) : build_schreier(aut, n);
        const GraphStats s = graph_stats(g);
        if (s.loops + s.half_loops > 0 || !is_connected(g) || g.half_edge_count() > 64) continue;
        out.emplace_back(name + (tile ? " tile " : " level ") + std::to_string(n), std::move(g));
      }
    }
  }
  return out;
}

void criterion_oracles(Checker& c) {
  const auto graphs = loop_free_graphs();
  c.note(std::to_string(graphs.size()) + " connected loop-free graphs");
  for (const auto& [label, g] : graphs) {
    const IntPoly ihara = ihara_zeta_reciprocal(g);
    c.check(label + ": non-backtracking determinant equals Ihara-Bass", [&] { return hashimoto_zeta_reciprocal(g) == ihara; });
    c.check(label + ": prime cycle counts to order 10 match the log series", [&] {
      const auto counts = prime_cycle_counts(g, 10);
      return log_series_matches(ihara, counts) && counts == oracle::closed_walk_counts(g, 10);
    });
  }

  std::mt19937 rng(20240607);
  std::uniform_int_distribution<int> size(1, 4);
  c.check("Bareiss equals Laplace expansion on 200 random polynomial matrices", [&] {
    for (int i = 0; i < 200; ++i) {
      const IntPolyMatrix m = oracle::random_poly_matrix(rng, size(rng), 3, 5);
      if (determinant(m) != oracle::laplace_determinant(m)) return false;
    }
    return true;
  });

  for (const auto& name : bundled_names()) {
    const Automaton aut = bundled_automaton(name);
    for (int n = 0; n <= 2; ++n) {
      c.check(name + " level " + std::to_string(n + 1) + " over " + std::to_string(n) + ": character orthogonality", [&] {
        const CoveringMap cov = level_covering(aut, n + 1, n);
        const DeckGroup g = deck_group(cov);
        if (!g.is_abelian()) return false;
        return orthogonality_holds(character_table(g));
      });
    }
  }
}

struct Definition {
  const char* title;
  void (*run)(Checker&);
};

const Definition kDefinitions[kCriterionCount] = {
    {"BSV d=4: zeta, L-functions, A-matrices, product formula", criterion_bsv},
    {"Grigorchuk: zeta(Gamma_1), L, zeta(Gamma_2)", criterion_grigorchuk},
    {"Basilica: zeta(Gamma_2), L, zeta(Gamma_3)", criterion_basilica},
    {"Fabrykowski-Gupta: zeta(Gamma_1), zeta(Gamma_2), conjugate L pair", criterion_fabrykowski_gupta},
    {"Gupta-Sidki p=3: zeta(Gamma_1), L, zeta(Gamma_2)", criterion_gupta_sidki},
    {"Linear automaton: A-matrices, zeta, L, normality up to level 6", criterion_linear},
    {"Galois coverings: deck groups and Frobenius elements", criterion_galois},
    {"Structure: inflation, replacement product, tiles, Basilica model graph", criterion_structure},
    {"Oracles: non-backtracking zeta, prime cycles, Laplace, characters", criterion_oracles},
};

}  // namespace

CriterionResult run_criterion(int id) {
  if (id < 1 || id > kCriterionCount) throw ValidationError("no acceptance criterion " + std::to_string(id));
  const Definition& def = kDefinitions[id - 1];
  CriterionResult r;
  r.id = id;
  r.title = def.title;
  Checker c(r);
  try {
    def.run(c);
  } catch (const std::exception& e) {
    c.check(std::string("setup: ") + e.what(), [] { return false; });
  }
  r.pass = c.all();
  return r;
}

std::vector<CriterionResult> run_acceptance() {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id) out.push_back(run_criterion(id));
  return out;
}

std::string format_criterion(const CriterionResult& r, bool verbose) {
  std::ostringstream os;
  os << (r.pass ? "PASS " : "FAIL ") << r.id << " " << r.title << "\n";
  if (verbose || !r.pass) {
    for (const auto& line : r.details) os << "    " << line << "\n";
  }
  return os.str();
}

}  // namespace asg
