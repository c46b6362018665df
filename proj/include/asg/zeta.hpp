#pragma once

#include <string>
#include <vector>

#include "asg/algebra/cyclotomic.hpp"
#include "asg/algebra/ring_matrix.hpp"
#include "asg/covering.hpp"
#include "asg/rotation_graph.hpp"

namespace asg {

/// (1 - t^2)^(|E| - |V|) det(I - At + Qt^2). Throws DisconnectedGraph.
/// Regular graphs above a few dozen vertices go through the characteristic
/// polynomial of A instead of a polynomial-matrix determinant.
IntPoly ihara_zeta_reciprocal(const RotationGraph& g);

/// Same value, always by fraction-free elimination on I - At + Qt^2.
IntPoly ihara_zeta_reciprocal_bareiss(const RotationGraph& g);

/// Non-backtracking matrix on the present half-edges, each read as the arc
/// from its vertex to its partner's vertex. Throws LoopsUnsupported.
IntMatrix hashimoto_matrix(const RotationGraph& g);

/// det(I - tB) for the non-backtracking matrix B.
IntPoly hashimoto_zeta_reciprocal(const RotationGraph& g);

/// N_1..N_L with N_m = tr(B^m), the number of closed non-backtracking tailless walks of length m.
std::vector<Integer> prime_cycle_counts(const RotationGraph& g, int length);

/// Whether t P'(t) = -P(t) sum_m N_m t^m modulo t^(L+1), i.e. -log P = sum_m N_m t^m / m.
bool log_series_matches(const IntPoly& reciprocal, const std::vector<Integer>& counts);

/// Sheet-to-sheet adjacency blocks of a normal covering.
struct ABundle {
  std::vector<IntMatrix> a;  ///< indexed by deck element
  IntMatrix q;
  long long base_rank_minus_one = 0;
  long long cover_rank_minus_one = 0;
  std::size_t sheets = 0;
};

/// A(g)_ij counts half-edges at the identity lift of i whose partner lies over j on sheet g.
ABundle a_matrices(const CoveringMap& c, const DeckGroup& g, const SheetLabeling& s);

/// Characters of an abelian deck group as products of cyclic characters.
struct CharacterTable {
  std::vector<std::size_t> generators;  ///< deck elements
  std::vector<int> orders;              ///< cyclic factor orders
  int value_order = 1;                  ///< lcm of the factor orders
  std::vector<std::vector<int>> exponents;  ///< per deck element, coordinates over the generators
  std::vector<std::vector<CycInt>> values;  ///< [character][deck element]; character 0 is trivial

  std::size_t size() const { return values.size(); }
};

/// Throws NonAbelianUnsupported.
CharacterTable character_table(const DeckGroup& g);

/// sum_g chi_i(g) conj(chi_j(g)) = |G| delta_ij.
bool orthogonality_holds(const CharacterTable& t);

/// Exponent of (1 - t^2) in the L-function reciprocal of a character.
int l_exponent(const ABundle& ab, bool trivial_character);

/// sum_g chi(g) A(g).
RingMatrix<CycInt> twisted_adjacency(const ABundle& ab, const CharacterTable& t, std::size_t character);

/// (1 - t^2)^e det(I - t A_chi + t^2 Q).
CycPoly artin_l_reciprocal(const ABundle& ab, const CharacterTable& t, std::size_t character);

struct ProductReport {
  bool pass = false;
  std::size_t sheets = 0;
  DeckGroup deck;
  SheetLabeling labeling;
  ABundle bundle;
  CharacterTable characters;
  std::vector<int> exponents;
  std::vector<CycPoly> factors;
  IntPoly product;
  IntPoly cover_zeta;
  IntPoly base_zeta;
  std::vector<std::string> notes;
};

/// Builds the L-functions of a normal covering with abelian deck group and
/// checks that their product is the total graph's zeta reciprocal.
/// Throws NotNormal or NonAbelianUnsupported.
ProductReport verify_product_formula(const CoveringMap& c);

}  // namespace asg
