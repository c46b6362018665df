#pragma once

#include <string>
#include <utility>
#include <vector>

#include "asg/words.hpp"

namespace asg {

/// Index of a state inside an Automaton. The trivial state is always 0.
using State = int;

inline constexpr std::size_t kDefaultVertexLimit = 65536;

struct StateData {
  std::string name;
  std::vector<int> permutation;  ///< letter -> letter
  std::vector<State> sections;   ///< letter -> state
  State inverse = 0;
  bool synthesized = false;      ///< inverse created at parse time
  bool explicit_inverse = false; ///< declared in the document as `name^-1`

  friend bool operator==(const StateData&, const StateData&) = default;
};

/// Product s_1 * s_2 * ... * s_k; the rightmost factor acts first.
using GroupWord = std::vector<State>;

enum class ActivityKind { Bounded, Polynomial, Exponential };

struct Activity {
  ActivityKind kind;
  int degree = 0;  ///< k for Polynomial(k)

  friend bool operator==(const Activity&, const Activity&) = default;
};

std::string to_string(const Activity& a);

struct PermutationGroup {
  std::vector<std::vector<int>> elements;  ///< sorted; identity first
  std::size_t order() const { return elements.size(); }
};

/// Invertible automaton given by wreath recursions.
///
/// The generating set is closed under inversion: every declared generator is
/// followed in `colors()` by its inverse unless it is an involution.
class Automaton {
 public:
  Automaton(int alphabet_size, std::vector<StateData> states, std::vector<State> generators);

  int alphabet_size() const { return d_; }
  std::size_t state_count() const { return states_.size(); }
  const StateData& state(State s) const { return states_.at(static_cast<std::size_t>(s)); }
  const std::vector<StateData>& states() const { return states_; }
  static constexpr State trivial() { return 0; }
  const std::string& name(State s) const { return state(s).name; }
  State inverse(State s) const { return state(s).inverse; }
  bool is_involution(State s) const { return s != 0 && inverse(s) == s; }

  /// Declared generators, in document order.
  const std::vector<State>& generators() const { return generators_; }
  /// Generating set S with inverses, each generator followed by its inverse.
  const std::vector<State>& colors() const { return colors_; }
  /// Position of a state in colors(), or -1.
  int color_index(State s) const { return color_of_state_.at(static_cast<std::size_t>(s)); }

  /// Throws ValidationError for unknown names.
  State find(const std::string& name) const;

  /// (psi_s(x), s|_x).
  std::pair<int, State> act_letter(State s, int x) const {
    const auto& st = states_[static_cast<std::size_t>(s)];
    return {st.permutation[static_cast<std::size_t>(x)], st.sections[static_cast<std::size_t>(x)]};
  }

  /// Image of w under the state, written in place; returns the restriction s|_w.
  State act(State s, Word& w) const {
    for (auto& x : w) {
      if (s == 0) break;
      auto [y, next] = act_letter(s, x);
      x = y;
      s = next;
    }
    return s;
  }

  /// Restriction s|_w without computing the image.
  State restriction(State s, const Word& w) const {
    for (int x : w) {
      if (s == 0) break;
      s = states_[static_cast<std::size_t>(s)].sections[static_cast<std::size_t>(x)];
    }
    return s;
  }

  /// Action of a product of states; the restriction is freely reduced.
  std::pair<Word, GroupWord> act_word(const GroupWord& g, const Word& w) const;
  GroupWord reduce(const GroupWord& g) const;
  GroupWord inverse(const GroupWord& g) const;

  friend bool operator==(const Automaton&, const Automaton&) = default;

 private:
  int d_;
  std::vector<StateData> states_;
  std::vector<State> generators_;
  std::vector<State> colors_;
  std::vector<int> color_of_state_;
};

/// Activity growth of the Moore diagram restricted to nontrivial states.
Activity activity_class(const Automaton& aut);

/// True iff the orbit of 0^n under the generators is all of X^n.
bool is_level_transitive(const Automaton& aut, int n, std::size_t limit = kDefaultVertexLimit);

/// Group generated by the root permutations of the generators.
PermutationGroup root_permutation_group(const Automaton& aut);

/// Exact test of s*s = 1 by exploring restriction pairs reachable from (s, s).
bool squares_to_identity(const Automaton& aut, State s);

}  // namespace asg
