#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "asg/automaton.hpp"

namespace asg {

/// Left-infinite sequence ...ppp·tail in canonical form: the period is
/// primitive and the tail cannot be shortened by rotating the period.
class EventuallyPeriodicWord {
 public:
  EventuallyPeriodicWord(Word period, Word tail);

  const Word& period() const { return period_; }
  const Word& tail() const { return tail_; }

  /// Last letter x_1.
  int last() const { return tail_.empty() ? period_.back() : tail_.back(); }
  /// The sequence with its last letter removed.
  EventuallyPeriodicWord shift() const;
  /// The last n letters x_n ... x_1.
  Word truncate(int n) const;

  std::string to_string(int d) const;

  friend auto operator<=>(const EventuallyPeriodicWord&, const EventuallyPeriodicWord&) = default;
  friend bool operator==(const EventuallyPeriodicWord&, const EventuallyPeriodicWord&) = default;

 private:
  Word period_;
  Word tail_;
};

/// Post-critical sequences of a bounded automaton, sorted and deduplicated.
/// Throws NotBounded otherwise.
std::vector<EventuallyPeriodicWord> post_critical_sequences(const Automaton& aut);

struct PostCriticalVertex {
  Word vertex;
  std::vector<std::size_t> sources;  ///< indices into the sequence list
};

/// Length-n truncations, sorted by word, each with the sequences truncating to it.
std::vector<PostCriticalVertex> post_critical_vertices(const std::vector<EventuallyPeriodicWord>& p, int n);

}  // namespace asg
