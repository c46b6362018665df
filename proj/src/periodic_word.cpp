#include "asg/periodic_word.hpp"

#include <algorithm>
#include <set>

namespace asg {

namespace {

Word primitive_root(const Word& w) {
  const std::size_t n = w.size();
  for (std::size_t len = 1; len < n; ++len) {
    if (n % len != 0) continue;
    bool ok = true;
    for (std::size_t i = len; i < n && ok; ++i) ok = w[i] == w[i - len];
    if (ok) return Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(len));
  }
  return w;
}

}  // namespace

EventuallyPeriodicWord::EventuallyPeriodicWord(Word period, Word tail) : period_(std::move(period)), tail_(std::move(tail)) {
  if (period_.empty()) throw ValidationError("period of an eventually periodic word must be nonempty");
  period_ = primitive_root(period_);
  // ...(p0 p1..pk)(p0 p1..pk) p0 t' = ...(p1..pk p0)(p1..pk p0) t'
  std::size_t drop = 0;
  while (drop < tail_.size() && tail_[drop] == period_[0]) {
    std::rotate(period_.begin(), period_.begin() + 1, period_.end());
    ++drop;
  }
  tail_.erase(tail_.begin(), tail_.begin() + static_cast<std::ptrdiff_t>(drop));
}

EventuallyPeriodicWord EventuallyPeriodicWord::shift() const {
  if (!tail_.empty()) return EventuallyPeriodicWord(period_, Word(tail_.begin(), tail_.end() - 1));
  Word p = period_;
  std::rotate(p.rbegin(), p.rbegin() + 1, p.rend());
  return EventuallyPeriodicWord(std::move(p), {});
}

Word EventuallyPeriodicWord::truncate(int n) const {
  Word out(static_cast<std::size_t>(n));
  const auto tn = static_cast<long long>(tail_.size());
  const auto pn = static_cast<long long>(period_.size());
  for (long long i = 0; i < n; ++i) {
    // position counted from the right end: 0 is the last letter
    const long long from_right = n - 1 - i;
    int letter;
    if (from_right < tn) {
      letter = tail_[static_cast<std::size_t>(tn - 1 - from_right)];
    } else {
      const long long k = (from_right - tn) % pn;
      letter = period_[static_cast<std::size_t>(pn - 1 - k)];
    }
    out[static_cast<std::size_t>(i)] = letter;
  }
  return out;
}

std::string EventuallyPeriodicWord::to_string(int d) const {
  std::string out = "(" + word_label(period_, d) + ")^-w";
  if (!tail_.empty()) out += word_label(tail_, d);
  return out;
}

std::vector<EventuallyPeriodicWord> post_critical_sequences(const Automaton& aut) {
  const Activity act = activity_class(aut);
  if (act.kind != ActivityKind::Bounded) throw NotBounded("post-critical sequences need a bounded automaton (activity " + to_string(act) + ")");
  const int k = static_cast<int>(aut.state_count());
  const int d = aut.alphabet_size();

  auto reachable_from = [&](State s) {
    std::vector<bool> seen(static_cast<std::size_t>(k), false);
    std::vector<State> stack{s};
    while (!stack.empty()) {
      State u = stack.back();
      stack.pop_back();
      for (int x = 0; x < d; ++x) {
        State v = aut.state(u).sections[static_cast<std::size_t>(x)];
        if (v != 0 && !seen[static_cast<std::size_t>(v)]) {
          seen[static_cast<std::size_t>(v)] = true;
          stack.push_back(v);
        }
      }
    }
    return seen;
  };

  std::set<EventuallyPeriodicWord> found;
  for (State c = 1; c < k; ++c) {
    if (!reachable_from(c)[static_cast<std::size_t>(c)]) continue;
    // In a bounded automaton each cycle state has exactly one out-edge inside its cycle.
    Word period;
    std::vector<bool> on_cycle(static_cast<std::size_t>(k), false);
    State u = c;
    do {
      on_cycle[static_cast<std::size_t>(u)] = true;
      State next = 0;
      for (int x = 0; x < d; ++x) {
        State v = aut.state(u).sections[static_cast<std::size_t>(x)];
        if (v != 0 && reachable_from(v)[static_cast<std::size_t>(c)]) {
          period.push_back(x);
          next = v;
          break;
        }
      }
      u = next;
    } while (u != c);
    found.insert(EventuallyPeriodicWord(period, {}));

    // Simple paths leaving the cycle at c through nontrivial states.
    struct Frame {
      State state;
      Word tail;
    };
    std::vector<Frame> stack;
    for (int x = 0; x < d; ++x) {
      State v = aut.state(c).sections[static_cast<std::size_t>(x)];
      if (v != 0 && !on_cycle[static_cast<std::size_t>(v)]) stack.push_back({v, {x}});
    }
    while (!stack.empty()) {
      Frame f = std::move(stack.back());
      stack.pop_back();
      found.insert(EventuallyPeriodicWord(period, f.tail));
      for (int x = 0; x < d; ++x) {
        State v = aut.state(f.state).sections[static_cast<std::size_t>(x)];
        if (v == 0) continue;
        Word t = f.tail;
        t.push_back(x);
        stack.push_back({v, std::move(t)});
      }
    }
  }
  return {found.begin(), found.end()};
}

std::vector<PostCriticalVertex> post_critical_vertices(const std::vector<EventuallyPeriodicWord>& p, int n) {
  std::map<Word, std::vector<std::size_t>> by_word;
  for (std::size_t i = 0; i < p.size(); ++i) by_word[p[i].truncate(n)].push_back(i);
  std::vector<PostCriticalVertex> out;
  for (auto& [w, src] : by_word) out.push_back({w, std::move(src)});
  return out;
}

}  // namespace asg
