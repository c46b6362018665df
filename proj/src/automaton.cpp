#include "asg/automaton.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <set>

namespace asg {

namespace {

bool is_permutation_of_letters(const std::vector<int>& p, int d) {
  if (static_cast<int>(p.size()) != d) return false;
  std::vector<bool> seen(static_cast<std::size_t>(d), false);
  for (int y : p) {
    if (y < 0 || y >= d || seen[static_cast<std::size_t>(y)]) return false;
    seen[static_cast<std::size_t>(y)] = true;
  }
  return true;
}

}  // namespace

std::string to_string(const Activity& a) {
  switch (a.kind) {
    case ActivityKind::Bounded:
      return "bounded";
    case ActivityKind::Polynomial:
      return "polynomial(" + std::to_string(a.degree) + ")";
    case ActivityKind::Exponential:
      return "exponential";
  }
  return "unknown";
}

Automaton::Automaton(int alphabet_size, std::vector<StateData> states, std::vector<State> generators)
    : d_(alphabet_size), states_(std::move(states)), generators_(std::move(generators)) {
  if (d_ < 2) throw ValidationError("alphabet size must be at least 2");
  if (states_.empty()) throw ValidationError("automaton has no trivial state");
  const int k = static_cast<int>(states_.size());
  for (State s = 0; s < k; ++s) {
    const auto& st = states_[static_cast<std::size_t>(s)];
    if (!is_permutation_of_letters(st.permutation, d_)) {
      throw ValidationError("permutation of state " + st.name + " is not a bijection on " + std::to_string(d_) +
                            " letters");
    }
    if (static_cast<int>(st.sections.size()) != d_) {
      throw ValidationError("state " + st.name + " needs " + std::to_string(d_) + " sections");
    }
    for (State t : st.sections) {
      if (t < 0 || t >= k) throw ValidationError("state " + st.name + " has a section out of range");
    }
    if (st.inverse < 0 || st.inverse >= k || states_[static_cast<std::size_t>(st.inverse)].inverse != s) {
      throw ValidationError("inverse of state " + st.name + " is inconsistent");
    }
  }
  const auto& triv = states_[0];
  for (int x = 0; x < d_; ++x) {
    if (triv.permutation[static_cast<std::size_t>(x)] != x || triv.sections[static_cast<std::size_t>(x)] != 0) {
      throw ValidationError("trivial state " + triv.name + " must have identity permutation and trivial sections");
    }
  }
  if (triv.inverse != 0) throw ValidationError("trivial state must be its own inverse");

  // (s^-1)(x) = psi_s^-1(x) and (s^-1)|_x = (s|_{s^-1(x)})^-1.
  for (State s = 1; s < k; ++s) {
    const auto& st = states_[static_cast<std::size_t>(s)];
    const auto& inv = states_[static_cast<std::size_t>(st.inverse)];
    for (int x = 0; x < d_; ++x) {
      const int y = st.permutation[static_cast<std::size_t>(x)];
      if (inv.permutation[static_cast<std::size_t>(y)] != x) {
        throw ValidationError("permutation of " + inv.name + " is not the inverse of that of " + st.name);
      }
      const State sec = st.sections[static_cast<std::size_t>(x)];
      if (inv.sections[static_cast<std::size_t>(y)] != states_[static_cast<std::size_t>(sec)].inverse) {
        throw ValidationError("sections of " + inv.name + " do not invert those of " + st.name);
      }
    }
  }
  for (State s = 1; s < k; ++s) {
    if (states_[static_cast<std::size_t>(s)].inverse == s && !squares_to_identity(*this, s)) {
      throw ValidationError("state " + states_[static_cast<std::size_t>(s)].name + " is marked involutive but s*s != 1");
    }
  }

  color_of_state_.assign(static_cast<std::size_t>(k), -1);
  for (State g : generators_) {
    if (g <= 0 || g >= k) throw ValidationError("generator index out of range");
    if (color_of_state_[static_cast<std::size_t>(g)] != -1) {
      throw ValidationError("generator " + name(g) + " listed twice");
    }
    color_of_state_[static_cast<std::size_t>(g)] = static_cast<int>(colors_.size());
    colors_.push_back(g);
    const State gi = inverse(g);
    if (gi != g) {
      if (color_of_state_[static_cast<std::size_t>(gi)] != -1) {
        throw ValidationError("generator " + name(gi) + " is also the inverse of " + name(g));
      }
      color_of_state_[static_cast<std::size_t>(gi)] = static_cast<int>(colors_.size());
      colors_.push_back(gi);
    }
  }
}

State Automaton::find(const std::string& n) const {
  for (std::size_t i = 0; i < states_.size(); ++i) {
    if (states_[i].name == n) return static_cast<State>(i);
  }
  throw ValidationError("unknown state " + n);
}

GroupWord Automaton::reduce(const GroupWord& g) const {
  GroupWord out;
  for (State s : g) {
    if (s == 0) continue;
    if (!out.empty() && inverse(out.back()) == s) {
      out.pop_back();
    } else {
      out.push_back(s);
    }
  }
  return out;
}

GroupWord Automaton::inverse(const GroupWord& g) const {
  GroupWord out;
  for (auto it = g.rbegin(); it != g.rend(); ++it) out.push_back(inverse(*it));
  return out;
}

std::pair<Word, GroupWord> Automaton::act_word(const GroupWord& g, const Word& w) const {
  Word image = w;
  GroupWord restr(g.size());
  for (std::size_t i = g.size(); i-- > 0;) restr[i] = act(g[i], image);
  return {image, reduce(restr)};
}

bool squares_to_identity(const Automaton& aut, State s) {
  const int d = aut.alphabet_size();
  std::set<std::pair<State, State>> seen;
  std::vector<std::pair<State, State>> stack{{s, s}};
  seen.insert({s, s});
  while (!stack.empty()) {
    auto [outer, inner] = stack.back();
    stack.pop_back();
    for (int x = 0; x < d; ++x) {
      auto [y, inner_next] = aut.act_letter(inner, x);
      auto [z, outer_next] = aut.act_letter(outer, y);
      if (z != x) return false;
      std::pair<State, State> next{outer_next, inner_next};
      if (seen.insert(next).second) stack.push_back(next);
    }
  }
  return true;
}

Activity activity_class(const Automaton& aut) {
  const int k = static_cast<int>(aut.state_count());
  const int d = aut.alphabet_size();
  // Moore digraph on nontrivial states, parallel edges kept.
  std::vector<std::vector<State>> out(static_cast<std::size_t>(k));
  for (State s = 1; s < k; ++s) {
    for (int x = 0; x < d; ++x) {
      const State t = aut.state(s).sections[static_cast<std::size_t>(x)];
      if (t != 0) out[static_cast<std::size_t>(s)].push_back(t);
    }
  }

  // Tarjan's strongly connected components.
  std::vector<int> index(static_cast<std::size_t>(k), -1), low(static_cast<std::size_t>(k), 0), comp(static_cast<std::size_t>(k), -1);
  std::vector<bool> on_stack(static_cast<std::size_t>(k), false);
  std::vector<State> stack;
  int counter = 0;
  int comps = 0;
  std::function<void(State)> visit = [&](State v) {
    auto vi = static_cast<std::size_t>(v);
    index[vi] = low[vi] = counter++;
    stack.push_back(v);
    on_stack[vi] = true;
    for (State w : out[vi]) {
      auto wi = static_cast<std::size_t>(w);
      if (index[wi] == -1) {
        visit(w);
        low[vi] = std::min(low[vi], low[wi]);
      } else if (on_stack[wi]) {
        low[vi] = std::min(low[vi], index[wi]);
      }
    }
    if (low[vi] == index[vi]) {
      State w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[static_cast<std::size_t>(w)] = false;
        comp[static_cast<std::size_t>(w)] = comps;
      } while (w != v);
      ++comps;
    }
  };
  for (State s = 1; s < k; ++s) {
    if (index[static_cast<std::size_t>(s)] == -1) visit(s);
  }

  std::vector<bool> cyclic(static_cast<std::size_t>(comps), false);
  for (State s = 1; s < k; ++s) {
    int internal = 0;
    for (State t : out[static_cast<std::size_t>(s)]) {
      if (comp[static_cast<std::size_t>(t)] == comp[static_cast<std::size_t>(s)]) ++internal;
    }
    if (internal >= 2) return {ActivityKind::Exponential, 0};
    if (internal == 1) cyclic[static_cast<std::size_t>(comp[static_cast<std::size_t>(s)])] = true;
  }

  // Tarjan emits components in reverse topological order, so successors come first.
  std::vector<std::vector<int>> comp_out(static_cast<std::size_t>(comps));
  for (State s = 1; s < k; ++s) {
    for (State t : out[static_cast<std::size_t>(s)]) {
      const int a = comp[static_cast<std::size_t>(s)];
      const int b = comp[static_cast<std::size_t>(t)];
      if (a != b) comp_out[static_cast<std::size_t>(a)].push_back(b);
    }
  }
  std::vector<int> chain(static_cast<std::size_t>(comps), 0);
  int longest = 0;
  for (int c = 0; c < comps; ++c) {
    int best = 0;
    for (int e : comp_out[static_cast<std::size_t>(c)]) best = std::max(best, chain[static_cast<std::size_t>(e)]);
    chain[static_cast<std::size_t>(c)] = best + (cyclic[static_cast<std::size_t>(c)] ? 1 : 0);
    longest = std::max(longest, chain[static_cast<std::size_t>(c)]);
  }
  if (longest <= 1) return {ActivityKind::Bounded, 0};
  return {ActivityKind::Polynomial, longest - 1};
}

bool is_level_transitive(const Automaton& aut, int n, std::size_t limit) {
  const int d = aut.alphabet_size();
  const std::size_t count = checked_power(d, n, limit);
  std::vector<bool> seen(count, false);
  std::deque<std::size_t> queue{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    for (State s : aut.colors()) {
      Word w = index_word(v, d, n);
      aut.act(s, w);
      const std::size_t u = word_index(w, d);
      if (!seen[u]) {
        seen[u] = true;
        ++reached;
        queue.push_back(u);
      }
    }
  }
  return reached == count;
}

PermutationGroup root_permutation_group(const Automaton& aut) {
  const int d = aut.alphabet_size();
  std::vector<int> id(static_cast<std::size_t>(d));
  std::iota(id.begin(), id.end(), 0);
  std::set<std::vector<int>> group{id};
  std::vector<std::vector<int>> frontier{id};
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& p : frontier) {
      for (State g : aut.generators()) {
        const auto& q = aut.state(g).permutation;
        std::vector<int> r(static_cast<std::size_t>(d));
        for (int x = 0; x < d; ++x) r[static_cast<std::size_t>(x)] = q[static_cast<std::size_t>(p[static_cast<std::size_t>(x)])];
        if (group.insert(r).second) next.push_back(r);
      }
    }
    frontier = std::move(next);
  }
  return PermutationGroup{{group.begin(), group.end()}};
}

}  // namespace asg
