#include "asg/automaton_format.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

namespace asg {

namespace {

constexpr std::string_view kInverseSuffix = "^-1";

struct DeclaredState {
  std::string name;
  std::vector<int> permutation;
  std::vector<std::string> sections;
  int line;
};

bool ends_with_inverse(const std::string& s) {
  return s.size() > kInverseSuffix.size() && s.compare(s.size() - kInverseSuffix.size(), kInverseSuffix.size(), kInverseSuffix) == 0;
}

std::string strip_inverse(const std::string& s) { return s.substr(0, s.size() - kInverseSuffix.size()); }

/// Cursor over a single line with 1-based column reporting.
class LineScanner {
 public:
  LineScanner(std::string_view text, int line) : text_(text), line_(line) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  void expect_word(std::string_view w) {
    skip_space();
    if (text_.substr(pos_, w.size()) != w) fail("expected '" + std::string(w) + "'");
    pos_ += w.size();
  }
  bool try_word(std::string_view w) {
    skip_space();
    if (text_.substr(pos_, w.size()) != w) return false;
    pos_ += w.size();
    return true;
  }

  /// Identifier optionally followed by ^-1.
  std::string name() {
    skip_space();
    const std::size_t start = pos_;
    if (pos_ >= text_.size() || !(std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      fail("expected a state name");
    }
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
    if (text_.substr(pos_, kInverseSuffix.size()) == kInverseSuffix) pos_ += kInverseSuffix.size();
    return std::string(text_.substr(start, pos_ - start));
  }

  long long integer() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a non-negative integer");
    if (pos_ - start > 9) fail("integer too large");
    return std::stoll(std::string(text_.substr(start, pos_ - start)));
  }

  int column() const { return static_cast<int>(pos_) + 1; }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(line_, column(), what); }

 private:
  std::string_view text_;
  int line_;
  std::size_t pos_ = 0;
};

std::vector<int> parse_permutation(LineScanner& sc, int d) {
  std::vector<int> perm(static_cast<std::size_t>(d));
  for (int x = 0; x < d; ++x) perm[static_cast<std::size_t>(x)] = x;
  if (sc.try_word("id")) return perm;
  std::vector<bool> moved(static_cast<std::size_t>(d), false);
  if (!sc.peek('(')) sc.fail("expected 'id' or a cycle");
  while (sc.peek('(')) {
    sc.expect('(');
    std::vector<int> cycle;
    while (!sc.peek(')')) {
      const int col = sc.column();
      const long long x = sc.integer();
      if (x >= d) sc.fail("letter " + std::to_string(x) + " outside alphabet of size " + std::to_string(d) + " (column " + std::to_string(col) + ")");
      if (moved[static_cast<std::size_t>(x)]) sc.fail("letter " + std::to_string(x) + " repeated; permutation is not a bijection");
      moved[static_cast<std::size_t>(x)] = true;
      cycle.push_back(static_cast<int>(x));
      if (sc.peek(',')) sc.expect(',');
    }
    sc.expect(')');
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      perm[static_cast<std::size_t>(cycle[i])] = cycle[(i + 1) % cycle.size()];
    }
  }
  return perm;
}

}  // namespace

std::string cycle_notation(const std::vector<int>& permutation) {
  std::string out;
  std::vector<bool> done(permutation.size(), false);
  for (std::size_t x = 0; x < permutation.size(); ++x) {
    if (done[x] || permutation[x] == static_cast<int>(x)) continue;
    out += '(';
    std::size_t y = x;
    bool first = true;
    while (!done[y]) {
      done[y] = true;
      if (!first) out += ' ';
      first = false;
      out += std::to_string(y);
      y = static_cast<std::size_t>(permutation[y]);
    }
    out += ')';
  }
  return out.empty() ? "id" : out;
}

Automaton parse_automaton(std::string_view text) {
  std::optional<int> alphabet;
  std::optional<std::string> trivial;
  std::vector<DeclaredState> declared;
  std::vector<std::pair<std::string, int>> involution_names;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    LineScanner sc(line, line_no);
    if (sc.at_end()) continue;

    if (sc.try_word("alphabet")) {
      sc.expect(':');
      if (alphabet) sc.fail("alphabet declared twice");
      const long long d = sc.integer();
      if (d < 2) sc.fail("alphabet size must be at least 2");
      if (d > 64) sc.fail("alphabet size above 64 is not supported");
      alphabet = static_cast<int>(d);
    } else if (sc.try_word("trivial")) {
      sc.expect(':');
      if (trivial) sc.fail("trivial state declared twice");
      trivial = sc.name();
      if (ends_with_inverse(*trivial)) sc.fail("trivial state name cannot carry ^-1");
    } else if (sc.try_word("involutions")) {
      sc.expect(':');
      while (!sc.at_end()) {
        involution_names.emplace_back(sc.name(), line_no);
        if (sc.peek(',')) sc.expect(',');
      }
    } else if (sc.try_word("gen")) {
      if (!alphabet) sc.fail("'alphabet:' must precede state declarations");
      DeclaredState st;
      st.line = line_no;
      st.name = sc.name();
      sc.expect(':');
      sc.expect_word("perm");
      sc.expect('=');
      st.permutation = parse_permutation(sc, *alphabet);
      sc.expect_word("sections");
      sc.expect('=');
      sc.expect('[');
      while (!sc.peek(']')) {
        if (!st.sections.empty()) sc.expect(',');
        st.sections.push_back(sc.name());
      }
      sc.expect(']');
      if (static_cast<int>(st.sections.size()) != *alphabet) {
        sc.fail("state " + st.name + " has " + std::to_string(st.sections.size()) + " sections, expected " +
                std::to_string(*alphabet));
      }
      if (!sc.at_end()) sc.fail("unexpected trailing text");
      declared.push_back(std::move(st));
    } else {
      sc.fail("expected 'alphabet:', 'trivial:', 'gen' or 'involutions:'");
    }
  }
  if (!alphabet) throw ParseError(line_no, 1, "missing 'alphabet:' line");
  if (!trivial) throw ParseError(line_no, 1, "missing 'trivial:' line");
  const int d = *alphabet;

  // Index assignment: trivial first, declared states in order, synthesized inverses last.
  std::map<std::string, State> index;
  std::vector<StateData> states(1);
  states[0].name = *trivial;
  states[0].permutation.resize(static_cast<std::size_t>(d));
  for (int x = 0; x < d; ++x) states[0].permutation[static_cast<std::size_t>(x)] = x;
  states[0].sections.assign(static_cast<std::size_t>(d), 0);
  index[*trivial] = 0;
  std::vector<const DeclaredState*> origin{nullptr};
  const DeclaredState* trivial_decl = nullptr;
  for (const auto& st : declared) {
    if (st.name == *trivial) {
      if (trivial_decl) throw ValidationError("line " + std::to_string(st.line) + ": state " + st.name + " declared twice");
      trivial_decl = &st;
      continue;
    }
    if (index.count(st.name)) throw ValidationError("line " + std::to_string(st.line) + ": state " + st.name + " declared twice");
    index[st.name] = static_cast<State>(states.size());
    StateData data;
    data.name = st.name;
    data.permutation = st.permutation;
    data.explicit_inverse = ends_with_inverse(st.name);
    states.push_back(std::move(data));
    origin.push_back(&st);
  }

  std::vector<bool> involutive(states.size(), false);
  for (const auto& [n, line] : involution_names) {
    auto it = index.find(n);
    if (it == index.end()) throw ValidationError("line " + std::to_string(line) + ": undeclared state " + n + " in involutions");
    if (it->second == 0) throw ValidationError("line " + std::to_string(line) + ": the trivial state cannot be listed as an involution");
    if (states[static_cast<std::size_t>(it->second)].explicit_inverse) {
      throw ValidationError("line " + std::to_string(line) + ": " + n + " cannot be an involution and an inverse");
    }
    involutive[static_cast<std::size_t>(it->second)] = true;
  }

  std::vector<State> generators;
  const std::size_t declared_count = states.size();
  for (std::size_t s = 1; s < declared_count; ++s) {
    if (states[s].explicit_inverse) {
      const std::string base = strip_inverse(states[s].name);
      auto it = index.find(base);
      if (it == index.end() || it->second == 0) {
        throw ValidationError("line " + std::to_string(origin[s]->line) + ": " + states[s].name + " names the inverse of undeclared state " + base);
      }
      if (involutive[static_cast<std::size_t>(it->second)]) {
        throw ValidationError("line " + std::to_string(origin[s]->line) + ": " + base + " is an involution and has no separate inverse");
      }
      states[s].inverse = it->second;
      states[static_cast<std::size_t>(it->second)].inverse = static_cast<State>(s);
    }
  }
  for (std::size_t s = 1; s < declared_count; ++s) {
    if (states[s].explicit_inverse) continue;
    generators.push_back(static_cast<State>(s));
    if (involutive[s]) {
      states[s].inverse = static_cast<State>(s);
    } else if (states[s].inverse == 0) {
      StateData inv;
      inv.name = states[s].name + std::string(kInverseSuffix);
      inv.synthesized = true;
      inv.inverse = static_cast<State>(s);
      states[s].inverse = static_cast<State>(states.size());
      index[inv.name] = static_cast<State>(states.size());
      states.push_back(std::move(inv));
    }
  }

  auto resolve = [&](const std::string& token, int line) -> State {
    if (auto it = index.find(token); it != index.end()) return it->second;
    if (ends_with_inverse(token)) {
      if (auto it = index.find(strip_inverse(token)); it != index.end()) return states[static_cast<std::size_t>(it->second)].inverse;
    }
    throw ValidationError("line " + std::to_string(line) + ": undeclared state " + token);
  };
  for (std::size_t s = 1; s < declared_count; ++s) {
    for (const auto& tok : origin[s]->sections) states[s].sections.push_back(resolve(tok, origin[s]->line));
  }
  if (trivial_decl) {
    for (int x = 0; x < d; ++x) {
      if (trivial_decl->permutation[static_cast<std::size_t>(x)] != x || resolve(trivial_decl->sections[static_cast<std::size_t>(x)], trivial_decl->line) != 0) {
        throw ValidationError("line " + std::to_string(trivial_decl->line) + ": trivial state must have identity permutation and trivial sections");
      }
    }
  }

  // psi_{g^-1} = psi_g^-1 and (g^-1)|_x = (g|_{g^-1(x)})^-1.
  for (std::size_t s = declared_count; s < states.size(); ++s) {
    const auto& g = states[static_cast<std::size_t>(states[s].inverse)];
    states[s].permutation.assign(static_cast<std::size_t>(d), 0);
    states[s].sections.assign(static_cast<std::size_t>(d), 0);
    for (int x = 0; x < d; ++x) {
      const int y = g.permutation[static_cast<std::size_t>(x)];
      states[s].permutation[static_cast<std::size_t>(y)] = x;
      states[s].sections[static_cast<std::size_t>(y)] = states[static_cast<std::size_t>(g.sections[static_cast<std::size_t>(x)])].inverse;
    }
  }
  return Automaton(d, std::move(states), std::move(generators));
}

std::string serialize_automaton(const Automaton& aut) {
  std::ostringstream os;
  os << "alphabet: " << aut.alphabet_size() << "\n";
  os << "trivial: " << aut.name(Automaton::trivial()) << "\n";
  std::vector<std::string> involutions;
  for (std::size_t s = 1; s < aut.state_count(); ++s) {
    const auto& st = aut.state(static_cast<State>(s));
    if (st.synthesized) continue;
    os << "gen " << st.name << ": perm=" << cycle_notation(st.permutation) << " sections=[";
    for (std::size_t x = 0; x < st.sections.size(); ++x) {
      if (x) os << ",";
      os << aut.name(st.sections[x]);
    }
    os << "]\n";
    if (aut.is_involution(static_cast<State>(s))) involutions.push_back(st.name);
  }
  if (!involutions.empty()) {
    os << "involutions:";
    for (const auto& n : involutions) os << " " << n;
    os << "\n";
  }
  return os.str();
}

Automaton load_automaton_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_automaton(buf.str());
}

}  // namespace asg
