#include "asg/bundled.hpp"

#include <sstream>

#include "asg/automaton_format.hpp"

namespace asg {

namespace {

std::string full_cycle(int d) {
  std::string out = "(";
  for (int x = 0; x < d; ++x) out += (x ? " " : "") + std::to_string(x);
  return out + ")";
}

std::string inverse_full_cycle(int d) {
  std::string out = "(";
  for (int x = d - 1; x >= 0; --x) out += (x != d - 1 ? " " : "") + std::to_string(x);
  return out + ")";
}

std::string sections(const std::vector<std::string>& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + s[i];
  return out + "]";
}

std::string bsv(int d) {
  std::vector<std::string> a(static_cast<std::size_t>(d), "e"), b = a, binv = a;
  a.back() = "a";
  b.back() = "b^-1";
  binv.front() = "b";
  std::ostringstream os;
  os << "# BSV torsion-free group on " << d << " letters\n"
     << "alphabet: " << d << "\n"
     << "trivial: e\n"
     << "gen a: perm=" << full_cycle(d) << " sections=" << sections(a) << "\n"
     << "gen b: perm=" << full_cycle(d) << " sections=" << sections(b) << "\n"
     << "gen b^-1: perm=" << inverse_full_cycle(d) << " sections=" << sections(binv) << "\n";
  return os.str();
}

std::string gupta_sidki(int p) {
  std::vector<std::string> a(static_cast<std::size_t>(p), "e"), b = a;
  a[0] = "b";
  a[1] = "b^-1";
  a.back() = "a";
  std::ostringstream os;
  os << "# Gupta-Sidki " << p << "-group\n"
     << "alphabet: " << p << "\n"
     << "trivial: e\n"
     << "gen a: perm=id sections=" << sections(a) << "\n"
     << "gen b: perm=" << full_cycle(p) << " sections=" << sections(b) << "\n";
  return os.str();
}

const char* const kGrigorchuk =
    "# Grigorchuk group\n"
    "alphabet: 2\n"
    "trivial: e\n"
    "gen a: perm=(0 1) sections=[e,e]\n"
    "gen b: perm=id sections=[a,c]\n"
    "gen c: perm=id sections=[a,d]\n"
    "gen d: perm=id sections=[e,b]\n"
    "involutions: a b c d\n";

const char* const kBasilica =
    "# Basilica group\n"
    "alphabet: 2\n"
    "trivial: e\n"
    "gen a: perm=id sections=[b,e]\n"
    "gen b: perm=(0 1) sections=[a,e]\n";

const char* const kFabrykowskiGupta =
    "# Fabrykowski-Gupta group\n"
    "alphabet: 3\n"
    "trivial: e\n"
    "gen a: perm=(0 1 2) sections=[e,e,e]\n"
    "gen b: perm=id sections=[a,b,e]\n";

const char* const kHanoi =
    "# Tower of Hanoi group on three pegs\n"
    "alphabet: 3\n"
    "trivial: e\n"
    "gen a: perm=(1 2) sections=[a,e,e]\n"
    "gen b: perm=(0 2) sections=[e,b,e]\n"
    "gen c: perm=(0 1) sections=[e,e,c]\n"
    "involutions: a b c\n";

const char* const kLinear =
    "# group generated by a linear (polynomial, unbounded) automaton\n"
    "alphabet: 2\n"
    "trivial: e\n"
    "gen a: perm=(0 1) sections=[a,e]\n"
    "gen b: perm=id sections=[b,a]\n";

}  // namespace

std::vector<std::string> bundled_names() {
  return {"grigorchuk", "basilica", "bsv_2",          "bsv_3",          "bsv_4",  "bsv_5", "bsv_6",
          "gupta_sidki_3", "gupta_sidki_5", "fabrykowski_gupta", "hanoi", "linear"};
}

std::string bundled_document(const std::string& name) {
  if (name == "grigorchuk") return kGrigorchuk;
  if (name == "basilica") return kBasilica;
  if (name == "fabrykowski_gupta") return kFabrykowskiGupta;
  if (name == "hanoi") return kHanoi;
  if (name == "linear") return kLinear;
  for (int d = 2; d <= 6; ++d) {
    if (name == "bsv_" + std::to_string(d)) return bsv(d);
  }
  if (name == "gupta_sidki_3") return gupta_sidki(3);
  if (name == "gupta_sidki_5") return gupta_sidki(5);
  throw Error("unknown bundled automaton " + name);
}

Automaton bundled_automaton(const std::string& name) { return parse_automaton(bundled_document(name)); }

}  // namespace asg
