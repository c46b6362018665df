#include "asg/words.hpp"

namespace asg {

std::size_t checked_power(int d, int n, std::size_t limit) {
  std::size_t p = 1;
  for (int i = 0; i < n; ++i) {
    p *= static_cast<std::size_t>(d);
    if (p > limit) {
      throw LimitExceeded(std::to_string(d) + "^" + std::to_string(n) + " vertices exceeds the limit of " +
                          std::to_string(limit));
    }
  }
  return p;
}

std::size_t word_index(const Word& w, int d) {
  std::size_t idx = 0;
  for (int x : w) idx = idx * static_cast<std::size_t>(d) + static_cast<std::size_t>(x);
  return idx;
}

Word index_word(std::size_t index, int d, int n) {
  Word w(static_cast<std::size_t>(n));
  for (int i = n - 1; i >= 0; --i) {
    w[static_cast<std::size_t>(i)] = static_cast<int>(index % static_cast<std::size_t>(d));
    index /= static_cast<std::size_t>(d);
  }
  return w;
}

std::string word_label(const Word& w, int d) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (d > 10 && i > 0) out += '.';
    out += std::to_string(w[i]);
  }
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

}  // namespace asg
