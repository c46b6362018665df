#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "asg/error.hpp"

namespace asg {

/// Finite word over the alphabet {0..d-1}; letter 0 of the vector is acted on first.
using Word = std::vector<int>;

/// d^n, throwing LimitExceeded when it exceeds `limit`.
std::size_t checked_power(int d, int n, std::size_t limit);

/// Lexicographic rank of a word of fixed length: sum of x_i * d^(n-1-i).
std::size_t word_index(const Word& w, int d);
Word index_word(std::size_t index, int d, int n);

/// Concatenated digits for d <= 10, dot-separated letters otherwise.
std::string word_label(const Word& w, int d);

Word concat(const Word& a, const Word& b);

}  // namespace asg
