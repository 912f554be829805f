#pragma once

#include <random>
#include <vector>

#include "tarski/word.hpp"

namespace testing {

inline std::vector<tarski::Letter> random_letters(std::mt19937_64& rng, int rank, int max_length) {
  std::vector<tarski::Letter> raw(rng() % (max_length + 1));
  for (auto& l : raw) l = tarski::letter_from_index(static_cast<int>(rng() % (2 * rank)));
  return raw;
}

/// Uniform length in [0, max_length], then a uniformly random reduced word of that length.
inline tarski::Word random_word(std::mt19937_64& rng, int rank, int max_length) {
  std::size_t length = rng() % (max_length + 1);
  std::vector<tarski::Letter> letters;
  while (letters.size() < length) {
    tarski::Letter l = tarski::letter_from_index(static_cast<int>(rng() % (2 * rank)));
    if (!letters.empty() && letters.back() == -l) continue;
    letters.push_back(l);
  }
  return tarski::Word::reduce(letters);
}

}  // namespace testing
