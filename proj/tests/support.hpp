#pragma once

#include <random>
#include <vector>

#include "braidnf/word.hpp"

namespace braidnf::testing {

inline PositiveWord random_word(std::mt19937_64& rng, int n, std::size_t length) {
  std::uniform_int_distribution<int> letter(1, n - 1);
  std::vector<int> letters(length);
  for (auto& a : letters) a = letter(rng);
  return PositiveWord(n, std::move(letters));
}

inline PositiveWord random_word_up_to(std::mt19937_64& rng, int n, std::size_t max_length) {
  std::uniform_int_distribution<std::size_t> len(0, max_length);
  return random_word(rng, n, len(rng));
}

inline SignedWord random_signed_word(std::mt19937_64& rng, int n, std::size_t length) {
  std::uniform_int_distribution<int> letter(1, n - 1);
  std::bernoulli_distribution negative(0.5);
  std::vector<SignedLetter> letters(length);
  for (auto& l : letters) l = {letter(rng), negative(rng) ? -1 : 1};
  return SignedWord(n, std::move(letters));
}

inline PositiveWord word(const char* text, int n) { return parse_positive(text, n); }

}  // namespace braidnf::testing
