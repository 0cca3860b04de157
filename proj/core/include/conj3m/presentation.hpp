#pragma once

#include <vector>

#include "conj3m/word.hpp"

namespace conj3m {

// <generators | relators>, relators as words equal to the identity.
struct FinitePresentation {
  Alphabet alphabet;
  std::vector<Word> relators;
};

}  // namespace conj3m
