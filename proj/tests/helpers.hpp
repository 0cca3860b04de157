#pragma once

#include <random>
#include <string>
#include <vector>

#include "conj3m/backends.hpp"
#include "conj3m/word.hpp"

namespace testhelp {

using namespace conj3m;

inline Word random_reduced(std::mt19937& rng, int n_gens, int len) {
  std::uniform_int_distribution<int> gen(0, n_gens - 1);
  std::uniform_int_distribution<int> sgn(0, 1);
  Word w;
  while (static_cast<int>(w.size()) < len) {
    const Letter l{gen(rng), static_cast<std::int8_t>(sgn(rng) ? 1 : -1)};
    if (!w.empty() && w.letters.back().inverse_of(l)) continue;
    w.letters.push_back(l);
  }
  return w;
}

// r^i s^j with index i + n*j.
inline std::vector<std::vector<int>> dihedral_table(int n) {
  const int order = 2 * n;
  std::vector<std::vector<int>> t(static_cast<std::size_t>(order),
                                  std::vector<int>(static_cast<std::size_t>(order)));
  auto idx = [&](int i, int j) { return ((i % n + n) % n) + n * j; };
  for (int i1 = 0; i1 < n; ++i1)
    for (int j1 = 0; j1 < 2; ++j1)
      for (int i2 = 0; i2 < n; ++i2)
        for (int j2 = 0; j2 < 2; ++j2)
          t[static_cast<std::size_t>(idx(i1, j1))]
           [static_cast<std::size_t>(idx(i2, j2))] =
              idx(i1 + (j1 ? -i2 : i2), j1 ^ j2);
  return t;
}

inline FiniteTableBackend dihedral_backend(int n, bool restrict_to_rotations) {
  std::vector<int> domain;
  if (restrict_to_rotations)
    for (int i = 0; i < n; ++i) domain.push_back(i);
  return FiniteTableBackend(Alphabet({"r", "s"}), dihedral_table(n), {1, n},
                            domain);
}

// All freely reduced words over n_gens generators with length <= max_len.
inline std::vector<Word> all_reduced_words(int n_gens, int max_len) {
  std::vector<Word> all{Word{}};
  std::size_t start = 0;
  for (int len = 1; len <= max_len; ++len) {
    const std::size_t end = all.size();
    for (std::size_t i = start; i < end; ++i) {
      for (int g = 0; g < n_gens; ++g)
        for (int sign : {+1, -1}) {
          const Letter l{g, static_cast<std::int8_t>(sign)};
          if (!all[i].empty() && all[i].letters.back().inverse_of(l)) continue;
          Word e = all[i];
          e.letters.push_back(l);
          all.push_back(e);
        }
    }
    start = end;
  }
  return all;
}

}  // namespace testhelp
