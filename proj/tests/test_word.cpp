#include <doctest.h>

#include <random>

#include "conj3m/errors.hpp"
#include "conj3m/word.hpp"

using namespace conj3m;

namespace {

Word random_word(std::mt19937& rng, int n_gens, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> gen(0, n_gens - 1);
  std::uniform_int_distribution<int> sgn(0, 1);
  Word w;
  const int l = len(rng);
  for (int i = 0; i < l; ++i)
    w.letters.push_back(
        Letter{gen(rng), static_cast<std::int8_t>(sgn(rng) ? 1 : -1)});
  return w;
}

const Alphabet kXY({"x", "y"});

Word W(const std::string& s) { return parse_word(kXY, s); }

}  // namespace

TEST_CASE("free reduction") {
  CHECK(free_reduce(W("x x^-1")).empty());
  CHECK(free_reduce(W("x y y^-1 x")) == W("x x"));
  CHECK(free_reduce(W("x y")) == W("x y"));

  std::mt19937 rng(7);
  for (int i = 0; i < 500; ++i) {
    const Word w = random_word(rng, 2, 20);
    const Word r = free_reduce(w);
    CHECK(is_freely_reduced(r));
    CHECK(free_reduce(r) == r);          // idempotent
    CHECK(r.size() <= w.size());         // length-nonincreasing
    CHECK(free_reduce(concat(w, invert(w))).empty());
  }
}

TEST_CASE("inversion") {
  CHECK(invert(W("x y")) == W("y^-1 x^-1"));
  CHECK(invert(Word{}).empty());
  CHECK(invert(W("x^-1")) == W("x"));
}

TEST_CASE("cyclic reduction") {
  const auto r1 = cyclic_reduce(W("x y x^-1"));
  CHECK(r1.core == W("y"));
  CHECK(r1.conjugator == W("x"));

  const auto r2 = cyclic_reduce(W("x y"));
  CHECK(r2.core == W("x y"));
  CHECK(r2.conjugator.empty());

  const auto r3 = cyclic_reduce(W("x x y x^-1"));
  CHECK(r3.core == W("x y"));
  CHECK(r3.conjugator == W("x"));

  std::mt19937 rng(11);
  for (int i = 0; i < 500; ++i) {
    const Word w = random_word(rng, 2, 20);
    const auto cr = cyclic_reduce(w);
    CHECK(is_cyclically_reduced(cr.core));
    CHECK(conjugated(cr.conjugator, cr.core) == free_reduce(w));
  }
}

TEST_CASE("cyclically reduced predicate") {
  CHECK(is_cyclically_reduced(W("x y")));
  CHECK_FALSE(is_cyclically_reduced(W("x y x^-1")));
  CHECK(is_cyclically_reduced(Word{}));
}

TEST_CASE("word text round trip") {
  const Alphabet abc({"a", "b", "t"});
  CHECK(format_word(abc, parse_word(abc, "a^2 b^-1 t")) == "a^2 b^-1 t");
  CHECK(format_word(abc, Word{}) == "1");
  CHECK(parse_word(abc, "1").empty());
  CHECK(parse_word(abc, "a^0").empty());
  CHECK_THROWS_AS(parse_word(abc, "q"), UnknownGeneratorError);

  std::mt19937 rng(13);
  for (int i = 0; i < 200; ++i) {
    const Word w = random_word(rng, 3, 12);
    CHECK(parse_word(abc, format_word(abc, w)) == w);
  }
}

TEST_CASE("shortlex enumeration is reduced, ordered and complete") {
  ShortlexWords gen(2);
  std::vector<Word> words;
  for (int i = 0; i < 100; ++i) words.push_back(gen.next());
  CHECK(words[0].empty());
  // lengths are nondecreasing, all words freely reduced, no duplicates
  for (std::size_t i = 0; i < words.size(); ++i) {
    CHECK(is_freely_reduced(words[i]));
    if (i > 0) CHECK(words[i - 1].size() <= words[i].size());
    for (std::size_t j = 0; j < i; ++j) CHECK_FALSE(words[i] == words[j]);
  }
  // 1 + 4 + 4*3 = 17 words of length <= 2
  CHECK(words[16].size() == 2);
  CHECK(words[17].size() == 3);
}
