#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace conj3m {

// A generator of a finitely generated group: position in the alphabet plus a
// display name.
struct Generator {
  int index = 0;
  std::string name;
};

// One signed letter of a word. Powers are always expanded; run-length
// compression is a display concern only.
struct Letter {
  std::int32_t gen = 0;
  std::int8_t sign = 1;  // +1 or -1

  Letter inverse() const { return Letter{gen, static_cast<std::int8_t>(-sign)}; }
  bool inverse_of(const Letter& o) const { return gen == o.gen && sign == -o.sign; }
  friend bool operator==(const Letter&, const Letter&) = default;
};

// A word over a finite generating set. The empty word is the identity.
struct Word {
  std::vector<Letter> letters;

  Word() = default;
  explicit Word(std::vector<Letter> ls) : letters(std::move(ls)) {}

  static Word generator(int gen, int sign = +1) {
    return Word{{Letter{gen, static_cast<std::int8_t>(sign)}}};
  }
  static Word power(int gen, long exponent);

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }

  friend bool operator==(const Word&, const Word&) = default;
};

// The ordered list of generator names of a presentation.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> names);

  int add(const std::string& name);
  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int index) const;
  std::optional<int> index(const std::string& name) const;
  const std::vector<std::string>& names() const { return names_; }

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::vector<std::string> names_;
};

struct CyclicReduction {
  Word core;        // freely and cyclically reduced
  Word conjugator;  // input = conjugator * core * conjugator^-1 (freely)
};

Word concat(const Word& a, const Word& b);
Word invert(const Word& w);
Word free_reduce(const Word& w);
bool is_freely_reduced(const Word& w);
bool is_cyclically_reduced(const Word& w);
CyclicReduction cyclic_reduce(const Word& w);

// conjugator * w * conjugator^-1, freely reduced.
Word conjugated(const Word& conjugator, const Word& w);

// Whitespace-separated tokens `name` or `name^k`; `1` is the empty word.
Word parse_word(const Alphabet& alphabet, const std::string& text);
std::string format_word(const Alphabet& alphabet, const Word& w);

// Freely reduced words in shortlex order over an alphabet of `n_generators`
// generators: eps, g0, g0^-1, g1, ..., g0 g1, ... Used by the budgeted
// enumerative searches.
class ShortlexWords {
 public:
  explicit ShortlexWords(int n_generators);
  // Next word in the enumeration (the first call yields the empty word).
  Word next();

 private:
  bool advance();
  int n_symbols_;
  std::vector<int> current_;  // symbol ids, 2*gen + (sign < 0)
  bool started_ = false;
};

}  // namespace conj3m
