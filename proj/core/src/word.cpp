#include "conj3m/word.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "conj3m/errors.hpp"

namespace conj3m {

Word Word::power(int gen, long exponent) {
  Word w;
  const std::int8_t sign = exponent >= 0 ? 1 : -1;
  for (long i = 0; i < (exponent >= 0 ? exponent : -exponent); ++i)
    w.letters.push_back(Letter{gen, sign});
  return w;
}

Alphabet::Alphabet(std::vector<std::string> names) {
  for (auto& n : names) add(n);
}

int Alphabet::add(const std::string& name) {
  if (name.empty()) throw InputError("generator name must be nonempty");
  if (index(name)) throw InputError("duplicate generator name: " + name);
  names_.push_back(name);
  return static_cast<int>(names_.size()) - 1;
}

const std::string& Alphabet::name(int i) const {
  if (i < 0 || i >= size())
    throw UnknownGeneratorError("generator index out of range: " +
                                std::to_string(i));
  return names_[static_cast<std::size_t>(i)];
}

std::optional<int> Alphabet::index(const std::string& name) const {
  for (int i = 0; i < size(); ++i)
    if (names_[static_cast<std::size_t>(i)] == name) return i;
  return std::nullopt;
}

Word concat(const Word& a, const Word& b) {
  Word r = a;
  r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
  return r;
}

Word invert(const Word& w) {
  Word r;
  r.letters.reserve(w.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    r.letters.push_back(it->inverse());
  return r;
}

Word free_reduce(const Word& w) {
  std::vector<Letter> stack;
  stack.reserve(w.size());
  for (const Letter& l : w.letters) {
    if (!stack.empty() && stack.back().inverse_of(l))
      stack.pop_back();
    else
      stack.push_back(l);
  }
  return Word{std::move(stack)};
}

bool is_freely_reduced(const Word& w) {
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w.letters[i - 1].inverse_of(w.letters[i])) return false;
  return true;
}

bool is_cyclically_reduced(const Word& w) {
  if (!is_freely_reduced(w)) return false;
  if (w.size() <= 1) return true;
  return !w.letters.front().inverse_of(w.letters.back());
}

CyclicReduction cyclic_reduce(const Word& w) {
  CyclicReduction r;
  Word core = free_reduce(w);
  Word conj;
  while (core.size() >= 2 && core.letters.front().inverse_of(core.letters.back())) {
    conj.letters.push_back(core.letters.front());
    core.letters.erase(core.letters.begin());
    core.letters.pop_back();
  }
  r.core = std::move(core);
  r.conjugator = std::move(conj);
  return r;
}

Word conjugated(const Word& conjugator, const Word& w) {
  return free_reduce(concat(concat(conjugator, w), invert(conjugator)));
}

namespace {

Letter parse_letter_run(const Alphabet& alphabet, const std::string& token,
                        long& exponent) {
  std::string name = token;
  exponent = 1;
  const auto caret = token.find('^');
  if (caret != std::string::npos) {
    name = token.substr(0, caret);
    const std::string exp = token.substr(caret + 1);
    try {
      std::size_t used = 0;
      exponent = std::stol(exp, &used);
      if (used != exp.size()) throw std::invalid_argument(exp);
    } catch (const std::exception&) {
      throw InputError("bad exponent in token: " + token);
    }
  }
  const auto idx = alphabet.index(name);
  if (!idx) throw UnknownGeneratorError("unknown generator: " + name);
  return Letter{*idx, 1};
}

}  // namespace

Word parse_word(const Alphabet& alphabet, const std::string& text) {
  Word w;
  std::istringstream in(text);
  std::string token;
  while (in >> token) {
    if (token == "1") continue;
    long exponent = 0;
    const Letter base = parse_letter_run(alphabet, token, exponent);
    const std::int8_t sign = exponent >= 0 ? 1 : -1;
    for (long i = 0; i < (exponent >= 0 ? exponent : -exponent); ++i)
      w.letters.push_back(Letter{base.gen, sign});
  }
  return w;
}

std::string format_word(const Alphabet& alphabet, const Word& w) {
  if (w.empty()) return "1";
  std::ostringstream out;
  std::size_t i = 0;
  bool first = true;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w.letters[j] == w.letters[i]) ++j;
    const long run = static_cast<long>(j - i) * w.letters[i].sign;
    if (!first) out << ' ';
    first = false;
    out << alphabet.name(w.letters[i].gen);
    if (run != 1) out << '^' << run;
    i = j;
  }
  return out.str();
}

ShortlexWords::ShortlexWords(int n_generators)
    : n_symbols_(2 * n_generators) {}

namespace {

Letter letter_of_symbol(int sym) {
  return Letter{sym / 2, static_cast<std::int8_t>(sym % 2 == 0 ? 1 : -1)};
}

bool reduced_at(const std::vector<int>& syms, std::size_t i) {
  if (i == 0 || syms.empty()) return true;
  return !letter_of_symbol(syms[i - 1]).inverse_of(letter_of_symbol(syms[i]));
}

}  // namespace

bool ShortlexWords::advance() {
  // Odometer over symbol ids, then skip non-reduced candidates.
  std::size_t i = current_.size();
  while (i > 0) {
    --i;
    if (current_[i] + 1 < n_symbols_) {
      ++current_[i];
      for (std::size_t j = i + 1; j < current_.size(); ++j) current_[j] = 0;
      return true;
    }
  }
  current_.assign(current_.size() + 1, 0);
  return true;
}

Word ShortlexWords::next() {
  if (n_symbols_ == 0) return Word{};
  if (!started_) {
    started_ = true;
    return Word{};  // empty word first
  }
  for (;;) {
    advance();
    bool ok = true;
    for (std::size_t i = 1; i < current_.size(); ++i)
      if (!reduced_at(current_, i)) {
        ok = false;
        break;
      }
    if (!ok) continue;
    Word w;
    w.letters.reserve(current_.size());
    for (int s : current_) w.letters.push_back(letter_of_symbol(s));
    return w;
  }
}

}  // namespace conj3m
