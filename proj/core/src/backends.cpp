#include "conj3m/backends.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace conj3m {

// ---------------------------------------------------------------- free group

bool FreeBackend::is_identity(const Word& w) const {
  require_supported(w);
  return free_reduce(w).empty();
}

namespace {

// u = h v h^-1 with h = cu * rot_prefix^-1 * cv^-1 when the cyclic cores
// match after rotating v's core by k.
std::optional<Word> free_conjugacy_witness(const Word& u, const Word& v) {
  const CyclicReduction cu = cyclic_reduce(u);
  const CyclicReduction cv = cyclic_reduce(v);
  if (cu.core.size() != cv.core.size()) return std::nullopt;
  const std::size_t n = cv.core.size();
  if (n == 0) return free_reduce(concat(cu.conjugator, invert(cv.conjugator)));
  for (std::size_t k = 0; k < n; ++k) {
    bool match = true;
    for (std::size_t i = 0; i < n; ++i)
      if (cu.core.letters[i] != cv.core.letters[(k + i) % n]) {
        match = false;
        break;
      }
    if (!match) continue;
    Word prefix;
    prefix.letters.assign(cv.core.letters.begin(),
                          cv.core.letters.begin() + static_cast<long>(k));
    // rot_k(core_v) = prefix^-1 * core_v * prefix
    return free_reduce(concat(concat(cu.conjugator, invert(prefix)),
                              invert(cv.conjugator)));
  }
  return std::nullopt;
}

}  // namespace

ConjugacyVerdict FreeBackend::conjugacy(const Word& u, const Word& v) const {
  require_supported(u);
  require_supported(v);
  if (auto h = free_conjugacy_witness(u, v))
    return ConjugacyVerdict::conjugate(std::move(*h));
  return ConjugacyVerdict::not_conjugate();
}

Word free_primitive_root(const Word& w) {
  const CyclicReduction cr = cyclic_reduce(w);
  const std::size_t n = cr.core.size();
  if (n == 0) return Word{};
  for (std::size_t d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    bool periodic = true;
    for (std::size_t i = d; i < n && periodic; ++i)
      periodic = cr.core.letters[i] == cr.core.letters[i % d];
    if (periodic) {
      Word p;
      p.letters.assign(cr.core.letters.begin(),
                       cr.core.letters.begin() + static_cast<long>(d));
      return conjugated(cr.conjugator, p);
    }
  }
  return w;  // unreachable: d = n always periodic
}

std::optional<CentralizerClass> FreeBackend::classify_centralizer(
    const Word& v) const {
  require_supported(v);
  if (free_reduce(v).empty()) return std::nullopt;  // centralizer is all of F
  return CentralizerClass{CyclicCentralizer{free_primitive_root(v)}};
}

std::optional<bool> FreeBackend::subgroup_membership(
    std::span<const Word> generators, const Word& g) const {
  require_supported(g);
  for (const Word& w : generators) require_supported(w);
  return free_subgroup_membership(alphabet_.size(), generators, g);
}

// -------------------------------------------------------------- free abelian

std::vector<long> FreeAbelianBackend::exponents(const Word& w) const {
  require_supported(w);
  std::vector<long> e(static_cast<std::size_t>(alphabet_.size()), 0);
  for (const Letter& l : w.letters)
    e[static_cast<std::size_t>(l.gen)] += l.sign;
  return e;
}

bool FreeAbelianBackend::is_identity(const Word& w) const {
  const auto e = exponents(w);
  return std::all_of(e.begin(), e.end(), [](long x) { return x == 0; });
}

ConjugacyVerdict FreeAbelianBackend::conjugacy(const Word& u,
                                               const Word& v) const {
  if (exponents(u) == exponents(v))
    return ConjugacyVerdict::conjugate(Word{});
  return ConjugacyVerdict::not_conjugate();
}

std::optional<CentralizerClass> FreeAbelianBackend::classify_centralizer(
    const Word& v) const {
  require_supported(v);
  const int rank = alphabet_.size();
  if (rank == 1) {
    const auto e = exponents(v);
    const int sign = e[0] >= 0 ? 1 : -1;
    return CentralizerClass{CyclicCentralizer{Word::generator(0, sign)}};
  }
  if (rank == 2)
    return CentralizerClass{
        RankTwoCentralizer{Word::generator(0), Word::generator(1)}};
  return CentralizerClass{
      DelegatedCentralizer{"free_abelian_rank_" + std::to_string(rank)}};
}

// --------------------------------------------------------------- finite table

FiniteTableBackend::FiniteTableBackend(Alphabet alphabet,
                                       std::vector<std::vector<int>> table,
                                       std::vector<int> generator_elements,
                                       std::vector<int> conjugator_domain)
    : alphabet_(std::move(alphabet)),
      table_(std::move(table)),
      generator_elements_(std::move(generator_elements)),
      conjugator_domain_(std::move(conjugator_domain)) {
  const int n = static_cast<int>(table_.size());
  if (n == 0) throw InputError("empty multiplication table");
  for (const auto& row : table_) {
    if (static_cast<int>(row.size()) != n)
      throw InputError("multiplication table must be square");
    for (int x : row)
      if (x < 0 || x >= n) throw InputError("table entry out of range");
  }
  if (static_cast<int>(generator_elements_.size()) != alphabet_.size())
    throw InputError("one table element required per generator");
  for (int g : generator_elements_)
    if (g < 0 || g >= n) throw InputError("generator element out of range");

  // identity: the unique e with e*x = x for all x
  identity_ = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) ok = multiply(e, x) == x && multiply(x, e) == x;
    if (ok) {
      identity_ = e;
      break;
    }
  }
  if (identity_ < 0) throw InputError("table has no identity element");

  inverse_.assign(static_cast<std::size_t>(n), -1);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y)
      if (multiply(x, y) == identity_ && multiply(y, x) == identity_) {
        inverse_[static_cast<std::size_t>(x)] = y;
        break;
      }
    if (inverse_[static_cast<std::size_t>(x)] < 0)
      throw InputError("table element without inverse");
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (multiply(multiply(x, y), z) != multiply(x, multiply(y, z)))
          throw InputError("table is not associative");

  for (int d : conjugator_domain_)
    if (d < 0 || d >= n) throw InputError("conjugator domain out of range");

  // shortlex-shortest words per element, by BFS from the identity
  element_words_.assign(static_cast<std::size_t>(n), Word{});
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::deque<int> queue;
  seen[static_cast<std::size_t>(identity_)] = true;
  queue.push_back(identity_);
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    for (int g = 0; g < alphabet_.size(); ++g) {
      for (int sign : {+1, -1}) {
        const int ge = sign > 0
                           ? generator_elements_[static_cast<std::size_t>(g)]
                           : inverse(generator_elements_[static_cast<std::size_t>(g)]);
        const int y = multiply(x, ge);
        if (!seen[static_cast<std::size_t>(y)]) {
          seen[static_cast<std::size_t>(y)] = true;
          element_words_[static_cast<std::size_t>(y)] =
              concat(element_words_[static_cast<std::size_t>(x)],
                     Word::generator(g, sign));
          queue.push_back(y);
        }
      }
    }
  }
  for (int x = 0; x < n; ++x)
    if (!seen[static_cast<std::size_t>(x)])
      throw InputError("generators do not generate the table group");
}

int FiniteTableBackend::multiply(int x, int y) const {
  return table_[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
}

int FiniteTableBackend::inverse(int x) const {
  return inverse_[static_cast<std::size_t>(x)];
}

const Word& FiniteTableBackend::element_word(int x) const {
  return element_words_[static_cast<std::size_t>(x)];
}

int FiniteTableBackend::evaluate(const Word& w) const {
  require_supported(w);
  int x = identity_;
  for (const Letter& l : w.letters) {
    const int ge = generator_elements_[static_cast<std::size_t>(l.gen)];
    x = multiply(x, l.sign > 0 ? ge : inverse(ge));
  }
  return x;
}

bool FiniteTableBackend::is_identity(const Word& w) const {
  return evaluate(w) == identity_;
}

ConjugacyVerdict FiniteTableBackend::conjugacy(const Word& u,
                                               const Word& v) const {
  const int ue = evaluate(u);
  const int ve = evaluate(v);
  auto try_conjugator = [&](int g) -> bool {
    return multiply(multiply(g, ve), inverse(g)) == ue;
  };
  if (conjugator_domain_.empty()) {
    for (int g = 0; g < order(); ++g)
      if (try_conjugator(g)) return ConjugacyVerdict::conjugate(element_word(g));
  } else {
    for (int g : conjugator_domain_)
      if (try_conjugator(g)) return ConjugacyVerdict::conjugate(element_word(g));
  }
  return ConjugacyVerdict::not_conjugate();
}

// ---------------------------------------------------------------- klein group

KleinBackend::KleinBackend(Alphabet alphabet) : alphabet_(std::move(alphabet)) {
  if (alphabet_.size() != 3)
    throw InputError("the klein backend needs exactly three generators");
}

bool KleinBackend::is_identity(const Word& w) const {
  require_supported(w);
  return klein_from_word(w) == KleinNF::identity();
}

ConjugacyVerdict KleinBackend::conjugacy(const Word& u, const Word& v) const {
  require_supported(u);
  require_supported(v);
  const auto witness = knf_conjugate_decide(klein_from_word(u), klein_from_word(v));
  if (!witness) return ConjugacyVerdict::not_conjugate();
  return ConjugacyVerdict::conjugate(klein_to_word(*witness));
}

std::optional<CentralizerClass> KleinBackend::classify_centralizer(
    const Word& v) const {
  require_supported(v);
  const KleinNF nf = klein_from_word(v);
  const KleinCentralizer c = knf_centralizer(nf);
  if (std::holds_alternative<KleinWholeGroup>(c))
    return CentralizerClass{DelegatedCentralizer{"klein-whole-group"}};
  if (std::holds_alternative<KleinAbelianA>(c))
    return CentralizerClass{
        RankTwoCentralizer{Word::generator(0), Word::generator(1)}};
  return CentralizerClass{
      CyclicCentralizer{klein_to_word(std::get<KleinCyclicGen>(c).generator)}};
}

// ------------------------------------------------------------------ rewriting

RewritingBackend::RewritingBackend(FinitePresentation presentation,
                                   long kb_budget, long conjugacy_budget,
                                   const std::vector<int>& generator_order)
    : presentation_(std::move(presentation)),
      conjugacy_budget_(conjugacy_budget) {
  KBOutcome out = kb_complete(presentation_, kb_budget, generator_order);
  if (!out.system) throw ExhaustedError(kb_budget);
  system_ = std::move(out.system);
}

Word RewritingBackend::normal_form(const Word& w) const {
  require_supported(w);
  return system_->to_word(system_->reduce(system_->to_symbols(w)));
}

bool RewritingBackend::is_identity(const Word& w) const {
  return normal_form(w).empty();
}

ConjugacyVerdict RewritingBackend::conjugacy(const Word& u,
                                             const Word& v) const {
  const Word nu = normal_form(u);
  ShortlexWords gen(alphabet().size());
  for (long step = 0; step < conjugacy_budget_; ++step) {
    const Word h = gen.next();
    if (normal_form(conjugated(h, v)) == nu)
      return ConjugacyVerdict::conjugate(h);
  }
  return ConjugacyVerdict::exhausted(conjugacy_budget_);
}

}  // namespace conj3m
