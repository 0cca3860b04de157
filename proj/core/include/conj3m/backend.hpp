#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <variant>

#include "conj3m/errors.hpp"
#include "conj3m/word.hpp"

namespace conj3m {

// Outcome of a conjugacy query. A Conjugate verdict always carries a witness
// h with u = h v h^-1, checkable through the word problem; Exhausted only
// comes out of budget-limited searches.
struct ConjugacyVerdict {
  enum class Kind { NotConjugate, Conjugate, Exhausted };

  Kind kind = Kind::NotConjugate;
  Word witness;     // meaningful iff kind == Conjugate
  long budget = 0;  // meaningful iff kind == Exhausted

  static ConjugacyVerdict not_conjugate() { return {}; }
  static ConjugacyVerdict conjugate(Word h) {
    return ConjugacyVerdict{Kind::Conjugate, std::move(h), 0};
  }
  static ConjugacyVerdict exhausted(long budget) {
    return ConjugacyVerdict{Kind::Exhausted, Word{}, budget};
  }

  bool is_conjugate() const { return kind == Kind::Conjugate; }
  bool is_not_conjugate() const { return kind == Kind::NotConjugate; }
  bool is_exhausted() const { return kind == Kind::Exhausted; }
};

// Classification of a centralizer: infinite cyclic with a given root, free
// abelian of rank two with a given basis, or delegated to an external solver
// identified by a tag.
struct CyclicCentralizer {
  Word root;
};
struct RankTwoCentralizer {
  Word basis_a;
  Word basis_b;
};
struct DelegatedCentralizer {
  std::string tag;
};
using CentralizerClass =
    std::variant<CyclicCentralizer, RankTwoCentralizer, DelegatedCentralizer>;

// Capability record abstracting a solved group: word problem, conjugacy
// problem with witnesses, and (optionally) centralizer classification and
// subgroup membership. Backends are immutable after construction and safe to
// share across threads.
class GroupBackend {
 public:
  virtual ~GroupBackend() = default;

  virtual const Alphabet& alphabet() const = 0;

  // true iff w = 1 in the group.
  virtual bool is_identity(const Word& w) const = 0;

  // Decide u ~ v; Conjugate verdicts carry a verified witness.
  virtual ConjugacyVerdict conjugacy(const Word& u, const Word& v) const = 0;

  virtual std::optional<CentralizerClass> classify_centralizer(
      const Word& /*v*/) const {
    return std::nullopt;
  }

  virtual std::optional<bool> subgroup_membership(
      std::span<const Word> /*generators*/, const Word& /*g*/) const {
    return std::nullopt;
  }

  bool equal(const Word& u, const Word& v) const {
    return is_identity(concat(u, invert(v)));
  }

 protected:
  void require_supported(const Word& w) const {
    for (const Letter& l : w.letters)
      if (l.gen < 0 || l.gen >= alphabet().size())
        throw UnsupportedWordError("word uses generator #" +
                                   std::to_string(l.gen) +
                                   " outside the backend alphabet");
  }
};

using BackendPtr = std::shared_ptr<const GroupBackend>;

}  // namespace conj3m
