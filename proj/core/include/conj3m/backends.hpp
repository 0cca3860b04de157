#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "conj3m/backend.hpp"
#include "conj3m/folding.hpp"
#include "conj3m/klein.hpp"
#include "conj3m/presentation.hpp"
#include "conj3m/rewriting.hpp"

namespace conj3m {

// Free group on the alphabet. Conjugacy through cyclic words, centralizers
// through primitive roots, membership through folding.
class FreeBackend : public GroupBackend {
 public:
  explicit FreeBackend(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}

  const Alphabet& alphabet() const override { return alphabet_; }
  bool is_identity(const Word& w) const override;
  ConjugacyVerdict conjugacy(const Word& u, const Word& v) const override;
  std::optional<CentralizerClass> classify_centralizer(
      const Word& v) const override;
  std::optional<bool> subgroup_membership(std::span<const Word> generators,
                                          const Word& g) const override;

 private:
  Alphabet alphabet_;
};

// The primitive root r of a nontrivial free-group element w: Z_F(w) = <r>
// and w is a positive or negative power of r.
Word free_primitive_root(const Word& w);

// Free abelian group on the alphabet.
class FreeAbelianBackend : public GroupBackend {
 public:
  explicit FreeAbelianBackend(Alphabet alphabet)
      : alphabet_(std::move(alphabet)) {}

  const Alphabet& alphabet() const override { return alphabet_; }
  bool is_identity(const Word& w) const override;
  ConjugacyVerdict conjugacy(const Word& u, const Word& v) const override;
  std::optional<CentralizerClass> classify_centralizer(
      const Word& v) const override;

  std::vector<long> exponents(const Word& w) const;

 private:
  Alphabet alphabet_;
};

// A finite group given by its multiplication table. Words evaluate through
// the table; conjugacy searches the whole group (or a fixed subset of
// allowed conjugators, which is how an index-2 subgroup backend is made).
class FiniteTableBackend : public GroupBackend {
 public:
  FiniteTableBackend(Alphabet alphabet, std::vector<std::vector<int>> table,
                     std::vector<int> generator_elements,
                     std::vector<int> conjugator_domain = {});

  const Alphabet& alphabet() const override { return alphabet_; }
  bool is_identity(const Word& w) const override;
  ConjugacyVerdict conjugacy(const Word& u, const Word& v) const override;

  int order() const { return static_cast<int>(table_.size()); }
  int identity_element() const { return identity_; }
  int evaluate(const Word& w) const;
  int multiply(int x, int y) const;
  int inverse(int x) const;
  // Shortlex-shortest word evaluating to element x.
  const Word& element_word(int x) const;

 private:
  Alphabet alphabet_;
  std::vector<std::vector<int>> table_;
  std::vector<int> generator_elements_;
  std::vector<int> conjugator_domain_;
  std::vector<int> inverse_;
  std::vector<Word> element_words_;
  int identity_ = 0;
};

// The Klein bottle group K = <a,b,t | [a,b]=1, t^2=a, b^t=b^-1>, exact via
// normal forms. The three alphabet letters are read as a, b, t in order.
class KleinBackend : public GroupBackend {
 public:
  explicit KleinBackend(Alphabet alphabet);

  const Alphabet& alphabet() const override { return alphabet_; }
  bool is_identity(const Word& w) const override;
  ConjugacyVerdict conjugacy(const Word& u, const Word& v) const override;
  std::optional<CentralizerClass> classify_centralizer(
      const Word& v) const override;

 private:
  Alphabet alphabet_;
};

// Word problem through a confluent rewriting system obtained by completion;
// conjugacy is a budgeted shortlex conjugator search (honest Exhausted when
// the budget runs out).
class RewritingBackend : public GroupBackend {
 public:
  RewritingBackend(FinitePresentation presentation, long kb_budget,
                   long conjugacy_budget,
                   const std::vector<int>& generator_order = {});

  const Alphabet& alphabet() const override { return presentation_.alphabet; }
  bool is_identity(const Word& w) const override;
  ConjugacyVerdict conjugacy(const Word& u, const Word& v) const override;

  const RewritingSystem& system() const { return *system_; }
  Word normal_form(const Word& w) const;

 private:
  FinitePresentation presentation_;
  std::optional<RewritingSystem> system_;
  long conjugacy_budget_;
};

// Conjugacy adapter for an abelian subgroup H of an ambient group: elements
// of H are conjugate in H iff equal, and equality is the ambient word
// problem.
class AbelianSubgroupConjugacy : public GroupBackend {
 public:
  explicit AbelianSubgroupConjugacy(BackendPtr ambient)
      : ambient_(std::move(ambient)) {}

  const Alphabet& alphabet() const override { return ambient_->alphabet(); }
  bool is_identity(const Word& w) const override {
    return ambient_->is_identity(w);
  }
  ConjugacyVerdict conjugacy(const Word& u, const Word& v) const override {
    if (ambient_->equal(u, v)) return ConjugacyVerdict::conjugate(Word{});
    return ConjugacyVerdict::not_conjugate();
  }

 private:
  BackendPtr ambient_;
};

// Delegation stub: answers centralizer queries with a fixed tag and refuses
// everything else. Stands in for a cited external solver.
class DelegatingStubBackend : public GroupBackend {
 public:
  DelegatingStubBackend(Alphabet alphabet, std::string tag)
      : alphabet_(std::move(alphabet)), tag_(std::move(tag)) {}

  const Alphabet& alphabet() const override { return alphabet_; }
  bool is_identity(const Word&) const override {
    throw MissingCapabilityError("word problem (delegated: " + tag_ + ")");
  }
  ConjugacyVerdict conjugacy(const Word&, const Word&) const override {
    throw MissingCapabilityError("conjugacy (delegated: " + tag_ + ")");
  }
  std::optional<CentralizerClass> classify_centralizer(
      const Word&) const override {
    return CentralizerClass{DelegatedCentralizer{tag_}};
  }

 private:
  Alphabet alphabet_;
  std::string tag_;
};

}  // namespace conj3m
