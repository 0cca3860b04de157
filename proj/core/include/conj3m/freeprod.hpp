#pragma once

#include <memory>
#include <vector>

#include "conj3m/backend.hpp"

namespace conj3m {

// One syllable of a free-product normal form: a nontrivial element of one
// factor, written over the ambient alphabet.
struct Syllable {
  int factor = 0;
  Word element;  // ambient letters, nontrivial in its factor
};

// Reduced syllable sequence: adjacent syllables lie in distinct factors.
struct FPWord {
  std::vector<Syllable> syllables;

  std::size_t size() const { return syllables.size(); }
  bool empty() const { return syllables.empty(); }

  Word flatten() const;
};

// A free product of solved factor groups with pairwise disjoint alphabets.
// The ambient alphabet is the concatenation of the factor alphabets.
class FreeProductContext {
 public:
  explicit FreeProductContext(std::vector<BackendPtr> factors);

  const Alphabet& alphabet() const { return alphabet_; }
  int n_factors() const { return static_cast<int>(factors_.size()); }
  const GroupBackend& factor(int i) const { return *factors_[static_cast<std::size_t>(i)]; }

  int factor_of_generator(int gen) const;
  // Translate an ambient-letter word into the factor's local letters.
  Word to_local(int factor, const Word& w) const;
  Word to_ambient(int factor, const Word& w) const;
  bool factor_identity(int factor, const Word& ambient_word) const;
  bool factor_equal(int factor, const Word& a, const Word& b) const;

 private:
  std::vector<BackendPtr> factors_;
  Alphabet alphabet_;
  std::vector<int> gen_factor_;
  std::vector<int> gen_offset_;
};

FPWord fp_normal_form(const FreeProductContext& ctx, const Word& w);

struct FPCyclicReduction {
  FPWord core;        // first and last factors differ, or length <= 1
  FPWord conjugator;  // input = conjugator * core * conjugator^-1
};

FPCyclicReduction fp_cyclic_reduce(const FreeProductContext& ctx,
                                   const FPWord& w);

// Conjugacy in the free product: cyclic permutation of syllables for cores
// of length >= 2, factor conjugacy for cores of length <= 1. Witnesses are
// assembled from the peeled conjugators and the rotation prefix.
ConjugacyVerdict fp_conjugacy(const FreeProductContext& ctx, const Word& u,
                              const Word& v);

// Which factor contains w, if any. The square criterion: when the normal
// form of w^2 is a single nontrivial syllable, w lies in that same factor;
// a square of syllable length >= 2 rules every factor out.
struct VertexLocation {
  enum class Kind { Identity, InFactor, NotInFactor };
  Kind kind = Kind::NotInFactor;
  int factor = -1;  // meaningful iff kind == InFactor
};

VertexLocation vertex_root_locate(const FreeProductContext& ctx, const Word& w);

// GroupBackend facade over a free-product context.
class FreeProductBackend : public GroupBackend {
 public:
  explicit FreeProductBackend(std::vector<BackendPtr> factors)
      : ctx_(std::move(factors)) {}

  const Alphabet& alphabet() const override { return ctx_.alphabet(); }
  bool is_identity(const Word& w) const override {
    require_supported(w);
    return fp_normal_form(ctx_, w).empty();
  }
  ConjugacyVerdict conjugacy(const Word& u, const Word& v) const override {
    require_supported(u);
    require_supported(v);
    return fp_conjugacy(ctx_, u, v);
  }
  const FreeProductContext& context() const { return ctx_; }

 private:
  FreeProductContext ctx_;
};

// Pairwise non-conjugate order-2 representatives (each squares to the
// identity under the ambient word problem).
struct Order2Reps {
  std::vector<Word> reps;
};

// Budgeted shortlex search for conjugators putting u and v onto
// representatives; conjugate iff they land on the same one.
ConjugacyVerdict order2_conjugacy(const GroupBackend& gb,
                                  const Order2Reps& reps, const Word& u,
                                  const Word& v, long budget);

enum class OrderClass { Trivial, OrderTwo, Other };

OrderClass infinite_order_guard(const GroupBackend& gb, const Word& w);

}  // namespace conj3m
