#pragma once

#include <optional>
#include <string>
#include <vector>

#include "conj3m/backend.hpp"
#include "conj3m/presentation.hpp"

namespace conj3m {

// The homomorphism G -> Z_2 sending each generator to +1 (orientation
// preserving) or -1 (reversing). H = ker(chi) is the index-2 subgroup when
// the character is nontrivial. Construction against a presentation rejects
// characters with an odd-parity relator.
class OrientationCharacter {
 public:
  OrientationCharacter(Alphabet alphabet, std::vector<int> signs);
  static OrientationCharacter for_presentation(
      const FinitePresentation& presentation, std::vector<int> signs);

  const Alphabet& alphabet() const { return alphabet_; }
  int sign_of_generator(int gen) const;
  int sign_of(const Word& w) const;
  bool member_H(const Word& w) const { return sign_of(w) == +1; }
  bool trivial() const;
  // Index of some reversing generator, if any.
  std::optional<int> reversing_generator() const;

 private:
  Alphabet alphabet_;
  std::vector<int> signs_;
};

// Coset representatives for G/H: a0 = 1 and a reversing a1.
struct CosetReps {
  Word a0;  // identity
  Word a1;  // any fixed element with sign -1

  static CosetReps for_character(const OrientationCharacter& chi);
};

// Outcome of the enumerative generalized word problem: the coset index of g,
// or Exhausted when the budget ran out.
struct CosetClassResult {
  std::optional<int> coset;  // 0 or 1; nullopt = exhausted
  long steps_used = 0;

  bool exhausted() const { return !coset.has_value(); }
};

// Enumerate H (as products of the given subgroup generators, fairly by
// shortlex over the product expressions) and test g = a_i * h through the
// backend word problem.
CosetClassResult gwp_enumerative(const GroupBackend& gb,
                                 std::span<const Word> h_generators,
                                 const CosetReps& reps, const Word& g,
                                 long budget);

// Conjugacy in G for u, v in H, given a solver for conjugacy in H: u ~_G v
// iff u ~_H a_i v a_i^-1 for i = 0, 1. Membership of u and v in H is checked
// against chi.
ConjugacyVerdict conj_in_G_given_cp_H(const GroupBackend& h_backend,
                                      const OrientationCharacter& chi,
                                      const CosetReps& reps, const Word& u,
                                      const Word& v);

// The single-test conjugacy decision available once u^2 = k v^2 k^-1 and the
// caller guarantees Z_G(v) = Z_G(v^2): u ~ v iff u = k v k^-1.
ConjugacyVerdict decide_via_squares(const GroupBackend& g_word_problem,
                                    const Word& k, const Word& u,
                                    const Word& v);

// Classification of <v,t | t^v = t^eps, v^2 = t^p> under the standing
// hypothesis that <t> = Z has index 2.
enum class ExtensionClass {
  ZxZ2,           // eps = +1, p even: Z x Z_2
  InfiniteCyclic, // eps = +1, p odd
  Z2freeZ2,       // eps = -1, p = 0: Z_2 * Z_2
  Inconsistent,   // eps = -1, p != 0: forces t^{2p} = 1
};

ExtensionClass classify_extension_l1(int eps, long p);
std::string extension_class_name(ExtensionClass c);

// Conjugacy solver for H = ker(chi) inside the free group on chi's alphabet:
// u ~_H v iff some free conjugator h0 r^k lands in H, where r is the
// primitive root of v.
class FreeKernelBackend : public GroupBackend {
 public:
  explicit FreeKernelBackend(OrientationCharacter chi) : chi_(std::move(chi)) {}

  const Alphabet& alphabet() const override { return chi_.alphabet(); }
  bool is_identity(const Word& w) const override;
  ConjugacyVerdict conjugacy(const Word& u, const Word& v) const override;

 private:
  OrientationCharacter chi_;
};

}  // namespace conj3m
