#include "conj3m/index2.hpp"

#include "conj3m/backends.hpp"

namespace conj3m {

OrientationCharacter::OrientationCharacter(Alphabet alphabet,
                                           std::vector<int> signs)
    : alphabet_(std::move(alphabet)), signs_(std::move(signs)) {
  if (static_cast<int>(signs_.size()) != alphabet_.size())
    throw InputError("character needs one sign per generator");
  for (int s : signs_)
    if (s != 1 && s != -1) throw InputError("character signs must be +1 or -1");
}

OrientationCharacter OrientationCharacter::for_presentation(
    const FinitePresentation& presentation, std::vector<int> signs) {
  OrientationCharacter chi(presentation.alphabet, std::move(signs));
  for (const Word& r : presentation.relators)
    if (chi.sign_of(r) != +1)
      throw InputError(
          "character is not a homomorphism: relator '" +
          format_word(presentation.alphabet, r) +
          "' has an odd number of reversing letters");
  return chi;
}

int OrientationCharacter::sign_of_generator(int gen) const {
  if (gen < 0 || gen >= alphabet_.size())
    throw UnknownGeneratorError("generator index out of range: " +
                                std::to_string(gen));
  return signs_[static_cast<std::size_t>(gen)];
}

int OrientationCharacter::sign_of(const Word& w) const {
  int s = +1;
  for (const Letter& l : w.letters) s *= sign_of_generator(l.gen);
  return s;
}

bool OrientationCharacter::trivial() const {
  return !reversing_generator().has_value();
}

std::optional<int> OrientationCharacter::reversing_generator() const {
  for (int g = 0; g < alphabet_.size(); ++g)
    if (signs_[static_cast<std::size_t>(g)] == -1) return g;
  return std::nullopt;
}

CosetReps CosetReps::for_character(const OrientationCharacter& chi) {
  const auto r = chi.reversing_generator();
  if (!r)
    throw PreconditionError(
        "trivial character: H = G, no index-2 coset structure");
  return CosetReps{Word{}, Word::generator(*r)};
}

CosetClassResult gwp_enumerative(const GroupBackend& gb,
                                 std::span<const Word> h_generators,
                                 const CosetReps& reps, const Word& g,
                                 long budget) {
  // Words over the subgroup generators, fairly by shortlex, each evaluated
  // to an element h of H; membership in the coset a_i H is g = a_i h.
  ShortlexWords expressions(static_cast<int>(h_generators.size()));
  const Word g_inv = invert(g);
  for (long step = 0; step < budget; ++step) {
    const Word expr = expressions.next();
    Word h;
    for (const Letter& l : expr.letters) {
      const Word& gen = h_generators[static_cast<std::size_t>(l.gen)];
      h = concat(h, l.sign > 0 ? gen : invert(gen));
    }
    h = free_reduce(h);
    const Word* rep[2] = {&reps.a0, &reps.a1};
    for (int i = 0; i < 2; ++i) {
      if (gb.is_identity(concat(concat(g_inv, *rep[i]), h)))
        return CosetClassResult{i, step + 1};
    }
  }
  return CosetClassResult{std::nullopt, budget};
}

ConjugacyVerdict conj_in_G_given_cp_H(const GroupBackend& h_backend,
                                      const OrientationCharacter& chi,
                                      const CosetReps& reps, const Word& u,
                                      const Word& v) {
  if (!chi.member_H(u) || !chi.member_H(v))
    throw PreconditionError("conj_in_G_given_cp_H needs both inputs in H");
  bool exhausted = false;
  long budget = 0;
  const Word* rep[2] = {&reps.a0, &reps.a1};
  for (int i = 0; i < 2; ++i) {
    const Word target = conjugated(*rep[i], v);
    const ConjugacyVerdict verdict = h_backend.conjugacy(u, target);
    if (verdict.is_conjugate()) {
      // u = h (a_i v a_i^-1) h^-1, so u = (h a_i) v (h a_i)^-1
      return ConjugacyVerdict::conjugate(
          free_reduce(concat(verdict.witness, *rep[i])));
    }
    if (verdict.is_exhausted()) {
      exhausted = true;
      budget = verdict.budget;
    }
  }
  if (exhausted) return ConjugacyVerdict::exhausted(budget);
  return ConjugacyVerdict::not_conjugate();
}

ConjugacyVerdict decide_via_squares(const GroupBackend& g_word_problem,
                                    const Word& k, const Word& u,
                                    const Word& v) {
  const Word u2 = concat(u, u);
  const Word v2_conj = conjugated(k, concat(v, v));
  if (!g_word_problem.equal(u2, v2_conj))
    throw PreconditionError("decide_via_squares needs u^2 = k v^2 k^-1");
  if (g_word_problem.equal(u, conjugated(k, v)))
    return ConjugacyVerdict::conjugate(free_reduce(k));
  return ConjugacyVerdict::not_conjugate();
}

ExtensionClass classify_extension_l1(int eps, long p) {
  if (eps != 1 && eps != -1)
    throw InputError("extension exponent eps must be +1 or -1");
  if (eps == 1) return p % 2 == 0 ? ExtensionClass::ZxZ2
                                  : ExtensionClass::InfiniteCyclic;
  return p == 0 ? ExtensionClass::Z2freeZ2 : ExtensionClass::Inconsistent;
}

std::string extension_class_name(ExtensionClass c) {
  switch (c) {
    case ExtensionClass::ZxZ2: return "ZxZ2";
    case ExtensionClass::InfiniteCyclic: return "InfiniteCyclic";
    case ExtensionClass::Z2freeZ2: return "Z2freeZ2";
    case ExtensionClass::Inconsistent: return "Inconsistent";
  }
  return "?";
}

bool FreeKernelBackend::is_identity(const Word& w) const {
  require_supported(w);
  return free_reduce(w).empty();
}

ConjugacyVerdict FreeKernelBackend::conjugacy(const Word& u,
                                              const Word& v) const {
  require_supported(u);
  require_supported(v);
  FreeBackend free(chi_.alphabet());
  const ConjugacyVerdict in_free = free.conjugacy(u, v);
  if (!in_free.is_conjugate()) return ConjugacyVerdict::not_conjugate();
  const Word& h0 = in_free.witness;
  if (chi_.member_H(h0)) return in_free;
  if (free_reduce(v).empty()) {
    // v = 1: the only conjugate is 1 and any conjugator works
    return ConjugacyVerdict::conjugate(Word{});
  }
  const Word root = free_primitive_root(v);
  if (chi_.sign_of(root) == -1)
    return ConjugacyVerdict::conjugate(free_reduce(concat(h0, root)));
  return ConjugacyVerdict::not_conjugate();
}

}  // namespace conj3m
