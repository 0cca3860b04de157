#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "conj3m/backend.hpp"
#include "conj3m/freeprod.hpp"
#include "conj3m/index2.hpp"
#include "conj3m/klein.hpp"
#include "conj3m/presentation.hpp"

namespace conj3m {

struct PipelineBudgets {
  long square_witness = 10000;  // shortlex fallback for the square conjugator
  long order2 = 10000;          // order-2 representative search
  long root_power = 64;         // |p| bound when expressing v^2 = t^p
};

// Coordinates on a designated Z+Z subgroup of H: two commuting basis words
// and a map from subgroup elements to their integer coordinates (nullopt for
// words outside the subgroup).
struct ZZCoordinates {
  Word basis_a;
  Word basis_b;
  std::function<std::optional<std::array<long, 2>>(const Word&)> coords;
};

// Everything decide_conjugacy needs about G, H = ker(chi) and the solved
// subproblems. Optional fields gate the deeper branches; a branch that needs
// an absent field raises MissingCapabilityError naming it.
struct PipelineContext {
  FinitePresentation presentation;  // of G
  OrientationCharacter chi;         // kernel = H, must be nontrivial
  BackendPtr h_conjugacy;           // conjugacy in H, words over G's alphabet
  BackendPtr g_word_problem;        // word problem in G
  CosetReps reps;                   // (1, some reversing element)

  std::optional<Order2Reps> order2_reps;
  std::function<std::optional<CentralizerClass>(const Word&)> h_centralizer;
  BackendPtr seifert_delegate;
  std::optional<ZZCoordinates> zz;
  PipelineBudgets budgets;

  static PipelineContext make(FinitePresentation presentation,
                              OrientationCharacter chi, BackendPtr h_conjugacy,
                              BackendPtr g_word_problem);
};

struct TraceStep {
  std::string label;
  std::optional<Word> witness;
};
using DecisionTrace = std::vector<TraceStep>;

struct PipelineDecision {
  ConjugacyVerdict verdict;
  DecisionTrace trace;
};

bool is_abelian(const PipelineContext& ctx);

// The conjugator k with u^2 = k v^2 k^-1, through the index-2 reduction with
// a budgeted shortlex fallback when the H-solver is itself budget-limited.
struct SquareWitness {
  enum class Kind { Witness, NotConjugate, Exhausted };
  Kind kind = Kind::NotConjugate;
  Word witness;
  long budget = 0;
};

SquareWitness find_square_witness(const PipelineContext& ctx, const Word& u,
                                  const Word& v);

// The full case tree: coset split, conjugacy inside H, order-2 elements,
// square conjugacy, then centralizer trichotomy (cyclic / rank-two with the
// Klein-coordinate coset test / delegated).
PipelineDecision decide_conjugacy(const PipelineContext& ctx, const Word& u,
                                  const Word& v);

// Membership oracle for a boundary subgroup H <= G.
struct MembershipOracle {
  std::function<bool(const Word&)> contains;
};

bool boundary_membership_t2(const MembershipOracle& oracle, const Word& g);

// Budgeted search for a conjugator moving g into H: Conjugate(w) means
// w g w^-1 lies in H. A miss within the budget is only Exhausted.
ConjugacyVerdict boundary_conjugacy_t2(const MembershipOracle& oracle,
                                       const Alphabet& alphabet, const Word& g,
                                       long budget);

// The double G *_H G as a presentation: a mirror alphabet (suffix "_m") and
// one relator per subgroup generator identifying it with its mirror copy.
FinitePresentation double_along_subgroup(const Alphabet& alphabet,
                                         std::span<const Word> h_generators);

Word mirror_word(const Word& w, int n_generators);

}  // namespace conj3m
