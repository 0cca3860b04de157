#include "conj3m/pipeline.hpp"

#include <algorithm>
#include <cstdlib>

namespace conj3m {

PipelineContext PipelineContext::make(FinitePresentation presentation,
                                      OrientationCharacter chi,
                                      BackendPtr h_conjugacy,
                                      BackendPtr g_word_problem) {
  if (chi.trivial())
    throw PreconditionError(
        "pipeline needs a nontrivial character (an index-2 kernel)");
  CosetReps reps = CosetReps::for_character(chi);
  return PipelineContext{std::move(presentation),
                         std::move(chi),
                         std::move(h_conjugacy),
                         std::move(g_word_problem),
                         std::move(reps),
                         std::nullopt,
                         {},
                         nullptr,
                         std::nullopt,
                         PipelineBudgets{}};
}

bool is_abelian(const PipelineContext& ctx) {
  const int n = ctx.presentation.alphabet.size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const Word x = Word::generator(i);
      const Word y = Word::generator(j);
      const Word comm =
          concat(concat(x, y), concat(invert(x), invert(y)));
      if (!ctx.g_word_problem->is_identity(comm)) return false;
    }
  return true;
}

SquareWitness find_square_witness(const PipelineContext& ctx, const Word& u,
                                  const Word& v) {
  const Word u2 = free_reduce(concat(u, u));
  const Word v2 = free_reduce(concat(v, v));
  if (!ctx.chi.member_H(u2) || !ctx.chi.member_H(v2))
    throw PreconditionError("find_square_witness needs squares in H");
  const ConjugacyVerdict via_h =
      conj_in_G_given_cp_H(*ctx.h_conjugacy, ctx.chi, ctx.reps, u2, v2);
  if (via_h.is_conjugate())
    return SquareWitness{SquareWitness::Kind::Witness, via_h.witness, 0};
  if (via_h.is_not_conjugate())
    return SquareWitness{SquareWitness::Kind::NotConjugate, {}, 0};
  // H-solver exhausted: fall back to direct shortlex enumeration in G
  ShortlexWords gen(ctx.presentation.alphabet.size());
  for (long step = 0; step < ctx.budgets.square_witness; ++step) {
    const Word k = gen.next();
    if (ctx.g_word_problem->equal(u2, conjugated(k, v2)))
      return SquareWitness{SquareWitness::Kind::Witness, k, 0};
  }
  return SquareWitness{SquareWitness::Kind::Exhausted, {},
                       ctx.budgets.square_witness};
}

namespace {

void push(DecisionTrace& trace, std::string label,
          std::optional<Word> witness = std::nullopt) {
  trace.push_back(TraceStep{std::move(label), std::move(witness)});
}

// eps with v t v^-1 = t^eps, checked through the word problem.
int conjugation_exponent(const GroupBackend& wp, const Word& v, const Word& t) {
  const Word vtv = conjugated(v, t);
  if (wp.equal(vtv, t)) return +1;
  if (wp.equal(vtv, invert(t))) return -1;
  throw PreconditionError(
      "centralizer root is not normalized by v; classification unusable");
}

// p with target = root^p, |p| bounded.
std::optional<long> power_of(const GroupBackend& wp, const Word& root,
                             const Word& target, long bound) {
  for (long ap = 0; ap <= bound; ++ap) {
    for (int sign : {+1, -1}) {
      if (ap == 0 && sign < 0) continue;
      const long p = sign * ap;
      Word pw;
      for (long i = 0; i < ap; ++i)
        pw = concat(pw, sign > 0 ? root : invert(root));
      if (wp.equal(target, pw)) return p;
    }
  }
  return std::nullopt;
}

}  // namespace

PipelineDecision decide_conjugacy(const PipelineContext& ctx, const Word& u,
                                  const Word& v) {
  DecisionTrace trace;
  const GroupBackend& wp = *ctx.g_word_problem;

  // (1) coset split
  const int su = ctx.chi.sign_of(u);
  const int sv = ctx.chi.sign_of(v);
  if (su != sv) {
    push(trace, "coset-check");
    return {ConjugacyVerdict::not_conjugate(), std::move(trace)};
  }
  push(trace, "coset-check");

  // (2) both in H: the index-2 reduction to conjugacy in H
  if (su == +1) {
    const ConjugacyVerdict verdict =
        conj_in_G_given_cp_H(*ctx.h_conjugacy, ctx.chi, ctx.reps, u, v);
    push(trace, "both-in-H",
         verdict.is_conjugate() ? std::optional<Word>(verdict.witness)
                                : std::nullopt);
    return {verdict, std::move(trace)};
  }

  // (3) reversing elements of order two
  const OrderClass ou = infinite_order_guard(wp, u);
  const OrderClass ov = infinite_order_guard(wp, v);
  if ((ou == OrderClass::OrderTwo) != (ov == OrderClass::OrderTwo)) {
    push(trace, "order-2");
    return {ConjugacyVerdict::not_conjugate(), std::move(trace)};
  }
  if (ou == OrderClass::OrderTwo) {
    if (!ctx.order2_reps) throw MissingCapabilityError("order2_reps");
    const ConjugacyVerdict verdict =
        order2_conjugacy(wp, *ctx.order2_reps, u, v, ctx.budgets.order2);
    push(trace, "order-2",
         verdict.is_conjugate() ? std::optional<Word>(verdict.witness)
                                : std::nullopt);
    return {verdict, std::move(trace)};
  }

  // (4) conjugate the squares
  const SquareWitness sq = find_square_witness(ctx, u, v);
  if (sq.kind == SquareWitness::Kind::NotConjugate) {
    push(trace, "square-conjugacy");
    return {ConjugacyVerdict::not_conjugate(), std::move(trace)};
  }
  if (sq.kind == SquareWitness::Kind::Exhausted) {
    push(trace, "square-conjugacy");
    return {ConjugacyVerdict::exhausted(sq.budget), std::move(trace)};
  }
  const Word& k = sq.witness;
  push(trace, "square-conjugacy", k);

  // (5)-(7) centralizer trichotomy for Z_H(v^2)
  if (!ctx.h_centralizer) throw MissingCapabilityError("h_centralizer");
  const Word v2 = free_reduce(concat(v, v));
  const auto centralizer = ctx.h_centralizer(v2);
  if (!centralizer) throw MissingCapabilityError("h_centralizer");

  if (const auto* cyclic = std::get_if<CyclicCentralizer>(&*centralizer)) {
    // Z_H(v^2) = <t>. Establish the extension cell to discharge
    // Z_G(v) = Z_G(v^2): the Z_2 * Z_2 cell is impossible for v of
    // infinite order, the other cells commute t with v.
    const Word& t = cyclic->root;
    const int eps = conjugation_exponent(wp, v, t);
    const auto p = power_of(wp, t, v2, ctx.budgets.root_power);
    if (!p) {
      push(trace, "cyclic-centralizer");
      return {ConjugacyVerdict::exhausted(ctx.budgets.root_power),
              std::move(trace)};
    }
    const ExtensionClass cell = classify_extension_l1(eps, *p);
    if (cell == ExtensionClass::Z2freeZ2 || cell == ExtensionClass::Inconsistent)
      throw PreconditionError(
          "extension classification " + extension_class_name(cell) +
          " contradicts an infinite-order v; context data is inconsistent");
    const ConjugacyVerdict verdict = decide_via_squares(wp, k, u, v);
    push(trace, "cyclic-centralizer",
         verdict.is_conjugate() ? std::optional<Word>(verdict.witness)
                                : std::nullopt);
    return {verdict, std::move(trace)};
  }

  if (std::holds_alternative<RankTwoCentralizer>(*centralizer)) {
    if (!ctx.zz) throw MissingCapabilityError("zz_coordinates");
    const ZZCoordinates& zz = *ctx.zz;
    auto coords_of = [&](const Word& w) {
      const auto c = zz.coords(w);
      if (!c)
        throw PreconditionError(
            "element expected in the designated Z+Z subgroup has no "
            "coordinates");
      return *c;
    };

    // conjugation action of v on the subgroup, in the designated basis
    const auto ca = coords_of(conjugated(v, zz.basis_a));
    const auto cb = coords_of(conjugated(v, zz.basis_b));
    IntMatrix2 action;
    action.a = {ca[0], cb[0], ca[1], cb[1]};  // columns are the images

    const Word z = free_reduce(concat(concat(invert(k), u), k));
    if (!wp.is_identity(free_reduce(concat(
            concat(z, v2), concat(invert(z), invert(v2))))))
      throw PreconditionError(
          "square witness does not move u into the centralizer of v^2");

    if (action == IntMatrix2::identity()) {
      // v centralizes Z_H(v^2): Z_G(v^2) is abelian and v's only
      // Z_G(v^2)-conjugate is v itself.
      const bool conj = wp.equal(z, v);
      push(trace, "ZZ-centralizer",
           conj ? std::optional<Word>(free_reduce(k)) : std::nullopt);
      return {conj ? ConjugacyVerdict::conjugate(free_reduce(k))
                   : ConjugacyVerdict::not_conjugate(),
              std::move(trace)};
    }
    IntMatrix2 minus_id;
    minus_id.a = {-1, 0, 0, -1};
    if (action == minus_id)
      throw PreconditionError(
          "v inverts Z_H(v^2), which forces v^4 = 1; context data is "
          "inconsistent");

    const Eigenbasis eigen = involution_eigenbasis(action);
    if (eigen.lattice_index != 1)
      throw PreconditionError(
          "eigenbasis spans an index-2 sublattice; the Klein coordinate "
          "step declines to guess");

    // change of basis into eigen coordinates: B * e = c, det B = +-1
    const long det = eigen.a_vec.x * eigen.b_vec.y - eigen.a_vec.y * eigen.b_vec.x;
    auto eigen_coords = [&](const std::array<long, 2>& c) {
      const long ex = (eigen.b_vec.y * c[0] - eigen.b_vec.x * c[1]) / det;
      const long ey = (-eigen.a_vec.y * c[0] + eigen.a_vec.x * c[1]) / det;
      return std::array<long, 2>{ex, ey};
    };
    auto word_of_eigen = [&](long x, long y) {
      // x * a_vec + y * b_vec in the designated basis
      const long pa = x * eigen.a_vec.x + y * eigen.b_vec.x;
      const long pb = x * eigen.a_vec.y + y * eigen.b_vec.y;
      Word w;
      for (long i = 0; i < std::labs(pa); ++i)
        w = concat(w, pa > 0 ? zz.basis_a : invert(zz.basis_a));
      for (long i = 0; i < std::labs(pb); ++i)
        w = concat(w, pb > 0 ? zz.basis_b : invert(zz.basis_b));
      return free_reduce(w);
    };

    const auto v2e = eigen_coords(coords_of(v2));
    if (v2e[1] != 0)
      throw PreconditionError("v^2 is not fixed by the action of v");
    const long s = v2e[0];
    if (s % 2 == 0)
      throw PreconditionError(
          "v^2 is an even power of the fixed eigenvector, which forces "
          "torsion; context data is inconsistent");
    const long alpha = (1 - s) / 2;  // t = a0^alpha v squares to a0

    const auto he = eigen_coords(coords_of(free_reduce(concat(z, invert(v)))));
    const KleinNF z_nf{he[0] - alpha, he[1], 1};
    const KleinNF v_nf{-alpha, 0, 1};

    const bool conj = coset_v_b2_test(z_nf, v_nf);
    if (!conj) {
      push(trace, "ZZ-centralizer");
      return {ConjugacyVerdict::not_conjugate(), std::move(trace)};
    }
    const auto w_nf = knf_conjugate_decide(z_nf, v_nf);
    if (!w_nf)
      throw PreconditionError("coset test and Klein conjugacy disagree");
    // realize the Klein witness as a word: a0^m b0^n (a0^alpha v)^eps
    Word w_word = word_of_eigen(w_nf->m, w_nf->n);
    if (w_nf->eps == 1)
      w_word = free_reduce(
          concat(w_word, concat(word_of_eigen(alpha, 0), v)));
    const Word full = free_reduce(concat(k, w_word));
    if (!wp.equal(u, conjugated(full, v)))
      throw PreconditionError("assembled Klein witness failed verification");
    push(trace, "ZZ-centralizer", full);
    return {ConjugacyVerdict::conjugate(full), std::move(trace)};
  }

  // Delegated: hand the pair, aligned so that u'^2 = v^2, to the external
  // solver for the Seifert vertex group.
  if (!ctx.seifert_delegate) throw MissingCapabilityError("seifert_delegate");
  const Word u_aligned = free_reduce(concat(concat(invert(k), u), k));
  const ConjugacyVerdict delegated =
      ctx.seifert_delegate->conjugacy(u_aligned, v);
  if (delegated.is_conjugate()) {
    const Word full = free_reduce(concat(k, delegated.witness));
    push(trace, "seifert-delegate", full);
    return {ConjugacyVerdict::conjugate(full), std::move(trace)};
  }
  push(trace, "seifert-delegate");
  return {delegated, std::move(trace)};
}

bool boundary_membership_t2(const MembershipOracle& oracle, const Word& g) {
  if (!oracle.contains) throw MissingCapabilityError("membership oracle");
  return oracle.contains(g);
}

ConjugacyVerdict boundary_conjugacy_t2(const MembershipOracle& oracle,
                                       const Alphabet& alphabet, const Word& g,
                                       long budget) {
  if (boundary_membership_t2(oracle, g))
    return ConjugacyVerdict::conjugate(Word{});
  ShortlexWords gen(alphabet.size());
  for (long step = 0; step < budget; ++step) {
    const Word w = gen.next();
    if (oracle.contains(conjugated(w, g)))
      return ConjugacyVerdict::conjugate(w);
  }
  return ConjugacyVerdict::exhausted(budget);
}

FinitePresentation double_along_subgroup(const Alphabet& alphabet,
                                         std::span<const Word> h_generators) {
  const int n = alphabet.size();
  Alphabet doubled = alphabet;
  for (int i = 0; i < n; ++i) doubled.add(alphabet.name(i) + "_m");
  FinitePresentation p{std::move(doubled), {}};
  for (const Word& h : h_generators)
    p.relators.push_back(
        free_reduce(concat(h, invert(mirror_word(h, n)))));
  return p;
}

Word mirror_word(const Word& w, int n_generators) {
  Word r;
  r.letters.reserve(w.size());
  for (const Letter& l : w.letters)
    r.letters.push_back(Letter{l.gen + n_generators, l.sign});
  return r;
}

}  // namespace conj3m
