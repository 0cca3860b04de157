#include "conj3m/freeprod.hpp"

#include <algorithm>

namespace conj3m {

Word FPWord::flatten() const {
  Word w;
  for (const Syllable& s : syllables) w = concat(w, s.element);
  return free_reduce(w);
}

FreeProductContext::FreeProductContext(std::vector<BackendPtr> factors)
    : factors_(std::move(factors)) {
  if (factors_.empty()) throw InputError("free product needs factors");
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const Alphabet& fa = factors_[i]->alphabet();
    gen_offset_.push_back(alphabet_.size());
    for (int g = 0; g < fa.size(); ++g) {
      alphabet_.add(fa.name(g));  // throws on duplicates across factors
      gen_factor_.push_back(static_cast<int>(i));
    }
  }
}

int FreeProductContext::factor_of_generator(int gen) const {
  if (gen < 0 || gen >= alphabet_.size())
    throw UnknownGeneratorError("generator index out of range: " +
                                std::to_string(gen));
  return gen_factor_[static_cast<std::size_t>(gen)];
}

Word FreeProductContext::to_local(int factor, const Word& w) const {
  Word r;
  r.letters.reserve(w.size());
  const int off = gen_offset_[static_cast<std::size_t>(factor)];
  for (const Letter& l : w.letters) {
    if (factor_of_generator(l.gen) != factor)
      throw UnsupportedWordError("letter outside factor alphabet");
    r.letters.push_back(Letter{l.gen - off, l.sign});
  }
  return r;
}

Word FreeProductContext::to_ambient(int factor, const Word& w) const {
  Word r;
  r.letters.reserve(w.size());
  const int off = gen_offset_[static_cast<std::size_t>(factor)];
  for (const Letter& l : w.letters)
    r.letters.push_back(Letter{l.gen + off, l.sign});
  return r;
}

bool FreeProductContext::factor_identity(int f, const Word& ambient) const {
  return factor(f).is_identity(to_local(f, ambient));
}

bool FreeProductContext::factor_equal(int f, const Word& a,
                                      const Word& b) const {
  return factor_identity(f, concat(a, invert(b)));
}

FPWord fp_normal_form(const FreeProductContext& ctx, const Word& w) {
  // Stack of syllables; letters are absorbed into the top syllable when in
  // the same factor, trivial syllables popped as they appear.
  FPWord out;
  for (const Letter& l : w.letters) {
    const int f = ctx.factor_of_generator(l.gen);
    if (!out.empty() && out.syllables.back().factor == f) {
      out.syllables.back().element =
          free_reduce(concat(out.syllables.back().element, Word{{l}}));
    } else {
      out.syllables.push_back(Syllable{f, Word{{l}}});
    }
    while (!out.empty() &&
           ctx.factor_identity(out.syllables.back().factor,
                               out.syllables.back().element)) {
      out.syllables.pop_back();
      // dropping may expose two same-factor neighbours; remerge lazily on
      // the next push, but also now if the last two match
      if (out.size() >= 2) {
        Syllable& a = out.syllables[out.size() - 2];
        Syllable& b = out.syllables.back();
        if (a.factor == b.factor) {
          a.element = free_reduce(concat(a.element, b.element));
          out.syllables.pop_back();
        }
      }
    }
  }
  return out;
}

FPCyclicReduction fp_cyclic_reduce(const FreeProductContext& ctx,
                                   const FPWord& w) {
  FPCyclicReduction r;
  r.core = w;
  while (r.core.size() >= 2 &&
         r.core.syllables.front().factor == r.core.syllables.back().factor) {
    const Syllable first = r.core.syllables.front();
    const Syllable last = r.core.syllables.back();
    r.conjugator.syllables.push_back(first);
    r.core.syllables.erase(r.core.syllables.begin());
    r.core.syllables.pop_back();
    const Word merged = free_reduce(concat(last.element, first.element));
    if (!ctx.factor_identity(first.factor, merged))
      r.core.syllables.push_back(Syllable{first.factor, merged});
  }
  return r;
}

namespace {

bool syllables_equal(const FreeProductContext& ctx, const Syllable& a,
                     const Syllable& b) {
  return a.factor == b.factor && ctx.factor_equal(a.factor, a.element, b.element);
}

}  // namespace

ConjugacyVerdict fp_conjugacy(const FreeProductContext& ctx, const Word& u,
                              const Word& v) {
  const FPCyclicReduction cu = fp_cyclic_reduce(ctx, fp_normal_form(ctx, u));
  const FPCyclicReduction cv = fp_cyclic_reduce(ctx, fp_normal_form(ctx, v));
  const Word pu = cu.conjugator.flatten();
  const Word pv = cv.conjugator.flatten();
  if (cu.core.size() != cv.core.size()) return ConjugacyVerdict::not_conjugate();

  if (cu.core.empty())
    return ConjugacyVerdict::conjugate(Word{});  // both trivial

  if (cu.core.size() == 1) {
    const Syllable& su = cu.core.syllables.front();
    const Syllable& sv = cv.core.syllables.front();
    if (su.factor != sv.factor) return ConjugacyVerdict::not_conjugate();
    const ConjugacyVerdict in_factor = ctx.factor(su.factor).conjugacy(
        ctx.to_local(su.factor, su.element), ctx.to_local(sv.factor, sv.element));
    if (in_factor.is_exhausted()) return in_factor;
    if (!in_factor.is_conjugate()) return ConjugacyVerdict::not_conjugate();
    const Word h = ctx.to_ambient(su.factor, in_factor.witness);
    return ConjugacyVerdict::conjugate(
        free_reduce(concat(concat(pu, h), invert(pv))));
  }

  // length >= 2: conjugate iff cu.core is a cyclic permutation of cv.core
  const std::size_t n = cv.core.size();
  for (std::size_t k = 0; k < n; ++k) {
    bool match = true;
    for (std::size_t i = 0; i < n && match; ++i)
      match = syllables_equal(ctx, cu.core.syllables[i],
                              cv.core.syllables[(k + i) % n]);
    if (!match) continue;
    Word prefix;  // first k syllables of cv.core
    for (std::size_t i = 0; i < k; ++i)
      prefix = concat(prefix, cv.core.syllables[i].element);
    // rot_k(core_v) = prefix^-1 core_v prefix
    return ConjugacyVerdict::conjugate(
        free_reduce(concat(concat(pu, invert(prefix)), invert(pv))));
  }
  return ConjugacyVerdict::not_conjugate();
}

VertexLocation vertex_root_locate(const FreeProductContext& ctx,
                                  const Word& w) {
  const FPWord nf = fp_normal_form(ctx, w);
  if (nf.empty()) return VertexLocation{VertexLocation::Kind::Identity, -1};
  if (nf.size() == 1)
    return VertexLocation{VertexLocation::Kind::InFactor,
                          nf.syllables.front().factor};
  return VertexLocation{VertexLocation::Kind::NotInFactor, -1};
}

ConjugacyVerdict order2_conjugacy(const GroupBackend& gb,
                                  const Order2Reps& reps, const Word& u,
                                  const Word& v, long budget) {
  auto order_le_2 = [&](const Word& w) {
    return gb.is_identity(concat(w, w));
  };
  if (!order_le_2(u) || !order_le_2(v))
    throw PreconditionError("order2_conjugacy needs order <= 2 inputs");

  // Walk conjugators by shortlex; first hit per input decides its
  // representative.
  std::optional<std::pair<std::size_t, Word>> hit_u, hit_v;
  ShortlexWords gen(gb.alphabet().size());
  for (long step = 0; step < budget; ++step) {
    const Word g = gen.next();
    for (std::size_t i = 0; i < reps.reps.size(); ++i) {
      const Word conj = conjugated(g, reps.reps[i]);
      if (!hit_u && gb.equal(u, conj)) hit_u = {i, g};
      if (!hit_v && gb.equal(v, conj)) hit_v = {i, g};
    }
    if (hit_u && hit_v) {
      if (hit_u->first != hit_v->first)
        return ConjugacyVerdict::not_conjugate();
      // u = g h g^-1, v = g' h g'^-1  =>  u = (g g'^-1) v (g g'^-1)^-1
      return ConjugacyVerdict::conjugate(
          free_reduce(concat(hit_u->second, invert(hit_v->second))));
    }
  }
  return ConjugacyVerdict::exhausted(budget);
}

OrderClass infinite_order_guard(const GroupBackend& gb, const Word& w) {
  if (gb.is_identity(w)) return OrderClass::Trivial;
  if (gb.is_identity(concat(w, w))) return OrderClass::OrderTwo;
  return OrderClass::Other;
}

}  // namespace conj3m
