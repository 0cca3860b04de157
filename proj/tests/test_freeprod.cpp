#include <doctest.h>

#include <random>

#include "conj3m/freeprod.hpp"
#include "helpers.hpp"

using namespace conj3m;
using testhelp::random_reduced;

namespace {

BackendPtr z2_factor(const std::string& name) {
  return std::make_shared<FiniteTableBackend>(
      Alphabet({name}), std::vector<std::vector<int>>{{0, 1}, {1, 0}},
      std::vector<int>{1});
}

BackendPtr z_factor(const std::string& name) {
  return std::make_shared<FreeBackend>(Alphabet({name}));
}

// Z_2 * Z_2 on generators s, t.
FreeProductContext z2z2() {
  return FreeProductContext({z2_factor("s"), z2_factor("t")});
}

// Z * Z on generators x, y (the free group of rank 2, syllable-wise).
FreeProductContext zz() {
  return FreeProductContext({z_factor("x"), z_factor("y")});
}

// Elements of Z_2 * Z_2 with normal form length <= len: alternating strings.
std::vector<Word> z2z2_elements(const Alphabet& a, int len) {
  std::vector<Word> out{Word{}};
  for (int start = 0; start < 2; ++start)
    for (int l = 1; l <= len; ++l) {
      Word w;
      for (int i = 0; i < l; ++i) w.letters.push_back(Letter{(start + i) % 2, 1});
      out.push_back(w);
    }
  return out;
}

}  // namespace

TEST_CASE("free product normal form") {
  const FreeProductContext ctx = z2z2();
  const Alphabet& a = ctx.alphabet();
  CHECK(fp_normal_form(ctx, parse_word(a, "s s t")).size() == 1);
  CHECK(fp_normal_form(ctx, parse_word(a, "s t s t")).size() == 4);
  CHECK(fp_normal_form(ctx, Word{}).empty());
  CHECK(fp_normal_form(ctx, parse_word(a, "s t t s")).empty());
  // inverse letters collapse inside the Z_2 factors
  CHECK(fp_normal_form(ctx, parse_word(a, "s^-1 t^-1")).size() == 2);
}

TEST_CASE("normal form respects multiplication on random pairs") {
  std::mt19937 rng(81);
  for (const bool use_zz : {false, true}) {
    const FreeProductContext ctx = use_zz ? zz() : z2z2();
    for (int i = 0; i < 500; ++i) {
      const Word u = random_reduced(rng, 2, i % 8);
      const Word v = random_reduced(rng, 2, (i * 5) % 8);
      const Word uv = concat(u, v);
      // flatten(nf(u)) * flatten(nf(v)) and uv have the same normal form
      const Word recombined =
          concat(fp_normal_form(ctx, u).flatten(), fp_normal_form(ctx, v).flatten());
      const FPWord nf1 = fp_normal_form(ctx, recombined);
      const FPWord nf2 = fp_normal_form(ctx, uv);
      REQUIRE(nf1.size() == nf2.size());
      for (std::size_t k = 0; k < nf1.size(); ++k) {
        CHECK(nf1.syllables[k].factor == nf2.syllables[k].factor);
        CHECK(ctx.factor_equal(nf1.syllables[k].factor, nf1.syllables[k].element,
                               nf2.syllables[k].element));
      }
    }
  }
}

TEST_CASE("cyclic reduction in the free product") {
  const FreeProductContext ctx = zz();
  const Alphabet& a = ctx.alphabet();
  const auto r1 = fp_cyclic_reduce(ctx, fp_normal_form(ctx, parse_word(a, "x y x^-1")));
  CHECK(r1.core.size() == 1);
  CHECK(r1.conjugator.size() == 1);

  const FreeProductContext ctx2 = z2z2();
  const Alphabet& a2 = ctx2.alphabet();
  const auto r2 = fp_cyclic_reduce(ctx2, fp_normal_form(ctx2, parse_word(a2, "s t")));
  CHECK(r2.core.size() == 2);
  CHECK(r2.conjugator.empty());

  const auto r3 = fp_cyclic_reduce(ctx2, fp_normal_form(ctx2, parse_word(a2, "s t s")));
  CHECK(r3.core.size() == 1);
  CHECK(r3.core.syllables.front().factor == 1);  // the t syllable survives
  CHECK(r3.conjugator.size() == 1);

  // recomposition
  std::mt19937 rng(83);
  for (int i = 0; i < 300; ++i) {
    const Word w = random_reduced(rng, 2, i % 10);
    const auto cr = fp_cyclic_reduce(ctx2, fp_normal_form(ctx2, w));
    const Word rebuilt =
        conjugated(cr.conjugator.flatten(), cr.core.flatten());
    CHECK(fp_normal_form(ctx2, concat(rebuilt, invert(w))).empty());
  }
}

TEST_CASE("free product conjugacy: pinned examples") {
  const FreeProductContext ctx = z2z2();
  const Alphabet& a = ctx.alphabet();
  FreeProductBackend gb({z2_factor("s"), z2_factor("t")});

  const auto stts = fp_conjugacy(ctx, parse_word(a, "s t"), parse_word(a, "t s"));
  REQUIRE(stts.is_conjugate());
  CHECK(gb.equal(conjugated(stts.witness, parse_word(a, "t s")),
                 parse_word(a, "s t")));

  CHECK(fp_conjugacy(ctx, parse_word(a, "s"), parse_word(a, "t")).is_not_conjugate());

  const auto self = fp_conjugacy(ctx, parse_word(a, "s t s t"), parse_word(a, "s t s t"));
  REQUIRE(self.is_conjugate());
}

TEST_CASE("free product conjugacy matches brute force in Z2 * Z2") {
  const FreeProductContext ctx = z2z2();
  FreeProductBackend gb({z2_factor("s"), z2_factor("t")});
  const auto elems = z2z2_elements(ctx.alphabet(), 6);
  const auto conjugators = z2z2_elements(ctx.alphabet(), 8);
  for (const Word& u : elems)
    for (const Word& v : elems) {
      bool brute = false;
      for (const Word& g : conjugators)
        if (gb.equal(u, conjugated(g, v))) {
          brute = true;
          break;
        }
      const auto verdict = fp_conjugacy(ctx, u, v);
      CHECK(verdict.is_conjugate() == brute);
      if (verdict.is_conjugate())
        CHECK(gb.equal(u, conjugated(verdict.witness, v)));
    }
}

TEST_CASE("vertex location through squares") {
  const FreeProductContext ctx = z2z2();
  const Alphabet& a = ctx.alphabet();
  const auto s_loc = vertex_root_locate(ctx, parse_word(a, "s"));
  CHECK(s_loc.kind == VertexLocation::Kind::InFactor);
  CHECK(s_loc.factor == 0);
  CHECK(vertex_root_locate(ctx, parse_word(a, "s t")).kind ==
        VertexLocation::Kind::NotInFactor);
  CHECK(vertex_root_locate(ctx, Word{}).kind == VertexLocation::Kind::Identity);

  const FreeProductContext ctx2 = zz();
  const Alphabet& a2 = ctx2.alphabet();
  CHECK(vertex_root_locate(ctx2, parse_word(a2, "x y x^-1")).kind ==
        VertexLocation::Kind::NotInFactor);

  // contrapositive of the square criterion: a square of syllable length >= 2
  // never sits in a factor
  std::mt19937 rng(91);
  for (int i = 0; i < 300; ++i) {
    const Word w = testhelp::random_reduced(rng, 2, i % 9);
    const Word w2 = concat(w, w);
    const auto loc = vertex_root_locate(ctx2, w);
    if (fp_normal_form(ctx2, w2).size() >= 2)
      CHECK(loc.kind == VertexLocation::Kind::NotInFactor);
    if (fp_normal_form(ctx2, w2).size() == 1) {
      CHECK(loc.kind == VertexLocation::Kind::InFactor);
      CHECK(loc.factor ==
            fp_normal_form(ctx2, w2).syllables.front().factor);
    }
  }
}

TEST_CASE("order-2 conjugacy in the infinite dihedral group") {
  FreeProductBackend gb({z2_factor("s"), z2_factor("t")});
  const Alphabet& a = gb.alphabet();
  const Order2Reps reps{{parse_word(a, "s"), parse_word(a, "t")}};

  const auto hit = order2_conjugacy(gb, reps, parse_word(a, "s t s"),
                                    parse_word(a, "t"), 1000);
  REQUIRE(hit.is_conjugate());
  CHECK(gb.equal(conjugated(hit.witness, parse_word(a, "t")),
                 parse_word(a, "s t s")));

  CHECK(order2_conjugacy(gb, reps, parse_word(a, "s"), parse_word(a, "t"), 1000)
            .is_not_conjugate());

  const auto self =
      order2_conjugacy(gb, reps, parse_word(a, "s"), parse_word(a, "s"), 1000);
  REQUIRE(self.is_conjugate());
  CHECK(self.witness.empty());

  CHECK_THROWS_AS(order2_conjugacy(gb, reps, parse_word(a, "s t"),
                                   parse_word(a, "t"), 1000),
                  PreconditionError);
  // a budget too small to reach the representatives is honest
  CHECK(order2_conjugacy(gb, reps, parse_word(a, "s t s t s t s t s"),
                         parse_word(a, "t"), 2)
            .is_exhausted());
}

TEST_CASE("order guard") {
  FreeProductBackend gb({z2_factor("s"), z2_factor("t")});
  const Alphabet& a = gb.alphabet();
  CHECK(infinite_order_guard(gb, parse_word(a, "s")) == OrderClass::OrderTwo);
  CHECK(infinite_order_guard(gb, parse_word(a, "s t")) == OrderClass::Other);
  CHECK(infinite_order_guard(gb, Word{}) == OrderClass::Trivial);
}

TEST_CASE("free product context rejects overlapping alphabets") {
  CHECK_THROWS_AS(FreeProductContext({z2_factor("s"), z2_factor("s")}),
                  InputError);
}
