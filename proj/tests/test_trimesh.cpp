#include <doctest.h>

#include "tri_helpers.hpp"

using namespace conj3m;
using namespace testhelp;

TEST_CASE("perm4 basics") {
  const Perm4 p(1, 0, 3, 2);
  CHECK(p.even());
  CHECK(p.inverse() == p);
  const Perm4 q(1, 0, 2, 3);
  CHECK_FALSE(q.even());
  CHECK(q.after(q) == Perm4());
  CHECK_FALSE(Perm4::from_images({0, 0, 1, 2}).has_value());
}

TEST_CASE("validation") {
  const Triangulation ball = one_tet_ball();
  CHECK(ball.is_valid());
  CHECK(ball.boundary_faces().size() == 4);

  Triangulation bad(2);
  bad.set_half_gluing(0, 0, Gluing{1, 0, Perm4(0, 1, 2, 3)});
  // missing the reverse half
  CHECK_FALSE(bad.validate().empty());
  bad.set_half_gluing(1, 0, Gluing{0, 0, Perm4(0, 1, 2, 3)});
  CHECK(bad.is_valid());
  // a non-involutive pair
  Triangulation bad2(2);
  bad2.set_half_gluing(0, 0, Gluing{1, 0, Perm4(0, 1, 2, 3)});
  bad2.set_half_gluing(1, 0, Gluing{0, 0, Perm4(0, 1, 3, 2)});
  CHECK_FALSE(bad2.validate().empty());
  // a face glued to itself
  Triangulation bad3(1);
  bad3.set_half_gluing(0, 0, Gluing{0, 0, Perm4(0, 1, 2, 3)});
  CHECK_FALSE(bad3.validate().empty());
  CHECK_THROWS_AS(Triangulation(1).add_gluing(0, 0, 0, 0, Perm4()),
                  InputError);
}

TEST_CASE("orientability") {
  CHECK(orientability(one_tet_ball()).orientable);
  CHECK(orientability(two_tet_ball()).orientable);
  CHECK(orientability(one_tet_self(false)).orientable);  // odd perm loop
  const auto bad = orientability(one_tet_self(true));    // even perm loop
  CHECK_FALSE(bad.orientable);
  CHECK_FALSE(bad.witness_cycle.empty());
  // the witness cycle's sign product is -1
  int sign = 1;
  for (const FaceSlot& s : bad.witness_cycle)
    sign *= Triangulation::compatibility_sign(
        one_tet_self(true).gluing(s.first, s.second)->perm);
  CHECK(sign == -1);

  Triangulation disconnected(2);
  CHECK_THROWS_AS(orientability(disconnected), DisconnectedError);
}

TEST_CASE("euler characteristic") {
  CHECK(euler_characteristic(one_tet_ball()) == 1);
  CHECK(euler_characteristic(two_tet_ball()) == 1);
  Triangulation two_balls(2);
  CHECK(euler_characteristic(two_balls) == 2);  // disjoint sum
  // the double of a ball along its boundary sphere is closed
  std::vector<FaceSlot> all_faces = one_tet_ball().boundary_faces();
  const Triangulation doubled = double_along_boundary(one_tet_ball(), all_faces);
  CHECK(doubled.n_tets() == 2);
  CHECK(doubled.boundary_faces().empty());
  CHECK(euler_characteristic(doubled) == 0);
  CHECK(orientability(doubled).orientable);
}

TEST_CASE("boundary components") {
  const auto ball = boundary_components(one_tet_ball());
  REQUIRE(ball.size() == 1);
  CHECK(ball.front().faces.size() == 4);
  CHECK(ball.front().euler == 2);
  CHECK(ball.front().orientable);

  CHECK(boundary_components(double_along_boundary(one_tet_ball(),
                                                  one_tet_ball().boundary_faces()))
            .empty());

  Triangulation two_balls(2);
  CHECK(boundary_components(two_balls).size() == 2);
}

TEST_CASE("double along the boundary") {
  // mirror only: no faces selected
  const Triangulation disjoint = double_along_boundary(one_tet_ball(), {});
  CHECK(disjoint.n_tets() == 2);
  CHECK(disjoint.boundary_faces().size() == 8);

  CHECK_THROWS_AS(double_along_boundary(two_tet_ball(), {{0, 0}}),
                  FaceNotOnBoundaryError);

  // chi(2M) = 2 chi(M) - chi(boundary), and the double is closed
  for (const Triangulation& t : triangulation_corpus(12, 4, 3)) {
    if (t.boundary_faces().empty()) continue;
    long chi_boundary = 0;
    for (const auto& c : boundary_components(t)) chi_boundary += c.euler;
    const Triangulation d = double_along_boundary(t, t.boundary_faces());
    CHECK(d.is_valid());
    CHECK(d.boundary_faces().empty());
    CHECK(euler_characteristic(d) ==
          2 * euler_characteristic(t) - chi_boundary);
  }
}

TEST_CASE("capping spherical boundary components") {
  // sphere boundary of the 2-tet ball gets coned; the result is closed
  const Triangulation capped = cap_spherical_boundaries(two_tet_ball());
  CHECK(capped.n_tets() == 2 + 6);
  CHECK(capped.is_valid());
  CHECK(capped.boundary_faces().empty());
  CHECK(euler_characteristic(capped) == 0);

  // closed input: unchanged
  const Triangulation closed = double_along_boundary(
      one_tet_ball(), one_tet_ball().boundary_faces());
  CHECK(cap_spherical_boundaries(closed).n_tets() == closed.n_tets());

  // non-spherical boundary: unchanged; search a self-gluing of one tet with
  // a torus-like (euler 0) boundary
  bool found_torus = false;
  for (int to_face = 1; to_face < 4 && !found_torus; ++to_face) {
    std::mt19937 rng(5);
    for (int attempt = 0; attempt < 30; ++attempt) {
      Triangulation t(1);
      t.add_gluing(0, 0, 0, to_face, random_face_perm(rng, 0, to_face));
      const auto comps = boundary_components(t);
      bool all_nonsphere = true;
      for (const auto& c : comps) all_nonsphere &= c.euler != 2;
      if (!comps.empty() && all_nonsphere) {
        CHECK(cap_spherical_boundaries(t).n_tets() == 1);
        found_torus = true;
        break;
      }
    }
  }
  CHECK(found_torus);
}

TEST_CASE("double cover laws over the corpus") {
  const auto corpus = triangulation_corpus(20, 6, 5);
  int nonorientable_count = 0;
  for (const Triangulation& t : corpus) {
    const bool base_orientable = orientability(t).orientable;
    if (!base_orientable) ++nonorientable_count;
    const CoverData cd = orientation_double_cover(t);
    CHECK(cd.cover.is_valid());
    CHECK(cd.cover.n_tets() == 2 * t.n_tets());
    CHECK(euler_characteristic(cd.cover) == 2 * euler_characteristic(t));
    CHECK(orientability_is_clean(cd));
    // deck is a fixed-point-free involution over the projection
    for (int i = 0; i < cd.cover.n_tets(); ++i) {
      CHECK(cd.deck[static_cast<std::size_t>(i)] != i);
      CHECK(cd.deck[static_cast<std::size_t>(cd.deck[static_cast<std::size_t>(i)])] == i);
      CHECK(cd.projection[static_cast<std::size_t>(cd.deck[static_cast<std::size_t>(i)])] ==
            cd.projection[static_cast<std::size_t>(i)]);
    }
    CHECK(cd.cover.connected() == !base_orientable);
  }
  CHECK(corpus.size() >= 20);
  CHECK(nonorientable_count >= 5);
}

TEST_CASE("double cover of an orientable base splits into two copies") {
  const CoverData cd = orientation_double_cover(two_tet_ball());
  CHECK_FALSE(cd.cover.connected());
  CHECK(cd.cover.n_tets() == 4);
  CHECK(orientability_is_clean(cd));
}

TEST_CASE("pi1 presentation basics") {
  const Pi1Result ball = pi1_presentation(one_tet_ball());
  CHECK(ball.presentation.alphabet.size() == 0);
  CHECK(ball.presentation.relators.empty());

  // generator count = gluing pairs - (tets - 1) over the corpus, and the
  // character construction's parity check passes (it would throw otherwise)
  for (const Triangulation& t : triangulation_corpus(20, 6, 5)) {
    const Pi1Result r = pi1_presentation(t);
    CHECK(r.presentation.alphabet.size() ==
          static_cast<int>(t.gluing_pairs().size()) - (t.n_tets() - 1));
    // orientable base <=> trivial character
    CHECK(orientability(t).orientable == r.character.trivial());
    // pulled-back character on the double cover is trivial
    const CoverData cd = orientation_double_cover(t);
    if (cd.cover.connected()) {
      const Pi1Result rc = pi1_presentation(cd.cover);
      CHECK(rc.character.trivial());
    }
  }
}
