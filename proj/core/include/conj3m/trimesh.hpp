#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "conj3m/index2.hpp"
#include "conj3m/presentation.hpp"

namespace conj3m {

// A permutation of the four vertices of a tetrahedron.
class Perm4 {
 public:
  constexpr Perm4() : img_{0, 1, 2, 3} {}
  Perm4(int a, int b, int c, int d) : img_{static_cast<std::uint8_t>(a),
                                           static_cast<std::uint8_t>(b),
                                           static_cast<std::uint8_t>(c),
                                           static_cast<std::uint8_t>(d)} {}
  static std::optional<Perm4> from_images(const std::array<int, 4>& images);

  int operator[](int i) const { return img_[static_cast<std::size_t>(i)]; }
  Perm4 inverse() const;
  // (g.after(f))(x) = g(f(x))
  Perm4 after(const Perm4& f) const;
  bool even() const;

  friend bool operator==(const Perm4&, const Perm4&) = default;

 private:
  std::array<std::uint8_t, 4> img_;
};

// One half of a face identification: the face `face` of the owning
// tetrahedron is glued to face `to_face` of `to_tet`, and `perm` maps the
// owner's four vertices to the target's with perm[face] = to_face.
struct Gluing {
  int to_tet = -1;
  int to_face = -1;
  Perm4 perm;
};

using FaceSlot = std::pair<int, int>;  // (tet, face)

class DisconnectedError : public std::runtime_error {
 public:
  DisconnectedError() : std::runtime_error("triangulation is disconnected") {}
};
class FaceNotOnBoundaryError : public std::runtime_error {
 public:
  explicit FaceNotOnBoundaryError(const FaceSlot& s)
      : std::runtime_error("face " + std::to_string(s.first) + ":" +
                           std::to_string(s.second) + " is not on the boundary") {}
};

// Tetrahedra with a partial involutive pairing of faces. Immutable once
// built through the checked mutators; the raw setter exists so that files
// can be loaded first and validated afterwards.
class Triangulation {
 public:
  explicit Triangulation(int n_tets);

  int n_tets() const { return n_tets_; }
  const std::optional<Gluing>& gluing(int tet, int face) const;
  bool is_boundary(int tet, int face) const { return !gluing(tet, face); }

  // Installs the pairing in both directions; throws InputError on conflicts.
  void add_gluing(int tet, int face, int to_tet, int to_face, const Perm4& p);
  // Stores one direction verbatim, range-checked only.
  void set_half_gluing(int tet, int face, const Gluing& g);

  std::vector<std::string> validate() const;
  bool is_valid() const { return validate().empty(); }
  bool connected() const;

  std::vector<FaceSlot> boundary_faces() const;
  // All gluing pairs, one canonical (smaller) half each, in slot order.
  std::vector<FaceSlot> gluing_pairs() const;

  // +1 when the gluing preserves compatible orientations of the two
  // tetrahedra, -1 when it flips them (odd vertex permutations preserve).
  static int compatibility_sign(const Perm4& p) { return p.even() ? -1 : +1; }

 private:
  int n_tets_;
  std::vector<std::array<std::optional<Gluing>, 4>> glue_;
};

struct OrientabilityResult {
  bool orientable = false;
  std::vector<int> orientation;           // per tet, +-1; set when orientable
  std::vector<FaceSlot> witness_cycle;    // crossings of an odd cycle otherwise
};

// BFS orientation propagation over the dual graph. Throws DisconnectedError.
OrientabilityResult orientability(const Triangulation& t);

struct CoverData {
  Triangulation cover;
  std::vector<int> projection;  // cover tet -> base tet
  std::vector<int> deck;        // sheet-swapping involution on cover tets
};

// The orientation double cover: tetrahedra doubled into two sheets, gluings
// staying in-sheet exactly when they preserve orientation.
CoverData orientation_double_cover(const Triangulation& t);

// Mirror double of t along the given boundary faces (identity on each face).
Triangulation double_along_boundary(const Triangulation& t,
                                    const std::vector<FaceSlot>& faces);

struct BoundaryComponent {
  std::vector<FaceSlot> faces;
  long euler = 0;
  bool orientable = true;
};

std::vector<BoundaryComponent> boundary_components(const Triangulation& t);

// Cone a tetrahedron onto every boundary triangle of each spherical
// (euler = 2) boundary component; other components are untouched.
Triangulation cap_spherical_boundaries(const Triangulation& t);

// V - E + F - T after identifications.
long euler_characteristic(const Triangulation& t);

// Dual-spine presentation: spanning tree of the dual graph, one generator
// per non-tree gluing pair, one relator per interior edge, and the
// orientation character read off the gluing compatibility signs.
struct Pi1Result {
  FinitePresentation presentation;
  OrientationCharacter character;
  std::vector<FaceSlot> generator_pairs;  // canonical half per generator
};

Pi1Result pi1_presentation(const Triangulation& t);

}  // namespace conj3m
