#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <variant>

#include "conj3m/word.hpp"

namespace conj3m {

// Normal form a^m b^n t^eps in the Klein bottle group
// K = <a,b,t | [a,b]=1, t^2=a, b^t=b^-1>. Distinct triples are distinct
// elements.
struct KleinNF {
  long m = 0;
  long n = 0;
  int eps = 0;  // 0 or 1

  static KleinNF identity() { return {}; }
  static KleinNF a(long k = 1) { return {k, 0, 0}; }
  static KleinNF b(long k = 1) { return {0, k, 0}; }
  static KleinNF t() { return {0, 0, 1}; }

  friend bool operator==(const KleinNF&, const KleinNF&) = default;
};

// (m1,n1,e1)*(m2,n2,e2) = (m1+m2+[e1&e2], n1+(-1)^e1 n2, e1 xor e2)
KleinNF knf_multiply(const KleinNF& x, const KleinNF& y);
KleinNF knf_invert(const KleinNF& x);
KleinNF knf_power(const KleinNF& x, long k);

// Centralizer of an element of K: all of K (powers of a), the abelian
// subgroup A = <a,b>, or the cyclic group <b^n t>.
struct KleinWholeGroup {};
struct KleinAbelianA {};
struct KleinCyclicGen {
  KleinNF generator;
  friend bool operator==(const KleinCyclicGen&, const KleinCyclicGen&) = default;
};
using KleinCentralizer =
    std::variant<KleinWholeGroup, KleinAbelianA, KleinCyclicGen>;

KleinCentralizer knf_centralizer(const KleinNF& v);

// Membership of z in the subgroup described by knf_centralizer(v).
bool knf_centralizer_contains(const KleinCentralizer& c, const KleinNF& z);

// Conjugacy in K. Returns a conjugating element w with u = w v w^-1, or
// nullopt when u and v are not conjugate. Deterministic: ties between the
// b-power and b-power-times-t witnesses break toward the shorter one.
std::optional<KleinNF> knf_conjugate_decide(const KleinNF& u, const KleinNF& v);

// true iff v^-1 u lies in <b^2> (the conjugacy criterion for eps = 1 pairs).
bool coset_v_b2_test(const KleinNF& u, const KleinNF& v);

// Row-major 2x2 integer matrix.
struct IntMatrix2 {
  std::array<long, 4> a{1, 0, 0, 1};

  long operator()(int r, int c) const { return a[static_cast<std::size_t>(2 * r + c)]; }
  static IntMatrix2 identity() { return {}; }
  friend bool operator==(const IntMatrix2&, const IntMatrix2&) = default;
};

IntMatrix2 mat_mul(const IntMatrix2& x, const IntMatrix2& y);
long mat_det(const IntMatrix2& m);

struct Vec2 {
  long x = 0;
  long y = 0;
  friend bool operator==(const Vec2&, const Vec2&) = default;
};

Vec2 mat_apply(const IntMatrix2& m, const Vec2& v);

// Primitive eigenvectors of an integer involution (eigenvalues +1 and -1).
// lattice_index is |det [a_vec b_vec]|, 1 or 2; 2 means the eigenvectors
// span an index-2 sublattice (the swap conjugacy class).
struct Eigenbasis {
  Vec2 a_vec;  // M a_vec = a_vec
  Vec2 b_vec;  // M b_vec = -b_vec
  int lattice_index = 1;
};

class NotInvolutionError : public std::runtime_error {
 public:
  NotInvolutionError() : std::runtime_error("matrix is not an involution") {}
};
class TrivialInvolutionError : public std::runtime_error {
 public:
  TrivialInvolutionError()
      : std::runtime_error("involution is +/- identity, no eigenbasis") {}
};

Eigenbasis involution_eigenbasis(const IntMatrix2& m);

// Conversions between KleinNF and words over a three-letter alphabet read as
// (a, b, t) in order.
KleinNF klein_from_word(const Word& w);
Word klein_to_word(const KleinNF& x);

}  // namespace conj3m
