#include "conj3m/klein.hpp"

#include <cstdlib>
#include <numeric>

#include "conj3m/errors.hpp"

namespace conj3m {

KleinNF knf_multiply(const KleinNF& x, const KleinNF& y) {
  KleinNF r;
  r.m = x.m + y.m + ((x.eps == 1 && y.eps == 1) ? 1 : 0);
  r.n = x.n + (x.eps == 1 ? -y.n : y.n);
  r.eps = x.eps ^ y.eps;
  return r;
}

KleinNF knf_invert(const KleinNF& x) {
  if (x.eps == 0) return KleinNF{-x.m, -x.n, 0};
  return KleinNF{-x.m - 1, x.n, 1};
}

KleinNF knf_power(const KleinNF& x, long k) {
  if (k < 0) return knf_power(knf_invert(x), -k);
  KleinNF r = KleinNF::identity();
  for (long i = 0; i < k; ++i) r = knf_multiply(r, x);
  return r;
}

KleinCentralizer knf_centralizer(const KleinNF& v) {
  if (v.eps == 0) {
    if (v.n == 0) return KleinWholeGroup{};  // powers of a are central
    return KleinAbelianA{};
  }
  return KleinCyclicGen{KleinNF{0, v.n, 1}};  // <b^n t>
}

bool knf_centralizer_contains(const KleinCentralizer& c, const KleinNF& z) {
  if (std::holds_alternative<KleinWholeGroup>(c)) return true;
  if (std::holds_alternative<KleinAbelianA>(c)) return z.eps == 0;
  const KleinNF g = std::get<KleinCyclicGen>(c).generator;
  // <b^n t> = {(k,0,0)} u {(k,n,1)}, k in Z  (the square of b^n t is a)
  if (z.eps == 0) return z.n == 0;
  return z.n == g.n;
}

std::optional<KleinNF> knf_conjugate_decide(const KleinNF& u, const KleinNF& v) {
  if (u.eps != v.eps) return std::nullopt;
  if (u.eps == 0) {
    // conjugates of (m,n,0) are (m,n,0) and (m,-n,0); t negates the
    // b-exponent
    if (u.m != v.m) return std::nullopt;
    if (u.n == v.n) return KleinNF::identity();
    if (u.n == -v.n) return KleinNF::t();
    return std::nullopt;
  }
  // eps = 1: equal a-exponents and b-exponents congruent mod 2;
  // b^k v b^-k = (m, n+2k, 1) and t v t^-1 = (m, -n, 1).
  if (u.m != v.m) return std::nullopt;
  if (((u.n - v.n) % 2 + 2) % 2 != 0) return std::nullopt;
  const long k_plain = (u.n - v.n) / 2;   // pure b-power
  const long k_via_t = (u.n + v.n) / 2;   // b-power after t
  const KleinNF plain = KleinNF::b(k_plain);
  const KleinNF via_t = knf_multiply(KleinNF::b(k_via_t), KleinNF::t());
  const long cost_plain = std::labs(k_plain);
  const long cost_via_t = std::labs(k_via_t) + 1;
  return cost_via_t < cost_plain ? via_t : plain;
}

bool coset_v_b2_test(const KleinNF& u, const KleinNF& v) {
  const KleinNF d = knf_multiply(knf_invert(v), u);
  return d.m == 0 && d.eps == 0 && d.n % 2 == 0;
}

IntMatrix2 mat_mul(const IntMatrix2& x, const IntMatrix2& y) {
  IntMatrix2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      r.a[static_cast<std::size_t>(2 * i + j)] =
          x(i, 0) * y(0, j) + x(i, 1) * y(1, j);
  return r;
}

long mat_det(const IntMatrix2& m) { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); }

Vec2 mat_apply(const IntMatrix2& m, const Vec2& v) {
  return Vec2{m(0, 0) * v.x + m(0, 1) * v.y, m(1, 0) * v.x + m(1, 1) * v.y};
}

namespace {

Vec2 primitive(Vec2 v) {
  long g = std::gcd(std::labs(v.x), std::labs(v.y));
  if (g > 1) {
    v.x /= g;
    v.y /= g;
  }
  if (v.x < 0 || (v.x == 0 && v.y < 0)) {
    v.x = -v.x;
    v.y = -v.y;
  }
  return v;
}

// Nonzero primitive kernel vector of a rank-1 integer 2x2 matrix.
Vec2 kernel_vector(long p, long q, long r, long s) {
  if (p != 0 || q != 0) return primitive(Vec2{q, -p});
  return primitive(Vec2{s, -r});
}

}  // namespace

Eigenbasis involution_eigenbasis(const IntMatrix2& m) {
  if (mat_mul(m, m) != IntMatrix2::identity()) throw NotInvolutionError();
  IntMatrix2 minus;
  minus.a = {-1, 0, 0, -1};
  if (m == IntMatrix2::identity() || m == minus) throw TrivialInvolutionError();

  Eigenbasis e;
  // ker(M - I) and ker(M + I); both have rank 1 for a nontrivial involution.
  e.a_vec = kernel_vector(m(0, 0) - 1, m(0, 1), m(1, 0), m(1, 1) - 1);
  e.b_vec = kernel_vector(m(0, 0) + 1, m(0, 1), m(1, 0), m(1, 1) + 1);
  const long det = e.a_vec.x * e.b_vec.y - e.a_vec.y * e.b_vec.x;
  e.lattice_index = static_cast<int>(std::labs(det));
  return e;
}

KleinNF klein_from_word(const Word& w) {
  KleinNF r = KleinNF::identity();
  for (const Letter& l : w.letters) {
    KleinNF g;
    switch (l.gen) {
      case 0: g = KleinNF::a(); break;
      case 1: g = KleinNF::b(); break;
      case 2: g = KleinNF::t(); break;
      default:
        throw UnsupportedWordError("klein words use exactly three generators");
    }
    if (l.sign < 0) g = knf_invert(g);
    r = knf_multiply(r, g);
  }
  return r;
}

Word klein_to_word(const KleinNF& x) {
  Word w = Word::power(0, x.m);
  w = concat(w, Word::power(1, x.n));
  if (x.eps == 1) w = concat(w, Word::generator(2));
  return w;
}

}  // namespace conj3m
