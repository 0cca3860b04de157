#include "conj3m/trimesh.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include "conj3m/errors.hpp"

namespace conj3m {

// ------------------------------------------------------------------- Perm4

std::optional<Perm4> Perm4::from_images(const std::array<int, 4>& images) {
  std::array<bool, 4> seen{false, false, false, false};
  for (int x : images) {
    if (x < 0 || x > 3 || seen[static_cast<std::size_t>(x)]) return std::nullopt;
    seen[static_cast<std::size_t>(x)] = true;
  }
  return Perm4(images[0], images[1], images[2], images[3]);
}

Perm4 Perm4::inverse() const {
  Perm4 r;
  for (int i = 0; i < 4; ++i) r.img_[static_cast<std::size_t>((*this)[i])] =
      static_cast<std::uint8_t>(i);
  return r;
}

Perm4 Perm4::after(const Perm4& f) const {
  Perm4 r;
  for (int i = 0; i < 4; ++i)
    r.img_[static_cast<std::size_t>(i)] =
        static_cast<std::uint8_t>((*this)[f[i]]);
  return r;
}

bool Perm4::even() const {
  int inversions = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if ((*this)[i] > (*this)[j]) ++inversions;
  return inversions % 2 == 0;
}

// ----------------------------------------------------------- Triangulation

Triangulation::Triangulation(int n_tets) : n_tets_(n_tets) {
  if (n_tets < 0) throw InputError("negative tetrahedron count");
  glue_.resize(static_cast<std::size_t>(n_tets));
}

const std::optional<Gluing>& Triangulation::gluing(int tet, int face) const {
  if (tet < 0 || tet >= n_tets_ || face < 0 || face > 3)
    throw InputError("face slot out of range");
  return glue_[static_cast<std::size_t>(tet)][static_cast<std::size_t>(face)];
}

void Triangulation::set_half_gluing(int tet, int face, const Gluing& g) {
  if (tet < 0 || tet >= n_tets_ || face < 0 || face > 3)
    throw InputError("face slot out of range");
  glue_[static_cast<std::size_t>(tet)][static_cast<std::size_t>(face)] = g;
}

void Triangulation::add_gluing(int tet, int face, int to_tet, int to_face,
                               const Perm4& p) {
  if (tet < 0 || tet >= n_tets_ || to_tet < 0 || to_tet >= n_tets_ ||
      face < 0 || face > 3 || to_face < 0 || to_face > 3)
    throw InputError("face slot out of range");
  if (tet == to_tet && face == to_face)
    throw InputError("a face cannot be glued to itself");
  if (p[face] != to_face)
    throw InputError("gluing permutation does not map face to target face");
  if (gluing(tet, face) || gluing(to_tet, to_face))
    throw InputError("face already glued");
  set_half_gluing(tet, face, Gluing{to_tet, to_face, p});
  set_half_gluing(to_tet, to_face, Gluing{tet, face, p.inverse()});
}

std::vector<std::string> Triangulation::validate() const {
  std::vector<std::string> bad;
  auto slot_name = [](int t, int f) {
    return std::to_string(t) + ":" + std::to_string(f);
  };
  for (int t = 0; t < n_tets_; ++t)
    for (int f = 0; f < 4; ++f) {
      const auto& g = glue_[static_cast<std::size_t>(t)][static_cast<std::size_t>(f)];
      if (!g) continue;
      if (g->to_tet < 0 || g->to_tet >= n_tets_ || g->to_face < 0 ||
          g->to_face > 3) {
        bad.push_back("gluing at " + slot_name(t, f) + " points out of range");
        continue;
      }
      if (g->to_tet == t && g->to_face == f) {
        bad.push_back("face " + slot_name(t, f) + " glued to itself");
        continue;
      }
      if (g->perm[f] != g->to_face) {
        bad.push_back("gluing at " + slot_name(t, f) +
                      " has a permutation not mapping the face");
        continue;
      }
      const auto& back = glue_[static_cast<std::size_t>(g->to_tet)]
                              [static_cast<std::size_t>(g->to_face)];
      if (!back || back->to_tet != t || back->to_face != f ||
          !(back->perm == g->perm.inverse()))
        bad.push_back("pairing at " + slot_name(t, f) + " is not involutive");
    }
  return bad;
}

bool Triangulation::connected() const {
  if (n_tets_ == 0) return true;
  std::vector<bool> seen(static_cast<std::size_t>(n_tets_), false);
  std::deque<int> queue{0};
  seen[0] = true;
  int reached = 1;
  while (!queue.empty()) {
    const int t = queue.front();
    queue.pop_front();
    for (int f = 0; f < 4; ++f) {
      const auto& g = glue_[static_cast<std::size_t>(t)][static_cast<std::size_t>(f)];
      if (g && !seen[static_cast<std::size_t>(g->to_tet)]) {
        seen[static_cast<std::size_t>(g->to_tet)] = true;
        ++reached;
        queue.push_back(g->to_tet);
      }
    }
  }
  return reached == n_tets_;
}

std::vector<FaceSlot> Triangulation::boundary_faces() const {
  std::vector<FaceSlot> out;
  for (int t = 0; t < n_tets_; ++t)
    for (int f = 0; f < 4; ++f)
      if (!glue_[static_cast<std::size_t>(t)][static_cast<std::size_t>(f)])
        out.push_back({t, f});
  return out;
}

std::vector<FaceSlot> Triangulation::gluing_pairs() const {
  std::vector<FaceSlot> out;
  for (int t = 0; t < n_tets_; ++t)
    for (int f = 0; f < 4; ++f) {
      const auto& g = glue_[static_cast<std::size_t>(t)][static_cast<std::size_t>(f)];
      if (g && FaceSlot{t, f} <= FaceSlot{g->to_tet, g->to_face})
        out.push_back({t, f});
    }
  return out;
}

// -------------------------------------------------------------- orientation

OrientabilityResult orientability(const Triangulation& t) {
  const int n = t.n_tets();
  OrientabilityResult res;
  if (n == 0) {
    res.orientable = true;
    return res;
  }
  std::vector<int> o(static_cast<std::size_t>(n), 0);
  std::vector<FaceSlot> parent_edge(static_cast<std::size_t>(n), {-1, -1});
  std::vector<int> parent(static_cast<std::size_t>(n), -1);
  o[0] = +1;
  std::deque<int> queue{0};
  int reached = 1;
  while (!queue.empty()) {
    const int i = queue.front();
    queue.pop_front();
    for (int f = 0; f < 4; ++f) {
      const auto& g = t.gluing(i, f);
      if (!g) continue;
      const int j = g->to_tet;
      const int want = Triangulation::compatibility_sign(g->perm) *
                       o[static_cast<std::size_t>(i)];
      if (o[static_cast<std::size_t>(j)] == 0) {
        o[static_cast<std::size_t>(j)] = want;
        parent[static_cast<std::size_t>(j)] = i;
        parent_edge[static_cast<std::size_t>(j)] = {i, f};
        ++reached;
        queue.push_back(j);
      } else if (o[static_cast<std::size_t>(j)] != want) {
        // odd cycle: tree path to i, this crossing, tree path from j
        res.orientable = false;
        std::vector<FaceSlot> up;
        for (int x = i; parent[static_cast<std::size_t>(x)] != -1;
             x = parent[static_cast<std::size_t>(x)])
          up.push_back(parent_edge[static_cast<std::size_t>(x)]);
        std::reverse(up.begin(), up.end());
        up.push_back({i, f});
        for (int x = j; parent[static_cast<std::size_t>(x)] != -1;
             x = parent[static_cast<std::size_t>(x)])
          up.push_back(parent_edge[static_cast<std::size_t>(x)]);
        res.witness_cycle = std::move(up);
        return res;
      }
    }
  }
  if (reached != n) throw DisconnectedError();
  res.orientable = true;
  res.orientation = std::move(o);
  return res;
}

CoverData orientation_double_cover(const Triangulation& t) {
  const int n = t.n_tets();
  Triangulation cover(2 * n);
  for (int i = 0; i < n; ++i)
    for (int f = 0; f < 4; ++f) {
      const auto& g = t.gluing(i, f);
      if (!g) continue;
      const int eps = Triangulation::compatibility_sign(g->perm);
      for (int sheet = 0; sheet < 2; ++sheet) {
        const int target_sheet = eps == +1 ? sheet : 1 - sheet;
        cover.set_half_gluing(i + sheet * n, f,
                              Gluing{g->to_tet + target_sheet * n, g->to_face,
                                     g->perm});
      }
    }
  CoverData d{std::move(cover), {}, {}};
  d.projection.resize(static_cast<std::size_t>(2 * n));
  d.deck.resize(static_cast<std::size_t>(2 * n));
  for (int i = 0; i < 2 * n; ++i) {
    d.projection[static_cast<std::size_t>(i)] = i % n;
    d.deck[static_cast<std::size_t>(i)] = i < n ? i + n : i - n;
  }
  return d;
}

Triangulation double_along_boundary(const Triangulation& t,
                                    const std::vector<FaceSlot>& faces) {
  const int n = t.n_tets();
  for (const FaceSlot& s : faces)
    if (!t.is_boundary(s.first, s.second)) throw FaceNotOnBoundaryError(s);
  Triangulation d(2 * n);
  for (int i = 0; i < n; ++i)
    for (int f = 0; f < 4; ++f) {
      const auto& g = t.gluing(i, f);
      if (!g) continue;
      d.set_half_gluing(i, f, *g);
      d.set_half_gluing(i + n, f, Gluing{g->to_tet + n, g->to_face, g->perm});
    }
  for (const FaceSlot& s : faces)
    d.add_gluing(s.first, s.second, s.first + n, s.second, Perm4());
  return d;
}

// ----------------------------------------------------------------- edge walk

namespace {

// Rotation around the edge (u,v) of `tet`, about to cross face `c`; the
// fourth vertex 6-u-v-c is the face crossed previously.
struct EdgeWalkState {
  int tet, u, v, c;
  friend bool operator==(const EdgeWalkState&, const EdgeWalkState&) = default;
};

std::optional<EdgeWalkState> walk_step(const Triangulation& t,
                                       const EdgeWalkState& s) {
  const auto& g = t.gluing(s.tet, s.c);
  if (!g) return std::nullopt;
  const int b = 6 - s.u - s.v - s.c;
  return EdgeWalkState{g->to_tet, g->perm[s.u], g->perm[s.v], g->perm[b]};
}

int edge_id(int u, int v) {
  if (u > v) std::swap(u, v);
  static constexpr int table[4][4] = {{-1, 0, 1, 2},
                                      {0, -1, 3, 4},
                                      {1, 3, -1, 5},
                                      {2, 4, 5, -1}};
  return table[u][v];
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<std::size_t>(b)] = a;
  }
  int count_classes() {
    int k = 0;
    for (std::size_t i = 0; i < parent.size(); ++i)
      if (find(static_cast<int>(i)) == static_cast<int>(i)) ++k;
    return k;
  }
};

// Partner boundary face of the edge (u,v) of boundary face `slot`, with the
// image vertices of u and v, computed by rotating through the interior.
struct BoundaryPartner {
  FaceSlot face;
  int u, v;
};

BoundaryPartner boundary_edge_partner(const Triangulation& t, FaceSlot slot,
                                      int u, int v) {
  EdgeWalkState s{slot.first, u, v, 6 - u - v - slot.second};
  for (;;) {
    const auto next = walk_step(t, s);
    if (!next) return BoundaryPartner{{s.tet, s.c}, s.u, s.v};
    s = *next;
  }
}

}  // namespace

// -------------------------------------------------------- boundary surfaces

std::vector<BoundaryComponent> boundary_components(const Triangulation& t) {
  const std::vector<FaceSlot> faces = t.boundary_faces();
  const int nf = static_cast<int>(faces.size());
  std::map<FaceSlot, int> face_index;
  for (int i = 0; i < nf; ++i) face_index[faces[static_cast<std::size_t>(i)]] = i;

  struct EdgePairing {
    int from_face, to_face;
    int u, v, pu, pv;  // edge vertices and their images
  };
  std::vector<EdgePairing> pairings;
  UnionFind comp(static_cast<std::size_t>(nf));
  UnionFind corners(static_cast<std::size_t>(nf) * 4);

  for (int i = 0; i < nf; ++i) {
    const FaceSlot slot = faces[static_cast<std::size_t>(i)];
    std::array<int, 3> verts{};
    int k = 0;
    for (int v = 0; v < 4; ++v)
      if (v != slot.second) verts[static_cast<std::size_t>(k++)] = v;
    for (int a = 0; a < 3; ++a)
      for (int b = a + 1; b < 3; ++b) {
        const int u = verts[static_cast<std::size_t>(a)];
        const int v = verts[static_cast<std::size_t>(b)];
        const BoundaryPartner p = boundary_edge_partner(t, slot, u, v);
        const int j = face_index.at(p.face);
        comp.unite(i, j);
        corners.unite(4 * i + u, 4 * j + p.u);
        corners.unite(4 * i + v, 4 * j + p.v);
        pairings.push_back({i, j, u, v, p.u, p.v});
      }
  }

  // Group faces by component.
  std::map<int, std::vector<int>> groups;
  for (int i = 0; i < nf; ++i) groups[comp.find(i)].push_back(i);

  // Orientation sign propagation across edge pairings.
  auto dir = [&](int face_idx, int u, int v) {
    const FaceSlot slot = faces[static_cast<std::size_t>(face_idx)];
    std::array<int, 3> verts{};
    int k = 0;
    for (int x = 0; x < 4; ++x)
      if (x != slot.second) verts[static_cast<std::size_t>(k++)] = x;
    int pu = -1, pv = -1;
    for (int p = 0; p < 3; ++p) {
      if (verts[static_cast<std::size_t>(p)] == u) pu = p;
      if (verts[static_cast<std::size_t>(p)] == v) pv = p;
    }
    return (pv - pu + 3) % 3 == 1 ? +1 : -1;
  };

  std::vector<std::vector<std::pair<int, int>>> adj(
      static_cast<std::size_t>(nf));  // (other face, required sign product)
  for (const EdgePairing& e : pairings) {
    const int s = -dir(e.from_face, e.u, e.v) * dir(e.to_face, e.pu, e.pv);
    adj[static_cast<std::size_t>(e.from_face)].push_back({e.to_face, s});
  }

  std::vector<BoundaryComponent> out;
  for (auto& [root, members] : groups) {
    BoundaryComponent bc;
    for (int i : members) bc.faces.push_back(faces[static_cast<std::size_t>(i)]);
    std::sort(bc.faces.begin(), bc.faces.end());

    const long F = static_cast<long>(members.size());
    const long E = 3 * F / 2;
    std::set<int> vclasses;
    for (int i : members) {
      const FaceSlot slot = faces[static_cast<std::size_t>(i)];
      for (int v = 0; v < 4; ++v)
        if (v != slot.second) vclasses.insert(corners.find(4 * i + v));
    }
    bc.euler = static_cast<long>(vclasses.size()) - E + F;

    // sign BFS within the component
    std::map<int, int> sign;
    sign[members.front()] = +1;
    std::deque<int> queue{members.front()};
    bc.orientable = true;
    while (!queue.empty() && bc.orientable) {
      const int i = queue.front();
      queue.pop_front();
      for (const auto& [j, s] : adj[static_cast<std::size_t>(i)]) {
        const int want = s * sign.at(i);
        auto it = sign.find(j);
        if (it == sign.end()) {
          sign[j] = want;
          queue.push_back(j);
        } else if (it->second != want) {
          bc.orientable = false;
          break;
        }
      }
    }
    out.push_back(std::move(bc));
  }
  std::sort(out.begin(), out.end(),
            [](const BoundaryComponent& a, const BoundaryComponent& b) {
              return a.faces.front() < b.faces.front();
            });
  return out;
}

Triangulation cap_spherical_boundaries(const Triangulation& t) {
  const std::vector<BoundaryComponent> comps = boundary_components(t);
  std::vector<const BoundaryComponent*> spheres;
  for (const auto& c : comps)
    if (c.euler == 2) spheres.push_back(&c);

  int total_new = 0;
  for (const auto* c : spheres) total_new += static_cast<int>(c->faces.size());
  const int n = t.n_tets();
  Triangulation r(n + total_new);
  for (int i = 0; i < n; ++i)
    for (int f = 0; f < 4; ++f) {
      const auto& g = t.gluing(i, f);
      if (g) r.set_half_gluing(i, f, *g);
    }

  int next_tet = n;
  for (const auto* c : spheres) {
    std::map<FaceSlot, int> cone;  // boundary face -> cone tet
    for (const FaceSlot& s : c->faces) cone[s] = next_tet++;

    auto corner_positions = [&](const FaceSlot& s) {
      std::array<int, 3> verts{};
      int k = 0;
      for (int v = 0; v < 4; ++v)
        if (v != s.second) verts[static_cast<std::size_t>(k++)] = v;
      return verts;
    };
    auto position_of = [&](const std::array<int, 3>& verts, int v) {
      for (int p = 0; p < 3; ++p)
        if (verts[static_cast<std::size_t>(p)] == v) return p;
      throw PreconditionError("vertex not on boundary face");
    };

    for (const FaceSlot& s : c->faces) {
      // base: cone face 3 onto the boundary triangle, ascending corners
      const auto verts = corner_positions(s);
      Perm4 base(verts[0], verts[1], verts[2], s.second);
      r.add_gluing(cone.at(s), 3, s.first, s.second, base);

      // sides, once per unordered edge pairing
      for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b) {
          const int u = verts[static_cast<std::size_t>(a)];
          const int v = verts[static_cast<std::size_t>(b)];
          const BoundaryPartner p = boundary_edge_partner(t, s, u, v);
          const auto key_here = std::make_tuple(s, std::min(u, v), std::max(u, v));
          const auto key_there = std::make_tuple(
              p.face, std::min(p.u, p.v), std::max(p.u, p.v));
          if (key_there < key_here) continue;  // partner side installs it
          if (key_here == key_there)
            throw PreconditionError("boundary edge identified with itself");
          const auto verts2 = corner_positions(p.face);
          const int pu = a, pv = b;
          const int qu = position_of(verts2, p.u);
          const int qv = position_of(verts2, p.v);
          const int gamma = 3 - pu - pv;
          const int gamma2 = 3 - qu - qv;
          std::array<int, 4> img{};
          img[static_cast<std::size_t>(pu)] = qu;
          img[static_cast<std::size_t>(pv)] = qv;
          img[static_cast<std::size_t>(gamma)] = gamma2;
          img[3] = 3;
          const auto perm = Perm4::from_images(img);
          if (!perm) throw PreconditionError("degenerate side gluing");
          r.add_gluing(cone.at(s), gamma, cone.at(p.face), gamma2, *perm);
        }
    }
  }
  return r;
}

// ------------------------------------------------------------------- euler

long euler_characteristic(const Triangulation& t) {
  const int n = t.n_tets();
  UnionFind vertices(static_cast<std::size_t>(4 * n));
  UnionFind edges(static_cast<std::size_t>(6 * n));
  long pairs = 0;
  for (int i = 0; i < n; ++i)
    for (int f = 0; f < 4; ++f) {
      const auto& g = t.gluing(i, f);
      if (!g) continue;
      if (FaceSlot{i, f} <= FaceSlot{g->to_tet, g->to_face}) ++pairs;
      std::array<int, 3> verts{};
      int k = 0;
      for (int v = 0; v < 4; ++v)
        if (v != f) verts[static_cast<std::size_t>(k++)] = v;
      for (int v : verts)
        vertices.unite(4 * i + v, 4 * g->to_tet + g->perm[v]);
      for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b) {
          const int u = verts[static_cast<std::size_t>(a)];
          const int v = verts[static_cast<std::size_t>(b)];
          edges.unite(6 * i + edge_id(u, v),
                      6 * g->to_tet + edge_id(g->perm[u], g->perm[v]));
        }
    }
  const long V = vertices.count_classes();
  const long E = edges.count_classes();
  const long F = 4L * n - pairs;
  return V - E + F - n;
}

// ---------------------------------------------------------------------- pi1

Pi1Result pi1_presentation(const Triangulation& t) {
  const int n = t.n_tets();
  if (n == 0)
    return Pi1Result{FinitePresentation{},
                     OrientationCharacter(Alphabet{}, {}),
                     {}};

  // spanning tree + accumulated compatibility signs
  std::vector<int> sigma(static_cast<std::size_t>(n), 0);
  std::set<FaceSlot> tree;  // canonical halves of tree gluings
  sigma[0] = +1;
  std::deque<int> queue{0};
  int reached = 1;
  while (!queue.empty()) {
    const int i = queue.front();
    queue.pop_front();
    for (int f = 0; f < 4; ++f) {
      const auto& g = t.gluing(i, f);
      if (!g || sigma[static_cast<std::size_t>(g->to_tet)] != 0) continue;
      sigma[static_cast<std::size_t>(g->to_tet)] =
          Triangulation::compatibility_sign(g->perm) *
          sigma[static_cast<std::size_t>(i)];
      tree.insert(std::min(FaceSlot{i, f}, FaceSlot{g->to_tet, g->to_face}));
      ++reached;
      queue.push_back(g->to_tet);
    }
  }
  if (reached != n) throw DisconnectedError();

  // generators: non-tree pairs in canonical order
  std::map<FaceSlot, int> gen_of_pair;
  std::vector<FaceSlot> gen_pairs;
  for (const FaceSlot& p : t.gluing_pairs())
    if (!tree.contains(p)) {
      gen_of_pair[p] = static_cast<int>(gen_pairs.size());
      gen_pairs.push_back(p);
    }

  Alphabet alphabet;
  for (std::size_t i = 0; i < gen_pairs.size(); ++i)
    alphabet.add("g" + std::to_string(i));

  // relators: walk around each interior edge, reading non-tree crossings
  std::vector<Word> relators;
  std::vector<std::vector<bool>> visited(
      static_cast<std::size_t>(n), std::vector<bool>(6, false));
  auto mark = [&](const EdgeWalkState& s) {
    visited[static_cast<std::size_t>(s.tet)]
           [static_cast<std::size_t>(edge_id(s.u, s.v))] = true;
  };
  auto letter_of_crossing = [&](const EdgeWalkState& s) -> std::optional<Letter> {
    const auto& g = t.gluing(s.tet, s.c);
    const FaceSlot here{s.tet, s.c};
    const FaceSlot there{g->to_tet, g->to_face};
    const FaceSlot canon = std::min(here, there);
    const auto it = gen_of_pair.find(canon);
    if (it == gen_of_pair.end()) return std::nullopt;  // tree crossing
    return Letter{it->second, static_cast<std::int8_t>(here == canon ? 1 : -1)};
  };

  for (int tet = 0; tet < n; ++tet)
    for (int u = 0; u < 4; ++u)
      for (int v = u + 1; v < 4; ++v) {
        if (visited[static_cast<std::size_t>(tet)]
                   [static_cast<std::size_t>(edge_id(u, v))])
          continue;
        // pick one of the two faces containing the edge as crossing face
        int c = 0;
        while (c == u || c == v) ++c;
        const EdgeWalkState start{tet, u, v, c};
        EdgeWalkState s = start;
        Word relator;
        bool closed = false;
        for (;;) {
          mark(s);
          const auto next = walk_step(t, s);
          if (!next) break;  // boundary edge
          const auto l = letter_of_crossing(s);
          if (l) relator.letters.push_back(*l);
          s = *next;
          if (s == start) {
            closed = true;
            break;
          }
        }
        if (closed) {
          const Word r = free_reduce(relator);
          if (!r.empty()) relators.push_back(r);
        } else {
          // walk the other way to mark the rest of the class
          EdgeWalkState back{start.tet, start.u, start.v,
                             6 - start.u - start.v - start.c};
          for (;;) {
            mark(back);
            const auto next = walk_step(t, back);
            if (!next) break;
            back = *next;
          }
        }
      }

  std::vector<int> signs;
  for (const FaceSlot& p : gen_pairs) {
    const auto& g = t.gluing(p.first, p.second);
    signs.push_back(sigma[static_cast<std::size_t>(p.first)] *
                    Triangulation::compatibility_sign(g->perm) *
                    sigma[static_cast<std::size_t>(g->to_tet)]);
  }

  FinitePresentation pres{alphabet, std::move(relators)};
  OrientationCharacter chi =
      OrientationCharacter::for_presentation(pres, std::move(signs));
  return Pi1Result{std::move(pres), std::move(chi), std::move(gen_pairs)};
}

}  // namespace conj3m
