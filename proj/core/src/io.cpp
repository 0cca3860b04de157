#include "conj3m/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "conj3m/backends.hpp"
#include "conj3m/freeprod.hpp"

namespace conj3m::io {

using nlohmann::ordered_json;

namespace {

ordered_json parse_json(const std::string& text) {
  ordered_json j = ordered_json::parse(text, nullptr, false);
  if (j.is_discarded()) throw InputError("malformed JSON");
  return j;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open file: " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

GroupFile group_from_json(const ordered_json& j) {
  GroupFile f;
  if (!j.is_object()) throw InputError("group file must be a JSON object");
  if (!j.contains("generators") || !j["generators"].is_array())
    throw InputError("group file needs a \"generators\" array");
  for (const auto& g : j["generators"]) {
    if (!g.is_string()) throw InputError("generator names must be strings");
    f.presentation.alphabet.add(g.get<std::string>());
  }
  if (j.contains("relators")) {
    for (const auto& r : j["relators"])
      f.presentation.relators.push_back(
          parse_word(f.presentation.alphabet, r.get<std::string>()));
  }
  f.backend_kind = j.value("backend", std::string("free"));

  if (j.contains("character")) {
    const auto& c = j["character"];
    std::vector<int> signs(static_cast<std::size_t>(f.presentation.alphabet.size()), 0);
    for (auto it = c.begin(); it != c.end(); ++it) {
      const auto idx = f.presentation.alphabet.index(it.key());
      if (!idx) throw InputError("character names unknown generator: " + it.key());
      const int s = it.value().get<int>();
      signs[static_cast<std::size_t>(*idx)] = s;
    }
    for (int s : signs)
      if (s == 0)
        throw InputError("character must assign +1 or -1 to every generator");
    f.character = OrientationCharacter::for_presentation(f.presentation,
                                                         std::move(signs));
  }
  if (j.contains("order2_reps")) {
    f.order2_reps.emplace();
    for (const auto& w : j["order2_reps"])
      f.order2_reps->push_back(
          parse_word(f.presentation.alphabet, w.get<std::string>()));
  }
  if (j.contains("pipeline_hints"))
    f.h_abelian_hint = j["pipeline_hints"].value("h_abelian", false);

  if (j.contains("table"))
    f.table = j["table"].get<std::vector<std::vector<int>>>();
  if (j.contains("generator_elements"))
    f.generator_elements = j["generator_elements"].get<std::vector<int>>();
  if (j.contains("order")) {
    for (const auto& name : j["order"]) {
      const auto idx = f.presentation.alphabet.index(name.get<std::string>());
      if (!idx) throw InputError("rewriting order names unknown generator");
      f.rewriting_order.push_back(*idx);
    }
  }
  f.kb_budget = j.value("kb_budget", 5000L);
  f.conjugacy_budget = j.value("conjugacy_budget", 10000L);
  if (j.contains("factors"))
    for (const auto& sub : j["factors"]) f.factors.push_back(group_from_json(sub));
  return f;
}

}  // namespace

GroupFile parse_group_file(const std::string& json_text) {
  return group_from_json(parse_json(json_text));
}

GroupFile load_group_file(const std::string& path) {
  return parse_group_file(slurp(path));
}

BackendPtr make_backend(const GroupFile& file) {
  const std::string& kind = file.backend_kind;
  if (kind == "free")
    return std::make_shared<FreeBackend>(file.presentation.alphabet);
  if (kind == "free_abelian")
    return std::make_shared<FreeAbelianBackend>(file.presentation.alphabet);
  if (kind == "finite_table")
    return std::make_shared<FiniteTableBackend>(
        file.presentation.alphabet, file.table, file.generator_elements);
  if (kind == "klein")
    return std::make_shared<KleinBackend>(file.presentation.alphabet);
  if (kind == "rewriting")
    return std::make_shared<RewritingBackend>(file.presentation, file.kb_budget,
                                              file.conjugacy_budget,
                                              file.rewriting_order);
  if (kind == "free_product") {
    std::vector<BackendPtr> factors;
    std::vector<std::string> names;
    for (const GroupFile& sub : file.factors) {
      factors.push_back(make_backend(sub));
      for (const std::string& n : sub.presentation.alphabet.names())
        names.push_back(n);
    }
    if (names != file.presentation.alphabet.names())
      throw InputError(
          "free_product generators must list the factor generators in order");
    return std::make_shared<FreeProductBackend>(std::move(factors));
  }
  throw InputError("unknown backend kind: " + kind);
}

namespace {

PipelineContext context_for_free(const GroupFile& file) {
  auto g_wp = std::make_shared<FreeBackend>(file.presentation.alphabet);
  auto h_cp = std::make_shared<FreeKernelBackend>(*file.character);
  PipelineContext ctx = PipelineContext::make(file.presentation,
                                              *file.character, h_cp, g_wp);
  const OrientationCharacter chi = *file.character;
  ctx.h_centralizer = [chi](const Word& w) -> std::optional<CentralizerClass> {
    if (free_reduce(w).empty()) return std::nullopt;
    const Word root = free_primitive_root(w);
    if (chi.sign_of(root) == -1)
      return CentralizerClass{
          CyclicCentralizer{free_reduce(concat(root, root))}};
    return CentralizerClass{CyclicCentralizer{root}};
  };
  return ctx;
}

PipelineContext context_for_klein(const GroupFile& file) {
  const OrientationCharacter& chi = *file.character;
  if (chi.sign_of_generator(0) != +1 || chi.sign_of_generator(1) != +1 ||
      chi.sign_of_generator(2) != -1)
    throw InputError(
        "klein pipeline needs the character (+1, +1, -1) on (a, b, t)");
  auto g_wp = std::make_shared<KleinBackend>(file.presentation.alphabet);
  auto h_cp = std::make_shared<AbelianSubgroupConjugacy>(g_wp);
  PipelineContext ctx =
      PipelineContext::make(file.presentation, chi, h_cp, g_wp);
  ctx.h_centralizer = [](const Word& w) -> std::optional<CentralizerClass> {
    const KleinNF nf = klein_from_word(w);
    if (nf == KleinNF::identity() || nf.eps != 0) return std::nullopt;
    // H = <a,b> is abelian: the H-centralizer of any H-element is all of H
    return CentralizerClass{
        RankTwoCentralizer{Word::generator(0), Word::generator(1)}};
  };
  ctx.zz = ZZCoordinates{
      Word::generator(0), Word::generator(1),
      [](const Word& w) -> std::optional<std::array<long, 2>> {
        const KleinNF nf = klein_from_word(w);
        if (nf.eps != 0) return std::nullopt;
        return std::array<long, 2>{nf.m, nf.n};
      }};
  return ctx;
}

PipelineContext context_for_free_abelian(const GroupFile& file) {
  if (file.presentation.alphabet.size() != 2)
    throw InputError("free_abelian pipeline assembly supports rank 2 only");
  const OrientationCharacter chi = *file.character;
  auto g_wp = std::make_shared<FreeAbelianBackend>(file.presentation.alphabet);
  auto h_cp = std::make_shared<AbelianSubgroupConjugacy>(g_wp);
  PipelineContext ctx =
      PipelineContext::make(file.presentation, chi, h_cp, g_wp);

  // Basis of ker(chi) in Z^2 and coordinates by solving the 2x2 system.
  const int s0 = chi.sign_of_generator(0);
  const int s1 = chi.sign_of_generator(1);
  Word e0, e1;
  long b00, b01, b10, b11;  // basis columns in generator exponents
  if (s0 == -1 && s1 == +1) {
    e0 = Word::power(0, 2), e1 = Word::generator(1);
    b00 = 2, b10 = 0, b01 = 0, b11 = 1;
  } else if (s0 == +1 && s1 == -1) {
    e0 = Word::generator(0), e1 = Word::power(1, 2);
    b00 = 1, b10 = 0, b01 = 0, b11 = 2;
  } else {
    e0 = Word::power(0, 2);
    e1 = free_reduce(concat(Word::generator(0), Word::generator(1)));
    b00 = 2, b10 = 0, b01 = 1, b11 = 1;
  }
  ctx.h_centralizer = [g_wp, e0, e1](const Word& w)
      -> std::optional<CentralizerClass> {
    if (g_wp->is_identity(w)) return std::nullopt;
    return CentralizerClass{RankTwoCentralizer{e0, e1}};
  };
  const long det = b00 * b11 - b01 * b10;
  ctx.zz = ZZCoordinates{
      e0, e1,
      [g_wp, b00, b01, b10, b11, det](const Word& w)
          -> std::optional<std::array<long, 2>> {
        const auto e = g_wp->exponents(w);
        const long x = (b11 * e[0] - b01 * e[1]);
        const long y = (-b10 * e[0] + b00 * e[1]);
        if (x % det != 0 || y % det != 0) return std::nullopt;
        return std::array<long, 2>{x / det, y / det};
      }};
  return ctx;
}

PipelineContext context_for_finite_table(const GroupFile& file) {
  const OrientationCharacter chi = *file.character;
  auto g_wp = std::make_shared<FiniteTableBackend>(
      file.presentation.alphabet, file.table, file.generator_elements);
  // H-conjugacy: restrict conjugators to the +1-sign elements
  std::vector<int> domain;
  for (int x = 0; x < g_wp->order(); ++x)
    if (chi.sign_of(g_wp->element_word(x)) == +1) domain.push_back(x);
  auto h_cp = std::make_shared<FiniteTableBackend>(
      file.presentation.alphabet, file.table, file.generator_elements, domain);
  return PipelineContext::make(file.presentation, chi, h_cp, g_wp);
}

PipelineContext context_for_free_product(const GroupFile& file) {
  if (!file.h_abelian_hint)
    throw InputError(
        "free_product pipeline assembly needs pipeline_hints.h_abelian");
  auto backend = std::dynamic_pointer_cast<const FreeProductBackend>(
      make_backend(file));
  auto h_cp = std::make_shared<AbelianSubgroupConjugacy>(backend);
  return PipelineContext::make(file.presentation, *file.character, h_cp,
                               backend);
}

}  // namespace

PipelineContext make_pipeline_context(const GroupFile& file) {
  if (!file.character)
    throw InputError("pipeline assembly needs a character in the group file");
  PipelineContext ctx = [&] {
    if (file.backend_kind == "free") return context_for_free(file);
    if (file.backend_kind == "klein") return context_for_klein(file);
    if (file.backend_kind == "free_abelian")
      return context_for_free_abelian(file);
    if (file.backend_kind == "finite_table")
      return context_for_finite_table(file);
    if (file.backend_kind == "free_product")
      return context_for_free_product(file);
    throw InputError("no pipeline assembly for backend kind: " +
                     file.backend_kind);
  }();
  if (file.order2_reps) ctx.order2_reps = Order2Reps{*file.order2_reps};
  return ctx;
}

Triangulation parse_triangulation(const std::string& json_text) {
  const ordered_json j = parse_json(json_text);
  if (!j.is_object() || !j.contains("tets"))
    throw InputError("triangulation file needs a \"tets\" count");
  Triangulation t(j["tets"].get<int>());
  if (!j.contains("gluings")) return t;
  for (const auto& g : j["gluings"]) {
    const int tet = g.at("tet").get<int>();
    const int face = g.at("face").get<int>();
    const int to_tet = g.at("to_tet").get<int>();
    const int to_face = g.at("to_face").get<int>();
    const auto vmap = g.at("vmap").get<std::vector<int>>();
    if (vmap.size() != 3) throw InputError("vmap must list three vertices");
    if (face < 0 || face > 3 || to_face < 0 || to_face > 3)
      throw InputError("face index out of range");
    std::array<int, 4> img{};
    int k = 0;
    for (int v = 0; v < 4; ++v)
      if (v != face) img[static_cast<std::size_t>(v)] = vmap[static_cast<std::size_t>(k++)];
    img[static_cast<std::size_t>(face)] = to_face;
    const auto perm = Perm4::from_images(img);
    if (!perm) throw InputError("vmap is not a vertex bijection");
    // tolerate files listing both halves, as long as they agree
    if (tet >= 0 && tet < t.n_tets() && !t.is_boundary(tet, face)) {
      const auto& existing = t.gluing(tet, face);
      if (existing->to_tet == to_tet && existing->to_face == to_face &&
          existing->perm == *perm)
        continue;
      throw InputError("conflicting gluings for one face");
    }
    t.add_gluing(tet, face, to_tet, to_face, *perm);
  }
  return t;
}

Triangulation load_triangulation(const std::string& path) {
  return parse_triangulation(slurp(path));
}

std::string serialize_triangulation(const Triangulation& t) {
  ordered_json j;
  j["tets"] = t.n_tets();
  j["gluings"] = ordered_json::array();
  for (const FaceSlot& s : t.gluing_pairs()) {
    const auto& g = t.gluing(s.first, s.second);
    ordered_json rec;
    rec["tet"] = s.first;
    rec["face"] = s.second;
    rec["to_tet"] = g->to_tet;
    rec["to_face"] = g->to_face;
    std::vector<int> vmap;
    for (int v = 0; v < 4; ++v)
      if (v != s.second) vmap.push_back(g->perm[v]);
    rec["vmap"] = vmap;
    j["gluings"].push_back(rec);
  }
  return j.dump(2);
}

}  // namespace conj3m::io
