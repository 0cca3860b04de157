#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "conj3m/backend.hpp"
#include "conj3m/index2.hpp"
#include "conj3m/pipeline.hpp"
#include "conj3m/presentation.hpp"
#include "conj3m/trimesh.hpp"

namespace conj3m::io {

// A parsed group file: presentation, backend descriptor and optional
// pipeline extras.
struct GroupFile {
  FinitePresentation presentation;
  std::string backend_kind;
  std::optional<OrientationCharacter> character;
  std::optional<std::vector<Word>> order2_reps;
  bool h_abelian_hint = false;  // H = ker(chi) is abelian (free products)
  // backend payloads
  std::vector<std::vector<int>> table;
  std::vector<int> generator_elements;
  std::vector<int> rewriting_order;
  long kb_budget = 5000;
  long conjugacy_budget = 10000;
  std::vector<GroupFile> factors;  // free products
};

GroupFile parse_group_file(const std::string& json_text);
GroupFile load_group_file(const std::string& path);

BackendPtr make_backend(const GroupFile& file);

// Assemble the decide_conjugacy context for the backend kinds that carry
// enough structure (free, klein, free_abelian of rank 2, finite_table, and
// free products with an abelian kernel hint). Throws InputError otherwise.
PipelineContext make_pipeline_context(const GroupFile& file);

Triangulation parse_triangulation(const std::string& json_text);
Triangulation load_triangulation(const std::string& path);
std::string serialize_triangulation(const Triangulation& t);

}  // namespace conj3m::io
