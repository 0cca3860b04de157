#pragma once

#include <array>
#include <span>
#include <vector>

#include "conj3m/word.hpp"

namespace conj3m {

// Stallings subgroup graph for a finitely generated subgroup of a free
// group. Built by wedging loops at a base vertex and folding.
class SubgroupGraph {
 public:
  SubgroupGraph(int n_generators, std::span<const Word> generators);

  // true iff w lies in the subgroup (the path for w exists and closes up at
  // the base vertex).
  bool contains(const Word& w) const;

 private:
  int find(int v) const;
  void unite(int a, int b);

  int n_symbols_;
  mutable std::vector<int> parent_;
  // out_[v][sym] = target vertex or -1; sym = 2*gen + (sign<0)
  std::vector<std::vector<int>> out_;
};

// Membership of g in <generators> inside the free group on n_generators.
bool free_subgroup_membership(int n_generators,
                              std::span<const Word> generators, const Word& g);

}  // namespace conj3m
