#include "conj3m/folding.hpp"

namespace conj3m {

namespace {
int sym_of(const Letter& l) { return 2 * l.gen + (l.sign < 0 ? 1 : 0); }
int sym_inv(int s) { return s ^ 1; }
}  // namespace

SubgroupGraph::SubgroupGraph(int n_generators,
                             std::span<const Word> generators)
    : n_symbols_(2 * n_generators) {
  // Wedge of loops at the base vertex; edges kept as a raw list until folded.
  std::vector<std::array<int, 3>> edges;  // (from, sym, to)
  auto new_vertex = [&] {
    parent_.push_back(static_cast<int>(parent_.size()));
    return static_cast<int>(parent_.size()) - 1;
  };
  const int base = new_vertex();
  for (const Word& g : generators) {
    const Word w = free_reduce(g);
    int cur = base;
    for (std::size_t i = 0; i < w.size(); ++i) {
      const int to = (i + 1 == w.size()) ? base : new_vertex();
      edges.push_back({cur, sym_of(w.letters[i]), to});
      cur = to;
    }
  }

  // Fold: merge targets of equally labelled edges out of one vertex class
  // until stable, then freeze a deterministic transition table.
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<std::vector<int>> slot(
        parent_.size(), std::vector<int>(static_cast<std::size_t>(n_symbols_), -1));
    auto visit = [&](int from, int s, int to) {
      const int rf = find(from);
      const int rt = find(to);
      int& cell = slot[static_cast<std::size_t>(rf)][static_cast<std::size_t>(s)];
      if (cell == -1) {
        cell = rt;
      } else if (find(cell) != rt) {
        unite(cell, rt);
        changed = true;
      }
    };
    for (const auto& e : edges) {
      visit(e[0], e[1], e[2]);
      visit(e[2], sym_inv(e[1]), e[0]);
    }
    if (!changed) {
      out_ = std::move(slot);
      for (auto& row : out_)
        for (auto& to : row)
          if (to != -1) to = find(to);
    }
  }
}

int SubgroupGraph::find(int v) const {
  while (parent_[static_cast<std::size_t>(v)] != v) {
    parent_[static_cast<std::size_t>(v)] =
        parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(v)])];
    v = parent_[static_cast<std::size_t>(v)];
  }
  return v;
}

void SubgroupGraph::unite(int a, int b) {
  a = find(a);
  b = find(b);
  if (a != b) parent_[static_cast<std::size_t>(b)] = a;
}

bool SubgroupGraph::contains(const Word& g) const {
  const Word w = free_reduce(g);
  int cur = find(0);
  for (const Letter& l : w.letters) {
    const int to = out_[static_cast<std::size_t>(cur)]
                       [static_cast<std::size_t>(sym_of(l))];
    if (to == -1) return false;
    cur = find(to);
  }
  return cur == find(0);
}

bool free_subgroup_membership(int n_generators,
                              std::span<const Word> generators,
                              const Word& g) {
  return SubgroupGraph(n_generators, generators).contains(g);
}

}  // namespace conj3m
