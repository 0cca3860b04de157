#pragma once

#include <optional>
#include <vector>

#include "conj3m/presentation.hpp"
#include "conj3m/word.hpp"

namespace conj3m {

// Symbol strings over the doubled alphabet: symbol 2k is generator k, symbol
// 2k+1 is its inverse, ranked in a user-supplied generator order.
using SymWord = std::vector<int>;

struct RewriteRule {
  SymWord lhs;
  SymWord rhs;  // shortlex-smaller than lhs
};

// A shortlex string rewriting system for a group presentation. When the
// confluent flag is set, every critical pair resolved during completion.
class RewritingSystem {
 public:
  RewritingSystem(int n_generators, std::vector<int> generator_order,
                  std::vector<RewriteRule> rules, bool confluent);

  const std::vector<RewriteRule>& rules() const { return rules_; }
  bool confluent() const { return confluent_; }

  SymWord reduce(SymWord w) const;
  bool shortlex_less(const SymWord& a, const SymWord& b) const;

  SymWord to_symbols(const Word& w) const;
  Word to_word(const SymWord& s) const;

  // Recheck local confluence on all critical pairs of the current rules.
  bool verify_local_confluence() const;

 private:
  friend class KnuthBendix;
  int rank(int sym) const;

  int n_generators_;
  std::vector<int> order_;      // order_[k] = rank position of generator k
  std::vector<RewriteRule> rules_;
  bool confluent_ = false;
};

struct KBOutcome {
  std::optional<RewritingSystem> system;  // nullopt: budget exhausted
  long equations_processed = 0;
};

// Knuth-Bendix completion under shortlex with the given generator order
// (defaults to alphabet order). The budget counts processed equations.
KBOutcome kb_complete(const FinitePresentation& presentation, long budget,
                      const std::vector<int>& generator_order = {});

}  // namespace conj3m
