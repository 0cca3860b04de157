#include "conj3m/rewriting.hpp"

#include <algorithm>
#include <deque>

#include "conj3m/errors.hpp"

namespace conj3m {

namespace {

int sym_of(const Letter& l) { return 2 * l.gen + (l.sign < 0 ? 1 : 0); }
int sym_inv(int s) { return s ^ 1; }

// Leftmost occurrence of pat in w at or after `from`, or npos.
std::size_t find_sub(const SymWord& w, const SymWord& pat, std::size_t from) {
  if (pat.empty() || pat.size() > w.size()) return std::string::npos;
  for (std::size_t i = from; i + pat.size() <= w.size(); ++i) {
    bool hit = true;
    for (std::size_t j = 0; j < pat.size(); ++j)
      if (w[i + j] != pat[j]) {
        hit = false;
        break;
      }
    if (hit) return i;
  }
  return std::string::npos;
}

SymWord splice(const SymWord& w, std::size_t at, std::size_t len,
               const SymWord& repl) {
  SymWord r;
  r.reserve(w.size() - len + repl.size());
  r.insert(r.end(), w.begin(), w.begin() + static_cast<long>(at));
  r.insert(r.end(), repl.begin(), repl.end());
  r.insert(r.end(), w.begin() + static_cast<long>(at + len), w.end());
  return r;
}

}  // namespace

RewritingSystem::RewritingSystem(int n_generators,
                                 std::vector<int> generator_order,
                                 std::vector<RewriteRule> rules,
                                 bool confluent)
    : n_generators_(n_generators),
      order_(std::move(generator_order)),
      rules_(std::move(rules)),
      confluent_(confluent) {
  if (order_.empty()) {
    order_.resize(static_cast<std::size_t>(n_generators_));
    for (int i = 0; i < n_generators_; ++i)
      order_[static_cast<std::size_t>(i)] = i;
  }
}

int RewritingSystem::rank(int sym) const {
  return 2 * order_[static_cast<std::size_t>(sym / 2)] + sym % 2;
}

bool RewritingSystem::shortlex_less(const SymWord& a, const SymWord& b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return rank(a[i]) < rank(b[i]);
  return false;
}

SymWord RewritingSystem::reduce(SymWord w) const {
  bool changed = true;
  while (changed) {
    changed = false;
    for (const RewriteRule& r : rules_) {
      const std::size_t at = find_sub(w, r.lhs, 0);
      if (at != std::string::npos) {
        w = splice(w, at, r.lhs.size(), r.rhs);
        changed = true;
        break;
      }
    }
  }
  return w;
}

SymWord RewritingSystem::to_symbols(const Word& w) const {
  SymWord s;
  s.reserve(w.size());
  for (const Letter& l : w.letters) s.push_back(sym_of(l));
  return s;
}

Word RewritingSystem::to_word(const SymWord& s) const {
  Word w;
  w.letters.reserve(s.size());
  for (int sym : s)
    w.letters.push_back(
        Letter{sym / 2, static_cast<std::int8_t>(sym % 2 == 0 ? 1 : -1)});
  return w;
}

bool RewritingSystem::verify_local_confluence() const {
  for (const RewriteRule& r1 : rules_)
    for (const RewriteRule& r2 : rules_) {
      // proper overlaps: a suffix of r1.lhs equals a prefix of r2.lhs
      const std::size_t max_k = std::min(r1.lhs.size(), r2.lhs.size());
      for (std::size_t k = 1; k <= max_k; ++k) {
        bool match = true;
        for (std::size_t j = 0; j < k; ++j)
          if (r1.lhs[r1.lhs.size() - k + j] != r2.lhs[j]) {
            match = false;
            break;
          }
        if (!match) continue;
        SymWord super(r1.lhs);
        super.insert(super.end(), r2.lhs.begin() + static_cast<long>(k),
                     r2.lhs.end());
        SymWord left = splice(super, 0, r1.lhs.size(), r1.rhs);
        SymWord right =
            splice(super, super.size() - r2.lhs.size(), r2.lhs.size(), r2.rhs);
        if (reduce(left) != reduce(right)) return false;
      }
      // containment: r2.lhs strictly inside r1.lhs
      if (r2.lhs.size() < r1.lhs.size()) {
        for (std::size_t at = 1; at + r2.lhs.size() < r1.lhs.size(); ++at) {
          if (find_sub(r1.lhs, r2.lhs, at) == at) {
            SymWord left = r1.rhs;
            SymWord right = splice(r1.lhs, at, r2.lhs.size(), r2.rhs);
            if (reduce(left) != reduce(right)) return false;
          }
        }
      }
    }
  return true;
}

// ---------------------------------------------------------------------------

class KnuthBendix {
 public:
  KnuthBendix(const FinitePresentation& p, const std::vector<int>& order)
      : sys_(p.alphabet.size(), order, {}, false) {
    // free reduction rules g g^-1 -> eps
    for (int g = 0; g < p.alphabet.size(); ++g) {
      add_rule({2 * g, 2 * g + 1}, {});
      add_rule({2 * g + 1, 2 * g}, {});
    }
    for (const Word& r : p.relators)
      pending_.push_back({sys_.to_symbols(free_reduce(r)), {}});
  }

  KBOutcome run(long budget) {
    long processed = 0;
    while (!pending_.empty()) {
      if (++processed > budget)
        return KBOutcome{std::nullopt, processed - 1};
      auto [a, b] = pending_.front();
      pending_.pop_front();
      a = sys_.reduce(std::move(a));
      b = sys_.reduce(std::move(b));
      if (a == b) continue;
      if (sys_.shortlex_less(a, b)) std::swap(a, b);
      add_rule(std::move(a), std::move(b));
    }
    sys_.confluent_ = true;
    return KBOutcome{std::move(sys_), processed};
  }

 private:
  void add_rule(SymWord lhs, SymWord rhs) {
    // retire rules the new one subsumes: reducible lhs goes back to the
    // queue, reducible rhs is normalized in place later
    RewriteRule rule{std::move(lhs), std::move(rhs)};
    std::vector<RewriteRule> kept;
    kept.reserve(sys_.rules_.size() + 1);
    for (RewriteRule& old : sys_.rules_) {
      if (find_sub(old.lhs, rule.lhs, 0) != std::string::npos) {
        pending_.push_back({std::move(old.lhs), std::move(old.rhs)});
      } else {
        kept.push_back(std::move(old));
      }
    }
    sys_.rules_ = std::move(kept);
    sys_.rules_.push_back(std::move(rule));
    const RewriteRule& added = sys_.rules_.back();
    // critical pairs of the new rule against everything (both orders)
    for (const RewriteRule& other : sys_.rules_) {
      enqueue_overlaps(added, other);
      if (&other != &added) enqueue_overlaps(other, added);
    }
  }

  void enqueue_overlaps(const RewriteRule& r1, const RewriteRule& r2) {
    const std::size_t max_k = std::min(r1.lhs.size(), r2.lhs.size());
    for (std::size_t k = 1; k <= max_k; ++k) {
      if (k == r1.lhs.size() && k == r2.lhs.size()) continue;  // same word
      bool match = true;
      for (std::size_t j = 0; j < k; ++j)
        if (r1.lhs[r1.lhs.size() - k + j] != r2.lhs[j]) {
          match = false;
          break;
        }
      if (!match) continue;
      SymWord super(r1.lhs);
      super.insert(super.end(), r2.lhs.begin() + static_cast<long>(k),
                   r2.lhs.end());
      SymWord left = splice(super, 0, r1.lhs.size(), r1.rhs);
      SymWord right =
          splice(super, super.size() - r2.lhs.size(), r2.lhs.size(), r2.rhs);
      pending_.push_back({std::move(left), std::move(right)});
    }
  }

  RewritingSystem sys_;
  std::deque<std::pair<SymWord, SymWord>> pending_;
};

KBOutcome kb_complete(const FinitePresentation& presentation, long budget,
                      const std::vector<int>& generator_order) {
  if (budget <= 0) return KBOutcome{std::nullopt, 0};
  if (!generator_order.empty()) {
    if (static_cast<int>(generator_order.size()) !=
        presentation.alphabet.size())
      throw InputError("generator order must list every generator once");
  }
  // generator_order lists generators by rank; convert to rank-of-generator
  std::vector<int> rank_of;
  if (!generator_order.empty()) {
    rank_of.assign(generator_order.size(), -1);
    for (std::size_t pos = 0; pos < generator_order.size(); ++pos) {
      const int g = generator_order[pos];
      if (g < 0 || g >= presentation.alphabet.size() ||
          rank_of[static_cast<std::size_t>(g)] != -1)
        throw InputError("generator order must list every generator once");
      rank_of[static_cast<std::size_t>(g)] = static_cast<int>(pos);
    }
  }
  KnuthBendix kb(presentation, rank_of);
  return kb.run(budget);
}

}  // namespace conj3m
