#include "subsume/clause.hpp"

#include <algorithm>

namespace subsume {

std::optional<Clause> Clause::normalize(const TermBank& bank, std::vector<Literal> literals,
                                        std::vector<std::string> var_names) {
  // Clauses are small; quadratic duplicate/tautology scans beat hashing here.
  std::vector<Literal> kept;
  kept.reserve(literals.size());
  for (const Literal& lit : literals) {
    bool duplicate = false;
    for (const Literal& prev : kept) {
      if (prev == lit) {
        duplicate = true;
        break;
      }
      if (prev.same_atom(lit)) return std::nullopt;  // l and ~l: tautology
    }
    if (!duplicate) kept.push_back(lit);
  }

  Clause c;
  c.literals_ = std::move(kept);
  c.var_names_ = std::move(var_names);

  long bound = -1;
  for (const Literal& lit : c.literals_) {
    c.mask_ |= 1ull << (lit.pred % 64);
    for (TermRef t : lit.args) bound = std::max(bound, bank.var_bound(t));
    auto it = std::find_if(c.header_.begin(), c.header_.end(),
                           [&](const HeaderEntry& h) { return h.pred == lit.pred; });
    if (it == c.header_.end()) {
      c.header_.push_back({lit.pred, 0, 0});
      it = c.header_.end() - 1;
    }
    if (lit.positive)
      ++it->pos;
    else
      ++it->neg;
  }
  std::sort(c.header_.begin(), c.header_.end(),
            [](const HeaderEntry& a, const HeaderEntry& b) { return a.pred < b.pred; });
  c.num_vars_ = static_cast<unsigned>(bound + 1);
  return c;
}

bool predicate_set_included(const Clause& l, const Clause& m) {
  if (l.predicate_mask() & ~m.predicate_mask()) return false;
  const auto& lh = l.header();
  const auto& mh = m.header();
  std::size_t j = 0;
  for (const auto& e : lh) {
    while (j < mh.size() && mh[j].pred < e.pred) ++j;
    if (j == mh.size() || mh[j].pred != e.pred) return false;
  }
  return true;
}

bool polarity_multiset_included(const Clause& l, const Clause& m) {
  if (l.predicate_mask() & ~m.predicate_mask()) return false;
  const auto& lh = l.header();
  const auto& mh = m.header();
  std::size_t j = 0;
  for (const auto& e : lh) {
    while (j < mh.size() && mh[j].pred < e.pred) ++j;
    if (j == mh.size() || mh[j].pred != e.pred) return false;
    if (e.pos > mh[j].pos || e.neg > mh[j].neg) return false;
  }
  return true;
}

}  // namespace subsume
