#include "subsume/match_set.hpp"

namespace subsume {

PruneFlags prune(const Clause& l, const Clause& m) {
  return {!polarity_multiset_included(l, m), !predicate_set_included(l, m)};
}

void MatchSet::clear() {
  entries_.clear();
  by_col_.clear();
  row_any_.clear();
  row_pos_.clear();
  col_pos_.clear();
  col_neg_.clear();
  rows_ = cols_ = 0;
  positive_count_ = negative_count_ = 0;
  f_s_ = f_sr_ = aborted_ = false;
}

void MatchSet::fill(const TermBank& bank, const SymbolTable& symbols, const Clause& l,
                    const Clause& m, SatSolver& solver, std::size_t max_entries) {
  clear();
  rows_ = static_cast<std::uint32_t>(l.size());
  cols_ = static_cast<std::uint32_t>(m.size());
  by_col_.resize(cols_);
  row_any_.assign(rows_, 0);
  row_pos_.assign(rows_, 0);
  col_pos_.assign(cols_, 0);
  col_neg_.assign(cols_, 0);

  PruneFlags header = prune(l, m);
  f_s_ = header.f_s;
  f_sr_ = header.f_sr;

  for (std::uint32_t i = 0; i < rows_; ++i) {
    const Literal& li = l.literals()[i];
    for (std::uint32_t j = 0; j < cols_; ++j) {
      const Literal& mj = m.literals()[j];
      for (bool negative : {false, true}) {
        for (Substitution& s : match_literal(bank, symbols, li, mj, negative)) {
          if (entries_.size() >= max_entries) {
            aborted_ = true;
            return;
          }
          std::uint32_t var = solver.new_variable(s);
          entries_.push_back({i, j, !negative, std::move(s), var});
          by_col_[j].push_back(static_cast<std::uint32_t>(entries_.size() - 1));
          row_any_[i] = 1;
          if (negative) {
            col_neg_[j] = 1;
            ++negative_count_;
          } else {
            row_pos_[i] = 1;
            col_pos_[j] = 1;
            ++positive_count_;
          }
        }
      }
    }
    if (!row_any_[i]) f_sr_ = true;
    if (!row_pos_[i]) f_s_ = true;
  }
}

}  // namespace subsume
