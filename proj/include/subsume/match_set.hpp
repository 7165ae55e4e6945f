#pragma once

#include <cstdint>
#include <vector>

#include "subsume/clause.hpp"
#include "subsume/matching.hpp"
#include "subsume/sat_solver.hpp"

namespace subsume {

struct PruneFlags {
  bool f_s;   // subsumption ruled out
  bool f_sr;  // subsumption resolution ruled out
};

/// Header-only prune: F_SR fires when L's predicate set is not a subset of
/// M's; F_S fires when L's (predicate, polarity) occurrence multiset is not
/// included in M's. Sound, not complete; both flags are computed
/// independently.
PruneFlags prune(const Clause& l, const Clause& m);

struct MatchEntry {
  std::uint32_t row;  // index into L
  std::uint32_t col;  // index into M
  bool positive;      // + : sigma(l_i) = m_j ; - : sigma(l_i) = ~m_j
  Substitution subst;
  std::uint32_t var;  // SAT variable carrying subst
};

/// Sparse |L| x |M| match matrix. Entries are created in row-major order
/// (columns ascending within a row, match orientations in generation order),
/// and their SAT variables are created in the same order, which is what
/// makes "first true negative entry" a deterministic tie-break downstream.
///
/// One MatchSet per engine session; fill() clears and reuses the buffers.
class MatchSet {
public:
  /// Build all entries for the pair (l, m), allocating one solver variable
  /// per entry. Combines the header prune with the matrix-shape prunes:
  /// an empty row raises F_SR, a row without positive entries raises F_S.
  /// Stops and marks the set aborted once max_entries is exceeded; callers
  /// treat that as "no simplification found".
  void fill(const TermBank& bank, const SymbolTable& symbols, const Clause& l, const Clause& m,
            SatSolver& solver, std::size_t max_entries = 4096);

  const std::vector<MatchEntry>& entries() const { return entries_; }

  bool f_s() const { return f_s_; }
  bool f_sr() const { return f_sr_; }
  bool aborted() const { return aborted_; }

  std::uint32_t rows() const { return rows_; }
  std::uint32_t cols() const { return cols_; }

  /// Entry indices grouped per column (row-major order within the column).
  const std::vector<std::uint32_t>& column_entries(std::uint32_t col) const {
    return by_col_[col];
  }

  bool row_has_any(std::uint32_t row) const { return row_any_[row] != 0; }
  bool row_has_positive(std::uint32_t row) const { return row_pos_[row] != 0; }
  bool col_has_positive(std::uint32_t col) const { return col_pos_[col] != 0; }
  bool col_has_negative(std::uint32_t col) const { return col_neg_[col] != 0; }

  std::size_t positive_count() const { return positive_count_; }
  std::size_t negative_count() const { return negative_count_; }

private:
  void clear();

  std::vector<MatchEntry> entries_;
  std::vector<std::vector<std::uint32_t>> by_col_;
  std::vector<char> row_any_, row_pos_, col_pos_, col_neg_;
  std::uint32_t rows_ = 0, cols_ = 0;
  std::size_t positive_count_ = 0, negative_count_ = 0;
  bool f_s_ = false, f_sr_ = false, aborted_ = false;
};

}  // namespace subsume
