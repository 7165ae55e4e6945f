#pragma once

#include <cstdint>
#include <vector>

#include "subsume/match_set.hpp"

namespace subsume {

enum class EncodingKind { SrDirect, SrIndirect, Subsumption };

/// Structural variable c_j of the indirect encoding: true iff column j
/// hosts the (unique) true negative match. Created only for columns with at
/// least one negative entry.
struct ColumnVar {
  std::uint32_t col;
  std::uint32_t var;
};

struct EncodingStats {
  std::size_t existence = 0;
  std::size_t uniqueness = 0;
  std::size_t completeness = 0;
  std::size_t coherence = 0;
  std::size_t structurality = 0;
  std::size_t amo_groups = 0;
  /// False when some quantification range came up empty in a way that
  /// already decides the problem (a row with no usable entries, or no
  /// negative entry at all): the caller must not solve and reports failure
  /// directly instead of loading an empty disjunction.
  bool feasible = true;

  std::size_t total_clauses() const {
    return existence + uniqueness + completeness + coherence + structurality;
  }
};

/// Direct subsumption-resolution encoding: existence (some negative entry is
/// used), uniqueness (no two negative entries in distinct columns),
/// completeness (every row maps somewhere), coherence (no column mixes a
/// used positive with a used negative). Quadratic in negative entries.
EncodingStats encode_sr_direct(const MatchSet& ms, SatSolver& solver);

/// Indirect variant: structural variables c_j stand for "column j hosts a
/// negative match"; uniqueness becomes AtMostOne over the c_j and coherence
/// pairs each c_j with the column's positive entries. Linear in entries.
/// column_vars receives the created c_j handles (needed to read the
/// resolution column off a model).
EncodingStats encode_sr_indirect(const MatchSet& ms, SatSolver& solver,
                                 std::vector<ColumnVar>& column_vars);

/// Subsumption: positive entries only; completeness per row plus AtMostOne
/// per column (multiset multiplicity conservation). Reuses the entry
/// variables created by fill(), so it shares a solver load cycle with the
/// SR encodings.
EncodingStats encode_subsumption(const MatchSet& ms, SatSolver& solver);

/// Read the resolution column off a model and return M minus that literal.
/// For SrDirect the column of the true negative entry with the lowest
/// variable id wins; for SrIndirect the unique true c_j names it. Throws
/// std::logic_error when the model has no such entry (an encoding bug).
Clause build_conclusion(const TermBank& bank, const SatSolver& solver, const MatchSet& ms,
                        const Clause& m, EncodingKind kind,
                        const std::vector<ColumnVar>& column_vars = {});

}  // namespace subsume
