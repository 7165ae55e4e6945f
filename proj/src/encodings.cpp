#include "subsume/encodings.hpp"

#include <cassert>
#include <stdexcept>

namespace subsume {

namespace {

/// Completeness: one clause per row collecting the row's entry variables
/// (all entries for SR, positive entries for subsumption). Returns false if
/// a row has no usable entry — the disjunction would be empty, making the
/// whole instance unsatisfiable without a solver call.
bool add_completeness(const MatchSet& ms, SatSolver& solver, bool positive_only,
                      EncodingStats& stats) {
  for (std::uint32_t i = 0; i < ms.rows(); ++i) {
    std::vector<SatLit> row;
    for (const MatchEntry& e : ms.entries()) {
      if (e.row != i) continue;
      if (positive_only && !e.positive) continue;
      row.emplace_back(e.var, true);
    }
    if (row.empty()) return false;
    solver.add_clause(std::move(row));
    ++stats.completeness;
  }
  return true;
}

}  // namespace

EncodingStats encode_sr_direct(const MatchSet& ms, SatSolver& solver) {
  assert(!ms.aborted());
  EncodingStats stats;

  // Existence: at least one negative entry is used.
  std::vector<SatLit> existence;
  for (const MatchEntry& e : ms.entries())
    if (!e.positive) existence.emplace_back(e.var, true);
  if (existence.empty()) {
    stats.feasible = false;
    return stats;
  }
  solver.add_clause(std::move(existence));
  ++stats.existence;

  // Uniqueness: negative entries of distinct columns exclude each other.
  // Grouped by column pair so each unordered pair is emitted once.
  for (std::uint32_t j = 0; j < ms.cols(); ++j) {
    for (std::uint32_t k = j + 1; k < ms.cols(); ++k) {
      for (std::uint32_t ei : ms.column_entries(j)) {
        if (ms.entries()[ei].positive) continue;
        for (std::uint32_t ek : ms.column_entries(k)) {
          if (ms.entries()[ek].positive) continue;
          solver.add_clause({SatLit(ms.entries()[ei].var, false),
                             SatLit(ms.entries()[ek].var, false)});
          ++stats.uniqueness;
        }
      }
    }
  }

  if (!add_completeness(ms, solver, /*positive_only=*/false, stats)) {
    stats.feasible = false;
    return stats;
  }

  // Coherence: within a column, a used positive excludes a used negative.
  for (std::uint32_t j = 0; j < ms.cols(); ++j) {
    for (std::uint32_t ei : ms.column_entries(j)) {
      if (!ms.entries()[ei].positive) continue;
      for (std::uint32_t ek : ms.column_entries(j)) {
        if (ms.entries()[ek].positive) continue;
        solver.add_clause({SatLit(ms.entries()[ei].var, false),
                           SatLit(ms.entries()[ek].var, false)});
        ++stats.coherence;
      }
    }
  }
  return stats;
}

EncodingStats encode_sr_indirect(const MatchSet& ms, SatSolver& solver,
                                 std::vector<ColumnVar>& column_vars) {
  assert(!ms.aborted());
  EncodingStats stats;
  column_vars.clear();

  for (std::uint32_t j = 0; j < ms.cols(); ++j)
    if (ms.col_has_negative(j)) column_vars.push_back({j, solver.new_variable()});

  if (column_vars.empty()) {
    stats.feasible = false;  // revised existence would be the empty clause
    return stats;
  }

  // Structurality: c_j <-> some negative entry of column j is used.
  for (const ColumnVar& cv : column_vars) {
    std::vector<SatLit> some{SatLit(cv.var, false)};
    for (std::uint32_t ei : ms.column_entries(cv.col)) {
      const MatchEntry& e = ms.entries()[ei];
      if (e.positive) continue;
      some.emplace_back(e.var, true);
      solver.add_clause({SatLit(cv.var, true), SatLit(e.var, false)});
      ++stats.structurality;
    }
    solver.add_clause(std::move(some));
    ++stats.structurality;
  }

  // Revised existence and revised uniqueness over the structural variables.
  std::vector<SatLit> existence;
  std::vector<std::uint32_t> amo;
  for (const ColumnVar& cv : column_vars) {
    existence.emplace_back(cv.var, true);
    amo.push_back(cv.var);
  }
  solver.add_clause(std::move(existence));
  ++stats.existence;
  solver.add_at_most_one(std::move(amo));
  ++stats.amo_groups;

  if (!add_completeness(ms, solver, /*positive_only=*/false, stats)) {
    stats.feasible = false;
    return stats;
  }

  // Revised coherence: c_j excludes every positive entry of its column.
  for (const ColumnVar& cv : column_vars) {
    for (std::uint32_t ei : ms.column_entries(cv.col)) {
      const MatchEntry& e = ms.entries()[ei];
      if (!e.positive) continue;
      solver.add_clause({SatLit(cv.var, false), SatLit(e.var, false)});
      ++stats.coherence;
    }
  }
  return stats;
}

EncodingStats encode_subsumption(const MatchSet& ms, SatSolver& solver) {
  assert(!ms.aborted());
  EncodingStats stats;

  if (!add_completeness(ms, solver, /*positive_only=*/true, stats)) {
    stats.feasible = false;
    return stats;
  }

  // Multiplicity conservation: each m_j absorbs at most one l_i.
  for (std::uint32_t j = 0; j < ms.cols(); ++j) {
    std::vector<std::uint32_t> group;
    for (std::uint32_t ei : ms.column_entries(j))
      if (ms.entries()[ei].positive) group.push_back(ms.entries()[ei].var);
    if (group.empty()) continue;
    solver.add_at_most_one(std::move(group));
    ++stats.amo_groups;
  }
  return stats;
}

Clause build_conclusion(const TermBank& bank, const SatSolver& solver, const MatchSet& ms,
                        const Clause& m, EncodingKind kind,
                        const std::vector<ColumnVar>& column_vars) {
  std::uint32_t resolved = ms.cols();
  if (kind == EncodingKind::SrDirect) {
    // Entries are stored in variable-id order, so the first true negative
    // entry found is the one with the lowest variable id.
    for (const MatchEntry& e : ms.entries()) {
      if (!e.positive && solver.model_value(e.var)) {
        resolved = e.col;
        break;
      }
    }
  } else if (kind == EncodingKind::SrIndirect) {
    for (const ColumnVar& cv : column_vars) {
      if (solver.model_value(cv.var)) {
        resolved = cv.col;
        break;
      }
    }
  } else {
    throw std::logic_error("build_conclusion: subsumption has no conclusion");
  }
  if (resolved == ms.cols())
    throw std::logic_error("build_conclusion: model has no resolution literal");

  std::vector<Literal> rest;
  rest.reserve(m.size() - 1);
  for (std::size_t j = 0; j < m.size(); ++j)
    if (j != resolved) rest.push_back(m.literals()[j]);
  auto conclusion = Clause::normalize(bank, std::move(rest), m.var_names());
  assert(conclusion && "removing a literal from a normalized clause cannot create a tautology");
  return *conclusion;
}

}  // namespace subsume
