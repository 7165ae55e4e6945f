#include "subsume/sat_solver.hpp"

#include <algorithm>
#include <cassert>
#include <ostream>
#include <stdexcept>

namespace subsume {

std::uint32_t SatSolver::new_variable(std::optional<Substitution> subst) {
  assert(trail_.empty() && "variables must be created pre-solve");
  std::uint32_t id = static_cast<std::uint32_t>(value_.size());
  value_.push_back(-1);
  subst_.push_back(std::move(subst));
  reason_.push_back(kNoReason);
  level_of_.push_back(0);
  return id;
}

void SatSolver::add_clause(std::vector<SatLit> lits) {
  assert(trail_.empty());
  if (lits.empty()) has_empty_clause_ = true;
  clauses_.push_back(std::move(lits));
}

void SatSolver::add_at_most_one(std::vector<std::uint32_t> vars) {
  assert(trail_.empty());
#ifndef NDEBUG
  for (std::size_t i = 0; i < vars.size(); ++i)
    for (std::size_t j = i + 1; j < vars.size(); ++j)
      assert(vars[i] != vars[j] && "AtMostOne members must be distinct");
#endif
  amo_.push_back(std::move(vars));
}

const std::vector<SatLit>& SatSolver::reason_clause(std::uint32_t ref) const {
  if (ref & kArenaBit) return reason_arena_[ref & ~kArenaBit];
  if (ref & kLearnedBit) return learned_[ref & ~kLearnedBit];
  return clauses_[ref];
}

std::uint32_t SatSolver::arena_reason(SatLit a, SatLit b) {
  reason_arena_.push_back({a, b});
  return kArenaBit | static_cast<std::uint32_t>(reason_arena_.size() - 1);
}

const std::vector<SatLit>* SatSolver::assign(SatLit lit, std::uint32_t reason) {
  std::uint32_t v = lit.var();
  assert(value_[v] == -1);
  value_[v] = lit.positive() ? 1 : 0;
  trail_.push_back(v);
  reason_[v] = reason;
  level_of_[v] = current_level();
  if (reason != kNoReason) ++counters_.propagations;

  if (lit.positive() && subst_[v]) {
    if (!bindings_.try_extend(*subst_[v])) {
      // Theory conflict. Explain with the first conflicting true variable in
      // assignment order: its substitution pins some x to a different term.
      for (std::uint32_t w : trail_) {
        if (w == v || value_[w] != 1 || !subst_[w]) continue;
        if (incompatible(*subst_[v], *subst_[w])) {
          conflict_buf_ = {SatLit(v, false), SatLit(w, false)};
          return &conflict_buf_;
        }
      }
      throw std::logic_error("binding clash without a conflicting trail variable");
    }
  }
  return nullptr;
}

const std::vector<SatLit>* SatSolver::scan_clause(std::uint32_t ref, bool& changed) {
  const std::vector<SatLit>& c = reason_clause(ref);
  SatLit unit;
  int unassigned = 0;
  for (SatLit lit : c) {
    signed char val = value_[lit.var()];
    if (val == -1) {
      if (++unassigned > 1) return nullptr;  // neither unit nor conflicting
      unit = lit;
    } else if ((val == 1) == lit.positive()) {
      return nullptr;  // satisfied
    }
  }
  if (unassigned == 0) return &c;  // every literal false
  changed = true;
  return assign(unit, ref);
}

const std::vector<SatLit>* SatSolver::propagate() {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < clauses_.size(); ++i)
      if (const auto* c = scan_clause(static_cast<std::uint32_t>(i), changed)) return c;
    for (std::size_t i = 0; i < learned_.size(); ++i)
      if (const auto* c = scan_clause(kLearnedBit | static_cast<std::uint32_t>(i), changed))
        return c;
    for (const auto& group : amo_) {
      std::uint32_t first_true = kNoReason;
      for (std::uint32_t v : group) {
        if (value_[v] != 1) continue;
        if (first_true == kNoReason) {
          first_true = v;
          continue;
        }
        conflict_buf_ = {SatLit(first_true, false), SatLit(v, false)};
        return &conflict_buf_;
      }
      if (first_true == kNoReason) continue;
      for (std::uint32_t v : group) {
        if (v == first_true || value_[v] != -1) continue;
        changed = true;
        if (const auto* c =
                assign(SatLit(v, false), arena_reason(SatLit(first_true, false), SatLit(v, false))))
          return c;
      }
    }
  }
  if (config_.paranoid) check_theory_invariant();
  return nullptr;
}

bool SatSolver::analyze_and_backjump(const std::vector<SatLit>& conflict,
                                     const std::vector<SatLit>*& next_conflict) {
  next_conflict = nullptr;
  if (levels_.empty()) return false;  // conflict at the root: UNSAT
  const std::uint32_t cur = current_level();

  // First-UIP resolution over the implication graph.
  std::vector<char> seen(value_.size(), 0);
  std::vector<SatLit> learnt;
  learnt.push_back(SatLit());  // slot 0 becomes the asserting literal
  int path = 0;
  std::size_t index = trail_.size();
  const std::vector<SatLit>* reason_lits = &conflict;
  std::uint32_t resolve_var = kNoReason;

  for (;;) {
    for (SatLit q : *reason_lits) {
      std::uint32_t v = q.var();
      if (v == resolve_var || seen[v] || level_of_[v] == 0) continue;
      seen[v] = 1;
      if (level_of_[v] >= cur)
        ++path;
      else
        learnt.push_back(q);
    }
    while (!seen[trail_[--index]]) {
    }
    resolve_var = trail_[index];
    seen[resolve_var] = 0;
    if (--path == 0) break;
    reason_lits = &reason_clause(reason_[resolve_var]);
  }
  learnt[0] = SatLit(resolve_var, value_[resolve_var] == 0);  // negate its assignment

  std::uint32_t backjump = 0;
  for (std::size_t i = 1; i < learnt.size(); ++i)
    backjump = std::max(backjump, level_of_[learnt[i].var()]);
  while (current_level() > backjump) undo_top_level();

  learned_.push_back(std::move(learnt));
  ++counters_.learned;
  std::uint32_t ref = kLearnedBit | static_cast<std::uint32_t>(learned_.size() - 1);
  next_conflict = assign(learned_.back()[0], ref);
  return true;
}

void SatSolver::undo_top_level() {
  Level& lv = levels_.back();
  while (trail_.size() > lv.trail_size) {
    value_[trail_.back()] = -1;
    trail_.pop_back();
  }
  bindings_.undo_to(lv.bind_mark);
  levels_.pop_back();
}

void SatSolver::restore_pristine() {
  while (!levels_.empty()) undo_top_level();
  while (!trail_.empty()) {
    value_[trail_.back()] = -1;
    trail_.pop_back();
  }
  bindings_.undo_to(0);
  reason_arena_.clear();
}

SolveResult SatSolver::solve() {
  ++counters_.solves;
  restore_pristine();
  if (has_empty_clause_) return SolveResult::Unsat;

  std::uint64_t conflicts_here = 0;
  const std::vector<SatLit>* conflict = propagate();
  for (;;) {
    if (conflict) {
      ++counters_.conflicts;
      if (config_.conflict_budget && ++conflicts_here > config_.conflict_budget) {
        restore_pristine();
        return SolveResult::Aborted;
      }
      if (config_.learn_clauses) {
        if (!analyze_and_backjump(*conflict, conflict)) {
          restore_pristine();
          return SolveResult::Unsat;
        }
      } else {
        // Chronological backtracking: flip the deepest decision not yet tried
        // both ways; the flipped assignment stays inside the same level.
        while (!levels_.empty() && levels_.back().flipped) undo_top_level();
        if (levels_.empty()) {
          restore_pristine();
          return SolveResult::Unsat;
        }
        Level& lv = levels_.back();
        std::uint32_t v = lv.var;
        while (trail_.size() > lv.trail_size) {
          value_[trail_.back()] = -1;
          trail_.pop_back();
        }
        bindings_.undo_to(lv.bind_mark);
        lv.flipped = true;
        conflict = assign(SatLit(v, false), kNoReason);
      }
      if (!conflict) conflict = propagate();
      continue;
    }

    std::uint32_t next = 0;
    while (next < value_.size() && value_[next] != -1) ++next;
    if (next == value_.size()) {
      model_.assign(value_.begin(), value_.end());
      restore_pristine();
      return SolveResult::Sat;
    }
    ++counters_.decisions;
    levels_.push_back({next, trail_.size(), bindings_.mark(), false});
    conflict = assign(SatLit(next, true), kNoReason);
    if (!conflict) conflict = propagate();
  }
}

void SatSolver::check_theory_invariant() const {
  Substitution expect;
  for (std::uint32_t v : trail_) {
    if (value_[v] != 1 || !subst_[v]) continue;
    for (const Binding& b : subst_[v]->bindings())
      if (!expect.bind(b.var, b.term))
        throw std::logic_error("theory invariant violated: union of true bindings not functional");
  }
  if (!(expect == bindings_.snapshot()))
    throw std::logic_error("theory invariant violated: trail differs from union of true bindings");
}

void SatSolver::reset_constraints() {
  assert(trail_.empty() && levels_.empty());
  clauses_.clear();
  learned_.clear();
  reason_arena_.clear();
  amo_.clear();
  has_empty_clause_ = false;
}

void SatSolver::clear() {
  reset_constraints();
  value_.clear();
  subst_.clear();
  reason_.clear();
  level_of_.clear();
  model_.clear();
  bindings_.clear();
}

void SatSolver::dump(std::ostream& out,
                     const std::function<std::string(TermRef)>& term_printer) const {
  auto show_term = [&](TermRef t) -> std::string {
    if (term_printer) return term_printer(t);
    if (t.is_var()) return "X" + std::to_string(t.var_index());
    return "#" + std::to_string(t.raw() >> 1);
  };
  out << "p cnf " << value_.size() << ' ' << clauses_.size() << '\n';
  for (std::size_t v = 0; v < subst_.size(); ++v) {
    if (!subst_[v]) continue;
    for (const Binding& b : subst_[v]->bindings())
      out << "c bind " << v + 1 << " X" << b.var << ' ' << show_term(b.term) << '\n';
  }
  for (const auto& c : clauses_) {
    for (SatLit lit : c) out << (lit.positive() ? "" : "-") << lit.var() + 1 << ' ';
    out << "0\n";
  }
  for (const auto& g : amo_) {
    out << "amo";
    for (std::uint32_t v : g) out << ' ' << v + 1;
    out << " 0\n";
  }
}

}  // namespace subsume
