#include "subsume/engine.hpp"

#include <algorithm>
#include <cassert>

namespace subsume {

std::map<std::string, std::uint64_t> SessionStats::as_map() const {
  return {{"pairs", pairs},
          {"fills", fills},
          {"pruned_subsumption", pruned_subsumption},
          {"pruned_sr", pruned_sr},
          {"sat_calls", sat_calls},
          {"subsumed", subsumed},
          {"sr_applied", sr_applied},
          {"aborted", aborted}};
}

void Session::setup(const Clause& l, const Clause& m) {
  if (current_ && current_->first == l && current_->second == m) return;
  current_.emplace(l, m);
  ++stats_.pairs;
  last_ = {};
  solver_.clear();
  column_vars_.clear();

  flags_ = prune(l, m);
  filled_ = false;
  if (flags_.f_s && flags_.f_sr) return;  // both verdicts already decided

  ms_.fill(bank_, symbols_, l, m, solver_, config_.max_entries);
  ++stats_.fills;
  filled_ = true;
  flags_ = {ms_.f_s(), ms_.f_sr()};  // fill folds the header prune back in
  last_.entries = ms_.entries().size();
}

SolveResult Session::solve_tracked() {
  ++stats_.sat_calls;
  ++last_.sat_calls;
  std::uint64_t before = solver_.counters().conflicts;
  SolveResult r = solver_.solve();
  last_.conflicts += solver_.counters().conflicts - before;
  last_.vars = solver_.num_variables();
  return r;
}

bool Session::check_subsumption(const Clause& l, const Clause& m) {
  setup(l, m);
  if (filled_ && ms_.aborted()) {
    ++stats_.aborted;
    return false;
  }
  if (flags_.f_s) {
    ++stats_.pruned_subsumption;
    return false;
  }
  solver_.reset_constraints();
  EncodingStats es = encode_subsumption(ms_, solver_);
  last_.clauses += es.total_clauses();
  last_.amo_groups += es.amo_groups;
  if (!es.feasible) return false;
  switch (solve_tracked()) {
    case SolveResult::Sat:
      ++stats_.subsumed;
      return true;
    case SolveResult::Aborted:
      ++stats_.aborted;
      return false;
    case SolveResult::Unsat:
      return false;
  }
  return false;
}

std::optional<Clause> Session::check_subsumption_resolution(const Clause& l, const Clause& m) {
  return check_subsumption_resolution(l, m, config_.sr_encoding);
}

std::optional<Clause> Session::check_subsumption_resolution(const Clause& l, const Clause& m,
                                                            EncodingKind kind) {
  assert(kind != EncodingKind::Subsumption);
  setup(l, m);
  if (filled_ && ms_.aborted()) {
    ++stats_.aborted;
    return std::nullopt;
  }
  if (flags_.f_sr) {
    ++stats_.pruned_sr;
    return std::nullopt;
  }
  solver_.reset_constraints();
  column_vars_.clear();
  EncodingStats es = kind == EncodingKind::SrDirect
                         ? encode_sr_direct(ms_, solver_)
                         : encode_sr_indirect(ms_, solver_, column_vars_);
  last_.clauses += es.total_clauses();
  last_.amo_groups += es.amo_groups;
  if (!es.feasible) return std::nullopt;
  switch (solve_tracked()) {
    case SolveResult::Sat:
      ++stats_.sr_applied;
      return build_conclusion(bank_, solver_, ms_, current_->second, kind, column_vars_);
    case SolveResult::Aborted:
      ++stats_.aborted;
      return std::nullopt;
    case SolveResult::Unsat:
      return std::nullopt;
  }
  return std::nullopt;
}

std::uint32_t ClauseSet::add(Clause c) {
  std::uint32_t id = static_cast<std::uint32_t>(clauses_.size());
  for (const auto& h : c.header()) index_[h.pred].push_back(id);
  clauses_.push_back(std::move(c));
  ++active_;
  return id;
}

void ClauseSet::remove(std::uint32_t id) {
  assert(contains(id));
  clauses_[id].reset();  // index entries go stale; reads filter by contains()
  --active_;
}

std::vector<std::uint32_t> ClauseSet::active() const {
  std::vector<std::uint32_t> ids;
  ids.reserve(active_);
  for (std::uint32_t id = 0; id < clauses_.size(); ++id)
    if (clauses_[id]) ids.push_back(id);
  return ids;
}

std::vector<std::uint32_t> ClauseSet::candidates_for(const Clause& m, std::uint32_t exclude_id,
                                                     bool use_index) const {
  std::vector<std::uint32_t> ids;
  if (use_index) {
    for (const auto& h : m.header()) {
      auto it = index_.find(h.pred);
      if (it == index_.end()) continue;
      ids.insert(ids.end(), it->second.begin(), it->second.end());
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  } else {
    ids = active();
  }
  std::vector<std::uint32_t> out;
  for (std::uint32_t id : ids) {
    if (id == exclude_id || !contains(id)) continue;
    if (predicate_set_included(get(id), m)) out.push_back(id);
  }
  return out;
}

SimplifyOutcome forward_simplify(Session& session, ClauseSet& f, std::uint32_t m_id) {
  const Clause& m = f.get(m_id);
  std::optional<Clause> conclusion;
  std::uint32_t conclusion_by = 0;

  for (std::uint32_t lid : f.candidates_for(m, m_id)) {
    const Clause& l = f.get(lid);
    if (session.check_subsumption(l, m)) {
      f.remove(m_id);
      return {SimplifyOutcome::Kind::Subsumed, lid, 0};
    }
    // Keep only the first conclusion, but keep scanning: a later candidate
    // may still subsume M outright, which beats replacing it.
    if (!conclusion) {
      if (auto c = session.check_subsumption_resolution(l, m)) {
        conclusion = std::move(c);
        conclusion_by = lid;
      }
    }
  }
  if (conclusion) {
    f.remove(m_id);
    std::uint32_t nid = f.add(std::move(*conclusion));
    return {SimplifyOutcome::Kind::SimplifiedTo, conclusion_by, nid};
  }
  return {SimplifyOutcome::Kind::Unchanged, 0, 0};
}

std::vector<SimplifyEvent> simplify_to_fixpoint(Session& session, ClauseSet& f) {
  std::vector<SimplifyEvent> events;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::uint32_t id : f.active()) {
      if (!f.contains(id)) continue;  // removed earlier in this pass
      SimplifyOutcome out = forward_simplify(session, f, id);
      switch (out.kind) {
        case SimplifyOutcome::Kind::Unchanged:
          break;
        case SimplifyOutcome::Kind::Subsumed:
          events.push_back({SimplifyEvent::Kind::Removed, id, out.by, 0});
          changed = true;
          break;
        case SimplifyOutcome::Kind::SimplifiedTo:
          events.push_back({SimplifyEvent::Kind::Replaced, id, out.by, out.replacement});
          changed = true;
          break;
      }
    }
  }
  return events;
}

}  // namespace subsume
