#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "subsume/encodings.hpp"

namespace subsume {

struct SessionConfig {
  EncodingKind sr_encoding = EncodingKind::SrIndirect;
  std::size_t max_entries = 4096;   // match-set cap; beyond it the pair is abandoned
  std::uint64_t conflict_budget = 0;  // per solve() call; 0 = unlimited
  bool learn_clauses = false;
  bool paranoid = false;
};

struct SessionStats {
  std::uint64_t pairs = 0;  // distinct (L, M) pairs set up
  std::uint64_t fills = 0;  // match-set fills (== pairs that passed the header prune)
  std::uint64_t pruned_subsumption = 0;
  std::uint64_t pruned_sr = 0;
  std::uint64_t sat_calls = 0;
  std::uint64_t subsumed = 0;
  std::uint64_t sr_applied = 0;
  std::uint64_t aborted = 0;  // entry-cap or conflict-budget hits, each counted once

  std::map<std::string, std::uint64_t> as_map() const;
};

/// One simplification session: a match set, a solver and the statistics,
/// reused across clause pairs. The subsumption and subsumption-resolution
/// checks share the match set of the current pair, so calling both on the
/// same (L, M) fills it exactly once (Algorithms 2 and 3 share their setup).
/// Single-threaded; run one Session per worker.
class Session {
public:
  Session(TermBank& bank, const SymbolTable& symbols, SessionConfig config = {})
      : bank_(bank),
        symbols_(symbols),
        config_(config),
        solver_(SatSolver::Config{config.learn_clauses, config.conflict_budget,
                                  config.paranoid}) {}

  /// Does L subsume M? Resource aborts count as "no".
  bool check_subsumption(const Clause& l, const Clause& m);

  /// Conclusion M \ {m'} if subsumption resolution applies, using the
  /// session's configured encoding (or an explicit one).
  std::optional<Clause> check_subsumption_resolution(const Clause& l, const Clause& m);
  std::optional<Clause> check_subsumption_resolution(const Clause& l, const Clause& m,
                                                     EncodingKind kind);

  const SessionStats& stats() const { return stats_; }
  const SessionConfig& config() const { return config_; }

  /// Introspection for tests and the benchmark harness. The solver holds
  /// whatever the most recent check loaded.
  const SatSolver& solver() const { return solver_; }
  const MatchSet& match_set() const { return ms_; }
  TermBank& bank() { return bank_; }
  const SymbolTable& symbols() const { return symbols_; }

  /// Accumulated measurements for the most recent pair.
  struct PairMetrics {
    std::size_t entries = 0;
    std::size_t vars = 0;
    std::size_t clauses = 0;  // summed over the encodings loaded for this pair
    std::size_t amo_groups = 0;
    std::uint64_t sat_calls = 0;
    std::uint64_t conflicts = 0;
    bool pruned() const { return sat_calls == 0; }
  };
  const PairMetrics& last_pair() const { return last_; }

private:
  void setup(const Clause& l, const Clause& m);
  SolveResult solve_tracked();

  TermBank& bank_;
  const SymbolTable& symbols_;
  SessionConfig config_;
  SatSolver solver_;
  MatchSet ms_;
  std::vector<ColumnVar> column_vars_;

  std::optional<std::pair<Clause, Clause>> current_;
  PruneFlags flags_{false, false};
  bool filled_ = false;

  SessionStats stats_;
  PairMetrics last_;
};

/// Indexed set of active clauses: ids are dense and assigned in insertion
/// order; removal leaves a hole. The per-predicate occurrence index answers
/// "which clauses could simplify M" without scanning everything.
class ClauseSet {
public:
  static constexpr std::uint32_t kNoExclude = 0xFFFFFFFFu;

  std::uint32_t add(Clause c);
  void remove(std::uint32_t id);

  bool contains(std::uint32_t id) const {
    return id < clauses_.size() && clauses_[id].has_value();
  }
  const Clause& get(std::uint32_t id) const { return *clauses_[id]; }

  /// Active ids in insertion order.
  std::vector<std::uint32_t> active() const;
  std::size_t size() const { return active_; }

  /// Candidate side premises for main premise m: clauses (excluding
  /// exclude_id) whose every predicate occurs in m, in insertion order.
  /// use_index = false scans linearly instead; results must agree (that is
  /// the index-transparency property).
  std::vector<std::uint32_t> candidates_for(const Clause& m, std::uint32_t exclude_id,
                                            bool use_index = true) const;

private:
  std::vector<std::optional<Clause>> clauses_;
  std::unordered_map<PredId, std::vector<std::uint32_t>> index_;  // stale ids filtered on read
  std::size_t active_ = 0;
};

struct SimplifyOutcome {
  enum class Kind { Subsumed, SimplifiedTo, Unchanged };
  Kind kind = Kind::Unchanged;
  std::uint32_t by = 0;           // side premise that fired
  std::uint32_t replacement = 0;  // id of the conclusion clause (SimplifiedTo)
};

/// One forward-simplification round for clause m_id against the rest of f:
/// every candidate is tried for subsumption (first hit removes m_id and
/// wins); the first subsumption-resolution conclusion is remembered but the
/// subsumption scan continues. If only SR fired, m_id is replaced by the
/// conclusion (fresh id, appended).
SimplifyOutcome forward_simplify(Session& session, ClauseSet& f, std::uint32_t m_id);

struct SimplifyEvent {
  enum class Kind { Removed, Replaced };
  Kind kind;
  std::uint32_t target;
  std::uint32_t by;
  std::uint32_t replacement;  // valid when kind == Replaced
};

/// Repeated forward passes over f until nothing changes. Terminates because
/// every event strictly shrinks the total literal count of f.
std::vector<SimplifyEvent> simplify_to_fixpoint(Session& session, ClauseSet& f);

}  // namespace subsume
