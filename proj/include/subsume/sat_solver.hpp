#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <vector>

#include "subsume/matching.hpp"

namespace subsume {

/// Propositional literal, packed as (var << 1) | sign.
class SatLit {
public:
  SatLit() : bits_(0) {}
  SatLit(std::uint32_t var, bool positive) : bits_((var << 1) | (positive ? 1u : 0u)) {}

  std::uint32_t var() const { return bits_ >> 1; }
  bool positive() const { return bits_ & 1u; }
  SatLit negated() const { return SatLit(var(), !positive()); }

  bool operator==(const SatLit&) const = default;

private:
  std::uint32_t bits_;
};

enum class SolveResult { Sat, Unsat, Aborted };

/// Substitution-aware SAT solver.
///
/// Variables may carry a matching substitution. Whenever such a variable is
/// assigned true, its bindings are merged into a global binding trail; a
/// clash is a theory conflict explained by the binary clause ~v | ~w, where
/// w is the first conflicting true variable on the trail. AtMostOne groups
/// are propagated natively (one true member forces the rest false).
///
/// The search is classic DPLL: pick the lowest-id unassigned variable, try
/// true first, backtrack chronologically flipping the deepest untried
/// decision. With Config::learn_clauses set, conflicts are instead analyzed
/// to a 1UIP clause with non-chronological backjumping; both modes return
/// the same verdicts. Instances here are tiny, so constraints are scanned
/// directly rather than watched.
class SatSolver {
public:
  struct Config {
    bool learn_clauses = false;
    std::uint64_t conflict_budget = 0;  // per solve() call; 0 = unlimited
    bool paranoid = false;  // verify the theory invariant at every propagation fixpoint
  };

  struct Counters {
    std::uint64_t solves = 0;
    std::uint64_t decisions = 0;
    std::uint64_t propagations = 0;
    std::uint64_t conflicts = 0;
    std::uint64_t learned = 0;
  };

  SatSolver() = default;
  explicit SatSolver(Config config) : config_(config) {}

  /// Fresh variable, optionally carrying a substitution. Pre-solve only.
  std::uint32_t new_variable(std::optional<Substitution> subst = std::nullopt);

  void add_clause(std::vector<SatLit> lits);
  void add_at_most_one(std::vector<std::uint32_t> vars);

  /// Decide the loaded instance. The solver is returned to a pristine
  /// reusable state afterwards regardless of the verdict; on Sat the model
  /// is kept separately and readable through model_value(). Aborted means
  /// the conflict budget ran out, which is *not* an UNSAT claim.
  SolveResult solve();

  bool model_value(std::uint32_t var) const { return model_[var] != 0; }

  std::size_t num_variables() const { return value_.size(); }
  const Substitution* binding(std::uint32_t var) const {
    return subst_[var] ? &*subst_[var] : nullptr;
  }
  /// Problem clauses as loaded (learned clauses excluded).
  const std::vector<std::vector<SatLit>>& clauses() const { return clauses_; }
  const std::vector<std::vector<std::uint32_t>>& at_most_one_groups() const { return amo_; }
  const Counters& counters() const { return counters_; }
  Config& config() { return config_; }

  /// Drop clauses, groups and learned clauses but keep variables and their
  /// substitutions, so several encodings can share one variable space.
  void reset_constraints();
  /// Full reset: variables included.
  void clear();

  /// DIMACS-like dump of the loaded instance, extended with
  ///   c bind <var> <x> <term>   one line per binding of a variable
  ///   amo <v1> <v2> ... 0       AtMostOne group
  /// Variables are 1-based as in DIMACS. For bug reports, not a stable
  /// interface.
  void dump(std::ostream& out,
            const std::function<std::string(TermRef)>& term_printer = {}) const;

private:
  static constexpr std::uint32_t kNoReason = 0xFFFFFFFFu;
  static constexpr std::uint32_t kLearnedBit = 0x40000000u;
  static constexpr std::uint32_t kArenaBit = 0x80000000u;

  struct Level {
    std::uint32_t var;       // decision variable opening this level
    std::size_t trail_size;  // assignment trail height before the decision
    BindingTrail::Mark bind_mark;
    bool flipped;  // chronological mode: has the opposite value been tried?
  };

  const std::vector<SatLit>& reason_clause(std::uint32_t ref) const;
  std::uint32_t arena_reason(SatLit a, SatLit b);

  // Assign lit (recording reason for learning mode) and, for a true
  // substitution-carrying variable, merge its bindings. Returns the theory
  // conflict clause on a clash, nullptr otherwise.
  const std::vector<SatLit>* assign(SatLit lit, std::uint32_t reason);

  // Propagate clauses and AtMostOne groups to fixpoint; nullptr = no conflict.
  const std::vector<SatLit>* propagate();
  const std::vector<SatLit>* scan_clause(std::uint32_t ref, bool& changed);

  bool analyze_and_backjump(const std::vector<SatLit>& conflict,
                            const std::vector<SatLit>*& next_conflict);

  std::uint32_t current_level() const { return static_cast<std::uint32_t>(levels_.size()); }
  void undo_top_level();
  void restore_pristine();
  void check_theory_invariant() const;

  Config config_;

  std::vector<signed char> value_;  // -1 unassigned / 0 false / 1 true
  std::vector<std::optional<Substitution>> subst_;
  std::vector<std::vector<SatLit>> clauses_;
  std::vector<std::vector<SatLit>> learned_;
  std::vector<std::vector<SatLit>> reason_arena_;  // materialized AMO/theory reasons
  std::vector<std::vector<std::uint32_t>> amo_;
  bool has_empty_clause_ = false;

  std::vector<std::uint32_t> trail_;
  std::vector<Level> levels_;
  BindingTrail bindings_;
  std::vector<std::uint32_t> reason_;
  std::vector<std::uint32_t> level_of_;
  std::vector<SatLit> conflict_buf_;

  std::vector<signed char> model_;
  Counters counters_;
};

}  // namespace subsume
