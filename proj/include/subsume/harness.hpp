#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "subsume/engine.hpp"
#include "subsume/oracle.hpp"
#include "subsume/random_gen.hpp"

namespace subsume {

/// Run one pair through the subsumption check, both SR encodings and the
/// brute-force oracle. nullopt = full agreement; otherwise a printable
/// report of what diverged (encoding disagreement or engine/oracle
/// mismatch).
std::optional<std::string> verify_pair(Session& session, const Clause& l, const Clause& m,
                                       std::size_t oracle_bound = 8);

struct VerifyOptions {
  std::uint64_t seed = 1;
  std::uint64_t count = 10000;
  unsigned max_literals = 4;
  unsigned jobs = 1;  // worker threads; sharding never changes the pairs
};

struct VerifyReport {
  std::uint64_t pairs = 0;
  std::uint64_t mismatches = 0;
  std::vector<std::string> reports;  // one per mismatching pair, index order
};

/// Generate VerifyOptions::count random pairs and verify each. Workers use
/// independent term banks; pair content only depends on (seed, index).
VerifyReport run_verify(const VerifyOptions& options);

struct BenchOptions {
  EncodingKind encoding = EncodingKind::SrIndirect;
  std::uint64_t seed = 1;
  std::uint64_t count = 1000;  // synthetic pairs when no corpus is given
  unsigned max_literals = 4;
};

struct BenchRow {
  std::uint64_t pair_id;
  std::size_t l_size, m_size, entries;
  bool pruned;          // the whole pair was decided without a SAT call
  std::string verdict;  // subsumed | sr | none
  std::size_t vars, clauses, amo_groups;
  std::uint64_t conflicts;
  std::uint64_t time_ns;
};

struct BenchReport {
  std::vector<BenchRow> rows;
  std::uint64_t subsumed = 0, sr = 0, none = 0;
  double mean_time_ns = 0;
  double stddev_time_ns = 0;
};

/// Synthetic pair stream for the options.
std::vector<std::pair<Clause, Clause>> synthetic_pairs(const BenchOptions& options, TermBank& bank,
                                                       SymbolTable& symbols);

/// Time a full simplification attempt (subsumption, then SR if needed) per
/// pair under the chosen encoding, then recheck with the other encoding and
/// insist on identical verdicts — a cross-encoding divergence throws Error.
BenchReport run_bench(const BenchOptions& options, TermBank& bank, const SymbolTable& symbols,
                      const std::vector<std::pair<Clause, Clause>>& pairs);

/// Fixed schema: pair_id,|L|,|M|,entries,pruned,verdict,vars,clauses,
/// amo_groups,conflicts,time_ns
void write_csv(std::ostream& out, const std::vector<BenchRow>& rows);

}  // namespace subsume
