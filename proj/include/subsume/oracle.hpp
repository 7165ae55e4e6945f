#pragma once

#include <optional>
#include <string>
#include <vector>

#include "subsume/clause.hpp"
#include "subsume/matching.hpp"

namespace subsume::oracle {

/// Exponential brute-force deciders used as ground truth. They deliberately
/// depend only on the term and matching layers — never on the match set,
/// the solver or the encodings they are meant to check.

/// Does some substitution sigma make sigma(L) a sub-multiset of M?
/// Enumerates injective row -> column assignments depth-first, composing
/// matches on a trail. Throws Error when |L| exceeds the bound.
bool subsumes(const TermBank& bank, const SymbolTable& symbols, const Clause& l, const Clause& m,
              std::size_t bound = 8);

/// Every conclusion M \ {m'} reachable by subsumption resolution: some
/// sigma and partition L = L' (+) L'' with sigma(L') = {~m'} (L' nonempty)
/// and sigma(L'') a subset of M \ {m'}. The leftover condition is set
/// inclusion, not multiset inclusion as in subsumption: sigma may merge
/// several literals of L onto one literal of M. Enumerates every choice of
/// m' and every total map of L's literals onto {~m'} or any remaining
/// literal of M. Conclusions are deduplicated; an empty vector means the
/// rule does not apply.
std::vector<Clause> subsumption_resolution_conclusions(const TermBank& bank,
                                                       const SymbolTable& symbols,
                                                       const Clause& l, const Clause& m,
                                                       std::size_t bound = 8);

struct EngineResult {
  bool subsumed = false;
  std::optional<Clause> sr_conclusion;
};

struct OracleResult {
  bool subsumed = false;
  std::vector<Clause> sr_conclusions;
};

/// Empiric cross-check: verdict kinds must agree, and an engine conclusion
/// must be one the oracle also reaches. Returns nullopt on agreement, a
/// printable mismatch report otherwise.
std::optional<std::string> check_coherence(const TermBank& bank, const SymbolTable& symbols,
                                           const EngineResult& engine, const OracleResult& truth);

}  // namespace subsume::oracle
