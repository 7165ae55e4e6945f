#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "subsume/clause.hpp"

namespace subsume {

struct GenParams {
  unsigned max_literals = 4;    // literals per clause drawn from 1..max_literals
  unsigned num_predicates = 3;  // 2..4
  bool commutative = true;      // make one binary predicate commutative
  unsigned num_functions = 2;   // 0..3 function symbols of arity <= 2
  unsigned max_vars = 3;        // variable indices drawn from 0..max_vars-1
  unsigned max_depth = 3;
};

/// Deterministic random clause pairs. pair(i) depends only on (seed, i) —
/// each pair gets its own splitmix64 stream — so any sharding of the index
/// space regenerates identical pairs. The small shared variable pool is
/// what makes binding clashes (the interesting cases) common.
class ClausePairGen {
public:
  ClausePairGen(TermBank& bank, SymbolTable& symbols, std::uint64_t seed, GenParams params = {});

  std::pair<Clause, Clause> pair(std::uint64_t index);

private:
  std::uint64_t draw(std::uint64_t& state, std::uint64_t n);
  Clause clause(std::uint64_t& state);
  Literal literal(std::uint64_t& state);
  TermRef term(std::uint64_t& state, unsigned depth);

  TermBank& bank_;
  SymbolTable& symbols_;
  std::uint64_t seed_;
  GenParams params_;
  std::vector<PredId> preds_;
  std::vector<FnId> fns_;  // nullary first, then by arity
};

}  // namespace subsume
