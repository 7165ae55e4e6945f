#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "subsume/term.hpp"

namespace subsume {

struct Literal {
  bool positive;
  PredId pred;
  std::vector<TermRef> args;

  bool operator==(const Literal&) const = default;

  /// Same predicate and argument list, ignoring polarity.
  bool same_atom(const Literal& other) const {
    return pred == other.pred && args == other.args;
  }
};

/// A clause is an ordered list of literals treated as a multiset, plus
/// cached header data the pruning checks rely on:
///   - per-predicate occurrence counts split by polarity,
///   - a 64-bit hashed predicate-set bitmask (bit = pred id mod 64).
/// Instances are only produced by normalize(), so duplicate literals and
/// tautologies never reach the engine.
class Clause {
public:
  struct HeaderEntry {
    PredId pred;
    std::uint32_t pos;
    std::uint32_t neg;
  };

  Clause() = default;  // the empty clause

  /// Normalize a raw literal list: duplicates removed (first occurrence
  /// kept), headers computed. Returns nullopt for tautologies (l and ~l
  /// over the same atom).
  static std::optional<Clause> normalize(const TermBank& bank, std::vector<Literal> literals,
                                         std::vector<std::string> var_names = {});

  const std::vector<Literal>& literals() const { return literals_; }
  std::size_t size() const { return literals_.size(); }
  bool empty() const { return literals_.empty(); }

  /// Header rows sorted by predicate id.
  const std::vector<HeaderEntry>& header() const { return header_; }
  std::uint64_t predicate_mask() const { return mask_; }

  /// One past the largest variable index occurring in the clause.
  unsigned num_variables() const { return num_vars_; }

  /// Display names per variable index (may be shorter than num_variables();
  /// printers fall back to X<i>).
  const std::vector<std::string>& var_names() const { return var_names_; }

  bool operator==(const Clause& other) const { return literals_ == other.literals_; }
  bool operator!=(const Clause& other) const { return literals_ != other.literals_; }

private:
  std::vector<Literal> literals_;
  std::vector<HeaderEntry> header_;
  std::uint64_t mask_ = 0;
  unsigned num_vars_ = 0;
  std::vector<std::string> var_names_;
};

inline std::size_t clause_cardinality(const Clause& c) { return c.size(); }

/// Is the predicate set of l a subset of the predicate set of m?
/// Bitmask may-subset filter first, exact header walk second.
bool predicate_set_included(const Clause& l, const Clause& m);

/// Is the (predicate, polarity) occurrence multiset of l included in m's?
bool polarity_multiset_included(const Clause& l, const Clause& m);

}  // namespace subsume
