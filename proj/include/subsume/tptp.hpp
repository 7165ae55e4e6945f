#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "subsume/clause.hpp"
#include "subsume/errors.hpp"

namespace subsume {

struct ProblemEntry {
  std::string name;
  std::string role;
  Clause clause;
};

struct ProblemFile {
  std::vector<ProblemEntry> entries;
  /// Tautologies are dropped, not kept; each drop is recorded here.
  std::vector<std::string> warnings;
};

/// Parse a TPTP-CNF subset:
///
///   file    := ( cnf | comment )*
///   cnf     := 'cnf' '(' name ',' role ',' formula ')' '.'
///   formula := '$false' | disjunct ( '|' disjunct )*        (optionally parenthesized)
///   disjunct:= '~'? atom | term '=' term | term '!=' term
///   atom    := lower_word ( '(' term ( ',' term )* ')' )?
///   term    := variable | atom-shaped application
///
/// Uppercase-initial identifiers are variables (scoped per clause);
/// lowercase are symbols; '%' starts a line comment; LF and CRLF both work.
/// Symbols are interned on first sight with inferred arity. Throws
/// ParseError with line/column on malformed input, arity conflicts,
/// duplicate clause names, or fof/tff input.
ProblemFile parse_cnf(std::string_view text, TermBank& bank, SymbolTable& symbols);

std::string print_term(const TermBank& bank, const SymbolTable& symbols, TermRef t,
                       const std::vector<std::string>& var_names = {});
std::string print_literal(const TermBank& bank, const SymbolTable& symbols, const Literal& lit,
                          const std::vector<std::string>& var_names = {});

/// Inverse of parse_cnf's formula rule: literals joined by " | ", the empty
/// clause printed as "$false". parse(print(c)) is structurally identical
/// to c (variable names included, thanks to the X<i> fallback).
std::string print_clause(const TermBank& bank, const SymbolTable& symbols, const Clause& c);

void print_problem(std::ostream& out, const TermBank& bank, const SymbolTable& symbols,
                   const ProblemFile& problem);

}  // namespace subsume
