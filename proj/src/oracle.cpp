#include "subsume/oracle.hpp"

#include <algorithm>

#include "subsume/errors.hpp"
#include "subsume/tptp.hpp"

namespace subsume::oracle {

namespace {

void check_bound(const Clause& l, std::size_t bound) {
  if (l.size() > bound)
    throw Error("oracle bound exceeded: |L| = " + std::to_string(l.size()) + " > " +
                std::to_string(bound));
}

struct SubsumeSearch {
  const TermBank& bank;
  const SymbolTable& symbols;
  const Clause& l;
  const Clause& m;
  BindingTrail trail;
  std::vector<char> used;

  bool rows_from(std::size_t i) {
    if (i == l.size()) return true;
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (used[j]) continue;
      for (const Substitution& s :
           match_literal(bank, symbols, l.literals()[i], m.literals()[j], false)) {
        auto mark = trail.try_extend(s);
        if (!mark) continue;
        used[j] = 1;
        if (rows_from(i + 1)) return true;
        used[j] = 0;
        trail.undo_to(*mark);
      }
    }
    return false;
  }
};

struct SrSearch {
  const TermBank& bank;
  const SymbolTable& symbols;
  const Clause& l;
  const Clause& m;
  std::size_t resolved;  // index of m'
  BindingTrail trail;

  // Assign every row either to ~m' or positively to any other literal of M;
  // at least one row must pick ~m'. Unlike subsumption, the leftover
  // condition is plain set inclusion — sigma may merge several literals of
  // L onto one target — so no usage bookkeeping on the columns.
  bool rows_from(std::size_t i, bool hit_resolved) {
    if (i == l.size()) return hit_resolved;
    // Option 1: sigma(l_i) = ~m'
    for (const Substitution& s :
         match_literal(bank, symbols, l.literals()[i], m.literals()[resolved], true)) {
      auto mark = trail.try_extend(s);
      if (!mark) continue;
      if (rows_from(i + 1, true)) return true;
      trail.undo_to(*mark);
    }
    // Option 2: sigma(l_i) = m_j for any j != resolved
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (j == resolved) continue;
      for (const Substitution& s :
           match_literal(bank, symbols, l.literals()[i], m.literals()[j], false)) {
        auto mark = trail.try_extend(s);
        if (!mark) continue;
        if (rows_from(i + 1, hit_resolved)) return true;
        trail.undo_to(*mark);
      }
    }
    return false;
  }
};

}  // namespace

bool subsumes(const TermBank& bank, const SymbolTable& symbols, const Clause& l, const Clause& m,
              std::size_t bound) {
  check_bound(l, bound);
  SubsumeSearch search{bank, symbols, l, m, {}, std::vector<char>(m.size(), 0)};
  return search.rows_from(0);
}

std::vector<Clause> subsumption_resolution_conclusions(const TermBank& bank,
                                                       const SymbolTable& symbols,
                                                       const Clause& l, const Clause& m,
                                                       std::size_t bound) {
  check_bound(l, bound);
  std::vector<Clause> conclusions;
  for (std::size_t resolved = 0; resolved < m.size(); ++resolved) {
    SrSearch search{bank, symbols, l, m, resolved, {}};
    if (!search.rows_from(0, false)) continue;
    std::vector<Literal> rest;
    for (std::size_t j = 0; j < m.size(); ++j)
      if (j != resolved) rest.push_back(m.literals()[j]);
    auto conclusion = Clause::normalize(bank, std::move(rest), m.var_names());
    if (!conclusion) continue;  // cannot happen for a normalized M
    if (std::find(conclusions.begin(), conclusions.end(), *conclusion) == conclusions.end())
      conclusions.push_back(std::move(*conclusion));
  }
  return conclusions;
}

std::optional<std::string> check_coherence(const TermBank& bank, const SymbolTable& symbols,
                                           const EngineResult& engine, const OracleResult& truth) {
  std::string report;
  if (engine.subsumed != truth.subsumed)
    report += "subsumption: engine says " + std::string(engine.subsumed ? "yes" : "no") +
              ", oracle says " + (truth.subsumed ? "yes" : "no") + "\n";

  if (engine.sr_conclusion && truth.sr_conclusions.empty()) {
    report += "subsumption resolution: engine concluded " +
              print_clause(bank, symbols, *engine.sr_conclusion) +
              ", oracle finds the rule inapplicable\n";
  } else if (engine.sr_conclusion) {
    if (std::find(truth.sr_conclusions.begin(), truth.sr_conclusions.end(),
                  *engine.sr_conclusion) == truth.sr_conclusions.end()) {
      report += "subsumption resolution: engine conclusion " +
                print_clause(bank, symbols, *engine.sr_conclusion) +
                " is not among the oracle's:\n";
      for (const Clause& c : truth.sr_conclusions)
        report += "    " + print_clause(bank, symbols, c) + "\n";
    }
  } else if (!truth.sr_conclusions.empty()) {
    report += "subsumption resolution: engine found nothing, oracle reaches " +
              print_clause(bank, symbols, truth.sr_conclusions.front()) + "\n";
  }

  if (report.empty()) return std::nullopt;
  return report;
}

}  // namespace subsume::oracle
