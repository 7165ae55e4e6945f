// Acceptance gate for the simplification engine. Each criterion prints one
// PASS/FAIL line (details indented below it); the exit code is nonzero as
// soon as any criterion fails. Everything here goes through the public
// headers only.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <exception>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "subsume/encodings.hpp"
#include "subsume/engine.hpp"
#include "subsume/harness.hpp"
#include "subsume/oracle.hpp"
#include "subsume/tptp.hpp"

#include "test_util.hpp"

using namespace subsume;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<std::string> notes;

void note(std::string text) { notes.push_back(std::move(text)); }

class Checker {
public:
  void check(bool condition, const std::string& what) {
    if (condition) return;
    ok_ = false;
    note("failed: " + what);
  }
  bool ok() const { return ok_; }

private:
  bool ok_ = true;
};

int failures = 0;

void run(int number, const std::string& title, const std::function<void(Checker&)>& body) {
  Checker c;
  try {
    body(c);
  } catch (const std::exception& e) {
    c.check(false, std::string("unexpected exception: ") + e.what());
  }
  std::cout << "criterion " << number << " (" << title << "): " << (c.ok() ? "PASS" : "FAIL")
            << '\n';
  for (const std::string& line : notes) std::cout << "    " << line << '\n';
  notes.clear();
  if (!c.ok()) ++failures;
}

// --- 1: pinned example pairs -------------------------------------------------

const char* kL1 = "p(X1,X2) | p(f(X2),X3)";
const char* kM1 = "p(g(Y1),c) | ~p(f(c),e)";

void golden_pairs(Checker& c) {
  auto start = Clock::now();

  struct Case {
    const char* l;
    const char* m;
    const char* conclusion;  // nullptr = the rule must not apply
  };
  const Case cases[] = {
      {kL1, kM1, "p(g(Y1),c)"},
      {"p(X1) | q(X2)", "~p(Y) | ~q(c)", nullptr},
      {"p(X1) | q(X1,X2) | ~p(X2)", "~p(Y) | q(Y,Y)", nullptr},
      {"p(X1) | q(X2) | r(X3)", "~p(Y1) | q(c)", nullptr},
  };

  for (const Case& cs : cases) {
    test_util::Fixture fx;
    Session session(fx.bank, fx.symbols);
    Clause l = fx.clause(cs.l);
    Clause m = fx.clause(cs.m);
    std::string id = std::string(cs.l) + "  vs  " + cs.m;

    c.check(!session.check_subsumption(l, m), id + ": unexpectedly subsumed");
    for (EncodingKind kind : {EncodingKind::SrDirect, EncodingKind::SrIndirect}) {
      auto conclusion = session.check_subsumption_resolution(l, m, kind);
      if (cs.conclusion) {
        c.check(conclusion.has_value(), id + ": resolution not found");
        if (conclusion)
          c.check(fx.print(*conclusion) == cs.conclusion,
                  id + ": wrong conclusion " + fx.print(*conclusion));
      } else {
        c.check(!conclusion.has_value(), id + ": unexpected conclusion");
      }
    }
  }

  // the fourth pair must fall to the header prune alone
  {
    test_util::Fixture fx;
    Session session(fx.bank, fx.symbols);
    Clause l = fx.clause("p(X1) | q(X2) | r(X3)");
    Clause m = fx.clause("~p(Y1) | q(c)");
    session.check_subsumption(l, m);
    session.check_subsumption_resolution(l, m, EncodingKind::SrDirect);
    session.check_subsumption_resolution(l, m, EncodingKind::SrIndirect);
    c.check(session.stats().sat_calls == 0, "pruned pair reached the solver");
    c.check(session.stats().pruned_subsumption == 1 && session.stats().pruned_sr == 2,
            "prune counters off");  // one resolution attempt per encoding
  }

  note("four pairs, both encodings each, decided in " +
       std::to_string(static_cast<long>(seconds_since(start) * 1e6)) + " us");
}

// --- 2: constraint-level shape of the two encodings --------------------------

// +(var+1) / -(var+1) representation so clause sets compare as plain ints
std::vector<std::vector<int>> canonical(const std::vector<std::vector<SatLit>>& clauses) {
  std::vector<std::vector<int>> out;
  for (const auto& clause : clauses) {
    std::vector<int> c;
    for (SatLit lit : clause)
      c.push_back(lit.positive() ? static_cast<int>(lit.var()) + 1
                                 : -(static_cast<int>(lit.var()) + 1));
    std::sort(c.begin(), c.end());
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end());
  return out;
}

void instance_shape(Checker& c) {
  test_util::Fixture fx;
  Clause l = fx.clause(kL1);
  Clause m = fx.clause(kM1);

  SatSolver solver;
  MatchSet ms;
  ms.fill(fx.bank, fx.symbols, l, m, solver);

  c.check(ms.entries().size() == 3, "expected exactly three matches");
  if (ms.entries().size() != 3) return;

  // the three matches, in creation order, with their substitutions
  FnId f = fx.symbols.intern_function("f", 1);
  FnId g = fx.symbols.intern_function("g", 1);
  TermRef ct = fx.bank.app(fx.symbols.intern_function("c", 0), {});
  TermRef et = fx.bank.app(fx.symbols.intern_function("e", 0), {});
  TermRef gy1 = fx.bank.app(g, {TermRef::var(0)});
  TermRef fc = fx.bank.app(f, {ct});

  struct Expected {
    std::uint32_t row, col;
    bool positive;
    std::vector<Binding> bindings;
  };
  const Expected expected[] = {
      {0, 0, true, {{0, gy1}, {1, ct}}},
      {0, 1, false, {{0, fc}, {1, et}}},
      {1, 1, false, {{1, ct}, {2, et}}},
  };
  for (std::size_t i = 0; i < 3; ++i) {
    const MatchEntry& entry = ms.entries()[i];
    const Expected& want = expected[i];
    std::string id = "match " + std::to_string(i);
    c.check(entry.row == want.row && entry.col == want.col && entry.positive == want.positive,
            id + ": wrong cell or polarity");
    c.check(entry.var == i, id + ": variable ids must follow creation order");
    c.check(entry.subst.bindings() == want.bindings, id + ": wrong substitution");
    const Substitution* attached = solver.binding(entry.var);
    c.check(attached && *attached == entry.subst, id + ": solver variable lost its bindings");
  }

  EncodingStats direct = encode_sr_direct(ms, solver);
  c.check(direct.feasible, "direct: must be feasible");
  c.check(direct.existence == 1, "direct: one existence clause");
  c.check(direct.completeness == 2, "direct: two completeness clauses");
  c.check(direct.uniqueness == 0, "direct: no uniqueness clauses");
  c.check(direct.coherence == 0, "direct: no coherence clauses");
  c.check(direct.structurality == 0 && direct.amo_groups == 0,
          "direct: no structural variables or groups");
  c.check(solver.num_variables() == 3, "direct: three variables, all carrying bindings");
  c.check(canonical(solver.clauses()) ==
              std::vector<std::vector<int>>{{1, 2}, {2, 3}, {3}},
          "direct: clause set differs");

  solver.reset_constraints();
  std::vector<ColumnVar> columns;
  EncodingStats indirect = encode_sr_indirect(ms, solver, columns);
  c.check(indirect.feasible, "indirect: must be feasible");
  c.check(solver.num_variables() == 4, "indirect: one structural variable on top");
  c.check(columns.size() == 1 && columns[0].col == 1 && columns[0].var == 3,
          "indirect: structural variable must stand for column 1");
  c.check(solver.binding(3) == nullptr, "indirect: structural variable carries no bindings");
  c.check(indirect.structurality == 3, "indirect: three structurality clauses");
  c.check(indirect.existence == 1, "indirect: unit existence clause");
  c.check(indirect.completeness == 2, "indirect: two completeness clauses");
  c.check(indirect.uniqueness == 0 && indirect.coherence == 0,
          "indirect: no uniqueness or coherence clauses");
  c.check(indirect.amo_groups == 1 &&
              solver.at_most_one_groups() == std::vector<std::vector<std::uint32_t>>{{3}},
          "indirect: one at-most-one group over the structural variable");
  c.check(canonical(solver.clauses()) ==
              std::vector<std::vector<int>>{{-4, 2, 3}, {-3, 4}, {-2, 4}, {1, 2}, {3}, {4}},
          "indirect: clause set differs");

  note("both instances match the expected constraint sets literal for literal");
}

// --- 3 & 4: agreement with the oracle and between the encodings ---------------

struct EquivalenceOutcome {
  std::uint64_t universe_clauses = 0;
  std::uint64_t exhaustive_pairs = 0;
  std::uint64_t oracle_mismatches = 0;
  std::uint64_t encoding_mismatches = 0;
  std::string first_oracle_mismatch;
  std::string first_encoding_mismatch;
  double exhaustive_seconds = 0;
  VerifyReport seeded;
  double seeded_seconds = 0;
};

EquivalenceOutcome run_equivalence() {
  EquivalenceOutcome out;

  // exhaustive universe: two unary predicates over one variable, a constant
  // and nestings of f up to depth two; clauses are all duplicate-free,
  // non-tautological literal sets of size one to three
  TermBank bank;
  SymbolTable symbols;
  PredId p = symbols.intern_predicate("p", 1, false);
  PredId q = symbols.intern_predicate("q", 1, false);
  TermRef ct = bank.app(symbols.intern_function("c", 0), {});
  FnId f = symbols.intern_function("f", 1);
  TermRef fc = bank.app(f, {ct});
  const TermRef terms[] = {TermRef::var(0), ct, fc, bank.app(f, {fc})};

  std::vector<Literal> literals;
  for (PredId pred : {p, q})
    for (TermRef t : terms)
      for (bool positive : {true, false}) literals.push_back({positive, pred, {t}});

  std::vector<Clause> universe;
  auto keep = [&](std::vector<Literal> lits) {
    if (auto clause = Clause::normalize(bank, std::move(lits))) universe.push_back(*clause);
  };
  for (std::size_t i = 0; i < literals.size(); ++i) {
    keep({literals[i]});
    for (std::size_t j = i + 1; j < literals.size(); ++j) {
      keep({literals[i], literals[j]});
      for (std::size_t k = j + 1; k < literals.size(); ++k)
        keep({literals[i], literals[j], literals[k]});
    }
  }
  out.universe_clauses = universe.size();

  auto start = Clock::now();
  Session session(bank, symbols);
  for (const Clause& l : universe) {
    for (const Clause& m : universe) {
      ++out.exhaustive_pairs;
      bool subsumed = session.check_subsumption(l, m);
      auto direct = session.check_subsumption_resolution(l, m, EncodingKind::SrDirect);
      auto indirect = session.check_subsumption_resolution(l, m, EncodingKind::SrIndirect);

      std::string id;
      auto name_pair = [&]() {
        if (id.empty())
          id = print_clause(bank, symbols, l) + "  vs  " + print_clause(bank, symbols, m);
        return id;
      };

      if (direct.has_value() != indirect.has_value()) {
        if (out.encoding_mismatches++ == 0)
          out.first_encoding_mismatch = name_pair() + ": direct " +
                                        (direct ? "finds a resolution" : "finds none") +
                                        ", indirect disagrees";
      }

      oracle::OracleResult truth;
      truth.subsumed = oracle::subsumes(bank, symbols, l, m);
      truth.sr_conclusions = oracle::subsumption_resolution_conclusions(bank, symbols, l, m);

      bool fine = true;
      for (const auto* conclusion : {&direct, &indirect}) {
        if (!*conclusion) continue;
        if (auto r = oracle::check_coherence(bank, symbols, {subsumed, **conclusion}, truth)) {
          fine = false;
          if (out.oracle_mismatches == 0) out.first_oracle_mismatch = name_pair() + ": " + *r;
        }
      }
      if (!direct && !indirect) {
        if (auto r = oracle::check_coherence(bank, symbols, {subsumed, std::nullopt}, truth)) {
          fine = false;
          if (out.oracle_mismatches == 0) out.first_oracle_mismatch = name_pair() + ": " + *r;
        }
      }
      if (!fine) ++out.oracle_mismatches;
    }
  }
  out.exhaustive_seconds = seconds_since(start);

  start = Clock::now();
  VerifyOptions options;
  options.seed = 1;
  options.count = 10000;
  options.max_literals = 4;
  out.seeded = run_verify(options);
  out.seeded_seconds = seconds_since(start);
  return out;
}

void oracle_equivalence(Checker& c, const EquivalenceOutcome& out) {
  note(std::to_string(out.universe_clauses) + " clauses in the universe, " +
       std::to_string(out.exhaustive_pairs) + " ordered pairs checked in " +
       std::to_string(out.exhaustive_seconds) + " s");
  note("10000 seeded random pairs checked in " + std::to_string(out.seeded_seconds) + " s");
  c.check(out.exhaustive_pairs > 0, "empty universe");
  c.check(out.oracle_mismatches == 0,
          std::to_string(out.oracle_mismatches) +
              " oracle mismatches, first: " + out.first_oracle_mismatch);
  c.check(out.seeded.pairs == 10000, "seeded batch incomplete");
  c.check(out.seeded.mismatches == 0,
          std::to_string(out.seeded.mismatches) + " seeded mismatches, first: " +
              (out.seeded.reports.empty() ? std::string("-") : out.seeded.reports.front()));
}

void encoding_equivalence(Checker& c, const EquivalenceOutcome& out) {
  c.check(out.encoding_mismatches == 0,
          std::to_string(out.encoding_mismatches) +
              " encoding disagreements, first: " + out.first_encoding_mismatch);
  note("every exhaustive pair got identical verdicts from both encodings");
  note("the seeded batch cross-checks the encodings per pair as well");
}

// --- 5: clause-count scaling on fully negative match matrices -----------------

void clause_count_scaling(Checker& c) {
  TermBank bank;
  SymbolTable symbols;
  PredId p = symbols.intern_predicate("p", 1, false);

  for (unsigned n : {4u, 8u, 12u}) {
    std::vector<Literal> ls, ms_lits;
    for (unsigned i = 0; i < n; ++i) ls.push_back({true, p, {TermRef::var(i)}});
    for (unsigned j = 0; j < n; ++j) {
      FnId k = symbols.intern_function("k" + std::to_string(j), 0);
      ms_lits.push_back({false, p, {bank.app(k, {})}});
    }
    Clause l = *Clause::normalize(bank, std::move(ls));
    Clause m = *Clause::normalize(bank, std::move(ms_lits));

    SatSolver solver;
    MatchSet ms;
    ms.fill(bank, symbols, l, m, solver);
    std::string id = "n=" + std::to_string(n);
    c.check(ms.entries().size() == std::size_t{n} * n, id + ": matrix not dense");

    EncodingStats direct = encode_sr_direct(ms, solver);
    std::size_t pairs_of_columns = std::size_t{n} * (n - 1) / 2;
    c.check(direct.uniqueness == pairs_of_columns * n * n,
            id + ": direct uniqueness count " + std::to_string(direct.uniqueness));

    solver.reset_constraints();
    std::vector<ColumnVar> columns;
    EncodingStats indirect = encode_sr_indirect(ms, solver, columns);
    std::size_t entries = ms.entries().size();
    c.check(indirect.total_clauses() == entries + 2 * std::size_t{n} + 1,
            id + ": indirect total " + std::to_string(indirect.total_clauses()));
    c.check(indirect.total_clauses() <= 3 * entries, id + ": indirect must stay linear");

    note(id + ": entries=" + std::to_string(entries) +
         " direct_uniqueness=" + std::to_string(direct.uniqueness) +
         " indirect_total=" + std::to_string(indirect.total_clauses()));
  }
}

// --- 6: multiset semantics of subsumption -------------------------------------

void multiset_semantics(Checker& c) {
  test_util::Fixture fx;
  Session session(fx.bank, fx.symbols);
  Clause two_p = fx.clause("p(X) | p(Y)");
  Clause p_and_q = fx.clause("p(X) | q(Z)");
  Clause m = fx.clause("p(c) | q(d)");

  bool engine_two_p = session.check_subsumption(two_p, m);
  bool oracle_two_p = oracle::subsumes(fx.bank, fx.symbols, two_p, m);
  c.check(!engine_two_p, "p(X) | p(Y) must not subsume p(c) | q(d)");
  c.check(engine_two_p == oracle_two_p, "engine and oracle disagree on the blocked pair");

  bool engine_pq = session.check_subsumption(p_and_q, m);
  bool oracle_pq = oracle::subsumes(fx.bank, fx.symbols, p_and_q, m);
  c.check(engine_pq, "p(X) | q(Z) must subsume p(c) | q(d)");
  c.check(engine_pq == oracle_pq, "engine and oracle disagree on the allowed pair");

  note("two occurrences of p cannot share one target literal; one p and one q can");
}

// --- 7: commutative predicates -------------------------------------------------

void commutative_predicates(Checker& c) {
  struct World {
    TermBank bank;
    SymbolTable symbols;
    Clause l, m_straight, m_flipped;

    explicit World(bool commutative) {
      PredId eq = symbols.intern_predicate("=", 2, commutative);
      PredId r = symbols.intern_predicate("r", 0, false);
      TermRef b = bank.app(symbols.intern_function("b", 0), {});
      TermRef ct = bank.app(symbols.intern_function("c", 0), {});
      l = *Clause::normalize(bank, {{true, eq, {TermRef::var(0), b}}});
      m_straight = *Clause::normalize(bank, {{true, eq, {ct, b}}, {true, r, {}}});
      m_flipped = *Clause::normalize(bank, {{true, eq, {b, ct}}, {true, r, {}}});
    }
  };

  World comm(true);
  World plain(false);
  Session comm_session(comm.bank, comm.symbols);
  Session plain_session(plain.bank, plain.symbols);

  struct Probe {
    World* world;
    Session* session;
    const Clause* m;
    bool expected;
    const char* what;
  };
  const Probe probes[] = {
      {&comm, &comm_session, &comm.m_straight, true, "commutative, straight orientation"},
      {&comm, &comm_session, &comm.m_flipped, true, "commutative, flipped orientation"},
      {&plain, &plain_session, &plain.m_straight, true, "plain, straight orientation"},
      {&plain, &plain_session, &plain.m_flipped, false, "plain, flipped orientation"},
  };
  for (const Probe& probe : probes) {
    bool engine = probe.session->check_subsumption(probe.world->l, *probe.m);
    bool truth = oracle::subsumes(probe.world->bank, probe.world->symbols, probe.world->l, *probe.m);
    c.check(engine == probe.expected, std::string(probe.what) + ": wrong verdict");
    c.check(engine == truth, std::string(probe.what) + ": engine and oracle disagree");
  }

  // no negative literal anywhere, so the resolution rule stays silent
  c.check(!comm_session.check_subsumption_resolution(comm.l, comm.m_straight).has_value(),
          "resolution must not apply");
  c.check(oracle::subsumption_resolution_conclusions(comm.bank, comm.symbols, comm.l,
                                                     comm.m_straight)
              .empty(),
          "oracle must not find a resolution either");

  note("the flipped orientation is the one only commutativity can reach");
}

// --- 8: benchmark aggregates ----------------------------------------------------

void bench_aggregates(Checker& c) {
  TermBank bank;
  SymbolTable symbols;
  BenchOptions options;
  options.seed = 7;
  options.count = 400;
  auto pairs = synthetic_pairs(options, bank, symbols);

  options.encoding = EncodingKind::SrDirect;
  BenchReport direct = run_bench(options, bank, symbols, pairs);
  options.encoding = EncodingKind::SrIndirect;
  BenchReport indirect = run_bench(options, bank, symbols, pairs);

  c.check(direct.rows.size() == 400 && indirect.rows.size() == 400, "row count off");
  c.check(direct.subsumed + direct.sr + direct.none == 400, "verdict counts must add up");
  bool verdicts_equal = direct.subsumed == indirect.subsumed && direct.sr == indirect.sr &&
                        direct.none == indirect.none;
  for (std::size_t i = 0; i < direct.rows.size() && i < indirect.rows.size(); ++i)
    verdicts_equal = verdicts_equal && direct.rows[i].verdict == indirect.rows[i].verdict;
  c.check(verdicts_equal, "the encodings must agree on every verdict");
  c.check(direct.mean_time_ns > 0 && indirect.mean_time_ns > 0, "timings must be positive");
  c.check(direct.stddev_time_ns >= 0 && indirect.stddev_time_ns >= 0, "negative deviation");

  auto line = [](const char* name, const BenchReport& r) {
    return std::string(name) + ": pairs=" + std::to_string(r.rows.size()) +
           " subsumed=" + std::to_string(r.subsumed) + " sr=" + std::to_string(r.sr) +
           " none=" + std::to_string(r.none) +
           " mean_ns=" + std::to_string(static_cast<long long>(r.mean_time_ns)) +
           " stddev_ns=" + std::to_string(static_cast<long long>(r.stddev_time_ns));
  };
  note(line("direct  ", direct));
  note(line("indirect", indirect));
  note("timing figures are environment-bound; only the verdict columns are asserted");
}

}  // namespace

int main() {
  std::cout << "acceptance: clause simplification engine\n";

  run(1, "pinned example pairs", golden_pairs);
  run(2, "constraint-level instance shape", instance_shape);

  EquivalenceOutcome equivalence = run_equivalence();
  run(3, "oracle equivalence, exhaustive and seeded",
      [&](Checker& c) { oracle_equivalence(c, equivalence); });
  run(4, "direct and indirect encodings agree",
      [&](Checker& c) { encoding_equivalence(c, equivalence); });

  run(5, "clause-count scaling", clause_count_scaling);
  run(6, "multiset subsumption semantics", multiset_semantics);
  run(7, "commutative predicates", commutative_predicates);
  run(8, "benchmark aggregates", bench_aggregates);

  if (failures != 0) {
    std::cout << failures << " criteria failed\n";
    return 1;
  }
  std::cout << "all criteria passed\n";
  return 0;
}
