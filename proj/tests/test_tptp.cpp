#include <doctest.h>

#include <sstream>

#include "subsume/tptp.hpp"

#include "test_util.hpp"

using namespace subsume;

TEST_CASE("parse the pinned example clauses") {
  TermBank bank;
  SymbolTable symbols;
  ProblemFile f = parse_cnf("cnf(l1, axiom, p(X1,X2) | p(f(X2),X3)).", bank, symbols);
  REQUIRE(f.entries.size() == 1);
  CHECK(f.entries[0].name == "l1");
  CHECK(f.entries[0].role == "axiom");
  const Clause& l1 = f.entries[0].clause;
  CHECK(l1.size() == 2);
  CHECK(l1.num_variables() == 3);
  CHECK(l1.literals()[0].positive);
  CHECK(l1.literals()[0].args[0] == TermRef::var(0));

  TermBank bank2;
  SymbolTable symbols2;
  ProblemFile g = parse_cnf("cnf(m2, axiom, ~p(Y) | ~q(c)).", bank2, symbols2);
  const Clause& m2 = g.entries[0].clause;
  CHECK(m2.size() == 2);
  CHECK(!m2.literals()[0].positive);
  CHECK(!m2.literals()[1].positive);
}

TEST_CASE("equality sugar") {
  TermBank bank;
  SymbolTable symbols;
  ProblemFile f = parse_cnf("cnf(e, axiom, a = b | c != d).", bank, symbols);
  const Clause& e = f.entries[0].clause;
  REQUIRE(e.size() == 2);
  PredId eq = symbols.equality();
  CHECK(e.literals()[0].pred == eq);
  CHECK(e.literals()[0].positive);
  CHECK(e.literals()[1].pred == eq);
  CHECK(!e.literals()[1].positive);
  CHECK(symbols.predicate_commutative(eq));
  CHECK(print_clause(bank, symbols, e) == "a = b | c != d");
}

TEST_CASE("variables may appear as equality sides") {
  TermBank bank;
  SymbolTable symbols;
  ProblemFile f = parse_cnf("cnf(e, axiom, X = f(Y)).", bank, symbols);
  const Clause& e = f.entries[0].clause;
  CHECK(e.literals()[0].args[0] == TermRef::var(0));
}

TEST_CASE("comments, whitespace and CRLF are accepted") {
  TermBank bank;
  SymbolTable symbols;
  std::string text =
      "% leading comment\r\n"
      "cnf(a, axiom, p(c)). % trailing comment\r\n"
      "\r\n"
      "cnf(b, hypothesis, (q(d) | p(d))).\r\n";
  ProblemFile f = parse_cnf(text, bank, symbols);
  CHECK(f.entries.size() == 2);
  CHECK(f.entries[1].role == "hypothesis");
  CHECK(f.entries[1].clause.size() == 2);
}

TEST_CASE("syntax errors carry line and column") {
  TermBank bank;
  SymbolTable symbols;
  try {
    parse_cnf("cnf(a, axiom, p(c)).\ncnf(b, axiom, p(| )).", bank, symbols);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() > 1);
  }
}

TEST_CASE("arity conflicts are reported with position") {
  TermBank bank;
  SymbolTable symbols;
  CHECK_THROWS_AS(parse_cnf("cnf(a, axiom, p(c) | p(c, d)).", bank, symbols), ParseError);
}

TEST_CASE("fof input names the unsupported dialect") {
  TermBank bank;
  SymbolTable symbols;
  try {
    parse_cnf("fof(a, axiom, ![X]: p(X)).", bank, symbols);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("unsupported dialect") != std::string::npos);
  }
}

TEST_CASE("duplicate clause names rejected") {
  TermBank bank;
  SymbolTable symbols;
  CHECK_THROWS_AS(parse_cnf("cnf(a, axiom, p(c)).\ncnf(a, axiom, q(d)).", bank, symbols),
                  ParseError);
}

TEST_CASE("tautologies are dropped with a warning") {
  TermBank bank;
  SymbolTable symbols;
  ProblemFile f = parse_cnf("cnf(t, axiom, p(c) | ~p(c)).\ncnf(k, axiom, q(d)).", bank, symbols);
  CHECK(f.entries.size() == 1);
  CHECK(f.entries[0].name == "k");
  REQUIRE(f.warnings.size() == 1);
  CHECK(f.warnings[0].find("t") != std::string::npos);
  CHECK(f.warnings[0].find("tautology") != std::string::npos);
}

TEST_CASE("empty clause prints as $false") {
  TermBank bank;
  SymbolTable symbols;
  CHECK(print_clause(bank, symbols, Clause{}) == "$false");
}

TEST_CASE("print round-trips the pinned example clauses") {
  test_util::Fixture fx;
  Clause m1 = fx.clause("p(g(Y1),c) | ~p(f(c),e)");
  CHECK(fx.print(m1) == "p(g(Y1),c) | ~p(f(c),e)");

  // the resolution conclusion of the pinned pair
  Clause conclusion = fx.clause("p(g(Y1),c)");
  CHECK(fx.print(conclusion) == "p(g(Y1),c)");
}

TEST_CASE("parse-print-parse is a fixpoint") {
  const char* inputs[] = {
      "p(X1,X2) | p(f(X2),X3)",
      "~p(Y) | ~q(c)",
      "a = b | c != d",
      "p(g(Y1),c) | ~p(f(c),e)",
      "p(f(f(f(X))))",
      "~r(X,Y) | r(Y,X) | X != Y",
  };
  for (const char* input : inputs) {
    test_util::Fixture fx;
    Clause first = fx.clause(input);
    std::string printed = fx.print(first);
    Clause second = fx.clause(printed);
    CHECK(first == second);
    CHECK(fx.print(second) == printed);
  }
}

TEST_CASE("print_problem emits parseable cnf lines") {
  TermBank bank;
  SymbolTable symbols;
  ProblemFile f = parse_cnf("cnf(a, axiom, p(c)).\ncnf(b, negated_conjecture, ~p(X)).",
                            bank, symbols);
  std::ostringstream out;
  print_problem(out, bank, symbols, f);
  TermBank bank2;
  SymbolTable symbols2;
  ProblemFile g = parse_cnf(out.str(), bank2, symbols2);
  REQUIRE(g.entries.size() == 2);
  CHECK(g.entries[0].name == "a");
  CHECK(g.entries[1].role == "negated_conjecture");
}

TEST_CASE("bare $false clause is rejected as a premise but parses") {
  TermBank bank;
  SymbolTable symbols;
  ProblemFile f = parse_cnf("cnf(bot, axiom, $false).", bank, symbols);
  REQUIRE(f.entries.size() == 1);
  CHECK(f.entries[0].clause.empty());
}
