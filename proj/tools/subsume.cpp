// Command-line front end: pairwise checks, clause-set simplification,
// randomized verification against the brute-force oracle, and encoding
// benchmarks with CSV output.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <unordered_map>

#include <CLI11.hpp>

#include "subsume/engine.hpp"
#include "subsume/harness.hpp"
#include "subsume/tptp.hpp"

namespace {

using namespace subsume;

bool use_color() {
  const char* env = std::getenv("SUBSUME_COLOR");
  return env && std::string(env) == "1";
}

std::string colored(const std::string& text, const char* code) {
  if (!use_color()) return text;
  return std::string("\033[") + code + "m" + text + "\033[0m";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct EncodingFlag {
  std::string value = "indirect";
  EncodingKind kind() const {
    return value == "direct" ? EncodingKind::SrDirect : EncodingKind::SrIndirect;
  }
};

void add_encoding_flag(CLI::App* cmd, EncodingFlag& flag) {
  cmd->add_option("--encoding", flag.value, "SR encoding: direct or indirect")
      ->check(CLI::IsMember({"direct", "indirect"}))
      ->capture_default_str();
}

int cmd_check(const std::string& path, const EncodingFlag& encoding, std::uint64_t budget,
              bool learn, bool dump) {
  TermBank bank;
  SymbolTable symbols;
  ProblemFile problem;
  try {
    problem = parse_cnf(read_file(path), bank, symbols);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  for (const std::string& w : problem.warnings) std::cerr << "warning: " << w << "\n";
  if (problem.entries.size() != 2) {
    std::cerr << "error: expected exactly two clauses (side premise, then main premise), got "
              << problem.entries.size() << "\n";
    return 2;
  }
  const Clause& l = problem.entries[0].clause;
  const Clause& m = problem.entries[1].clause;
  if (l.empty() || m.empty()) {
    std::cerr << "error: premises must have at least one literal\n";
    return 2;
  }

  SessionConfig config;
  config.sr_encoding = encoding.kind();
  config.conflict_budget = budget;
  config.learn_clauses = learn;
  Session session(bank, symbols, config);

  if (session.check_subsumption(l, m)) {
    std::cout << colored("subsumed", "32") << "\n";
  } else if (auto conclusion = session.check_subsumption_resolution(l, m)) {
    std::cout << colored("sr", "36") << " " << print_clause(bank, symbols, *conclusion) << "\n";
  } else {
    std::cout << "none\n";
  }
  const Session::PairMetrics& pm = session.last_pair();
  std::cout << "pruned=" << (pm.pruned() ? "true" : "false") << " entries=" << pm.entries
            << " sat_calls=" << pm.sat_calls << " conflicts=" << pm.conflicts << "\n";
  if (dump) {
    session.solver().dump(std::cerr, [&](TermRef t) { return print_term(bank, symbols, t); });
  }
  return 0;
}

int cmd_simplify(const std::string& path, const EncodingFlag& encoding, bool trace) {
  TermBank bank;
  SymbolTable symbols;
  ProblemFile problem;
  try {
    problem = parse_cnf(read_file(path), bank, symbols);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  for (const std::string& w : problem.warnings) std::cout << "% warning: " << w << "\n";

  ClauseSet set;
  std::unordered_map<std::uint32_t, std::size_t> slot_of;  // clause id -> input position
  std::vector<std::uint32_t> slot_id;                      // input position -> live id (or dead)
  constexpr std::uint32_t kDead = 0xFFFFFFFFu;
  for (std::size_t i = 0; i < problem.entries.size(); ++i) {
    std::uint32_t id = set.add(problem.entries[i].clause);
    slot_of[id] = i;
    slot_id.push_back(id);
  }

  SessionConfig config;
  config.sr_encoding = encoding.kind();
  Session session(bank, symbols, config);
  std::vector<SimplifyEvent> events = simplify_to_fixpoint(session, set);

  auto slot_name = [&](std::uint32_t id) { return problem.entries[slot_of.at(id)].name; };
  for (const SimplifyEvent& e : events) {
    std::size_t slot = slot_of.at(e.target);
    if (e.kind == SimplifyEvent::Kind::Removed) {
      slot_id[slot] = kDead;
      if (trace)
        std::cout << "% " << slot_name(e.target) << " subsumed by " << slot_name(e.by) << "\n";
    } else {
      slot_of[e.replacement] = slot;  // the conclusion inherits the slot (and name)
      slot_id[slot] = e.replacement;
      if (trace)
        std::cout << "% " << slot_name(e.target) << " simplified by " << slot_name(e.by) << "\n";
    }
  }

  for (std::size_t i = 0; i < problem.entries.size(); ++i) {
    if (slot_id[i] == kDead) continue;
    std::cout << "cnf(" << problem.entries[i].name << ", " << problem.entries[i].role << ", "
              << print_clause(bank, symbols, set.get(slot_id[i])) << ").\n";
  }
  return 0;
}

int cmd_verify(std::uint64_t seed, std::uint64_t count, unsigned max_lits, unsigned jobs) {
  VerifyOptions options;
  options.seed = seed;
  options.count = count;
  options.max_literals = max_lits;
  options.jobs = jobs;
  VerifyReport report = run_verify(options);
  for (const std::string& r : report.reports) std::cout << colored("MISMATCH ", "31") << r << "\n";
  std::cout << "verified " << report.pairs << " pairs, " << report.mismatches << " mismatches\n";
  return report.mismatches == 0 ? 0 : 1;
}

int cmd_bench(const EncodingFlag& encoding, const std::string& corpus, std::uint64_t seed,
              std::uint64_t count, unsigned max_lits, const std::string& csv) {
  TermBank bank;
  SymbolTable symbols;
  BenchOptions options;
  options.encoding = encoding.kind();
  options.seed = seed;
  options.count = count;
  options.max_literals = max_lits;

  std::vector<std::pair<Clause, Clause>> pairs;
  if (corpus.empty()) {
    pairs = synthetic_pairs(options, bank, symbols);
  } else {
    ProblemFile problem;
    try {
      problem = parse_cnf(read_file(corpus), bank, symbols);
    } catch (const Error& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 2;
    }
    // every ordered pair of distinct corpus clauses
    for (std::size_t i = 0; i < problem.entries.size(); ++i)
      for (std::size_t j = 0; j < problem.entries.size(); ++j)
        if (i != j) pairs.emplace_back(problem.entries[i].clause, problem.entries[j].clause);
  }

  BenchReport report;
  try {
    report = run_bench(options, bank, symbols, pairs);
  } catch (const Error& e) {
    std::cerr << colored("MISMATCH", "31") << " " << e.what() << "\n";
    return 1;
  }

  if (!csv.empty()) {
    if (csv == "-") {
      write_csv(std::cout, report.rows);
    } else {
      std::ofstream out(csv);
      if (!out) {
        std::cerr << "error: cannot write '" << csv << "'\n";
        return 2;
      }
      write_csv(out, report.rows);
    }
  }

  std::cout << "encoding=" << encoding.value << " pairs=" << report.rows.size()
            << " subsumed=" << report.subsumed << " sr=" << report.sr << " none=" << report.none
            << "\n";
  std::cout << "time_ns average=" << report.mean_time_ns << " stddev=" << report.stddev_time_ns
            << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Clause subsumption and subsumption-resolution engine"};
  app.require_subcommand(1);

  // check
  auto* check = app.add_subcommand("check", "Decide one (L, M) pair from a two-clause file");
  std::string check_file;
  check->add_option("file", check_file, "cnf file: side premise first, main premise second")
      ->required();
  EncodingFlag check_encoding;
  add_encoding_flag(check, check_encoding);
  std::uint64_t check_budget = 0;
  check->add_option("--budget", check_budget, "conflict budget per SAT call (0 = unlimited)");
  bool check_learn = false;
  check->add_flag("--learn", check_learn, "enable 1UIP clause learning");
  bool check_dump = false;
  check->add_flag("--dump", check_dump, "dump the last loaded SAT instance to stderr");

  // simplify
  auto* simplify = app.add_subcommand("simplify", "Forward-simplify a clause set to fixpoint");
  std::string simplify_file;
  simplify->add_option("file", simplify_file, "cnf problem file")->required();
  EncodingFlag simplify_encoding;
  add_encoding_flag(simplify, simplify_encoding);
  bool simplify_trace = false;
  simplify->add_flag("--trace", simplify_trace, "annotate removals/replacements as comments");

  // verify
  auto* verify = app.add_subcommand("verify", "Cross-check the engine against the oracle");
  std::uint64_t verify_seed = 1, verify_count = 10000;
  unsigned verify_max_lits = 4, verify_jobs = 1;
  verify->add_option("--seed", verify_seed, "generator seed")->capture_default_str();
  verify->add_option("--count", verify_count, "number of random pairs")->capture_default_str();
  verify->add_option("--max-lits", verify_max_lits, "max literals per clause")
      ->check(CLI::Range(1u, 8u))
      ->capture_default_str();
  verify->add_option("--jobs", verify_jobs, "worker threads")->capture_default_str();

  // bench
  auto* bench = app.add_subcommand("bench", "Measure one encoding over a corpus");
  EncodingFlag bench_encoding;
  add_encoding_flag(bench, bench_encoding);
  std::string bench_corpus;
  bench->add_option("--corpus", bench_corpus, "cnf file (default: synthetic pairs)");
  std::uint64_t bench_seed = 1, bench_count = 1000;
  unsigned bench_max_lits = 4;
  bench->add_option("--seed", bench_seed, "generator seed")->capture_default_str();
  bench->add_option("--count", bench_count, "synthetic pair count")->capture_default_str();
  bench->add_option("--max-lits", bench_max_lits, "max literals per clause")
      ->check(CLI::Range(1u, 8u))
      ->capture_default_str();
  std::string bench_csv;
  bench->add_option("--csv", bench_csv, "write per-pair rows to this file ('-' for stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // usage errors are exit 2; --help stays 0
  }

  try {
    if (check->parsed())
      return cmd_check(check_file, check_encoding, check_budget, check_learn, check_dump);
    if (simplify->parsed()) return cmd_simplify(simplify_file, simplify_encoding, simplify_trace);
    if (verify->parsed())
      return cmd_verify(verify_seed, verify_count, verify_max_lits, verify_jobs);
    if (bench->parsed())
      return cmd_bench(bench_encoding, bench_corpus, bench_seed, bench_count, bench_max_lits,
                       bench_csv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
