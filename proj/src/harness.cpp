#include "subsume/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <mutex>
#include <ostream>
#include <thread>

#include "subsume/errors.hpp"
#include "subsume/tptp.hpp"

namespace subsume {

std::optional<std::string> verify_pair(Session& session, const Clause& l, const Clause& m,
                                       std::size_t oracle_bound) {
  bool subsumed = session.check_subsumption(l, m);
  auto direct = session.check_subsumption_resolution(l, m, EncodingKind::SrDirect);
  auto indirect = session.check_subsumption_resolution(l, m, EncodingKind::SrIndirect);

  const TermBank& bank = session.bank();
  const SymbolTable& symbols = session.symbols();

  std::string report;
  if (direct.has_value() != indirect.has_value())
    report += "encodings disagree: direct says " + std::string(direct ? "sr" : "none") +
              ", indirect says " + (indirect ? "sr" : "none") + "\n";

  oracle::OracleResult truth;
  truth.subsumed = oracle::subsumes(bank, symbols, l, m, oracle_bound);
  truth.sr_conclusions =
      oracle::subsumption_resolution_conclusions(bank, symbols, l, m, oracle_bound);

  for (auto* conclusion : {&direct, &indirect}) {
    if (!*conclusion) continue;
    oracle::EngineResult engine{subsumed, **conclusion};
    if (auto mismatch = oracle::check_coherence(bank, symbols, engine, truth)) report += *mismatch;
  }
  if (!direct && !indirect) {
    oracle::EngineResult engine{subsumed, std::nullopt};
    if (auto mismatch = oracle::check_coherence(bank, symbols, engine, truth)) report += *mismatch;
  }

  if (report.empty()) return std::nullopt;
  return report;
}

VerifyReport run_verify(const VerifyOptions& options) {
  unsigned jobs = std::max(1u, options.jobs);
  std::mutex merge_mutex;
  std::vector<std::pair<std::uint64_t, std::string>> found;

  auto worker = [&](unsigned shard) {
    TermBank bank;
    SymbolTable symbols;
    GenParams params;
    params.max_literals = options.max_literals;
    ClausePairGen gen(bank, symbols, options.seed, params);
    Session session(bank, symbols);
    for (std::uint64_t i = shard; i < options.count; i += jobs) {
      auto [l, m] = gen.pair(i);
      if (auto mismatch = verify_pair(session, l, m)) {
        std::string text = "pair " + std::to_string(i) + " (seed " +
                           std::to_string(options.seed) + "):\n  L = " +
                           print_clause(bank, symbols, l) + "\n  M = " +
                           print_clause(bank, symbols, m) + "\n" + *mismatch;
        std::lock_guard<std::mutex> lock(merge_mutex);
        found.emplace_back(i, std::move(text));
      }
    }
  };

  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned s = 0; s < jobs; ++s) threads.emplace_back(worker, s);
    for (auto& t : threads) t.join();
  }

  std::sort(found.begin(), found.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  VerifyReport report;
  report.pairs = options.count;
  report.mismatches = found.size();
  for (auto& [index, text] : found) report.reports.push_back(std::move(text));
  return report;
}

std::vector<std::pair<Clause, Clause>> synthetic_pairs(const BenchOptions& options, TermBank& bank,
                                                       SymbolTable& symbols) {
  GenParams params;
  params.max_literals = options.max_literals;
  ClausePairGen gen(bank, symbols, options.seed, params);
  std::vector<std::pair<Clause, Clause>> pairs;
  pairs.reserve(options.count);
  for (std::uint64_t i = 0; i < options.count; ++i) pairs.push_back(gen.pair(i));
  return pairs;
}

namespace {

std::string check_one(Session& session, const Clause& l, const Clause& m, EncodingKind kind,
                      std::optional<Clause>* conclusion_out = nullptr) {
  if (session.check_subsumption(l, m)) return "subsumed";
  auto conclusion = session.check_subsumption_resolution(l, m, kind);
  if (conclusion_out) *conclusion_out = conclusion;
  return conclusion ? "sr" : "none";
}

}  // namespace

BenchReport run_bench(const BenchOptions& options, TermBank& bank, const SymbolTable& symbols,
                      const std::vector<std::pair<Clause, Clause>>& pairs) {
  SessionConfig timed_config;
  timed_config.sr_encoding = options.encoding;
  Session timed(bank, symbols, timed_config);
  Session cross(bank, symbols);
  EncodingKind other = options.encoding == EncodingKind::SrDirect ? EncodingKind::SrIndirect
                                                                  : EncodingKind::SrDirect;

  BenchReport report;
  report.rows.reserve(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& [l, m] = pairs[i];

    auto t0 = std::chrono::steady_clock::now();
    std::string verdict = check_one(timed, l, m, options.encoding);
    auto t1 = std::chrono::steady_clock::now();

    std::string cross_verdict = check_one(cross, l, m, other);
    if (verdict != cross_verdict)
      throw Error("encoding verdicts diverge on pair " + std::to_string(i) + ": " + verdict +
                  " vs " + cross_verdict + "\n  L = " + print_clause(bank, symbols, l) +
                  "\n  M = " + print_clause(bank, symbols, m));

    const Session::PairMetrics& pm = timed.last_pair();
    BenchRow row;
    row.pair_id = i;
    row.l_size = l.size();
    row.m_size = m.size();
    row.entries = pm.entries;
    row.pruned = pm.pruned();
    row.verdict = verdict;
    row.vars = pm.vars;
    row.clauses = pm.clauses;
    row.amo_groups = pm.amo_groups;
    row.conflicts = pm.conflicts;
    row.time_ns = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count());
    report.rows.push_back(std::move(row));

    if (verdict == "subsumed")
      ++report.subsumed;
    else if (verdict == "sr")
      ++report.sr;
    else
      ++report.none;
  }

  if (!report.rows.empty()) {
    double sum = 0;
    for (const BenchRow& r : report.rows) sum += static_cast<double>(r.time_ns);
    report.mean_time_ns = sum / static_cast<double>(report.rows.size());
    double var = 0;
    for (const BenchRow& r : report.rows) {
      double d = static_cast<double>(r.time_ns) - report.mean_time_ns;
      var += d * d;
    }
    report.stddev_time_ns = std::sqrt(var / static_cast<double>(report.rows.size()));
  }
  return report;
}

void write_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
  out << "pair_id,|L|,|M|,entries,pruned,verdict,vars,clauses,amo_groups,conflicts,time_ns\n";
  for (const BenchRow& r : rows)
    out << r.pair_id << ',' << r.l_size << ',' << r.m_size << ',' << r.entries << ','
        << (r.pruned ? "true" : "false") << ',' << r.verdict << ',' << r.vars << ',' << r.clauses
        << ',' << r.amo_groups << ',' << r.conflicts << ',' << r.time_ns << '\n';
}

}  // namespace subsume
