// Python bindings for the pairwise checks, the fixpoint simplifier, and the
// randomized oracle cross-check.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "subsume/engine.hpp"
#include "subsume/harness.hpp"
#include "subsume/tptp.hpp"

namespace py = pybind11;
using namespace subsume;

namespace {

EncodingKind encoding_from_name(const std::string& name) {
  if (name == "direct") return EncodingKind::SrDirect;
  if (name == "indirect") return EncodingKind::SrIndirect;
  throw Error("unknown encoding '" + name + "' (expected 'direct' or 'indirect')");
}

py::dict check_pair(const std::string& l_text, const std::string& m_text,
                    const std::string& encoding) {
  TermBank bank;
  SymbolTable symbols;
  std::string text =
      "cnf(l, axiom, " + l_text + ").\ncnf(m, axiom, " + m_text + ").\n";
  ProblemFile problem = parse_cnf(text, bank, symbols);
  if (problem.entries.size() != 2)
    throw Error("each input must be a single non-tautological clause");
  const Clause& l = problem.entries[0].clause;
  const Clause& m = problem.entries[1].clause;
  if (l.empty() || m.empty()) throw Error("premises must have at least one literal");

  SessionConfig config;
  config.sr_encoding = encoding_from_name(encoding);
  Session session(bank, symbols, config);

  py::dict out;
  if (session.check_subsumption(l, m)) {
    out["verdict"] = "subsumed";
    out["conclusion"] = py::none();
  } else if (auto conclusion = session.check_subsumption_resolution(l, m)) {
    out["verdict"] = "sr";
    out["conclusion"] = print_clause(bank, symbols, *conclusion);
  } else {
    out["verdict"] = "none";
    out["conclusion"] = py::none();
  }
  const Session::PairMetrics& pm = session.last_pair();
  out["pruned"] = pm.pruned();
  out["entries"] = pm.entries;
  out["sat_calls"] = pm.sat_calls;
  out["conflicts"] = pm.conflicts;
  return out;
}

std::string simplify_text(const std::string& problem_text) {
  TermBank bank;
  SymbolTable symbols;
  ProblemFile problem = parse_cnf(problem_text, bank, symbols);

  ClauseSet set;
  std::vector<std::uint32_t> ids;
  for (const ProblemEntry& e : problem.entries) ids.push_back(set.add(e.clause));

  Session session(bank, symbols, SessionConfig{});
  std::vector<SimplifyEvent> events = simplify_to_fixpoint(session, set);

  std::vector<std::size_t> slot_of(ids.size() + events.size());
  std::vector<std::uint32_t> slot_id(ids.size());
  constexpr std::uint32_t kDead = 0xFFFFFFFFu;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    slot_of[ids[i]] = i;
    slot_id[i] = ids[i];
  }
  for (const SimplifyEvent& e : events) {
    std::size_t slot = slot_of[e.target];
    if (e.kind == SimplifyEvent::Kind::Removed) {
      slot_id[slot] = kDead;
    } else {
      if (e.replacement >= slot_of.size()) slot_of.resize(e.replacement + 1);
      slot_of[e.replacement] = slot;
      slot_id[slot] = e.replacement;
    }
  }

  std::ostringstream out;
  for (std::size_t i = 0; i < slot_id.size(); ++i) {
    if (slot_id[i] == kDead) continue;
    out << "cnf(" << problem.entries[i].name << ", " << problem.entries[i].role << ", "
        << print_clause(bank, symbols, set.get(slot_id[i])) << ").\n";
  }
  return out.str();
}

py::tuple verify_random(std::uint64_t seed, std::uint64_t count, unsigned max_literals) {
  VerifyOptions options;
  options.seed = seed;
  options.count = count;
  options.max_literals = max_literals;
  VerifyReport report = run_verify(options);
  return py::make_tuple(report.mismatches, report.reports);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "clause subsumption / subsumption-resolution engine";
  m.def("check_pair", &check_pair, py::arg("side_premise"), py::arg("main_premise"),
        py::arg("encoding") = "indirect",
        "Decide subsumption then subsumption resolution for one clause pair.\n"
        "Clauses are written in cnf formula syntax, e.g. 'p(X) | ~q(X, c)'.");
  m.def("simplify", &simplify_text, py::arg("problem_text"),
        "Forward-simplify a cnf problem to fixpoint; returns the surviving clauses.");
  m.def("verify_random", &verify_random, py::arg("seed"), py::arg("count"),
        py::arg("max_literals") = 4,
        "Cross-check the engine against a brute-force oracle on random pairs.\n"
        "Returns (mismatch_count, reports).");
}
