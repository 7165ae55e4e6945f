#include "subsume/random_gen.hpp"

#include <algorithm>
#include <cassert>

namespace subsume {

namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
  x += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = x;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

}  // namespace

ClausePairGen::ClausePairGen(TermBank& bank, SymbolTable& symbols, std::uint64_t seed,
                             GenParams params)
    : bank_(bank), symbols_(symbols), seed_(seed), params_(params) {
  params_.num_predicates = std::clamp(params_.num_predicates, 2u, 4u);
  params_.num_functions = std::min(params_.num_functions, 3u);
  assert(params_.max_literals >= 1 && params_.max_vars >= 1);

  // Alternating arities keep both unary and binary predicates in play; the
  // binary "q" doubles as the commutative one when requested.
  struct PredSpec {
    const char* name;
    unsigned arity;
  };
  static const PredSpec kPreds[4] = {{"p", 1}, {"q", 2}, {"r", 1}, {"s", 2}};
  for (unsigned i = 0; i < params_.num_predicates; ++i) {
    bool commutative = params_.commutative && i == 1;  // "q" is the commutative one
    preds_.push_back(symbols_.intern_predicate(kPreds[i].name, kPreds[i].arity, commutative));
  }

  static const PredSpec kFns[3] = {{"c", 0}, {"f", 1}, {"g", 2}};
  for (unsigned i = 0; i < params_.num_functions; ++i)
    fns_.push_back(symbols_.intern_function(kFns[i].name, kFns[i].arity));
}

std::uint64_t ClausePairGen::draw(std::uint64_t& state, std::uint64_t n) {
  return splitmix64(state) % n;
}

TermRef ClausePairGen::term(std::uint64_t& state, unsigned depth) {
  // Choice space: the variables, then every function symbol usable at this
  // depth (only nullary ones once the depth budget is exhausted).
  std::vector<FnId> usable;
  for (FnId f : fns_)
    if (depth > 0 || symbols_.function_arity(f) == 0) usable.push_back(f);

  std::uint64_t pick = draw(state, params_.max_vars + usable.size());
  if (pick < params_.max_vars) return TermRef::var(static_cast<std::uint32_t>(pick));
  FnId f = usable[pick - params_.max_vars];
  std::vector<TermRef> args;
  for (unsigned i = 0; i < symbols_.function_arity(f); ++i)
    args.push_back(term(state, depth - 1));
  return bank_.app(f, args);
}

Literal ClausePairGen::literal(std::uint64_t& state) {
  PredId p = preds_[draw(state, preds_.size())];
  bool positive = draw(state, 2) == 0;
  std::vector<TermRef> args;
  for (unsigned i = 0; i < symbols_.predicate_arity(p); ++i)
    args.push_back(term(state, params_.max_depth));
  return {positive, p, std::move(args)};
}

Clause ClausePairGen::clause(std::uint64_t& state) {
  for (;;) {
    std::size_t n = 1 + draw(state, params_.max_literals);
    std::vector<Literal> lits;
    for (std::size_t i = 0; i < n; ++i) lits.push_back(literal(state));
    if (auto c = Clause::normalize(bank_, std::move(lits))) return *c;
    // tautology: redraw from the (advanced) stream
  }
}

std::pair<Clause, Clause> ClausePairGen::pair(std::uint64_t index) {
  std::uint64_t mix = index;
  std::uint64_t state = seed_ ^ splitmix64(mix);
  splitmix64(state);  // decouple neighbouring seeds
  Clause l = clause(state);
  Clause m = clause(state);
  return {std::move(l), std::move(m)};
}

}  // namespace subsume
