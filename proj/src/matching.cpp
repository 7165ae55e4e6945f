#include "subsume/matching.hpp"

#include <algorithm>
#include <cassert>

namespace subsume {

bool Substitution::bind(std::uint32_t var, TermRef term) {
  auto it = std::lower_bound(bindings_.begin(), bindings_.end(), var,
                             [](const Binding& b, std::uint32_t v) { return b.var < v; });
  if (it != bindings_.end() && it->var == var) return it->term == term;
  bindings_.insert(it, {var, term});
  return true;
}

std::optional<TermRef> Substitution::lookup(std::uint32_t var) const {
  auto it = std::lower_bound(bindings_.begin(), bindings_.end(), var,
                             [](const Binding& b, std::uint32_t v) { return b.var < v; });
  if (it != bindings_.end() && it->var == var) return it->term;
  return std::nullopt;
}

bool incompatible(const Substitution& a, const Substitution& b) {
  const auto& xs = a.bindings();
  const auto& ys = b.bindings();
  std::size_t i = 0, j = 0;
  while (i < xs.size() && j < ys.size()) {
    if (xs[i].var < ys[j].var)
      ++i;
    else if (ys[j].var < xs[i].var)
      ++j;
    else {
      if (xs[i].term != ys[j].term) return true;
      ++i, ++j;
    }
  }
  return false;
}

TermRef apply_substitution(TermBank& bank, const Substitution& s, TermRef t) {
  if (t.is_var()) {
    if (auto bound = s.lookup(t.var_index())) return *bound;
    return t;
  }
  const auto& data = bank.app_data(t);
  std::vector<TermRef> args;
  args.reserve(data.args.size());
  bool changed = false;
  for (TermRef a : data.args) {
    TermRef r = apply_substitution(bank, s, a);
    changed = changed || r != a;
    args.push_back(r);
  }
  if (!changed) return t;
  FnId fn = data.fn;  // app() may reallocate the arena; don't hold the reference
  return bank.app(fn, args);
}

Literal apply_substitution(TermBank& bank, const Substitution& s, const Literal& lit) {
  Literal out{lit.positive, lit.pred, {}};
  out.args.reserve(lit.args.size());
  for (TermRef a : lit.args) out.args.push_back(apply_substitution(bank, s, a));
  return out;
}

bool atoms_equal(const SymbolTable& symbols, const Literal& a, const Literal& b) {
  if (a.pred != b.pred) return false;
  if (a.args == b.args) return true;
  return symbols.predicate_commutative(a.pred) && a.args.size() == 2 &&
         a.args[0] == b.args[1] && a.args[1] == b.args[0];
}

namespace {

/// One-way match of the pattern argument list onto the target argument
/// list, extending out. Iterative so term depth never threatens the stack.
bool match_args(const TermBank& bank, const std::vector<TermRef>& pattern,
                const std::vector<TermRef>& target, Substitution& out) {
  assert(pattern.size() == target.size());
  std::vector<std::pair<TermRef, TermRef>> work;
  for (std::size_t i = 0; i < pattern.size(); ++i) work.emplace_back(pattern[i], target[i]);
  while (!work.empty()) {
    auto [p, t] = work.back();
    work.pop_back();
    if (p.is_var()) {
      if (!out.bind(p.var_index(), t)) return false;
      continue;
    }
    if (t.is_var()) return false;  // main-premise variables are opaque
    const auto& pd = bank.app_data(p);
    const auto& td = bank.app_data(t);
    if (pd.fn != td.fn) return false;
    for (std::size_t i = 0; i < pd.args.size(); ++i)
      work.emplace_back(pd.args[i], td.args[i]);
  }
  return true;
}

}  // namespace

std::vector<Substitution> match_literal(const TermBank& bank, const SymbolTable& symbols,
                                        const Literal& l, const Literal& m, bool want_negative) {
  std::vector<Substitution> result;
  if (l.pred != m.pred) return result;
  bool need_positive = want_negative ? !m.positive : m.positive;
  if (l.positive != need_positive) return result;

  Substitution direct;
  if (match_args(bank, l.args, m.args, direct)) result.push_back(std::move(direct));

  if (symbols.predicate_commutative(m.pred) && m.args.size() == 2 && m.args[0] != m.args[1]) {
    Substitution swapped;
    if (match_args(bank, l.args, {m.args[1], m.args[0]}, swapped) &&
        (result.empty() || result[0] != swapped))
      result.push_back(std::move(swapped));
  }
  return result;
}

std::optional<BindingTrail::Mark> BindingTrail::try_extend(const Substitution& s) {
  Mark start = undo_.size();
  for (const Binding& b : s.bindings()) {
    if (b.var < bound_.size() && bound_[b.var]) {
      if (terms_[b.var] != b.term) {
        undo_to(start);
        return std::nullopt;
      }
      continue;
    }
    if (b.var >= bound_.size()) {
      bound_.resize(b.var + 1, 0);
      terms_.resize(b.var + 1);
    }
    bound_[b.var] = 1;
    terms_[b.var] = b.term;
    undo_.push_back(b.var);
  }
  return start;
}

void BindingTrail::undo_to(Mark m) {
  assert(m <= undo_.size());
  while (undo_.size() > m) {
    bound_[undo_.back()] = 0;
    undo_.pop_back();
  }
}

std::optional<TermRef> BindingTrail::lookup(std::uint32_t var) const {
  if (var < bound_.size() && bound_[var]) return terms_[var];
  return std::nullopt;
}

Substitution BindingTrail::snapshot() const {
  Substitution s;
  for (std::uint32_t v : undo_) s.bind(v, terms_[v]);
  return s;
}

}  // namespace subsume
