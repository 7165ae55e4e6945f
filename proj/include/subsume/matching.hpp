#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "subsume/clause.hpp"

namespace subsume {

struct Binding {
  std::uint32_t var;
  TermRef term;

  bool operator==(const Binding&) const = default;
};

/// A matching substitution: a functional map from side-premise variable
/// indices to terms. Terms may mention main-premise variables; those act
/// as opaque constants throughout. Bindings are kept sorted by variable,
/// so equality and compatibility checks are merge walks.
class Substitution {
public:
  /// Record var -> term. Returns false iff var is already bound to a
  /// different term (binding to the same term is an accepted no-op).
  bool bind(std::uint32_t var, TermRef term);

  std::optional<TermRef> lookup(std::uint32_t var) const;

  bool empty() const { return bindings_.empty(); }
  std::size_t size() const { return bindings_.size(); }
  const std::vector<Binding>& bindings() const { return bindings_; }

  bool operator==(const Substitution&) const = default;

private:
  std::vector<Binding> bindings_;
};

/// Do the two substitutions bind some variable to different terms?
bool incompatible(const Substitution& a, const Substitution& b);

/// Apply a substitution; unbound variables map to themselves.
TermRef apply_substitution(TermBank& bank, const Substitution& s, TermRef t);
Literal apply_substitution(TermBank& bank, const Substitution& s, const Literal& lit);

/// Atom equality modulo the commutative-argument swap.
bool atoms_equal(const SymbolTable& symbols, const Literal& a, const Literal& b);

/// All substitutions sigma with sigma(l) = m (want_negative = false) or
/// sigma(l) = ~m (want_negative = true). One-way: only l's variables bind.
/// Commutative predicates are tried in both argument orientations, so the
/// result holds 0, 1, or 2 distinct substitutions.
std::vector<Substitution> match_literal(const TermBank& bank, const SymbolTable& symbols,
                                        const Literal& l, const Literal& m, bool want_negative);

/// Global binding store with undo-to-mark semantics. One trail per solver
/// session; the solver keeps it equal to the union of the substitutions of
/// all currently-true variables.
class BindingTrail {
public:
  using Mark = std::size_t;

  Mark mark() const { return undo_.size(); }

  /// Merge s into the trail. All-or-nothing: on any clash the trail is left
  /// exactly as it was and nullopt is returned; otherwise the pre-extension
  /// mark is returned, so undo_to() of it removes precisely this extension.
  std::optional<Mark> try_extend(const Substitution& s);

  void undo_to(Mark m);

  std::optional<TermRef> lookup(std::uint32_t var) const;

  std::size_t num_bound() const { return undo_.size(); }
  bool empty() const { return undo_.empty(); }
  void clear() { undo_to(0); }

  /// Current contents as a substitution (sorted by variable).
  Substitution snapshot() const;

private:
  std::vector<TermRef> terms_;
  std::vector<char> bound_;
  std::vector<std::uint32_t> undo_;
};

}  // namespace subsume
