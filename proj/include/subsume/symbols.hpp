#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace subsume {

using PredId = std::uint32_t;
using FnId = std::uint32_t;

/// Interned predicate and function alphabets. Ids are dense and stable for
/// the lifetime of the table; re-declaring a symbol with a different arity is
/// an error. Append-only, so the table may be shared read-only across threads
/// once fully populated.
class SymbolTable {
public:
  /// Interns a predicate symbol. Repeated calls with the same name return the
  /// same id; the commutative flag is sticky (once set it stays set).
  PredId intern_predicate(std::string_view name, unsigned arity, bool commutative = false);
  FnId intern_function(std::string_view name, unsigned arity);

  std::optional<PredId> find_predicate(std::string_view name) const;
  std::optional<FnId> find_function(std::string_view name) const;

  const std::string& predicate_name(PredId p) const { return preds_[p].name; }
  unsigned predicate_arity(PredId p) const { return preds_[p].arity; }
  bool predicate_commutative(PredId p) const { return preds_[p].commutative; }

  const std::string& function_name(FnId f) const { return fns_[f].name; }
  unsigned function_arity(FnId f) const { return fns_[f].arity; }

  std::size_t num_predicates() const { return preds_.size(); }
  std::size_t num_functions() const { return fns_.size(); }

  /// The object-level equality predicate "=": binary and always commutative.
  PredId equality() { return intern_predicate("=", 2, /*commutative=*/true); }

private:
  struct Pred {
    std::string name;
    unsigned arity;
    bool commutative;
  };
  struct Fn {
    std::string name;
    unsigned arity;
  };

  std::vector<Pred> preds_;
  std::vector<Fn> fns_;
  std::unordered_map<std::string, PredId> pred_ids_;
  std::unordered_map<std::string, FnId> fn_ids_;
};

}  // namespace subsume
