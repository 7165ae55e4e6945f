#include "subsume/symbols.hpp"

#include "subsume/errors.hpp"

namespace subsume {

PredId SymbolTable::intern_predicate(std::string_view name, unsigned arity, bool commutative) {
  auto it = pred_ids_.find(std::string(name));
  if (it != pred_ids_.end()) {
    Pred& p = preds_[it->second];
    if (p.arity != arity) {
      throw Error("predicate '" + p.name + "' used with arity " + std::to_string(arity) +
                  " but declared with arity " + std::to_string(p.arity));
    }
    p.commutative = p.commutative || commutative;
    return it->second;
  }
  PredId id = static_cast<PredId>(preds_.size());
  preds_.push_back({std::string(name), arity, commutative});
  pred_ids_.emplace(std::string(name), id);
  return id;
}

FnId SymbolTable::intern_function(std::string_view name, unsigned arity) {
  auto it = fn_ids_.find(std::string(name));
  if (it != fn_ids_.end()) {
    const Fn& f = fns_[it->second];
    if (f.arity != arity) {
      throw Error("function '" + f.name + "' used with arity " + std::to_string(arity) +
                  " but declared with arity " + std::to_string(f.arity));
    }
    return it->second;
  }
  FnId id = static_cast<FnId>(fns_.size());
  fns_.push_back({std::string(name), arity});
  fn_ids_.emplace(std::string(name), id);
  return id;
}

std::optional<PredId> SymbolTable::find_predicate(std::string_view name) const {
  auto it = pred_ids_.find(std::string(name));
  if (it == pred_ids_.end()) return std::nullopt;
  return it->second;
}

std::optional<FnId> SymbolTable::find_function(std::string_view name) const {
  auto it = fn_ids_.find(std::string(name));
  if (it == fn_ids_.end()) return std::nullopt;
  return it->second;
}

}  // namespace subsume
