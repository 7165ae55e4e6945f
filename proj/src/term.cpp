#include "subsume/term.hpp"

#include <algorithm>

namespace subsume {

namespace {

std::size_t hash_app(FnId fn, const std::vector<TermRef>& args) {
  // FNV-1a over the function id and argument handles.
  std::size_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint32_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  mix(fn);
  for (TermRef a : args) mix(a.raw());
  return h;
}

}  // namespace

TermRef TermBank::app(FnId fn, const std::vector<TermRef>& args) {
  std::size_t h = hash_app(fn, args);
  auto [lo, hi] = index_.equal_range(h);
  for (auto it = lo; it != hi; ++it) {
    const AppData& cand = apps_[it->second];
    if (cand.fn == fn && cand.args == args) return TermRef(it->second << 1);
  }
  std::uint32_t idx = static_cast<std::uint32_t>(apps_.size());
  assert(idx < (1u << 31));
  apps_.push_back({fn, args});
  index_.emplace(h, idx);
  return TermRef(idx << 1);
}

long TermBank::var_bound(TermRef t) const {
  if (t.is_var()) return static_cast<long>(t.var_index());
  long bound = -1;
  for (TermRef a : app_data(t).args) bound = std::max(bound, var_bound(a));
  return bound;
}

std::string term_to_string(const TermBank& bank, const SymbolTable& symbols, TermRef t,
                           const std::vector<std::string>& var_names) {
  if (t.is_var()) {
    std::uint32_t i = t.var_index();
    if (i < var_names.size()) return var_names[i];
    return "X" + std::to_string(i);
  }
  const auto& data = bank.app_data(t);
  std::string out = symbols.function_name(data.fn);
  if (!data.args.empty()) {
    out += '(';
    for (std::size_t i = 0; i < data.args.size(); ++i) {
      if (i) out += ',';
      out += term_to_string(bank, symbols, data.args[i], var_names);
    }
    out += ')';
  }
  return out;
}

}  // namespace subsume
