#pragma once

#include <cassert>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "subsume/symbols.hpp"

namespace subsume {

class TermBank;

/// Packed handle to a term. The low bit discriminates: variables store
/// their index in the upper 31 bits, applications store an arena index
/// into the owning TermBank. Because applications are hash-consed,
/// structural equality of terms is operator== on handles.
class TermRef {
public:
  TermRef() : bits_(0) {}

  static TermRef var(std::uint32_t index) {
    assert(index < (1u << 31));
    return TermRef((index << 1) | 1u);
  }

  bool is_var() const { return bits_ & 1u; }
  bool is_app() const { return !(bits_ & 1u); }

  std::uint32_t var_index() const {
    assert(is_var());
    return bits_ >> 1;
  }

  bool operator==(const TermRef& other) const { return bits_ == other.bits_; }
  bool operator!=(const TermRef& other) const { return bits_ != other.bits_; }
  bool operator<(const TermRef& other) const { return bits_ < other.bits_; }

  std::uint32_t raw() const { return bits_; }

private:
  friend class TermBank;
  friend struct TermRefHash;

  explicit TermRef(std::uint32_t bits) : bits_(bits) {}

  std::uint32_t app_index() const {
    assert(is_app());
    return bits_ >> 1;
  }

  std::uint32_t bits_;
};

struct TermRefHash {
  std::size_t operator()(const TermRef& t) const {
    return std::hash<std::uint32_t>()(t.bits_);
  }
};

/// Arena of hash-consed applications. Variables live entirely inside
/// their TermRef and never touch the bank.
class TermBank {
public:
  /// Intern an application f(args...). Returns the existing handle when an
  /// identical application was interned before.
  TermRef app(FnId fn, const std::vector<TermRef>& args);

  /// Shorthand for a nullary application.
  TermRef constant(FnId fn) { return app(fn, {}); }

  struct AppData {
    FnId fn;
    std::vector<TermRef> args;
  };

  const AppData& app_data(TermRef t) const {
    assert(t.is_app());
    return apps_[t.app_index()];
  }

  /// Largest variable index occurring in t, or -1 if t is ground.
  long var_bound(TermRef t) const;

  std::size_t size() const { return apps_.size(); }

private:
  std::vector<AppData> apps_;
  std::unordered_multimap<std::size_t, std::uint32_t> index_;
};

/// Render a term. var_names supplies display names by variable index;
/// out-of-range indices fall back to X<i>.
std::string term_to_string(const TermBank& bank, const SymbolTable& symbols, TermRef t,
                           const std::vector<std::string>& var_names = {});

}  // namespace subsume
