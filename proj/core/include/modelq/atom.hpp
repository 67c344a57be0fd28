#pragma once

#include <string>
#include <vector>

namespace modelq {

/// A predicate applied to terms. Terms are variables (leading '?') in
/// lifted atoms and object names in ground atoms.
struct Atom {
  std::string predicate;
  std::vector<std::string> args;

  bool is_ground() const {
    for (const auto& a : args)
      if (!a.empty() && a[0] == '?') return false;
    return true;
  }

  bool operator==(const Atom& other) const = default;
  auto operator<=>(const Atom& other) const = default;

  /// "(pred arg1 arg2)"
  std::string str() const;
};

/// Which uncertain slot of an action schema a possible condition occupies.
enum class Slot { pre, add, del };

const char* slot_name(Slot s);

}  // namespace modelq
