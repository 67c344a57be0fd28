#include "modelq/atom.hpp"

namespace modelq {

std::string Atom::str() const {
  std::string out = "(" + predicate;
  for (const auto& a : args) {
    out += ' ';
    out += a;
  }
  out += ')';
  return out;
}

const char* slot_name(Slot s) {
  switch (s) {
    case Slot::pre:
      return "pre";
    case Slot::add:
      return "add";
    case Slot::del:
      return "del";
  }
  return "?";
}

}  // namespace modelq
