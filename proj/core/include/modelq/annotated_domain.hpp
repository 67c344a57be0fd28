#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "modelq/atom.hpp"

namespace modelq {

/// Single-inheritance type hierarchy rooted at "object".
class TypeTable {
 public:
  TypeTable();

  /// Adds `name` under `parent`, creating `parent` under "object" if new.
  void add(const std::string& name, const std::string& parent = "object");
  bool contains(const std::string& name) const;

  /// True iff `sub` equals `super` or is a (transitive) descendant.
  bool is_subtype(const std::string& sub, const std::string& super) const;

  /// Types in declaration order, excluding the implicit root.
  std::vector<std::pair<std::string, std::string>> declared() const;

 private:
  std::vector<std::string> names_;
  std::vector<int> parent_;
  std::map<std::string, int> index_;
};

struct TypedVar {
  std::string name;  // includes the leading '?'
  std::string type;

  bool operator==(const TypedVar&) const = default;
};

struct PredicateDecl {
  std::string name;
  std::vector<TypedVar> params;

  bool operator==(const PredicateDecl&) const = default;
};

/// Action schema with certain and possible condition sets. Atom lists are
/// kept sorted so structural equality is order-insensitive.
struct AnnotatedActionSchema {
  std::string name;
  std::vector<TypedVar> params;
  std::vector<Atom> pre, add, del;
  std::vector<Atom> poss_pre, poss_add, poss_del;

  const std::vector<Atom>& certain(Slot s) const;
  const std::vector<Atom>& possible(Slot s) const;
  std::vector<Atom>& certain(Slot s);
  std::vector<Atom>& possible(Slot s);

  bool operator==(const AnnotatedActionSchema&) const = default;
};

/// One uncertain slot: (schema, slot kind, lifted atom). The unit the
/// elicitation session resolves; n of these induce 2^n candidate models.
struct PossibleCondition {
  std::string schema;
  Slot slot;
  Atom atom;

  bool operator==(const PossibleCondition&) const = default;
  auto operator<=>(const PossibleCondition&) const = default;

  /// "(schema slot (atom ...))" — used in truth files and transcripts.
  std::string str() const;
};

struct AnnotatedDomain {
  std::string name;
  TypeTable types;
  std::vector<PredicateDecl> predicates;
  std::vector<TypedVar> constants;
  std::vector<AnnotatedActionSchema> schemas;  // sorted by name

  const AnnotatedActionSchema* find_schema(const std::string& name) const;
  const PredicateDecl* find_predicate(const std::string& name) const;

  /// All possible conditions in canonical (schema, slot, atom) order.
  /// Index in this vector is the condition id used everywhere else.
  std::vector<PossibleCondition> possible_conditions() const;

  /// n — the number of uncertain slots.
  int num_possible_conditions() const;

  /// Index of a condition in possible_conditions(), if present.
  std::optional<int> condition_id(const PossibleCondition& c) const;
};

struct ProblemInstance {
  std::string name;
  std::string domain_name;
  std::vector<TypedVar> objects;  // includes domain constants
  std::vector<Atom> init;         // ground
  std::vector<Atom> goal;         // ground; may be empty
};

}  // namespace modelq
