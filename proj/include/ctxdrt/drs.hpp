// Discourse Representation Structures and their structural algebra.
//
// A DRS is an immutable pair <universe, conditions>. Sub-DRSs are shared
// through shared_ptr<const Drs>, so copies are cheap and values may be passed
// freely between threads.

#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ctxdrt/errors.hpp"

namespace ctxdrt {

struct Referent {
  std::string name;

  auto operator<=>(const Referent&) const = default;
};

struct Drs;
using DrsPtr = std::shared_ptr<const Drs>;

struct Atom {
  std::string predicate;
  std::vector<Referent> args;
};

struct Neg {
  DrsPtr body;
};

struct Imp {
  DrsPtr antecedent;
  DrsPtr consequent;
};

struct Or {
  DrsPtr left;
  DrsPtr right;
};

// Presupposed (anaphoric) material.
struct Alpha {
  DrsPtr body;
};

struct Condition {
  std::variant<Atom, Neg, Imp, Or, Alpha> node;

  template <typename T>
  bool is() const { return std::holds_alternative<T>(node); }
  template <typename T>
  const T& as() const { return std::get<T>(node); }
};

struct Drs {
  std::vector<Referent> universe;
  std::vector<Condition> conditions;

  bool empty() const { return universe.empty() && conditions.empty(); }
  bool introduces(const Referent& r) const;
};

// Exact structural equality (order-sensitive).
bool operator==(const Atom& a, const Atom& b);
bool operator==(const Neg& a, const Neg& b);
bool operator==(const Imp& a, const Imp& b);
bool operator==(const Or& a, const Or& b);
bool operator==(const Alpha& a, const Alpha& b);
bool operator==(const Condition& a, const Condition& b);
bool operator==(const Drs& a, const Drs& b);

// Equality up to universe and condition order, recursively.
bool same_content(const Drs& a, const Drs& b);
bool same_content(const Condition& a, const Condition& b);

// Construction helpers.
Referent ref(std::string name);
Drs box(std::vector<std::string> universe, std::vector<Condition> conditions);
Condition atom(std::string predicate, std::vector<std::string> args);
Condition neg(Drs body);
Condition imp(Drs antecedent, Drs consequent);
Condition disj(Drs left, Drs right);
Condition alpha(Drs body);

enum class Branch { NegBody, ImpAntecedent, ImpConsequent, OrLeft, OrRight, AlphaBody };

struct PathStep {
  std::size_t condition = 0;
  Branch branch = Branch::NegBody;

  auto operator<=>(const PathStep&) const = default;
};

// Addresses a sub-DRS occurrence inside a root DRS; the empty path is the root.
struct DrsPath {
  std::vector<PathStep> steps;

  bool is_root() const { return steps.empty(); }
  DrsPath child(std::size_t condition, Branch branch) const;
  DrsPath parent() const;
  bool is_prefix_of(const DrsPath& other) const;
  std::string to_string() const;

  auto operator<=>(const DrsPath&) const = default;
};

const char* branch_name(Branch b);
std::optional<DrsPath> parse_path(const std::string& text);

// Union of universes and conditions. Throws OverlappingUniverses when the
// universes share a referent. Duplicate conditions are kept once.
Drs merge(const Drs& k1, const Drs& k2);

// Resolves a path; throws InvalidPath.
const Drs& drs_at(const Drs& root, const DrsPath& path);
const DrsPtr* child_slot(const Condition& c, Branch b);

bool is_sub_drs(const DrsPath& inner, const Drs& root);
std::vector<DrsPath> enumerate_sub_drss(const Drs& root);

// Referents available to the DRS at `at`, outermost first. Universes of alpha
// bodies on the path are left out: presupposed referents are not antecedents
// for their own presupposition or for anaphors nested in it.
std::vector<Referent> accessible_referents(const DrsPath& at, const Drs& root);

// Context-DRS: the merge of everything above the target along the path, plus
// implication antecedents for consequent steps. The condition housing each
// step is dropped.
Drs context_drs(const DrsPath& at, const Drs& root);

// Replaces free argument occurrences of `from`. Throws BoundReferent if some
// universe inside k introduces `from`.
Drs substitute(const Drs& k, const Referent& from, const Referent& to);

// Argument renaming that ignores binding (used after the binder was removed).
Drs rename_args(const Drs& k, const Referent& from, const Referent& to);
Condition rename_args(const Condition& c, const Referent& from, const Referent& to);

// Rebuilds root with the DRS at `path` replaced by fn(old).
Drs update_at(const Drs& root, const DrsPath& path, const std::function<Drs(const Drs&)>& fn);
Drs remove_condition(const Drs& root, const DrsPath& parent, std::size_t index);

struct ValidationReport {
  bool pure = true;
  std::vector<Referent> free;        // first-occurrence order
  std::vector<Referent> duplicates;  // referents introduced more than once
};

ValidationReport validate(const Drs& k);

bool contains_alpha(const Condition& c);
bool contains_alpha(const Drs& k);
// Every referent occurring as an atom argument anywhere in c.
std::vector<Referent> mentioned_referents(const Condition& c);
// Every referent introduced by any universe inside k (including k's own).
std::vector<Referent> introduced_referents(const Drs& k);
// Every referent name occurring anywhere in k, universes and arguments.
std::vector<Referent> all_referents(const Drs& k);

}  // namespace ctxdrt
