// Standard first-order embedding of DRSs, for display and cross-checks.

#pragma once

#include <memory>
#include <string>
#include <vector>

#include "ctxdrt/drs.hpp"

namespace ctxdrt {

struct Fol;
using FolPtr = std::shared_ptr<const Fol>;

struct Fol {
  enum class Kind { True, Pred, Not, And, Or, Implies, Exists, Forall };
  Kind kind = Kind::True;
  std::string predicate;           // Pred
  std::vector<std::string> names;  // Pred arguments, or quantified variables
  std::vector<FolPtr> children;
};

// Throws AlphaRemaining if k still has an alpha condition.
FolPtr drs_to_fol(const Drs& k);

std::string print_fol(const Fol& f);

}  // namespace ctxdrt
