// Finite model search over small domains, used as an oracle and as the
// satisfiability check for accommodated readings.

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ctxdrt/drs.hpp"

namespace ctxdrt {

enum class ModelVerdict { Entailed, Satisfiable, Refuted, Unknown };
const char* verdict_name(ModelVerdict v);

struct FiniteModel {
  int domainSize = 0;
  std::map<std::string, int> assignment;  // free and top-level referents
  std::vector<std::string> trueAtoms;     // e.g. "of(0,1)"
};

struct ModelResult {
  ModelVerdict verdict = ModelVerdict::Unknown;
  std::optional<FiniteModel> model;  // the model or countermodel found
  // Domain size that suffices for the problem's class, if it has the finite
  // model property in a form we can bound.
  std::optional<int> sufficientDomain;
};

// Without a conclusion: Satisfiable if the premise has a model with at most
// maxDomain elements, Refuted if it provably has none.
// With a conclusion: Refuted if a countermodel to premise |= conclusion
// exists, Entailed if one provably does not.
// Free referents, and the premise's own universe, denote fixed individuals
// shared by premise and conclusion.
// Throws ResourceLimit when a grounding grows past groundCeiling nodes.
ModelResult model_check(const Drs& premise, const std::optional<Drs>& conclusion, int maxDomain,
                        std::size_t groundCeiling = 1u << 20);

}  // namespace ctxdrt
