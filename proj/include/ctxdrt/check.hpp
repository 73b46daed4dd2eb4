// Informativity and consistency checks on readings, and the full
// generate-and-test projection loop.

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ctxdrt/drs.hpp"
#include "ctxdrt/projection.hpp"
#include "ctxdrt/tableau.hpp"

namespace ctxdrt {

enum class CheckStatus { Pass, Fail, Unknown };
const char* check_name(CheckStatus s);

struct CheckBounds {
  ProverBounds prover;
  int modelBound = 3;
};

struct Verdict {
  CheckStatus informative = CheckStatus::Unknown;
  CheckStatus consistent = CheckStatus::Unknown;
  std::string informativeBy;  // "tableau" or "model"
  std::string consistentBy;

  bool admissible() const { return informative != CheckStatus::Fail && consistent != CheckStatus::Fail; }
  bool certain() const { return informative == CheckStatus::Pass && consistent == CheckStatus::Pass; }
};

Verdict check_reading(const std::pair<InferenceTask, InferenceTask>& tasks, const CheckBounds& bounds = {});

struct TrailStep {
  DrsPath alphaPath;
  std::optional<Resolution> resolution;  // set when the alpha was resolved
  std::optional<Reading> reading;        // set when it was accommodated
  std::optional<Verdict> verdict;
};

struct ProjectionResult {
  Drs result;
  std::vector<TrailStep> trail;
};

// Every alpha-free DRS obtainable from root by resolving where possible and
// accommodating admissibly otherwise. Throws ImpureInput if root does not
// validate, NoAdmissibleReading if nothing survives.
std::vector<ProjectionResult> project(const Drs& root, const BackgroundTheory& bg, const CheckBounds& bounds = {});

}  // namespace ctxdrt
