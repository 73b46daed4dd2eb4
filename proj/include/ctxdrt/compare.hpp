// Cost of deciding all informativity tasks with shared contexts versus one
// task at a time.

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ctxdrt/drs.hpp"
#include "ctxdrt/lcon.hpp"
#include "ctxdrt/tableau.hpp"

namespace ctxdrt {

struct ReadingComparison {
  std::string reading;  // Reading::id()
  std::size_t tag = 0;
  TaskStatus shared = TaskStatus::OpenBounded;
  TaskStatus naive = TaskStatus::OpenBounded;

  bool agree() const;  // OpenBounded on either side counts as agreement
};

struct CostReport {
  std::optional<LConFormula> formula;
  ProofStats sharedStats;
  ProofStats naiveStats;
  // naive / shared expansions per printed condition; 1 when neither side
  // expands it, nullopt when only the naive side does.
  std::map<std::string, std::optional<double>> contextExpansionRatio;
  double overallRatio = 1.0;
  std::vector<ReadingComparison> readings;

  bool verdicts_agree() const;
};

CostReport compare_cost(const Drs& root, const BackgroundTheory& bg, const ProverBounds& bounds = {});

}  // namespace ctxdrt
