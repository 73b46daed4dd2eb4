#include "ctxdrt/compare.hpp"

#include <algorithm>

namespace ctxdrt {

bool ReadingComparison::agree() const {
  return shared == naive || shared == TaskStatus::OpenBounded || naive == TaskStatus::OpenBounded;
}

bool CostReport::verdicts_agree() const {
  return std::all_of(readings.begin(), readings.end(), [](const ReadingComparison& r) { return r.agree(); });
}

namespace {

double ratio(std::size_t naive, std::size_t shared) {
  if (shared == 0) return 1.0;
  return static_cast<double>(naive) / static_cast<double>(shared);
}

}  // namespace

CostReport compare_cost(const Drs& root, const BackgroundTheory& bg, const ProverBounds& bounds) {
  CostReport report;
  Extraction ex = extract(root, bg);
  report.formula = ex.formula;
  std::vector<TaskStatus> shared;
  if (ex.formula) {
    LConProof proof = prove_lcon(*ex.formula, bounds);
    report.sharedStats = proof.stats;
    shared = proof.verdicts;
  }

  for (const auto& task : ex.tasks) {
    for (const auto& r : task.readings) {
      TaskProof naive = naive_prove(build_tasks(r, root, bg).first, bounds);
      report.naiveStats.add(naive.stats);
      report.readings.push_back(ReadingComparison{r.id(), task.tag, shared.at(task.tag), naive.status});
    }
  }

  const auto& s = report.sharedStats.contextConditionExpansions;
  const auto& n = report.naiveStats.contextConditionExpansions;
  for (const auto& [cond, count] : s) {
    auto it = n.find(cond);
    report.contextExpansionRatio[cond] = ratio(it == n.end() ? 0 : it->second, count);
  }
  for (const auto& [cond, count] : n)
    if (!s.count(cond)) report.contextExpansionRatio[cond] = std::nullopt;
  report.overallRatio = ratio(report.naiveStats.total_context_expansions(), report.sharedStats.total_context_expansions());
  return report;
}

}  // namespace ctxdrt
