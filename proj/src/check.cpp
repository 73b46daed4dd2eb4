#include "ctxdrt/check.hpp"

#include "ctxdrt/errors.hpp"
#include "ctxdrt/model.hpp"

namespace ctxdrt {

const char* check_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Unknown: return "unknown";
  }
  return "?";
}

namespace {

std::optional<ModelResult> try_model(const Drs& premise, const std::optional<Drs>& conclusion, int bound) {
  try {
    return model_check(premise, conclusion, bound);
  } catch (const ResourceLimit&) {
    return std::nullopt;
  }
}

}  // namespace

Verdict check_reading(const std::pair<InferenceTask, InferenceTask>& tasks, const CheckBounds& bounds) {
  Verdict v;
  const auto& info = tasks.first;
  switch (naive_prove(info, bounds.prover).status) {
    case TaskStatus::Closed:
      v.informative = CheckStatus::Fail;
      v.informativeBy = "tableau";
      break;
    case TaskStatus::OpenSaturated:
      v.informative = CheckStatus::Pass;
      v.informativeBy = "tableau";
      break;
    case TaskStatus::OpenBounded:
      if (auto m = try_model(info.premise, info.conclusion, bounds.modelBound)) {
        if (m->verdict == ModelVerdict::Refuted) v.informative = CheckStatus::Pass;
        if (m->verdict == ModelVerdict::Entailed) v.informative = CheckStatus::Fail;
        if (v.informative != CheckStatus::Unknown) v.informativeBy = "model";
      }
      break;
  }

  const auto& cons = tasks.second;
  if (auto m = try_model(cons.premise, std::nullopt, bounds.modelBound)) {
    if (m->verdict == ModelVerdict::Satisfiable) v.consistent = CheckStatus::Pass;
    if (m->verdict == ModelVerdict::Refuted) v.consistent = CheckStatus::Fail;
    if (v.consistent != CheckStatus::Unknown) v.consistentBy = "model";
  }
  if (v.consistent == CheckStatus::Unknown && refute(cons.premise, bounds.prover).status == TaskStatus::Closed) {
    v.consistent = CheckStatus::Fail;
    v.consistentBy = "tableau";
  }
  return v;
}

namespace {

DrsPath innermost(const std::vector<DrsPath>& paths) {
  const DrsPath* best = &paths.front();
  for (const auto& p : paths)
    if (p.steps.size() >= best->steps.size()) best = &p;
  return *best;
}

void project_from(const ProjectionResult& cur, const BackgroundTheory& bg, const CheckBounds& bounds,
                  std::vector<ProjectionResult>& out) {
  auto paths = presupposition_paths(cur.result);
  if (paths.empty()) {
    out.push_back(cur);
    return;
  }
  DrsPath alphaPath = innermost(paths);

  auto resolutions = resolve_alpha(alphaPath, cur.result);
  if (!resolutions.empty()) {
    for (const auto& res : resolutions) {
      ProjectionResult next{apply_resolution(cur.result, alphaPath, res), cur.trail};
      next.trail.push_back(TrailStep{alphaPath, res, std::nullopt, std::nullopt});
      project_from(next, bg, bounds, out);
    }
    return;
  }
  // A bare anaphor with no antecedent leaves this branch without readings.
  if (drs_at(cur.result, alphaPath).conditions.empty()) return;

  for (const auto& r : enumerate_readings(cur.result, alphaPath)) {
    Verdict v = check_reading(build_tasks(r, cur.result, bg), bounds);
    if (!v.admissible()) continue;
    ProjectionResult next{r.result, cur.trail};
    next.trail.push_back(TrailStep{alphaPath, std::nullopt, r, v});
    project_from(next, bg, bounds, out);
  }
}

}  // namespace

std::vector<ProjectionResult> project(const Drs& root, const BackgroundTheory& bg, const CheckBounds& bounds) {
  auto report = validate(root);
  if (!report.pure) {
    std::string names;
    for (const auto& r : report.duplicates) names += (names.empty() ? "" : ", ") + r.name;
    throw ImpureInput("input DRS introduces a referent more than once: " + names);
  }
  std::vector<ProjectionResult> out;
  project_from(ProjectionResult{root, {}}, bg, bounds, out);
  if (out.empty()) throw NoAdmissibleReading("no admissible reading survives the checks");
  return out;
}

}  // namespace ctxdrt
