// Presupposition resolution and accommodation readings.

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ctxdrt/drs.hpp"

namespace ctxdrt {

struct Binding {
  Referent anaphor;
  Referent antecedent;

  auto operator<=>(const Binding&) const = default;
};

struct Resolution {
  std::vector<Binding> bindings;

  std::string to_string() const;  // "u->y, v->x"
};

enum class SiteKind { Global, Intermediate, Local };
const char* site_name(SiteKind k);

struct Reading {
  SiteKind site = SiteKind::Global;
  DrsPath sitePath;
  DrsPath alphaPath;  // path of the alpha body
  Resolution resolution;
  Drs accommodated;
  Drs result;
  int ordinal = 0;  // 1-based position among admissible readings of this alpha

  std::string id() const;
};

// A generated reading, possibly rejected by the free-variable constraint.
struct Candidate {
  Reading reading;
  std::optional<std::string> blocked;
};

enum class TaskKind { Informativity, Consistency };

struct InferenceTask {
  TaskKind kind = TaskKind::Informativity;
  Drs premise;
  Drs conclusion;
  std::string readingRef;
  std::vector<Binding> renamings;  // background referents renamed apart
};

struct BackgroundTheory {
  std::vector<Drs> postulates;

  bool empty() const { return postulates.empty(); }
};

// An alpha whose body has no conditions: a bare anaphor such as alpha:[v | ].
bool is_simple_anaphor(const Alpha& a);

// Paths of the alpha bodies that need resolving, depth-first. Bare anaphors
// directly inside another alpha body belong to that alpha and are skipped.
std::vector<DrsPath> presupposition_paths(const Drs& root);

std::vector<Resolution> resolve_alpha(const DrsPath& alphaPath, const Drs& root);

// The DRS obtained by deleting the alpha at alphaPath and applying res.
Drs apply_resolution(const Drs& root, const DrsPath& alphaPath, const Resolution& res);

// Accommodation sites from the outermost DRS to the one housing the alpha.
std::vector<DrsPath> accommodation_sites(const DrsPath& alphaPath);

std::vector<Candidate> enumerate_candidates(const Drs& root, const DrsPath& alphaPath);
std::vector<Reading> enumerate_readings(const Drs& root, const DrsPath& alphaPath);

// Background postulates merged into one DRS, with referents renamed apart
// from everything occurring in root.
Drs prepare_background(const BackgroundTheory& bg, const Drs& root, std::vector<Binding>* renamings = nullptr);

// Keeps only conditions usable as context: no alpha inside, and no mention of
// a presupposed referent that is still unplaced.
Drs context_material(const Drs& k, const std::vector<Referent>& presupposed);
std::vector<Referent> presupposed_referents(const Drs& root);

std::pair<InferenceTask, InferenceTask> build_tasks(const Reading& reading, const Drs& root,
                                                    const BackgroundTheory& bg);

}  // namespace ctxdrt
