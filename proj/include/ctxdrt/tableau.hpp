// Context-labeled free-variable tableaux.
//
// Every node carries a label (i, sigma, polarity): i identifies the context the
// formula lives in, sigma the contexts accessible from it. Entering
// in(K, phi) under negative polarity opens a fresh context j that sees
// sigma + {i}; K is assumed there and phi refuted there. Two complementary
// literals close a branch only if their contexts are compatible.
//
// prove_lcon expands every context once and then decides each task leaf on its
// own; naive_prove decides one premise/conclusion pair from scratch. Both share
// the rule set and strategy, so their ProofStats differ only by context reuse.

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ctxdrt/drs.hpp"
#include "ctxdrt/lcon.hpp"
#include "ctxdrt/projection.hpp"
#include "ctxdrt/term.hpp"

namespace ctxdrt {

enum class Polarity { Pos, Neg };

struct Label {
  int context = 0;
  std::set<int> accessible;
  Polarity polarity = Polarity::Neg;

  bool operator==(const Label&) const = default;
  std::string to_string() const;
};

// Closure condition on contexts: i = j, i in sigma', or j in sigma.
bool contexts_compatible(const Label& a, const Label& b);

struct LiteralNode {
  Label label;
  std::string predicate;
  std::vector<Term> args;
};

struct Closure {
  Substitution subst;
  std::size_t positive = 0;
  std::size_t negative = 0;
};

// All ways to close the branch under s, in node order.
std::vector<Closure> closure_options(const std::vector<LiteralNode>& branch, const Substitution& s = {});
std::optional<Closure> close_branch(const std::vector<LiteralNode>& branch, const Substitution& s = {});

struct ProverBounds {
  int gammaLimit = 5;     // instances per gamma formula per branch, deepened from 1
  int depthLimit = 20000; // nodes per task attempt
  bool recordContexts = false;
};

struct ProofStats {
  std::size_t ruleApplications = 0;
  std::map<std::string, std::size_t> perRule;
  std::map<std::string, std::size_t> contextConditionExpansions;
  std::size_t branches = 0;
  std::size_t closures = 0;
  // (parent label, child label) for every context entered; filled only when
  // ProverBounds::recordContexts is set.
  std::vector<std::pair<Label, Label>> contextEntries;

  void count(const std::string& rule, std::size_t n = 1);
  void add(const ProofStats& other);
  std::size_t total_context_expansions() const;
};

enum class TaskStatus { Closed, OpenSaturated, OpenBounded };
const char* status_name(TaskStatus s);

struct LConProof {
  std::vector<TaskStatus> verdicts;  // indexed by task tag
  ProofStats stats;
};

LConProof prove_lcon(const LConFormula& f, const ProverBounds& bounds = {});

struct TaskProof {
  TaskStatus status = TaskStatus::OpenBounded;
  ProofStats stats;
};

// Does premise entail conclusion? The conclusion may mention premise referents.
TaskProof naive_prove(const Drs& premise, const Drs& conclusion, const ProverBounds& bounds = {});
TaskProof naive_prove(const InferenceTask& task, const ProverBounds& bounds = {});

// Closed means the premise is unsatisfiable.
TaskProof refute(const Drs& premise, const ProverBounds& bounds = {});

// One branch holding the given signed formulas, no task splitting. Closed iff
// every branch closes.
struct SignedFormula {
  Label label;
  LConFormula formula;
};
TaskProof prove_signed(const std::vector<SignedFormula>& roots, const ProverBounds& bounds = {});

}  // namespace ctxdrt
