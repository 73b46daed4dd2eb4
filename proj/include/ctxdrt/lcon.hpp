// The context meta-language: DRS literals, in(K, phi), conjunction and
// disjunction. in(K, phi) holds when K entails phi; nested in-formulas
// accumulate their contexts, so shared material is stated once.

#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ctxdrt/drs.hpp"
#include "ctxdrt/projection.hpp"

namespace ctxdrt {

struct LConFormula;
using LConPtr = std::shared_ptr<const LConFormula>;

struct DrsLit {
  Drs drs;
};

struct In {
  Drs context;
  LConPtr body;
};

struct LAnd {
  std::vector<LConFormula> items;
};

struct LOr {
  std::vector<LConFormula> items;
};

struct LConFormula {
  std::variant<DrsLit, In, LAnd, LOr> node;

  template <typename T>
  bool is() const { return std::holds_alternative<T>(node); }
  template <typename T>
  const T& as() const { return std::get<T>(node); }
};

bool operator==(const DrsLit& a, const DrsLit& b);
bool operator==(const In& a, const In& b);
bool operator==(const LAnd& a, const LAnd& b);
bool operator==(const LOr& a, const LOr& b);
bool operator==(const LConFormula& a, const LConFormula& b);

LConFormula lit(Drs k);
LConFormula in(Drs context, LConFormula body);
LConFormula land(std::vector<LConFormula> items);
LConFormula lor(std::vector<LConFormula> items);

// Task leaves are the DRS literals outside in-contexts, numbered in
// left-to-right order. The number is the task tag.
std::vector<const Drs*> task_leaves(const LConFormula& f);

struct TaskEntry {
  std::size_t tag = 0;
  Drs accommodated;
  // Several readings share one tag when an accommodation site adds no
  // context beyond its parent site.
  std::vector<Reading> readings;
};

struct Extraction {
  std::optional<LConFormula> formula;  // nullopt: no informativity tasks
  std::vector<TaskEntry> tasks;
};

// Re-states every informativity task of root as one nested formula in which
// each piece of context appears exactly once.
Extraction extract(const Drs& root, const BackgroundTheory& bg);

// The per-reading restatement the naive approach works with: one
// in(premise, conclusion) conjunct per informativity task.
std::optional<LConFormula> naive_restatement(const Drs& root, const BackgroundTheory& bg);

struct SharingStats {
  std::size_t inWrappers = 0;
  std::size_t contextConditions = 0;
  std::size_t duplicatedConditions = 0;
  std::map<std::string, std::size_t> occurrences;
};

SharingStats context_sharing_depth(const LConFormula& f);

}  // namespace ctxdrt
