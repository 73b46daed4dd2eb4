#include "ctxdrt/lcon.hpp"

#include <algorithm>
#include <functional>

#include "ctxdrt/errors.hpp"
#include "ctxdrt/text.hpp"

namespace ctxdrt {

bool operator==(const DrsLit& a, const DrsLit& b) { return a.drs == b.drs; }
bool operator==(const In& a, const In& b) { return a.context == b.context && *a.body == *b.body; }
bool operator==(const LAnd& a, const LAnd& b) { return a.items == b.items; }
bool operator==(const LOr& a, const LOr& b) { return a.items == b.items; }
bool operator==(const LConFormula& a, const LConFormula& b) { return a.node == b.node; }

LConFormula lit(Drs k) { return LConFormula{DrsLit{std::move(k)}}; }
LConFormula in(Drs context, LConFormula body) {
  return LConFormula{In{std::move(context), std::make_shared<const LConFormula>(std::move(body))}};
}
LConFormula land(std::vector<LConFormula> items) { return LConFormula{LAnd{std::move(items)}}; }
LConFormula lor(std::vector<LConFormula> items) { return LConFormula{LOr{std::move(items)}}; }

std::vector<const Drs*> task_leaves(const LConFormula& f) {
  std::vector<const Drs*> out;
  std::function<void(const LConFormula&)> walk = [&](const LConFormula& g) {
    if (const auto* d = std::get_if<DrsLit>(&g.node)) {
      out.push_back(&d->drs);
    } else if (const auto* i = std::get_if<In>(&g.node)) {
      walk(*i->body);
    } else if (const auto* a = std::get_if<LAnd>(&g.node)) {
      for (const auto& h : a->items) walk(h);
    } else {
      for (const auto& h : g.as<LOr>().items) walk(h);
    }
  };
  walk(f);
  return out;
}

namespace {

struct Group {
  Drs accommodated;
  std::vector<Reading> readings;
};

struct SiteNode {
  DrsPath site;
  Drs addition;
  std::vector<Group> groups;
  std::vector<std::size_t> children;
  std::vector<Condition> known;  // every condition stated here or above
};

void add_to_groups(std::vector<Group>& groups, const Drs& accommodated, const std::vector<Reading>& readings) {
  for (auto& g : groups) {
    if (same_content(g.accommodated, accommodated)) {
      g.readings.insert(g.readings.end(), readings.begin(), readings.end());
      return;
    }
  }
  groups.push_back(Group{accommodated, readings});
}

// The site that directly encloses `site` in the context ordering: the
// antecedent for a consequent, the housing DRS otherwise.
DrsPath enclosing_site(const DrsPath& site) {
  DrsPath parent = site.parent();
  const PathStep& last = site.steps.back();
  if (last.branch == Branch::ImpConsequent) return parent.child(last.condition, Branch::ImpAntecedent);
  return parent;
}

std::vector<DrsPath> accommodatable_alphas(const Drs& root) {
  std::vector<DrsPath> out;
  for (const auto& p : presupposition_paths(root)) {
    for (std::size_t i = 0; i + 1 < p.steps.size(); ++i)
      if (p.steps[i].branch == Branch::AlphaBody)
        throw NotAccommodatable("alpha at " + p.to_string() + " is nested inside another presupposition");
    if (drs_at(root, p).conditions.empty()) continue;
    out.push_back(p);
  }
  return out;
}

// Conditions are sets: a condition stated in an enclosing context, or twice in
// one, is dropped from the addition.
Drs drop_known(const Drs& k, std::vector<Condition>& known) {
  Drs out;
  out.universe = k.universe;
  for (const auto& c : k.conditions) {
    bool seen = std::any_of(known.begin(), known.end(), [&](const Condition& d) { return same_content(c, d); });
    if (seen) continue;
    known.push_back(c);
    out.conditions.push_back(c);
  }
  return out;
}

class SiteTree {
 public:
  SiteTree(const Drs& root, const BackgroundTheory& bg) : root_(root) {
    presupposed_ = presupposed_referents(root);
    std::vector<Condition> known;
    Drs addition = drop_known(merge(prepare_background(bg, root), context_material(root, presupposed_)), known);
    nodes_.push_back(SiteNode{DrsPath{}, std::move(addition), {}, {}, std::move(known)});
    index_[DrsPath{}.to_string()] = 0;
  }

  void add(const Reading& r) {
    std::size_t n = ensure(r.sitePath);
    add_to_groups(nodes_[n].groups, r.accommodated, {r});
  }

  Extraction emit() {
    Extraction out;
    out.formula = emit_node(0, out.tasks);
    return out;
  }

 private:
  std::size_t ensure(const DrsPath& site) {
    auto key = site.to_string();
    if (auto it = index_.find(key); it != index_.end()) return it->second;
    std::size_t parent = ensure(enclosing_site(site));
    std::size_t n = nodes_.size();
    std::vector<Condition> known = nodes_[parent].known;
    Drs addition = drop_known(context_material(drs_at(root_, site), presupposed_), known);
    nodes_.push_back(SiteNode{site, std::move(addition), {}, {}, std::move(known)});
    nodes_[parent].children.push_back(n);
    index_[key] = n;
    return n;
  }

  // Sites adding no context share their parent's premise: their tasks join the
  // parent's and their children hang off the parent.
  void flatten(std::size_t n, std::vector<Group>& groups, std::vector<std::size_t>& kids) const {
    for (std::size_t c : nodes_[n].children) {
      const SiteNode& child = nodes_[c];
      if (child.addition.empty()) {
        for (const auto& g : child.groups) add_to_groups(groups, g.accommodated, g.readings);
        flatten(c, groups, kids);
      } else {
        kids.push_back(c);
      }
    }
  }

  std::optional<LConFormula> emit_node(std::size_t n, std::vector<TaskEntry>& tasks) const {
    std::vector<Group> groups = nodes_[n].groups;
    std::vector<std::size_t> kids;
    flatten(n, groups, kids);

    std::vector<LConFormula> items;
    std::vector<LConFormula> leaves;
    for (const auto& g : groups) {
      tasks.push_back(TaskEntry{tasks.size(), g.accommodated, g.readings});
      leaves.push_back(lit(g.accommodated));
    }
    if (leaves.size() == 1) items.push_back(std::move(leaves.front()));
    if (leaves.size() > 1) items.push_back(lor(std::move(leaves)));
    for (std::size_t c : kids)
      if (auto f = emit_node(c, tasks)) items.push_back(std::move(*f));

    if (items.empty()) return std::nullopt;
    LConFormula body = items.size() == 1 ? std::move(items.front()) : land(std::move(items));
    const Drs& addition = nodes_[n].addition;
    if (addition.empty()) return body;
    return in(addition, std::move(body));
  }

  const Drs& root_;
  std::vector<Referent> presupposed_;
  std::vector<SiteNode> nodes_;
  std::map<std::string, std::size_t> index_;
};

}  // namespace

Extraction extract(const Drs& root, const BackgroundTheory& bg) {
  SiteTree tree(root, bg);
  for (const auto& p : accommodatable_alphas(root))
    for (const auto& r : enumerate_readings(root, p)) tree.add(r);
  return tree.emit();
}

std::optional<LConFormula> naive_restatement(const Drs& root, const BackgroundTheory& bg) {
  std::vector<LConFormula> items;
  for (const auto& p : accommodatable_alphas(root)) {
    for (const auto& r : enumerate_readings(root, p)) {
      auto tasks = build_tasks(r, root, bg);
      items.push_back(in(tasks.first.premise, lit(tasks.first.conclusion)));
    }
  }
  if (items.empty()) return std::nullopt;
  if (items.size() == 1) return std::move(items.front());
  return land(std::move(items));
}

SharingStats context_sharing_depth(const LConFormula& f) {
  SharingStats s;
  std::function<void(const LConFormula&)> walk = [&](const LConFormula& g) {
    if (const auto* i = std::get_if<In>(&g.node)) {
      ++s.inWrappers;
      for (const auto& c : i->context.conditions) {
        ++s.contextConditions;
        ++s.occurrences[print_condition(c)];
      }
      walk(*i->body);
    } else if (const auto* a = std::get_if<LAnd>(&g.node)) {
      for (const auto& h : a->items) walk(h);
    } else if (const auto* o = std::get_if<LOr>(&g.node)) {
      for (const auto& h : o->items) walk(h);
    }
  };
  walk(f);
  for (const auto& [k, v] : s.occurrences) s.duplicatedConditions += v - 1;
  return s;
}

}  // namespace ctxdrt
