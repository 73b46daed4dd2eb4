#include "ctxdrt/projection.hpp"

#include <algorithm>
#include <set>

#include "ctxdrt/text.hpp"

namespace ctxdrt {

namespace {

struct AlphaParts {
  const Drs* body = nullptr;
  std::vector<Referent> anaphors;     // bare inner anaphors, in order
  std::vector<Condition> conditions;  // body conditions minus bare anaphors
};

AlphaParts split_alpha(const DrsPath& alphaPath, const Drs& root) {
  if (alphaPath.is_root() || alphaPath.steps.back().branch != Branch::AlphaBody)
    throw NotAnAlpha("path " + alphaPath.to_string() + " does not address an alpha condition");
  AlphaParts parts;
  parts.body = &drs_at(root, alphaPath);
  for (const auto& c : parts.body->conditions) {
    if (const auto* a = std::get_if<Alpha>(&c.node); a && is_simple_anaphor(*a)) {
      for (const auto& r : a->body->universe) parts.anaphors.push_back(r);
    } else {
      parts.conditions.push_back(c);
    }
  }
  return parts;
}

// Calls fn(tuple) for every assignment of `slots` values from `pool`, first
// slot varying slowest.
template <typename Fn>
void for_each_tuple(std::size_t slots, const std::vector<Referent>& pool, Fn&& fn) {
  std::vector<Referent> tuple(slots);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == slots) {
      fn(tuple);
      return;
    }
    for (const auto& r : pool) {
      tuple[i] = r;
      rec(i + 1);
    }
  };
  rec(0);
}

std::vector<Condition> rename_all(std::vector<Condition> conds, const std::vector<Binding>& bindings) {
  for (auto& c : conds)
    for (const auto& b : bindings) c = rename_args(c, b.anaphor, b.antecedent);
  return conds;
}

Drs rename_everywhere(const Drs& k, const Referent& from, const Referent& to) {
  Drs out = rename_args(k, from, to);
  std::function<Drs(const Drs&)> fix = [&](const Drs& d) {
    Drs r;
    for (const auto& u : d.universe) r.universe.push_back(u == from ? to : u);
    for (const auto& c : d.conditions) {
      Condition cc = c;
      std::visit(
          [&](auto& n) {
            using T = std::decay_t<decltype(n)>;
            auto redo = [&](DrsPtr& p) { p = std::make_shared<const Drs>(fix(*p)); };
            if constexpr (std::is_same_v<T, Neg> || std::is_same_v<T, Alpha>) {
              redo(n.body);
            } else if constexpr (std::is_same_v<T, Imp>) {
              redo(n.antecedent);
              redo(n.consequent);
            } else if constexpr (std::is_same_v<T, Or>) {
              redo(n.left);
              redo(n.right);
            }
          },
          cc.node);
      r.conditions.push_back(std::move(cc));
    }
    return r;
  };
  return fix(out);
}

std::optional<std::string> free_variable_violation(const Drs& result, const std::vector<Referent>& allowed,
                                                   const Drs& accommodated) {
  for (const auto& r : validate(result).free) {
    if (std::find(allowed.begin(), allowed.end(), r) != allowed.end()) continue;
    for (const auto& c : accommodated.conditions) {
      auto m = mentioned_referents(c);
      if (std::find(m.begin(), m.end(), r) != m.end())
        return r.name + " occurs free in " + print_condition(c);
    }
    return r.name + " occurs free";
  }
  return std::nullopt;
}

}  // namespace

std::string Resolution::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < bindings.size(); ++i) {
    if (i) s += ", ";
    s += bindings[i].anaphor.name + "->" + bindings[i].antecedent.name;
  }
  return s;
}

const char* site_name(SiteKind k) {
  switch (k) {
    case SiteKind::Global: return "global";
    case SiteKind::Intermediate: return "intermediate";
    case SiteKind::Local: return "local";
  }
  return "?";
}

std::string Reading::id() const {
  return std::string(site_name(site)) + "@" + sitePath.to_string() + "{" + resolution.to_string() + "}";
}

bool is_simple_anaphor(const Alpha& a) { return a.body->conditions.empty(); }

std::vector<DrsPath> presupposition_paths(const Drs& root) {
  std::vector<DrsPath> out;
  for (const auto& p : enumerate_sub_drss(root)) {
    if (p.is_root() || p.steps.back().branch != Branch::AlphaBody) continue;
    DrsPath parent = p.parent();
    bool insideAlpha = !parent.is_root() && parent.steps.back().branch == Branch::AlphaBody;
    if (insideAlpha && drs_at(root, p).conditions.empty()) continue;
    out.push_back(p);
  }
  return out;
}

std::vector<Resolution> resolve_alpha(const DrsPath& alphaPath, const Drs& root) {
  AlphaParts parts = split_alpha(alphaPath, root);
  std::vector<Referent> vars = parts.body->universe;
  vars.insert(vars.end(), parts.anaphors.begin(), parts.anaphors.end());
  auto candidates = accessible_referents(alphaPath, root);
  Drs context = context_drs(alphaPath, root);

  std::vector<Resolution> out;
  for_each_tuple(vars.size(), candidates, [&](const std::vector<Referent>& tuple) {
    Resolution res;
    for (std::size_t i = 0; i < vars.size(); ++i) res.bindings.push_back({vars[i], tuple[i]});
    auto conds = rename_all(parts.conditions, res.bindings);
    bool all = std::all_of(conds.begin(), conds.end(), [&](const Condition& c) {
      return std::any_of(context.conditions.begin(), context.conditions.end(),
                         [&](const Condition& d) { return same_content(c, d); });
    });
    if (all) out.push_back(std::move(res));
  });
  return out;
}

Drs apply_resolution(const Drs& root, const DrsPath& alphaPath, const Resolution& res) {
  split_alpha(alphaPath, root);
  Drs out = remove_condition(root, alphaPath.parent(), alphaPath.steps.back().condition);
  for (const auto& b : res.bindings) out = substitute(out, b.anaphor, b.antecedent);
  return out;
}

std::vector<DrsPath> accommodation_sites(const DrsPath& alphaPath) {
  DrsPath housing = alphaPath.parent();
  std::vector<DrsPath> sites{DrsPath{}};
  DrsPath cur;
  for (const auto& step : housing.steps) {
    if (step.branch == Branch::ImpConsequent) sites.push_back(cur.child(step.condition, Branch::ImpAntecedent));
    cur = cur.child(step.condition, step.branch);
    sites.push_back(cur);
  }
  return sites;
}

std::vector<Candidate> enumerate_candidates(const Drs& root, const DrsPath& alphaPath) {
  AlphaParts parts = split_alpha(alphaPath, root);
  if (parts.conditions.empty())
    throw NotAccommodatable("alpha at " + alphaPath.to_string() +
                            " has no conditions on the presupposed referent; it can only be resolved");
  auto candidates = accessible_referents(alphaPath, root);
  auto rootFree = validate(root).free;
  Drs removed = remove_condition(root, alphaPath.parent(), alphaPath.steps.back().condition);
  auto sites = accommodation_sites(alphaPath);

  std::vector<Candidate> out;
  int ordinal = 0;
  for (std::size_t s = 0; s < sites.size(); ++s) {
    SiteKind kind = s == 0 ? SiteKind::Global : s + 1 == sites.size() ? SiteKind::Local : SiteKind::Intermediate;
    for_each_tuple(parts.anaphors.size(), candidates, [&](const std::vector<Referent>& tuple) {
      Candidate cand;
      Reading& r = cand.reading;
      r.site = kind;
      r.sitePath = sites[s];
      r.alphaPath = alphaPath;
      for (std::size_t i = 0; i < tuple.size(); ++i) r.resolution.bindings.push_back({parts.anaphors[i], tuple[i]});
      r.accommodated.universe = parts.body->universe;
      r.accommodated.conditions = rename_all(parts.conditions, r.resolution.bindings);
      r.result = update_at(removed, sites[s], [&](const Drs& k) { return merge(k, r.accommodated); });
      cand.blocked = free_variable_violation(r.result, rootFree, r.accommodated);
      if (!cand.blocked) r.ordinal = ++ordinal;
      out.push_back(std::move(cand));
    });
  }
  return out;
}

std::vector<Reading> enumerate_readings(const Drs& root, const DrsPath& alphaPath) {
  std::vector<Reading> out;
  for (auto& c : enumerate_candidates(root, alphaPath))
    if (!c.blocked) out.push_back(std::move(c.reading));
  return out;
}

Drs prepare_background(const BackgroundTheory& bg, const Drs& root, std::vector<Binding>* renamings) {
  std::set<std::string> used;
  for (const auto& r : all_referents(root)) used.insert(r.name);
  Drs merged;
  for (const auto& postulate : bg.postulates) {
    Drs p = postulate;
    for (const auto& r : introduced_referents(postulate)) {
      if (!used.count(r.name)) {
        used.insert(r.name);
        continue;
      }
      std::string fresh;
      for (int n = 1;; ++n) {
        fresh = r.name + "_" + std::to_string(n);
        if (!used.count(fresh)) break;
      }
      used.insert(fresh);
      p = rename_everywhere(p, r, Referent{fresh});
      if (renamings) renamings->push_back({r, Referent{fresh}});
    }
    merged = merge(merged, p);
  }
  return merged;
}

std::vector<Referent> presupposed_referents(const Drs& root) {
  std::vector<Referent> out;
  for (const auto& p : enumerate_sub_drss(root)) {
    if (p.is_root() || p.steps.back().branch != Branch::AlphaBody) continue;
    for (const auto& r : drs_at(root, p).universe) out.push_back(r);
  }
  return out;
}

Drs context_material(const Drs& k, const std::vector<Referent>& presupposed) {
  Drs out;
  out.universe = k.universe;
  for (const auto& c : k.conditions) {
    if (contains_alpha(c)) continue;
    auto m = mentioned_referents(c);
    bool mentions = std::any_of(m.begin(), m.end(), [&](const Referent& r) {
      return std::find(presupposed.begin(), presupposed.end(), r) != presupposed.end();
    });
    if (!mentions) out.conditions.push_back(c);
  }
  return out;
}

std::pair<InferenceTask, InferenceTask> build_tasks(const Reading& reading, const Drs& root,
                                                    const BackgroundTheory& bg) {
  auto presupposed = presupposed_referents(root);
  std::vector<Binding> renamings;
  Drs background = prepare_background(bg, root, &renamings);
  Drs context = context_material(context_drs(reading.sitePath, root), presupposed);
  Drs site = context_material(drs_at(root, reading.sitePath), presupposed);
  Drs premise = merge(background, merge(context, site));

  InferenceTask info{TaskKind::Informativity, premise, reading.accommodated, reading.id(), renamings};
  InferenceTask cons{TaskKind::Consistency, merge(premise, reading.accommodated), Drs{}, reading.id(), renamings};
  return {std::move(info), std::move(cons)};
}

}  // namespace ctxdrt
