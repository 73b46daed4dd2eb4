#include "ctxdrt/drs.hpp"

#include <algorithm>
#include <set>

namespace ctxdrt {

namespace {

std::string canonical_key(const Drs& k);

std::string canonical_key(const Condition& c) {
  return std::visit(
      [](const auto& n) -> std::string {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Atom>) {
          std::string s = n.predicate + "(";
          for (std::size_t i = 0; i < n.args.size(); ++i) {
            if (i) s += ",";
            s += n.args[i].name;
          }
          return s + ")";
        } else if constexpr (std::is_same_v<T, Neg>) {
          return "not" + canonical_key(*n.body);
        } else if constexpr (std::is_same_v<T, Imp>) {
          return canonical_key(*n.antecedent) + "=>" + canonical_key(*n.consequent);
        } else if constexpr (std::is_same_v<T, Or>) {
          return canonical_key(*n.left) + "or" + canonical_key(*n.right);
        } else {
          return "alpha:" + canonical_key(*n.body);
        }
      },
      c.node);
}

std::string canonical_key(const Drs& k) {
  std::vector<std::string> u;
  for (const auto& r : k.universe) u.push_back(r.name);
  std::sort(u.begin(), u.end());
  std::vector<std::string> cs;
  for (const auto& c : k.conditions) cs.push_back(canonical_key(c));
  std::sort(cs.begin(), cs.end());
  cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
  std::string s = "[";
  for (const auto& n : u) s += n + ",";
  s += "|";
  for (const auto& c : cs) s += c + ",";
  return s + "]";
}

bool ptr_eq(const DrsPtr& a, const DrsPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

DrsPtr share(Drs k) { return std::make_shared<const Drs>(std::move(k)); }

template <typename Fn>
Condition map_children(const Condition& c, Fn&& fn) {
  return std::visit(
      [&](const auto& n) -> Condition {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Atom>) {
          return Condition{n};
        } else if constexpr (std::is_same_v<T, Neg>) {
          return Condition{Neg{share(fn(*n.body))}};
        } else if constexpr (std::is_same_v<T, Imp>) {
          return Condition{Imp{share(fn(*n.antecedent)), share(fn(*n.consequent))}};
        } else if constexpr (std::is_same_v<T, Or>) {
          return Condition{Or{share(fn(*n.left)), share(fn(*n.right))}};
        } else {
          return Condition{Alpha{share(fn(*n.body))}};
        }
      },
      c.node);
}

// Calls fn(branch, child) for every immediate sub-DRS of c.
template <typename Fn>
void for_each_child(const Condition& c, Fn&& fn) {
  if (const auto* n = std::get_if<Neg>(&c.node)) {
    fn(Branch::NegBody, *n->body);
  } else if (const auto* i = std::get_if<Imp>(&c.node)) {
    fn(Branch::ImpAntecedent, *i->antecedent);
    fn(Branch::ImpConsequent, *i->consequent);
  } else if (const auto* o = std::get_if<Or>(&c.node)) {
    fn(Branch::OrLeft, *o->left);
    fn(Branch::OrRight, *o->right);
  } else if (const auto* a = std::get_if<Alpha>(&c.node)) {
    fn(Branch::AlphaBody, *a->body);
  }
}

void collect_introduced(const Drs& k, std::vector<Referent>& out) {
  out.insert(out.end(), k.universe.begin(), k.universe.end());
  for (const auto& c : k.conditions) for_each_child(c, [&](Branch, const Drs& d) { collect_introduced(d, out); });
}

void collect_mentioned(const Condition& c, std::vector<Referent>& out) {
  if (const auto* a = std::get_if<Atom>(&c.node)) {
    out.insert(out.end(), a->args.begin(), a->args.end());
    return;
  }
  for_each_child(c, [&](Branch, const Drs& d) {
    for (const auto& cc : d.conditions) collect_mentioned(cc, out);
  });
}

void push_unique(std::vector<Referent>& v, const Referent& r) {
  if (std::find(v.begin(), v.end(), r) == v.end()) v.push_back(r);
}

}  // namespace

bool Drs::introduces(const Referent& r) const {
  return std::find(universe.begin(), universe.end(), r) != universe.end();
}

bool operator==(const Atom& a, const Atom& b) { return a.predicate == b.predicate && a.args == b.args; }
bool operator==(const Neg& a, const Neg& b) { return ptr_eq(a.body, b.body); }
bool operator==(const Imp& a, const Imp& b) {
  return ptr_eq(a.antecedent, b.antecedent) && ptr_eq(a.consequent, b.consequent);
}
bool operator==(const Or& a, const Or& b) { return ptr_eq(a.left, b.left) && ptr_eq(a.right, b.right); }
bool operator==(const Alpha& a, const Alpha& b) { return ptr_eq(a.body, b.body); }
bool operator==(const Condition& a, const Condition& b) { return a.node == b.node; }
bool operator==(const Drs& a, const Drs& b) { return a.universe == b.universe && a.conditions == b.conditions; }

bool same_content(const Drs& a, const Drs& b) { return canonical_key(a) == canonical_key(b); }
bool same_content(const Condition& a, const Condition& b) { return canonical_key(a) == canonical_key(b); }

Referent ref(std::string name) { return Referent{std::move(name)}; }

Drs box(std::vector<std::string> universe, std::vector<Condition> conditions) {
  Drs k;
  for (auto& n : universe) k.universe.push_back(Referent{std::move(n)});
  k.conditions = std::move(conditions);
  return k;
}

Condition atom(std::string predicate, std::vector<std::string> args) {
  Atom a{std::move(predicate), {}};
  for (auto& n : args) a.args.push_back(Referent{std::move(n)});
  return Condition{std::move(a)};
}

Condition neg(Drs body) { return Condition{Neg{share(std::move(body))}}; }
Condition imp(Drs antecedent, Drs consequent) {
  return Condition{Imp{share(std::move(antecedent)), share(std::move(consequent))}};
}
Condition disj(Drs left, Drs right) { return Condition{Or{share(std::move(left)), share(std::move(right))}}; }
Condition alpha(Drs body) { return Condition{Alpha{share(std::move(body))}}; }

const char* branch_name(Branch b) {
  switch (b) {
    case Branch::NegBody: return "not";
    case Branch::ImpAntecedent: return "ante";
    case Branch::ImpConsequent: return "cons";
    case Branch::OrLeft: return "left";
    case Branch::OrRight: return "right";
    case Branch::AlphaBody: return "alpha";
  }
  return "?";
}

DrsPath DrsPath::child(std::size_t condition, Branch branch) const {
  DrsPath p = *this;
  p.steps.push_back(PathStep{condition, branch});
  return p;
}

DrsPath DrsPath::parent() const {
  DrsPath p = *this;
  if (!p.steps.empty()) p.steps.pop_back();
  return p;
}

bool DrsPath::is_prefix_of(const DrsPath& other) const {
  return steps.size() <= other.steps.size() && std::equal(steps.begin(), steps.end(), other.steps.begin());
}

std::string DrsPath::to_string() const {
  if (steps.empty()) return "root";
  std::string s;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (i) s += ".";
    s += std::to_string(steps[i].condition) + ":" + branch_name(steps[i].branch);
  }
  return s;
}

std::optional<DrsPath> parse_path(const std::string& text) {
  DrsPath p;
  if (text == "root") return p;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto dot = text.find('.', pos);
    auto part = text.substr(pos, dot == std::string::npos ? std::string::npos : dot - pos);
    auto colon = part.find(':');
    if (colon == std::string::npos || colon == 0) return std::nullopt;
    std::size_t idx = 0;
    for (std::size_t i = 0; i < colon; ++i) {
      if (part[i] < '0' || part[i] > '9') return std::nullopt;
      idx = idx * 10 + static_cast<std::size_t>(part[i] - '0');
    }
    auto name = part.substr(colon + 1);
    std::optional<Branch> b;
    for (auto cand : {Branch::NegBody, Branch::ImpAntecedent, Branch::ImpConsequent, Branch::OrLeft,
                      Branch::OrRight, Branch::AlphaBody}) {
      if (name == branch_name(cand)) b = cand;
    }
    if (!b) return std::nullopt;
    p.steps.push_back(PathStep{idx, *b});
    if (dot == std::string::npos) break;
    pos = dot + 1;
  }
  return p;
}

Drs merge(const Drs& k1, const Drs& k2) {
  Drs out = k1;
  for (const auto& r : k2.universe) {
    if (k1.introduces(r)) throw OverlappingUniverses(r.name);
    out.universe.push_back(r);
  }
  for (const auto& c : k2.conditions) {
    if (std::none_of(out.conditions.begin(), out.conditions.end(),
                     [&](const Condition& d) { return same_content(c, d); }))
      out.conditions.push_back(c);
  }
  return out;
}

const DrsPtr* child_slot(const Condition& c, Branch b) {
  switch (b) {
    case Branch::NegBody:
      if (const auto* n = std::get_if<Neg>(&c.node)) return &n->body;
      break;
    case Branch::ImpAntecedent:
      if (const auto* i = std::get_if<Imp>(&c.node)) return &i->antecedent;
      break;
    case Branch::ImpConsequent:
      if (const auto* i = std::get_if<Imp>(&c.node)) return &i->consequent;
      break;
    case Branch::OrLeft:
      if (const auto* o = std::get_if<Or>(&c.node)) return &o->left;
      break;
    case Branch::OrRight:
      if (const auto* o = std::get_if<Or>(&c.node)) return &o->right;
      break;
    case Branch::AlphaBody:
      if (const auto* a = std::get_if<Alpha>(&c.node)) return &a->body;
      break;
  }
  return nullptr;
}

const Drs& drs_at(const Drs& root, const DrsPath& path) {
  const Drs* cur = &root;
  for (const auto& step : path.steps) {
    if (step.condition >= cur->conditions.size())
      throw InvalidPath("path " + path.to_string() + ": condition index out of range");
    const DrsPtr* slot = child_slot(cur->conditions[step.condition], step.branch);
    if (!slot) throw InvalidPath("path " + path.to_string() + ": branch does not match condition form");
    cur = slot->get();
  }
  return *cur;
}

bool is_sub_drs(const DrsPath& inner, const Drs& root) {
  drs_at(root, inner);
  return true;
}

std::vector<DrsPath> enumerate_sub_drss(const Drs& root) {
  std::vector<DrsPath> out;
  std::function<void(const Drs&, const DrsPath&)> walk = [&](const Drs& k, const DrsPath& p) {
    out.push_back(p);
    for (std::size_t i = 0; i < k.conditions.size(); ++i)
      for_each_child(k.conditions[i], [&](Branch b, const Drs& d) { walk(d, p.child(i, b)); });
  };
  walk(root, DrsPath{});
  return out;
}

std::vector<Referent> accessible_referents(const DrsPath& at, const Drs& root) {
  drs_at(root, at);
  std::vector<Referent> out(root.universe.begin(), root.universe.end());
  const Drs* cur = &root;
  for (std::size_t s = 0; s < at.steps.size(); ++s) {
    const auto& step = at.steps[s];
    const Condition& c = cur->conditions[step.condition];
    if (step.branch == Branch::ImpConsequent) {
      for (const auto& r : c.as<Imp>().antecedent->universe) push_unique(out, r);
    }
    cur = child_slot(c, step.branch)->get();
    if (step.branch == Branch::AlphaBody) continue;
    for (const auto& r : cur->universe) push_unique(out, r);
  }
  return out;
}

Drs context_drs(const DrsPath& at, const Drs& root) {
  drs_at(root, at);
  Drs acc;
  const Drs* cur = &root;
  for (const auto& step : at.steps) {
    Drs level;
    level.universe = cur->universe;
    for (std::size_t i = 0; i < cur->conditions.size(); ++i)
      if (i != step.condition) level.conditions.push_back(cur->conditions[i]);
    acc = merge(acc, level);
    const Condition& c = cur->conditions[step.condition];
    if (step.branch == Branch::ImpConsequent) acc = merge(acc, *c.as<Imp>().antecedent);
    cur = child_slot(c, step.branch)->get();
  }
  return acc;
}

Condition rename_args(const Condition& c, const Referent& from, const Referent& to) {
  if (const auto* a = std::get_if<Atom>(&c.node)) {
    Atom out = *a;
    for (auto& r : out.args)
      if (r == from) r = to;
    return Condition{std::move(out)};
  }
  return map_children(c, [&](const Drs& d) { return rename_args(d, from, to); });
}

Drs rename_args(const Drs& k, const Referent& from, const Referent& to) {
  Drs out;
  out.universe = k.universe;
  for (const auto& c : k.conditions) out.conditions.push_back(rename_args(c, from, to));
  return out;
}

Drs substitute(const Drs& k, const Referent& from, const Referent& to) {
  if (from == to) return k;
  auto intro = introduced_referents(k);
  if (std::find(intro.begin(), intro.end(), from) != intro.end()) throw BoundReferent(from.name);
  return rename_args(k, from, to);
}

Drs update_at(const Drs& root, const DrsPath& path, const std::function<Drs(const Drs&)>& fn) {
  drs_at(root, path);
  std::function<Drs(const Drs&, std::size_t)> rebuild = [&](const Drs& k, std::size_t depth) -> Drs {
    if (depth == path.steps.size()) return fn(k);
    const auto& step = path.steps[depth];
    Drs out = k;
    const Condition& c = k.conditions[step.condition];
    Condition replaced = std::visit(
        [&](const auto& n) -> Condition {
          using T = std::decay_t<decltype(n)>;
          auto sub = [&](const DrsPtr& p, Branch b) {
            return b == step.branch ? share(rebuild(*p, depth + 1)) : p;
          };
          if constexpr (std::is_same_v<T, Atom>) {
            return Condition{n};
          } else if constexpr (std::is_same_v<T, Neg>) {
            return Condition{Neg{sub(n.body, Branch::NegBody)}};
          } else if constexpr (std::is_same_v<T, Imp>) {
            return Condition{Imp{sub(n.antecedent, Branch::ImpAntecedent), sub(n.consequent, Branch::ImpConsequent)}};
          } else if constexpr (std::is_same_v<T, Or>) {
            return Condition{Or{sub(n.left, Branch::OrLeft), sub(n.right, Branch::OrRight)}};
          } else {
            return Condition{Alpha{sub(n.body, Branch::AlphaBody)}};
          }
        },
        c.node);
    out.conditions[step.condition] = std::move(replaced);
    return out;
  };
  return rebuild(root, 0);
}

Drs remove_condition(const Drs& root, const DrsPath& parent, std::size_t index) {
  return update_at(root, parent, [&](const Drs& k) {
    if (index >= k.conditions.size()) throw InvalidPath("condition index out of range");
    Drs out = k;
    out.conditions.erase(out.conditions.begin() + static_cast<std::ptrdiff_t>(index));
    return out;
  });
}

ValidationReport validate(const Drs& k) {
  ValidationReport report;
  std::set<Referent> seen;
  for (const auto& r : introduced_referents(k)) {
    if (!seen.insert(r).second) {
      report.pure = false;
      push_unique(report.duplicates, r);
    }
  }
  std::function<void(const Drs&, std::vector<Referent>)> walk = [&](const Drs& d, std::vector<Referent> acc) {
    acc.insert(acc.end(), d.universe.begin(), d.universe.end());
    for (const auto& c : d.conditions) {
      if (const auto* a = std::get_if<Atom>(&c.node)) {
        for (const auto& r : a->args)
          if (std::find(acc.begin(), acc.end(), r) == acc.end()) push_unique(report.free, r);
      } else if (const auto* i = std::get_if<Imp>(&c.node)) {
        walk(*i->antecedent, acc);
        auto inner = acc;
        inner.insert(inner.end(), i->antecedent->universe.begin(), i->antecedent->universe.end());
        walk(*i->consequent, inner);
      } else {
        for_each_child(c, [&](Branch, const Drs& sub) { walk(sub, acc); });
      }
    }
  };
  walk(k, {});
  return report;
}

bool contains_alpha(const Condition& c) {
  if (c.is<Alpha>()) return true;
  bool found = false;
  for_each_child(c, [&](Branch, const Drs& d) { found = found || contains_alpha(d); });
  return found;
}

bool contains_alpha(const Drs& k) {
  return std::any_of(k.conditions.begin(), k.conditions.end(), [](const Condition& c) { return contains_alpha(c); });
}

std::vector<Referent> mentioned_referents(const Condition& c) {
  std::vector<Referent> out;
  collect_mentioned(c, out);
  return out;
}

std::vector<Referent> introduced_referents(const Drs& k) {
  std::vector<Referent> out;
  collect_introduced(k, out);
  return out;
}

std::vector<Referent> all_referents(const Drs& k) {
  std::vector<Referent> out;
  for (const auto& r : introduced_referents(k)) push_unique(out, r);
  for (const auto& c : k.conditions)
    for (const auto& r : mentioned_referents(c)) push_unique(out, r);
  return out;
}

}  // namespace ctxdrt
