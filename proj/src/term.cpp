#include "ctxdrt/term.hpp"

#include <algorithm>

namespace ctxdrt {

Term free_var(int id) {
  auto n = std::make_shared<TermNode>();
  n->kind = TermNode::Kind::FreeVar;
  n->id = id;
  return n;
}

Term skolem(int fn, std::vector<Term> args) {
  auto n = std::make_shared<TermNode>();
  n->kind = TermNode::Kind::Skolem;
  n->id = fn;
  n->args = std::move(args);
  return n;
}

Term constant(std::string name) {
  auto n = std::make_shared<TermNode>();
  n->kind = TermNode::Kind::Const;
  n->name = std::move(name);
  return n;
}

bool term_equal(const Term& a, const Term& b) {
  if (a == b) return true;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case TermNode::Kind::FreeVar: return a->id == b->id;
    case TermNode::Kind::Const: return a->name == b->name;
    case TermNode::Kind::Skolem:
      if (a->id != b->id || a->args.size() != b->args.size()) return false;
      for (std::size_t i = 0; i < a->args.size(); ++i)
        if (!term_equal(a->args[i], b->args[i])) return false;
      return true;
  }
  return false;
}

std::string to_string(const Term& t) {
  switch (t->kind) {
    case TermNode::Kind::FreeVar: return "X" + std::to_string(t->id);
    case TermNode::Kind::Const: return t->name;
    case TermNode::Kind::Skolem: {
      std::string s = "f" + std::to_string(t->id);
      if (t->args.empty()) return s;
      s += "(";
      for (std::size_t i = 0; i < t->args.size(); ++i) {
        if (i) s += ",";
        s += to_string(t->args[i]);
      }
      return s + ")";
    }
  }
  return "?";
}

void collect_free_vars(const Term& t, std::vector<int>& out) {
  if (t->kind == TermNode::Kind::FreeVar) {
    if (std::find(out.begin(), out.end(), t->id) == out.end()) out.push_back(t->id);
  } else {
    for (const auto& a : t->args) collect_free_vars(a, out);
  }
}

Term Substitution::walk(const Term& t) const {
  Term cur = t;
  while (cur->kind == TermNode::Kind::FreeVar) {
    auto it = bindings_.find(cur->id);
    if (it == bindings_.end()) break;
    cur = it->second;
  }
  return cur;
}

Term Substitution::apply(const Term& t) const {
  Term w = walk(t);
  if (w->kind != TermNode::Kind::Skolem) return w;
  std::vector<Term> args;
  args.reserve(w->args.size());
  for (const auto& a : w->args) args.push_back(apply(a));
  return skolem(w->id, std::move(args));
}

bool Substitution::occurs(int var, const Term& t) const {
  Term w = walk(t);
  if (w->kind == TermNode::Kind::FreeVar) return w->id == var;
  return std::any_of(w->args.begin(), w->args.end(), [&](const Term& a) { return occurs(var, a); });
}

namespace {

bool unify_terms(const Term& a, const Term& b, Substitution& s) {
  Term x = s.walk(a);
  Term y = s.walk(b);
  if (x->kind == TermNode::Kind::FreeVar && y->kind == TermNode::Kind::FreeVar && x->id == y->id) return true;
  if (x->kind == TermNode::Kind::FreeVar) {
    if (s.occurs(x->id, y)) return false;
    s.bind(x->id, y);
    return true;
  }
  if (y->kind == TermNode::Kind::FreeVar) {
    if (s.occurs(y->id, x)) return false;
    s.bind(y->id, x);
    return true;
  }
  if (x->kind != y->kind) return false;
  if (x->kind == TermNode::Kind::Const) return x->name == y->name;
  if (x->id != y->id || x->args.size() != y->args.size()) return false;
  for (std::size_t i = 0; i < x->args.size(); ++i)
    if (!unify_terms(x->args[i], y->args[i], s)) return false;
  return true;
}

}  // namespace

std::optional<Substitution> unify(const std::vector<Term>& a, const std::vector<Term>& b, Substitution s) {
  if (a.size() != b.size()) return std::nullopt;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!unify_terms(a[i], b[i], s)) return std::nullopt;
  return s;
}

}  // namespace ctxdrt
