#include "ctxdrt/fol.hpp"

#include "ctxdrt/errors.hpp"

namespace ctxdrt {

namespace {

FolPtr make(Fol::Kind kind, std::vector<FolPtr> children = {}, std::vector<std::string> names = {}) {
  auto f = std::make_shared<Fol>();
  f->kind = kind;
  f->children = std::move(children);
  f->names = std::move(names);
  return f;
}

std::vector<std::string> names_of(const std::vector<Referent>& u) {
  std::vector<std::string> out;
  for (const auto& r : u) out.push_back(r.name);
  return out;
}

FolPtr conjunction(std::vector<FolPtr> items) {
  if (items.empty()) return make(Fol::Kind::True);
  if (items.size() == 1) return items.front();
  return make(Fol::Kind::And, std::move(items));
}

FolPtr translate(const Condition& c);

std::vector<FolPtr> translate_all(const std::vector<Condition>& conds) {
  std::vector<FolPtr> out;
  for (const auto& c : conds) out.push_back(translate(c));
  return out;
}

FolPtr translate_box(const Drs& k) {
  FolPtr body = conjunction(translate_all(k.conditions));
  if (k.universe.empty()) return body;
  return make(Fol::Kind::Exists, {body}, names_of(k.universe));
}

FolPtr translate(const Condition& c) {
  if (const auto* a = std::get_if<Atom>(&c.node)) {
    auto f = std::make_shared<Fol>();
    f->kind = Fol::Kind::Pred;
    f->predicate = a->predicate;
    f->names = names_of(a->args);
    return f;
  }
  if (const auto* n = std::get_if<Neg>(&c.node)) return make(Fol::Kind::Not, {translate_box(*n->body)});
  if (const auto* i = std::get_if<Imp>(&c.node)) {
    FolPtr body = make(Fol::Kind::Implies,
                       {conjunction(translate_all(i->antecedent->conditions)), translate_box(*i->consequent)});
    if (i->antecedent->universe.empty()) return body;
    return make(Fol::Kind::Forall, {body}, names_of(i->antecedent->universe));
  }
  if (const auto* o = std::get_if<Or>(&c.node))
    return make(Fol::Kind::Or, {translate_box(*o->left), translate_box(*o->right)});
  throw AlphaRemaining();
}

bool is_tight(const Fol& f) {
  return f.kind == Fol::Kind::True || f.kind == Fol::Kind::Pred || f.kind == Fol::Kind::Not ||
         f.kind == Fol::Kind::Exists || f.kind == Fol::Kind::Forall;
}

std::string wrapped(const Fol& f) { return is_tight(f) ? print_fol(f) : "(" + print_fol(f) + ")"; }

}  // namespace

FolPtr drs_to_fol(const Drs& k) { return translate_box(k); }

std::string print_fol(const Fol& f) {
  switch (f.kind) {
    case Fol::Kind::True: return "⊤";
    case Fol::Kind::Pred: {
      std::string s = f.predicate + "(";
      for (std::size_t i = 0; i < f.names.size(); ++i) s += (i ? "," : "") + f.names[i];
      return s + ")";
    }
    case Fol::Kind::Not: return "¬" + wrapped(*f.children[0]);
    case Fol::Kind::And:
    case Fol::Kind::Or: {
      const char* op = f.kind == Fol::Kind::And ? " ∧ " : " ∨ ";
      std::string s;
      for (std::size_t i = 0; i < f.children.size(); ++i) s += (i ? op : "") + wrapped(*f.children[i]);
      return s;
    }
    case Fol::Kind::Implies: return wrapped(*f.children[0]) + " → " + wrapped(*f.children[1]);
    case Fol::Kind::Exists:
    case Fol::Kind::Forall: {
      const char* q = f.kind == Fol::Kind::Exists ? "∃" : "∀";
      std::string s;
      for (const auto& n : f.names) s += q + n + " ";
      const Fol& body = *f.children[0];
      bool bare = body.kind == Fol::Kind::Pred || body.kind == Fol::Kind::True || body.kind == Fol::Kind::Not;
      return s + (bare ? print_fol(body) : "(" + print_fol(body) + ")");
    }
  }
  return "?";
}

}  // namespace ctxdrt
