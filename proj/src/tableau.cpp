#include "ctxdrt/tableau.hpp"

#include <algorithm>
#include <set>

#include "ctxdrt/text.hpp"

namespace ctxdrt {

std::string Label::to_string() const {
  std::string s = "(" + std::to_string(context) + ", {";
  bool first = true;
  for (int c : accessible) {
    if (!first) s += ",";
    s += std::to_string(c);
    first = false;
  }
  s += "}, ";
  s += polarity == Polarity::Pos ? "+" : "-";
  return s + ")";
}

bool contexts_compatible(const Label& a, const Label& b) {
  return a.context == b.context || b.accessible.count(a.context) != 0 || a.accessible.count(b.context) != 0;
}

std::vector<Closure> closure_options(const std::vector<LiteralNode>& branch, const Substitution& s) {
  std::vector<Closure> out;
  for (std::size_t i = 0; i < branch.size(); ++i) {
    const auto& p = branch[i];
    if (p.label.polarity != Polarity::Pos) continue;
    for (std::size_t j = 0; j < branch.size(); ++j) {
      const auto& n = branch[j];
      if (n.label.polarity != Polarity::Neg) continue;
      if (p.predicate != n.predicate || p.args.size() != n.args.size()) continue;
      if (!contexts_compatible(p.label, n.label)) continue;
      if (auto u = unify(p.args, n.args, s)) out.push_back(Closure{std::move(*u), i, j});
    }
  }
  return out;
}

std::optional<Closure> close_branch(const std::vector<LiteralNode>& branch, const Substitution& s) {
  auto all = closure_options(branch, s);
  if (all.empty()) return std::nullopt;
  return std::move(all.front());
}

void ProofStats::count(const std::string& rule, std::size_t n) {
  ruleApplications += n;
  perRule[rule] += n;
}

void ProofStats::add(const ProofStats& other) {
  ruleApplications += other.ruleApplications;
  for (const auto& [k, v] : other.perRule) perRule[k] += v;
  for (const auto& [k, v] : other.contextConditionExpansions) contextConditionExpansions[k] += v;
  branches += other.branches;
  closures += other.closures;
  contextEntries.insert(contextEntries.end(), other.contextEntries.begin(), other.contextEntries.end());
}

std::size_t ProofStats::total_context_expansions() const {
  std::size_t n = 0;
  for (const auto& [k, v] : contextConditionExpansions) n += v;
  return n;
}

const char* status_name(TaskStatus s) {
  switch (s) {
    case TaskStatus::Closed: return "closed";
    case TaskStatus::OpenSaturated: return "open-saturated";
    case TaskStatus::OpenBounded: return "open-bounded";
  }
  return "?";
}

namespace {

struct EnvNode;
using Env = std::shared_ptr<const EnvNode>;
struct EnvNode {
  std::string name;
  Term term;
  Env next;
};

Env extend(Env e, const std::string& name, Term t) {
  return std::make_shared<const EnvNode>(EnvNode{name, std::move(t), std::move(e)});
}

Term lookup(const Env& e, const std::string& name) {
  for (const EnvNode* p = e.get(); p; p = p->next.get())
    if (p->name == name) return p->term;
  return constant(name);
}

std::vector<Term> env_free_vars(const Env& e) {
  std::vector<int> ids;
  for (const EnvNode* p = e.get(); p; p = p->next.get()) collect_free_vars(p->term, ids);
  std::sort(ids.begin(), ids.end());
  std::vector<Term> out;
  for (int id : ids) out.push_back(free_var(id));
  return out;
}

enum class Kind { Box, Cond, Formula };

struct Item {
  Label label;
  Kind kind = Kind::Box;
  const Drs* drs = nullptr;
  const Condition* cond = nullptr;
  const LConFormula* formula = nullptr;
  Env env;
  bool instantiated = false;  // gamma instance: universe already bound
};

Item box_item(Label l, const Drs& k, Env e) {
  Item it;
  it.label = std::move(l);
  it.kind = Kind::Box;
  it.drs = &k;
  it.env = std::move(e);
  return it;
}

Item cond_item(Label l, const Condition& c, Env e) {
  Item it;
  it.label = std::move(l);
  it.kind = Kind::Cond;
  it.cond = &c;
  it.env = std::move(e);
  return it;
}

Item formula_item(Label l, const LConFormula& f, Env e) {
  Item it;
  it.label = std::move(l);
  it.kind = Kind::Formula;
  it.formula = &f;
  it.env = std::move(e);
  return it;
}

Label signed_as(Label l, Polarity p) {
  l.polarity = p;
  return l;
}

Polarity flip(Polarity p) { return p == Polarity::Pos ? Polarity::Neg : Polarity::Pos; }

struct Beta {
  std::string rule;
  std::vector<Item> alternatives;
};

struct Gamma {
  Item item;
  int uses = 0;
  std::size_t groundSeen = 0;  // terms already combined into instances
};

struct TabBranch {
  std::vector<Item> queue;
  std::vector<Beta> betas;
  std::vector<Gamma> gammas;
  std::vector<LiteralNode> literals;
  // Ground mode only: the branch's Herbrand universe and its literals by
  // printed atom, one label list per polarity.
  std::vector<Term> terms;
  std::set<std::string> termKeys;
  std::map<std::string, std::vector<Label>> positive;
  std::map<std::string, std::vector<Label>> negative;
  bool closed = false;
};

struct BudgetExceeded {};

enum class GroundResult { Closed, Saturated, Bounded };

void add_term(TabBranch& b, const Term& t) {
  if (b.termKeys.insert(to_string(t)).second) b.terms.push_back(t);
}

std::string literal_key(const std::string& predicate, const std::vector<Term>& args) {
  std::string key = predicate + "(";
  for (std::size_t i = 0; i < args.size(); ++i) key += (i ? "," : "") + to_string(args[i]);
  return key + ")";
}

bool ground_term(const Term& t) {
  if (t->kind == TermNode::Kind::FreeVar) return false;
  return std::all_of(t->args.begin(), t->args.end(), ground_term);
}

// Records a ground literal; returns true if it closes the branch.
bool index_literal(TabBranch& b, const LiteralNode& lit) {
  std::string key = literal_key(lit.predicate, lit.args);
  bool pos = lit.label.polarity == Polarity::Pos;
  auto& opposite = pos ? b.negative : b.positive;
  bool closes = false;
  if (auto it = opposite.find(key); it != opposite.end())
    closes = std::any_of(it->second.begin(), it->second.end(),
                         [&](const Label& l) { return contexts_compatible(l, lit.label); });
  (pos ? b.positive : b.negative)[key].push_back(lit.label);
  return closes;
}

const std::vector<Referent>& gamma_universe(const Item& it) {
  if (it.kind == Kind::Box) return it.drs->universe;
  return it.cond->as<Imp>().antecedent->universe;
}

class Engine {
 public:
  Engine(const ProverBounds& bounds, ProofStats& stats) : bounds_(bounds), stats_(&stats) {}

  int fresh_context() { return nextContext_++; }

  void record_entry(const Label& parent, const Label& child) {
    if (bounds_.recordContexts) stats_->contextEntries.emplace_back(parent, child);
  }

  void count(const char* rule, std::size_t n = 1) { stats_->count(rule, n); }

  Env skolemize(TabBranch& b, const std::vector<Referent>& universe, Env env, const char* rule) {
    if (universe.empty()) return env;
    std::vector<Term> args = ground_ ? std::vector<Term>{} : env_free_vars(env);
    for (const auto& r : universe) {
      Term t = skolem(nextFn_++, args);
      if (ground_) add_term(b, t);
      env = extend(env, r.name, t);
      if (rule) count(rule);
    }
    return env;
  }

  Env instantiate(const std::vector<Referent>& universe, Env env, const char* rule) {
    for (const auto& r : universe) {
      env = extend(env, r.name, free_var(nextVar_++));
      count(rule);
    }
    return env;
  }

  void assume(TabBranch& b, const Drs& k, const Label& l, const Env& env) {
    for (const auto& c : k.conditions) {
      count("+:C");
      stats_->contextConditionExpansions[print_condition(c)] += 1;
      b.queue.push_back(cond_item(signed_as(l, Polarity::Pos), c, env));
    }
  }

  void saturate(TabBranch& b) {
    for (std::size_t q = 0; q < b.queue.size(); ++q) {
      tick();
      Item it = b.queue[q];
      expand(b, it);
    }
    b.queue.clear();
  }

  bool solve(std::vector<TabBranch> open, const Substitution& s, int k) {
    tick();
    if (open.empty()) return true;
    TabBranch b = std::move(open.back());
    open.pop_back();
    saturate(b);

    for (const auto& beta : b.betas) {
      if (beta.alternatives.empty()) {
        count(beta.rule.c_str());
        ++stats_->closures;
        return solve(std::move(open), s, k);
      }
    }

    auto options = closure_options(b.literals, s);
    for (const auto& opt : options) {
      if (opt.subst.size() == s.size()) {
        ++stats_->closures;
        return solve(std::move(open), s, k);
      }
    }
    for (const auto& opt : options) {
      ++stats_->closures;
      if (solve(open, opt.subst, k)) return true;
    }

    if (!b.betas.empty()) {
      Beta beta = std::move(b.betas.front());
      b.betas.erase(b.betas.begin());
      count(beta.rule.c_str());
      stats_->branches += beta.alternatives.size();
      for (auto it = beta.alternatives.rbegin(); it != beta.alternatives.rend(); ++it) {
        TabBranch child = b;
        child.queue.push_back(*it);
        open.push_back(std::move(child));
      }
      return solve(std::move(open), s, k);
    }

    Gamma* pick = nullptr;
    for (auto& g : b.gammas) {
      if (g.uses >= k) {
        gammaCut_ = true;
        continue;
      }
      if (!pick || g.uses < pick->uses) pick = &g;
    }
    if (!pick) return false;
    ++pick->uses;
    b.queue.push_back(gamma_instance(pick->item));
    open.push_back(std::move(b));
    return solve(std::move(open), s, k);
  }

  GroundResult ground(TabBranch b) {
    while (true) {
      tick();
      saturate(b);
      if (b.closed) return GroundResult::Closed;

      // Drop satisfied disjunctions and commit to those with a single live
      // alternative before branching.
      std::optional<Beta> split;
      bool committed = false;
      for (std::size_t i = 0; i < b.betas.size() && !committed;) {
        std::vector<Item> live;
        bool satisfied = false;
        for (const auto& alt : b.betas[i].alternatives) {
          int v = ground_value(b, alt);
          if (v == 1) satisfied = true;
          if (v != 0) live.push_back(alt);
        }
        if (satisfied) {
          b.betas.erase(b.betas.begin() + static_cast<std::ptrdiff_t>(i));
          continue;
        }
        if (live.empty()) return GroundResult::Closed;
        if (live.size() == 1) {
          b.queue.push_back(live.front());
          b.betas.erase(b.betas.begin() + static_cast<std::ptrdiff_t>(i));
          committed = true;
          break;
        }
        b.betas[i].alternatives = std::move(live);
        ++i;
      }
      if (committed) continue;

      if (!b.betas.empty()) {
        Beta beta = std::move(b.betas.front());
        b.betas.erase(b.betas.begin());
        std::stable_sort(beta.alternatives.begin(), beta.alternatives.end(),
                         [](const Item& x, const Item& y) { return ground_cost(x) < ground_cost(y); });
        bool bounded = false;
        for (const auto& alt : beta.alternatives) {
          TabBranch child = b;
          child.queue.push_back(alt);
          GroundResult r = ground(std::move(child));
          if (r == GroundResult::Saturated) return r;
          if (r == GroundResult::Bounded) bounded = true;
        }
        return bounded ? GroundResult::Bounded : GroundResult::Closed;
      }

      if (b.terms.empty() && !b.gammas.empty()) add_term(b, skolem(nextFn_++, {}));
      bool added = false;
      const std::size_t total = b.terms.size();
      for (auto& g : b.gammas) {
        const auto& universe = gamma_universe(g.item);
        const std::size_t seen = g.groundSeen;
        g.groundSeen = total;
        // Tuples using at least one term not seen before; the first such
        // position is p.
        if (seen >= total) continue;
        for (std::size_t p = 0; p < universe.size(); ++p) {
          if (p > 0 && seen == 0) break;
          std::vector<std::size_t> idx(universe.size(), 0);
          idx[p] = seen;
          auto advance = [&] {
            for (std::size_t q = idx.size(); q-- > 0;) {
              std::size_t hi = q < p ? seen : total;
              if (++idx[q] < hi) return true;
              idx[q] = q == p ? seen : 0;
            }
            return false;
          };
          do {
            tick();
            Item inst = g.item;
            for (std::size_t q = 0; q < universe.size(); ++q)
              inst.env = extend(inst.env, universe[q].name, b.terms[idx[q]]);
            inst.instantiated = true;
            b.queue.push_back(std::move(inst));
            added = true;
          } while (advance());
        }
      }
      if (!added) return incomplete_ ? GroundResult::Bounded : GroundResult::Saturated;
    }
  }

  TaskStatus decide(const TabBranch& base, const std::optional<Item>& leaf) {
    TabBranch start = base;
    if (leaf) start.queue.push_back(*leaf);

    // A saturated open branch over ground terms describes a countermodel, so
    // the task is settled without searching for a proof.
    GroundResult ground = ground_check(start);
    if (ground == GroundResult::Saturated) return TaskStatus::OpenSaturated;

    try {
      for (int k = 1; k <= bounds_.gammaLimit; ++k) {
        nodes_ = 0;
        gammaCut_ = false;
        if (solve({start}, Substitution{}, k)) return TaskStatus::Closed;
        if (!gammaCut_) break;
      }
    } catch (const BudgetExceeded&) {
    }
    return ground == GroundResult::Closed ? TaskStatus::Closed : TaskStatus::OpenBounded;
  }

  // Runs off the books: its rule applications are not part of ProofStats.
  GroundResult ground_check(const TabBranch& start) {
    ProofStats scratch;
    ProofStats* saved = stats_;
    stats_ = &scratch;
    ground_ = true;
    incomplete_ = false;
    nodes_ = 0;
    GroundResult r = GroundResult::Bounded;
    try {
      TabBranch g = start;
      for (const auto& lit : g.literals) {
        for (const auto& t : lit.args) {
          if (!ground_term(t)) incomplete_ = true;
          add_term(g, t);
        }
        if (index_literal(g, lit)) g.closed = true;
      }
      r = ground(std::move(g));
    } catch (const BudgetExceeded&) {
      r = GroundResult::Bounded;
    }
    ground_ = false;
    stats_ = saved;
    return r;
  }

 private:
  void tick() {
    if (++nodes_ > static_cast<std::size_t>(bounds_.depthLimit)) throw BudgetExceeded{};
  }

  Item gamma_instance(const Item& it) {
    Item inst = it;
    inst.instantiated = true;
    if (it.kind == Kind::Box) {
      inst.env = instantiate(it.drs->universe, it.env, "-:U");
    } else {
      inst.env = instantiate(it.cond->as<Imp>().antecedent->universe, it.env, "+:=>");
    }
    return inst;
  }

  // Ground mode: an existential is witnessed by some term already on the
  // branch or by a fresh one. Trying old terms first finds small models; the
  // fresh alternative keeps refutations sound.
  Beta witness_choice(const TabBranch& b, const Item& it, const std::vector<Referent>& universe) {
    Beta beta{"delta", {}};
    std::vector<Term> options = b.terms;
    options.push_back(nullptr);
    std::vector<std::size_t> idx(universe.size(), 0);
    while (true) {
      Item alt = it;
      alt.instantiated = true;
      for (std::size_t q = 0; q < universe.size(); ++q) {
        Term t = options[idx[q]] ? options[idx[q]] : skolem(nextFn_++, {});
        alt.env = extend(alt.env, universe[q].name, t);
      }
      beta.alternatives.push_back(std::move(alt));
      std::size_t q = universe.size();
      while (q > 0 && ++idx[q - 1] == options.size()) idx[--q] = 0;
      if (q == 0) break;
    }
    return beta;
  }

  // Cheap alternatives first: literals, then connectives, then boxes that
  // introduce referents and so grow the term set.
  static int ground_cost(const Item& it) {
    bool pos = it.label.polarity == Polarity::Pos;
    const Drs* k = nullptr;
    if (it.kind == Kind::Box) {
      k = it.drs;
    } else if (it.kind == Kind::Cond) {
      if (it.cond->is<Atom>()) return 0;
      const auto* n = std::get_if<Neg>(&it.cond->node);
      if (!n) return 1;
      k = n->body.get();
      pos = !pos;
    } else {
      return 1;
    }
    return pos && !it.instantiated && !k->universe.empty() ? 2 : 1;
  }

  // 1 if alt is a ground literal already on the branch, 0 if it would close
  // the branch at once, 2 otherwise.
  int ground_value(const TabBranch& b, const Item& alt) const {
    if (alt.kind != Kind::Cond) return 2;
    const auto* a = std::get_if<Atom>(&alt.cond->node);
    if (!a) return 2;
    std::vector<Term> args;
    for (const auto& r : a->args) args.push_back(lookup(alt.env, r.name));
    std::string key = literal_key(a->predicate, args);
    bool pos = alt.label.polarity == Polarity::Pos;
    const auto& same = pos ? b.positive : b.negative;
    const auto& opposite = pos ? b.negative : b.positive;
    if (auto it = opposite.find(key); it != opposite.end())
      for (const auto& l : it->second)
        if (contexts_compatible(l, alt.label)) return 0;
    if (auto it = same.find(key); it != same.end())
      for (const auto& l : it->second)
        if (l == alt.label) return 1;
    return 2;
  }

  void expand(TabBranch& b, const Item& it) {
    const bool pos = it.label.polarity == Polarity::Pos;
    switch (it.kind) {
      case Kind::Box: {
        const Drs& k = *it.drs;
        if (pos) {
          if (ground_ && !it.instantiated && !k.universe.empty()) {
            b.betas.push_back(witness_choice(b, it, k.universe));
            return;
          }
          Env e = it.instantiated ? it.env : skolemize(b, k.universe, it.env, "+:U");
          assume(b, k, it.label, e);
        } else if (!it.instantiated && !k.universe.empty()) {
          b.gammas.push_back(Gamma{it, 0, 0});
        } else {
          Beta beta{"-:C", {}};
          for (const auto& c : k.conditions) beta.alternatives.push_back(cond_item(it.label, c, it.env));
          b.betas.push_back(std::move(beta));
        }
        return;
      }
      case Kind::Cond:
        expand_condition(b, it, pos);
        return;
      case Kind::Formula:
        expand_formula(b, it, pos);
        return;
    }
  }

  void expand_condition(TabBranch& b, const Item& it, bool pos) {
    const Condition& c = *it.cond;
    if (const auto* a = std::get_if<Atom>(&c.node)) {
      LiteralNode lit{it.label, a->predicate, {}};
      for (const auto& r : a->args) {
        Term t = lookup(it.env, r.name);
        if (ground_) {
          if (!ground_term(t)) incomplete_ = true;
          add_term(b, t);
        }
        lit.args.push_back(std::move(t));
      }
      if (ground_ && index_literal(b, lit)) b.closed = true;
      b.literals.push_back(std::move(lit));
    } else if (const auto* n = std::get_if<Neg>(&c.node)) {
      count(pos ? "+:not" : "-:not");
      b.queue.push_back(box_item(signed_as(it.label, flip(it.label.polarity)), *n->body, it.env));
    } else if (const auto* i = std::get_if<Imp>(&c.node)) {
      const Drs& ante = *i->antecedent;
      if (pos) {
        if (!it.instantiated && !ante.universe.empty()) {
          b.gammas.push_back(Gamma{it, 0, 0});
          return;
        }
        Beta beta{"+:=>", {}};
        for (const auto& ac : ante.conditions)
          beta.alternatives.push_back(cond_item(signed_as(it.label, Polarity::Neg), ac, it.env));
        beta.alternatives.push_back(box_item(it.label, *i->consequent, it.env));
        b.betas.push_back(std::move(beta));
      } else {
        if (ground_ && !it.instantiated && !ante.universe.empty()) {
          b.betas.push_back(witness_choice(b, it, ante.universe));
          return;
        }
        count("-:=>");
        Env e = it.instantiated ? it.env : skolemize(b, ante.universe, it.env, nullptr);
        assume(b, ante, it.label, e);
        b.queue.push_back(box_item(it.label, *i->consequent, e));
      }
    } else if (const auto* o = std::get_if<Or>(&c.node)) {
      if (pos) {
        b.betas.push_back(Beta{"+:or", {box_item(it.label, *o->left, it.env), box_item(it.label, *o->right, it.env)}});
      } else {
        count("-:or");
        b.queue.push_back(box_item(it.label, *o->left, it.env));
        b.queue.push_back(box_item(it.label, *o->right, it.env));
      }
    } else {
      throw AlphaRemaining();
    }
  }

  void expand_formula(TabBranch& b, const Item& it, bool pos) {
    const LConFormula& f = *it.formula;
    if (const auto* d = std::get_if<DrsLit>(&f.node)) {
      b.queue.push_back(box_item(it.label, d->drs, it.env));
    } else if (const auto* in = std::get_if<In>(&f.node)) {
      Label child{fresh_context(), it.label.accessible, Polarity::Pos};
      child.accessible.insert(it.label.context);
      record_entry(it.label, child);
      if (!pos) {
        count("-:in");
        Env e = skolemize(b, in->context.universe, it.env, "+:U");
        assume(b, in->context, child, e);
        b.queue.push_back(formula_item(signed_as(child, Polarity::Neg), *in->body, e));
      } else {
        // Single instance of the context universe; +in never arises from
        // extracted formulas, which are refuted as a whole.
        Env e = instantiate(in->context.universe, it.env, "-:U");
        Beta beta{"+:in", {}};
        for (const auto& c : in->context.conditions)
          beta.alternatives.push_back(cond_item(signed_as(child, Polarity::Neg), c, e));
        beta.alternatives.push_back(formula_item(child, *in->body, e));
        b.betas.push_back(std::move(beta));
      }
    } else if (const auto* a = std::get_if<LAnd>(&f.node)) {
      if (pos) {
        count("+:and");
        for (const auto& g : a->items) b.queue.push_back(formula_item(it.label, g, it.env));
      } else {
        Beta beta{"-:and", {}};
        for (const auto& g : a->items) beta.alternatives.push_back(formula_item(it.label, g, it.env));
        b.betas.push_back(std::move(beta));
      }
    } else {
      const auto& o = f.as<LOr>();
      if (pos) {
        Beta beta{"+:lor", {}};
        for (const auto& g : o.items) beta.alternatives.push_back(formula_item(it.label, g, it.env));
        b.betas.push_back(std::move(beta));
      } else {
        count("-:lor");
        for (const auto& g : o.items) b.queue.push_back(formula_item(it.label, g, it.env));
      }
    }
  }

  ProverBounds bounds_;
  ProofStats* stats_;
  int nextVar_ = 0;
  int nextFn_ = 0;
  int nextContext_ = 1;
  std::size_t nodes_ = 0;
  bool gammaCut_ = false;
  bool ground_ = false;
  bool incomplete_ = false;  // a non-ground literal reached the ground check
};

class LConWalker {
 public:
  LConWalker(Engine& engine, ProofStats& stats, std::vector<TaskStatus>& verdicts)
      : engine_(engine), stats_(stats), verdicts_(verdicts) {}

  // Negative context: each task leaf is decided on a branch holding every
  // enclosing context, which is expanded once for all leaves below it.
  void walk(const LConFormula& f, const Label& label, const Env& env, const TabBranch& base) {
    if (const auto* d = std::get_if<DrsLit>(&f.node)) {
      verdicts_.push_back(engine_.decide(base, box_item(label, d->drs, env)));
    } else if (const auto* in = std::get_if<In>(&f.node)) {
      stats_.count("-:in");
      Label child{engine_.fresh_context(), label.accessible, Polarity::Pos};
      child.accessible.insert(label.context);
      engine_.record_entry(label, child);
      TabBranch b = base;
      Env e = engine_.skolemize(b, in->context.universe, env, "+:U");
      engine_.assume(b, in->context, child, e);
      engine_.saturate(b);
      walk(*in->body, signed_as(child, Polarity::Neg), e, b);
    } else if (const auto* a = std::get_if<LAnd>(&f.node)) {
      stats_.count("-:and");
      for (const auto& g : a->items) walk(g, label, env, base);
    } else {
      stats_.count("-:lor");
      for (const auto& g : f.as<LOr>().items) walk(g, label, env, base);
    }
  }

 private:
  Engine& engine_;
  ProofStats& stats_;
  std::vector<TaskStatus>& verdicts_;
};

}  // namespace

LConProof prove_lcon(const LConFormula& f, const ProverBounds& bounds) {
  LConProof proof;
  const LConFormula formula = f;
  Engine engine(bounds, proof.stats);
  LConWalker walker(engine, proof.stats, proof.verdicts);
  walker.walk(formula, Label{0, {}, Polarity::Neg}, Env{}, TabBranch{});
  return proof;
}

TaskProof naive_prove(const Drs& premise, const Drs& conclusion, const ProverBounds& bounds) {
  TaskProof proof;
  Engine engine(bounds, proof.stats);
  Label pos{0, {}, Polarity::Pos};
  TabBranch b;
  Env e = engine.skolemize(b, premise.universe, Env{}, "+:U");
  engine.assume(b, premise, pos, e);
  engine.saturate(b);
  proof.status = engine.decide(b, box_item(Label{0, {}, Polarity::Neg}, conclusion, e));
  return proof;
}

TaskProof naive_prove(const InferenceTask& task, const ProverBounds& bounds) {
  return naive_prove(task.premise, task.conclusion, bounds);
}

TaskProof refute(const Drs& premise, const ProverBounds& bounds) {
  TaskProof proof;
  Engine engine(bounds, proof.stats);
  TabBranch b;
  Env e = engine.skolemize(b, premise.universe, Env{}, "+:U");
  engine.assume(b, premise, Label{0, {}, Polarity::Pos}, e);
  engine.saturate(b);
  proof.status = engine.decide(b, std::nullopt);
  return proof;
}

TaskProof prove_signed(const std::vector<SignedFormula>& roots, const ProverBounds& bounds) {
  TaskProof proof;
  Engine engine(bounds, proof.stats);
  TabBranch b;
  for (const auto& r : roots) b.queue.push_back(formula_item(r.label, r.formula, Env{}));
  proof.status = engine.decide(b, std::nullopt);
  return proof;
}

}  // namespace ctxdrt
