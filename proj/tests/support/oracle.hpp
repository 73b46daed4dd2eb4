// Brute-force entailment oracle: enumerates every interpretation of the
// predicates involved over domains {0..n-1} and evaluates DRSs directly.
// Shares no code with the library's model search.

#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ctxdrt/drs.hpp"

namespace ctxdrt::testing {

enum class Oracle { Entailed, NotEntailed, Undecided };

class BruteForce {
 public:
  explicit BruteForce(int maxDomain = 3) : maxDomain_(maxDomain) {}

  // premise |= conclusion, with the premise's universe and every free name
  // read as fixed individuals.
  Oracle entails(const Drs& premise, const Drs& conclusion) {
    std::vector<std::string> fixed;
    auto addFixed = [&](const std::string& n) {
      if (std::find(fixed.begin(), fixed.end(), n) == fixed.end()) fixed.push_back(n);
    };
    for (const auto& r : premise.universe) addFixed(r.name);
    collect_free(premise, {}, addFixed);
    collect_free(conclusion, {}, addFixed);

    std::map<std::string, int> arity;
    collect_predicates(premise, arity);
    collect_predicates(conclusion, arity);

    skipped_ = false;
    int needed = std::max<int>(1, static_cast<int>(fixed.size()) + skolem_constants(premise, conclusion));
    bool bounded = bernays_schoenfinkel_ && needed <= maxDomain_;
    for (int n = 1; n <= (bounded ? needed : maxDomain_); ++n) {
      if (countermodel(premise, conclusion, fixed, arity, n)) return Oracle::NotEntailed;
    }
    if (!skipped_ && bounded) return Oracle::Entailed;
    return Oracle::Undecided;
  }

  Oracle satisfiable(const Drs& premise) {
    Drs falsum;  // an unsatisfiable conclusion: not [ | ]
    falsum.conditions.push_back(neg(Drs{}));
    switch (entails(premise, falsum)) {
      case Oracle::Entailed: return Oracle::NotEntailed;   // unsatisfiable
      case Oracle::NotEntailed: return Oracle::Entailed;   // has a model
      default: return Oracle::Undecided;
    }
  }

 private:
  // DRSs compiled to variable slots and predicate numbers.
  struct Node {
    enum class Op { Atom, Neg, Imp, Or, Box } op = Op::Box;
    int pred = 0;
    std::vector<int> args;   // Atom: slots
    std::vector<int> binds;  // Box: universe slots; Imp: antecedent universe
    std::vector<Node> kids;  // Box: conditions; Neg: [box]; Imp: [ante conds box, consequent]; Or: [l, r]
  };

  struct Compiler {
    std::map<std::string, int> preds;
    std::vector<int> arity;
    int slots = 0;

    int pred(const std::string& name, int a) {
      auto [it, fresh] = preds.try_emplace(name, static_cast<int>(arity.size()));
      if (fresh) arity.push_back(a);
      return it->second;
    }

    Node box(const Drs& k, std::map<std::string, int> scope) {
      Node n;
      n.op = Node::Op::Box;
      for (const auto& r : k.universe) {
        scope[r.name] = slots;
        n.binds.push_back(slots++);
      }
      for (const auto& c : k.conditions) n.kids.push_back(cond(c, scope));
      return n;
    }

    Node cond(const Condition& c, const std::map<std::string, int>& scope) {
      Node n;
      if (const auto* a = std::get_if<Atom>(&c.node)) {
        n.op = Node::Op::Atom;
        n.pred = pred(a->predicate, static_cast<int>(a->args.size()));
        for (const auto& r : a->args) n.args.push_back(scope.at(r.name));
      } else if (const auto* g = std::get_if<Neg>(&c.node)) {
        n.op = Node::Op::Neg;
        n.kids.push_back(box(*g->body, scope));
      } else if (const auto* o = std::get_if<Or>(&c.node)) {
        n.op = Node::Op::Or;
        n.kids.push_back(box(*o->left, scope));
        n.kids.push_back(box(*o->right, scope));
      } else {
        const auto& imp = std::get<Imp>(c.node);
        n.op = Node::Op::Imp;
        Node ante = box(*imp.antecedent, scope);
        auto inner = scope;
        for (std::size_t i = 0; i < imp.antecedent->universe.size(); ++i)
          inner[imp.antecedent->universe[i].name] = ante.binds[i];
        n.binds = ante.binds;
        ante.binds.clear();
        n.kids.push_back(std::move(ante));
        n.kids.push_back(box(*imp.consequent, inner));
      }
      return n;
    }
  };

  struct World {
    int n = 1;
    std::vector<std::vector<char>> ext;
    std::vector<int> env;
  };

  static bool all(const std::vector<Node>& cs, World& w) {
    for (const auto& c : cs)
      if (!eval(c, w)) return false;
    return true;
  }

  // Box: some assignment of binds makes every condition true.
  static bool exists(const Node& box, World& w, std::size_t i = 0) {
    if (i == box.binds.size()) return all(box.kids, w);
    for (int d = 0; d < w.n; ++d) {
      w.env[box.binds[i]] = d;
      if (exists(box, w, i + 1)) return true;
    }
    return false;
  }

  static bool every(const Node& imp, World& w, std::size_t i = 0) {
    if (i == imp.binds.size()) return !all(imp.kids[0].kids, w) || exists(imp.kids[1], w);
    for (int d = 0; d < w.n; ++d) {
      w.env[imp.binds[i]] = d;
      if (!every(imp, w, i + 1)) return false;
    }
    return true;
  }

  static bool eval(const Node& c, World& w) {
    switch (c.op) {
      case Node::Op::Atom: {
        int idx = 0;
        for (int a : c.args) idx = idx * w.n + w.env[a];
        return w.ext[c.pred][idx] != 0;
      }
      case Node::Op::Neg: return !exists(c.kids[0], w);
      case Node::Op::Or: return exists(c.kids[0], w) || exists(c.kids[1], w);
      case Node::Op::Imp: return every(c, w);
      case Node::Op::Box: return exists(c, w);
    }
    return false;
  }

  bool countermodel(const Drs& premise, const Drs& conclusion, const std::vector<std::string>& fixed,
                    const std::map<std::string, int>&, int n) {
    Compiler comp;
    std::map<std::string, int> scope;
    for (const auto& f : fixed) scope[f] = comp.slots++;
    std::vector<Node> facts;
    for (const auto& c : premise.conditions) facts.push_back(comp.cond(c, scope));
    Node goal = comp.box(conclusion, scope);

    World w;
    w.n = n;
    w.env.assign(comp.slots, 0);
    int bits = 0;
    for (int a : comp.arity) {
      int size = 1;
      for (int i = 0; i < a; ++i) size *= n;
      w.ext.emplace_back(size, 0);
      bits += size;
    }
    if (bits > 20) {  // out of reach for plain enumeration
      skipped_ = true;
      return false;
    }
    for (long mask = 0; mask < (1L << bits); ++mask) {
      int bit = 0;
      for (auto& e : w.ext)
        for (auto& v : e) v = static_cast<char>((mask >> bit++) & 1);
      // Elements are interchangeable: fixed individuals take values in
      // first-use order.
      std::function<bool(std::size_t, int)> rec = [&](std::size_t i, int used) -> bool {
        if (i == fixed.size()) return all(facts, w) && !exists(goal, w);
        for (int d = 0; d <= used && d < n; ++d) {
          w.env[i] = d;
          if (rec(i + 1, std::max(used, d + 1))) return true;
        }
        return false;
      };
      if (rec(0, 0)) return true;
    }
    return false;
  }

  static void collect_predicates(const Drs& k, std::map<std::string, int>& out) {
    for (const auto& c : k.conditions) {
      if (const auto* a = std::get_if<Atom>(&c.node)) out[a->predicate] = static_cast<int>(a->args.size());
      else if (const auto* n = std::get_if<Neg>(&c.node)) collect_predicates(*n->body, out);
      else if (const auto* i = std::get_if<Imp>(&c.node)) {
        collect_predicates(*i->antecedent, out);
        collect_predicates(*i->consequent, out);
      } else if (const auto* o = std::get_if<Or>(&c.node)) {
        collect_predicates(*o->left, out);
        collect_predicates(*o->right, out);
      }
    }
  }

  template <typename Fn>
  static void collect_free(const Drs& k, std::set<std::string> bound, Fn&& add) {
    for (const auto& r : k.universe) bound.insert(r.name);
    for (const auto& c : k.conditions) {
      if (const auto* a = std::get_if<Atom>(&c.node)) {
        for (const auto& r : a->args)
          if (!bound.count(r.name)) add(r.name);
      } else if (const auto* n = std::get_if<Neg>(&c.node)) {
        collect_free(*n->body, bound, add);
      } else if (const auto* i = std::get_if<Imp>(&c.node)) {
        collect_free(*i->antecedent, bound, add);
        auto inner = bound;
        for (const auto& r : i->antecedent->universe) inner.insert(r.name);
        collect_free(*i->consequent, inner, add);
      } else if (const auto* o = std::get_if<Or>(&c.node)) {
        collect_free(*o->left, bound, add);
        collect_free(*o->right, bound, add);
      }
    }
  }

  // Existentials of premise & not conclusion in prenex form; sets
  // bernays_schoenfinkel_ to false if one falls under a universal.
  int skolem_constants(const Drs& premise, const Drs& conclusion) {
    bernays_schoenfinkel_ = true;
    int count = 0;
    for (const auto& c : premise.conditions) walk(c, true, false, count);
    walk_box(conclusion, false, false, count);
    return count;
  }

  void walk_box(const Drs& k, bool truth, bool universal, int& count) {
    // A box asserted true is existential; asserted false, universal.
    if (!k.universe.empty()) {
      if (truth) {
        if (universal) bernays_schoenfinkel_ = false;
        count += static_cast<int>(k.universe.size());
      } else {
        universal = true;
      }
    }
    for (const auto& c : k.conditions) walk(c, truth, universal, count);
  }

  void walk(const Condition& c, bool truth, bool universal, int& count) {
    if (const auto* n = std::get_if<Neg>(&c.node)) {
      walk_box(*n->body, !truth, universal, count);
    } else if (const auto* o = std::get_if<Or>(&c.node)) {
      walk_box(*o->left, truth, universal, count);
      walk_box(*o->right, truth, universal, count);
    } else if (const auto* i = std::get_if<Imp>(&c.node)) {
      // [U|A] => B is equivalent to not [U | A, not B].
      Drs inner = *i->antecedent;
      inner.conditions.push_back(neg(*i->consequent));
      walk_box(inner, !truth, universal, count);
    }
  }

  int maxDomain_;
  bool bernays_schoenfinkel_ = true;
  bool skipped_ = false;
};

}  // namespace ctxdrt::testing
