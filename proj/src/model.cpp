#include "ctxdrt/model.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>

#include "ctxdrt/errors.hpp"

namespace ctxdrt {

const char* verdict_name(ModelVerdict v) {
  switch (v) {
    case ModelVerdict::Entailed: return "entailed";
    case ModelVerdict::Satisfiable: return "satisfiable";
    case ModelVerdict::Refuted: return "refuted";
    case ModelVerdict::Unknown: return "unknown";
  }
  return "?";
}

namespace {

constexpr int kTrue = 0;
constexpr int kFalse = 1;

struct Node {
  enum class Op { True, False, Atom, Not, And, Or };
  Op op = Op::True;
  int atom = -1;
  std::vector<int> kids;
};

using Env = std::map<std::string, int>;

// Propositional grounding of a DRS over the domain {0..n-1}.
class Grounder {
 public:
  Grounder(int n, std::size_t ceiling) : n_(n), ceiling_(ceiling) {
    nodes.push_back(Node{Node::Op::True, -1, {}});
    nodes.push_back(Node{Node::Op::False, -1, {}});
  }

  int conditions(const std::vector<Condition>& conds, const Env& env) {
    std::vector<int> ks;
    for (const auto& c : conds) {
      int k = condition(c, env);
      if (k == kFalse) return kFalse;
      ks.push_back(k);
    }
    return mk(Node::Op::And, std::move(ks));
  }

  int box(const Drs& k, const Env& env) {
    std::vector<int> ks;
    bool done = false;
    for_each_extension(k.universe, env, [&](const Env& e) {
      if (done) return;
      int g = conditions(k.conditions, e);
      if (g == kTrue) done = true;
      ks.push_back(g);
    });
    return mk(Node::Op::Or, std::move(ks));
  }

  int negate(int k) {
    if (k == kTrue) return kFalse;
    if (k == kFalse) return kTrue;
    return push(Node{Node::Op::Not, -1, {k}});
  }

  int mk(Node::Op op, std::vector<int> ks) {
    const int unit = op == Node::Op::And ? kTrue : kFalse;
    const int zero = op == Node::Op::And ? kFalse : kTrue;
    std::vector<int> kept;
    for (int k : ks) {
      if (k == zero) return zero;
      if (k != unit) kept.push_back(k);
    }
    if (kept.empty()) return unit;
    if (kept.size() == 1) return kept.front();
    return push(Node{op, -1, std::move(kept)});
  }

  std::vector<Node> nodes;
  std::vector<std::string> atomNames;

 private:
  int condition(const Condition& c, const Env& env) {
    if (const auto* a = std::get_if<Atom>(&c.node)) {
      std::string key = a->predicate + "(";
      for (std::size_t i = 0; i < a->args.size(); ++i) {
        auto it = env.find(a->args[i].name);
        if (it == env.end()) throw Error("model_check: unbound referent " + a->args[i].name);
        key += (i ? "," : "") + std::to_string(it->second);
      }
      key += ")";
      auto [it, fresh] = atoms_.try_emplace(key, static_cast<int>(atomNames.size()));
      if (fresh) atomNames.push_back(key);
      return push(Node{Node::Op::Atom, it->second, {}});
    }
    if (const auto* n = std::get_if<Neg>(&c.node)) return negate(box(*n->body, env));
    if (const auto* i = std::get_if<Imp>(&c.node)) {
      std::vector<int> ks;
      bool failed = false;
      for_each_extension(i->antecedent->universe, env, [&](const Env& e) {
        if (failed) return;
        int ante = conditions(i->antecedent->conditions, e);
        int g = ante == kFalse ? kTrue : mk(Node::Op::Or, {negate(ante), box(*i->consequent, e)});
        if (g == kFalse) failed = true;
        ks.push_back(g);
      });
      return mk(Node::Op::And, std::move(ks));
    }
    if (const auto* o = std::get_if<Or>(&c.node)) return mk(Node::Op::Or, {box(*o->left, env), box(*o->right, env)});
    throw AlphaRemaining();
  }

  template <typename Fn>
  void for_each_extension(const std::vector<Referent>& u, const Env& env, Fn&& fn) {
    Env e = env;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (i == u.size()) {
        fn(e);
        return;
      }
      for (int d = 0; d < n_; ++d) {
        e[u[i].name] = d;
        rec(i + 1);
      }
    };
    rec(0);
  }

  int push(Node n) {
    if (nodes.size() >= ceiling_) throw ResourceLimit("model_check: grounding exceeds " + std::to_string(ceiling_) + " nodes");
    nodes.push_back(std::move(n));
    return static_cast<int>(nodes.size() - 1);
  }

  int n_;
  std::size_t ceiling_;
  std::map<std::string, int> atoms_;
};

// 0 false, 1 true, 2 undetermined.
int eval(const std::vector<Node>& g, int id, const std::vector<std::int8_t>& val) {
  const Node& n = g[id];
  switch (n.op) {
    case Node::Op::True: return 1;
    case Node::Op::False: return 0;
    case Node::Op::Atom: return val[n.atom] < 0 ? 2 : val[n.atom];
    case Node::Op::Not: {
      int v = eval(g, n.kids[0], val);
      return v == 2 ? 2 : 1 - v;
    }
    case Node::Op::And:
    case Node::Op::Or: {
      const int zero = n.op == Node::Op::And ? 0 : 1;
      bool open = false;
      for (int k : n.kids) {
        int v = eval(g, k, val);
        if (v == zero) return zero;
        if (v == 2) open = true;
      }
      return open ? 2 : 1 - zero;
    }
  }
  return 2;
}

int pick_atom(const std::vector<Node>& g, int id, const std::vector<std::int8_t>& val) {
  const Node& n = g[id];
  if (n.op == Node::Op::Atom) return val[n.atom] < 0 ? n.atom : -1;
  for (int k : n.kids)
    if (eval(g, k, val) == 2) return pick_atom(g, k, val);
  return -1;
}

bool satisfy(const std::vector<Node>& g, int root, std::vector<std::int8_t>& val) {
  int v = eval(g, root, val);
  if (v != 2) return v == 1;
  int a = pick_atom(g, root, val);
  for (std::int8_t b : {std::int8_t{1}, std::int8_t{0}}) {
    val[a] = b;
    if (satisfy(g, root, val)) return true;
  }
  val[a] = -1;
  return false;
}

// Signed walk: counts existentials that become Skolem constants and notes
// whether any sits below a universal, which leaves the decidable prefix class.
struct Prefix {
  std::size_t deltas = 0;
  bool bs = true;
};

void sign_box(const Drs& k, bool pos, bool underGamma, Prefix& p);

void sign_conditions(const std::vector<Condition>& cs, bool pos, bool underGamma, Prefix& p) {
  for (const auto& c : cs) {
    if (const auto* n = std::get_if<Neg>(&c.node)) {
      sign_box(*n->body, !pos, underGamma, p);
    } else if (const auto* i = std::get_if<Imp>(&c.node)) {
      const Drs& ante = *i->antecedent;
      if (pos) {
        bool g = underGamma || !ante.universe.empty();
        sign_conditions(ante.conditions, false, g, p);
        sign_box(*i->consequent, true, g, p);
      } else {
        if (!ante.universe.empty()) {
          if (underGamma) p.bs = false;
          p.deltas += ante.universe.size();
        }
        sign_conditions(ante.conditions, true, underGamma, p);
        sign_box(*i->consequent, false, underGamma, p);
      }
    } else if (const auto* o = std::get_if<Or>(&c.node)) {
      sign_box(*o->left, pos, underGamma, p);
      sign_box(*o->right, pos, underGamma, p);
    }
  }
}

void sign_box(const Drs& k, bool pos, bool underGamma, Prefix& p) {
  if (pos) {
    if (!k.universe.empty()) {
      if (underGamma) p.bs = false;
      p.deltas += k.universe.size();
    }
    sign_conditions(k.conditions, true, underGamma, p);
  } else {
    sign_conditions(k.conditions, false, underGamma || !k.universe.empty(), p);
  }
}

void add_slot(std::vector<std::string>& slots, const std::string& name) {
  if (std::find(slots.begin(), slots.end(), name) == slots.end()) slots.push_back(name);
}

}  // namespace

ModelResult model_check(const Drs& premise, const std::optional<Drs>& conclusion, int maxDomain,
                        std::size_t groundCeiling) {
  if (contains_alpha(premise) || (conclusion && contains_alpha(*conclusion))) throw AlphaRemaining();

  std::vector<std::string> slots;
  for (const auto& r : premise.universe) add_slot(slots, r.name);
  for (const auto& r : validate(premise).free) add_slot(slots, r.name);
  if (conclusion)
    for (const auto& r : validate(*conclusion).free) add_slot(slots, r.name);

  Prefix prefix;
  sign_conditions(premise.conditions, true, false, prefix);
  if (conclusion) sign_box(*conclusion, false, false, prefix);

  ModelResult result;
  if (prefix.bs) result.sufficientDomain = static_cast<int>(std::max<std::size_t>(1, slots.size() + prefix.deltas));

  for (int n = 1; n <= maxDomain; ++n) {
    // Elements are interchangeable, so slot values are enumerated as
    // restricted growth strings.
    std::vector<int> values(slots.size(), 0);
    std::function<bool(std::size_t, int)> rec = [&](std::size_t i, int used) -> bool {
      if (i == slots.size()) {
        Grounder g(n, groundCeiling);
        Env env;
        for (std::size_t s = 0; s < slots.size(); ++s) env[slots[s]] = values[s];
        int root = g.conditions(premise.conditions, env);
        if (conclusion && root != kFalse) root = g.mk(Node::Op::And, {root, g.negate(g.box(*conclusion, env))});
        std::vector<std::int8_t> val(g.atomNames.size(), -1);
        if (!satisfy(g.nodes, root, val)) return false;
        FiniteModel m;
        m.domainSize = n;
        for (std::size_t s = 0; s < slots.size(); ++s) m.assignment[slots[s]] = values[s];
        for (std::size_t a = 0; a < val.size(); ++a)
          if (val[a] == 1) m.trueAtoms.push_back(g.atomNames[a]);
        std::sort(m.trueAtoms.begin(), m.trueAtoms.end());
        result.model = std::move(m);
        return true;
      }
      for (int d = 0; d <= std::min(used, n - 1); ++d) {
        values[i] = d;
        if (rec(i + 1, std::max(used, d + 1))) return true;
      }
      return false;
    };
    if (rec(0, 0)) {
      result.verdict = conclusion ? ModelVerdict::Refuted : ModelVerdict::Satisfiable;
      return result;
    }
  }

  bool decided = result.sufficientDomain && maxDomain >= *result.sufficientDomain;
  if (!decided) result.verdict = ModelVerdict::Unknown;
  else result.verdict = conclusion ? ModelVerdict::Entailed : ModelVerdict::Refuted;
  return result;
}

}  // namespace ctxdrt
