// Random DRSs and context formulas for property tests.

#pragma once

#include <random>
#include <string>
#include <vector>

#include "ctxdrt/drs.hpp"
#include "ctxdrt/lcon.hpp"

namespace ctxdrt::testing {

class Generator {
 public:
  explicit Generator(unsigned seed) : rng_(seed) {}

  int below(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }
  bool chance(double p) { return std::bernoulli_distribution(p)(rng_); }

  // Pure, alpha-free DRS over referents x, y, z (each introduced at most
  // once) and predicates p/1, q/1, r/2, nested at most maxDepth levels.
  Drs plain(int maxDepth = 2) {
    pool_ = {"x", "y", "z"};
    return drs(0, maxDepth, {});
  }

  // A plain DRS with one presupposition placed in a random sub-DRS, in the
  // shape alpha:[u | p(u), r(u,v), alpha:[v | ]] or alpha:[u | q(u)].
  Drs with_presupposition(int maxDepth = 2) {
    Drs root = plain(maxDepth);
    auto paths = enumerate_sub_drss(root);
    DrsPath at = paths[below(static_cast<int>(paths.size()))];
    bool anaphoric = chance(0.7);
    Drs body;
    body.universe = {Referent{"u"}};
    body.conditions.push_back(atom(chance(0.5) ? "p" : "q", {"u"}));
    if (anaphoric) {
      body.conditions.push_back(atom("r", {"u", "v"}));
      body.conditions.push_back(alpha(box({"v"}, {})));
    }
    auto accessible = accessible_referents(at, root);
    for (const auto& r : drs_at(root, at).universe) accessible.push_back(r);
    return update_at(root, at, [&](const Drs& k) {
      Drs out = k;
      if (!accessible.empty() && chance(0.5))
        out.conditions.push_back(atom("r", {accessible[below(static_cast<int>(accessible.size()))].name, "u"}));
      out.conditions.push_back(alpha(body));
      return out;
    });
  }

  // Arbitrary DRS for printing tests: random names, alphas anywhere, empty
  // boxes, deep nesting. Not necessarily pure.
  Drs arbitrary(int depth = 0) {
    Drs k;
    int refs = below(3);
    for (int i = 0; i < refs; ++i) k.universe.push_back(Referent{name()});
    int conds = below(4);
    for (int i = 0; i < conds; ++i) {
      int kind = depth >= 3 ? 0 : below(6);
      switch (kind) {
        case 1: k.conditions.push_back(neg(arbitrary(depth + 1))); break;
        case 2: k.conditions.push_back(imp(arbitrary(depth + 1), arbitrary(depth + 1))); break;
        case 3: k.conditions.push_back(disj(arbitrary(depth + 1), arbitrary(depth + 1))); break;
        case 4: k.conditions.push_back(alpha(arbitrary(depth + 1))); break;
        default: {
          std::vector<std::string> args;
          int n = 1 + below(3);
          for (int a = 0; a < n; ++a) args.push_back(name());
          k.conditions.push_back(atom(predicate(), args));
        }
      }
    }
    return k;
  }

  LConFormula formula(int depth = 0) {
    int kind = depth >= 3 ? 0 : below(4);
    switch (kind) {
      case 1: return in(arbitrary(1), formula(depth + 1));
      case 2:
      case 3: {
        std::vector<LConFormula> items;
        int n = 2 + below(2);
        for (int i = 0; i < n; ++i) items.push_back(formula(depth + 1));
        return kind == 2 ? land(std::move(items)) : lor(std::move(items));
      }
      default: return lit(arbitrary(1));
    }
  }

 private:
  Drs drs(int depth, int maxDepth, std::vector<std::string> accessible) {
    Drs k;
    int wanted = below(3);
    if (accessible.empty() && wanted == 0) wanted = 1;
    for (int i = 0; i < wanted && !pool_.empty(); ++i) {
      std::string r = pool_.front();
      pool_.erase(pool_.begin());
      k.universe.push_back(Referent{r});
      accessible.push_back(r);
    }
    int conds = 1 + below(3);
    for (int i = 0; i < conds; ++i) {
      int kind = depth >= maxDepth ? 0 : below(5);
      if (kind == 1) {
        k.conditions.push_back(neg(drs(depth + 1, maxDepth, accessible)));
      } else if (kind == 2) {
        Drs ante = drs(depth + 1, maxDepth, accessible);
        auto inner = accessible;
        for (const auto& r : ante.universe) inner.push_back(r.name);
        k.conditions.push_back(imp(ante, drs(depth + 1, maxDepth, inner)));
      } else if (kind == 3) {
        Drs left = drs(depth + 1, maxDepth, accessible);
        k.conditions.push_back(disj(left, drs(depth + 1, maxDepth, accessible)));
      } else if (!accessible.empty()) {
        auto pick = [&] { return accessible[below(static_cast<int>(accessible.size()))]; };
        int p = below(3);
        if (p == 2) k.conditions.push_back(atom("r", {pick(), pick()}));
        else k.conditions.push_back(atom(p == 0 ? "p" : "q", {pick()}));
      }
    }
    return k;
  }

  std::string name() {
    static const char* names[] = {"x", "y", "z", "u", "v", "w", "x1", "y_2", "abc", "k9"};
    return names[below(10)];
  }

  std::string predicate() {
    // Includes the contextual keywords, which are valid predicate names.
    static const char* preds[] = {"p", "q", "r", "man", "of", "not", "or", "in", "alpha", "likesX"};
    return preds[below(10)];
  }

  std::mt19937 rng_;
  std::vector<std::string> pool_;
};

}  // namespace ctxdrt::testing
