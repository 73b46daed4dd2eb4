// First-order terms for the tableau: free variables, Skolem applications and
// constants named by referents.

#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace ctxdrt {

struct TermNode;
using Term = std::shared_ptr<const TermNode>;

struct TermNode {
  enum class Kind { FreeVar, Skolem, Const };
  Kind kind = Kind::Const;
  int id = 0;        // variable id or Skolem function id
  std::string name;  // constant name
  std::vector<Term> args;
};

Term free_var(int id);
Term skolem(int fn, std::vector<Term> args);
Term constant(std::string name);

bool term_equal(const Term& a, const Term& b);
std::string to_string(const Term& t);
void collect_free_vars(const Term& t, std::vector<int>& out);

// Triangular substitution over free variables.
class Substitution {
 public:
  Term walk(const Term& t) const;
  Term apply(const Term& t) const;
  bool occurs(int var, const Term& t) const;
  void bind(int var, Term t) { bindings_[var] = std::move(t); }
  bool bound(int var) const { return bindings_.count(var) != 0; }
  std::size_t size() const { return bindings_.size(); }
  const std::map<int, Term>& bindings() const { return bindings_; }

 private:
  std::map<int, Term> bindings_;
};

// Most general unifier of two argument lists extending s, with occurs-check.
std::optional<Substitution> unify(const std::vector<Term>& a, const std::vector<Term>& b, Substitution s);

}  // namespace ctxdrt
