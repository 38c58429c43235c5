#pragma once

#include <map>
#include <set>
#include <string>

#include "fim/syntax.hpp"

namespace fim {

struct FreeVars {
  std::set<std::string> numbers;
  std::set<std::string> functions;

  bool has(const Var& v) const {
    return v.sort == Sort::Number ? numbers.count(v.name) > 0 : functions.count(v.name) > 0;
  }
  void merge(const FreeVars& o) {
    numbers.insert(o.numbers.begin(), o.numbers.end());
    functions.insert(o.functions.begin(), o.functions.end());
  }
  friend bool operator==(const FreeVars&, const FreeVars&) = default;
};

FreeVars free_vars(const Formula& f);
FreeVars free_vars(const Term& t);
FreeVars free_vars(const Functor& f);

/// `base` if unused, else base', base'', ... until the name avoids `used`.
std::string fresh_name(const std::string& base, const std::set<std::string>& used);

/// Simultaneous capture-avoiding substitution of number and function variables.
/// Bound variables that would capture a free variable of the replacement are
/// renamed with fresh_name.
struct Substitution {
  std::map<std::string, Term> numbers;
  std::map<std::string, Functor> functions;

  bool empty() const { return numbers.empty() && functions.empty(); }
};

Formula substitute(const Formula& f, const Substitution& s);
Term substitute(const Term& t, const Substitution& s);
Functor substitute(const Functor& f, const Substitution& s);

Formula subst_num(const Formula& f, const std::string& x, const Term& t);
Term subst_num(const Term& t, const std::string& x, const Term& replacement);
Formula subst_fn(const Formula& f, const std::string& alpha, const Functor& replacement);

/// Rewrites every redex (lam x. b)(s) to b[x := s] until none remain.
Term lambda_reduce(const Term& t);
Formula lambda_reduce(const Formula& f);

/// Structural equality up to consistent renaming of bound variables.
bool alpha_equal(const Formula& a, const Formula& b);
bool alpha_equal(const Term& a, const Term& b);

}  // namespace fim
