#include "fim/subst.hpp"

#include <vector>

namespace fim {

// ---- free variables -------------------------------------------------------

namespace {

void collect(const Term& t, FreeVars& out);

void collect(const Functor& f, FreeVars& out) {
  if (auto* v = f.as<ast::FnVar>()) {
    out.functions.insert(v->name);
    return;
  }
  auto* l = f.as<ast::Lambda>();
  FreeVars inner;
  collect(l->body, inner);
  inner.numbers.erase(l->var);
  out.merge(inner);
}

void collect(const Term& t, FreeVars& out) {
  std::visit(overloaded{
                 [](const ast::Zero&) {},
                 [&](const ast::Succ& s) { collect(s.arg, out); },
                 [&](const ast::NumVar& v) { out.numbers.insert(v.name); },
                 [&](const ast::Add& a) { collect(a.lhs, out), collect(a.rhs, out); },
                 [&](const ast::Mul& a) { collect(a.lhs, out), collect(a.rhs, out); },
                 [&](const ast::Pow& a) { collect(a.base, out), collect(a.exponent, out); },
                 [&](const ast::Cat& a) { collect(a.lhs, out), collect(a.rhs, out); },
                 [&](const ast::Apply& a) { collect(a.fn, out), collect(a.arg, out); },
                 [&](const ast::BarOf& a) { collect(a.fn, out), collect(a.length, out); },
             },
             t.node().v);
}

void collect(const Formula& f, FreeVars& out) {
  std::visit(overloaded{
                 [&](const ast::Eq& e) { collect(e.lhs, out), collect(e.rhs, out); },
                 [&](const ast::Not& n) { collect(n.body, out); },
                 [&](const ast::Binary& b) { collect(b.lhs, out), collect(b.rhs, out); },
                 [&](const ast::Quantifier& q) {
                   FreeVars inner;
                   collect(q.body, inner);
                   if (q.var.sort == Sort::Number)
                     inner.numbers.erase(q.var.name);
                   else
                     inner.functions.erase(q.var.name);
                   out.merge(inner);
                   if (q.bound) collect(*q.bound, out);
                 },
             },
             f.node().v);
}

}  // namespace

FreeVars free_vars(const Formula& f) {
  FreeVars out;
  collect(f, out);
  return out;
}
FreeVars free_vars(const Term& t) {
  FreeVars out;
  collect(t, out);
  return out;
}
FreeVars free_vars(const Functor& f) {
  FreeVars out;
  collect(f, out);
  return out;
}

std::string fresh_name(const std::string& base, const std::set<std::string>& used) {
  std::string name = base;
  while (used.count(name)) name += '\'';
  return name;
}

// ---- substitution ---------------------------------------------------------

namespace {

FreeVars range_vars(const Substitution& s) {
  FreeVars out;
  for (const auto& [_, t] : s.numbers) collect(t, out);
  for (const auto& [_, f] : s.functions) collect(f, out);
  return out;
}

/// Prepares the substitution for descending under a binder of `v`. Returns the
/// (possibly renamed) binder name and the adjusted substitution.
template <class Body>
std::pair<std::string, Substitution> under_binder(const Var& v, const Body& body, Substitution s) {
  if (v.sort == Sort::Number)
    s.numbers.erase(v.name);
  else
    s.functions.erase(v.name);
  if (s.empty()) return {v.name, std::move(s)};
  FreeVars body_vars = free_vars(body);
  std::erase_if(s.numbers, [&](const auto& kv) { return !body_vars.numbers.count(kv.first); });
  std::erase_if(s.functions, [&](const auto& kv) { return !body_vars.functions.count(kv.first); });
  if (s.empty()) return {v.name, std::move(s)};
  FreeVars range = range_vars(s);
  if (!range.has(v)) return {v.name, std::move(s)};
  std::set<std::string> used = v.sort == Sort::Number ? range.numbers : range.functions;
  const auto& bv = v.sort == Sort::Number ? body_vars.numbers : body_vars.functions;
  used.insert(bv.begin(), bv.end());
  if (v.sort == Sort::Number) {
    for (const auto& [k, _] : s.numbers) used.insert(k);
  } else {
    for (const auto& [k, _] : s.functions) used.insert(k);
  }
  std::string renamed = fresh_name(v.name, used);
  if (v.sort == Sort::Number)
    s.numbers.insert_or_assign(v.name, num(renamed));
  else
    s.functions.insert_or_assign(v.name, fvar(renamed));
  return {renamed, std::move(s)};
}

}  // namespace

Functor substitute(const Functor& f, const Substitution& s) {
  if (s.empty()) return f;
  if (auto* v = f.as<ast::FnVar>()) {
    auto it = s.functions.find(v->name);
    return it == s.functions.end() ? f : it->second;
  }
  auto* l = f.as<ast::Lambda>();
  auto [name, inner] = under_binder(Var{l->var, Sort::Number}, l->body, s);
  return lam(name, substitute(l->body, inner));
}

Term substitute(const Term& t, const Substitution& s) {
  if (s.empty()) return t;
  return std::visit(
      overloaded{
          [&](const ast::Zero&) { return t; },
          [&](const ast::Succ& x) { return succ(substitute(x.arg, s)); },
          [&](const ast::NumVar& v) {
            auto it = s.numbers.find(v.name);
            return it == s.numbers.end() ? t : it->second;
          },
          [&](const ast::Add& x) { return add(substitute(x.lhs, s), substitute(x.rhs, s)); },
          [&](const ast::Mul& x) { return mul(substitute(x.lhs, s), substitute(x.rhs, s)); },
          [&](const ast::Pow& x) { return pow(substitute(x.base, s), substitute(x.exponent, s)); },
          [&](const ast::Cat& x) { return cat(substitute(x.lhs, s), substitute(x.rhs, s)); },
          [&](const ast::Apply& x) { return apply(substitute(x.fn, s), substitute(x.arg, s)); },
          [&](const ast::BarOf& x) { return barof(substitute(x.fn, s), substitute(x.length, s)); },
      },
      t.node().v);
}

Formula substitute(const Formula& f, const Substitution& s) {
  if (s.empty()) return f;
  return std::visit(
      overloaded{
          [&](const ast::Eq& e) { return eq(substitute(e.lhs, s), substitute(e.rhs, s)); },
          [&](const ast::Not& n) { return neg(substitute(n.body, s)); },
          [&](const ast::Binary& b) {
            return binary(b.op, substitute(b.lhs, s), substitute(b.rhs, s));
          },
          [&](const ast::Quantifier& q) {
            std::optional<Term> bound;
            if (q.bound) bound = substitute(*q.bound, s);
            auto [name, inner] = under_binder(q.var, q.body, s);
            return quantifier(q.kind, Var{name, q.var.sort}, std::move(bound),
                              substitute(q.body, inner));
          },
      },
      f.node().v);
}

Formula subst_num(const Formula& f, const std::string& x, const Term& t) {
  Substitution s;
  s.numbers.emplace(x, t);
  return substitute(f, s);
}

Term subst_num(const Term& t, const std::string& x, const Term& replacement) {
  Substitution s;
  s.numbers.emplace(x, replacement);
  return substitute(t, s);
}

Formula subst_fn(const Formula& f, const std::string& alpha, const Functor& replacement) {
  Substitution s;
  s.functions.emplace(alpha, replacement);
  return substitute(f, s);
}

// ---- lambda reduction -----------------------------------------------------

namespace {

Functor reduce(const Functor& f) {
  if (auto* l = f.as<ast::Lambda>()) return lam(l->var, lambda_reduce(l->body));
  return f;
}

}  // namespace

Term lambda_reduce(const Term& t) {
  return std::visit(
      overloaded{
          [&](const ast::Zero&) { return t; },
          [&](const ast::NumVar&) { return t; },
          [&](const ast::Succ& x) { return succ(lambda_reduce(x.arg)); },
          [&](const ast::Add& x) { return add(lambda_reduce(x.lhs), lambda_reduce(x.rhs)); },
          [&](const ast::Mul& x) { return mul(lambda_reduce(x.lhs), lambda_reduce(x.rhs)); },
          [&](const ast::Pow& x) { return pow(lambda_reduce(x.base), lambda_reduce(x.exponent)); },
          [&](const ast::Cat& x) { return cat(lambda_reduce(x.lhs), lambda_reduce(x.rhs)); },
          [&](const ast::BarOf& x) { return barof(reduce(x.fn), lambda_reduce(x.length)); },
          [&](const ast::Apply& x) {
            Term arg = lambda_reduce(x.arg);
            Functor fn = reduce(x.fn);
            if (auto* l = fn.as<ast::Lambda>())
              // The body is already normal and arg contains no redex, but the
              // substitution can create new ones when arg lands in functor position.
              return lambda_reduce(subst_num(l->body, l->var, arg));
            return apply(fn, arg);
          },
      },
      t.node().v);
}

Formula lambda_reduce(const Formula& f) {
  return std::visit(
      overloaded{
          [&](const ast::Eq& e) { return eq(lambda_reduce(e.lhs), lambda_reduce(e.rhs)); },
          [&](const ast::Not& n) { return neg(lambda_reduce(n.body)); },
          [&](const ast::Binary& b) {
            return binary(b.op, lambda_reduce(b.lhs), lambda_reduce(b.rhs));
          },
          [&](const ast::Quantifier& q) {
            std::optional<Term> bound;
            if (q.bound) bound = lambda_reduce(*q.bound);
            return quantifier(q.kind, q.var, std::move(bound), lambda_reduce(q.body));
          },
      },
      f.node().v);
}

// ---- alpha equivalence ----------------------------------------------------

namespace {

struct Scope {
  // Parallel binder stacks for both sides, one pair per sort.
  std::vector<std::pair<std::string, std::string>> numbers, functions;
};

bool same_var(const std::vector<std::pair<std::string, std::string>>& stack, const std::string& a,
              const std::string& b) {
  for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
    bool ha = it->first == a, hb = it->second == b;
    if (ha || hb) return ha && hb;
  }
  return a == b;
}

bool aeq(const Term& a, const Term& b, Scope& sc);

bool aeq(const Functor& a, const Functor& b, Scope& sc) {
  if (auto* x = a.as<ast::FnVar>()) {
    auto* y = b.as<ast::FnVar>();
    return y && same_var(sc.functions, x->name, y->name);
  }
  auto* x = a.as<ast::Lambda>();
  auto* y = b.as<ast::Lambda>();
  if (!y) return false;
  sc.numbers.emplace_back(x->var, y->var);
  bool r = aeq(x->body, y->body, sc);
  sc.numbers.pop_back();
  return r;
}

bool aeq(const Term& a, const Term& b, Scope& sc) {
  if (a.node().v.index() != b.node().v.index()) return false;
  return std::visit(
      overloaded{
          [](const ast::Zero&) { return true; },
          [&](const ast::Succ& x) { return aeq(x.arg, b.as<ast::Succ>()->arg, sc); },
          [&](const ast::NumVar& x) { return same_var(sc.numbers, x.name, b.as<ast::NumVar>()->name); },
          [&](const ast::Add& x) {
            auto* y = b.as<ast::Add>();
            return aeq(x.lhs, y->lhs, sc) && aeq(x.rhs, y->rhs, sc);
          },
          [&](const ast::Mul& x) {
            auto* y = b.as<ast::Mul>();
            return aeq(x.lhs, y->lhs, sc) && aeq(x.rhs, y->rhs, sc);
          },
          [&](const ast::Pow& x) {
            auto* y = b.as<ast::Pow>();
            return aeq(x.base, y->base, sc) && aeq(x.exponent, y->exponent, sc);
          },
          [&](const ast::Cat& x) {
            auto* y = b.as<ast::Cat>();
            return aeq(x.lhs, y->lhs, sc) && aeq(x.rhs, y->rhs, sc);
          },
          [&](const ast::Apply& x) {
            auto* y = b.as<ast::Apply>();
            return aeq(x.fn, y->fn, sc) && aeq(x.arg, y->arg, sc);
          },
          [&](const ast::BarOf& x) {
            auto* y = b.as<ast::BarOf>();
            return aeq(x.fn, y->fn, sc) && aeq(x.length, y->length, sc);
          },
      },
      a.node().v);
}

bool aeq(const Formula& a, const Formula& b, Scope& sc) {
  if (a.node().v.index() != b.node().v.index()) return false;
  return std::visit(
      overloaded{
          [&](const ast::Eq& x) {
            auto* y = b.as<ast::Eq>();
            return aeq(x.lhs, y->lhs, sc) && aeq(x.rhs, y->rhs, sc);
          },
          [&](const ast::Not& x) { return aeq(x.body, b.as<ast::Not>()->body, sc); },
          [&](const ast::Binary& x) {
            auto* y = b.as<ast::Binary>();
            return x.op == y->op && aeq(x.lhs, y->lhs, sc) && aeq(x.rhs, y->rhs, sc);
          },
          [&](const ast::Quantifier& x) {
            auto* y = b.as<ast::Quantifier>();
            if (x.kind != y->kind || x.var.sort != y->var.sort) return false;
            if (x.bound.has_value() != y->bound.has_value()) return false;
            if (x.bound && !aeq(*x.bound, *y->bound, sc)) return false;
            auto& stack = x.var.sort == Sort::Number ? sc.numbers : sc.functions;
            stack.emplace_back(x.var.name, y->var.name);
            bool r = aeq(x.body, y->body, sc);
            stack.pop_back();
            return r;
          },
      },
      a.node().v);
}

}  // namespace

bool alpha_equal(const Formula& a, const Formula& b) {
  Scope sc;
  return aeq(a, b, sc);
}

bool alpha_equal(const Term& a, const Term& b) {
  Scope sc;
  return aeq(a, b, sc);
}

}  // namespace fim
