#include "fim/syntax.hpp"

#include <algorithm>
#include <stdexcept>

namespace fim {

namespace {

template <class N, class V> std::shared_ptr<const N> make(V&& v) {
  return std::make_shared<const N>(N{std::forward<V>(v)});
}

}  // namespace

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.node_->v.index() != b.node_->v.index()) return false;
  return std::visit(
      overloaded{
          [](const ast::Zero&) { return true; },
          [&](const ast::Succ& x) { return x.arg == b.as<ast::Succ>()->arg; },
          [&](const ast::NumVar& x) { return x.name == b.as<ast::NumVar>()->name; },
          [&](const ast::Add& x) {
            auto* y = b.as<ast::Add>();
            return x.lhs == y->lhs && x.rhs == y->rhs;
          },
          [&](const ast::Mul& x) {
            auto* y = b.as<ast::Mul>();
            return x.lhs == y->lhs && x.rhs == y->rhs;
          },
          [&](const ast::Pow& x) {
            auto* y = b.as<ast::Pow>();
            return x.base == y->base && x.exponent == y->exponent;
          },
          [&](const ast::Cat& x) {
            auto* y = b.as<ast::Cat>();
            return x.lhs == y->lhs && x.rhs == y->rhs;
          },
          [&](const ast::Apply& x) {
            auto* y = b.as<ast::Apply>();
            return x.fn == y->fn && x.arg == y->arg;
          },
          [&](const ast::BarOf& x) {
            auto* y = b.as<ast::BarOf>();
            return x.fn == y->fn && x.length == y->length;
          },
      },
      a.node_->v);
}

bool operator==(const Functor& a, const Functor& b) {
  if (a.node_ == b.node_) return true;
  if (auto* x = a.as<ast::FnVar>()) {
    auto* y = b.as<ast::FnVar>();
    return y && x->name == y->name;
  }
  auto* x = a.as<ast::Lambda>();
  auto* y = b.as<ast::Lambda>();
  return y && x->var == y->var && x->body == y->body;
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.node_->v.index() != b.node_->v.index()) return false;
  return std::visit(
      overloaded{
          [&](const ast::Eq& x) {
            auto* y = b.as<ast::Eq>();
            return x.lhs == y->lhs && x.rhs == y->rhs;
          },
          [&](const ast::Not& x) { return x.body == b.as<ast::Not>()->body; },
          [&](const ast::Binary& x) {
            auto* y = b.as<ast::Binary>();
            return x.op == y->op && x.lhs == y->lhs && x.rhs == y->rhs;
          },
          [&](const ast::Quantifier& x) {
            auto* y = b.as<ast::Quantifier>();
            return x.kind == y->kind && x.var == y->var && x.bound == y->bound &&
                   x.body == y->body;
          },
      },
      a.node_->v);
}

Term zero() { return Term(make<TermNode>(ast::Zero{})); }
Term succ(Term t) { return Term(make<TermNode>(ast::Succ{std::move(t)})); }

Term numeral(std::uint64_t n) {
  Term t = zero();
  for (std::uint64_t i = 0; i < n; ++i) t = succ(t);
  return t;
}

Term num(std::string name) {
  if (name.empty()) throw std::invalid_argument("variable name must be nonempty");
  return Term(make<TermNode>(ast::NumVar{std::move(name)}));
}
Term add(Term a, Term b) { return Term(make<TermNode>(ast::Add{std::move(a), std::move(b)})); }
Term mul(Term a, Term b) { return Term(make<TermNode>(ast::Mul{std::move(a), std::move(b)})); }
Term pow(Term a, Term b) { return Term(make<TermNode>(ast::Pow{std::move(a), std::move(b)})); }
Term cat(Term a, Term b) { return Term(make<TermNode>(ast::Cat{std::move(a), std::move(b)})); }
Term apply(Functor f, Term t) {
  return Term(make<TermNode>(ast::Apply{std::move(f), std::move(t)}));
}
Term barof(Functor f, Term t) {
  return Term(make<TermNode>(ast::BarOf{std::move(f), std::move(t)}));
}

Functor fvar(std::string name) {
  if (name.empty()) throw std::invalid_argument("variable name must be nonempty");
  return Functor(make<FunctorNode>(ast::FnVar{std::move(name)}));
}
Functor lam(std::string var, Term body) {
  if (var.empty()) throw std::invalid_argument("variable name must be nonempty");
  return Functor(make<FunctorNode>(ast::Lambda{std::move(var), std::move(body)}));
}

Formula eq(Term a, Term b) { return Formula(make<FormulaNode>(ast::Eq{std::move(a), std::move(b)})); }
Formula neg(Formula f) { return Formula(make<FormulaNode>(ast::Not{std::move(f)})); }
Formula binary(ast::BinOp op, Formula a, Formula b) {
  return Formula(make<FormulaNode>(ast::Binary{op, std::move(a), std::move(b)}));
}
Formula conj(Formula a, Formula b) { return binary(ast::BinOp::And, std::move(a), std::move(b)); }
Formula disj(Formula a, Formula b) { return binary(ast::BinOp::Or, std::move(a), std::move(b)); }
Formula imp(Formula a, Formula b) { return binary(ast::BinOp::Imp, std::move(a), std::move(b)); }

Formula quantifier(ast::QKind kind, Var var, std::optional<Term> bound, Formula body) {
  if (var.name.empty()) throw std::invalid_argument("variable name must be nonempty");
  if (bound && var.sort != Sort::Number)
    throw std::invalid_argument("bounded quantifiers bind number variables only");
  return Formula(
      make<FormulaNode>(ast::Quantifier{kind, std::move(var), std::move(bound), std::move(body)}));
}

Formula forall_n(std::string x, Formula body) {
  return quantifier(ast::QKind::Forall, {std::move(x), Sort::Number}, std::nullopt, std::move(body));
}
Formula exists_n(std::string x, Formula body) {
  return quantifier(ast::QKind::Exists, {std::move(x), Sort::Number}, std::nullopt, std::move(body));
}
Formula forall_f(std::string a, Formula body) {
  return quantifier(ast::QKind::Forall, {std::move(a), Sort::Function}, std::nullopt,
                    std::move(body));
}
Formula exists_f(std::string a, Formula body) {
  return quantifier(ast::QKind::Exists, {std::move(a), Sort::Function}, std::nullopt,
                    std::move(body));
}
Formula bforall(std::string x, Term bound, Formula body) {
  return quantifier(ast::QKind::Forall, {std::move(x), Sort::Number}, std::move(bound),
                    std::move(body));
}
Formula bexists(std::string x, Term bound, Formula body) {
  return quantifier(ast::QKind::Exists, {std::move(x), Sort::Number}, std::move(bound),
                    std::move(body));
}

Formula conj_all(const std::vector<Formula>& parts) {
  if (parts.empty()) throw std::invalid_argument("conj_all needs at least one conjunct");
  Formula acc = parts.back();
  for (auto it = parts.rbegin() + 1; it != parts.rend(); ++it) acc = conj(*it, acc);
  return acc;
}

std::optional<std::uint64_t> as_numeral(const Term& t) {
  std::uint64_t n = 0;
  const Term* cur = &t;
  while (auto* s = cur->as<ast::Succ>()) {
    ++n;
    cur = &s->arg;
  }
  if (cur->is<ast::Zero>()) return n;
  return std::nullopt;
}

std::size_t connective_count(const Formula& f) {
  return std::visit(overloaded{
                        [](const ast::Eq&) -> std::size_t { return 0; },
                        [](const ast::Not& n) { return 1 + connective_count(n.body); },
                        [](const ast::Binary& b) {
                          return 1 + connective_count(b.lhs) + connective_count(b.rhs);
                        },
                        [](const ast::Quantifier& q) { return 1 + connective_count(q.body); },
                    },
                    f.node().v);
}

std::size_t depth(const Formula& f) {
  return std::visit(overloaded{
                        [](const ast::Eq&) -> std::size_t { return 0; },
                        [](const ast::Not& n) { return 1 + depth(n.body); },
                        [](const ast::Binary& b) { return 1 + std::max(depth(b.lhs), depth(b.rhs)); },
                        [](const ast::Quantifier& q) { return 1 + depth(q.body); },
                    },
                    f.node().v);
}

}  // namespace fim
