#include "fim/printer.hpp"

namespace fim {

namespace {

// Term precedence levels: + is 1, * is 2, ^ is 3, everything else 4.
int term_prec(const Term& t) {
  if (as_numeral(t)) return 4;
  if (t.is<ast::Add>()) return 1;
  if (t.is<ast::Mul>()) return 2;
  if (t.is<ast::Pow>()) return 3;
  return 4;
}

std::string term_at(const Term& t, int min_prec);

std::string functor_text(const Functor& f) {
  if (auto* v = f.as<ast::FnVar>()) return "@" + v->name;
  auto* l = f.as<ast::Lambda>();
  return "(lam " + l->var + ". " + term_at(l->body, 0) + ")";
}

std::string term_text(const Term& t) {
  if (auto n = as_numeral(t)) return std::to_string(*n);
  return std::visit(
      overloaded{
          [](const ast::Zero&) -> std::string { return "0"; },
          [](const ast::Succ& s) { return "S(" + term_at(s.arg, 0) + ")"; },
          [](const ast::NumVar& v) { return v.name; },
          // + and * are left-associative, ^ is right-associative.
          [](const ast::Add& a) { return term_at(a.lhs, 1) + " + " + term_at(a.rhs, 2); },
          [](const ast::Mul& m) { return term_at(m.lhs, 2) + " * " + term_at(m.rhs, 3); },
          [](const ast::Pow& p) { return term_at(p.base, 4) + "^" + term_at(p.exponent, 3); },
          [](const ast::Cat& c) { return "cat(" + term_at(c.lhs, 0) + ", " + term_at(c.rhs, 0) + ")"; },
          [](const ast::Apply& a) { return functor_text(a.fn) + "(" + term_at(a.arg, 0) + ")"; },
          [](const ast::BarOf& b) {
            return "barof(" + functor_text(b.fn) + ", " + term_at(b.length, 0) + ")";
          },
      },
      t.node().v);
}

std::string term_at(const Term& t, int min_prec) {
  std::string s = term_text(t);
  return term_prec(t) < min_prec ? "(" + s + ")" : s;
}

// Formula precedence: -> 1, | 2, & 3, ~ and atoms 4. Quantifiers extend as far
// right as possible, so they print bare only when nothing follows them.
int binop_prec(ast::BinOp op) {
  switch (op) {
    case ast::BinOp::Imp: return 1;
    case ast::BinOp::Or: return 2;
    case ast::BinOp::And: return 3;
  }
  return 0;
}

int formula_prec(const Formula& f) {
  if (auto* b = f.as<ast::Binary>()) return binop_prec(b->op);
  if (f.is<ast::Quantifier>()) return 0;
  return 4;
}

std::string formula_at(const Formula& f, int min_prec, bool rightmost);

std::string formula_text(const Formula& f, bool rightmost) {
  return std::visit(
      overloaded{
          [](const ast::Eq& e) { return term_at(e.lhs, 0) + " = " + term_at(e.rhs, 0); },
          [](const ast::Not& n) {
            if (n.body.is<ast::Not>()) return "~" + formula_text(n.body, true);
            return "~(" + formula_text(n.body, true) + ")";
          },
          [rightmost](const ast::Binary& b) {
            int p = binop_prec(b.op);
            const char* op = b.op == ast::BinOp::Imp ? " -> " : b.op == ast::BinOp::Or ? " | " : " & ";
            // Right-associative: the left operand needs strictly higher precedence.
            return formula_at(b.lhs, p + 1, false) + op + formula_at(b.rhs, p, rightmost);
          },
          [](const ast::Quantifier& q) {
            std::string s = q.kind == ast::QKind::Forall ? "forall " : "exists ";
            s += q.var.sort == Sort::Function ? "@" + q.var.name : q.var.name;
            if (q.bound) s += " < " + term_at(*q.bound, 0);
            return s + ". " + formula_text(q.body, true);
          },
      },
      f.node().v);
}

std::string formula_at(const Formula& f, int min_prec, bool rightmost) {
  bool wrap = f.is<ast::Quantifier>() ? !rightmost : formula_prec(f) < min_prec;
  if (wrap) return "(" + formula_text(f, true) + ")";
  return formula_text(f, rightmost);
}

}  // namespace

std::string print_term(const Term& t) { return term_at(t, 0); }
std::string print_functor(const Functor& f) { return functor_text(f); }
std::string print_formula(const Formula& f) { return formula_text(f, true); }

}  // namespace fim
