#include "fim/negtrans.hpp"

namespace fim {

Formula neg_translate(const Formula& f) {
  return std::visit(
      overloaded{
          [&](const ast::Eq&) { return neg(neg(f)); },
          [](const ast::Not& n) { return neg(neg_translate(n.body)); },
          [](const ast::Binary& b) {
            auto l = neg_translate(b.lhs);
            auto r = neg_translate(b.rhs);
            if (b.op == ast::BinOp::Or) return neg(conj(neg(l), neg(r)));
            return binary(b.op, l, r);
          },
          [](const ast::Quantifier& q) {
            auto body = neg_translate(q.body);
            if (q.kind == ast::QKind::Forall) return quantifier(ast::QKind::Forall, q.var, q.bound, body);
            return neg(quantifier(ast::QKind::Forall, q.var, q.bound, neg(body)));
          },
      },
      f.node().v);
}

namespace {

// `negs` counts the Not nodes directly above f.
bool negative_at(const Formula& f, int negs) {
  return std::visit(overloaded{
                        [&](const ast::Eq&) { return negs >= 2; },
                        [&](const ast::Not& n) { return negative_at(n.body, negs + 1); },
                        [](const ast::Binary& b) {
                          return b.op != ast::BinOp::Or && negative_at(b.lhs, 0) && negative_at(b.rhs, 0);
                        },
                        [](const ast::Quantifier& q) {
                          return q.kind == ast::QKind::Forall && negative_at(q.body, 0);
                        },
                    },
                    f.node().v);
}

const ast::Eq* double_negated_atom(const Formula& f) {
  auto* n1 = f.as<ast::Not>();
  if (!n1) return nullptr;
  auto* n2 = n1->body.as<ast::Not>();
  if (!n2) return nullptr;
  return n2->body.as<ast::Eq>();
}

// r(barof(a, x)) = 0 with the given names.
bool is_bar_atom(const Formula& f, const std::string& alpha, const std::string& x, std::string* rho) {
  auto* e = f.as<ast::Eq>();
  if (!e || !e->rhs.is<ast::Zero>()) return false;
  auto* ap = e->lhs.as<ast::Apply>();
  if (!ap) return false;
  auto* r = ap->fn.as<ast::FnVar>();
  auto* b = ap->arg.as<ast::BarOf>();
  if (!r || !b) return false;
  auto* a = b->fn.as<ast::FnVar>();
  auto* v = b->length.as<ast::NumVar>();
  if (!a || !v || a->name != alpha || v->name != x) return false;
  *rho = r->name;
  return true;
}

[[noreturn]] void mismatch(const std::string& what) {
  throw ShapeError("not a translated BI1 instance: " + what);
}

// forall a. ~(forall x. ~~~atom)  ->  forall a. exists x. atom
Formula repair_hits(const Formula& h, std::string* rho) {
  auto* qa = h.as<ast::Quantifier>();
  if (!qa || qa->kind != ast::QKind::Forall || qa->var.sort != Sort::Function || qa->bound) mismatch("bar hypothesis");
  auto* outer = qa->body.as<ast::Not>();
  if (!outer) mismatch("bar hypothesis");
  auto* qx = outer->body.as<ast::Quantifier>();
  if (!qx || qx->kind != ast::QKind::Forall || qx->var.sort != Sort::Number || qx->bound) mismatch("bar hypothesis");
  auto* n = qx->body.as<ast::Not>();
  if (!n || !double_negated_atom(n->body)) mismatch("bar hypothesis");
  auto atom = n->body.as<ast::Not>()->body.as<ast::Not>()->body;
  if (!is_bar_atom(atom, qa->var.name, qx->var.name, rho)) mismatch("bar atom");
  return forall_f(qa->var.name, exists_n(qx->var.name, atom));
}

// forall w. (~~(r(w) = 0) -> B)  ->  forall w. (r(w) = 0 -> B)
Formula repair_at_bars(const Formula& h, const std::string& rho) {
  auto* q = h.as<ast::Quantifier>();
  if (!q || q->kind != ast::QKind::Forall || q->var.sort != Sort::Number || q->bound) mismatch("bars clause");
  auto* b = q->body.as<ast::Binary>();
  if (!b || b->op != ast::BinOp::Imp || !double_negated_atom(b->lhs)) mismatch("bars clause");
  auto atom = b->lhs.as<ast::Not>()->body.as<ast::Not>()->body;
  if (atom != eq(apply(fvar(rho), num(q->var.name)), zero())) mismatch("bars clause atom");
  return forall_n(q->var.name, imp(atom, b->rhs));
}

}  // namespace

bool is_negative(const Formula& f) { return negative_at(f, 0); }

Formula simplify_decidable_atoms(const Formula& f) {
  if (auto* e = double_negated_atom(f)) return eq(e->lhs, e->rhs);
  return std::visit(overloaded{
                        [&](const ast::Eq&) { return f; },
                        [](const ast::Not& n) { return neg(simplify_decidable_atoms(n.body)); },
                        [](const ast::Binary& b) {
                          return binary(b.op, simplify_decidable_atoms(b.lhs), simplify_decidable_atoms(b.rhs));
                        },
                        [](const ast::Quantifier& q) {
                          return quantifier(q.kind, q.var, q.bound, simplify_decidable_atoms(q.body));
                        },
                    },
                    f.node().v);
}

Formula repair_bi_clause1(const Formula& f) {
  auto* top = f.as<ast::Binary>();
  if (!top || top->op != ast::BinOp::Imp) mismatch("no top-level implication");
  auto* c1 = top->lhs.as<ast::Binary>();
  if (!c1 || c1->op != ast::BinOp::And) mismatch("hypotheses");
  auto* c2 = c1->rhs.as<ast::Binary>();
  if (!c2 || c2->op != ast::BinOp::And) mismatch("hypotheses");
  std::string rho;
  auto hits = repair_hits(c1->lhs, &rho);
  auto bars = repair_at_bars(c2->lhs, rho);
  return imp(conj(hits, conj(bars, c2->rhs)), top->rhs);
}

}  // namespace fim
