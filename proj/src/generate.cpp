#include "fim/generate.hpp"

#include "fim/parser.hpp"

namespace fim {

Functor FormulaGen::functor(int d) {
  if (d <= 0 || pick(4)) return fvar(fn_name());
  return lam(num_name(), term(d - 1));
}

Term FormulaGen::term(int d) {
  if (d <= 0) {
    switch (pick(3)) {
      case 0: return zero();
      case 1: return numeral(static_cast<std::uint64_t>(pick(4)));
      default: return num(num_name());
    }
  }
  switch (pick(7)) {
    case 0: return succ(term(d - 1));
    case 1: return add(term(d - 1), term(d - 1));
    case 2: return mul(term(d - 1), term(d - 1));
    case 3: return apply(functor(d - 1), term(d - 1));
    case 4: return barof(functor(0), term(0));
    default: return term(0);
  }
}

Formula FormulaGen::quantifier_free(int d) {
  if (d <= 0 || pick(5) == 0) return eq(term(1), term(1));
  switch (pick(4)) {
    case 0: return neg(quantifier_free(d - 1));
    case 1: return conj(quantifier_free(d - 1), quantifier_free(d - 1));
    case 2: return disj(quantifier_free(d - 1), quantifier_free(d - 1));
    default: return imp(quantifier_free(d - 1), quantifier_free(d - 1));
  }
}

Formula FormulaGen::formula(int d) {
  if (d <= 0) return eq(term(2), term(2));
  switch (pick(10)) {
    case 0: return neg(formula(d - 1));
    case 1: return conj(formula(d - 1), formula(d - 1));
    case 2: return disj(formula(d - 1), formula(d - 1));
    case 3: return imp(formula(d - 1), formula(d - 1));
    case 4: return forall_n(num_name(), formula(d - 1));
    case 5: return exists_n(num_name(), formula(d - 1));
    case 6: return forall_f(fn_name(), formula(d - 1));
    case 7: return exists_f(fn_name(), formula(d - 1));
    case 8: return pick(2) ? bforall(num_name(), term(1), formula(d - 1)) : bexists(num_name(), term(1), formula(d - 1));
    default: return formula(0);
  }
}

SchemaArgs sample_args(SchemaKind k) {
  SchemaArgs a;
  switch (k) {
    case SchemaKind::AC00:
    case SchemaKind::AC00Bang:
      a.body = parse_formula("exists z. x + z = y");
      break;
    case SchemaKind::QfAC00:
      a.body = parse_formula("exists z < x. @c(z) = y");
      break;
    case SchemaKind::AC01:
      a.body = parse_formula("forall z. @a(z) = x");
      break;
    case SchemaKind::Induction:
      a.body = parse_formula("x + 0 = x");
      break;
    case SchemaKind::BIa:
    case SchemaKind::BIBang:
      a.body = parse_formula("exists v. w = v + 1");
      a.bar = parse_formula("@r(w) = 0");
      break;
    case SchemaKind::BI1:
      a.body = parse_formula("exists v. w = v + 1");
      break;
    default:
      break;
  }
  return a;
}

}  // namespace fim
