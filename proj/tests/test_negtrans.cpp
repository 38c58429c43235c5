#include <random>

#include "doctest.h"
#include "fim/negtrans.hpp"
#include "fim/parser.hpp"
#include "fim/printer.hpp"
#include "fim/schemas.hpp"
#include "fim/subst.hpp"

using namespace fim;

namespace {

Formula P() { return parse_formula("x = 0"); }
Formula Q() { return parse_formula("y = 0"); }

}  // namespace

TEST_CASE("translation clauses") {
  CHECK(neg_translate(disj(P(), Q())) == neg(conj(neg(neg(neg(P()))), neg(neg(neg(Q()))))));
  auto ex = parse_formula("exists x. @a(x) = 0");
  CHECK(neg_translate(ex) == parse_formula("~(forall x. ~~~(@a(x) = 0))"));
  CHECK(neg_translate(parse_formula("forall x. x = x")) == parse_formula("forall x. ~~(x = x)"));
  CHECK(neg_translate(parse_formula("exists @a. @a(0) = 0")) == parse_formula("~(forall @a. ~~~(@a(0) = 0))"));
  CHECK(neg_translate(parse_formula("exists x < 3. x = 0")) == parse_formula("~(forall x < 3. ~~~(x = 0))"));
  CHECK(neg_translate(imp(P(), neg(Q()))) == imp(neg(neg(P())), neg(neg(neg(Q())))));
}

TEST_CASE("is_negative") {
  CHECK_FALSE(is_negative(parse_formula("0 = 0")));
  CHECK(is_negative(parse_formula("~~(0 = 0) & forall x. ~~(x = x)")));
  CHECK_FALSE(is_negative(parse_formula("~~(0 = 0) | ~~(0 = 0)")));
  CHECK_FALSE(is_negative(parse_formula("exists x. ~~(x = 0)")));
  CHECK(is_negative(parse_formula("~(forall x. ~~~(x = 0))")));
}

TEST_CASE("translation commutes with substitution") {
  const char* fs[] = {"exists y. x = y | ~(x = 0)", "forall @a. exists z < x. @a(z) = x", "x = 0 -> exists x. x = 1"};
  const char* ts[] = {"S(y)", "z + 1", "@b(x)"};
  for (auto f : fs)
    for (auto t : ts) {
      auto ff = parse_formula(f);
      auto tt = parse_term(t);
      CHECK(alpha_equal(neg_translate(subst_num(ff, "x", tt)), subst_num(neg_translate(ff), "x", tt)));
    }
}

TEST_CASE("simplify_decidable_atoms") {
  CHECK(simplify_decidable_atoms(parse_formula("~~(x = 0) & ~~~(y = 0)")) == parse_formula("x = 0 & ~(y = 0)"));
}

TEST_CASE("repair on the atomic body 0 = 0") {
  SchemaArgs a;
  a.body = parse_formula("0 = 0");
  auto inst = instantiate(SchemaKind::BI1, a);
  SchemaArgs b;
  b.body = neg(neg(parse_formula("0 = 0")));
  CHECK(repair_bi_clause1(neg_translate(inst)) == instantiate(SchemaKind::BI1, b));
}

TEST_CASE("repair rejects other shapes") {
  CHECK_THROWS_AS(repair_bi_clause1(parse_formula("0 = 0")), ShapeError);
  CHECK_THROWS_AS(repair_bi_clause1(neg_translate(instantiate(SchemaKind::MP, {}))), ShapeError);
  SchemaArgs a;
  a.body = parse_formula("w = 0");
  a.bar = parse_formula("@r(w) = 0");
  CHECK_THROWS_AS(repair_bi_clause1(neg_translate(instantiate(SchemaKind::BIa, a))), ShapeError);
  // untranslated instance
  CHECK_THROWS_AS(repair_bi_clause1(instantiate(SchemaKind::BI1, a)), ShapeError);
}

TEST_CASE("repair on quantified bodies") {
  for (const char* body : {"exists v. w = v + 1", "forall n. ~(@q(cat(w, n)) = 0) | w = 1", "exists @c. @c(w) = 0"}) {
    SchemaArgs a;
    a.body = parse_formula(body);
    SchemaArgs b;
    b.body = neg_translate(*a.body);
    CHECK(alpha_equal(repair_bi_clause1(neg_translate(instantiate(SchemaKind::BI1, a))),
                      instantiate(SchemaKind::BI1, b)));
  }
}
