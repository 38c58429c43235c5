#include <random>

#include "doctest.h"
#include "fim/parser.hpp"
#include "fim/printer.hpp"
#include "fim/subst.hpp"

using namespace fim;

namespace {

// Random well-sorted ASTs over a small variable pool.
struct Gen {
  std::mt19937 rng;
  explicit Gen(unsigned seed) : rng(seed) {}

  int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); }
  std::string nvar() { return std::string(1, "xyz"[pick(3)]); }
  std::string fvar() { return std::string(1, "ab"[pick(2)]); }

  Functor functor(int d) {
    if (d <= 0 || pick(4)) return fim::fvar(fvar());
    return lam(nvar(), term(d - 1));
  }
  Term term(int d) {
    if (d <= 0) {
      switch (pick(3)) {
        case 0: return zero();
        case 1: return numeral(static_cast<std::uint64_t>(pick(4)));
        default: return num(nvar());
      }
    }
    switch (pick(7)) {
      case 0: return succ(term(d - 1));
      case 1: return add(term(d - 1), term(d - 1));
      case 2: return mul(term(d - 1), term(d - 1));
      case 3: return apply(functor(d - 1), term(d - 1));
      case 4: return pow(term(d - 1), term(d - 1));
      default: return term(0);
    }
  }
  Formula formula(int d) {
    if (d <= 0) return eq(term(2), term(2));
    switch (pick(9)) {
      case 0: return neg(formula(d - 1));
      case 1: return conj(formula(d - 1), formula(d - 1));
      case 2: return disj(formula(d - 1), formula(d - 1));
      case 3: return imp(formula(d - 1), formula(d - 1));
      case 4: return forall_n(nvar(), formula(d - 1));
      case 5: return exists_n(nvar(), formula(d - 1));
      case 6: return pick(2) ? forall_f(fvar(), formula(d - 1)) : exists_f(fvar(), formula(d - 1));
      case 7: return pick(2) ? bforall(nvar(), term(1), formula(d - 1)) : bexists(nvar(), term(1), formula(d - 1));
      default: return formula(0);
    }
  }
};

}  // namespace

TEST_CASE("parse: grammar examples") {
  CHECK(parse_formula("forall x. x = x") == forall_n("x", eq(num("x"), num("x"))));
  CHECK(parse_formula("forall @a. exists x. @a(x) = 0") ==
        forall_f("a", exists_n("x", eq(apply(fvar("a"), num("x")), zero()))));
  CHECK(parse_formula("(lam x. S(x))(0) = 1") == eq(apply(lam("x", succ(num("x"))), zero()), numeral(1)));
  CHECK(parse_formula("forall x < 3. x = x") == bforall("x", numeral(3), eq(num("x"), num("x"))));
}

TEST_CASE("parse: precedence and associativity") {
  auto a = eq(num("x"), zero());
  auto b = eq(num("y"), zero());
  auto c = eq(num("z"), zero());
  CHECK(parse_formula("x = 0 -> y = 0 -> z = 0") == imp(a, imp(b, c)));
  CHECK(parse_formula("x = 0 | y = 0 & z = 0") == disj(a, conj(b, c)));
  CHECK(parse_formula("~x = 0 & y = 0") == conj(neg(a), b));
  CHECK(parse_formula("x = 0 -> forall y. y = 0 & z = 0") == imp(a, forall_n("y", conj(b, c))));
  CHECK(parse_term("x + y * z") == add(num("x"), mul(num("y"), num("z"))));
  CHECK(parse_term("2^x*3^y") == mul(pow(numeral(2), num("x")), pow(numeral(3), num("y"))));
}

TEST_CASE("parse: syntax error at the offending token") {
  try {
    parse_formula("forall x = x");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.kind() == ParseError::Kind::Syntax);
    CHECK(e.line() == 1);
    CHECK(e.column() == 10);
    CHECK(e.found() == "=");
    CHECK(e.expected().count("'.'") == 1);
  }
  CHECK_THROWS_AS(parse_formula("x = "), ParseError);
  CHECK_THROWS_AS(parse_formula("x = 0 &"), ParseError);
}

TEST_CASE("parse: sort errors") {
  auto sort_error = [](const std::string& s) {
    try {
      parse_formula(s);
    } catch (const ParseError& e) {
      return e.kind() == ParseError::Kind::Sort;
    }
    return false;
  };
  CHECK(sort_error("x(0) = 0"));
  CHECK(sort_error("@a = 0"));
}

TEST_CASE("print: examples") {
  CHECK(print_formula(forall_n("x", eq(num("x"), num("x")))) == "forall x. x = x");
  CHECK(print_formula(neg(neg(eq(zero(), zero())))) == "~~(0 = 0)");
  CHECK(print_formula(parse_formula("forall @a. exists x. @a(x) = 0")) == "forall @a. exists x. @a(x) = 0");
}

TEST_CASE("print/parse roundtrip over generated formulas") {
  Gen g(12345);
  for (int i = 0; i < 3000; ++i) {
    auto f = g.formula(1 + i % 5);
    auto text = print_formula(f);
    INFO(text);
    CHECK(parse_formula(text) == f);
  }
}

TEST_CASE("subst_num: examples") {
  auto f = parse_formula("x = y");
  CHECK(print_formula(subst_num(f, "x", zero())) == "0 = y");
  auto g = parse_formula("exists y. x = y");
  CHECK(print_formula(subst_num(g, "x", num("y"))) == "exists y'. y = y'");
  CHECK(print_formula(subst_num(parse_formula("x = x"), "x", succ(num("x")))) == "S(x) = S(x)");
  // bound occurrences are untouched
  CHECK(subst_num(parse_formula("forall x. x = 0"), "x", zero()) == parse_formula("forall x. x = 0"));
}

TEST_CASE("subst_num: composition law over generated formulas") {
  Gen g(777);
  int checked = 0;
  for (int i = 0; i < 2000; ++i) {
    auto f = g.formula(1 + i % 4);
    auto t = g.term(2);
    auto s = g.term(2);
    if (free_vars(s).numbers.count("x")) continue;
    auto lhs = subst_num(subst_num(f, "x", t), "y", s);
    auto rhs = subst_num(subst_num(f, "y", s), "x", subst_num(t, "y", s));
    INFO(print_formula(f));
    CHECK(alpha_equal(lhs, rhs));
    ++checked;
  }
  CHECK(checked > 500);
}

TEST_CASE("subst preserves free variables predictably") {
  Gen g(99);
  for (int i = 0; i < 1000; ++i) {
    auto f = g.formula(3);
    auto t = g.term(2);
    auto r = subst_num(f, "x", t);
    auto fv = free_vars(r);
    CHECK(fv.numbers.count("x") == (free_vars(t).numbers.count("x") && free_vars(f).numbers.count("x") ? 1u : 0u));
    // reparse as a sort check
    CHECK(parse_formula(print_formula(r)) == r);
  }
}

TEST_CASE("free_vars: examples") {
  auto a = free_vars(parse_formula("forall x. x = y"));
  CHECK(a.numbers == std::set<std::string>{"y"});
  CHECK(a.functions.empty());
  auto b = free_vars(parse_formula("@a(x) = 0"));
  CHECK(b.numbers == std::set<std::string>{"x"});
  CHECK(b.functions == std::set<std::string>{"a"});
  auto c = free_vars(parse_formula("forall @a. (~(forall x. ~(@a(x) = 0)) -> exists x. @a(x) = 0)"));
  CHECK(c.numbers.empty());
  CHECK(c.functions.empty());
}

TEST_CASE("lambda_reduce: examples") {
  CHECK(lambda_reduce(apply(lam("x", zero()), succ(zero()))) == zero());
  auto t = add(num("y"), numeral(2));
  CHECK(lambda_reduce(apply(lam("x", num("x")), t)) == t);
  auto plain = parse_term("x + @a(y)");
  CHECK(lambda_reduce(plain) == plain);
  // capture inside the reduced body is avoided
  auto nested = apply(lam("x", apply(lam("y", add(num("x"), num("y"))), zero())), num("y"));
  CHECK(lambda_reduce(nested) == add(num("y"), zero()));
}

TEST_CASE("lambda_reduce: idempotent, no redex left") {
  Gen g(4242);
  for (int i = 0; i < 2000; ++i) {
    auto t = g.term(4);
    auto r = lambda_reduce(t);
    CHECK(lambda_reduce(r) == r);
    CHECK(print_term(r).find("lam") == std::string::npos);
  }
}
