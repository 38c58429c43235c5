#include <random>

#include "doctest.h"
#include "fim/k2.hpp"
#include "fim/parser.hpp"
#include "fim/printer.hpp"
#include "fim/schemas.hpp"
#include "fim/subst.hpp"

using namespace fim;

namespace {

// Answers only after reading two values of its argument.
BaireElement reads_two() {
  return BaireElement::seq_program(
      "reads-two",
      [](const SeqNum& s, std::uint64_t) -> std::optional<Nat> {
        if (s.length() < 3) return Nat(0);
        return s[0] + s[1] + 2 * s[2] + 1;
      },
      1);
}

Env mp_env(const BaireElement& alpha) {
  Env env;
  env.function_ranges["*"] = {alpha};
  return env;
}

std::optional<std::size_t> least_zero(const BaireElement& a, std::size_t limit) {
  for (std::size_t i = 0; i < limit; ++i)
    if (a(i) == 0) return i;
  return std::nullopt;
}

}  // namespace

TEST_CASE("k2_apply: constant, silent and two-read alphas") {
  auto beta = BaireElement::tabled({4, 7, 9}, 3);
  for (std::uint64_t fuel : {1u, 2u, 10u}) {
    CHECK(k2_apply(BaireElement::constant(6), beta, 11, fuel) == Nat(5));
    CHECK_FALSE(k2_apply(BaireElement::constant(0), beta, 11, fuel));
  }
  CHECK_FALSE(k2_apply(reads_two(), beta, 5, 1));
  for (std::uint64_t fuel = 2; fuel < 20; ++fuel) {
    auto a = k2_apply_traced(reads_two(), beta, 5, fuel);
    REQUIRE(a);
    CHECK(a->value == 5 + 4 + 14);
    CHECK(a->consumed == 2);
  }
}

TEST_CASE("k2_apply: fuel monotonicity and prefix determinism") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Nat> prefix;
    for (int i = 0; i < 6; ++i) prefix.push_back(Nat(rng() % 4));
    auto beta = BaireElement::tabled(prefix, rng() % 3);
    // alpha answers once the sum of what it has read passes a threshold
    std::uint64_t threshold = rng() % 8;
    auto alpha = BaireElement::seq_program(
        "threshold",
        [threshold](const SeqNum& s, std::uint64_t) -> std::optional<Nat> {
          if (s.empty()) return Nat(0);
          Nat sum = 0;
          for (std::size_t i = 1; i < s.length(); ++i) sum += s[i];
          return sum >= threshold ? sum + s[0] + 1 : Nat(0);
        },
        1);
    Nat n = rng() % 5;
    std::optional<K2Answer> first;
    for (std::uint64_t fuel = 1; fuel < 12; ++fuel) {
      auto a = k2_apply_traced(alpha, beta, n, fuel);
      if (first) {
        REQUIRE(a);
        CHECK(a->value == first->value);
        CHECK(a->consumed == first->consumed);
      } else if (a) {
        first = a;
      }
    }
    if (!first) continue;
    std::vector<Nat> used;
    for (std::size_t i = 0; i < first->consumed; ++i) used.push_back(beta(i));
    auto other = BaireElement::tabled(used, 100 + rng() % 5);
    auto b = k2_apply_traced(alpha, other, n, 11);
    REQUIRE(b);
    CHECK(b->value == first->value);
  }
}

TEST_CASE("pairing, cons and tail") {
  auto a = BaireElement::tabled({1, 2, 3});
  auto b = BaireElement::tabled({7, 8, 9});
  auto p = pair_of(a, b);
  for (int y = 0; y < 3; ++y) {
    CHECK(component(p, 0)(y) == a(y));
    CHECK(component(p, 1)(y) == b(y));
  }
  auto c = cons(5, b);
  CHECK(c(0) == 5);
  CHECK(c(2) == 8);
  CHECK(tail_of(c)(1) == 8);
  CHECK_THROWS_AS(component(p, 2), Error);
}

TEST_CASE("realizes_transform clauses") {
  CHECK(print_formula(realizes_transform(parse_formula("0 = 0"), "e")) == "0 = 0");
  auto ex = realizes_transform(parse_formula("exists x. @a(x) = 0"), "e");
  CHECK(alpha_equal(ex, parse_formula("@a(@e(0)) = 0")));
  CHECK_THROWS_AS(realizes_transform(parse_formula("@e(0) = 0"), "e"), Error);

  auto conj = realizes_transform(parse_formula("(exists x. x = 1) & exists y. y = 2"), "e");
  CHECK(alpha_equal(conj, parse_formula("(lam y. @e(2^0 * 3^y))(0) = 1 & (lam y. @e(2^1 * 3^y))(0) = 2")));

  // the MP transform: for every alpha, through e|alpha, every hypothesis
  // realizer is sent to an element whose head is a zero of alpha
  auto mp = realizes_transform(instantiate(SchemaKind::MP, {}), "e");
  auto* q = mp.as<ast::Quantifier>();
  REQUIRE(q);
  CHECK(q->var.sort == Sort::Function);
  auto text = print_formula(mp);
  CHECK(text.find("forall @s") != std::string::npos);
  CHECK(text.find("@a(@t'(0)) = 0") != std::string::npos);
  CHECK(alpha_equal(lambda_reduce(mp), lambda_reduce(parse_formula(print_formula(mp)))));
}

TEST_CASE("MP realizer: witness is the least zero") {
  auto mp = instantiate(SchemaKind::MP, {});
  auto alpha = BaireElement::finite_support({{2, 0}}, 1);
  auto r = check_realizes(mp_realizer(), mp, mp_env(alpha), 1000);
  CHECK(r.verdict == Verdict::Realized);
  REQUIRE(r.witnesses.size() == 1);
  CHECK(r.witnesses[0] == 2);

  auto zero = check_realizes(mp_realizer(), mp, mp_env(BaireElement::constant(0)), 1000);
  CHECK(zero.verdict == Verdict::Realized);
  CHECK(zero.witnesses == std::vector<Nat>{0});

  CHECK_FALSE(k2_apply(mp_realizer(), BaireElement::constant(1), 2, 1000));
  auto none = check_realizes(mp_realizer(), mp, mp_env(BaireElement::constant(1)), 1000);
  CHECK(none.verdict == Verdict::FuelExhausted);
}

TEST_CASE("MP realizer on random finite-support alphas") {
  auto mp = instantiate(SchemaKind::MP, {});
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    std::map<Nat, Nat> pts;
    for (int i = 0; i < 4; ++i) pts[Nat(rng() % 30)] = rng() % 3;
    pts[Nat(rng() % 30)] = 0;
    auto alpha = BaireElement::finite_support(pts, 1 + rng() % 4);
    auto r = check_realizes(mp_realizer(), mp, mp_env(alpha), 200);
    REQUIRE(r.verdict == Verdict::Realized);
    REQUIRE(r.witnesses.size() == 1);
    CHECK(r.witnesses[0] == *least_zero(alpha, 40));
  }
}

TEST_CASE("wrong MP realizers are rejected") {
  auto mp = instantiate(SchemaKind::MP, {});
  auto alpha = BaireElement::finite_support({{3, 0}}, 1);
  // always names 0 as the witness
  auto liar = BaireElement::seq_program(
      "liar",
      [](const SeqNum& s, std::uint64_t) -> std::optional<Nat> { return s.empty() ? Nat(1) : Nat(2); }, 1);
  CHECK(check_realizes(liar, mp, mp_env(alpha), 100).verdict == Verdict::NotRealized);
}

TEST_CASE("DNS1 realizer") {
  SchemaArgs a;
  auto dns = instantiate(SchemaKind::DNS1, a);
  Env env;
  env.ranges["x"] = 10;
  env.function_ranges["*"] = {BaireElement::constant(0), BaireElement::constant(1), BaireElement::tabled({0, 1, 2})};

  // rho bars every path after two values
  env.functions.insert_or_assign(
      "r", BaireElement::seq_program(
               "bar-at-2", [](const SeqNum& s, std::uint64_t) { return std::optional<Nat>(s.length() >= 2 ? 0 : 1); },
               1));
  CHECK(check_realizes(dns1_realizer(), dns, env, 50).verdict == Verdict::Realized);

  // rho never bars: the hypothesis has no realizer on the test data
  env.functions.insert_or_assign("r", BaireElement::constant(1));
  CHECK(check_realizes(dns1_realizer(), dns, env, 50).verdict == Verdict::Realized);

  CHECK(check_realizes(BaireElement::constant(0), parse_formula("~(0 = S(0))"), {}, 10).verdict ==
        Verdict::Realized);
  CHECK(check_realizes(BaireElement::constant(0), parse_formula("~(0 = 0)"), {}, 10).verdict ==
        Verdict::NotRealized);
}

TEST_CASE("checker basics") {
  for (auto r : {BaireElement::constant(0), BaireElement::tabled({5, 6})})
    CHECK(check_realizes(r, parse_formula("0 = 0"), {}, 10).verdict == Verdict::Realized);

  Env env;
  env.functions.insert_or_assign("a", BaireElement::constant(1));
  env.ranges["x"] = 10;
  auto r = check_realizes(BaireElement::constant(0), parse_formula("exists x. @a(x) = 0"), env, 100);
  CHECK(r.verdict == Verdict::NotRealized);

  // disjunction: head selects the disjunct
  CHECK(check_realizes(BaireElement::tabled({1}), parse_formula("0 = 1 | 0 = 0"), {}, 10).verdict ==
        Verdict::Realized);
  CHECK(check_realizes(BaireElement::tabled({0}), parse_formula("0 = 1 | 0 = 0"), {}, 10).verdict ==
        Verdict::NotRealized);

  // bounded universal: e(<n> * <x>) = x + 1 realizes forall x < 5. exists y. y = x
  auto id_like = BaireElement::seq_program(
      "ident", [](const SeqNum& s, std::uint64_t) -> std::optional<Nat> {
        if (s.length() < 2) return Nat(0);
        return s[0] == 0 ? s[1] + 1 : Nat(1);
      },
      1);
  auto good = check_realizes(id_like, parse_formula("forall x < 5. exists y. y = x"), {}, 20);
  CHECK(good.verdict == Verdict::Realized);
  CHECK(good.witnesses.size() == 5);
  CHECK(check_realizes(id_like, parse_formula("forall x < 5. exists y. y = x + 1"), {}, 20).verdict ==
        Verdict::NotRealized);

  Env none;
  CHECK_THROWS_AS(check_realizes(BaireElement::constant(0), parse_formula("forall @b. @b(0) = 0"), none, 10),
                  OutsideFragment);
}

TEST_CASE("witness soundness") {
  std::mt19937_64 rng(3);
  auto f = parse_formula("exists x < 8. @a(x) = 2");
  for (int trial = 0; trial < 100; ++trial) {
    auto alpha = BaireElement::tabled({rng() % 4, rng() % 4, rng() % 4, rng() % 4, rng() % 4}, rng() % 4);
    Env env;
    env.functions.insert_or_assign("a", alpha);
    auto r = check_realizes(BaireElement::constant(rng() % 8), f, env, 10);
    if (r.verdict != Verdict::Realized) continue;
    REQUIRE(r.witnesses.size() == 1);
    CHECK(alpha(r.witnesses[0]) == 2);
  }
}

TEST_CASE("eval_term") {
  Env env;
  env.numbers["x"] = 3;
  env.functions.insert_or_assign("a", BaireElement::tabled({2, 4, 6}));
  CHECK(eval_term(parse_formula("@a(x) = 0").as<ast::Eq>()->lhs, env) == 0);
  CHECK(eval_term(parse_formula("2^S(x) * 3 = 0").as<ast::Eq>()->lhs, env) == 48);
  CHECK(eval_term(parse_formula("(lam y. @a(y + 1))(0) = 0").as<ast::Eq>()->lhs, env) == 4);
  CHECK(eval_term(parse_formula("barof(@a, 2) = 0").as<ast::Eq>()->lhs, env) == 8 * 243);
  CHECK_THROWS_AS(eval_term(parse_formula("y = 0").as<ast::Eq>()->lhs, env), Error);
}
