#include "doctest.h"
#include "fim/negtrans.hpp"
#include "fim/parser.hpp"
#include "fim/prop.hpp"

using namespace fim;
using namespace fim::prop;

TEST_CASE("prop parse and print") {
  auto f = parse_prop("((P -> Q) -> P) -> P");
  CHECK(f == pimp(pimp(pimp(atom(0), atom(1)), atom(0)), atom(0)));
  CHECK(to_string(f) == "((P -> Q) -> P) -> P");
  CHECK(parse_prop("P7 & ~~R") == pand(atom(7), pnot(pnot(atom(2)))));
  CHECK(to_string(parse_prop("~(P | Q) & R")) == "~(P | Q) & R");
  CHECK(parse_prop("((p->q)->p)->p") == parse_prop("((P -> Q) -> P) -> P"));
  CHECK_THROWS_AS(parse_prop("P &"), Error);
  CHECK_THROWS_AS(parse_prop("X"), Error);
  for (int n = 0; n <= 3; ++n)
    for (const auto& g : formulas_of_size(2, n)) CHECK(parse_prop(to_string(g)) == g);
}

TEST_CASE("enumeration counts") {
  // T(0) = a, T(n) = T(n-1) + 3 * sum T(i) T(n-1-i)
  CHECK(formulas_of_size(3, 0).size() == 3);
  CHECK(formulas_of_size(3, 1).size() == 30);
  CHECK(formulas_of_size(3, 2).size() == 570);
  CHECK(formulas_of_size(3, 3).size() == 13530);
}

TEST_CASE("classical validity") {
  CHECK(classical_valid(parse_prop("((P -> Q) -> P) -> P")));
  CHECK_FALSE(classical_valid(parse_prop("P")));
  CHECK(classical_valid(parse_prop("P | ~P")));
  CHECK(truth_table(parse_prop("P & Q"), 2) == 0b1000);
  Prop wide = atom(0);
  for (int i = 1; i < 21; ++i) wide = por(wide, atom(i));
  CHECK_THROWS_AS(classical_valid(wide), BudgetError);
}

TEST_CASE("ipc provability") {
  CHECK_FALSE(ipc_provable(parse_prop("((P -> Q) -> P) -> P")));
  CHECK(ipc_provable(parse_prop("~~(P | ~P)")));
  CHECK(ipc_provable(parse_prop("P -> P")));
  CHECK_FALSE(ipc_provable(parse_prop("P | ~P")));
  CHECK_FALSE(ipc_provable(parse_prop("~~P -> P")));
  CHECK(ipc_provable(parse_prop("~~~P -> ~P")));
  CHECK(ipc_provable(parse_prop("(P -> Q) -> ~Q -> ~P")));
  CHECK_FALSE(ipc_provable(parse_prop("(~Q -> ~P) -> P -> Q")));
  CHECK(ipc_provable(parse_prop("((P -> Q) -> R) -> (P -> Q | R) -> Q | R")) == false);
  CHECK(ipc_provable(parse_prop("(P | Q -> R) -> (P -> R) & (Q -> R)")));
  CHECK(ipc_provable(parse_prop("~~(((P -> Q) -> P) -> P)")));
  CHECK(ipc_provable(parse_prop("false -> P")));
  Prop many = atom(0);
  for (int i = 1; i < 13; ++i) many = pand(many, atom(i));
  CHECK_THROWS_AS(ipc_provable(many), BudgetError);
}

TEST_CASE("Peirce has a two-world countermodel and none with one world") {
  auto peirce = parse_prop("((P -> Q) -> P) -> P");
  CHECK_FALSE(kripke_countermodel(peirce, 1).has_value());
  auto m = kripke_countermodel(peirce, 2);
  REQUIRE(m.has_value());
  CHECK(m->worlds == 2);
  CHECK((forcing(*m, peirce) & 1u) == 0);
}

TEST_CASE("oracles agree on all formulas over 3 atoms up to 3 connectives, 2 atoms up to 4") {
  int valid_unprovable = 0;
  auto run = [&](int atoms, int n) {
    for (const auto& f : formulas_of_size(atoms, n)) {
      bool cl = classical_valid(f);
      bool ip = ipc_provable(f);
      INFO(to_string(f));
      CHECK((!ip || cl));                                // soundness alignment
      CHECK(cl == ipc_provable(pnot(pnot(f))));          // Glivenko
      auto cm = kripke_countermodel(f, 3);
      CHECK(ip != cm.has_value());                       // no countermodel iff provable, at this size
      if (cl && !ip) ++valid_unprovable;
    }
  };
  for (int n = 0; n <= 3; ++n) run(3, n);
  run(2, 4);
  CHECK(valid_unprovable > 0);
}

TEST_CASE("translation lands in IPC exactly for classical tautologies (small sizes)") {
  for (int n = 0; n <= 3; ++n)
    for (const auto& f : formulas_of_size(3, n)) {
      std::vector<Formula> atoms;
      for (int i = 0; i < 3; ++i) atoms.push_back(to_formula(atom(i)));
      auto gf = from_formula(neg_translate(to_formula(f)), atoms);
      CHECK(atoms.size() == 3);
      CHECK(classical_valid(f) == ipc_provable(gf));
      CHECK(ipc_provable(pand(pimp(gf, pnot(pnot(gf))), pimp(pnot(pnot(gf)), gf))));
    }
}

TEST_CASE("bridging") {
  std::vector<Formula> atoms;
  auto p = from_formula(parse_formula("x = 0 -> (y = 1 | x = 0)"), atoms);
  CHECK(p == pimp(atom(0), por(atom(1), atom(0))));
  CHECK(atoms.size() == 2);
  CHECK_THROWS_AS(from_formula(parse_formula("forall x. x = 0"), atoms), Error);
}
