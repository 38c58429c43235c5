#include "doctest.h"
#include "fim/bar.hpp"
#include "fim/jump.hpp"
#include "fim/machine.hpp"

using namespace fim;

namespace {

const BaireElement& registry_alpha() {
  static const BaireElement a = parse_baire(default_registry().alpha_spec);
  return a;
}

const HaltingInfo& registry_info() {
  static const HaltingInfo h = recorded_halting_info(default_registry(), registry_alpha());
  return h;
}

}  // namespace

TEST_CASE("run: small programs") {
  auto any = BaireElement::constant(3);
  auto halt = parse_program("HALT 0");
  auto r = run(halt, 0, any, 1);
  REQUIRE(r);
  CHECK(r->trace.length() == halt.stride());
  CHECK(r->output == 0);
  CHECK(r->steps == 0);

  auto query = parse_program("QUERY 0 1, HALT 1");
  auto q = run(query, 0, BaireElement::tabled({7}), 5);
  REQUIRE(q);
  CHECK(q->output == 7);
  CHECK(q->trace.entries() == std::vector<Nat>{0, 0, 0, 0, 1, 0, 7, 8});

  auto loop = parse_program("JZ 1 0, HALT 0");
  for (std::uint64_t fuel : {1u, 10u, 1000u}) CHECK_FALSE(run(loop, 0, any, fuel));

  CHECK(run(parse_program("DEC 0, JZ 0 3, JZ 1 0, HALT 0"), 5, any, 100)->steps == 14);
}

TEST_CASE("program syntax errors") {
  CHECK_THROWS_AS(parse_program("INC 0"), MachineError);
  CHECK_THROWS_AS(parse_program("JZ 0 5, HALT 0"), MachineError);
  CHECK_THROWS_AS(parse_program("FOO 1, HALT 0"), MachineError);
  CHECK_THROWS_AS(parse_program("JZ 0, HALT 0"), MachineError);
  CHECK_THROWS_AS(parse_program(""), MachineError);
  CHECK(parse_program("QUERY 0 3, HALT 3").registers() == 4);
}

TEST_CASE("t_check accepts runs and rejects every one-entry mutation") {
  auto alpha = BaireElement::tabled({4, 0, 2}, 1);
  for (const char* src : {"HALT 0", "QUERY 0 1, HALT 1", "QUERY 0 1, JZ 1 3, INC 1, HALT 1",
                          "INC 2, QUERY 2 1, JZ 1 0, HALT 1", "DEC 0, JZ 0 3, JZ 1 0, HALT 0"}) {
    auto e = parse_program(src);
    for (Nat x = 0; x < 3; ++x) {
      auto r = run(e, x, alpha, 100);
      REQUIRE(r);
      CHECK(t_check(e, x, r->y, alpha));
      CHECK_FALSE(t_check(e, x + 1, r->y, alpha));
      auto entries = r->trace.entries();
      for (std::size_t i = 0; i < entries.size(); ++i) {
        for (int delta : {1, 2}) {
          auto m = entries;
          m[i] += delta;
          CHECK_FALSE(t_check_entries(e, x, m, alpha));
          if (entries[i] >= static_cast<unsigned>(delta)) {
            m[i] = entries[i] - delta;
            CHECK_FALSE(t_check_entries(e, x, m, alpha));
          }
        }
      }
      auto shorter = entries;
      shorter.resize(entries.size() - e.stride());
      CHECK_FALSE(t_check_entries(e, x, shorter, alpha));
      auto longer = entries;
      longer.insert(longer.end(), entries.end() - static_cast<std::ptrdiff_t>(e.stride()), entries.end());
      CHECK_FALSE(t_check_entries(e, x, longer, alpha));
    }
  }
  CHECK_FALSE(t_check(parse_program("HALT 0"), 0, 1, alpha));
  CHECK_FALSE(t_check(parse_program("HALT 0"), 0, 0, alpha));
}

TEST_CASE("a falsified oracle answer breaks the trace") {
  auto alpha = BaireElement::tabled({7});
  auto e = parse_program("QUERY 0 1, HALT 1");
  auto r = run(e, 0, alpha, 5);
  auto entries = r->trace.entries();
  entries[7] = 5;  // pending answer
  entries[6] = 4;  // and the register it landed in
  CHECK_FALSE(t_check_entries(e, 0, entries, alpha));
  CHECK(t_check_entries(e, 0, entries, BaireElement::tabled({4})));
}

TEST_CASE("certificates") {
  auto alpha = BaireElement::constant(0);
  auto loop = certify(parse_program("QUERY 0 1, JZ 1 0, HALT 1"), 2, alpha, 100);
  REQUIRE(loop);
  CHECK_FALSE(loop->halts);
  CHECK(verify_status(parse_program("QUERY 0 1, JZ 1 0, HALT 1"), 2, alpha, *loop, 100));
  CHECK_FALSE(verify_status(parse_program("QUERY 0 1, JZ 1 0, HALT 1"), 2, BaireElement::constant(1), *loop, 100));
  // a counter that never repeats a configuration gets no certificate
  CHECK_FALSE(certify(parse_program("INC 1, JZ 0 0, HALT 0"), 0, alpha, 1000));
}

TEST_CASE("registry statuses verify") {
  const auto& reg = default_registry();
  CHECK(reg.size() >= 20);
  std::size_t halting = 0, diverging = 0;
  for (std::size_t k = 0; k < reg.size(); ++k) {
    const auto& st = registry_info().at(k);
    (st.halts ? halting : diverging)++;
    auto found = certify(reg.program(k), k, registry_alpha(), 100000);
    REQUIRE(found);
    CHECK(found->halts == st.halts);
    if (st.halts) CHECK(found->y == st.y);
  }
  CHECK(halting >= 4);
  CHECK(diverging >= 4);
  // the first four indices diverge, so the bar on slots below 8 never waits
  // on a trace code
  for (std::size_t k = 0; k < 4; ++k) CHECK_FALSE(registry_info().at(k).halts);

  auto bad = parse_registry("0 HALT 0 ; halts=31\n");
  CHECK_THROWS_AS(recorded_halting_info(bad, registry_alpha()), MachineError);
  CHECK_THROWS_AS(parse_registry("1 HALT 0\n"), MachineError);
  CHECK_THROWS_AS(reg.program(reg.size()), MachineError);
}

TEST_CASE("rho cases") {
  JumpContext ctx{default_registry(), registry_alpha()};
  CHECK(rho(0, ctx) == 1);
  CHECK(rho(6, ctx) == 0);  // (0, 0): slot 0 disagrees with alpha(0) = 2
  CHECK(rho(encode({2, 0}), ctx) == 1);
  CHECK(rho(1, ctx) == 1);
  CHECK(rho(encode({5}), ctx) == 0);
  CHECK(rho(encode({2}), ctx) == 1);
  CHECK(rho(10, ctx) == 1);  // 2 * 5 skips the prime 3
  // slot 1 claims program 0 halts with trace 4: false
  CHECK(rho(encode({2, 5}), ctx) == 0);
  // slot 9 with the true trace of program 4
  const auto& y4 = registry_info().at(4).y;
  auto beta = build_beta(registry_alpha(), registry_info(), 5);
  CHECK(rho_seq(bar(beta, 10), ctx) == 1);
  std::vector<Nat> wrong = bar(beta, 10).entries();
  wrong[9] = y4;  // off by one
  CHECK(rho_seq(SeqNum(wrong), ctx) == 0);
}

TEST_CASE("rho case 3 fires once the prefix is longer than the trace code") {
  // Program 0 halts at once with trace 2^1 * 3^1 * 5^1 = 30 on input 0.
  std::string text = "0 HALT 0\n";
  for (int k = 1; k < 15; ++k) text += std::to_string(k) + " JZ 1 0, HALT 0\n";
  auto reg = parse_registry(text);
  auto alpha = BaireElement::constant(0);
  JumpContext ctx{reg, alpha};
  CHECK(t_check(reg.program(0), 0, 30, alpha));
  std::vector<Nat> s{0, 0};
  CHECK(rho_seq(SeqNum(s), ctx) == 1);
  // slot 1 wrongly claims divergence; nothing bars it before lh(s) = 30
  while (s.size() < 30) s.push_back(0);
  CHECK(rho_seq(SeqNum(s).prefix(29), ctx) == 1);
  CHECK(rho_seq(SeqNum(s), ctx) == 0);
}

TEST_CASE("rho monotonicity") {
  JumpContext ctx{default_registry(), registry_alpha()};
  int zeros = 0;
  for (std::uint64_t s = 0; s <= 10000; ++s) {
    auto seq = as_seq(Nat(s));
    if (!seq || rho_seq(*seq, ctx) != 0) continue;
    ++zeros;
    for (std::uint64_t n = 0; n < 8; ++n) CHECK(rho_seq(seq->extended(n), ctx) == 0);
  }
  CHECK(zeros > 100);
}

TEST_CASE("not A") {
  auto reg = parse_registry("0 HALT 0 ; halts=30\n1 JZ 1 0, HALT 0 ; diverges@0.1.0.0\n");
  auto alpha = BaireElement::constant(6);
  auto h = recorded_halting_info(reg, alpha);
  CHECK(not_a(1, alpha, h));
  CHECK(not_a(encode({6}), alpha, h));
  CHECK_FALSE(not_a(encode({6, 0}), alpha, h));
  CHECK(not_a(encode({6, 31}), alpha, h));
  CHECK(not_a(encode({6, 31, 6, 0}), alpha, h));
  CHECK_FALSE(not_a(encode({6, 31, 6, 1}), alpha, h));
  CHECK_FALSE(not_a(0, alpha, h));
  CHECK_THROWS_AS(not_a(encode({6, 31, 6, 0, 6, 0}), alpha, h), MachineError);
}

TEST_CASE("beta: the three properties and the surviving path") {
  const auto& reg = default_registry();
  const auto& alpha = registry_alpha();
  const auto& h = registry_info();
  auto beta = build_beta(alpha, h, reg.size());
  for (std::size_t n = 0; n < reg.size(); ++n) {
    CHECK(beta(2 * n) == alpha(n));
    auto r = run(reg.program(n), n, alpha, 100000);
    CHECK((beta(2 * n + 1) > 0) == r.has_value());
    if (r) CHECK(beta(2 * n + 1) == r->y + 1);
  }
  CHECK(beta(9) == h.at(4).y + 1);
  CHECK(beta(1) == 0);

  JumpContext ctx{reg, alpha};
  for (std::size_t j = 0; j <= 2 * reg.size(); ++j) {
    CHECK(rho_seq(bar(beta, j), ctx) == 1);
    CHECK(not_a_seq(bar(beta, j), alpha, h));
  }

  // deviations at positions up to 6 are barred at once
  for (std::size_t i = 0; i <= 6; ++i) {
    auto pre = bar(beta, i);
    for (std::uint64_t v = 0; v < 8; ++v) {
      if (v == beta(i)) continue;
      CHECK(rho_seq(pre.extended(v), ctx) == 0);
    }
  }

  auto rho_fn = [&](const SeqNum& s) { return rho_seq(s, ctx); };
  auto open = open_nodes(rho_fn, 8, 8);
  REQUIRE(open.size() == 9);
  for (std::size_t j = 0; j < open.size(); ++j) CHECK(open[j] == bar(beta, j));
  auto v = bar_verify(rho_fn, 8, 8);
  CHECK(v.kind == BarVerdict::Kind::DepthExhausted);
  CHECK(SeqNum(v.path) == bar(beta, 8));

  CHECK_THROWS_AS(build_beta(alpha, h, reg.size() + 1), MachineError);
}

TEST_CASE("bar_verify") {
  auto v = bar_verify(uniform_bar(2), 3, 5);
  CHECK(v.kind == BarVerdict::Kind::Barred);
  CHECK(v.depth == 2);
  auto never = bar_verify([](const SeqNum&) { return 1; }, 2, 6);
  CHECK(never.kind == BarVerdict::Kind::DepthExhausted);
  CHECK(never.path == std::vector<Nat>(6, 0));
  // uneven bar: the branch through 1 goes one level deeper
  auto uneven = bar_verify([](const SeqNum& s) { return s.length() >= 1 + (s.length() && s[0] == 1) ? 0 : 1; }, 2, 4);
  CHECK(uneven.kind == BarVerdict::Kind::Barred);
  CHECK(uneven.depth == 2);
  CHECK_THROWS_AS(bar_verify(uniform_bar(1), 0, 3), Error);
}

TEST_CASE("bar_recurse") {
  auto one = [](const SeqNum&) { return Nat(1); };
  auto sum = [](const SeqNum&, const std::vector<Nat>& kids) {
    Nat s = 0;
    for (const auto& k : kids) s += k;
    return s;
  };
  CHECK(bar_recurse(uniform_bar(2), one, sum, 3, 2) == 9);
  CHECK(bar_recurse(uniform_bar(1), one, sum, 5, 1) == 5);
  for (std::size_t b = 1; b <= 5; ++b)
    for (std::size_t d = 1; d <= 5; ++d) {
      Nat want = 1;
      for (std::size_t i = 0; i < d; ++i) want *= b;
      CHECK(bar_recurse(uniform_bar(d), one, sum, b, d) == want);
    }
  auto len = [](const SeqNum& s) { return Nat(s.length()); };
  auto max = [](const SeqNum&, const std::vector<Nat>& kids) { return *std::max_element(kids.begin(), kids.end()); };
  CHECK(bar_recurse(uniform_bar(4), len, max, 3, 4) == 4);
  CHECK_THROWS_AS(bar_recurse([](const SeqNum&) { return 1; }, one, sum, 2, 3), Error);
}
