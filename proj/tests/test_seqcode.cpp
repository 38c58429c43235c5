#include "doctest.h"
#include "fim/baire.hpp"
#include "fim/seqcode.hpp"

using namespace fim;

namespace {

// Reference coding by trial division on machine integers.
std::optional<std::vector<unsigned>> naive_decode(unsigned long w) {
  static const unsigned primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31};
  if (w == 0) return std::nullopt;
  std::vector<unsigned> out;
  std::size_t i = 0;
  while (w != 1) {
    unsigned e = 0;
    while (w % primes[i] == 0) {
      w /= primes[i];
      ++e;
    }
    if (e == 0) return std::nullopt;
    out.push_back(e - 1);
    ++i;
  }
  return out;
}

}  // namespace

TEST_CASE("encode: values") {
  CHECK(encode({}) == 1);
  CHECK(encode({3}) == 16);
  CHECK(encode({1, 2}) == 108);
  for (std::uint64_t n = 0; n < 60; ++n) CHECK(encode({n}) == Nat(1) << (n + 1));
}

TEST_CASE("decode: values") {
  CHECK(decode(108) == std::vector<Nat>{1, 2});
  CHECK(decode(6) == std::vector<Nat>{0, 0});
  CHECK_FALSE(decode(5).has_value());
  CHECK_FALSE(decode(0).has_value());
  CHECK(decode(1) == std::vector<Nat>{});
  CHECK_FALSE(decode(10).has_value());  // 2 * 5, prime 3 missing
}

TEST_CASE("encode/decode agree with trial division up to 10^4") {
  int seqs = 0;
  for (unsigned long w = 0; w <= 10000; ++w) {
    auto ref = naive_decode(w);
    auto got = decode(Nat(w));
    REQUIRE(ref.has_value() == got.has_value());
    if (!got) continue;
    ++seqs;
    REQUIRE(got->size() == ref->size());
    for (std::size_t i = 0; i < got->size(); ++i) CHECK((*got)[i] == (*ref)[i]);
    CHECK(encode(*got) == w);
  }
  CHECK(seqs > 50);
}

TEST_CASE("decode(encode(xs)) = xs, length <= 4, entries <= 5") {
  std::vector<Nat> xs;
  int count = 0;
  std::function<void()> rec = [&] {
    CHECK(decode(encode(xs)) == xs);
    ++count;
    if (xs.size() == 4) return;
    for (int v = 0; v <= 5; ++v) {
      xs.push_back(v);
      rec();
      xs.pop_back();
    }
  };
  rec();
  CHECK(count == 1 + 6 + 36 + 216 + 1296);
}

TEST_CASE("lh and projection agree with decode") {
  for (unsigned w = 1; w <= 3000; ++w) {
    auto xs = decode(w);
    if (!xs) {
      CHECK_THROWS_AS(lh(w), Error);
      continue;
    }
    CHECK(lh(w) == xs->size());
    for (std::size_t j = 0; j < xs->size(); ++j) CHECK(proj(w, j) == (*xs)[j]);
  }
}

TEST_CASE("concat") {
  CHECK(concat(Nat(1), Nat(108)) == 108);
  CHECK(concat(Nat(108), Nat(1)) == 108);
  CHECK(concat(encode({1}), encode({2})) == 108);
  // one-step extension w * 2^(n+1)
  CHECK(concat(encode({4, 0}), Nat(1) << 3) == encode({4, 0, 2}));
  CHECK(lh(concat(encode({1, 1}), encode({0, 3, 2}))) == 5);
  CHECK_THROWS_AS(concat(Nat(5), Nat(1)), Error);
}

TEST_CASE("overflow guard") {
  CHECK_THROWS_AS(encode({5000}), OverflowError);
  CHECK_NOTHROW(encode({4094}));
  CHECK_THROWS_AS(encode({100}, 64), OverflowError);
  SeqNum big(std::vector<Nat>{Nat(1) << 100});
  CHECK_THROWS_AS(big.value(), OverflowError);
  CHECK(big.length() == 1);
}

TEST_CASE("bar") {
  auto id = BaireElement::identity();
  auto z = BaireElement::constant(0);
  CHECK(bar(z, 0).value() == 1);
  CHECK(bar(id, 0).value() == 1);
  CHECK(bar(id, 3).value() == 2250);
  CHECK(bar(z, 2).value() == 6);
  auto t = BaireElement::tabled({3, 1, 4, 1, 5}, 9);
  for (std::size_t x = 0; x <= 7; ++x) {
    auto full = bar(t, x);
    for (std::size_t k = 0; k <= x; ++k) CHECK(bar(t, k) == full.prefix(k));
  }
}

TEST_CASE("baire element specs") {
  CHECK(parse_baire("const:7")(100) == 7);
  CHECK(parse_baire("id")(12) == 12);
  auto t = parse_baire("table:1,2,3;default=8");
  CHECK(t(1) == 2);
  CHECK(t(5) == 8);
  auto s = parse_baire("support:2=0,5=3;default=1");
  CHECK(s(2) == 0);
  CHECK(s(5) == 3);
  CHECK(s(4) == 1);
  CHECK(parse_baire(s.describe())(5) == 3);
  CHECK_THROWS_AS(parse_baire("weird"), Error);
}
