#include "doctest.h"
#include "fim/acceptance.hpp"

using namespace fim;

TEST_CASE("class-based Glivenko count agrees with the direct one") {
  for (auto [atoms, n] : {std::pair{1, 5}, std::pair{2, 4}, std::pair{3, 3}}) {
    auto dp = glivenko_by_classes(atoms, n);
    auto direct = glivenko_direct(atoms, n);
    CHECK(dp.formulas == dp.expected);
    CHECK(direct.formulas == direct.expected);
    CHECK(dp.valid_by_size == direct.valid_by_size);
    CHECK(dp.mismatches_by_size == direct.mismatches_by_size);
    CHECK(dp.mismatches == 0);
  }
}
