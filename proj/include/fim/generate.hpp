#pragma once

// Seeded random syntax for property tests and the acceptance suite.

#include <cstdint>
#include <random>

#include "fim/schemas.hpp"
#include "fim/syntax.hpp"

namespace fim {

class FormulaGen {
 public:
  explicit FormulaGen(std::uint64_t seed) : rng_(seed) {}

  /// Well-sorted formula of depth <= d over number variables x y z w and
  /// function variables a b, using every connective and quantifier form.
  Formula formula(int d);
  /// Connectives only; atoms are equations between small terms.
  Formula quantifier_free(int d);
  Term term(int d);
  Functor functor(int d);

  int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }
  std::mt19937_64& rng() { return rng_; }

 private:
  std::mt19937_64 rng_;
  std::string num_name() { return std::string(1, "xyzw"[pick(4)]); }
  std::string fn_name() { return std::string(1, "ab"[pick(2)]); }
};

/// A fixed, valid argument set for each schema kind.
SchemaArgs sample_args(SchemaKind k);

}  // namespace fim
