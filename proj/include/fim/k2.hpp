#pragma once

// Kleene's second algebra and function-realizability at desk scale.
//
// Coding conventions:
//   application  {e}(n | b) = e(<n> * bar(b, k)) - 1 for the least k with a nonzero value
//   pairs        (e)_i = lam y. e(2^i * 3^y), i = 0, 1
//   head/tail    e(0) and lam n. e(n + 1)
//   numerals     x embeds as lam k. x

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fim/baire.hpp"
#include "fim/syntax.hpp"

namespace fim {

struct K2Answer {
  Nat value;
  std::size_t consumed;  // k: number of values of beta read
};

/// {alpha}(n | beta) searching k = 0..fuel; nullopt when no answer within fuel.
std::optional<K2Answer> k2_apply_traced(const BaireElement& alpha, const BaireElement& beta, const Nat& n,
                                        std::uint64_t fuel);
std::optional<Nat> k2_apply(const BaireElement& alpha, const BaireElement& beta, const Nat& n, std::uint64_t fuel);

/// The partial function alpha | beta as an element (undefined points need fuel).
BaireElement k2_compose(const BaireElement& alpha, const BaireElement& beta, std::uint64_t fuel);
BaireElement pair_of(const BaireElement& a, const BaireElement& b);
BaireElement component(const BaireElement& e, int i);
BaireElement cons(const Nat& head, const BaireElement& tail);
BaireElement tail_of(const BaireElement& e);

/// "eps realizes f" as a formula of the language. Throws Error when eps is
/// free in f.
Formula realizes_transform(const Formula& f, const std::string& eps);

/// Realizer of every MP instance; see the implementation for the protocol.
BaireElement mp_realizer();
/// Realizer of every DNS1 instance: lam s. 1, whose applications are
/// everywhere 0.
BaireElement dns1_realizer();

/// Finite interpretation of free and quantified variables.
struct Env {
  std::map<std::string, Nat> numbers;
  std::map<std::string, BaireElement> functions;
  /// Exclusive upper bounds for quantified number variables, by name.
  std::map<std::string, Nat> ranges;
  /// Finite universes for quantified function variables, by name; "*" is
  /// the fallback for any name.
  std::map<std::string, std::vector<BaireElement>> function_ranges;
};

/// Value of a closed-under-env term; throws UndefinedValue for fuel-limited
/// elements and Error for unbound variables.
Nat eval_term(const Term& t, const Env& env);

enum class Verdict { Realized, NotRealized, FuelExhausted };
std::string verdict_name(Verdict v);

struct RealizeResult {
  Verdict verdict;
  /// Witnesses read at positively checked number existentials, in order.
  std::vector<Nat> witnesses;
  std::string note;
};

class OutsideFragment : public Error {
 public:
  using Error::Error;
};

/// Three-valued realizability check. Unbounded number quantifiers without a
/// range are searched up to `fuel`; function quantifiers range over
/// env.function_ranges. Implications are checked against the canonical
/// realizer of the hypothesis when one is found.
RealizeResult check_realizes(const BaireElement& r, const Formula& f, const Env& env, std::uint64_t fuel);

}  // namespace fim
