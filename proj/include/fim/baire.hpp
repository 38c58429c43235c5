#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fim/nat.hpp"
#include "fim/seqcode.hpp"

namespace fim {

/// Raised when a Program-described element has no value within its fuel.
class UndefinedValue : public Error {
 public:
  using Error::Error;
};

/// A finitely described total function N -> N: a point of Baire space, also
/// used as a realizer. Immutable; copies share the description.
class BaireElement {
 public:
  struct FiniteSupport {
    std::map<Nat, Nat> points;
    Nat fallback;
  };
  struct Tabled {
    std::vector<Nat> prefix;
    Nat fallback;
  };
  /// An arbitrary machine; may fail to answer within `fuel`.
  struct Program {
    std::string name;
    std::function<std::optional<Nat>(const Nat& n, std::uint64_t fuel)> fn;
    std::uint64_t fuel;
    /// Optional equivalent of fn on sequence numbers, taking the entries
    /// directly; spares materializing huge codes.
    std::function<std::optional<Nat>(const SeqNum& s, std::uint64_t fuel)> on_seq = {};
  };
  using Descriptor = std::variant<FiniteSupport, Tabled, Program>;

  explicit BaireElement(Descriptor d);

  static BaireElement constant(Nat v);
  static BaireElement identity();
  static BaireElement finite_support(std::map<Nat, Nat> points, Nat fallback);
  static BaireElement tabled(std::vector<Nat> prefix, Nat fallback = 0);
  static BaireElement program(std::string name,
                              std::function<std::optional<Nat>(const Nat&, std::uint64_t)> fn,
                              std::uint64_t fuel);
  static BaireElement seq_program(std::string name,
                                  std::function<std::optional<Nat>(const SeqNum&, std::uint64_t)> on_seq,
                                  std::uint64_t fuel);

  /// Value at n, or nullopt when a Program runs out of fuel.
  std::optional<Nat> eval(const Nat& n) const;
  /// Value at n; throws UndefinedValue when eval would return nullopt.
  Nat operator()(const Nat& n) const;
  /// Value at the code of s, using the program's sequence path when present.
  std::optional<Nat> eval_seq(const SeqNum& s, std::size_t guard_bits = kDefaultGuardBits) const;

  const Descriptor& descriptor() const { return *d_; }
  bool is_program() const { return std::holds_alternative<Program>(*d_); }
  std::string describe() const;

 private:
  std::shared_ptr<const Descriptor> d_;
};

/// Parses the textual element syntax used by the CLI:
///   const:N | id | table:v0,v1,...[;default=D] | support:i=v,j=w,...[;default=D]
BaireElement parse_baire(const std::string& spec);

}  // namespace fim
