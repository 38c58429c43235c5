#pragma once

// Prime-power coding of finite sequences: (a0, ..., a{k-1}) is coded by
// p0^(a0+1) * ... * p{k-1}^(a{k-1}+1) with p0 = 2, p1 = 3, ...; 1 codes the
// empty sequence and 2^(n+1) the one-element sequence (n).

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "fim/nat.hpp"

namespace fim {

inline constexpr std::size_t kDefaultGuardBits = 4096;

/// Raised when a code would exceed the configured bit budget.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// The i-th prime (p0 = 2).
std::uint64_t nth_prime(std::size_t i);

/// A sequence number held by its entries. The numeric code can be far too
/// large to materialize (entries may themselves be huge codes), so it is
/// computed on demand under a bit guard.
class SeqNum {
 public:
  SeqNum() = default;
  explicit SeqNum(std::vector<Nat> entries) : entries_(std::move(entries)) {}

  const std::vector<Nat>& entries() const { return entries_; }
  std::size_t length() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const Nat& operator[](std::size_t j) const { return entries_[j]; }

  /// The code; throws OverflowError beyond `guard_bits`.
  Nat value(std::size_t guard_bits = kDefaultGuardBits) const;

  /// This sequence followed by the single entry n (w * 2^(n+1)).
  SeqNum extended(Nat n) const;
  SeqNum prefix(std::size_t k) const;

  friend bool operator==(const SeqNum&, const SeqNum&) = default;

 private:
  std::vector<Nat> entries_;
};

Nat encode(std::span<const Nat> xs, std::size_t guard_bits = kDefaultGuardBits);
Nat encode(std::initializer_list<std::uint64_t> xs, std::size_t guard_bits = kDefaultGuardBits);

/// Entries of w, or nullopt when w is not a sequence number (including w = 0).
std::optional<std::vector<Nat>> decode(const Nat& w);
std::optional<SeqNum> as_seq(const Nat& w);
bool is_seq(const Nat& w);

/// lh(w) and (w)_j; both throw for non-sequence numbers or j out of range.
std::size_t lh(const Nat& w);
Nat proj(const Nat& w, std::size_t j);

SeqNum concat(const SeqNum& u, const SeqNum& v);
/// Throws Error if either argument is not a sequence number.
Nat concat(const Nat& u, const Nat& v, std::size_t guard_bits = kDefaultGuardBits);

/// Exponent of the prime p in w; divides it out of w.
std::size_t strip_prime(Nat& w, std::uint64_t p);

/// The code of the first x values of alpha (the "bar" of alpha at x).
template <class Fn> SeqNum bar(Fn&& alpha, std::size_t x) {
  std::vector<Nat> xs;
  xs.reserve(x);
  for (std::size_t i = 0; i < x; ++i) xs.push_back(Nat(alpha(Nat(i))));
  return SeqNum(std::move(xs));
}

}  // namespace fim
