#include "fim/seqcode.hpp"

#include <cmath>

namespace fim {

namespace {

constexpr std::size_t kPrimeTableSize = 20000;

const std::vector<std::uint64_t>& prime_table() {
  static const std::vector<std::uint64_t> table = [] {
    std::vector<std::uint64_t> ps;
    std::uint64_t limit = 250000;  // pi(250000) > 20000
    std::vector<bool> composite(limit + 1, false);
    for (std::uint64_t i = 2; i <= limit && ps.size() < kPrimeTableSize; ++i) {
      if (composite[i]) continue;
      ps.push_back(i);
      for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
    }
    return ps;
  }();
  return table;
}

// Upper estimate of log2 of the code, used to refuse before multiplying.
double estimated_bits(std::span<const Nat> xs) {
  double bits = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    double e = xs[i] > Nat(1) << 60 ? std::ldexp(1.0, static_cast<int>(msb(xs[i])) + 1)
                                    : static_cast<double>(xs[i]) + 1;
    bits += e * std::log2(static_cast<double>(nth_prime(i)));
  }
  return bits;
}

}  // namespace

std::uint64_t nth_prime(std::size_t i) {
  const auto& t = prime_table();
  if (i >= t.size()) throw OverflowError("sequence longer than " + std::to_string(t.size()) + " entries");
  return t[i];
}

Nat encode(std::span<const Nat> xs, std::size_t guard_bits) {
  for (const auto& x : xs)
    if (x < 0) throw Error("sequence entries must be natural numbers");
  if (estimated_bits(xs) > static_cast<double>(guard_bits) + 1)
    throw OverflowError("sequence code exceeds the " + std::to_string(guard_bits) + "-bit guard");
  Nat code = 1;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    Nat p = nth_prime(i);
    code *= boost::multiprecision::pow(p, static_cast<unsigned>(xs[i] + 1));
  }
  if (code != 1 && msb(code) + 1 > guard_bits)
    throw OverflowError("sequence code exceeds the " + std::to_string(guard_bits) + "-bit guard");
  return code;
}

Nat encode(std::initializer_list<std::uint64_t> xs, std::size_t guard_bits) {
  std::vector<Nat> v(xs.begin(), xs.end());
  return encode(v, guard_bits);
}

std::size_t strip_prime(Nat& w, std::uint64_t p) {
  if (w == 0) return 0;
  if (p == 2) {
    std::size_t e = lsb(w);
    w >>= e;
    return e;
  }
  // Divide by p, p^2, p^4, ... while possible, then walk the powers back down.
  std::vector<Nat> powers{Nat(p)};
  std::size_t e = 0;
  while (w % powers.back() == 0) {
    w /= powers.back();
    e += std::size_t{1} << (powers.size() - 1);
    powers.push_back(powers.back() * powers.back());
  }
  for (std::size_t k = powers.size() - 1; k-- > 0;) {
    if (w % powers[k] == 0) {
      w /= powers[k];
      e += std::size_t{1} << k;
    }
  }
  return e;
}

std::optional<std::vector<Nat>> decode(const Nat& w) {
  if (w < 1) return std::nullopt;
  Nat rest = w;
  std::vector<Nat> out;
  for (std::size_t i = 0; rest != 1; ++i) {
    if (i >= kPrimeTableSize) return std::nullopt;
    std::size_t e = strip_prime(rest, nth_prime(i));
    if (e == 0) return std::nullopt;
    out.emplace_back(e - 1);
  }
  return out;
}

std::optional<SeqNum> as_seq(const Nat& w) {
  auto xs = decode(w);
  if (!xs) return std::nullopt;
  return SeqNum(std::move(*xs));
}

bool is_seq(const Nat& w) { return decode(w).has_value(); }

std::size_t lh(const Nat& w) {
  auto xs = decode(w);
  if (!xs) throw Error(w.str() + " is not a sequence number");
  return xs->size();
}

Nat proj(const Nat& w, std::size_t j) {
  auto xs = decode(w);
  if (!xs) throw Error(w.str() + " is not a sequence number");
  if (j >= xs->size()) throw Error("projection index out of range");
  return (*xs)[j];
}

Nat SeqNum::value(std::size_t guard_bits) const { return encode(entries_, guard_bits); }

SeqNum SeqNum::extended(Nat n) const {
  auto xs = entries_;
  xs.push_back(std::move(n));
  return SeqNum(std::move(xs));
}

SeqNum SeqNum::prefix(std::size_t k) const {
  if (k > entries_.size()) throw Error("prefix longer than sequence");
  return SeqNum(std::vector<Nat>(entries_.begin(), entries_.begin() + static_cast<std::ptrdiff_t>(k)));
}

SeqNum concat(const SeqNum& u, const SeqNum& v) {
  auto xs = u.entries();
  xs.insert(xs.end(), v.entries().begin(), v.entries().end());
  return SeqNum(std::move(xs));
}

Nat concat(const Nat& u, const Nat& v, std::size_t guard_bits) {
  auto a = as_seq(u);
  auto b = as_seq(v);
  if (!a || !b) throw Error("concatenation of a non-sequence number");
  return concat(*a, *b).value(guard_bits);
}

}  // namespace fim
