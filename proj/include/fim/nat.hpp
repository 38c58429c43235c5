#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace fim {

/// Arbitrary-precision natural number. Sequence codes outgrow 64 bits after a
/// handful of entries, so everything that can hold a code uses this type.
using Nat = boost::multiprecision::cpp_int;

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::string to_string(const Nat& n) { return n.str(); }

inline Nat parse_nat(const std::string& text) {
  if (text.empty()) throw Error("expected a natural number, got empty text");
  for (char c : text)
    if (c < '0' || c > '9') throw Error("expected a natural number, got '" + text + "'");
  return Nat(text);
}

/// Narrowing conversion for values used as indices or counts.
inline std::uint64_t to_u64(const Nat& n) {
  if (n < 0 || n > Nat(UINT64_MAX)) throw Error("value " + n.str() + " does not fit in 64 bits");
  return static_cast<std::uint64_t>(n);
}

}  // namespace fim
