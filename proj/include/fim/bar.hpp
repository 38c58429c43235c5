#pragma once

// Bars on the finitely branching truncation of Baire space: exhaustive
// verification and bottom-up bar recursion.

#include <functional>
#include <vector>

#include "fim/seqcode.hpp"

namespace fim {

using RhoFn = std::function<int(const SeqNum&)>;

struct BarVerdict {
  enum class Kind { Barred, DepthExhausted };
  Kind kind;
  std::size_t depth = 0;   // Barred: deepest node where the bar was hit
  std::vector<Nat> path;   // DepthExhausted: a path of length d never hit
};

/// Explores every sequence with entries < b and length <= d, children in
/// index order. A node w is a leaf once rho(w) = 0.
BarVerdict bar_verify(const RhoFn& rho, std::size_t b, std::size_t d);

/// Every node of the truncated tree that rho leaves open (rho = 1), in
/// depth-first order; used to show a single surviving path.
std::vector<SeqNum> open_nodes(const RhoFn& rho, std::size_t b, std::size_t d);

using BaseFn = std::function<Nat(const SeqNum&)>;
using StepFn = std::function<Nat(const SeqNum&, const std::vector<Nat>&)>;

/// base at barred nodes, step over the b children elsewhere; the value at
/// the root. Throws Error when the tree is not barred within d.
Nat bar_recurse(const RhoFn& rho, const BaseFn& base, const StepFn& step, std::size_t b, std::size_t d);

/// rho(s) = 0 iff lh(s) >= d.
RhoFn uniform_bar(std::size_t d);

}  // namespace fim
