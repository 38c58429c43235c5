#include "fim/bar.hpp"

#include <algorithm>

namespace fim {

namespace {

void check_shape(std::size_t b, std::size_t d) {
  if (b == 0 || d == 0) throw Error("branching and depth must be at least 1");
}

// Depth-first search; returns false and fills `path` at the first open leaf
// of depth d.
bool explore(const RhoFn& rho, const SeqNum& w, std::size_t b, std::size_t d, std::size_t& deepest,
             std::vector<Nat>& path) {
  if (rho(w) == 0) {
    deepest = std::max(deepest, w.length());
    return true;
  }
  if (w.length() == d) {
    path = w.entries();
    return false;
  }
  for (std::size_t n = 0; n < b; ++n)
    if (!explore(rho, w.extended(Nat(n)), b, d, deepest, path)) return false;
  return true;
}

void collect_open(const RhoFn& rho, const SeqNum& w, std::size_t b, std::size_t d, std::vector<SeqNum>& out) {
  if (rho(w) == 0) return;
  out.push_back(w);
  if (w.length() == d) return;
  for (std::size_t n = 0; n < b; ++n) collect_open(rho, w.extended(Nat(n)), b, d, out);
}

Nat recurse(const RhoFn& rho, const BaseFn& base, const StepFn& step, const SeqNum& w, std::size_t b,
            std::size_t d) {
  if (rho(w) == 0) return base(w);
  if (w.length() == d) throw Error("tree is not barred within depth " + std::to_string(d));
  std::vector<Nat> kids;
  kids.reserve(b);
  for (std::size_t n = 0; n < b; ++n) kids.push_back(recurse(rho, base, step, w.extended(Nat(n)), b, d));
  return step(w, kids);
}

}  // namespace

BarVerdict bar_verify(const RhoFn& rho, std::size_t b, std::size_t d) {
  check_shape(b, d);
  BarVerdict v{BarVerdict::Kind::Barred, 0, {}};
  if (!explore(rho, SeqNum{}, b, d, v.depth, v.path)) {
    v.kind = BarVerdict::Kind::DepthExhausted;
    v.depth = d;
  }
  return v;
}

std::vector<SeqNum> open_nodes(const RhoFn& rho, std::size_t b, std::size_t d) {
  check_shape(b, d);
  std::vector<SeqNum> out;
  collect_open(rho, SeqNum{}, b, d, out);
  return out;
}

Nat bar_recurse(const RhoFn& rho, const BaseFn& base, const StepFn& step, std::size_t b, std::size_t d) {
  check_shape(b, d);
  return recurse(rho, base, step, SeqNum{}, b, d);
}

RhoFn uniform_bar(std::size_t d) {
  return [d](const SeqNum& s) { return s.length() >= d ? 0 : 1; };
}

}  // namespace fim
