#pragma once

// The jump of alpha as the unique unbarred path of a primitive recursive
// bar: rho, the correctness predicate on finite sequences, and beta.
//
// Slot 2k of a sequence guesses alpha(k); slot 2k+1 guesses whether program
// k halts on input k (0 for "no", y+1 for "yes, with trace y").

#include "fim/baire.hpp"
#include "fim/machine.hpp"

namespace fim {

struct JumpContext {
  const Registry& registry;
  BaireElement alpha;
};

/// rho(s) in {0, 1}, cases evaluated in order. Case 3 searches y <= lh(s);
/// case 4 relies on runs having a single trace, so "m is not the least y"
/// is "not T(k, k, m)".
int rho(const Nat& s, const JumpContext& ctx);
int rho_seq(const SeqNum& s, const JumpContext& ctx);

/// "not A(s)": s is a sequence number and every slot is correct. Throws
/// MachineError when h lacks a needed index.
bool not_a(const Nat& s, const BaireElement& alpha, const HaltingInfo& h);
bool not_a_seq(const SeqNum& s, const BaireElement& alpha, const HaltingInfo& h);

/// The correct prefix of length 2 * upto.
BaireElement build_beta(const BaireElement& alpha, const HaltingInfo& h, std::size_t upto);

}  // namespace fim
