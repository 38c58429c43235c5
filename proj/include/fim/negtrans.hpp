#pragma once

#include "fim/nat.hpp"
#include "fim/syntax.hpp"

namespace fim {

class ShapeError : public Error {
 public:
  using Error::Error;
};

/// Goedel-Gentzen negative translation. Every atom is doubly negated; or and
/// both existentials are eliminated. Bounded quantifiers keep their bound:
/// g(exists x < t. A) = ~(forall x < t. ~g(A)).
Formula neg_translate(const Formula& f);

/// No disjunction, no existential, every equation directly under ~~.
bool is_negative(const Formula& f);

/// Replaces ~~(s = t) by s = t everywhere.
Formula simplify_decidable_atoms(const Formula& f);

/// Input: the translation of a BI1 instance. Turns the translated bar
/// hypothesis forall a. ~(forall x. ~~~(r(barof(a,x)) = 0)) back into
/// forall a. exists x. r(barof(a,x)) = 0, and drops the ~~ on the r-atom in
/// the "holds at bars" clause; the rest is kept. Throws ShapeError otherwise.
Formula repair_bi_clause1(const Formula& f);

}  // namespace fim
