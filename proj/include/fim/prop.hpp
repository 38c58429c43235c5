#pragma once

// Propositional shadow of the language: opaque atoms P0, P1, ... and the
// connectives ~ & | ->, plus falsum for internal use.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fim/nat.hpp"
#include "fim/syntax.hpp"

namespace fim::prop {

enum class Op { Atom, Bot, Not, And, Or, Imp };

class Prop {
 public:
  Op op() const { return node_->op; }
  int atom() const { return node_->atom; }
  const Prop& lhs() const { return node_->kids[0]; }
  const Prop& rhs() const { return node_->kids[1]; }
  const Prop& body() const { return node_->kids[0]; }

  friend bool operator==(const Prop& a, const Prop& b);

 private:
  struct Node {
    Op op;
    int atom = -1;
    std::vector<Prop> kids;
  };
  explicit Prop(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;

  friend Prop atom(int i);
  friend Prop bot();
  friend Prop pnot(Prop a);
  friend Prop pand(Prop a, Prop b);
  friend Prop por(Prop a, Prop b);
  friend Prop pimp(Prop a, Prop b);
};

Prop atom(int i);
Prop bot();
Prop pnot(Prop a);
Prop pand(Prop a, Prop b);
Prop por(Prop a, Prop b);
Prop pimp(Prop a, Prop b);
Prop binary(Op op, Prop a, Prop b);

class BudgetError : public Error {
 public:
  using Error::Error;
};

/// 1 + highest atom index (0 for atom-free formulas).
int atom_count(const Prop& f);
std::size_t connectives(const Prop& f);

/// Atoms print as P, Q, R, S, T, U and then P6, P7, ...
std::string to_string(const Prop& f);
/// Same grammar as formulas, with atoms in place of equations: letters
/// P Q R S T U, or Pk for any k; also "false".
Prop parse_prop(const std::string& text);

/// Bit v is the value under valuation v (bit i of v = value of atom i).
/// Requires atom_count(f) <= 6.
std::uint64_t truth_table(const Prop& f, int atoms);

/// Truth-table validity; throws BudgetError beyond 20 atoms.
bool classical_valid(const Prop& f);

struct IpcLimits {
  int max_atoms = 12;
  std::uint64_t max_steps = 5'000'000;
};

/// Decides intuitionistic provability by proof search in the contraction-free
/// calculus G4ip. Throws BudgetError when a limit is hit.
bool ipc_provable(const Prop& f, const IpcLimits& limits = {});

/// A finite rooted Kripke model; world 0 is the root.
struct KripkeModel {
  int worlds = 0;
  std::vector<std::uint32_t> up;   // up[w]: bitmask of worlds v with w <= v
  std::vector<std::uint32_t> val;  // val[w]: bitmask of atoms true at w
};

/// Bitmask of worlds forcing f.
std::uint32_t forcing(const KripkeModel& m, const Prop& f);

/// A model with at most `max_worlds` worlds whose root does not force f.
std::optional<KripkeModel> kripke_countermodel(const Prop& f, int max_worlds = 3);

/// All formulas over atoms 0..atoms-1 with exactly `n` connectives (~ & | ->).
std::vector<Prop> formulas_of_size(int atoms, int n);

/// Atom i becomes the equation p<i> = 0.
Formula to_formula(const Prop& f);
/// Maps each distinct equation to an atom, looking it up in (and extending)
/// `atoms`; throws Error on quantifiers.
Prop from_formula(const Formula& f, std::vector<Formula>& atoms);

}  // namespace fim::prop
