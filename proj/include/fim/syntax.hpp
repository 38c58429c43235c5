#pragma once

// Abstract syntax of the two-sorted language of analysis: number terms,
// type-1 functors and formulas. Nodes are immutable and shared; every value
// type below is a cheap handle.

#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace fim {

enum class Sort { Number, Function };

struct Var {
  std::string name;
  Sort sort = Sort::Number;

  friend bool operator==(const Var&, const Var&) = default;
  friend auto operator<=>(const Var&, const Var&) = default;
};

struct TermNode;
struct FunctorNode;
struct FormulaNode;

class Term {
 public:
  explicit Term(std::shared_ptr<const TermNode> node) : node_(std::move(node)) {}

  const TermNode& node() const { return *node_; }
  template <class T> const T* as() const;
  template <class T> bool is() const { return as<T>() != nullptr; }

  friend bool operator==(const Term& a, const Term& b);

 private:
  std::shared_ptr<const TermNode> node_;
};

class Functor {
 public:
  explicit Functor(std::shared_ptr<const FunctorNode> node) : node_(std::move(node)) {}

  const FunctorNode& node() const { return *node_; }
  template <class T> const T* as() const;
  template <class T> bool is() const { return as<T>() != nullptr; }

  friend bool operator==(const Functor& a, const Functor& b);

 private:
  std::shared_ptr<const FunctorNode> node_;
};

class Formula {
 public:
  explicit Formula(std::shared_ptr<const FormulaNode> node) : node_(std::move(node)) {}

  const FormulaNode& node() const { return *node_; }
  template <class T> const T* as() const;
  template <class T> bool is() const { return as<T>() != nullptr; }

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  std::shared_ptr<const FormulaNode> node_;
};

namespace ast {

// Terms (type 0).
struct Zero {};
struct Succ { Term arg; };
struct NumVar { std::string name; };
struct Add { Term lhs, rhs; };
struct Mul { Term lhs, rhs; };
/// Exponentiation; used for the 2^x * 3^y pairing and the one-step extension 2^(n+1).
struct Pow { Term base, exponent; };
/// Concatenation of sequence numbers (w * v in the usual notation).
struct Cat { Term lhs, rhs; };
struct Apply { Functor fn; Term arg; };
/// Code of the first `length` values of `fn`. Opaque to the kernel.
struct BarOf { Functor fn; Term length; };

// Functors (type 1).
struct FnVar { std::string name; };
struct Lambda { std::string var; Term body; };

// Formulas.
enum class BinOp { And, Or, Imp };
enum class QKind { Forall, Exists };

struct Eq { Term lhs, rhs; };
struct Not { Formula body; };
struct Binary { BinOp op; Formula lhs, rhs; };
/// Quantifier over either sort. `bound` is set only for the bounded numerical
/// forms `forall x < t` / `exists x < t`.
struct Quantifier {
  QKind kind;
  Var var;
  std::optional<Term> bound;
  Formula body;
};

}  // namespace ast

struct TermNode {
  std::variant<ast::Zero, ast::Succ, ast::NumVar, ast::Add, ast::Mul, ast::Pow, ast::Cat,
               ast::Apply, ast::BarOf>
      v;
};

struct FunctorNode {
  std::variant<ast::FnVar, ast::Lambda> v;
};

struct FormulaNode {
  std::variant<ast::Eq, ast::Not, ast::Binary, ast::Quantifier> v;
};

template <class T> const T* Term::as() const { return std::get_if<T>(&node_->v); }
template <class T> const T* Functor::as() const { return std::get_if<T>(&node_->v); }
template <class T> const T* Formula::as() const { return std::get_if<T>(&node_->v); }

inline bool operator!=(const Term& a, const Term& b) { return !(a == b); }
inline bool operator!=(const Functor& a, const Functor& b) { return !(a == b); }
inline bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }

template <class... Ts> struct overloaded : Ts... { using Ts::operator()...; };
template <class... Ts> overloaded(Ts...) -> overloaded<Ts...>;

// ---- builders -------------------------------------------------------------

Term zero();
Term succ(Term t);
Term numeral(std::uint64_t n);
Term num(std::string name);
Term add(Term a, Term b);
Term mul(Term a, Term b);
Term pow(Term base, Term exponent);
Term cat(Term a, Term b);
Term apply(Functor f, Term t);
Term barof(Functor f, Term length);

Functor fvar(std::string name);
Functor lam(std::string var, Term body);

Formula eq(Term a, Term b);
Formula neg(Formula f);
Formula conj(Formula a, Formula b);
Formula disj(Formula a, Formula b);
Formula imp(Formula a, Formula b);
Formula forall_n(std::string x, Formula body);
Formula exists_n(std::string x, Formula body);
Formula forall_f(std::string a, Formula body);
Formula exists_f(std::string a, Formula body);
Formula bforall(std::string x, Term bound, Formula body);
Formula bexists(std::string x, Term bound, Formula body);
Formula quantifier(ast::QKind kind, Var var, std::optional<Term> bound, Formula body);
Formula binary(ast::BinOp op, Formula a, Formula b);

/// Right-nested conjunction A1 & (A2 & (... & An)); requires at least one conjunct.
Formula conj_all(const std::vector<Formula>& parts);

/// If t is S(...S(0)...), its value.
std::optional<std::uint64_t> as_numeral(const Term& t);

/// Number of connective and quantifier nodes (atoms count zero).
std::size_t connective_count(const Formula& f);
std::size_t depth(const Formula& f);

}  // namespace fim
