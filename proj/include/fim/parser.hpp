#pragma once

#include <set>
#include <string>

#include "fim/nat.hpp"
#include "fim/syntax.hpp"

namespace fim {

/// Syntax or sort error with a 1-based source position.
class ParseError : public Error {
 public:
  enum class Kind { Syntax, Sort };

  ParseError(Kind kind, int line, int column, std::string found, std::set<std::string> expected,
             const std::string& message);

  Kind kind() const { return kind_; }
  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& found() const { return found_; }
  const std::set<std::string>& expected() const { return expected_; }

 private:
  Kind kind_;
  int line_;
  int column_;
  std::string found_;
  std::set<std::string> expected_;
};

/// Concrete grammar:
///
///   formula := quant | disj ['->' formula]
///   disj    := conj ['|' disj]
///   conj    := unary ['&' conj]
///   unary   := '~' unary | quant | '(' formula ')' | term '=' term
///   quant   := ('forall'|'exists') (var ['<' term] | '@'var) '.' formula
///   term    := product {'+' product}
///   product := power {'*' power}
///   power   := atom ['^' power]
///   atom    := digits | var | 'S(' term ')' | 'cat(' term ',' term ')'
///            | 'barof(' functor ',' term ')' | functor '(' term ')' | '(' term ')'
///   functor := '@'var | '(lam' var '.' term ')'
///
/// Number variables match [a-z][a-z0-9_']*, function variables carry a leading
/// '@'. Decimal literals abbreviate S(...S(0)...).
Formula parse_formula(const std::string& text);
Term parse_term(const std::string& text);

}  // namespace fim
