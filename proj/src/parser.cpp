#include "fim/parser.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace fim {

namespace {

std::string format_message(ParseError::Kind kind, int line, int column, const std::string& found,
                           const std::set<std::string>& expected, const std::string& message) {
  std::ostringstream os;
  os << (kind == ParseError::Kind::Syntax ? "syntax error" : "sort error") << " at " << line << ":"
     << column;
  if (!found.empty()) os << " near '" << found << "'";
  if (!message.empty()) os << ": " << message;
  if (!expected.empty()) {
    os << " (expected one of:";
    for (const auto& e : expected) os << " " << e;
    os << ")";
  }
  return os.str();
}

}  // namespace

ParseError::ParseError(Kind kind, int line, int column, std::string found,
                       std::set<std::string> expected, const std::string& message)
    : Error(format_message(kind, line, column, found, expected, message)),
      kind_(kind),
      line_(line),
      column_(column),
      found_(std::move(found)),
      expected_(std::move(expected)) {}

namespace {

constexpr std::uint64_t kMaxLiteral = 100000;

enum class Tok { Ident, FnIdent, Number, Sym, End };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

bool is_keyword(const std::string& s) {
  return s == "forall" || s == "exists" || s == "lam" || s == "cat" || s == "barof";
}

std::vector<Token> tokenize(const std::string& src) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto ident_char = [](char c) {
    return std::islower(static_cast<unsigned char>(c)) || std::isdigit(static_cast<unsigned char>(c)) ||
           c == '_' || c == '\'';
  };
  while (i < src.size()) {
    char c = src[i];
    if (c == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++col;
      ++i;
      continue;
    }
    int start_col = col;
    std::size_t start = i;
    if (std::islower(static_cast<unsigned char>(c))) {
      while (i < src.size() && ident_char(src[i])) ++i;
      out.push_back({Tok::Ident, src.substr(start, i - start), line, start_col});
    } else if (c == '@') {
      ++i;
      if (i >= src.size() || !std::islower(static_cast<unsigned char>(src[i])))
        throw ParseError(ParseError::Kind::Syntax, line, start_col, "@", {"function variable name"},
                         "'@' must be followed by a lowercase name");
      while (i < src.size() && ident_char(src[i])) ++i;
      out.push_back({Tok::FnIdent, src.substr(start + 1, i - start - 1), line, start_col});
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) ++i;
      out.push_back({Tok::Number, src.substr(start, i - start), line, start_col});
    } else if (c == '-' && i + 1 < src.size() && src[i + 1] == '>') {
      i += 2;
      out.push_back({Tok::Sym, "->", line, start_col});
    } else if (std::string("()=&|~.,<+*^S").find(c) != std::string::npos) {
      ++i;
      out.push_back({Tok::Sym, std::string(1, c), line, start_col});
    } else {
      throw ParseError(ParseError::Kind::Syntax, line, start_col, std::string(1, c), {},
                       "unexpected character");
    }
    col += static_cast<int>(i - start);
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Formula whole_formula() {
    Formula f = formula();
    expect_end();
    return f;
  }

  Term whole_term() {
    Term t = term();
    expect_end();
    return t;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    std::size_t k = std::min(pos_ + ahead, toks_.size() - 1);
    return toks_[k];
  }
  bool at_sym(const char* s, std::size_t ahead = 0) const {
    const Token& t = peek(ahead);
    return t.kind == Tok::Sym && t.text == s;
  }
  bool at_ident(const char* s) const {
    const Token& t = peek();
    return t.kind == Tok::Ident && t.text == s;
  }

  [[noreturn]] void fail(std::set<std::string> expected, const std::string& msg = "") const {
    const Token& t = peek();
    throw ParseError(ParseError::Kind::Syntax, t.line, t.column,
                     t.kind == Tok::End ? "end of input" : t.text, std::move(expected), msg);
  }
  [[noreturn]] void sort_fail(const Token& t, const std::string& msg) const {
    throw ParseError(ParseError::Kind::Sort, t.line, t.column, t.text, {}, msg);
  }

  void expect_sym(const char* s) {
    if (!at_sym(s)) fail({std::string("'") + s + "'"});
    ++pos_;
  }
  void expect_end() {
    if (peek().kind != Tok::End) fail({"end of input"});
  }

  std::string number_var_name() {
    const Token& t = peek();
    if (t.kind == Tok::FnIdent) sort_fail(t, "expected a number variable, found function variable @" + t.text);
    if (t.kind != Tok::Ident || is_keyword(t.text)) fail({"number variable"});
    ++pos_;
    return t.text;
  }

  Formula formula() {
    if (at_ident("forall") || at_ident("exists")) return quant();
    Formula lhs = disjunction();
    if (at_sym("->")) {
      ++pos_;
      return imp(lhs, formula());
    }
    return lhs;
  }

  Formula disjunction() {
    Formula lhs = conjunction();
    if (at_sym("|")) {
      ++pos_;
      return disj(lhs, disjunction());
    }
    return lhs;
  }

  Formula conjunction() {
    Formula lhs = unary();
    if (at_sym("&")) {
      ++pos_;
      return conj(lhs, conjunction());
    }
    return lhs;
  }

  Formula quant() {
    auto kind = peek().text == "forall" ? ast::QKind::Forall : ast::QKind::Exists;
    ++pos_;
    const Token& v = peek();
    if (v.kind == Tok::FnIdent) {
      ++pos_;
      expect_sym(".");
      return quantifier(kind, {v.text, Sort::Function}, std::nullopt, formula());
    }
    if (v.kind != Tok::Ident || is_keyword(v.text)) fail({"number variable", "function variable"});
    ++pos_;
    std::optional<Term> bound;
    if (at_sym("<")) {
      ++pos_;
      bound = term();
    }
    if (!at_sym(".")) fail(bound ? std::set<std::string>{"'.'"} : std::set<std::string>{"'.'", "'<'"});
    ++pos_;
    return quantifier(kind, {v.text, Sort::Number}, std::move(bound), formula());
  }

  Formula unary() {
    if (at_sym("~")) {
      ++pos_;
      return neg(unary());
    }
    if (at_ident("forall") || at_ident("exists")) return quant();
    if (!at_sym("(")) return atom_formula();
    // '(' opens either a parenthesised formula or a term; try the atom first.
    std::size_t save = pos_;
    try {
      return atom_formula();
    } catch (const ParseError& as_atom) {
      std::size_t atom_reach = pos_;
      pos_ = save;
      try {
        ++pos_;
        Formula f = formula();
        expect_sym(")");
        return f;
      } catch (const ParseError& as_group) {
        if (pos_ >= atom_reach) throw;
        throw as_atom;
      }
    }
  }

  Formula atom_formula() {
    Term lhs = term();
    if (!at_sym("=")) fail({"'='", "'+'", "'*'", "'^'"});
    ++pos_;
    return eq(lhs, term());
  }

  Term term() {
    Term t = product();
    while (at_sym("+")) {
      ++pos_;
      t = add(t, product());
    }
    return t;
  }

  Term product() {
    Term t = power();
    while (at_sym("*")) {
      ++pos_;
      t = mul(t, power());
    }
    return t;
  }

  Term power() {
    Term base = term_atom();
    if (at_sym("^")) {
      ++pos_;
      return pow(base, power());
    }
    return base;
  }

  Functor functor() {
    const Token& t = peek();
    if (t.kind == Tok::FnIdent) {
      ++pos_;
      return fvar(t.text);
    }
    if (at_sym("(") && peek(1).kind == Tok::Ident && peek(1).text == "lam") {
      pos_ += 2;
      std::string x = number_var_name();
      expect_sym(".");
      Term body = term();
      expect_sym(")");
      return lam(x, body);
    }
    if (t.kind == Tok::Ident && !is_keyword(t.text))
      sort_fail(t, "number variable " + t.text + " used as a function");
    fail({"function variable", "'(lam'"});
  }

  Term term_atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Number: {
        ++pos_;
        if (t.text.size() > 6 || std::stoull(t.text) > kMaxLiteral)
          throw ParseError(ParseError::Kind::Syntax, t.line, t.column, t.text, {},
                           "numeric literal too large");
        return numeral(std::stoull(t.text));
      }
      case Tok::FnIdent: {
        Functor f = functor();
        if (!at_sym("("))
          sort_fail(t, "function variable @" + t.text + " used as a number term");
        ++pos_;
        Term arg = term();
        expect_sym(")");
        return apply(f, arg);
      }
      case Tok::Ident: {
        if (t.text == "cat") {
          ++pos_;
          expect_sym("(");
          Term a = term();
          expect_sym(",");
          Term b = term();
          expect_sym(")");
          return cat(a, b);
        }
        if (t.text == "barof") {
          ++pos_;
          expect_sym("(");
          Functor f = functor();
          expect_sym(",");
          Term n = term();
          expect_sym(")");
          return barof(f, n);
        }
        if (is_keyword(t.text)) fail({"term"});
        ++pos_;
        if (at_sym("(")) sort_fail(t, "number variable " + t.text + " applied as a function");
        return num(t.text);
      }
      case Tok::Sym: {
        if (t.text == "S") {
          ++pos_;
          expect_sym("(");
          Term a = term();
          expect_sym(")");
          return succ(a);
        }
        if (t.text == "(") {
          if (peek(1).kind == Tok::Ident && peek(1).text == "lam") {
            Functor f = functor();
            expect_sym("(");
            Term arg = term();
            expect_sym(")");
            return apply(f, arg);
          }
          ++pos_;
          Term inner = term();
          expect_sym(")");
          return inner;
        }
        break;
      }
      case Tok::End:
        break;
    }
    fail({"term"});
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

Formula parse_formula(const std::string& text) { return Parser(tokenize(text)).whole_formula(); }

Term parse_term(const std::string& text) { return Parser(tokenize(text)).whole_term(); }

}  // namespace fim
