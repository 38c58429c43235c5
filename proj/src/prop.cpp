#include "fim/prop.hpp"

#include <algorithm>
#include <cctype>
#include <cstring>
#include <map>
#include <unordered_map>

namespace fim::prop {

Prop atom(int i) { return Prop(std::make_shared<const Prop::Node>(Prop::Node{Op::Atom, i, {}})); }
Prop bot() { return Prop(std::make_shared<const Prop::Node>(Prop::Node{Op::Bot, -1, {}})); }
Prop pnot(Prop a) { return Prop(std::make_shared<const Prop::Node>(Prop::Node{Op::Not, -1, {std::move(a)}})); }
Prop pand(Prop a, Prop b) {
  return Prop(std::make_shared<const Prop::Node>(Prop::Node{Op::And, -1, {std::move(a), std::move(b)}}));
}
Prop por(Prop a, Prop b) {
  return Prop(std::make_shared<const Prop::Node>(Prop::Node{Op::Or, -1, {std::move(a), std::move(b)}}));
}
Prop pimp(Prop a, Prop b) {
  return Prop(std::make_shared<const Prop::Node>(Prop::Node{Op::Imp, -1, {std::move(a), std::move(b)}}));
}

Prop binary(Op op, Prop a, Prop b) {
  switch (op) {
    case Op::And: return pand(std::move(a), std::move(b));
    case Op::Or: return por(std::move(a), std::move(b));
    case Op::Imp: return pimp(std::move(a), std::move(b));
    default: throw Error("not a binary connective");
  }
}

bool operator==(const Prop& a, const Prop& b) {
  if (a.node_ == b.node_) return true;
  if (a.op() != b.op() || a.atom() != b.atom() || a.node_->kids.size() != b.node_->kids.size()) return false;
  for (std::size_t i = 0; i < a.node_->kids.size(); ++i)
    if (!(a.node_->kids[i] == b.node_->kids[i])) return false;
  return true;
}

int atom_count(const Prop& f) {
  switch (f.op()) {
    case Op::Atom: return f.atom() + 1;
    case Op::Bot: return 0;
    case Op::Not: return atom_count(f.body());
    default: return std::max(atom_count(f.lhs()), atom_count(f.rhs()));
  }
}

std::size_t connectives(const Prop& f) {
  switch (f.op()) {
    case Op::Atom:
    case Op::Bot: return 0;
    case Op::Not: return 1 + connectives(f.body());
    default: return 1 + connectives(f.lhs()) + connectives(f.rhs());
  }
}

// ---------------------------------------------------------------- printing

namespace {

constexpr const char* kLetters = "PQRSTU";

int prec(Op op) {
  switch (op) {
    case Op::Imp: return 1;
    case Op::Or: return 2;
    case Op::And: return 3;
    default: return 4;
  }
}

void print(const Prop& f, int min_prec, std::string& out) {
  bool wrap = prec(f.op()) < min_prec;
  if (wrap) out += '(';
  switch (f.op()) {
    case Op::Atom:
      if (f.atom() < 6)
        out += kLetters[f.atom()];
      else
        out += "P" + std::to_string(f.atom());
      break;
    case Op::Bot:
      out += "false";
      break;
    case Op::Not:
      out += '~';
      print(f.body(), 4, out);
      break;
    default: {
      int p = prec(f.op());
      print(f.lhs(), p + 1, out);
      out += f.op() == Op::And ? " & " : f.op() == Op::Or ? " | " : " -> ";
      print(f.rhs(), p, out);
    }
  }
  if (wrap) out += ')';
}

class PropParser {
 public:
  explicit PropParser(const std::string& s) : s_(s) {}

  Prop run() {
    auto f = implication();
    skip();
    if (pos_ != s_.size()) fail("unexpected input");
    return f;
  }

 private:
  const std::string& s_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) {
    throw Error("propositional syntax error at column " + std::to_string(pos_ + 1) + ": " + what);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(const std::string& tok) {
    skip();
    if (s_.compare(pos_, tok.size(), tok) != 0) return false;
    pos_ += tok.size();
    return true;
  }
  Prop implication() {
    auto l = disjunction();
    if (eat("->")) return pimp(l, implication());
    return l;
  }
  Prop disjunction() {
    auto l = conjunction();
    if (eat("|")) return por(l, disjunction());
    return l;
  }
  Prop conjunction() {
    auto l = unary();
    if (eat("&")) return pand(l, conjunction());
    return l;
  }
  Prop unary() {
    if (eat("~")) return pnot(unary());
    if (eat("(")) {
      auto f = implication();
      if (!eat(")")) fail("expected ')'");
      return f;
    }
    if (eat("false")) return bot();
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    // lowercase letters name the same atoms
    char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(s_[pos_])));
    const char* hit = std::strchr(kLetters, letter);
    if (!hit || letter == '\0') fail("expected an atom");
    ++pos_;
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start != pos_) {
      if (letter != 'P') fail("only P takes an index");
      return atom(std::stoi(s_.substr(start, pos_ - start)));
    }
    return atom(static_cast<int>(hit - kLetters));
  }
};

}  // namespace

std::string to_string(const Prop& f) {
  std::string out;
  print(f, 0, out);
  return out;
}

Prop parse_prop(const std::string& text) { return PropParser(text).run(); }

// ---------------------------------------------------------- classical logic

namespace {

// Bit v of the result: value under valuation v, for all 2^atoms valuations at once.
std::uint64_t table(const Prop& f, const std::vector<std::uint64_t>& columns, std::uint64_t all) {
  switch (f.op()) {
    case Op::Atom: return columns[static_cast<std::size_t>(f.atom())];
    case Op::Bot: return 0;
    case Op::Not: return ~table(f.body(), columns, all) & all;
    case Op::And: return table(f.lhs(), columns, all) & table(f.rhs(), columns, all);
    case Op::Or: return table(f.lhs(), columns, all) | table(f.rhs(), columns, all);
    case Op::Imp: return (~table(f.lhs(), columns, all) | table(f.rhs(), columns, all)) & all;
  }
  return 0;
}

bool eval(const Prop& f, std::uint32_t v) {
  switch (f.op()) {
    case Op::Atom: return (v >> f.atom()) & 1u;
    case Op::Bot: return false;
    case Op::Not: return !eval(f.body(), v);
    case Op::And: return eval(f.lhs(), v) && eval(f.rhs(), v);
    case Op::Or: return eval(f.lhs(), v) || eval(f.rhs(), v);
    case Op::Imp: return !eval(f.lhs(), v) || eval(f.rhs(), v);
  }
  return false;
}

}  // namespace

std::uint64_t truth_table(const Prop& f, int atoms) {
  if (atoms > 6 || atom_count(f) > atoms) throw BudgetError("truth_table supports at most 6 atoms");
  std::uint64_t rows = std::uint64_t{1} << atoms;
  std::uint64_t all = rows == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << rows) - 1;
  std::vector<std::uint64_t> columns(static_cast<std::size_t>(atoms), 0);
  for (std::uint64_t v = 0; v < rows; ++v)
    for (int i = 0; i < atoms; ++i)
      if ((v >> i) & 1u) columns[static_cast<std::size_t>(i)] |= std::uint64_t{1} << v;
  return table(f, columns, all);
}

bool classical_valid(const Prop& f) {
  int n = atom_count(f);
  if (n > 20) throw BudgetError("classical_valid supports at most 20 atoms");
  if (n <= 6) {
    std::uint64_t rows = std::uint64_t{1} << n;
    std::uint64_t all = rows == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << rows) - 1;
    return truth_table(f, n) == all;
  }
  for (std::uint32_t v = 0; v < (1u << n); ++v)
    if (!eval(f, v)) return false;
  return true;
}

// -------------------------------------------------------------------- G4ip

namespace {

class G4ip {
 public:
  explicit G4ip(const IpcLimits& limits) : limits_(limits) { intern(Op::Bot, -1, -1, -1); }

  int lower(const Prop& f) {
    switch (f.op()) {
      case Op::Atom: return intern(Op::Atom, f.atom(), -1, -1);
      case Op::Bot: return kBot;
      case Op::Not: return intern(Op::Imp, -1, lower(f.body()), kBot);
      default: return intern(f.op(), -1, lower(f.lhs()), lower(f.rhs()));
    }
  }

  bool prove(std::vector<int> gamma, int goal) {
    std::sort(gamma.begin(), gamma.end());
    gamma.erase(std::unique(gamma.begin(), gamma.end()), gamma.end());
    Key key{gamma, goal};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    if (++steps_ > limits_.max_steps) throw BudgetError("ipc proof search exceeded its step budget");
    bool r = search(gamma, goal);
    memo_.emplace(std::move(key), r);
    return r;
  }

 private:
  static constexpr int kBot = 0;

  struct N {
    Op op;
    int atom, a, b;
  };
  using Key = std::pair<std::vector<int>, int>;

  IpcLimits limits_;
  std::vector<N> nodes_;
  std::map<std::tuple<int, int, int, int>, int> interned_;
  std::map<Key, bool> memo_;
  std::uint64_t steps_ = 0;

  int intern(Op op, int atom, int a, int b) {
    auto key = std::make_tuple(static_cast<int>(op), atom, a, b);
    if (auto it = interned_.find(key); it != interned_.end()) return it->second;
    int id = static_cast<int>(nodes_.size());
    nodes_.push_back({op, atom, a, b});
    interned_.emplace(key, id);
    return id;
  }
  int imp(int a, int b) { return intern(Op::Imp, -1, a, b); }
  const N& at(int id) const { return nodes_[static_cast<std::size_t>(id)]; }

  static bool has(const std::vector<int>& g, int x) { return std::binary_search(g.begin(), g.end(), x); }

  static std::vector<int> without(const std::vector<int>& g, std::size_t i, std::initializer_list<int> add) {
    std::vector<int> out;
    out.reserve(g.size() + add.size());
    for (std::size_t j = 0; j < g.size(); ++j)
      if (j != i) out.push_back(g[j]);
    out.insert(out.end(), add.begin(), add.end());
    return out;
  }

  bool search(const std::vector<int>& gamma, int goal) {
    if (has(gamma, kBot) || has(gamma, goal)) return true;

    // Invertible left rules.
    for (std::size_t i = 0; i < gamma.size(); ++i) {
      const N h = at(gamma[i]);
      if (h.op == Op::And) return prove(without(gamma, i, {h.a, h.b}), goal);
      if (h.op == Op::Or) return prove(without(gamma, i, {h.a}), goal) && prove(without(gamma, i, {h.b}), goal);
      if (h.op != Op::Imp) continue;
      const N ante = at(h.a);
      if (ante.op == Op::Bot) return prove(without(gamma, i, {}), goal);
      if (ante.op == Op::Atom && has(gamma, h.a)) return prove(without(gamma, i, {h.b}), goal);
      if (ante.op == Op::And) return prove(without(gamma, i, {imp(ante.a, imp(ante.b, h.b))}), goal);
      if (ante.op == Op::Or) return prove(without(gamma, i, {imp(ante.a, h.b), imp(ante.b, h.b)}), goal);
    }

    // Invertible right rules.
    const N g = at(goal);
    if (g.op == Op::And) return prove(gamma, g.a) && prove(gamma, g.b);
    if (g.op == Op::Imp) {
      auto with = gamma;
      with.push_back(g.a);
      return prove(std::move(with), g.b);
    }

    // Choices.
    if (g.op == Op::Or && (prove(gamma, g.a) || prove(gamma, g.b))) return true;
    for (std::size_t i = 0; i < gamma.size(); ++i) {
      const N h = at(gamma[i]);
      if (h.op != Op::Imp) continue;
      const N ante = at(h.a);
      if (ante.op != Op::Imp) continue;
      // (C -> D) -> B  :  Gamma, D -> B => C -> D   and   Gamma, B => goal
      if (prove(without(gamma, i, {imp(ante.b, h.b)}), h.a) && prove(without(gamma, i, {h.b}), goal)) return true;
    }
    return false;
  }
};

}  // namespace

bool ipc_provable(const Prop& f, const IpcLimits& limits) {
  if (atom_count(f) > limits.max_atoms) throw BudgetError("ipc_provable: too many atoms");
  G4ip g(limits);
  int goal = g.lower(f);
  return g.prove({}, goal);
}

// ------------------------------------------------------------------ Kripke

std::uint32_t forcing(const KripkeModel& m, const Prop& f) {
  std::uint32_t all = (1u << m.worlds) - 1;
  switch (f.op()) {
    case Op::Atom: {
      std::uint32_t s = 0;
      for (int w = 0; w < m.worlds; ++w)
        if ((m.val[static_cast<std::size_t>(w)] >> f.atom()) & 1u) s |= 1u << w;
      return s;
    }
    case Op::Bot: return 0;
    case Op::And: return forcing(m, f.lhs()) & forcing(m, f.rhs());
    case Op::Or: return forcing(m, f.lhs()) | forcing(m, f.rhs());
    case Op::Not:
    case Op::Imp: {
      std::uint32_t a = forcing(m, f.op() == Op::Not ? f.body() : f.lhs());
      std::uint32_t b = f.op() == Op::Not ? 0 : forcing(m, f.rhs());
      std::uint32_t s = 0;
      for (int w = 0; w < m.worlds; ++w)
        if ((m.up[static_cast<std::size_t>(w)] & a & ~b & all) == 0) s |= 1u << w;
      return s;
    }
  }
  return 0;
}

namespace {

// Partial orders on n worlds with world 0 below every world, as up-set masks.
std::vector<std::vector<std::uint32_t>> rooted_orders(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j)
      if (i != j) pairs.emplace_back(i, j);
  std::vector<std::vector<std::uint32_t>> out;
  for (std::uint32_t pick = 0; pick < (1u << pairs.size()); ++pick) {
    std::vector<std::uint32_t> up(static_cast<std::size_t>(n));
    for (int w = 0; w < n; ++w) up[static_cast<std::size_t>(w)] = 1u << w;
    up[0] = (1u << n) - 1;
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if ((pick >> k) & 1u) up[static_cast<std::size_t>(pairs[k].first)] |= 1u << pairs[k].second;
    bool ok = true;
    for (int i = 1; i < n && ok; ++i)
      for (int j = 1; j < n && ok; ++j) {
        if (i == j) continue;
        bool ij = (up[static_cast<std::size_t>(i)] >> j) & 1u;
        bool ji = (up[static_cast<std::size_t>(j)] >> i) & 1u;
        if (ij && ji) ok = false;  // antisymmetry
        if (ij && (up[static_cast<std::size_t>(j)] & ~up[static_cast<std::size_t>(i)])) ok = false;  // transitivity
      }
    if (ok) out.push_back(std::move(up));
  }
  return out;
}

}  // namespace

std::optional<KripkeModel> kripke_countermodel(const Prop& f, int max_worlds) {
  if (max_worlds < 1 || max_worlds > 5) throw BudgetError("kripke_countermodel supports 1..5 worlds");
  int k = atom_count(f);
  if (k > 8) throw BudgetError("kripke_countermodel supports at most 8 atoms");
  for (int n = 1; n <= max_worlds; ++n) {
    for (const auto& up : rooted_orders(n)) {
      std::vector<std::uint32_t> upsets;
      for (std::uint32_t s = 0; s < (1u << n); ++s) {
        bool closed = true;
        for (int w = 0; w < n && closed; ++w)
          if (((s >> w) & 1u) && (up[static_cast<std::size_t>(w)] & ~s)) closed = false;
        if (closed) upsets.push_back(s);
      }
      std::vector<std::size_t> choice(static_cast<std::size_t>(k), 0);
      while (true) {
        KripkeModel m{n, up, std::vector<std::uint32_t>(static_cast<std::size_t>(n), 0)};
        for (int a = 0; a < k; ++a)
          for (int w = 0; w < n; ++w)
            if ((upsets[choice[static_cast<std::size_t>(a)]] >> w) & 1u) m.val[static_cast<std::size_t>(w)] |= 1u << a;
        if (!(forcing(m, f) & 1u)) return m;
        std::size_t i = 0;
        while (i < choice.size() && ++choice[i] == upsets.size()) choice[i++] = 0;
        if (i == choice.size()) break;
      }
    }
  }
  return std::nullopt;
}

std::vector<Prop> formulas_of_size(int atoms, int n) {
  std::vector<std::vector<Prop>> by_size(static_cast<std::size_t>(n) + 1);
  for (int a = 0; a < atoms; ++a) by_size[0].push_back(atom(a));
  for (int s = 1; s <= n; ++s) {
    auto& out = by_size[static_cast<std::size_t>(s)];
    for (const auto& f : by_size[static_cast<std::size_t>(s - 1)]) out.push_back(pnot(f));
    for (int i = 0; i <= s - 1; ++i)
      for (const auto& l : by_size[static_cast<std::size_t>(i)])
        for (const auto& r : by_size[static_cast<std::size_t>(s - 1 - i)])
          for (Op op : {Op::And, Op::Or, Op::Imp}) out.push_back(binary(op, l, r));
  }
  return by_size[static_cast<std::size_t>(n)];
}

// --------------------------------------------------------------- bridging

Formula to_formula(const Prop& f) {
  switch (f.op()) {
    case Op::Atom: return eq(num("p" + std::to_string(f.atom())), zero());
    case Op::Bot: return eq(zero(), succ(zero()));
    case Op::Not: return neg(to_formula(f.body()));
    case Op::And: return conj(to_formula(f.lhs()), to_formula(f.rhs()));
    case Op::Or: return disj(to_formula(f.lhs()), to_formula(f.rhs()));
    case Op::Imp: return imp(to_formula(f.lhs()), to_formula(f.rhs()));
  }
  throw Error("bad propositional node");
}

Prop from_formula(const Formula& f, std::vector<Formula>& atoms) {
  return std::visit(overloaded{
                        [&](const ast::Eq&) {
                          auto it = std::find(atoms.begin(), atoms.end(), f);
                          if (it == atoms.end()) {
                            atoms.push_back(f);
                            return atom(static_cast<int>(atoms.size() - 1));
                          }
                          return atom(static_cast<int>(it - atoms.begin()));
                        },
                        [&](const ast::Not& n) { return pnot(from_formula(n.body, atoms)); },
                        [&](const ast::Binary& b) {
                          auto l = from_formula(b.lhs, atoms);
                          auto r = from_formula(b.rhs, atoms);
                          switch (b.op) {
                            case ast::BinOp::And: return pand(l, r);
                            case ast::BinOp::Or: return por(l, r);
                            default: return pimp(l, r);
                          }
                        },
                        [](const ast::Quantifier&) -> Prop {
                          throw Error("quantified formula has no propositional shadow");
                        },
                    },
                    f.node().v);
}

}  // namespace fim::prop
