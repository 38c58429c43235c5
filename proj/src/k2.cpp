#include "fim/k2.hpp"

#include "fim/subst.hpp"

namespace fim {

// ------------------------------------------------------------ application

std::optional<K2Answer> k2_apply_traced(const BaireElement& alpha, const BaireElement& beta, const Nat& n,
                                        std::uint64_t fuel) {
  std::vector<Nat> entries{n};
  for (std::uint64_t k = 0; k <= fuel; ++k) {
    if (k > 0) {
      auto b = beta.eval(k - 1);
      if (!b) return std::nullopt;
      entries.push_back(*b);
    }
    auto v = alpha.eval_seq(SeqNum(entries));
    if (!v) return std::nullopt;
    if (*v > 0) return K2Answer{*v - 1, static_cast<std::size_t>(k)};
  }
  return std::nullopt;
}

std::optional<Nat> k2_apply(const BaireElement& alpha, const BaireElement& beta, const Nat& n, std::uint64_t fuel) {
  auto a = k2_apply_traced(alpha, beta, n, fuel);
  if (!a) return std::nullopt;
  return a->value;
}

BaireElement k2_compose(const BaireElement& alpha, const BaireElement& beta, std::uint64_t fuel) {
  return BaireElement::program(
      alpha.describe() + "|" + beta.describe(),
      [alpha, beta](const Nat& n, std::uint64_t f) { return k2_apply(alpha, beta, n, f); }, fuel);
}

BaireElement pair_of(const BaireElement& a, const BaireElement& b) {
  return BaireElement::program(
      "pair(" + a.describe() + "," + b.describe() + ")",
      [a, b](const Nat& n, std::uint64_t) -> std::optional<Nat> {
        if (n == 0) return Nat(0);
        Nat rest = n;
        auto i = strip_prime(rest, 2);
        auto y = strip_prime(rest, 3);
        if (rest != 1 || i > 1) return Nat(0);
        return (i == 0 ? a : b).eval(Nat(y));
      },
      1);
}

BaireElement component(const BaireElement& e, int i) {
  if (i != 0 && i != 1) throw Error("pair component index must be 0 or 1");
  return BaireElement::program(
      "(" + e.describe() + ")_" + std::to_string(i),
      [e, i](const Nat& y, std::uint64_t) -> std::optional<Nat> {
        if (y > 4096) throw OverflowError("pair component index too large");
        Nat code = boost::multiprecision::pow(Nat(3), static_cast<unsigned>(y)) * (i == 0 ? 1 : 2);
        return e.eval(code);
      },
      1);
}

BaireElement cons(const Nat& head, const BaireElement& tail) {
  return BaireElement::program(
      "cons(" + head.str() + "," + tail.describe() + ")",
      [head, tail](const Nat& n, std::uint64_t) -> std::optional<Nat> {
        if (n == 0) return head;
        return tail.eval(n - 1);
      },
      1);
}

BaireElement tail_of(const BaireElement& e) {
  return BaireElement::program(
      "tail(" + e.describe() + ")", [e](const Nat& n, std::uint64_t) { return e.eval(n + 1); }, 1);
}

namespace {

// An element whose application to anything is sigma: e(<n> * ...) = sigma(n) + 1.
BaireElement constant_application(const BaireElement& sigma) {
  return BaireElement::seq_program(
      "K(" + sigma.describe() + ")",
      [sigma](const SeqNum& s, std::uint64_t) -> std::optional<Nat> {
        if (s.empty()) return Nat(0);
        auto v = sigma.eval(s[0]);
        if (!v) return std::nullopt;
        return *v + 1;
      },
      1);
}

}  // namespace

// ------------------------------------------------------------- realizers

BaireElement mp_realizer() {
  // Input <a> * bar(alpha, k). Without a zero in the prefix: read more.
  // With least zero z: a = <m> * ..., answer z for m = 0 and 0 otherwise, so
  // that (e|alpha)|sigma has head z for every sigma.
  return BaireElement::seq_program(
      "mp",
      [](const SeqNum& s, std::uint64_t) -> std::optional<Nat> {
        if (s.empty()) return Nat(1);
        std::optional<std::size_t> z;
        for (std::size_t i = 1; i < s.length(); ++i)
          if (s[i] == 0) {
            z = i - 1;
            break;
          }
        if (!z) return Nat(0);
        auto a = decode(s[0]);
        if (!a || a->empty()) return Nat(1);
        return (a->front() == 0 ? Nat(*z) + 1 : Nat(1)) + 1;
      },
      1);
}

BaireElement dns1_realizer() { return BaireElement::constant(1); }

// -------------------------------------------------------------- transform

namespace {

class Transformer {
 public:
  Transformer(const Formula& f, const std::string& eps) {
    auto fv = free_vars(f);
    if (fv.functions.count(eps)) throw Error("realizer variable @" + eps + " is free in the formula");
    used_ = fv.numbers;
    used_.insert(fv.functions.begin(), fv.functions.end());
    used_.insert(eps);
    collect_bound(f);
  }

  Formula run(const Functor& e, const Formula& f) {
    return std::visit(
        overloaded{
            [&](const ast::Eq&) { return f; },
            [&](const ast::Not& n) { return run(e, imp(n.body, eq(zero(), succ(zero())))); },
            [&](const ast::Binary& b) -> Formula {
              switch (b.op) {
                case ast::BinOp::And:
                  return conj(run(comp(e, 0), b.lhs), run(comp(e, 1), b.rhs));
                case ast::BinOp::Or: {
                  auto head_zero = eq(apply(e, zero()), zero());
                  auto t = tail(e);
                  return conj(imp(head_zero, run(t, b.lhs)), imp(neg(head_zero), run(t, b.rhs)));
                }
                case ast::BinOp::Imp: {
                  auto sigma = fresh("s");
                  auto inner = through(e, fvar(sigma), [&](const Functor& tau) { return run(tau, b.rhs); });
                  return forall_f(sigma, imp(run(fvar(sigma), b.lhs), inner));
                }
              }
              throw Error("bad connective");
            },
            [&](const ast::Quantifier& q) -> Formula {
              if (q.kind == ast::QKind::Exists) {
                if (q.var.sort == Sort::Number) {
                  auto body = subst_num(q.body, q.var.name, apply(e, zero()));
                  auto r = run(tail(e), body);
                  return q.bound ? conj(exists_n_lt(apply(e, zero()), *q.bound), r) : r;
                }
                return run(comp(e, 1), subst_fn(q.body, q.var.name, comp(e, 0)));
              }
              auto arg = q.var.sort == Sort::Number ? lam(fresh("k"), num(q.var.name)) : fvar(q.var.name);
              auto inner = through(e, arg, [&](const Functor& tau) { return run(tau, q.body); });
              return quantifier(ast::QKind::Forall, q.var, q.bound, inner);
            },
        },
        f.node().v);
  }

 private:
  std::set<std::string> used_;

  void collect_bound(const Formula& f) {
    std::visit(overloaded{
                   [](const ast::Eq&) {},
                   [&](const ast::Not& n) { collect_bound(n.body); },
                   [&](const ast::Binary& b) {
                     collect_bound(b.lhs);
                     collect_bound(b.rhs);
                   },
                   [&](const ast::Quantifier& q) {
                     used_.insert(q.var.name);
                     collect_bound(q.body);
                   },
               },
               f.node().v);
  }

  std::string fresh(const std::string& base) {
    auto n = fresh_name(base, used_);
    used_.insert(n);
    return n;
  }

  // w < t, written as exists d. S(w + d) = t.
  Formula exists_n_lt(const Term& w, const Term& t) {
    auto d = fresh("d");
    return exists_n(d, eq(succ(add(w, num(d))), t));
  }

  Functor comp(const Functor& e, int i) {
    auto y = fresh("y");
    return lam(y, apply(e, mul(pow(numeral(2), numeral(static_cast<std::uint64_t>(i))), pow(numeral(3), num(y)))));
  }

  Functor tail(const Functor& e) {
    auto n = fresh("n");
    return lam(n, apply(e, succ(num(n))));
  }

  // exists tau. (tau is e|arg) & k(tau)
  template <class K> Formula through(const Functor& e, const Functor& arg, K&& k) {
    auto tau = fresh("t");
    auto n = fresh("n");
    auto len = fresh("k");
    auto j = fresh("j");
    auto at = [&](const Term& l) { return apply(e, cat(pow(numeral(2), succ(num(n))), barof(arg, l))); };
    auto graph = forall_n(
        n, exists_n(len, conj(eq(at(num(len)), succ(apply(fvar(tau), num(n)))),
                              bforall(j, num(len), eq(at(num(j)), zero())))));
    return exists_f(tau, conj(graph, k(fvar(tau))));
  }
};

}  // namespace

Formula realizes_transform(const Formula& f, const std::string& eps) {
  Transformer t(f, eps);
  return t.run(fvar(eps), f);
}

// -------------------------------------------------------------- evaluation

namespace {

BaireElement functor_element(const Functor& fn, const Env& env);

Nat eval_in(const Term& t, const Env& env) {
  return std::visit(
      overloaded{
          [](const ast::Zero&) { return Nat(0); },
          [&](const ast::Succ& s) { return eval_in(s.arg, env) + 1; },
          [&](const ast::NumVar& v) {
            auto it = env.numbers.find(v.name);
            if (it == env.numbers.end()) throw Error("unbound number variable " + v.name);
            return it->second;
          },
          [&](const ast::Add& a) { return eval_in(a.lhs, env) + eval_in(a.rhs, env); },
          [&](const ast::Mul& a) { return eval_in(a.lhs, env) * eval_in(a.rhs, env); },
          [&](const ast::Pow& p) {
            Nat b = eval_in(p.base, env);
            Nat e = eval_in(p.exponent, env);
            if (b <= 1) return e == 0 ? Nat(1) : b;
            if (e > Nat(kDefaultGuardBits)) throw OverflowError("power exceeds the bit guard");
            Nat r = boost::multiprecision::pow(b, static_cast<unsigned>(e));
            if (msb(r) + 1 > kDefaultGuardBits) throw OverflowError("power exceeds the bit guard");
            return r;
          },
          [&](const ast::Cat& c) { return concat(eval_in(c.lhs, env), eval_in(c.rhs, env)); },
          [&](const ast::Apply& a) {
            Nat arg = eval_in(a.arg, env);
            if (auto* l = a.fn.as<ast::Lambda>()) {
              Env inner = env;
              inner.numbers[l->var] = arg;
              return eval_in(l->body, inner);
            }
            return functor_element(a.fn, env)(arg);
          },
          [&](const ast::BarOf& b) {
            Nat len = eval_in(b.length, env);
            if (len > 100000) throw OverflowError("bar length too large");
            return bar(functor_element(b.fn, env), static_cast<std::size_t>(len)).value();
          },
      },
      t.node().v);
}

BaireElement functor_element(const Functor& fn, const Env& env) {
  if (auto* v = fn.as<ast::FnVar>()) {
    auto it = env.functions.find(v->name);
    if (it == env.functions.end()) throw Error("unbound function variable @" + v->name);
    return it->second;
  }
  auto& l = *fn.as<ast::Lambda>();
  return BaireElement::program(
      "lam",
      [l, env](const Nat& n, std::uint64_t) -> std::optional<Nat> {
        Env inner = env;
        inner.numbers[l.var] = n;
        try {
          return eval_in(l.body, inner);
        } catch (const UndefinedValue&) {
          return std::nullopt;
        }
      },
      1);
}

Verdict and3(Verdict a, Verdict b) {
  if (a == Verdict::NotRealized || b == Verdict::NotRealized) return Verdict::NotRealized;
  if (a == Verdict::FuelExhausted || b == Verdict::FuelExhausted) return Verdict::FuelExhausted;
  return Verdict::Realized;
}

struct Found {
  Verdict verdict;
  std::optional<BaireElement> realizer;
};

class Checker {
 public:
  explicit Checker(std::uint64_t fuel) : fuel_(fuel) {}

  std::vector<Nat> witnesses;

  Verdict check(const BaireElement& e, const Formula& f, const Env& env) {
    try {
      return check_raw(e, f, env);
    } catch (const UndefinedValue&) {
      return Verdict::FuelExhausted;
    }
  }

  Found realizable(const Formula& f, const Env& env) {
    try {
      return realizable_raw(f, env);
    } catch (const UndefinedValue&) {
      return {Verdict::FuelExhausted, std::nullopt};
    }
  }

 private:
  std::uint64_t fuel_;

  // Exclusive bound for a quantified number variable, if any.
  std::optional<Nat> range_of(const ast::Quantifier& q, const Env& env) {
    if (q.bound) return eval_in(*q.bound, env);
    auto it = env.ranges.find(q.var.name);
    if (it != env.ranges.end()) return it->second;
    return std::nullopt;
  }

  const std::vector<BaireElement>& function_range(const std::string& name, const Env& env) {
    auto it = env.function_ranges.find(name);
    if (it == env.function_ranges.end()) it = env.function_ranges.find("*");
    if (it == env.function_ranges.end()) throw OutsideFragment("no finite range for function variable @" + name);
    return it->second;
  }

  static Env with_num(const Env& env, const std::string& x, const Nat& v) {
    Env e = env;
    e.numbers[x] = v;
    return e;
  }
  static Env with_fn(const Env& env, const std::string& a, const BaireElement& v) {
    Env e = env;
    e.functions.insert_or_assign(a, v);
    return e;
  }

  bool truth(const ast::Eq& e, const Env& env) { return eval_in(e.lhs, env) == eval_in(e.rhs, env); }

  // Runs body(x) for x in the range, or x < fuel when unbounded; an unbounded
  // run that never fails is inconclusive.
  template <class Body> Verdict for_all_numbers(const std::optional<Nat>& range, Body&& body) {
    Nat limit = range ? *range : Nat(fuel_);
    Verdict acc = Verdict::Realized;
    for (Nat x = 0; x < limit; ++x) {
      acc = and3(acc, body(x));
      if (acc == Verdict::NotRealized) return acc;
    }
    if (!range) return Verdict::FuelExhausted;
    return acc;
  }

  Verdict check_raw(const BaireElement& e, const Formula& f, const Env& env) {
    return std::visit(
        overloaded{
            [&](const ast::Eq& a) { return truth(a, env) ? Verdict::Realized : Verdict::NotRealized; },
            [&](const ast::Not& n) {
              auto r = realizable(n.body, env).verdict;
              if (r == Verdict::Realized) return Verdict::NotRealized;
              if (r == Verdict::NotRealized) return Verdict::Realized;
              return Verdict::FuelExhausted;
            },
            [&](const ast::Binary& b) {
              switch (b.op) {
                case ast::BinOp::And:
                  return and3(check(component(e, 0), b.lhs, env), check(component(e, 1), b.rhs, env));
                case ast::BinOp::Or:
                  return check(tail_of(e), e(0) == 0 ? b.lhs : b.rhs, env);
                case ast::BinOp::Imp: {
                  auto hyp = realizable(b.lhs, env);
                  if (hyp.verdict == Verdict::NotRealized) return Verdict::Realized;
                  if (hyp.verdict == Verdict::FuelExhausted) return Verdict::FuelExhausted;
                  auto phi = k2_compose(e, *hyp.realizer, fuel_);
                  if (!phi.eval(0)) return Verdict::FuelExhausted;
                  return check(phi, b.rhs, env);
                }
              }
              return Verdict::NotRealized;
            },
            [&](const ast::Quantifier& q) {
              if (q.var.sort == Sort::Function) {
                if (q.kind == ast::QKind::Exists)
                  return check(component(e, 1), q.body, with_fn(env, q.var.name, component(e, 0)));
                Verdict acc = Verdict::Realized;
                for (const auto& a : function_range(q.var.name, env)) {
                  acc = and3(acc, check(k2_compose(e, a, fuel_), q.body, with_fn(env, q.var.name, a)));
                  if (acc == Verdict::NotRealized) break;
                }
                return acc;
              }
              auto range = range_of(q, env);
              if (q.kind == ast::QKind::Exists) {
                Nat w = e(0);
                witnesses.push_back(w);
                if (range && w >= *range) return Verdict::NotRealized;
                return check(tail_of(e), q.body, with_num(env, q.var.name, w));
              }
              return for_all_numbers(range, [&](const Nat& x) {
                return check(k2_compose(e, BaireElement::constant(x), fuel_), q.body, with_num(env, q.var.name, x));
              });
            },
        },
        f.node().v);
  }

  Found realizable_raw(const Formula& f, const Env& env) {
    const BaireElement zero_el = BaireElement::constant(0);
    return std::visit(
        overloaded{
            [&](const ast::Eq& a) -> Found {
              if (truth(a, env)) return {Verdict::Realized, zero_el};
              return {Verdict::NotRealized, std::nullopt};
            },
            [&](const ast::Not& n) -> Found {
              auto r = realizable(n.body, env).verdict;
              if (r == Verdict::NotRealized) return {Verdict::Realized, zero_el};
              if (r == Verdict::Realized) return {Verdict::NotRealized, std::nullopt};
              return {Verdict::FuelExhausted, std::nullopt};
            },
            [&](const ast::Binary& b) -> Found {
              auto l = realizable(b.lhs, env);
              switch (b.op) {
                case ast::BinOp::And: {
                  if (l.verdict == Verdict::NotRealized) return l;
                  auto r = realizable(b.rhs, env);
                  auto v = and3(l.verdict, r.verdict);
                  if (v != Verdict::Realized) return {v, std::nullopt};
                  return {v, pair_of(*l.realizer, *r.realizer)};
                }
                case ast::BinOp::Or: {
                  if (l.verdict == Verdict::Realized) return {l.verdict, cons(0, *l.realizer)};
                  auto r = realizable(b.rhs, env);
                  if (r.verdict == Verdict::Realized) return {r.verdict, cons(1, *r.realizer)};
                  if (l.verdict == Verdict::FuelExhausted || r.verdict == Verdict::FuelExhausted)
                    return {Verdict::FuelExhausted, std::nullopt};
                  return {Verdict::NotRealized, std::nullopt};
                }
                case ast::BinOp::Imp: {
                  if (l.verdict == Verdict::NotRealized) return {Verdict::Realized, zero_el};
                  auto r = realizable(b.rhs, env);
                  if (r.verdict == Verdict::Realized) return {r.verdict, constant_application(*r.realizer)};
                  if (l.verdict == Verdict::Realized && r.verdict == Verdict::NotRealized)
                    return {Verdict::NotRealized, std::nullopt};
                  return {Verdict::FuelExhausted, std::nullopt};
                }
              }
              return {Verdict::NotRealized, std::nullopt};
            },
            [&](const ast::Quantifier& q) -> Found {
              if (q.var.sort == Sort::Function) return realizable_fn_quantifier(q, env);
              auto range = range_of(q, env);
              Nat limit = range ? *range : Nat(fuel_);
              if (q.kind == ast::QKind::Exists) {
                bool unsure = !range;
                for (Nat x = 0; x < limit; ++x) {
                  auto r = realizable(q.body, with_num(env, q.var.name, x));
                  if (r.verdict == Verdict::Realized) return {r.verdict, cons(x, *r.realizer)};
                  if (r.verdict == Verdict::FuelExhausted) unsure = true;
                }
                return {unsure ? Verdict::FuelExhausted : Verdict::NotRealized, std::nullopt};
              }
              auto table = std::make_shared<std::map<Nat, BaireElement>>();
              Verdict acc = Verdict::Realized;
              for (Nat x = 0; x < limit; ++x) {
                auto r = realizable(q.body, with_num(env, q.var.name, x));
                acc = and3(acc, r.verdict);
                if (acc == Verdict::NotRealized) return {acc, std::nullopt};
                if (r.realizer) table->emplace(x, *r.realizer);
              }
              if (!range || acc != Verdict::Realized) return {Verdict::FuelExhausted, std::nullopt};
              // e(<n> * <x>) = sigma_x(n) + 1
              return {acc, BaireElement::seq_program(
                               "forall-table",
                               [table](const SeqNum& s, std::uint64_t) -> std::optional<Nat> {
                                 if (s.length() < 2) return Nat(0);
                                 auto it = table->find(s[1]);
                                 if (it == table->end()) return Nat(1);
                                 auto v = it->second.eval(s[0]);
                                 if (!v) return std::nullopt;
                                 return *v + 1;
                               },
                               1)};
            },
        },
        f.node().v);
  }

  Found realizable_fn_quantifier(const ast::Quantifier& q, const Env& env) {
    const auto& range = function_range(q.var.name, env);
    if (q.kind == ast::QKind::Exists) {
      bool unsure = false;
      for (const auto& a : range) {
        auto r = realizable(q.body, with_fn(env, q.var.name, a));
        if (r.verdict == Verdict::Realized) return {r.verdict, pair_of(a, *r.realizer)};
        if (r.verdict == Verdict::FuelExhausted) unsure = true;
      }
      return {unsure ? Verdict::FuelExhausted : Verdict::NotRealized, std::nullopt};
    }
    auto table = std::make_shared<std::vector<std::pair<BaireElement, BaireElement>>>();
    Verdict acc = Verdict::Realized;
    for (const auto& a : range) {
      auto r = realizable(q.body, with_fn(env, q.var.name, a));
      acc = and3(acc, r.verdict);
      if (acc == Verdict::NotRealized) return {acc, std::nullopt};
      if (r.realizer) table->emplace_back(a, *r.realizer);
    }
    if (acc != Verdict::Realized) return {acc, std::nullopt};
    // Read the argument until one candidate of the finite universe remains.
    return {acc, BaireElement::seq_program(
                     "forall-select",
                     [table](const SeqNum& s, std::uint64_t) -> std::optional<Nat> {
                       if (s.empty()) return Nat(0);
                       const BaireElement* pick = nullptr;
                       std::size_t alive = 0;
                       for (const auto& [a, sigma] : *table) {
                         bool agrees = true;
                         for (std::size_t i = 1; i < s.length() && agrees; ++i) {
                           auto v = a.eval(Nat(i - 1));
                           agrees = v && *v == s[i];
                         }
                         if (agrees) {
                           ++alive;
                           if (!pick) pick = &sigma;
                         }
                       }
                       if (alive == 0) return Nat(1);
                       if (alive > 1 && s.length() <= 64) return Nat(0);
                       auto v = pick->eval(s[0]);
                       if (!v) return std::nullopt;
                       return *v + 1;
                     },
                     1)};
  }
};

}  // namespace

Nat eval_term(const Term& t, const Env& env) { return eval_in(t, env); }

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Realized: return "realized";
    case Verdict::NotRealized: return "not-realized";
    case Verdict::FuelExhausted: return "fuel-exhausted";
  }
  return "?";
}

RealizeResult check_realizes(const BaireElement& r, const Formula& f, const Env& env, std::uint64_t fuel) {
  Checker c(fuel);
  auto v = c.check(r, f, env);
  return {v, std::move(c.witnesses), ""};
}

}  // namespace fim
