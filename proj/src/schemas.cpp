#include "fim/schemas.hpp"

#include "fim/subst.hpp"

namespace fim {

namespace {

struct NameEntry {
  SchemaKind kind;
  const char* name;
};

constexpr NameEntry kSchemaNames[] = {
    {SchemaKind::AC00, "AC00"},           {SchemaKind::AC01, "AC01"},
    {SchemaKind::AC00Bang, "AC00!"},      {SchemaKind::QfAC00, "qf-AC00"},
    {SchemaKind::Induction, "Induction"}, {SchemaKind::OpenEq, "OpenEq"},
    {SchemaKind::BIa, "BIa"},             {SchemaKind::BI1, "BI1"},
    {SchemaKind::BIBang, "BI!"},          {SchemaKind::MP, "MP"},
    {SchemaKind::DNS1, "DNS1"}};

constexpr NameEntry kSchemaAliases[] = {
    {SchemaKind::AC00Bang, "AC00Bang"}, {SchemaKind::QfAC00, "QfAC00"},  {SchemaKind::BIa, "x26.3a"},
    {SchemaKind::BI1, "x26.3b"},        {SchemaKind::BIBang, "BIBang"},
    {SchemaKind::Induction, "IND"},     {SchemaKind::OpenEq, "open-eq"}};

class Namer {
 public:
  explicit Namer(std::set<std::string> used) : used_(std::move(used)) {}
  std::string fresh(const std::string& base) {
    auto n = fresh_name(base, used_);
    used_.insert(n);
    return n;
  }
  void reserve(const std::string& n) { used_.insert(n); }

 private:
  std::set<std::string> used_;
};

std::set<std::string> names_of(const FreeVars& fv) {
  std::set<std::string> s = fv.numbers;
  s.insert(fv.functions.begin(), fv.functions.end());
  return s;
}

std::string bound_or(const SchemaArgs& a, const std::string& role, const std::string& fallback) {
  auto it = a.bind.find(role);
  return it == a.bind.end() ? fallback : it->second;
}

const Formula& need_body(const SchemaArgs& a, SchemaKind k) {
  if (!a.body) throw SchemaError(schema_name(k) + " needs a body formula");
  return *a.body;
}

// Picks the introduced function variable: an explicit one must be fresh,
// a defaulted one is renamed away from the body.
std::string choice_function(const SchemaArgs& a, const Formula& body, Namer& namer) {
  auto fv = free_vars(body);
  auto it = a.bind.find("beta");
  if (it != a.bind.end()) {
    if (fv.functions.count(it->second))
      throw SchemaError("freshness violation: @" + it->second + " is free in the body");
    namer.reserve(it->second);
    return it->second;
  }
  return namer.fresh("b");
}

// exists! v. B  ==  exists v. B & forall v'. forall v''. (B[v'] & B[v''] -> v' = v'')
Formula exists_unique(const std::string& v, const Formula& b, Namer& namer) {
  auto v1 = namer.fresh(v);
  auto v2 = namer.fresh(v);
  auto both = conj(subst_num(b, v, num(v1)), subst_num(b, v, num(v2)));
  return conj(exists_n(v, b), forall_n(v1, forall_n(v2, imp(both, eq(num(v1), num(v2))))));
}

Formula choice_instance(SchemaKind kind, const SchemaArgs& a) {
  const Formula& body = need_body(a, kind);
  auto x = bound_or(a, "x", "x");
  auto y = bound_or(a, "y", "y");
  if (x == y) throw SchemaError("x and y must be distinct");
  if (kind == SchemaKind::QfAC00 && !is_qf_admissible(body))
    throw SchemaError("qf-AC00 body has an unbounded or function quantifier");
  auto used = names_of(free_vars(body));
  used.insert(x);
  used.insert(y);
  Namer namer(used);
  auto beta = choice_function(a, body, namer);
  Formula inner = kind == SchemaKind::AC00Bang ? exists_unique(y, body, namer) : exists_n(y, body);
  auto lhs = forall_n(x, inner);
  auto rhs = exists_f(beta, forall_n(x, subst_num(body, y, apply(fvar(beta), num(x)))));
  return imp(lhs, rhs);
}

Formula ac01_instance(const SchemaArgs& a) {
  const Formula& body = need_body(a, SchemaKind::AC01);
  auto x = bound_or(a, "x", "x");
  auto alpha = bound_or(a, "alpha", "a");
  auto used = names_of(free_vars(body));
  used.insert(x);
  used.insert(alpha);
  Namer namer(used);
  auto beta = choice_function(a, body, namer);
  auto y = namer.fresh("y");
  auto pairing = mul(pow(numeral(2), num(x)), pow(numeral(3), num(y)));
  auto functor = lam(y, apply(fvar(beta), pairing));
  auto lhs = forall_n(x, exists_f(alpha, body));
  auto rhs = exists_f(beta, forall_n(x, subst_fn(body, alpha, functor)));
  return imp(lhs, rhs);
}

Formula bar_instance(SchemaKind kind, const SchemaArgs& a) {
  const Formula& body = need_body(a, kind);
  auto w = bound_or(a, "w", "w");
  auto rho = bound_or(a, "rho", "r");
  Formula bar_pred = kind == SchemaKind::BI1 ? eq(apply(fvar(rho), num(w)), zero())
                     : a.bar                ? *a.bar
                                            : throw SchemaError(schema_name(kind) + " needs a bar predicate R");
  auto used = names_of(free_vars(body));
  used.merge(names_of(free_vars(bar_pred)));
  used.insert(w);
  used.insert(rho);
  Namer namer(used);
  auto alpha = namer.fresh("a");
  auto x = namer.fresh("x");
  auto n = namer.fresh("n");

  auto at_path = subst_num(bar_pred, w, barof(fvar(alpha), num(x)));
  Formula hits = kind == SchemaKind::BIBang ? forall_f(alpha, exists_unique(x, at_path, namer))
                                            : forall_f(alpha, exists_n(x, at_path));
  auto holds_at_bars = forall_n(w, imp(bar_pred, body));
  auto step = cat(num(w), pow(numeral(2), succ(num(n))));
  auto extension = forall_n(w, imp(forall_n(n, subst_num(body, w, step)), body));
  auto conclusion = subst_num(body, w, numeral(1));

  std::vector<Formula> hyps;
  if (kind == SchemaKind::BIa) hyps.push_back(forall_n(w, disj(bar_pred, neg(bar_pred))));
  hyps.push_back(hits);
  hyps.push_back(holds_at_bars);
  hyps.push_back(extension);
  return imp(conj_all(hyps), conclusion);
}

}  // namespace

std::string schema_name(SchemaKind k) {
  for (const auto& e : kSchemaNames)
    if (e.kind == k) return e.name;
  return "?";
}

std::optional<SchemaKind> schema_from_name(const std::string& name) {
  for (const auto& e : kSchemaNames)
    if (name == e.name) return e.kind;
  for (const auto& e : kSchemaAliases)
    if (name == e.name) return e.kind;
  return std::nullopt;
}

bool is_qf_admissible(const Formula& f) {
  return std::visit(overloaded{
                        [](const ast::Eq&) { return true; },
                        [](const ast::Not& n) { return is_qf_admissible(n.body); },
                        [](const ast::Binary& b) { return is_qf_admissible(b.lhs) && is_qf_admissible(b.rhs); },
                        [](const ast::Quantifier& q) {
                          return q.var.sort == Sort::Number && q.bound.has_value() && is_qf_admissible(q.body);
                        },
                    },
                    f.node().v);
}

Formula instantiate(SchemaKind kind, const SchemaArgs& a) {
  switch (kind) {
    case SchemaKind::AC00:
    case SchemaKind::AC00Bang:
    case SchemaKind::QfAC00:
      return choice_instance(kind, a);
    case SchemaKind::AC01:
      return ac01_instance(a);
    case SchemaKind::Induction: {
      const Formula& body = need_body(a, kind);
      auto x = bound_or(a, "x", "x");
      auto base = subst_num(body, x, zero());
      auto step = forall_n(x, imp(body, subst_num(body, x, succ(num(x)))));
      return imp(conj(base, step), forall_n(x, body));
    }
    case SchemaKind::OpenEq: {
      auto x = num(bound_or(a, "x", "x"));
      auto y = num(bound_or(a, "y", "y"));
      auto alpha = fvar(bound_or(a, "alpha", "a"));
      return imp(eq(x, y), eq(apply(alpha, x), apply(alpha, y)));
    }
    case SchemaKind::BIa:
    case SchemaKind::BI1:
    case SchemaKind::BIBang:
      return bar_instance(kind, a);
    case SchemaKind::MP: {
      auto alpha = bound_or(a, "alpha", "a");
      auto hit = exists_n("x", eq(apply(fvar(alpha), num("x")), zero()));
      return forall_f(alpha, imp(neg(neg(hit)), hit));
    }
    case SchemaKind::DNS1: {
      auto rho = bound_or(a, "rho", "r");
      auto hit = exists_n("x", eq(apply(fvar(rho), barof(fvar("a"), num("x"))), zero()));
      if (rho == "a") throw SchemaError("rho must differ from the path variable @a");
      return imp(forall_f("a", neg(neg(hit))), neg(neg(forall_f("a", hit))));
    }
  }
  throw SchemaError("unknown schema kind");
}

Formula mp_paper_literal() {
  auto atom = eq(apply(fvar("a"), num("x")), zero());
  return forall_f("a", imp(neg(forall_f("a", neg(atom))), exists_n("x", atom)));
}

std::string mp_paper_literal_latex() {
  return R"(\forall \alpha [\neg \forall \alpha \neg (\alpha(x) = 0) \rightarrow \exists x \alpha(x) = 0])";
}

std::string theory_name(TheoryId t) {
  switch (t) {
    case TheoryId::IA1: return "IA1";
    case TheoryId::IRA: return "IRA";
    case TheoryId::BSK: return "BSK";
    case TheoryId::FIM: return "FIM";
    case TheoryId::BIminus: return "BI-";
  }
  return "?";
}

std::optional<TheoryId> theory_from_name(const std::string& name) {
  for (auto t : {TheoryId::IA1, TheoryId::IRA, TheoryId::BSK, TheoryId::FIM, TheoryId::BIminus})
    if (theory_name(t) == name) return t;
  if (name == "BIminus") return TheoryId::BIminus;
  return std::nullopt;
}

TheoryInfo theory_schemas(TheoryId t) {
  TheoryInfo ia1{{SchemaKind::Induction, SchemaKind::OpenEq},
                 {"intuitionistic logic, two sorts",
                  "Peano axioms; induction for arbitrary formulas",
                  "lambda-reduction schema",
                  "defining axioms for finitely many extra primitive recursive function(al) constants (not enumerated)"},
                 false};
  switch (t) {
    case TheoryId::IA1:
      return ia1;
    case TheoryId::IRA:
      ia1.schemas.insert(SchemaKind::QfAC00);
      return ia1;
    case TheoryId::BSK:
    case TheoryId::FIM:
      ia1.schemas.insert(SchemaKind::AC01);
      ia1.schemas.insert(SchemaKind::BIBang);
      ia1.notes.push_back("AC00 is a theorem");
      if (t == TheoryId::FIM) {
        ia1.notes.push_back("adds a continuity principle whose formula is not available; not instantiable");
        ia1.continuity_marker = true;
      }
      return ia1;
    case TheoryId::BIminus:
      return TheoryInfo{{SchemaKind::Induction, SchemaKind::BI1},
                        {"classical logic", "full induction",
                         "(3') type 1 variables closed under primitive recursive comprehension",
                         "(4') bar induction in the form BI1"},
                        false};
  }
  return ia1;
}

}  // namespace fim
