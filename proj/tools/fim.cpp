// fim: command-line front end.
//
// Exit status: 0 success, 1 domain error (or a failing check), 2 usage error.
// --machine switches every command to line-oriented key=value output.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "fim/acceptance.hpp"
#include "fim/bar.hpp"
#include "fim/jump.hpp"
#include "fim/k2.hpp"
#include "fim/negtrans.hpp"
#include "fim/parser.hpp"
#include "fim/printer.hpp"
#include "fim/prop.hpp"
#include "fim/schemas.hpp"
#include "fim/seqcode.hpp"
#include "fim/subst.hpp"

using namespace fim;

namespace {

// Prints either human text or key=value lines.
class Out {
 public:
  explicit Out(const bool& machine) : machine_(machine) {}

  bool machine() const { return machine_; }
  void kv(const std::string& key, const std::string& value) {
    if (machine_) std::cout << key << "=" << value << "\n";
  }
  void text(const std::string& line) {
    if (!machine_) std::cout << line << "\n";
  }
  // Both modes: text line, or key=value.
  void both(const std::string& key, const std::string& value, const std::string& line) {
    if (machine_)
      kv(key, value);
    else
      text(line);
  }

 private:
  const bool& machine_;
};

struct Failure {
  int code;
};

std::string join(const std::vector<Nat>& xs, const char* sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + xs[i].str();
  return out;
}

std::pair<std::string, std::string> split_binding(const std::string& b, char sep) {
  auto at = b.find(sep);
  if (at == std::string::npos || at == 0) throw Error("bad binding '" + b + "'");
  return {b.substr(0, at), b.substr(at + 1)};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  auto s = ss.str();
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  return s;
}

BaireElement element_arg(const std::string& spec) {
  if (spec == "builtin:mp") return mp_realizer();
  if (spec == "builtin:dns1") return dns1_realizer();
  if (spec == "builtin:zero") return BaireElement::constant(0);
  if (spec.rfind("builtin:", 0) == 0) throw Error("unknown builtin '" + spec + "' (mp, dns1, zero)");
  if (spec.find(':') == std::string::npos && spec != "id" && std::filesystem::exists(spec))
    return parse_baire(read_file(spec));
  return parse_baire(spec);
}

const Registry& registry_arg(const std::string& path, Registry& storage) {
  if (path.empty()) return default_registry();
  storage = load_registry(path);
  return storage;
}

// ------------------------------------------------------------------ lang

void cmd_parse(Out& out, const std::string& text) {
  auto f = parse_formula(text);
  auto fv = free_vars(f);
  std::string nums, fns;
  for (const auto& v : fv.numbers) nums += (nums.empty() ? "" : ",") + v;
  for (const auto& v : fv.functions) fns += (fns.empty() ? "" : ",") + ("@" + v);
  out.both("formula", print_formula(f), print_formula(f));
  out.both("free_numbers", nums, "free number variables: " + (nums.empty() ? "-" : nums));
  out.both("free_functions", fns, "free function variables: " + (fns.empty() ? "-" : fns));
  out.both("connectives", std::to_string(connective_count(f)), "connectives: " + std::to_string(connective_count(f)));
  out.both("depth", std::to_string(depth(f)), "depth: " + std::to_string(depth(f)));
}

void cmd_print(Out& out, const std::string& text, const std::vector<std::string>& substs, bool reduce) {
  auto f = parse_formula(text);
  for (const auto& s : substs) {
    auto [x, t] = split_binding(s, '=');
    f = subst_num(f, x, parse_term(t));
  }
  if (reduce) f = lambda_reduce(f);
  out.both("formula", print_formula(f), print_formula(f));
}

// --------------------------------------------------------------- schemas

void cmd_schema(Out& out, const std::string& name, const std::string& body, const std::string& bar,
                const std::vector<std::string>& binds, bool literal, bool latex) {
  auto k = schema_from_name(name);
  if (!k) throw Error("unknown schema '" + name + "'");
  if (literal || latex) {
    if (*k != SchemaKind::MP) throw Error("--paper-literal applies to MP only");
    if (latex)
      out.both("latex", mp_paper_literal_latex(), mp_paper_literal_latex());
    else
      out.both("formula", print_formula(mp_paper_literal()), print_formula(mp_paper_literal()));
    return;
  }
  SchemaArgs a;
  if (!body.empty()) a.body = parse_formula(body);
  if (!bar.empty()) a.bar = parse_formula(bar);
  for (const auto& b : binds) {
    std::stringstream ss(b);
    for (std::string part; std::getline(ss, part, ',');) {
      auto [role, var] = split_binding(part, '=');
      if (!var.empty() && var[0] == '@') var = var.substr(1);
      a.bind[role] = var;
    }
  }
  auto f = instantiate(*k, a);
  out.kv("schema", schema_name(*k));
  out.both("formula", print_formula(f), print_formula(f));
}

void cmd_theory(Out& out, const std::string& name) {
  auto t = theory_from_name(name);
  if (!t) throw Error("unknown theory '" + name + "' (IA1, IRA, BSK, FIM, BI-)");
  auto info = theory_schemas(*t);
  std::string names;
  for (auto k : info.schemas) names += (names.empty() ? "" : " ") + schema_name(k);
  out.both("theory", theory_name(*t), theory_name(*t) + ": " + names);
  out.kv("schemas", names);
  for (std::size_t i = 0; i < info.notes.size(); ++i)
    out.both("note" + std::to_string(i), info.notes[i], "  " + info.notes[i]);
  if (info.continuity_marker) out.both("continuity", "listed", "  continuity principle: listed, not instantiable");
}

// ------------------------------------------------------------- negtrans

int cmd_translate(Out& out, const std::string& text, bool simplify, bool repair, bool check) {
  auto g = neg_translate(parse_formula(text));
  if (repair) g = repair_bi_clause1(g);
  if (simplify) g = simplify_decidable_atoms(g);
  out.both("formula", print_formula(g), print_formula(g));
  if (check) {
    bool neg = is_negative(g);
    out.both("negative", neg ? "1" : "0", neg ? "negative: yes" : "negative: no");
  }
  return 0;
}

// --------------------------------------------------------------- oracles

std::string atom_name(int i) { return prop::to_string(prop::atom(i)); }

void cmd_oracle(Out& out, const std::string& logic, const std::string& text, int worlds) {
  auto f = prop::parse_prop(text);
  out.kv("formula", prop::to_string(f));
  if (logic == "classical") {
    bool v = prop::classical_valid(f);
    out.both("result", v ? "valid" : "not-valid", v ? "valid" : "not valid");
    if (!v) {
      int n = prop::atom_count(f);
      for (std::uint64_t row = 0; row < (std::uint64_t{1} << n); ++row) {
        // first falsifying valuation
        auto fix = [&](const prop::Prop& p) {
          prop::KripkeModel m{1, {1u}, {static_cast<std::uint32_t>(row)}};
          return prop::forcing(m, p) & 1u;
        };
        if (fix(f)) continue;
        std::string line;
        for (int i = 0; i < n; ++i) {
          auto val = std::to_string((row >> i) & 1u);
          out.kv("falsified." + atom_name(i), val);
          line += (i ? " " : "") + atom_name(i) + "=" + val;
        }
        out.text("falsifying valuation: " + line);
        break;
      }
    }
    return;
  }
  bool p = prop::ipc_provable(f);
  out.both("result", p ? "provable" : "not-provable", p ? "provable" : "not provable");
  if (p) return;
  auto m = prop::kripke_countermodel(f, worlds);
  if (!m) {
    out.both("countermodel", "none", "countermodel: none with at most " + std::to_string(worlds) + " worlds");
    return;
  }
  out.both("worlds", std::to_string(m->worlds), "countermodel with " + std::to_string(m->worlds) + " worlds (root 0):");
  int n = prop::atom_count(f);
  for (int w = 0; w < m->worlds; ++w) {
    std::string above, forced;
    for (int v = 0; v < m->worlds; ++v)
      if (v != w && (m->up[w] >> v & 1u)) above += (above.empty() ? "" : ",") + std::to_string(v);
    for (int i = 0; i < n; ++i)
      if (m->val[w] >> i & 1u) forced += (forced.empty() ? "" : ",") + atom_name(i);
    out.kv("world" + std::to_string(w) + ".above", above);
    out.kv("world" + std::to_string(w) + ".true", forced);
    out.text("  world " + std::to_string(w) + ": above {" + above + "} true {" + forced + "}");
  }
}

// ------------------------------------------------------------ realizability

int cmd_realize_check(Out& out, const std::string& text, const std::string& realizer,
                      const std::vector<std::string>& env_args, std::uint64_t fuel) {
  auto f = parse_formula(text);
  Env env;
  for (const auto& b : env_args) {
    if (b.size() > 1 && b[0] == '@') {
      auto tilde = b.find('~');
      auto eqpos = b.find('=');
      if (tilde != std::string::npos && (eqpos == std::string::npos || tilde < eqpos)) {
        env.function_ranges[b.substr(1, tilde - 1)].push_back(element_arg(b.substr(tilde + 1)));
      } else {
        auto [name, spec] = split_binding(b.substr(1), '=');
        env.functions.insert_or_assign(name, element_arg(spec));
      }
    } else if (b.find('<') != std::string::npos) {
      auto [name, bound] = split_binding(b, '<');
      env.ranges[name] = parse_nat(bound);
    } else {
      auto [name, value] = split_binding(b, '=');
      env.numbers[name] = parse_nat(value);
    }
  }
  auto r = check_realizes(element_arg(realizer), f, env, fuel);
  out.both("verdict", verdict_name(r.verdict), verdict_name(r.verdict));
  if (!r.witnesses.empty()) out.both("witnesses", join(r.witnesses), "witnesses: " + join(r.witnesses, " "));
  return 0;
}

void cmd_realize_transform(Out& out, const std::string& text, const std::string& eps) {
  auto f = realizes_transform(parse_formula(text), eps);
  out.both("formula", print_formula(f), print_formula(f));
}

void cmd_realize_apply(Out& out, const std::string& alpha, const std::string& beta, const std::string& n,
                       std::uint64_t fuel) {
  auto a = k2_apply_traced(element_arg(alpha), element_arg(beta), parse_nat(n), fuel);
  if (!a) {
    out.both("result", "undefined", "undefined within fuel " + std::to_string(fuel));
    return;
  }
  out.both("result", a->value.str(), a->value.str());
  out.both("consumed", std::to_string(a->consumed), "values read: " + std::to_string(a->consumed));
}

// ------------------------------------------------------------------ jump

int cmd_jump_demo(Out& out, const std::string& alpha_spec, std::size_t upto, const std::string& reg_path,
                  std::uint64_t fuel) {
  Registry storage;
  const auto& reg = registry_arg(reg_path, storage);
  if (upto > reg.size()) throw Error("--upto exceeds the registry size " + std::to_string(reg.size()));
  std::string spec = alpha_spec.empty() ? reg.alpha_spec : alpha_spec;
  auto alpha = element_arg(spec);
  // recorded certificates are checked; for another alpha they are recomputed
  HaltingInfo h = spec == reg.alpha_spec ? recorded_halting_info(reg, alpha, fuel)
                                         : compute_halting_info(reg, alpha, upto, fuel);
  auto beta = build_beta(alpha, h, upto);
  out.both("alpha", spec, "alpha: " + spec);
  for (std::size_t n = 0; n < upto; ++n) {
    const auto& st = h.at(n);
    auto key = "n" + std::to_string(n);
    out.kv(key + ".status", st.halts ? "halts" : "diverges");
    out.kv(key + ".beta_even", beta(2 * n).str());
    out.kv(key + ".beta_odd", beta(2 * n + 1).str());
    std::string odd = beta(2 * n + 1).str();
    if (odd.size() > 24) odd = odd.substr(0, 20) + "...(" + std::to_string(odd.size()) + " digits)";
    out.text("  " + std::to_string(n) + ": beta(2n)=" + beta(2 * n).str() + " beta(2n+1)=" + odd + "  program " +
             (st.halts ? "halts, output " + st.output.str() : "diverges"));
  }
  JumpContext ctx{reg, alpha};
  bool ok = true;
  for (std::size_t j = 0; j <= 2 * upto; ++j) ok = ok && rho_seq(bar(beta, j), ctx) == 1 && not_a_seq(bar(beta, j), alpha, h);
  out.both("rho_on_beta", ok ? "1" : "0",
           ok ? "rho = 1 and not A along the whole prefix" : "rho or not A fails on the prefix");
  return ok ? 0 : 1;
}

void cmd_jump_run(Out& out, const std::string& program, const std::string& input, const std::string& alpha,
                  std::uint64_t fuel) {
  auto e = parse_program(program);
  auto r = run(e, parse_nat(input), element_arg(alpha), fuel);
  if (!r) {
    out.both("result", "no-halt", "no halt within " + std::to_string(fuel) + " steps");
    return;
  }
  out.both("output", r->output.str(), "output: " + r->output.str());
  out.both("steps", std::to_string(r->steps), "steps: " + std::to_string(r->steps));
  out.both("trace", r->y.str(), "trace: " + r->y.str());
}

int cmd_jump_check(Out& out, const std::string& program, const std::string& input, const std::string& trace,
                   const std::string& alpha) {
  bool ok = t_check(parse_program(program), parse_nat(input), parse_nat(trace), element_arg(alpha));
  out.both("valid", ok ? "1" : "0", ok ? "valid halting trace" : "not a valid halting trace");
  return 0;
}

void cmd_jump_rho(Out& out, const std::string& s, const std::string& alpha_spec, const std::string& reg_path,
                  bool not_a_mode, std::uint64_t fuel) {
  Registry storage;
  const auto& reg = registry_arg(reg_path, storage);
  std::string spec = alpha_spec.empty() ? reg.alpha_spec : alpha_spec;
  auto alpha = element_arg(spec);
  if (not_a_mode) {
    HaltingInfo h = spec == reg.alpha_spec ? recorded_halting_info(reg, alpha, fuel)
                                           : compute_halting_info(reg, alpha, reg.size(), fuel);
    bool v = not_a(parse_nat(s), alpha, h);
    out.both("not_a", v ? "1" : "0", v ? "not A(s): every slot is correct" : "A(s): some slot is wrong");
    return;
  }
  JumpContext ctx{reg, alpha};
  int v = rho(parse_nat(s), ctx);
  out.both("rho", std::to_string(v), "rho = " + std::to_string(v));
}

// ------------------------------------------------------------------- bar

RhoFn rho_builtin(const std::string& name, std::unique_ptr<JumpContext>& ctx_store, BaireElement& alpha_store) {
  const std::string prefix = "builtin:";
  if (name.rfind(prefix, 0) != 0) throw Error("--rho takes builtin:<name>");
  auto n = name.substr(prefix.size());
  if (n == "never") return [](const SeqNum&) { return 1; };
  if (n.rfind("uniform", 0) == 0) return uniform_bar(static_cast<std::size_t>(to_u64(parse_nat(n.substr(7)))));
  if (n == "solovay") {
    alpha_store = parse_baire(default_registry().alpha_spec);
    ctx_store = std::make_unique<JumpContext>(JumpContext{default_registry(), alpha_store});
    auto* ctx = ctx_store.get();
    return [ctx](const SeqNum& s) { return rho_seq(s, *ctx); };
  }
  throw Error("unknown rho builtin '" + n + "' (never, uniform<d>, solovay)");
}

int cmd_bar_verify(Out& out, const std::string& rho_name, std::size_t b, std::size_t d) {
  std::unique_ptr<JumpContext> ctx;
  BaireElement alpha = BaireElement::constant(0);
  auto v = bar_verify(rho_builtin(rho_name, ctx, alpha), b, d);
  if (v.kind == BarVerdict::Kind::Barred) {
    out.both("verdict", "barred", "barred (deepest bar at depth " + std::to_string(v.depth) + ")");
    out.kv("depth", std::to_string(v.depth));
  } else {
    out.both("verdict", "depth-exhausted", "depth-exhausted along [" + join(v.path) + "]");
    out.kv("path", join(v.path));
  }
  return 0;
}

int cmd_bar_recurse(Out& out, const std::string& rho_name, std::size_t b, std::size_t d, const std::string& base,
                    const std::string& step) {
  std::unique_ptr<JumpContext> ctx;
  BaireElement alpha = BaireElement::constant(0);
  BaseFn base_fn;
  if (base == "one")
    base_fn = [](const SeqNum&) { return Nat(1); };
  else if (base == "length")
    base_fn = [](const SeqNum& s) { return Nat(s.length()); };
  else
    throw Error("unknown --base '" + base + "' (one, length)");
  StepFn step_fn;
  if (step == "sum")
    step_fn = [](const SeqNum&, const std::vector<Nat>& kids) {
      Nat s = 0;
      for (const auto& k : kids) s += k;
      return s;
    };
  else if (step == "max")
    step_fn = [](const SeqNum&, const std::vector<Nat>& kids) { return *std::max_element(kids.begin(), kids.end()); };
  else
    throw Error("unknown --step '" + step + "' (sum, max)");
  auto v = bar_recurse(rho_builtin(rho_name, ctx, alpha), base_fn, step_fn, b, d);
  out.both("value", v.str(), v.str());
  return 0;
}

// ------------------------------------------------------------------- seq

void cmd_seq_encode(Out& out, const std::vector<std::string>& xs) {
  std::vector<Nat> v;
  for (const auto& x : xs) v.push_back(parse_nat(x));
  auto code = encode(v);
  out.both("code", code.str(), code.str());
}

void cmd_seq_decode(Out& out, const std::string& w) {
  auto d = decode(parse_nat(w));
  if (!d) throw Error(w + " is not a sequence number");
  out.both("length", std::to_string(d->size()), "length " + std::to_string(d->size()) + ": (" + join(*d, ", ") + ")");
  out.kv("entries", join(*d));
}

// ------------------------------------------------------------ acceptance

int cmd_acceptance(Out& out, const std::vector<int>& only) {
  int failed = 0;
  for (const auto& r : run_acceptance(only)) {
    auto key = "criterion" + std::to_string(r.id);
    out.kv(key + ".pass", r.pass ? "1" : "0");
    out.kv(key + ".detail", r.detail);
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2fs", r.seconds);
    out.text(std::string(r.pass ? "PASS " : "FAIL ") + (r.id < 10 ? " " : "") + std::to_string(r.id) + " " + r.title +
             ": " + r.detail + " (" + buf + ")");
    failed += !r.pass;
  }
  out.kv("failed", std::to_string(failed));
  return failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Workbench for intuitionistic analysis: syntax, schemas, negative translation, "
               "realizability and the jump via bar induction."};
  app.require_subcommand(1);
  app.fallthrough();
  bool machine = false;
  app.add_flag("--machine", machine, "Emit key=value lines");
  Out out(machine);
  int status = 0;

  std::string text, name, body, bar_text, realizer = "builtin:zero", alpha, beta, n = "0", program, input = "0",
                                             trace, reg_path, rho_name, base = "one", step = "sum", eps = "e";
  std::vector<std::string> binds, substs, env_args, entries;
  bool literal = false, latex = false, simplify = false, repair = false, check = false, reduce = false;
  std::uint64_t fuel = 1000;
  std::size_t upto = 10, b = 2, d = 2;
  int worlds = 5;
  std::vector<int> only;

  auto* parse = app.add_subcommand("parse", "Parse a formula and report its shape");
  parse->add_option("formula", text)->required();
  parse->callback([&] { cmd_parse(out, text); });

  auto* print = app.add_subcommand("print", "Print a formula canonically");
  print->add_option("formula", text)->required();
  print->add_option("--subst", substs, "x=term, applied in order");
  print->add_flag("--reduce", reduce, "Lambda-reduce");
  print->callback([&] { cmd_print(out, text, substs, reduce); });

  auto* schema = app.add_subcommand("schema", "Instantiate an axiom schema");
  schema->add_option("kind", name)->required();
  schema->add_option("--body", body, "Schema body");
  schema->add_option("--bar", bar_text, "Bar predicate R (BIa, BI!)");
  schema->add_option("--bind", binds, "role=var[,role=var...]");
  schema->add_flag("--paper-literal", literal, "MP exactly as displayed, as a formula");
  schema->add_flag("--latex", latex, "MP exactly as displayed, as LaTeX source");
  schema->callback([&] { cmd_schema(out, name, body, bar_text, binds, literal, latex); });

  auto* theory = app.add_subcommand("theory", "List the schemas of a theory");
  theory->add_option("name", name)->required();
  theory->callback([&] { cmd_theory(out, name); });

  auto* tneg = app.add_subcommand("translate-neg", "Goedel-Gentzen negative translation");
  tneg->add_option("formula", text)->required();
  tneg->add_flag("--simplify-decidable-atoms", simplify, "Drop ~~ in front of equations");
  tneg->add_flag("--repair-bi", repair, "Restore the bar hypothesis of a BI1 instance");
  tneg->add_flag("--check", check, "Report whether the result is negative");
  tneg->callback([&] { status = cmd_translate(out, text, simplify, repair, check); });

  auto* oracle = app.add_subcommand("oracle", "Propositional decision procedures");
  oracle->add_option("logic", name)->required()->check(CLI::IsMember({"classical", "ipc"}));
  oracle->add_option("formula", text)->required();
  oracle->add_option("--worlds", worlds, "Countermodel size bound (1..5)")->check(CLI::Range(1, 5));
  oracle->callback([&] { cmd_oracle(out, name, text, worlds); });

  auto* realize = app.add_subcommand("realize", "Function-realizability");
  realize->require_subcommand(1);
  auto* rcheck = realize->add_subcommand("check", "Check that a realizer realizes a formula");
  rcheck->add_option("--formula", text)->required();
  rcheck->add_option("--realizer", realizer, "builtin:mp|dns1|zero, an element spec, or a file holding one");
  rcheck->add_option("--env", env_args, "x=N | x<N | @a=SPEC | @a~SPEC (universe member; @* for any)");
  rcheck->add_option("--fuel", fuel);
  rcheck->callback([&] { status = cmd_realize_check(out, text, realizer, env_args, fuel); });
  auto* rtrans = realize->add_subcommand("transform", "Print the formula 'eps realizes f'");
  rtrans->add_option("--formula", text)->required();
  rtrans->add_option("--eps", eps);
  rtrans->callback([&] { cmd_realize_transform(out, text, eps); });
  auto* rapply = realize->add_subcommand("apply", "Continuous application {alpha}(n | beta)");
  rapply->add_option("--alpha", alpha)->required();
  rapply->add_option("--beta", beta)->required();
  rapply->add_option("-n", n);
  rapply->add_option("--fuel", fuel);
  rapply->callback([&] { cmd_realize_apply(out, alpha, beta, n, fuel); });

  auto* jump = app.add_subcommand("jump", "Oracle machines and the jump");
  jump->require_subcommand(1);
  auto* demo = jump->add_subcommand("demo", "Build beta from alpha and check rho along it");
  demo->add_option("--alpha", alpha, "Element spec (default: the registry's)");
  demo->add_option("--upto", upto);
  demo->add_option("--registry", reg_path);
  demo->add_option("--fuel", fuel);
  demo->callback([&] { status = cmd_jump_demo(out, alpha, upto, reg_path, fuel); });
  auto* jrun = jump->add_subcommand("run", "Run a program");
  jrun->add_option("--program", program)->required();
  jrun->add_option("--input", input);
  jrun->add_option("--alpha", alpha)->required();
  jrun->add_option("--fuel", fuel);
  jrun->callback([&] { cmd_jump_run(out, program, input, alpha, fuel); });
  auto* jcheck = jump->add_subcommand("check", "Decide T^alpha(e, x, y)");
  jcheck->add_option("--program", program)->required();
  jcheck->add_option("--input", input);
  jcheck->add_option("--trace", trace)->required();
  jcheck->add_option("--alpha", alpha)->required();
  jcheck->callback([&] { status = cmd_jump_check(out, program, input, trace, alpha); });
  bool not_a_mode = false;
  auto* jrho = jump->add_subcommand("rho", "Evaluate rho(s), or not-A(s) with --not-a");
  jrho->add_option("s", n)->required();
  jrho->add_option("--alpha", alpha);
  jrho->add_option("--registry", reg_path);
  jrho->add_flag("--not-a", not_a_mode);
  jrho->add_option("--fuel", fuel);
  jrho->callback([&] { cmd_jump_rho(out, n, alpha, reg_path, not_a_mode, fuel); });

  auto* bar = app.add_subcommand("bar", "Bars on the b-branching tree");
  bar->require_subcommand(1);
  auto* bverify = bar->add_subcommand("verify", "Check that every path hits the bar");
  auto* brec = bar->add_subcommand("recurse", "Bar recursion from the leaves up");
  for (auto* c : {bverify, brec}) {
    c->add_option("--rho", rho_name, "builtin:never|uniform<d>|solovay")->required();
    c->add_option("-b", b)->check(CLI::Range(1, 64));
    c->add_option("-d", d)->check(CLI::Range(1, 64));
  }
  brec->add_option("--base", base, "one|length");
  brec->add_option("--step", step, "sum|max");
  bverify->callback([&] { status = cmd_bar_verify(out, rho_name, b, d); });
  brec->callback([&] { status = cmd_bar_recurse(out, rho_name, b, d, base, step); });

  auto* seq = app.add_subcommand("seq", "Sequence numbers");
  seq->require_subcommand(1);
  auto* senc = seq->add_subcommand("encode", "Code of a list of naturals");
  senc->add_option("entries", entries);
  senc->callback([&] { cmd_seq_encode(out, entries); });
  auto* sdec = seq->add_subcommand("decode", "Entries of a sequence number");
  sdec->add_option("code", n)->required();
  sdec->callback([&] { cmd_seq_decode(out, n); });

  auto* acc = app.add_subcommand("acceptance", "Acceptance suite");
  acc->require_subcommand(1);
  auto* arun = acc->add_subcommand("run", "Run the acceptance criteria");
  arun->add_option("--only", only, "Criterion numbers")->delimiter(',');
  arun->callback([&] { status = cmd_acceptance(out, only); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const ParseError& e) {
    if (machine) {
      std::cout << "error=" << (e.kind() == ParseError::Kind::Syntax ? "syntax" : "sort") << "\nline=" << e.line()
                << "\ncolumn=" << e.column() << "\nmessage=" << e.what() << "\n";
    } else {
      std::cerr << "error: " << e.what() << "\n";
    }
    return 1;
  } catch (const std::exception& e) {
    if (machine)
      std::cout << "error=domain\nmessage=" << e.what() << "\n";
    else
      std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return status;
}
