#include "fim/machine.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace fim {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  return out;
}

std::size_t parse_index(const std::string& tok, const std::string& context) {
  try {
    return static_cast<std::size_t>(to_u64(parse_nat(tok)));
  } catch (const Error&) {
    throw MachineError("bad operand '" + tok + "' in '" + context + "'");
  }
}

}  // namespace

OracleProgram::OracleProgram(std::vector<Instr> code) : code_(std::move(code)), registers_(1) {
  if (code_.empty()) throw MachineError("empty program");
  if (code_.back().op != OpCode::Halt) throw MachineError("the last instruction must be HALT");
  for (const auto& i : code_) {
    registers_ = std::max(registers_, i.a + 1);
    if (i.op == OpCode::Query) registers_ = std::max(registers_, i.b + 1);
    if (i.op == OpCode::Jz && i.b >= code_.size())
      throw MachineError("jump target " + std::to_string(i.b) + " out of range");
  }
  if (registers_ > 16) throw MachineError("too many registers");
}

std::string OracleProgram::to_string() const {
  std::ostringstream os;
  for (std::size_t k = 0; k < code_.size(); ++k) {
    const auto& i = code_[k];
    if (k) os << ", ";
    switch (i.op) {
      case OpCode::Inc: os << "INC " << i.a; break;
      case OpCode::Dec: os << "DEC " << i.a; break;
      case OpCode::Jz: os << "JZ " << i.a << " " << i.b; break;
      case OpCode::Query: os << "QUERY " << i.a << " " << i.b; break;
      case OpCode::Halt: os << "HALT " << i.a; break;
    }
  }
  return os.str();
}

OracleProgram parse_program(const std::string& text) {
  std::vector<Instr> code;
  for (const auto& part : split(text, ',')) {
    std::istringstream is(trim(part));
    std::string m;
    std::vector<std::string> ops;
    is >> m;
    for (std::string t; is >> t;) ops.push_back(t);
    auto want = [&](std::size_t n) {
      if (ops.size() != n) throw MachineError("'" + m + "' takes " + std::to_string(n) + " operand(s)");
    };
    Instr i{OpCode::Halt};
    if (m == "INC" || m == "DEC" || m == "HALT") {
      want(1);
      i.op = m == "INC" ? OpCode::Inc : m == "DEC" ? OpCode::Dec : OpCode::Halt;
      i.a = parse_index(ops[0], part);
    } else if (m == "JZ" || m == "QUERY") {
      want(2);
      i.op = m == "JZ" ? OpCode::Jz : OpCode::Query;
      i.a = parse_index(ops[0], part);
      i.b = parse_index(ops[1], part);
    } else {
      throw MachineError("unknown instruction '" + trim(part) + "'");
    }
    code.push_back(i);
  }
  return OracleProgram(std::move(code));
}

Config initial_config(const OracleProgram& e, const Nat& x) {
  Config c(e.stride(), Nat(0));
  c[1] = x;
  return c;
}

bool is_halting(const OracleProgram& e, const Config& c) {
  return c[0] < e.code().size() && e.code()[static_cast<std::size_t>(c[0])].op == OpCode::Halt;
}

Config step(const OracleProgram& e, const Config& c, const BaireElement& alpha) {
  Config n = c;
  const auto& i = e.code().at(static_cast<std::size_t>(c[0]));
  auto reg = [&](std::size_t r) -> Nat& { return n[r + 1]; };
  n.back() = 0;
  switch (i.op) {
    case OpCode::Inc:
      reg(i.a) += 1;
      n[0] += 1;
      break;
    case OpCode::Dec:
      if (reg(i.a) > 0) reg(i.a) -= 1;
      n[0] += 1;
      break;
    case OpCode::Jz:
      n[0] = reg(i.a) == 0 ? Nat(i.b) : n[0] + 1;
      break;
    case OpCode::Query: {
      Nat v = alpha(c[i.a + 1]);
      reg(i.b) = v;
      n.back() = v + 1;
      n[0] += 1;
      break;
    }
    case OpCode::Halt:
      throw MachineError("step from a halting configuration");
  }
  return n;
}

std::optional<Run> run(const OracleProgram& e, const Nat& x, const BaireElement& alpha, std::uint64_t fuel) {
  Config c = initial_config(e, x);
  std::vector<Nat> flat(c.begin(), c.end());
  for (std::uint64_t s = 0;; ++s) {
    if (is_halting(e, c)) {
      Nat out = c[e.code()[static_cast<std::size_t>(c[0])].a + 1];
      SeqNum trace(std::move(flat));
      Nat y = trace.value();
      return Run{std::move(trace), std::move(y), std::move(out), static_cast<std::size_t>(s)};
    }
    if (s >= fuel) return std::nullopt;
    c = step(e, c, alpha);
    flat.insert(flat.end(), c.begin(), c.end());
  }
}

bool t_check_entries(const OracleProgram& e, const Nat& x, const std::vector<Nat>& entries,
                     const BaireElement& alpha) {
  const std::size_t w = e.stride();
  if (entries.empty() || entries.size() % w != 0) return false;
  Config c = initial_config(e, x);
  for (std::size_t at = 0;; at += w) {
    if (!std::equal(c.begin(), c.end(), entries.begin() + static_cast<std::ptrdiff_t>(at))) return false;
    bool last = at + w == entries.size();
    if (is_halting(e, c)) return last;
    if (last) return false;
    c = step(e, c, alpha);
  }
}

bool t_check(const OracleProgram& e, const Nat& x, const Nat& y, const BaireElement& alpha) {
  auto entries = decode(y);
  return entries && t_check_entries(e, x, *entries, alpha);
}

std::optional<Status> certify(const OracleProgram& e, const Nat& x, const BaireElement& alpha,
                              std::uint64_t fuel) {
  std::set<Config> seen;
  Config c = initial_config(e, x);
  for (std::uint64_t s = 0; s <= fuel; ++s) {
    if (is_halting(e, c)) {
      auto r = run(e, x, alpha, s);
      Status st;
      st.halts = true;
      st.y = r->y;
      st.output = r->output;
      return st;
    }
    if (!seen.insert(c).second) {
      Status st;
      st.loop = c;
      return st;
    }
    c = step(e, c, alpha);
  }
  return std::nullopt;
}

bool verify_status(const OracleProgram& e, const Nat& x, const BaireElement& alpha, const Status& s,
                   std::uint64_t fuel) {
  if (s.halts) return t_check(e, x, s.y, alpha);
  // The loop configuration must occur twice; determinism does the rest.
  Config c = initial_config(e, x);
  int hits = 0;
  for (std::uint64_t i = 0; i <= fuel; ++i) {
    if (c == s.loop && ++hits == 2) return true;
    if (is_halting(e, c)) return false;
    c = step(e, c, alpha);
  }
  return false;
}

const Status& HaltingInfo::at(std::size_t k) const {
  auto it = diagonal.find(k);
  if (it == diagonal.end()) throw MachineError("no halting certificate for program " + std::to_string(k));
  return it->second;
}

const OracleProgram& Registry::program(std::size_t k) const {
  if (k >= entries.size())
    throw MachineError("program index " + std::to_string(k) + " outside the registry (size " +
                       std::to_string(entries.size()) + ")");
  return entries[k].program;
}

std::string format_status(const Status& s) {
  if (s.halts) return "halts=" + s.y.str();
  std::string out = "diverges@";
  for (std::size_t i = 0; i < s.loop.size(); ++i) out += (i ? "." : "") + s.loop[i].str();
  return out;
}

Registry parse_registry(const std::string& text) {
  Registry r;
  std::istringstream is(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    auto t = trim(line);
    if (t.empty()) continue;
    if (t[0] == '#') {
      auto body = trim(t.substr(1));
      if (body.rfind("alpha:", 0) == 0) r.alpha_spec = trim(body.substr(6));
      continue;
    }
    auto where = " (registry line " + std::to_string(lineno) + ")";
    auto semi = t.find(';');
    auto head = trim(t.substr(0, semi));
    auto sp = head.find(' ');
    if (sp == std::string::npos) throw MachineError("missing program" + where);
    std::size_t index = parse_index(head.substr(0, sp), t);
    if (index != r.entries.size()) throw MachineError("indices must be consecutive from 0" + where);
    RegistryEntry entry{index, parse_program(head.substr(sp + 1)), std::nullopt};
    if (semi != std::string::npos) {
      auto st = trim(t.substr(semi + 1));
      Status s;
      if (st.rfind("halts=", 0) == 0) {
        s.halts = true;
        s.y = parse_nat(st.substr(6));
      } else if (st.rfind("diverges@", 0) == 0) {
        for (const auto& p : split(st.substr(9), '.')) s.loop.push_back(parse_nat(p));
        if (s.loop.size() != entry.program.stride()) throw MachineError("loop configuration has wrong width" + where);
      } else {
        throw MachineError("bad status '" + st + "'" + where);
      }
      entry.recorded = s;
    }
    r.entries.push_back(std::move(entry));
  }
  return r;
}

Registry load_registry(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MachineError("cannot read registry " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_registry(ss.str());
}

const Registry& default_registry() {
  static const Registry r = load_registry(std::string(FIM_DATA_DIR) + "/registry.txt");
  return r;
}

HaltingInfo recorded_halting_info(const Registry& r, const BaireElement& alpha, std::uint64_t fuel) {
  HaltingInfo h;
  for (const auto& e : r.entries) {
    if (!e.recorded) throw MachineError("program " + std::to_string(e.index) + " has no recorded status");
    Status s = *e.recorded;
    if (!verify_status(e.program, Nat(e.index), alpha, s, fuel))
      throw MachineError("recorded status of program " + std::to_string(e.index) + " does not verify");
    if (s.halts) s.output = run(e.program, Nat(e.index), alpha, fuel)->output;
    h.diagonal.emplace(e.index, std::move(s));
  }
  return h;
}

HaltingInfo compute_halting_info(const Registry& r, const BaireElement& alpha, std::size_t upto,
                                 std::uint64_t fuel) {
  HaltingInfo h;
  for (std::size_t k = 0; k < upto && k < r.size(); ++k)
    if (auto s = certify(r.program(k), Nat(k), alpha, fuel)) h.diagonal.emplace(k, std::move(*s));
  return h;
}

}  // namespace fim
