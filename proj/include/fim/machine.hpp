#pragma once

// Toy oracle register machines, their halting traces and the trace predicate
// T^alpha(e, x, y).
//
// Registers r0..r{R-1} hold naturals; the input sits in r0. A configuration
// is (pc, r0, ..., r{R-1}, pending) where pending is 1 + the oracle answer
// received by the step that produced it, else 0. A trace is the flat
// sequence number of all configurations of a run, initial to halting, each
// occupying R + 2 consecutive entries. Runs are deterministic, so a halting
// run has exactly one trace; "the least y with T" is that y.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fim/baire.hpp"
#include "fim/seqcode.hpp"

namespace fim {

enum class OpCode { Inc, Dec, Jz, Query, Halt };

struct Instr {
  OpCode op;
  std::size_t a = 0;  // register (Query: address register)
  std::size_t b = 0;  // Jz: target; Query: destination register
};

class MachineError : public Error {
 public:
  using Error::Error;
};

class OracleProgram {
 public:
  /// Validates: non-empty, jump targets in range, last instruction HALT.
  explicit OracleProgram(std::vector<Instr> code);

  const std::vector<Instr>& code() const { return code_; }
  std::size_t registers() const { return registers_; }
  std::size_t stride() const { return registers_ + 2; }
  std::string to_string() const;

 private:
  std::vector<Instr> code_;
  std::size_t registers_;
};

/// Comma-separated mnemonics, e.g. "QUERY 0 1, HALT 1".
OracleProgram parse_program(const std::string& text);

using Config = std::vector<Nat>;

Config initial_config(const OracleProgram& e, const Nat& x);
bool is_halting(const OracleProgram& e, const Config& c);
/// The successor configuration; requires a non-halting c.
Config step(const OracleProgram& e, const Config& c, const BaireElement& alpha);

struct Run {
  SeqNum trace;  // flat entries
  Nat y;         // trace code
  Nat output;
  std::size_t steps;
};

/// Runs e on x for at most `fuel` steps.
std::optional<Run> run(const OracleProgram& e, const Nat& x, const BaireElement& alpha, std::uint64_t fuel);

/// T^alpha(e, x, y).
bool t_check(const OracleProgram& e, const Nat& x, const Nat& y, const BaireElement& alpha);
/// Same predicate on already decoded entries.
bool t_check_entries(const OracleProgram& e, const Nat& x, const std::vector<Nat>& entries,
                     const BaireElement& alpha);

struct Status {
  bool halts = false;
  Nat y;            // trace code when halting
  Nat output;       // when halting
  Config loop;      // a configuration that recurs, when diverging
};

/// Halting status of a run, certified by a trace or a repeated configuration;
/// nullopt when neither shows up within fuel.
std::optional<Status> certify(const OracleProgram& e, const Nat& x, const BaireElement& alpha, std::uint64_t fuel);

/// Checks a claimed status against the machine; `fuel` bounds the loop replay.
bool verify_status(const OracleProgram& e, const Nat& x, const BaireElement& alpha, const Status& s,
                   std::uint64_t fuel);

/// Certified statuses of the diagonal runs T^alpha(k, k, .), by program index.
struct HaltingInfo {
  std::map<std::size_t, Status> diagonal;

  bool covers(std::size_t k) const { return diagonal.count(k) > 0; }
  /// Throws Error for indices without a certificate.
  const Status& at(std::size_t k) const;
};

struct RegistryEntry {
  std::size_t index;
  OracleProgram program;
  std::optional<Status> recorded;
};

/// Curated program list. Position k is machine index k.
struct Registry {
  std::string alpha_spec;  // element the recorded statuses refer to
  std::vector<RegistryEntry> entries;

  const OracleProgram& program(std::size_t k) const;
  std::size_t size() const { return entries.size(); }
};

/// Line format: `<index> <mnemonics> ; halts=<y>` or `... ; diverges@<c0.c1...>`,
/// '#' comments, and an optional `# alpha: <element spec>` header.
Registry parse_registry(const std::string& text);
Registry load_registry(const std::string& path);
/// The registry shipped in data/registry.txt.
const Registry& default_registry();
std::string format_status(const Status& s);

/// Statuses recorded in the registry, each verified for `alpha`; throws
/// MachineError on a bad certificate or a missing status.
HaltingInfo recorded_halting_info(const Registry& r, const BaireElement& alpha, std::uint64_t fuel = 100000);
/// Statuses found by simulation; indices without a certificate within fuel
/// are left out.
HaltingInfo compute_halting_info(const Registry& r, const BaireElement& alpha, std::size_t upto,
                                 std::uint64_t fuel = 100000);

}  // namespace fim
