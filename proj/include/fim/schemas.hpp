#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fim/nat.hpp"
#include "fim/syntax.hpp"

namespace fim {

enum class SchemaKind { AC00, AC01, AC00Bang, QfAC00, Induction, OpenEq, BIa, BI1, BIBang, MP, DNS1 };

inline constexpr SchemaKind kAllSchemaKinds[] = {
    SchemaKind::AC00,      SchemaKind::AC01,   SchemaKind::AC00Bang, SchemaKind::QfAC00,
    SchemaKind::Induction, SchemaKind::OpenEq, SchemaKind::BIa,      SchemaKind::BI1,
    SchemaKind::BIBang,    SchemaKind::MP,     SchemaKind::DNS1};

std::string schema_name(SchemaKind k);
/// Accepts the canonical names plus a few aliases (e.g. "x26.3b" for BI1).
std::optional<SchemaKind> schema_from_name(const std::string& name);

class SchemaError : public Error {
 public:
  using Error::Error;
};

/// Inputs to a schema instance.
///
/// `bind` names the designated variables; roles per kind (defaults in parens):
///   AC00, AC00Bang, QfAC00: x (x), y (y), beta (b)
///   AC01: x (x), alpha (a), beta (b)
///   Induction: x (x)
///   OpenEq: x (x), y (y), alpha (a)
///   BIa, BIBang: w (w); `bar` is R with w free
///   BI1: w (w), rho (r)
///   MP: alpha (a)
///   DNS1: rho (r)
/// An explicitly bound beta must not be free in the body; auxiliary binders
/// (the path variable, the bar length, the extension index) are freshened.
struct SchemaArgs {
  std::optional<Formula> body;
  std::optional<Formula> bar;
  std::map<std::string, std::string> bind;
};

Formula instantiate(SchemaKind kind, const SchemaArgs& args);

/// True iff f has no unbounded number quantifier and no function quantifier.
bool is_qf_admissible(const Formula& f);

/// The MP display exactly as printed, including its stray inner quantifier.
Formula mp_paper_literal();
/// The same display as LaTeX source.
std::string mp_paper_literal_latex();

enum class TheoryId { IA1, IRA, BSK, FIM, BIminus };

std::string theory_name(TheoryId t);
std::optional<TheoryId> theory_from_name(const std::string& name);

struct TheoryInfo {
  std::set<SchemaKind> schemas;
  std::vector<std::string> notes;
  bool continuity_marker = false;  // FIM's continuity principle: listed, not instantiable
};

TheoryInfo theory_schemas(TheoryId t);

}  // namespace fim
