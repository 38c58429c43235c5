#include "fim/baire.hpp"

#include <sstream>

namespace fim {

BaireElement::BaireElement(Descriptor d) : d_(std::make_shared<const Descriptor>(std::move(d))) {}

BaireElement BaireElement::constant(Nat v) { return BaireElement(FiniteSupport{{}, std::move(v)}); }

BaireElement BaireElement::identity() {
  return program("id", [](const Nat& n, std::uint64_t) { return std::optional<Nat>(n); }, 1);
}

BaireElement BaireElement::finite_support(std::map<Nat, Nat> points, Nat fallback) {
  return BaireElement(FiniteSupport{std::move(points), std::move(fallback)});
}

BaireElement BaireElement::tabled(std::vector<Nat> prefix, Nat fallback) {
  return BaireElement(Tabled{std::move(prefix), std::move(fallback)});
}

BaireElement BaireElement::program(std::string name,
                                   std::function<std::optional<Nat>(const Nat&, std::uint64_t)> fn,
                                   std::uint64_t fuel) {
  return BaireElement(Program{std::move(name), std::move(fn), fuel});
}

BaireElement BaireElement::seq_program(std::string name,
                                       std::function<std::optional<Nat>(const SeqNum&, std::uint64_t)> on_seq,
                                       std::uint64_t fuel) {
  auto on_nat = [on_seq](const Nat& n, std::uint64_t f) -> std::optional<Nat> {
    auto s = as_seq(n);
    if (!s) return Nat(0);
    return on_seq(*s, f);
  };
  return BaireElement(Program{std::move(name), on_nat, fuel, std::move(on_seq)});
}

std::optional<Nat> BaireElement::eval_seq(const SeqNum& s, std::size_t guard_bits) const {
  if (auto* p = std::get_if<Program>(d_.get()); p && p->on_seq) return p->on_seq(s, p->fuel);
  return eval(s.value(guard_bits));
}

std::optional<Nat> BaireElement::eval(const Nat& n) const {
  if (auto* f = std::get_if<FiniteSupport>(d_.get())) {
    auto it = f->points.find(n);
    return it == f->points.end() ? f->fallback : it->second;
  }
  if (auto* t = std::get_if<Tabled>(d_.get())) {
    if (n < t->prefix.size()) return t->prefix[static_cast<std::size_t>(n)];
    return t->fallback;
  }
  const auto& p = std::get<Program>(*d_);
  return p.fn(n, p.fuel);
}

Nat BaireElement::operator()(const Nat& n) const {
  auto v = eval(n);
  if (!v) throw UndefinedValue(describe() + " has no value at " + n.str() + " within its fuel");
  return *v;
}

std::string BaireElement::describe() const {
  std::ostringstream os;
  if (auto* f = std::get_if<FiniteSupport>(d_.get())) {
    if (f->points.empty()) {
      os << "const:" << f->fallback;
    } else {
      os << "support:";
      bool first = true;
      for (const auto& [k, v] : f->points) {
        os << (first ? "" : ",") << k << "=" << v;
        first = false;
      }
      os << ";default=" << f->fallback;
    }
  } else if (auto* t = std::get_if<Tabled>(d_.get())) {
    os << "table:";
    for (std::size_t i = 0; i < t->prefix.size(); ++i) os << (i ? "," : "") << t->prefix[i];
    os << ";default=" << t->fallback;
  } else {
    auto& p = std::get<Program>(*d_);
    os << "program:" << p.name;
  }
  return os.str();
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  return out;
}

}  // namespace

BaireElement parse_baire(const std::string& spec) {
  if (spec == "id") return BaireElement::identity();
  auto colon = spec.find(':');
  if (colon == std::string::npos) throw Error("bad element spec '" + spec + "'");
  std::string kind = spec.substr(0, colon);
  std::string rest = spec.substr(colon + 1);
  Nat fallback = 0;
  if (auto semi = rest.find(';'); semi != std::string::npos) {
    std::string tail = rest.substr(semi + 1);
    if (tail.rfind("default=", 0) != 0) throw Error("bad element spec '" + spec + "'");
    fallback = parse_nat(tail.substr(8));
    rest = rest.substr(0, semi);
  }
  if (kind == "const") return BaireElement::constant(parse_nat(rest));
  if (kind == "table") {
    std::vector<Nat> xs;
    if (!rest.empty())
      for (const auto& p : split(rest, ',')) xs.push_back(parse_nat(p));
    return BaireElement::tabled(std::move(xs), fallback);
  }
  if (kind == "support") {
    std::map<Nat, Nat> points;
    if (!rest.empty())
      for (const auto& p : split(rest, ',')) {
        auto eqpos = p.find('=');
        if (eqpos == std::string::npos) throw Error("bad support entry '" + p + "'");
        points[parse_nat(p.substr(0, eqpos))] = parse_nat(p.substr(eqpos + 1));
      }
    return BaireElement::finite_support(std::move(points), fallback);
  }
  throw Error("unknown element kind '" + kind + "'");
}

}  // namespace fim
