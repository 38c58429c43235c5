#include "fim/jump.hpp"

namespace fim {

int rho_seq(const SeqNum& s, const JumpContext& ctx) {
  const std::size_t len = s.length();
  // case 2
  for (std::size_t j = 0; j < len; j += 2)
    if (s[j] != ctx.alpha(Nat(j / 2))) return 0;
  // case 3
  for (std::size_t j = 1; j < len; j += 2) {
    if (s[j] != 0) continue;
    std::size_t k = j / 2;
    const auto& e = ctx.registry.program(k);
    for (std::size_t y = 0; y <= len; ++y)
      if (t_check(e, Nat(k), Nat(y), ctx.alpha)) return 0;
  }
  // case 4
  for (std::size_t j = 1; j < len; j += 2) {
    if (s[j] == 0) continue;
    std::size_t k = j / 2;
    if (!t_check(ctx.registry.program(k), Nat(k), s[j] - 1, ctx.alpha)) return 0;
  }
  return 1;
}

int rho(const Nat& s, const JumpContext& ctx) {
  auto seq = as_seq(s);
  if (!seq) return 1;  // case 1
  return rho_seq(*seq, ctx);
}

bool not_a_seq(const SeqNum& s, const BaireElement& alpha, const HaltingInfo& h) {
  for (std::size_t j = 0; j < s.length(); ++j) {
    std::size_t k = j / 2;
    if (j % 2 == 0) {
      if (s[j] != alpha(Nat(k))) return false;
      continue;
    }
    const auto& st = h.at(k);
    Nat want = st.halts ? st.y + 1 : Nat(0);
    if (s[j] != want) return false;
  }
  return true;
}

bool not_a(const Nat& s, const BaireElement& alpha, const HaltingInfo& h) {
  auto seq = as_seq(s);
  return seq && not_a_seq(*seq, alpha, h);
}

BaireElement build_beta(const BaireElement& alpha, const HaltingInfo& h, std::size_t upto) {
  std::vector<Nat> prefix;
  prefix.reserve(2 * upto);
  for (std::size_t n = 0; n < upto; ++n) {
    const auto& st = h.at(n);
    prefix.push_back(alpha(Nat(n)));
    prefix.push_back(st.halts ? st.y + 1 : Nat(0));
  }
  return BaireElement::tabled(std::move(prefix), 0);
}

}  // namespace fim
