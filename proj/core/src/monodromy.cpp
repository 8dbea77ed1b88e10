#include <map>

#include "ellwall/errors.hpp"
#include "ellwall/fock.hpp"

namespace ellwall {

FockState monodromy_f(const FockState& s, int n) {
  FockState out(-n - s.charge());
  for (const auto& [m, c] : s.terms()) {
    if (energy(m) != n)
      throw DomainError("monodromy_f: term of weight " + std::to_string(energy(m)) + " in weight-" +
                        std::to_string(n) + " input");
    int sign = 1;
    for (const auto& x : m)
      if (x.k % 2 == 0) sign = -sign;
    out.add(m, c * QH(sign));
  }
  return out;
}

FockState monodromy_s(const FockState& s, int truncation, const ExtendedConventions& ext) {
  int need = std::max(0, s.max_energy());
  if (truncation < need)
    throw TruncationError("monodromy_s needs truncation >= " + std::to_string(need));
  std::map<std::pair<int, int>, OperatorExpr> cache;
  auto w = [&](const Mode& md) -> const OperatorExpr& {
    auto key = std::make_pair(static_cast<int>(md.k), static_cast<int>(md.label));
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, w_general(1, -md.k, md.label, truncation, ext)).first;
    return it->second;
  };
  std::optional<FockState> out;
  for (const auto& [m, c] : s.terms()) {
    FockState v = FockState::vacuum(s.charge());
    for (auto it = m.rbegin(); it != m.rend(); ++it) v = w(*it).apply(v);
    v *= c;
    if (!out) {
      out = v;
    } else {
      *out += v;
    }
  }
  if (!out) return FockState(s.charge());
  return *out;
}

}  // namespace ellwall
