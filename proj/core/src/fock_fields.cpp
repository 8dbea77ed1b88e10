#include <algorithm>
#include <cstdlib>
#include <deque>
#include <functional>
#include <mutex>

#include "ellwall/errors.hpp"
#include "ellwall/fock.hpp"

namespace ellwall {

namespace {

struct Partition {
  std::vector<int> parts;  // descending
  Rational inv_z;          // 1 / z_lambda
};

// Partitions of each size up to n, cached process-wide.
const std::vector<Partition>& partitions_of(int n) {
  static std::mutex mu;
  static std::deque<std::vector<Partition>> cache;  // deque: references stay valid
  std::lock_guard<std::mutex> lock(mu);
  while (static_cast<int>(cache.size()) <= n) {
    int size = static_cast<int>(cache.size());
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int left, int max_part) {
      if (left == 0) {
        Rational z = 1;
        std::size_t i = 0;
        while (i < cur.size()) {
          std::size_t j = i;
          while (j < cur.size() && cur[j] == cur[i]) ++j;
          int mult = static_cast<int>(j - i);
          for (int t = 1; t <= mult; ++t) z *= static_cast<long>(cur[i]) * t;
          i = j;
        }
        out.push_back({cur, 1 / z});
        return;
      }
      for (int p = std::min(left, max_part); p >= 1; --p) {
        cur.push_back(p);
        rec(left - p, p);
        cur.pop_back();
      }
    };
    rec(size, size);
    cache.push_back(std::move(out));
  }
  return cache[n];
}

Monomial as_modes(const std::vector<int>& parts, Label l) {
  Monomial m;
  m.reserve(parts.size());
  for (int p : parts) m.push_back(Mode{static_cast<std::int16_t>(p), l});
  return m;
}

Rational power(const Rational& q, std::size_t e) {
  Rational r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= q;
  return r;
}

int pullback_scale(Label l, int n) {
  switch (l) {
    case Label::E:
      return 1;
    case Label::SigmaPlus:
    case Label::SigmaMinus:
      return n;
    case Label::Pt:
      return n * n;
  }
  return 1;
}

int odd_count(const Monomial& m) {
  int n = 0;
  for (const auto& x : m)
    if (is_odd(x.label)) ++n;
  return n;
}

// :x y: with creators to the left, annihilators to the right, zero modes after
// the lattice shift. No contractions.
OperatorExpr normal_product(const OperatorExpr& x, const OperatorExpr& y, int truncation) {
  OperatorExpr out(truncation);
  for (const auto& [k1, c1] : x.terms()) {
    for (const auto& [k2, c2] : y.terms()) {
      if (energy(k1.annihilators) + energy(k2.annihilators) > truncation) continue;
      Monomial cre = k1.creators;
      cre.insert(cre.end(), k2.creators.begin(), k2.creators.end());
      Monomial ann = k1.annihilators;
      ann.insert(ann.end(), k2.annihilators.begin(), k2.annihilators.end());
      int s1 = canonicalize(cre);
      int s2 = canonicalize(ann);
      if (s1 == 0 || s2 == 0) continue;
      int sign = s1 * s2;
      if ((odd_count(k1.annihilators) & 1) && (odd_count(k2.creators) & 1)) sign = -sign;
      out.add_term(OpKey{ann, k1.shift + k2.shift, k1.cpow + k2.cpow, cre}, c1 * c2 * QH(sign));
    }
  }
  return out;
}

using Field = std::function<OperatorExpr(int)>;

// Mode z^{-n} of :f(z) g(z):, with f, g having z-degree shifts df, dg: mode
// i of f multiplies z^{-i-df}. Assumes f(i) vanishes for i > N + 4 and g(j)
// for j > N.
OperatorExpr field_normal_product(const Field& f, int df, const Field& g, int dg, int n, int truncation) {
  OperatorExpr out(truncation);
  // z^{-i-df} z^{-j-dg} = z^{-n}  =>  j = n - i - df - dg
  for (int i = -truncation - std::abs(n) - std::abs(df + dg) - 1; i <= truncation + 4; ++i) {
    int j = n - i - df - dg;
    if (j > truncation) continue;
    OperatorExpr fi = f(i);
    if (fi.is_zero()) continue;
    OperatorExpr gj = g(j);
    if (gj.is_zero()) continue;
    out += normal_product(fi, gj, truncation);
  }
  return out;
}

OperatorExpr sigma_mode(int a, int b, Label l, int truncation) {
  // z :alpha(s, z) Gamma_a(z):, mode b = sum_{j != 0} :alpha_j(s) Gamma_{a,(b - j)}:.
  VertexField gamma(a, truncation);
  OperatorExpr out(truncation);
  for (int j = b - truncation; j <= truncation; ++j) {
    if (j == 0) continue;
    OperatorExpr g = gamma.mode(b - j);
    if (g.is_zero()) continue;
    Mode md{static_cast<std::int16_t>(std::abs(j)), l};
    for (const auto& [key, c] : g.terms()) {
      OpKey k = key;
      if (j < 0) {
        k.creators.push_back(md);
        if (canonicalize(k.creators) == 0) continue;
      } else {
        if (energy(k.annihilators) + j > truncation) continue;
        k.annihilators.push_back(md);
        if (canonicalize(k.annihilators) == 0) continue;
      }
      out.add_term(k, c);
    }
  }
  return out;
}

OperatorExpr d_mode(int m, int n, int truncation, const ExtendedConventions& ext) {
  const int N = truncation;
  VertexField gamma(m, N);
  Field g = [&](int i) { return gamma.mode(i); };
  auto alpha = [N](Label l) -> Field { return [N, l](int i) { return OperatorExpr::mode(i, l, N); }; };
  // D applied to a field with modes F_(i) (coefficient of z^{-i}).
  auto dz = [&](const Field& f, int i) -> OperatorExpr {
    if (ext.dz == DzConvention::Euler) return f(i) * QH(-i);
    return f(i - 1) * QH(-(i - 1));
  };

  OperatorExpr out(N);
  // m z^2 :omega(z) Gamma(z):, omega = :alpha(E) alpha(pt): + :alpha(s+) alpha(s-):, z-degree 2.
  Field omega = [&](int i) {
    OperatorExpr w = field_normal_product(alpha(Label::E), 1, alpha(Label::Pt), 1, i, N);
    w += field_normal_product(alpha(Label::SigmaPlus), 1, alpha(Label::SigmaMinus), 1, i, N);
    return w;
  };
  // Modes of z^2 X(z): (z^2 X)_(n) = X_(n+2).
  out += field_normal_product(omega, 0, g, 0, n + 2, N) * QH(m);
  out += dz(g, n) * QH(m);
  Field zag = [&](int i) { return field_normal_product(alpha(Label::Pt), 0, g, 0, i, N); };
  out -= dz(zag, n);
  // d/dz alpha(E, z) has modes -(i+1) alpha_i z^{-i-2}; times m for alpha(mE).
  Field dalpha = [&](int i) { return OperatorExpr::mode(i, Label::E, N) * QH(-(i + 1) * m); };
  out -= field_normal_product(dalpha, 2, g, 0, n + 2, N) * QH(m);
  return out;
}

}  // namespace

OperatorExpr w_small(int n, Label l, int truncation) {
  if (n == 0) throw DomainError("w^{0,0} is not a generator");
  int an = std::abs(n);
  return OperatorExpr::mode(n, l, truncation) * QH(rat(pullback_scale(l, an), an));
}

VertexField::VertexField(int m, int truncation) : m_(m), truncation_(truncation) {
  if (truncation < 0) throw DomainError("negative truncation");
}

OperatorExpr VertexField::mode(int n) const {
  OperatorExpr out(truncation_);
  if (m_ == 0) {
    if (n == 0) out.add_term(OpKey{}, QH(1));
    return out;
  }
  const Rational m(m_);
  const Rational minus_m(-m_);
  for (int mu = std::max(0, n); mu <= truncation_; ++mu) {
    int la = mu - n;
    const auto& ann = partitions_of(mu);
    const auto& cre = partitions_of(la);
    for (const auto& pm : ann) {
      Rational cm = power(minus_m, pm.parts.size()) * pm.inv_z;
      Monomial a = as_modes(pm.parts, Label::E);
      for (const auto& pl : cre) {
        Rational c = cm * power(m, pl.parts.size()) * pl.inv_z;
        out.add_term(OpKey{a, m_, 0, as_modes(pl.parts, Label::E)}, QH(c));
      }
    }
  }
  return out;
}

OperatorExpr w_general(int a, int b, Label l, int truncation, const ExtendedConventions& ext) {
  if (a == 0) return w_small(b, l, truncation);
  switch (l) {
    case Label::E:
      return VertexField(a, truncation).mode(b) * QH(rat(1, a));
    case Label::SigmaPlus:
    case Label::SigmaMinus:
      return sigma_mode(a, b, l, truncation);
    case Label::Pt:
      if (!ext.enabled)
        throw ConventionError("w^{a,b}_pt with a != 0 needs the extended conventions (omega, D_z)");
      return d_mode(a, b, truncation, ext);
  }
  throw DomainError("unknown label");
}

}  // namespace ellwall
