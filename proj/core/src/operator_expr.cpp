#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "ellwall/errors.hpp"
#include "ellwall/fock.hpp"

namespace ellwall {

namespace {

int odd_count(const Monomial& m) {
  int n = 0;
  for (const auto& x : m)
    if (is_odd(x.label)) ++n;
  return n;
}

// Canonical product a * b of two canonical monomials; sign 0 if it vanishes.
int merge(const Monomial& a, const Monomial& b, Monomial& out) {
  out.clear();
  out.reserve(a.size() + b.size());
  int sign = 1;
  int odd_left_in_a = odd_count(a);
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    bool take_a;
    if (i == a.size()) {
      take_a = false;
    } else if (j == b.size()) {
      take_a = true;
    } else if (a[i] == b[j]) {
      if (is_odd(a[i].label)) return 0;
      take_a = true;
    } else {
      take_a = mode_before(a[i], b[j]);
    }
    if (take_a) {
      if (is_odd(a[i].label)) --odd_left_in_a;
      out.push_back(a[i++]);
    } else {
      if (is_odd(b[j].label) && (odd_left_in_a & 1)) sign = -sign;
      out.push_back(b[j++]);
    }
  }
  return sign;
}

struct Contracted {
  Monomial rest;
  Rational coeff;
};

// Applies annihilators (rightmost first) to the creators of a monomial state.
std::vector<Contracted> contract(const Monomial& ann, const Monomial& state) {
  std::vector<Contracted> cur{{state, Rational(1)}};
  for (std::size_t idx = ann.size(); idx-- > 0;) {
    const Mode& a = ann[idx];
    bool a_odd = is_odd(a.label);
    std::map<Monomial, Rational, MonomialLess> next;
    for (const auto& [m, q] : cur) {
      int odd_before = 0;
      for (std::size_t j = 0; j < m.size(); ++j) {
        const Mode& c = m[j];
        if (c.k == a.k) {
          int p = label_pairing(a.label, c.label);
          if (p != 0) {
            Rational v = q * (a.k * p);
            if (a_odd && (odd_before & 1)) v = -v;
            Monomial rest = m;
            rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(j));
            auto [it, ins] = next.emplace(std::move(rest), v);
            if (!ins) it->second += v;
          }
        }
        if (is_odd(c.label)) ++odd_before;
      }
    }
    cur.clear();
    for (auto& [m, q] : next)
      if (sgn(q) != 0) cur.push_back({m, q});
    if (cur.empty()) break;
  }
  return cur;
}

struct WickTerm {
  Rational coeff;
  Monomial creators;
  Monomial annihilators;
};

// A C = sum coeff * creators' * annihilators' (subsequences, order kept).
void wick(const Monomial& a, std::size_t a_len, const Monomial& c, const Rational& scale,
          bool contracted, bool need_contraction, std::vector<WickTerm>& out) {
  if (a_len == 0 || c.empty()) {
    if (need_contraction && !contracted) return;
    out.push_back({scale, c, Monomial(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(a_len))});
    return;
  }
  const Mode& last = a[a_len - 1];
  bool last_odd = is_odd(last.label);
  int odd_before = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i].k == last.k) {
      int p = label_pairing(last.label, c[i].label);
      if (p != 0) {
        Rational v = scale * (last.k * p);
        if (last_odd && (odd_before & 1)) v = -v;
        Monomial rest = c;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
        wick(a, a_len - 1, rest, v, true, need_contraction, out);
      }
    }
    if (is_odd(c[i].label)) ++odd_before;
  }
  // Move `last` to the right of all of c.
  Rational s = scale;
  if (last_odd && (odd_count(c) & 1)) s = -s;
  std::size_t first_new = out.size();
  wick(a, a_len - 1, c, s, contracted, need_contraction, out);
  for (std::size_t t = first_new; t < out.size(); ++t) out[t].annihilators.push_back(last);
}

Rational binomial(int n, int k) {
  Rational r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

bool OpKeyLess::operator()(const OpKey& a, const OpKey& b) const {
  MonomialLess ml;
  if (ml(a.annihilators, b.annihilators)) return true;
  if (ml(b.annihilators, a.annihilators)) return false;
  if (a.shift != b.shift) return a.shift < b.shift;
  if (a.cpow != b.cpow) return a.cpow < b.cpow;
  return ml(a.creators, b.creators);
}

OperatorExpr OperatorExpr::identity(int truncation) { return scalar(QH(1), truncation); }

OperatorExpr OperatorExpr::scalar(const QH& q, int truncation) {
  OperatorExpr x(truncation);
  x.add_term(OpKey{}, q);
  return x;
}

OperatorExpr OperatorExpr::mode(int n, Label l, int truncation) {
  OperatorExpr x(truncation);
  if (n < 0) {
    x.add_term(OpKey{{}, 0, 0, {Mode{static_cast<std::int16_t>(-n), l}}}, QH(1));
  } else if (n > 0) {
    if (n <= truncation) x.add_term(OpKey{{Mode{static_cast<std::int16_t>(n), l}}, 0, 0, {}}, QH(1));
  } else {
    int p = label_pairing(l, Label::E);
    if (p != 0) x.add_term(OpKey{{}, 0, 1, {}}, QH(p));
  }
  return x;
}

OperatorExpr OperatorExpr::mode(int n, const CohClass& c, int truncation) {
  OperatorExpr x(truncation);
  for (Label l : kAllLabels)
    if (sgn(c.coeff(l)) != 0) x += mode(n, l, truncation) * QH(c.coeff(l));
  return x;
}

OperatorExpr OperatorExpr::charge_shift(int m, int truncation) {
  OperatorExpr x(truncation);
  x.add_term(OpKey{{}, m, 0, {}}, QH(1));
  return x;
}

int OperatorExpr::parity() const {
  int p = -2;
  for (const auto& [k, c] : terms_) {
    int q = (odd_count(k.creators) + odd_count(k.annihilators)) & 1;
    if (p == -2) {
      p = q;
    } else if (p != q) {
      return -1;
    }
  }
  return p == -2 ? 0 : p;
}

int OperatorExpr::max_creation_energy() const {
  int e = 0;
  for (const auto& [k, c] : terms_) e = std::max(e, energy(k.creators));
  return e;
}

int OperatorExpr::max_annihilation_energy() const {
  int e = 0;
  for (const auto& [k, c] : terms_) e = std::max(e, energy(k.annihilators));
  return e;
}

void OperatorExpr::add_term(const OpKey& key, const QH& coeff) {
  if (coeff.is_zero()) return;
  if (energy(key.annihilators) > truncation_) return;
  auto [it, inserted] = terms_.emplace(key, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

OperatorExpr& OperatorExpr::operator+=(const OperatorExpr& o) {
  truncation_ = std::min(truncation_, o.truncation_);
  if (!terms_.empty()) *this = truncated(truncation_);
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

OperatorExpr& OperatorExpr::operator-=(const OperatorExpr& o) {
  truncation_ = std::min(truncation_, o.truncation_);
  if (!terms_.empty()) *this = truncated(truncation_);
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

OperatorExpr& OperatorExpr::operator*=(const QH& q) {
  if (q.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, c] : terms_) c *= q;
  return *this;
}

OperatorExpr OperatorExpr::truncated(int n) const {
  OperatorExpr out(std::min(n, truncation_));
  for (const auto& [k, c] : terms_)
    if (energy(k.annihilators) <= out.truncation_) out.terms_.emplace(k, c);
  return out;
}

int OperatorExpr::min_energy_drop() const {
  int d = kUnbounded;
  for (const auto& [k, c] : terms_) d = std::min(d, energy(k.annihilators) - energy(k.creators));
  return d;
}

namespace {

int product_exactness(const OperatorExpr& x, const OperatorExpr& y) {
  if (y.is_zero()) return y.truncation();
  long long bound = static_cast<long long>(x.truncation()) + y.min_energy_drop();
  return static_cast<int>(std::min<long long>(y.truncation(), bound));
}

// Adds the product x*y into out. With only_interacting, pairs of terms whose
// product equals (up to sign) the reversed product are skipped; those cancel
// in a supercommutator.
void accumulate_product(const OperatorExpr& x, const OperatorExpr& y, bool only_interacting, const QH& scale,
                        OperatorExpr& out) {
  using Entry = const std::pair<const OpKey, QH>*;
  std::vector<Entry> ys;
  ys.reserve(y.terms().size());
  std::map<std::pair<int, int>, std::vector<std::size_t>> by_creator;
  std::vector<std::size_t> shifted, charged;
  for (const auto& t : y.terms()) {
    std::size_t idx = ys.size();
    ys.push_back(&t);
    if (!only_interacting) continue;
    Mode prev{0, Label::E};
    for (const auto& m : t.first.creators) {
      if (m == prev) continue;
      prev = m;
      by_creator[{m.k, static_cast<int>(m.label)}].push_back(idx);
    }
    if (t.first.shift != 0) shifted.push_back(idx);
    if (t.first.cpow > 0) charged.push_back(idx);
  }

  const int n_out = out.truncation();
  std::vector<WickTerm> wt;
  std::vector<char> mark(ys.size(), 0);
  std::vector<std::size_t> cand;
  Monomial cre, ann;
  for (const auto& [k1, c1] : x.terms()) {
    cand.clear();
    if (only_interacting) {
      auto take = [&](std::size_t i) {
        if (!mark[i]) {
          mark[i] = 1;
          cand.push_back(i);
        }
      };
      for (const auto& a : k1.annihilators) {
        auto it = by_creator.find({a.k, static_cast<int>(dual_label(a.label))});
        if (it != by_creator.end())
          for (auto i : it->second) take(i);
      }
      if (k1.cpow > 0)
        for (auto i : shifted) take(i);
      if (k1.shift != 0)
        for (auto i : charged) take(i);
      std::sort(cand.begin(), cand.end());
      for (auto i : cand) mark[i] = 0;
    } else {
      cand.resize(ys.size());
      for (std::size_t i = 0; i < ys.size(); ++i) cand[i] = i;
    }
    for (auto i : cand) {
      const OpKey& k2 = ys[i]->first;
      const QH& c2 = ys[i]->second;
      bool zero_mode_pair = (k1.cpow > 0 && k2.shift != 0) || (k2.cpow > 0 && k1.shift != 0);
      wt.clear();
      wick(k1.annihilators, k1.annihilators.size(), k2.creators, Rational(1), false,
           only_interacting && !zero_mode_pair, wt);
      for (const auto& w : wt) {
        if (energy(w.annihilators) + energy(k2.annihilators) > n_out) continue;
        int s1 = merge(k1.creators, w.creators, cre);
        if (s1 == 0) continue;
        int s2 = merge(w.annihilators, k2.annihilators, ann);
        if (s2 == 0) continue;
        QH base = c1 * c2 * scale;
        base *= w.coeff * (s1 * s2);
        // (chat + shift2)^{cpow1} chat^{cpow2}
        for (int p = 0; p <= k1.cpow; ++p) {
          Rational b = binomial(k1.cpow, p);
          for (int t = 0; t < k1.cpow - p; ++t) b *= k2.shift;
          if (sgn(b) == 0) continue;
          QH coeff = base;
          coeff *= b;
          out.add_term(OpKey{ann, k1.shift + k2.shift, p + k2.cpow, cre}, coeff);
        }
      }
    }
  }
}

}  // namespace

OperatorExpr operator*(const OperatorExpr& x, const OperatorExpr& y) {
  OperatorExpr out(product_exactness(x, y));
  accumulate_product(x, y, false, QH(1), out);
  return out;
}

OperatorExpr supercommutator(const OperatorExpr& x, const OperatorExpr& y) {
  int px = x.parity(), py = y.parity();
  if (px < 0 || py < 0) throw DomainError("supercommutator needs parity-homogeneous operators");
  OperatorExpr out(std::min(product_exactness(x, y), product_exactness(y, x)));
  accumulate_product(x, y, true, QH(1), out);
  accumulate_product(y, x, true, QH(px == 1 && py == 1 ? 1 : -1), out);
  return out;
}

bool equal_up_to(const OperatorExpr& x, const OperatorExpr& y, int n) {
  return x.truncated(n).terms() == y.truncated(n).terms();
}

FockState OperatorExpr::apply(const FockState& s) const {
  std::optional<int> out_charge;
  FockState out(s.charge());
  Monomial merged;
  for (const auto& [m, coeff] : s.terms()) {
    if (energy(m) > truncation_)
      throw TruncationError("state energy " + std::to_string(energy(m)) + " exceeds operator truncation " +
                            std::to_string(truncation_));
    auto it = terms_.begin();
    while (it != terms_.end()) {
      const Monomial& ann = it->first.annihilators;
      auto group_end = it;
      while (group_end != terms_.end() && group_end->first.annihilators == ann) ++group_end;
      if (energy(ann) <= energy(m)) {
        std::vector<Contracted> rs = contract(ann, m);
        if (!rs.empty()) {
          for (auto jt = it; jt != group_end; ++jt) {
            const OpKey& key = jt->first;
            int c = s.charge() + key.shift;
            if (out_charge && *out_charge != c)
              throw DomainError("operator terms shift charge inconsistently");
            Rational cp = 1;
            for (int t = 0; t < key.cpow; ++t) cp *= s.charge();
            if (sgn(cp) == 0) continue;
            for (const auto& r : rs) {
              int sg = merge(key.creators, r.rest, merged);
              if (sg == 0) continue;
              QH v = jt->second * coeff;
              v *= r.coeff * cp * sg;
              if (!out_charge) {
                out_charge = c;
                out = FockState(c);
              }
              out.add(merged, v);
            }
          }
        }
      }
      it = group_end;
    }
  }
  if (out.is_zero() && out_charge) return FockState(*out_charge);
  return out;
}

std::string OperatorExpr::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")";
    if (k.shift != 0) os << " e^{" << k.shift << "E}";
    for (const auto& x : k.creators) os << " a_-" << x.k << "(" << ellwall::to_string(x.label) << ")";
    if (k.cpow > 0) os << " c^" << k.cpow;
    for (const auto& x : k.annihilators) os << " a_" << x.k << "(" << ellwall::to_string(x.label) << ")";
  }
  return os.str();
}

FockState alpha_apply(int n, const CohClass& x, const FockState& s, int max_energy) {
  if (n == 0) throw DomainError("alpha_apply needs a nonzero mode index");
  int e = std::max(0, s.max_energy());
  if (max_energy >= 0 && (std::abs(n) > max_energy || e - n > max_energy))
    throw TruncationError("alpha_" + std::to_string(n) + " exceeds truncation " + std::to_string(max_energy));
  return OperatorExpr::mode(n, x, std::max(e, n)).apply(s);
}

}  // namespace ellwall
