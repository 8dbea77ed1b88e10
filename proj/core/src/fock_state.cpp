#include <algorithm>
#include <functional>
#include <sstream>

#include "ellwall/errors.hpp"
#include "ellwall/fock.hpp"

namespace ellwall {

bool is_odd(Label l) { return l == Label::SigmaPlus || l == Label::SigmaMinus; }

int label_pairing(Label a, Label b) {
  if ((a == Label::E && b == Label::Pt) || (a == Label::Pt && b == Label::E)) return 1;
  if (a == Label::SigmaPlus && b == Label::SigmaMinus) return 1;
  if (a == Label::SigmaMinus && b == Label::SigmaPlus) return -1;
  return 0;
}

Label dual_label(Label l) {
  switch (l) {
    case Label::E:
      return Label::Pt;
    case Label::Pt:
      return Label::E;
    case Label::SigmaPlus:
      return Label::SigmaMinus;
    case Label::SigmaMinus:
      return Label::SigmaPlus;
  }
  throw DomainError("unknown label");
}

std::string to_string(Label l) {
  switch (l) {
    case Label::E:
      return "E";
    case Label::SigmaPlus:
      return "s+";
    case Label::SigmaMinus:
      return "s-";
    case Label::Pt:
      return "pt";
  }
  throw DomainError("unknown label");
}

Label parse_label(const std::string& s) {
  if (s == "E") return Label::E;
  if (s == "pt") return Label::Pt;
  if (s == "s+" || s == "sigma+" || s == "σ+" || s == "σ₊") return Label::SigmaPlus;
  if (s == "s-" || s == "sigma-" || s == "σ-" || s == "σ₋") return Label::SigmaMinus;
  throw DomainError("unknown cohomology label '" + s + "' (expected E, s+, s-, pt)");
}

LabelProduct star(Label a, Label b, StarProduct p) {
  Label unit = p == StarProduct::Convolution ? Label::Pt : Label::E;
  Label top = p == StarProduct::Convolution ? Label::E : Label::Pt;
  if (a == unit) return {1, b};
  if (b == unit) return {1, a};
  if (a == Label::SigmaPlus && b == Label::SigmaMinus) return {1, top};
  if (a == Label::SigmaMinus && b == Label::SigmaPlus) return {-1, top};
  return {0, Label::E};
}

CohClass CohClass::basis(Label l) {
  CohClass x;
  x.c[static_cast<int>(l)] = 1;
  return x;
}

bool CohClass::is_zero() const {
  return std::all_of(c.begin(), c.end(), [](const Rational& q) { return sgn(q) == 0; });
}

Rational pairing(const CohClass& x, const CohClass& y) {
  Rational acc = 0;
  for (Label a : kAllLabels)
    for (Label b : kAllLabels) {
      int p = label_pairing(a, b);
      if (p != 0) acc += p * x.coeff(a) * y.coeff(b);
    }
  return acc;
}

CohClass star(const CohClass& x, const CohClass& y, StarProduct p) {
  CohClass out;
  for (Label a : kAllLabels)
    for (Label b : kAllLabels) {
      if (sgn(x.coeff(a)) == 0 || sgn(y.coeff(b)) == 0) continue;
      LabelProduct lp = star(a, b, p);
      if (lp.sign != 0) out.c[static_cast<int>(lp.label)] += lp.sign * x.coeff(a) * y.coeff(b);
    }
  return out;
}

CohClass sl2_label_action(const SL2& g, const CohClass& x) {
  if (g[0][0] * g[1][1] - g[0][1] * g[1][0] != 1) throw DomainError("SL(2,Z) element must have determinant 1");
  CohClass out = x;
  const Rational& p = x.coeff(Label::SigmaPlus);
  const Rational& m = x.coeff(Label::SigmaMinus);
  out.c[static_cast<int>(Label::SigmaPlus)] = g[0][0] * p + g[0][1] * m;
  out.c[static_cast<int>(Label::SigmaMinus)] = g[1][0] * p + g[1][1] * m;
  return out;
}

bool MonomialLess::operator()(const std::vector<Mode>& a, const std::vector<Mode>& b) const {
  std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].k != b[i].k) return a[i].k < b[i].k;
    if (a[i].label != b[i].label) return a[i].label < b[i].label;
  }
  return a.size() < b.size();
}

int energy(const Monomial& m) {
  int e = 0;
  for (const auto& x : m) e += x.k;
  return e;
}

bool is_odd(const Monomial& m) {
  bool odd = false;
  for (const auto& x : m)
    if (is_odd(x.label)) odd = !odd;
  return odd;
}

int canonicalize(Monomial& m) {
  int sign = 1;
  for (std::size_t i = 1; i < m.size(); ++i) {
    for (std::size_t j = i; j > 0 && mode_before(m[j], m[j - 1]); --j) {
      if (is_odd(m[j].label) && is_odd(m[j - 1].label)) sign = -sign;
      std::swap(m[j], m[j - 1]);
    }
  }
  for (std::size_t i = 1; i < m.size(); ++i)
    if (m[i] == m[i - 1] && is_odd(m[i].label)) return 0;
  return sign;
}

FockState FockState::vacuum(int charge) {
  FockState s(charge);
  s.terms_.emplace(Monomial{}, QH(1));
  return s;
}

FockState FockState::from_modes(int charge, Monomial modes, const QH& coeff) {
  for (const auto& m : modes)
    if (m.k <= 0) throw DomainError("creation modes need k >= 1");
  FockState s(charge);
  int sign = canonicalize(modes);
  if (sign != 0 && !coeff.is_zero()) s.terms_.emplace(std::move(modes), sign < 0 ? -coeff : coeff);
  return s;
}

int FockState::max_energy() const {
  int e = -1;
  for (const auto& [m, c] : terms_) e = std::max(e, energy(m));
  return e;
}

void FockState::add(const Monomial& m, const QH& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void FockState::adopt_charge(const FockState& o) {
  if (o.terms_.empty()) return;
  if (terms_.empty()) {
    charge_ = o.charge_;
    return;
  }
  if (charge_ != o.charge_) throw DomainError("cannot add Fock states of different charge");
}

FockState& FockState::operator+=(const FockState& o) {
  adopt_charge(o);
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

FockState& FockState::operator-=(const FockState& o) {
  adopt_charge(o);
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

FockState& FockState::operator*=(const QH& q) {
  if (q.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= q;
  return *this;
}

bool operator==(const FockState& a, const FockState& b) {
  if (a.terms_.empty() && b.terms_.empty()) return true;
  return a.charge_ == b.charge_ && a.terms_ == b.terms_;
}

std::optional<Rational> FockState::ratio_to(const FockState& other) const {
  if (terms_.empty() || other.terms_.empty()) return std::nullopt;
  if (charge_ != other.charge_ || terms_.size() != other.terms_.size()) return std::nullopt;
  std::optional<Rational> ratio;
  auto it = terms_.begin();
  auto jt = other.terms_.begin();
  for (; it != terms_.end(); ++it, ++jt) {
    if (!(it->first == jt->first)) return std::nullopt;
    Rational q;
    if (!it->second.proportional_to(jt->second, &q)) return std::nullopt;
    if (ratio && *ratio != q) return std::nullopt;
    ratio = q;
  }
  return ratio;
}

std::string FockState::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")";
    for (const auto& x : m) os << " a_-" << x.k << "(" << ellwall::to_string(x.label) << ")";
    os << " |" << charge_ << ">";
  }
  return os.str();
}

std::vector<Monomial> monomials_of_energy(int e, const std::vector<Label>& labels) {
  std::vector<Label> ls = labels;
  std::sort(ls.begin(), ls.end());
  ls.erase(std::unique(ls.begin(), ls.end()), ls.end());
  // Candidate modes in canonical order.
  std::vector<Mode> modes;
  for (int k = e; k >= 1; --k)
    for (Label l : ls) modes.push_back(Mode{static_cast<std::int16_t>(k), l});
  std::vector<Monomial> out;
  Monomial cur;
  std::function<void(std::size_t, int)> rec = [&](std::size_t start, int left) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < modes.size(); ++i) {
      const Mode& md = modes[i];
      if (md.k > left) continue;
      cur.push_back(md);
      // Odd modes may not repeat: continue strictly after them.
      rec(is_odd(md.label) ? i + 1 : i, left - md.k);
      cur.pop_back();
    }
  };
  rec(0, e);
  return out;
}

std::vector<Monomial> monomial_basis(int max_energy, const std::vector<Label>& labels) {
  std::vector<Monomial> out;
  for (int e = 0; e <= max_energy; ++e) {
    auto part = monomials_of_energy(e, labels);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace ellwall
