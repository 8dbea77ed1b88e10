#include "ellwall/poly.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "ellwall/errors.hpp"

namespace ellwall {

namespace {

Poly::Monomial multiply(const Poly::Monomial& a, const Poly::Monomial& b) {
  Poly::Monomial out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.push_back(b[j++]);
    } else {
      out.emplace_back(a[i].first, a[i].second + b[j].second);
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Poly::Poly(const Rational& c) {
  if (sgn(c) != 0) terms_.emplace(Monomial{}, c);
}

Poly Poly::var(const std::string& name) {
  Poly p;
  p.terms_.emplace(Monomial{{name, 1}}, Rational(1));
  return p;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

int Poly::total_degree() const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [m, c] : terms_) {
    int s = 0;
    for (const auto& [v, e] : m) s += e;
    d = std::max(d, s);
  }
  return d;
}

int Poly::degree_in(const std::string& v) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [m, c] : terms_)
    for (const auto& [name, e] : m)
      if (name == v) d = std::max(d, e);
  return d;
}

std::vector<std::string> Poly::variables() const {
  std::set<std::string> s;
  for (const auto& [m, c] : terms_)
    for (const auto& [name, e] : m) s.insert(name);
  return {s.begin(), s.end()};
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  Poly r;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) r.add_term(multiply(ma, mb), ca * cb);
  *this = std::move(r);
  return *this;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Poly Poly::pow(int e) const {
  if (e < 0) throw DomainError("negative polynomial power");
  Poly r(1), b = *this;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

Rational Poly::evaluate(const std::map<std::string, Rational>& at) const {
  Rational acc = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (const auto& [name, e] : m) {
      auto it = at.find(name);
      if (it == at.end()) throw DomainError("unbound polynomial variable '" + name + "'");
      for (int i = 0; i < e; ++i) t *= it->second;
    }
    acc += t;
  }
  return acc;
}

Poly Poly::substitute(const std::string& v, const Poly& value) const {
  Poly r;
  for (const auto& [m, c] : terms_) {
    Monomial rest;
    int e = 0;
    for (const auto& p : m) {
      if (p.first == v) {
        e = p.second;
      } else {
        rest.push_back(p);
      }
    }
    Poly t;
    t.terms_.emplace(rest, c);
    if (e > 0) t *= value.pow(e);
    r += t;
  }
  return r;
}

Poly Poly::coefficient(const std::string& v, int e) const {
  Poly r;
  for (const auto& [m, c] : terms_) {
    Monomial rest;
    int found = 0;
    for (const auto& p : m) {
      if (p.first == v) {
        found = p.second;
      } else {
        rest.push_back(p);
      }
    }
    if (found == e) r.add_term(rest, c);
  }
  return r;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational a = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    bool need_star = false;
    if (a != 1 || m.empty()) {
      os << a.get_str();
      need_star = true;
    }
    for (const auto& [name, e] : m) {
      if (need_star) os << "*";
      os << name;
      if (e > 1) os << "^" << e;
      need_star = true;
    }
  }
  return os.str();
}

}  // namespace ellwall
