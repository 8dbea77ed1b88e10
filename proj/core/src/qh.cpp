#include "ellwall/qh.hpp"

#include <sstream>

#include "ellwall/errors.hpp"

namespace ellwall {

QH QH::hbar() { return from_coeffs({Rational(0), Rational(1)}); }

QH QH::from_coeffs(std::vector<Rational> coeffs) {
  QH out;
  if (coeffs.empty()) return out;
  out.c0_ = coeffs[0];
  out.higher_.assign(coeffs.begin() + 1, coeffs.end());
  out.trim();
  return out;
}

void QH::trim() {
  while (!higher_.empty() && sgn(higher_.back()) == 0) higher_.pop_back();
}

int QH::degree() const {
  if (!higher_.empty()) return static_cast<int>(higher_.size());
  return sgn(c0_) == 0 ? -1 : 0;
}

Rational QH::coeff(int i) const {
  if (i == 0) return c0_;
  if (i < 0 || i > static_cast<int>(higher_.size())) return 0;
  return higher_[i - 1];
}

std::vector<Rational> QH::coeffs() const {
  std::vector<Rational> out{c0_};
  out.insert(out.end(), higher_.begin(), higher_.end());
  if (higher_.empty() && sgn(c0_) == 0) out.clear();
  return out;
}

QH& QH::operator+=(const QH& o) {
  c0_ += o.c0_;
  if (higher_.size() < o.higher_.size()) higher_.resize(o.higher_.size());
  for (std::size_t i = 0; i < o.higher_.size(); ++i) higher_[i] += o.higher_[i];
  trim();
  return *this;
}

QH& QH::operator-=(const QH& o) {
  c0_ -= o.c0_;
  if (higher_.size() < o.higher_.size()) higher_.resize(o.higher_.size());
  for (std::size_t i = 0; i < o.higher_.size(); ++i) higher_[i] -= o.higher_[i];
  trim();
  return *this;
}

QH& QH::operator*=(const Rational& q) {
  c0_ *= q;
  for (auto& c : higher_) c *= q;
  trim();
  return *this;
}

QH& QH::operator*=(const QH& o) {
  if (higher_.empty() && o.higher_.empty()) {
    c0_ *= o.c0_;
    return *this;
  }
  std::vector<Rational> a = coeffs(), b = o.coeffs();
  if (a.empty() || b.empty()) {
    *this = QH();
    return *this;
  }
  std::vector<Rational> r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  *this = from_coeffs(std::move(r));
  return *this;
}

QH QH::operator-() const {
  QH out = *this;
  out.c0_ = -out.c0_;
  for (auto& c : out.higher_) c = -c;
  return out;
}

bool QH::proportional_to(const QH& other, Rational* q) const {
  if (other.is_zero() || is_zero()) return false;
  int d = other.degree();
  if (d != degree()) return false;
  Rational ratio = coeff(d) / other.coeff(d);
  for (int i = 0; i <= d; ++i) {
    if (coeff(i) != ratio * other.coeff(i)) return false;
  }
  if (q) *q = ratio;
  return true;
}

std::string QH::to_string() const {
  std::vector<Rational> c = coeffs();
  if (c.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (sgn(c[i]) == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0) {
      os << c[i].get_str();
    } else {
      os << c[i].get_str() << "*h";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

QH QH::parse(const std::string& text) {
  std::vector<Rational> coeffs;
  std::string s;
  for (char ch : text)
    if (ch != ' ') s.push_back(ch);
  std::size_t pos = 0;
  if (s.empty()) throw DomainError("empty coefficient");
  while (pos < s.size()) {
    std::size_t next = s.find('+', pos + 1);
    std::string tok = s.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
    if (!tok.empty() && tok[0] == '+') tok.erase(0, 1);
    int power = 0;
    std::size_t star = tok.find("*h");
    std::string num = tok;
    if (star != std::string::npos) {
      num = tok.substr(0, star);
      std::string rest = tok.substr(star + 2);
      power = 1;
      if (!rest.empty()) {
        if (rest[0] != '^') throw DomainError("malformed coefficient '" + text + "'");
        power = std::stoi(rest.substr(1));
      }
    }
    if (static_cast<int>(coeffs.size()) <= power) coeffs.resize(power + 1, Rational(0));
    coeffs[power] += parse_rational(num);
    if (next == std::string::npos) break;
    pos = next;
  }
  return from_coeffs(std::move(coeffs));
}

}  // namespace ellwall
