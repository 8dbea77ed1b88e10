#include "ellwall/cyclotomic.hpp"

#include <cctype>
#include <map>
#include <mutex>
#include <sstream>

#include "ellwall/errors.hpp"
#include "ellwall/matrix.hpp"

namespace ellwall {

namespace {

// Exact division of integer polynomials (divisor monic).
std::vector<long long> divide_monic(std::vector<long long> num, const std::vector<long long>& den) {
  std::size_t dn = den.size() - 1;
  std::vector<long long> q(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    long long c = num[i];
    q[i - dn] = c;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  return q;
}

}  // namespace

const std::vector<long long>& cyclotomic_polynomial(int k) {
  if (k < 1) throw DomainError("cyclotomic order must be positive");
  static std::mutex mu;
  static std::map<int, std::vector<long long>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;
  }
  std::vector<long long> p(k + 1, 0);
  p[0] = -1;
  p[k] = 1;
  for (int d = 1; d < k; ++d) {
    if (k % d == 0) p = divide_monic(p, cyclotomic_polynomial(d));
  }
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(k, std::move(p)).first->second;
}

int euler_phi(int k) { return static_cast<int>(cyclotomic_polynomial(k).size()) - 1; }

Cyclotomic::Cyclotomic(int k, const Rational& q) : k_(k), c_(euler_phi(k), Rational(0)) {
  c_[0] = q;
}

Cyclotomic Cyclotomic::from_power_sum(int k, const std::vector<Rational>& c) {
  const auto& phi = cyclotomic_polynomial(k);
  std::size_t d = phi.size() - 1;
  std::vector<Rational> w = c;
  for (std::size_t i = w.size(); i-- > d;) {
    if (sgn(w[i]) == 0) continue;
    Rational f = w[i];
    for (std::size_t j = 0; j <= d; ++j) w[i - d + j] -= f * phi[j];
  }
  Cyclotomic out = zero(k);
  for (std::size_t i = 0; i < d && i < w.size(); ++i) out.c_[i] = w[i];
  return out;
}

Cyclotomic Cyclotomic::zeta_power(int k, long long j) {
  long long e = ((j % k) + k) % k;
  std::vector<Rational> c(e + 1, Rational(0));
  c[e] = 1;
  return from_power_sum(k, c);
}

bool Cyclotomic::is_zero() const {
  for (const auto& x : c_)
    if (sgn(x) != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (sgn(c_[i]) != 0) return false;
  return true;
}

void Cyclotomic::check_compatible(const Cyclotomic& o) const {
  if (k_ != o.k_) throw DomainError("cyclotomic fields of different order mixed");
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  check_compatible(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
  check_compatible(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Rational& q) {
  for (auto& x : c_) x *= q;
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  check_compatible(o);
  std::vector<Rational> prod(2 * c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (sgn(c_[i]) == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) prod[i + j] += c_[i] * o.c_[j];
  }
  *this = from_power_sum(k_, prod);
  return *this;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (auto& x : out.c_) x = -x;
  return out;
}

std::vector<std::vector<Rational>> Cyclotomic::multiplication_matrix() const {
  std::size_t d = c_.size();
  std::vector<std::vector<Rational>> m(d, std::vector<Rational>(d, Rational(0)));
  for (std::size_t j = 0; j < d; ++j) {
    Cyclotomic col = *this * zeta_power(k_, static_cast<long long>(j));
    for (std::size_t i = 0; i < d; ++i) m[i][j] = col.c_[i];
  }
  return m;
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw DomainError("division by zero in Q(zeta)");
  if (is_rational()) return Cyclotomic(k_, Rational(1) / c_[0]);
  QMatrix m = QMatrix::from_rows(multiplication_matrix());
  std::vector<Rational> e(c_.size(), Rational(0));
  e[0] = 1;
  auto x = solve(m, e);
  if (!x) throw DomainError("singular multiplication matrix in Q(zeta)");
  Cyclotomic out = zero(k_);
  out.c_ = *x;
  return out;
}

std::string Cyclotomic::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    const Rational& q = c_[i];
    if (sgn(q) == 0) continue;
    Rational a = abs(q);
    if (first) {
      if (sgn(q) < 0) os << "-";
    } else {
      os << (sgn(q) < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << "*";
      os << "z";
      if (i > 1) os << "^" << i;
    }
  }
  if (first) return "0";
  return os.str();
}

Cyclotomic Cyclotomic::parse(int k, const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw DomainError("empty cyclotomic literal");
  std::vector<Rational> acc;
  std::size_t pos = 0;
  while (pos < s.size()) {
    int sgn_term = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      if (s[pos] == '-') sgn_term = -1;
      ++pos;
    }
    std::size_t end = pos;
    while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
    std::string tok = s.substr(pos, end - pos);
    if (tok.empty()) throw DomainError("malformed cyclotomic literal '" + text + "'");
    Rational coef = 1;
    long long power = 0;
    std::size_t zpos = tok.find('z');
    if (zpos == std::string::npos) {
      coef = parse_rational(tok);
    } else {
      std::string head = tok.substr(0, zpos);
      if (!head.empty()) {
        if (head.back() != '*') throw DomainError("malformed cyclotomic literal '" + text + "'");
        head.pop_back();
        coef = parse_rational(head);
      }
      std::string tail = tok.substr(zpos + 1);
      power = 1;
      if (!tail.empty()) {
        if (tail[0] != '^' || tail.size() == 1) throw DomainError("malformed cyclotomic literal '" + text + "'");
        for (std::size_t i = 1; i < tail.size(); ++i)
          if (!std::isdigit(static_cast<unsigned char>(tail[i])))
            throw DomainError("malformed cyclotomic literal '" + text + "'");
        power = std::stoll(tail.substr(1));
      }
    }
    long long e = power % k;
    if (static_cast<long long>(acc.size()) <= e) acc.resize(e + 1, Rational(0));
    acc[e] += sgn_term * coef;
    pos = end;
  }
  return from_power_sum(k, acc);
}

}  // namespace ellwall
