#include "ellwall/rational.hpp"

#include <cctype>
#include <limits>

#include "ellwall/errors.hpp"

namespace ellwall {

Rational rat(long long num, long long den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  Rational q(mpz_class(std::to_string(num)), mpz_class(std::to_string(den)));
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  if (s.empty()) throw DomainError("empty rational literal");
  std::size_t slash = s.find('/');
  auto valid_int = [](const std::string& t, bool allow_sign) {
    if (t.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (t[0] == '-' || t[0] == '+')) i = 1;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    }
    return true;
  };
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false)) {
    throw DomainError("malformed rational literal '" + std::string(text) + "'");
  }
  if (num[0] == '+') num.erase(0, 1);
  mpz_class d(den);
  if (d == 0) throw DomainError("rational with zero denominator");
  Rational q(mpz_class(num), d);
  q.canonicalize();
  return q;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

long long to_integer(const Rational& q) {
  if (!is_integer(q)) throw DomainError("expected an integer, got " + to_string(q));
  const mpz_class& n = q.get_num();
  if (!n.fits_slong_p()) throw DomainError("integer out of range: " + to_string(q));
  return n.get_si();
}

long double to_long_double(const Rational& q) {
  // Both parts can exceed double range only in pathological inputs.
  return static_cast<long double>(q.get_num().get_d()) /
         static_cast<long double>(q.get_den().get_d());
}

QVector to_qvector(const std::vector<long long>& v) {
  QVector out;
  out.reserve(v.size());
  for (long long x : v) out.push_back(rat(x));
  return out;
}

Rational dot(const QVector& a, const QVector& b) {
  if (a.size() != b.size()) throw DomainError("dot: dimension mismatch");
  Rational acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

}  // namespace ellwall

#include "ellwall/matrix.hpp"

namespace ellwall {

QMatrix to_qmatrix(const IntMatrix& m) {
  QMatrix out(m.rows(), m.cols(), Rational(0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = rat(m(i, j));
  return out;
}

}  // namespace ellwall
