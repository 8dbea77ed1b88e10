#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ellwall/rational.hpp"

namespace ellwall {

// Sparse multivariate polynomial over Q with named variables. A monomial is a
// sorted list of (variable, exponent) pairs with positive exponents.
class Poly {
 public:
  using Monomial = std::vector<std::pair<std::string, int>>;

  Poly() = default;
  Poly(const Rational& c);  // NOLINT(google-explicit-constructor)
  Poly(long c) : Poly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  Poly(int c) : Poly(Rational(c)) {}   // NOLINT(google-explicit-constructor)
  static Poly var(const std::string& name);

  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  int total_degree() const;
  int degree_in(const std::string& v) const;
  std::vector<std::string> variables() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly operator-() const;
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly r = a;
    r *= b;
    return r;
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

  Poly pow(int e) const;
  Rational evaluate(const std::map<std::string, Rational>& at) const;  // all variables must be bound
  Poly substitute(const std::string& v, const Poly& value) const;
  // Coefficient of v^e as a polynomial in the remaining variables.
  Poly coefficient(const std::string& v, int e) const;

  // Deterministic text form, e.g. "-s*d + r*n".
  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const Rational& c);
  std::map<Monomial, Rational> terms_;
};

}  // namespace ellwall
