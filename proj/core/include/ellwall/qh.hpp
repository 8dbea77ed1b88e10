#pragma once

#include <string>
#include <vector>

#include "ellwall/rational.hpp"

namespace ellwall {

// Element of Q[hbar]. The constant term is stored inline since almost every
// coefficient met in practice is hbar-free.
class QH {
 public:
  QH() = default;
  QH(const Rational& c) : c0_(c) {}  // NOLINT(google-explicit-constructor)
  QH(long c) : c0_(c) {}             // NOLINT(google-explicit-constructor)
  QH(int c) : c0_(c) {}              // NOLINT(google-explicit-constructor)

  static QH hbar();
  static QH from_coeffs(std::vector<Rational> coeffs);

  int degree() const;  // -1 for zero
  bool is_zero() const { return higher_.empty() && sgn(c0_) == 0; }
  bool is_constant() const { return higher_.empty(); }
  Rational coeff(int i) const;
  const Rational& constant() const { return c0_; }
  std::vector<Rational> coeffs() const;

  QH& operator+=(const QH& o);
  QH& operator-=(const QH& o);
  QH& operator*=(const QH& o);
  QH& operator*=(const Rational& q);
  QH operator-() const;

  friend QH operator+(QH a, const QH& b) { return a += b; }
  friend QH operator-(QH a, const QH& b) { return a -= b; }
  friend QH operator*(QH a, const QH& b) { return a *= b; }
  friend bool operator==(const QH& a, const QH& b) {
    return a.c0_ == b.c0_ && a.higher_ == b.higher_;
  }

  // Nonzero q with *this == q * other, if any.
  bool proportional_to(const QH& other, Rational* q) const;

  // "3/2", "1 + 2*h^2", "0".
  std::string to_string() const;
  static QH parse(const std::string& text);

 private:
  void trim();
  Rational c0_ = 0;
  std::vector<Rational> higher_;  // coefficients of hbar^1, hbar^2, ...
};

}  // namespace ellwall
