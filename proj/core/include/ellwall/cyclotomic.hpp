#pragma once

#include <string>
#include <vector>

#include "ellwall/rational.hpp"

namespace ellwall {

// Integer coefficients of the k-th cyclotomic polynomial, constant term first.
const std::vector<long long>& cyclotomic_polynomial(int k);

int euler_phi(int k);

// Element of Q(zeta_k) stored in the power basis 1, z, ..., z^{phi(k)-1}.
class Cyclotomic {
 public:
  Cyclotomic() = default;  // zero of Q(zeta_1) = Q
  Cyclotomic(int k, const Rational& q);

  static Cyclotomic zero(int k) { return Cyclotomic(k, Rational(0)); }
  static Cyclotomic one(int k) { return Cyclotomic(k, Rational(1)); }
  static Cyclotomic zeta_power(int k, long long j);
  // Reduces sum_i c_i z^i modulo Phi_k.
  static Cyclotomic from_power_sum(int k, const std::vector<Rational>& c);

  int order() const { return k_; }
  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const;
  bool is_rational() const;

  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Rational& q);
  Cyclotomic operator-() const;
  Cyclotomic inverse() const;

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inverse(); }
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    return a.k_ == b.k_ && a.c_ == b.c_;
  }

  // Matrix of multiplication by *this on the power basis (phi x phi).
  std::vector<std::vector<Rational>> multiplication_matrix() const;

  // "0", "1/2", "1 + 2*z^3", "-z".
  std::string to_string() const;
  // Parses the to_string format (also accepts '-' separated terms).
  static Cyclotomic parse(int k, const std::string& text);

 private:
  void check_compatible(const Cyclotomic& o) const;
  int k_ = 1;
  std::vector<Rational> c_{Rational(0)};
};

inline bool is_zero(const Cyclotomic& x) { return x.is_zero(); }

}  // namespace ellwall
