#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace ellwall {

using Rational = mpq_class;
using QVector = std::vector<Rational>;

Rational rat(long long num, long long den = 1);

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

// Accepts "p", "-p", "p/q". Throws DomainError otherwise.
Rational parse_rational(std::string_view text);

// gmpxx has no long long overloads; long is 64 bits on the supported targets.
inline Rational operator*(const Rational& a, long long b) { return a * static_cast<long>(b); }
inline Rational operator*(long long a, const Rational& b) { return static_cast<long>(a) * b; }
inline Rational operator+(const Rational& a, long long b) { return a + static_cast<long>(b); }
inline Rational operator+(long long a, const Rational& b) { return static_cast<long>(a) + b; }
inline Rational operator-(const Rational& a, long long b) { return a - static_cast<long>(b); }
inline Rational operator-(long long a, const Rational& b) { return static_cast<long>(a) - b; }
inline Rational operator/(const Rational& a, long long b) { return a / static_cast<long>(b); }
inline Rational operator/(long long a, const Rational& b) { return static_cast<long>(a) / b; }

inline int sign(const Rational& q) { return sgn(q); }

bool is_integer(const Rational& q);

// Throws DomainError when q is not an integer fitting in long long.
long long to_integer(const Rational& q);

long double to_long_double(const Rational& q);

QVector to_qvector(const std::vector<long long>& v);

Rational dot(const QVector& a, const QVector& b);

}  // namespace ellwall
