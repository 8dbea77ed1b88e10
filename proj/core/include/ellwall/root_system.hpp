#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ellwall/matrix.hpp"
#include "ellwall/rational.hpp"

namespace ellwall {

enum class CartanType { Am1, A0, A1, A2, G2, D4, F4, E6, E7, E8 };

// "A-1", "A0", ..., "E8".
std::string to_string(CartanType t);
CartanType parse_cartan_type(std::string_view s);  // throws DomainError
const std::vector<CartanType>& deligne_series();

using IntVector = std::vector<long long>;

struct FiniteRootData {
  CartanType type = CartanType::Am1;
  int rank = 0;
  IntMatrix cartan;  // A_ij = 2 (a_i, a_j) / (a_i, a_i)
  QMatrix form;      // symmetric form on simple-root coordinates, long roots of length 2
  std::vector<IntVector> roots;           // all roots, sorted
  std::vector<IntVector> positive_roots;  // sorted by height, then lex
  IntVector highest_root;                 // empty when rank 0

  Rational pair(const IntVector& x, const IntVector& y) const;
  Rational pair(const QVector& x, const QVector& y) const;
  bool is_root(const IntVector& x) const;
  long long height(const IntVector& x) const;
  // Simple root i as a coordinate vector.
  IntVector simple_root(int i) const;
};

FiniteRootData build_finite(CartanType t);

// Root beta + m delta1 + n delta2. delta1 plays the role of delta_pt and
// delta2 of delta_E when roots are sent to K-classes.
struct EllipticRoot {
  IntVector finite;
  long long m = 0;
  long long n = 0;

  bool finite_is_zero() const;
  friend bool operator==(const EllipticRoot&, const EllipticRoot&) = default;
  friend auto operator<=>(const EllipticRoot& a, const EllipticRoot& b) {
    if (a.m != b.m) return a.m <=> b.m;
    if (a.n != b.n) return a.n <=> b.n;
    return a.finite <=> b.finite;
  }
};

EllipticRoot operator+(const EllipticRoot& a, const EllipticRoot& b);
EllipticRoot operator-(const EllipticRoot& a);
std::string to_string(const EllipticRoot& r);

enum class Marking { Delta1, Delta2 };

// Affine root beta + k delta, the image of an elliptic root modulo the marking.
struct AffineRoot {
  IntVector finite;
  long long k = 0;
  friend bool operator==(const AffineRoot&, const AffineRoot&) = default;
  friend auto operator<=>(const AffineRoot&, const AffineRoot&) = default;
};

class EllipticRootSystem {
 public:
  EllipticRootSystem(CartanType t, Marking marking = Marking::Delta2);

  CartanType type() const { return fin_.type; }
  Marking marking() const { return marking_; }
  const FiniteRootData& finite() const { return fin_; }
  int rank() const { return fin_.rank; }
  // Dimension of F = h + Q delta1 + Q delta2.
  int dim() const { return fin_.rank + 2; }

  bool contains(const EllipticRoot& b) const;
  void validate(const EllipticRoot& b) const;  // throws DomainError if not a root
  bool is_real(const EllipticRoot& b) const;
  bool is_imaginary(const EllipticRoot& b) const;
  Rational pair(const EllipticRoot& a, const EllipticRoot& b) const;

  // Gram matrix on F in coordinates (simple roots, delta1, delta2).
  QMatrix gram() const;
  QVector coords(const EllipticRoot& b) const;
  // Inverse of coords; nullopt unless the vector is integral.
  std::optional<EllipticRoot> from_coords(const QVector& x) const;

  // All roots with |m| <= m_max, |n| <= n_max and |height| <= height_max
  // (height_max < 0 means unbounded), sorted lex on (m, n, finite).
  std::vector<EllipticRoot> roots_in_box(long long m_max, long long n_max,
                                         long long height_max = -1) const;

  // Image modulo the marking line; nullopt when the root lies in the line.
  std::optional<AffineRoot> affine_image(const EllipticRoot& b) const;

 private:
  FiniteRootData fin_;
  Marking marking_;
};

EllipticRootSystem build_elliptic(CartanType t, Marking marking = Marking::Delta2);

// Star-shaped diagram: a central node with arms of the given lengths.
struct StarShapedData {
  std::vector<int> arm_lengths;
  int central_multiplicity = 1;

  int node_count() const;
  IntMatrix cartan() const;  // central node first, then arms outward
};

// Roots of the cyclic quiver with k nodes (affine A_{k-1}, k >= 1), given as
// coefficient vectors over the simple roots alpha_0..alpha_{k-1}.
struct CyclicQuiverRoots {
  int k;
  // Real roots have form [i, j) arcs plus multiples of delta; imaginary roots are m*delta.
  static bool is_root(int k, const IntVector& c);
  static bool is_real(int k, const IntVector& c);
  static IntVector delta(int k);
  // Positive roots with total height <= max_height, sorted.
  static std::vector<IntVector> positive_roots(int k, long long max_height);
};

}  // namespace ellwall
