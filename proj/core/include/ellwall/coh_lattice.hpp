#pragma once

#include <array>
#include <string>
#include <vector>

#include "ellwall/matrix.hpp"
#include "ellwall/rational.hpp"
#include "ellwall/root_system.hpp"

namespace ellwall {

class BilinearLattice {
 public:
  BilinearLattice() = default;
  BilinearLattice(std::vector<std::string> labels, IntMatrix gram);

  // II_{1,1} with basis (E, P): E^2 = P^2 = 0, E.P = 1.
  static BilinearLattice hyperbolic_plane();
  // NS lattice of the surface of type R: II_{1,1} for A-1, I_{1,9} otherwise.
  static BilinearLattice ns_lattice(CartanType r);

  int rank() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const IntMatrix& gram() const { return gram_; }
  int index_of(const std::string& label) const;  // throws DomainError
  IntVector basis_vector(const std::string& label) const;

  long long pair(const IntVector& x, const IntVector& y) const;
  Rational pair(const QVector& x, const QVector& y) const;

  friend bool operator==(const BilinearLattice& a, const BilinearLattice& b) {
    return a.labels_ == b.labels_ && a.gram_ == b.gram_;
  }

 private:
  std::vector<std::string> labels_;
  IntMatrix gram_;
};

// (rank, c1, ch2). ch2 has denominator dividing 2.
struct MukaiVector {
  long long rank = 0;
  IntVector c1;
  Rational ch2 = 0;

  MukaiVector() = default;
  MukaiVector(long long r, IntVector c, Rational s);
  // (1, 0, -n) on a lattice of the given rank.
  static MukaiVector hilbert(int ns_rank, long long n);

  friend bool operator==(const MukaiVector&, const MukaiVector&) = default;
  friend auto operator<=>(const MukaiVector& a, const MukaiVector& b) {
    if (a.rank != b.rank) return a.rank <=> b.rank;
    if (a.c1 != b.c1) return a.c1 <=> b.c1;
    if (a.ch2 < b.ch2) return std::strong_ordering::less;
    if (a.ch2 > b.ch2) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
};

// c1(v).c1(w) - rank(v) ch2(w) - rank(w) ch2(v).
Rational mukai_pair(const MukaiVector& v, const MukaiVector& w, const BilinearLattice& ns);

// K_0 of a curve modelled as (rank, degree) with a bilinear Euler form.
struct CurveData {
  std::array<std::array<long long, 2>, 2> chi{};  // chi(x, y) = x^T chi y
  std::array<long long, 2> twist{1, 0};           // class of the twisting bundle

  // Smooth curve of genus g: chi((r,d),(r',d')) = r d' - r' d + r r' (1 - g).
  static CurveData smooth(int genus, std::array<long long, 2> twist = {1, 0});

  long long euler(const std::array<long long, 2>& x, const std::array<long long, 2>& y) const;
  std::array<long long, 2> tensor(const std::array<long long, 2>& x,
                                  const std::array<long long, 2>& y) const;
};

struct KoszulClass {
  std::array<long long, 2> a{};
  std::array<long long, 2> b{};
};

// chi(a,c) + chi(b,d) - chi(a,d) - chi(a (x) T, d) for x = (a,b), y = (c,d).
long long euler_pair_koszul(const KoszulClass& x, const KoszulClass& y, const CurveData& curve);

// alpha + m delta_pt + n delta_E  |->  (0, C_alpha + n E, m).
MukaiVector root_to_kclass(const EllipticRoot& beta, CartanType r);
// Same, reusing prebuilt data (hot loops).
MukaiVector root_to_kclass(const EllipticRoot& beta, const EllipticRootSystem& sys,
                           const BilinearLattice& ns);

}  // namespace ellwall
