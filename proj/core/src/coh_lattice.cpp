#include "ellwall/coh_lattice.hpp"

#include <set>

#include "ellwall/errors.hpp"

namespace ellwall {

namespace {

// Root part R + R' of the I_{1,9} decomposition.
CartanType complement_type(CartanType r, bool* present) {
  *present = true;
  switch (r) {
    case CartanType::D4:
      return CartanType::D4;
    case CartanType::E6:
      return CartanType::A2;
    case CartanType::E7:
      return CartanType::A1;
    case CartanType::E8:
      *present = false;
      return CartanType::E8;
    default:
      throw UnsupportedType("no NS lattice model for type " + to_string(r) +
                            " (wild cases A0, A1, A2 and non-simply-laced G2, F4 are out of scope)");
  }
}

}  // namespace

BilinearLattice::BilinearLattice(std::vector<std::string> labels, IntMatrix gram)
    : labels_(std::move(labels)), gram_(std::move(gram)) {
  std::size_t n = labels_.size();
  if (n == 0) throw DomainError("lattice must have positive rank");
  if (gram_.rows() != n || gram_.cols() != n) throw DomainError("gram matrix size does not match labels");
  std::set<std::string> distinct(labels_.begin(), labels_.end());
  if (distinct.size() != n) throw DomainError("lattice labels must be distinct");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (gram_(i, j) != gram_(j, i)) throw DomainError("gram matrix is not symmetric");
}

BilinearLattice BilinearLattice::hyperbolic_plane() {
  return BilinearLattice({"E", "P"}, IntMatrix::from_rows({{0, 1}, {1, 0}}));
}

BilinearLattice BilinearLattice::ns_lattice(CartanType r) {
  if (r == CartanType::Am1) return hyperbolic_plane();
  bool has_complement = false;
  CartanType rc = complement_type(r, &has_complement);
  FiniteRootData main = build_finite(r);
  std::vector<std::string> labels = {"Theta", "E"};
  for (int i = 0; i < main.rank; ++i) labels.push_back("C_" + std::to_string(i + 1));
  FiniteRootData comp;
  if (has_complement) {
    comp = build_finite(rc);
    for (int i = 0; i < comp.rank; ++i) labels.push_back("C'_" + std::to_string(i + 1));
  }
  int n = static_cast<int>(labels.size());
  IntMatrix g(n, n, 0);
  g(0, 0) = -1;
  g(0, 1) = g(1, 0) = 1;
  for (int i = 0; i < main.rank; ++i)
    for (int j = 0; j < main.rank; ++j) g(2 + i, 2 + j) = -main.cartan(i, j);
  int off = 2 + main.rank;
  for (int i = 0; i < comp.rank; ++i)
    for (int j = 0; j < comp.rank; ++j) g(off + i, off + j) = -comp.cartan(i, j);
  return BilinearLattice(std::move(labels), std::move(g));
}

int BilinearLattice::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return static_cast<int>(i);
  throw DomainError("unknown lattice label '" + label + "'");
}

IntVector BilinearLattice::basis_vector(const std::string& label) const {
  IntVector e(rank(), 0);
  e[index_of(label)] = 1;
  return e;
}

long long BilinearLattice::pair(const IntVector& x, const IntVector& y) const {
  if (x.size() != labels_.size() || y.size() != labels_.size())
    throw DomainError("lattice pairing: dimension mismatch");
  long long acc = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) acc += x[i] * gram_(i, j) * y[j];
  }
  return acc;
}

Rational BilinearLattice::pair(const QVector& x, const QVector& y) const {
  if (x.size() != labels_.size() || y.size() != labels_.size())
    throw DomainError("lattice pairing: dimension mismatch");
  Rational acc = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j)
      if (gram_(i, j) != 0) acc += x[i] * gram_(i, j) * y[j];
  }
  return acc;
}

MukaiVector::MukaiVector(long long r, IntVector c, Rational s) : rank(r), c1(std::move(c)), ch2(std::move(s)) {
  ch2.canonicalize();
  if (ch2.get_den() != 1 && ch2.get_den() != 2) throw DomainError("ch2 denominator must divide 2");
}

MukaiVector MukaiVector::hilbert(int ns_rank, long long n) {
  if (n < 1) throw DomainError("Hilbert scheme vector needs n >= 1");
  return MukaiVector(1, IntVector(ns_rank, 0), rat(-n));
}

Rational mukai_pair(const MukaiVector& v, const MukaiVector& w, const BilinearLattice& ns) {
  if (v.c1.size() != static_cast<std::size_t>(ns.rank()) || w.c1.size() != static_cast<std::size_t>(ns.rank()))
    throw DomainError("Mukai pairing: c1 dimension does not match the NS lattice");
  return rat(ns.pair(v.c1, w.c1)) - v.rank * w.ch2 - w.rank * v.ch2;
}

CurveData CurveData::smooth(int genus, std::array<long long, 2> twist) {
  CurveData c;
  c.chi = {{{1 - genus, 1}, {-1, 0}}};
  c.twist = twist;
  return c;
}

long long CurveData::euler(const std::array<long long, 2>& x, const std::array<long long, 2>& y) const {
  long long acc = 0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) acc += x[i] * chi[i][j] * y[j];
  return acc;
}

std::array<long long, 2> CurveData::tensor(const std::array<long long, 2>& x,
                                           const std::array<long long, 2>& y) const {
  return {x[0] * y[0], x[0] * y[1] + y[0] * x[1]};
}

long long euler_pair_koszul(const KoszulClass& x, const KoszulClass& y, const CurveData& curve) {
  const auto& a = x.a;
  const auto& b = x.b;
  const auto& c = y.a;
  const auto& d = y.b;
  return curve.euler(a, c) + curve.euler(b, d) - curve.euler(a, d) -
         curve.euler(curve.tensor(a, curve.twist), d);
}

MukaiVector root_to_kclass(const EllipticRoot& beta, CartanType r) {
  return root_to_kclass(beta, EllipticRootSystem(r), BilinearLattice::ns_lattice(r));
}

MukaiVector root_to_kclass(const EllipticRoot& beta, const EllipticRootSystem& sys,
                           const BilinearLattice& ns) {
  sys.validate(beta);
  IntVector c1(ns.rank(), 0);
  c1[ns.index_of("E")] = beta.n;
  for (std::size_t i = 0; i < beta.finite.size(); ++i) c1[2 + i] = beta.finite[i];
  return MukaiVector(0, std::move(c1), rat(beta.m));
}

}  // namespace ellwall
