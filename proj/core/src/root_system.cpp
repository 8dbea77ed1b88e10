#include "ellwall/root_system.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "ellwall/errors.hpp"

namespace ellwall {

namespace {

struct TypeName {
  CartanType type;
  const char* name;
};

constexpr TypeName kNames[] = {
    {CartanType::Am1, "A-1"}, {CartanType::A0, "A0"}, {CartanType::A1, "A1"},
    {CartanType::A2, "A2"},   {CartanType::G2, "G2"}, {CartanType::D4, "D4"},
    {CartanType::F4, "F4"},   {CartanType::E6, "E6"}, {CartanType::E7, "E7"},
    {CartanType::E8, "E8"},
};

QMatrix simply_laced(int rank, const std::vector<std::pair<int, int>>& edges) {
  QMatrix b(rank, rank, Rational(0));
  for (int i = 0; i < rank; ++i) b(i, i) = 2;
  for (auto [i, j] : edges) {
    b(i - 1, j - 1) = -1;
    b(j - 1, i - 1) = -1;
  }
  return b;
}

// Symmetric form on simple roots, Bourbaki numbering.
QMatrix symmetric_form(CartanType t) {
  switch (t) {
    case CartanType::Am1:
    case CartanType::A0:
      return QMatrix();
    case CartanType::A1:
      return simply_laced(1, {});
    case CartanType::A2:
      return simply_laced(2, {{1, 2}});
    case CartanType::G2:
      // alpha1 short (length^2 2/3), alpha2 long.
      return QMatrix::from_rows({{rat(2, 3), rat(-1)}, {rat(-1), rat(2)}});
    case CartanType::D4:
      return simply_laced(4, {{1, 2}, {2, 3}, {2, 4}});
    case CartanType::F4:
      return QMatrix::from_rows({{rat(2), rat(-1), rat(0), rat(0)},
                                 {rat(-1), rat(2), rat(-1), rat(0)},
                                 {rat(0), rat(-1), rat(1), rat(-1, 2)},
                                 {rat(0), rat(0), rat(-1, 2), rat(1)}});
    case CartanType::E6:
      return simply_laced(6, {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {2, 4}});
    case CartanType::E7:
      return simply_laced(7, {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {2, 4}, {6, 7}});
    case CartanType::E8:
      return simply_laced(8, {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {2, 4}, {6, 7}, {7, 8}});
  }
  throw DomainError("unknown Cartan type");
}

}  // namespace

std::string to_string(CartanType t) {
  for (const auto& e : kNames)
    if (e.type == t) return e.name;
  throw DomainError("unknown Cartan type");
}

CartanType parse_cartan_type(std::string_view s) {
  for (const auto& e : kNames)
    if (s == e.name) return e.type;
  if (s == "A_-1" || s == "Am1") return CartanType::Am1;
  throw DomainError("unknown Cartan type '" + std::string(s) + "'");
}

const std::vector<CartanType>& deligne_series() {
  static const std::vector<CartanType> all = {
      CartanType::Am1, CartanType::A0, CartanType::A1, CartanType::A2, CartanType::G2,
      CartanType::D4,  CartanType::F4, CartanType::E6, CartanType::E7, CartanType::E8};
  return all;
}

Rational FiniteRootData::pair(const IntVector& x, const IntVector& y) const {
  if (x.size() != static_cast<std::size_t>(rank) || y.size() != static_cast<std::size_t>(rank))
    throw DomainError("finite root pairing: dimension mismatch");
  Rational acc = 0;
  for (int i = 0; i < rank; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < rank; ++j) {
      if (y[j] == 0) continue;
      acc += form(i, j) * x[i] * y[j];
    }
  }
  return acc;
}

Rational FiniteRootData::pair(const QVector& x, const QVector& y) const {
  if (x.size() != static_cast<std::size_t>(rank) || y.size() != static_cast<std::size_t>(rank))
    throw DomainError("finite root pairing: dimension mismatch");
  Rational acc = 0;
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) acc += form(i, j) * x[i] * y[j];
  return acc;
}

bool FiniteRootData::is_root(const IntVector& x) const {
  return std::binary_search(roots.begin(), roots.end(), x);
}

long long FiniteRootData::height(const IntVector& x) const {
  long long h = 0;
  for (long long c : x) h += c;
  return h;
}

IntVector FiniteRootData::simple_root(int i) const {
  if (i < 0 || i >= rank) throw DomainError("simple root index out of range");
  IntVector e(rank, 0);
  e[i] = 1;
  return e;
}

FiniteRootData build_finite(CartanType t) {
  FiniteRootData d;
  d.type = t;
  d.form = symmetric_form(t);
  d.rank = static_cast<int>(d.form.rows());
  d.cartan = IntMatrix(d.rank, d.rank, 0);
  for (int i = 0; i < d.rank; ++i)
    for (int j = 0; j < d.rank; ++j) d.cartan(i, j) = to_integer(2 * d.form(i, j) / d.form(i, i));

  std::set<IntVector> seen;
  std::deque<IntVector> queue;
  for (int i = 0; i < d.rank; ++i) {
    IntVector e = d.simple_root(i);
    seen.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    IntVector b = queue.front();
    queue.pop_front();
    for (int i = 0; i < d.rank; ++i) {
      long long coef = 0;  // <b, alpha_i^vee>
      for (int j = 0; j < d.rank; ++j) coef += b[j] * d.cartan(i, j);
      if (coef == 0) continue;
      IntVector r = b;
      r[i] -= coef;
      if (seen.insert(r).second) queue.push_back(r);
    }
  }
  d.roots.assign(seen.begin(), seen.end());
  for (const auto& r : d.roots)
    if (d.height(r) > 0) d.positive_roots.push_back(r);
  std::stable_sort(d.positive_roots.begin(), d.positive_roots.end(),
                   [&](const IntVector& a, const IntVector& b) { return d.height(a) < d.height(b); });
  if (!d.positive_roots.empty()) d.highest_root = d.positive_roots.back();
  return d;
}

bool EllipticRoot::finite_is_zero() const {
  return std::all_of(finite.begin(), finite.end(), [](long long c) { return c == 0; });
}

EllipticRoot operator+(const EllipticRoot& a, const EllipticRoot& b) {
  if (a.finite.size() != b.finite.size()) throw DomainError("root sum: dimension mismatch");
  EllipticRoot r = a;
  for (std::size_t i = 0; i < r.finite.size(); ++i) r.finite[i] += b.finite[i];
  r.m += b.m;
  r.n += b.n;
  return r;
}

EllipticRoot operator-(const EllipticRoot& a) {
  EllipticRoot r = a;
  for (auto& c : r.finite) c = -c;
  r.m = -r.m;
  r.n = -r.n;
  return r;
}

std::string to_string(const EllipticRoot& r) {
  std::ostringstream os;
  os << "([";
  for (std::size_t i = 0; i < r.finite.size(); ++i) os << (i ? "," : "") << r.finite[i];
  os << "]," << r.m << "," << r.n << ")";
  return os.str();
}

EllipticRootSystem::EllipticRootSystem(CartanType t, Marking marking)
    : fin_(build_finite(t)), marking_(marking) {}

EllipticRootSystem build_elliptic(CartanType t, Marking marking) {
  return EllipticRootSystem(t, marking);
}

bool EllipticRootSystem::contains(const EllipticRoot& b) const {
  if (b.finite.size() != static_cast<std::size_t>(fin_.rank)) return false;
  if (b.finite_is_zero()) return b.m != 0 || b.n != 0;
  return fin_.is_root(b.finite);
}

void EllipticRootSystem::validate(const EllipticRoot& b) const {
  if (b.finite.size() != static_cast<std::size_t>(fin_.rank))
    throw DomainError("root " + to_string(b) + ": finite part has wrong dimension for " +
                      to_string(type()));
  if (!contains(b)) throw DomainError(to_string(b) + " is not a root of " + to_string(type()));
}

bool EllipticRootSystem::is_real(const EllipticRoot& b) const {
  validate(b);
  return !b.finite_is_zero();
}

bool EllipticRootSystem::is_imaginary(const EllipticRoot& b) const { return !is_real(b); }

Rational EllipticRootSystem::pair(const EllipticRoot& a, const EllipticRoot& b) const {
  return fin_.pair(a.finite, b.finite);
}

QMatrix EllipticRootSystem::gram() const {
  int d = dim();
  QMatrix g(d, d, Rational(0));
  for (int i = 0; i < fin_.rank; ++i)
    for (int j = 0; j < fin_.rank; ++j) g(i, j) = fin_.form(i, j);
  return g;
}

QVector EllipticRootSystem::coords(const EllipticRoot& b) const {
  if (b.finite.size() != static_cast<std::size_t>(fin_.rank))
    throw DomainError("root coordinates: dimension mismatch");
  QVector x = to_qvector(b.finite);
  x.push_back(rat(b.m));
  x.push_back(rat(b.n));
  return x;
}

std::optional<EllipticRoot> EllipticRootSystem::from_coords(const QVector& x) const {
  if (x.size() != static_cast<std::size_t>(dim())) throw DomainError("coordinates: dimension mismatch");
  for (const auto& c : x)
    if (!is_integer(c)) return std::nullopt;
  EllipticRoot r;
  for (int i = 0; i < fin_.rank; ++i) r.finite.push_back(to_integer(x[i]));
  r.m = to_integer(x[fin_.rank]);
  r.n = to_integer(x[fin_.rank + 1]);
  return r;
}

std::vector<EllipticRoot> EllipticRootSystem::roots_in_box(long long m_max, long long n_max,
                                                           long long height_max) const {
  if (m_max < 0 || n_max < 0) throw DomainError("roots_in_box: bounds must be non-negative");
  std::vector<IntVector> fins;
  for (const auto& r : fin_.roots) {
    long long h = fin_.height(r);
    if (height_max < 0 || (h < 0 ? -h : h) <= height_max) fins.push_back(r);
  }
  IntVector zero(fin_.rank, 0);
  std::vector<EllipticRoot> out;
  for (long long m = -m_max; m <= m_max; ++m) {
    for (long long n = -n_max; n <= n_max; ++n) {
      if (m != 0 || n != 0) out.push_back(EllipticRoot{zero, m, n});
      for (const auto& f : fins) out.push_back(EllipticRoot{f, m, n});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<AffineRoot> EllipticRootSystem::affine_image(const EllipticRoot& b) const {
  validate(b);
  long long k = marking_ == Marking::Delta2 ? b.m : b.n;
  if (b.finite_is_zero() && k == 0) return std::nullopt;
  return AffineRoot{b.finite, k};
}

int StarShapedData::node_count() const {
  int n = 1;
  for (int a : arm_lengths) {
    if (a < 1) throw DomainError("star-shaped arm lengths must be positive");
    n += a;
  }
  return n;
}

IntMatrix StarShapedData::cartan() const {
  int n = node_count();
  IntMatrix c(n, n, 0);
  for (int i = 0; i < n; ++i) c(i, i) = 2;
  c(0, 0) = 2 - 2 * (central_multiplicity - 1);
  int next = 1;
  for (int a : arm_lengths) {
    int prev = 0;
    for (int j = 0; j < a; ++j) {
      c(prev, next) = c(next, prev) = -1;
      prev = next++;
    }
  }
  return c;
}

namespace {

long long cyclic_quadratic_form(int k, const IntVector& c) {
  if (k == 1) return 0;
  long long q = 0;
  for (int i = 0; i < k; ++i) q += c[i] * c[i];
  if (k == 2) return q - 2 * c[0] * c[1];
  for (int i = 0; i < k; ++i) q -= c[i] * c[(i + 1) % k];
  return q;
}

}  // namespace

IntVector CyclicQuiverRoots::delta(int k) { return IntVector(k, 1); }

bool CyclicQuiverRoots::is_root(int k, const IntVector& c) {
  if (k < 1 || c.size() != static_cast<std::size_t>(k)) throw DomainError("cyclic quiver root: dimension mismatch");
  if (cyclic_quadratic_form(k, c) == 1) return true;
  bool constant = std::all_of(c.begin(), c.end(), [&](long long x) { return x == c[0]; });
  return constant && c[0] != 0;
}

bool CyclicQuiverRoots::is_real(int k, const IntVector& c) {
  return is_root(k, c) && cyclic_quadratic_form(k, c) == 1;
}

std::vector<IntVector> CyclicQuiverRoots::positive_roots(int k, long long max_height) {
  std::vector<IntVector> out;
  // Every positive root is delta-multiple plus a cyclic arc [start, start+len).
  for (long long mult = 0; mult * k <= max_height; ++mult) {
    if (mult > 0) out.push_back(IntVector(k, mult));
    for (int start = 0; start < k; ++start) {
      for (int len = 1; len < k; ++len) {
        if (mult * k + len > max_height) break;
        IntVector c(k, mult);
        for (int j = 0; j < len; ++j) c[(start + j) % k] += 1;
        out.push_back(c);
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace ellwall
