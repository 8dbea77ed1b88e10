#include "ellwall/weyl.hpp"

#include "ellwall/errors.hpp"

namespace ellwall {

WeylElement WeylElement::compose(const WeylElement& rhs) const {
  WeylElement out;
  out.matrix = matrix * rhs.matrix;
  out.word = word;
  out.word.insert(out.word.end(), rhs.word.begin(), rhs.word.end());
  return out;
}

WeylElement WeylElement::power(int k) const {
  if (k < 0) throw DomainError("negative power of a Weyl element");
  WeylElement out{QMatrix::identity(matrix.rows(), Rational(0), Rational(1)), {}};
  for (int i = 0; i < k; ++i) out = out.compose(*this);
  return out;
}

QVector WeylElement::apply(const QVector& x) const { return matrix.apply(x); }

EllipticRoot WeylElement::apply(const EllipticRootSystem& sys, const EllipticRoot& b) const {
  auto r = sys.from_coords(apply(sys.coords(b)));
  if (!r) throw DomainError("Weyl image left the root lattice");
  return *r;
}

WeylElement weyl_identity(const EllipticRootSystem& sys) {
  return {QMatrix::identity(sys.dim(), Rational(0), Rational(1)), {}};
}

WeylElement reflect(const EllipticRootSystem& sys, const EllipticRoot& b) {
  if (!sys.is_real(b)) throw DomainError("no reflection through imaginary root " + to_string(b));
  QMatrix g = sys.gram();
  QVector bc = sys.coords(b);
  Rational len = sys.pair(b, b);
  QVector gb = g.apply(bc);  // G b, so (x, b) = (G b) . x
  int d = sys.dim();
  QMatrix m = QMatrix::identity(d, Rational(0), Rational(1));
  for (int i = 0; i < d; ++i) {
    if (sgn(bc[i]) == 0) continue;
    for (int j = 0; j < d; ++j) m(i, j) -= 2 * bc[i] * gb[j] / len;
  }
  return {m, {"w" + to_string(b)}};
}

bool preserves_form(const EllipticRootSystem& sys, const QMatrix& m) {
  QMatrix g = sys.gram();
  return m.transpose() * g * m == g;
}

bool fixes_radical_pointwise(const EllipticRootSystem& sys, const QMatrix& m) {
  int r = sys.rank();
  for (int c = r; c < r + 2; ++c)
    for (int i = 0; i < r + 2; ++i)
      if (m(i, c) != (i == c ? 1 : 0)) return false;
  return true;
}

bool permutes_roots(const EllipticRootSystem& sys, const QMatrix& m, long long box) {
  for (const auto& b : sys.roots_in_box(box, box)) {
    auto img = sys.from_coords(m.apply(sys.coords(b)));
    if (!img || !sys.contains(*img)) return false;
  }
  return true;
}

TranslationPart translation_part(const EllipticRootSystem& sys, const WeylElement& w) {
  const QMatrix& m = w.matrix;
  int r = sys.rank();
  if (m.rows() != static_cast<std::size_t>(r + 2) || m.cols() != static_cast<std::size_t>(r + 2))
    throw DomainError("translation_part: matrix has the wrong size");
  if (!preserves_form(sys, m)) throw DomainError("translation_part: element does not preserve the form");
  if (!fixes_radical_pointwise(sys, m))
    throw DomainError("translation_part: element does not fix the radical pointwise");
  TranslationPart tp;
  tp.finite_part = finite_projection(m, r);
  // Row functionals r_k with (x, l_k) = r_k . x, so l_k = B^{-1} r_k.
  QVector l1(r), l2(r);
  if (r > 0) {
    QVector r1 = m.row(r), r2 = m.row(r + 1);
    r1.resize(r);
    r2.resize(r);
    auto b_inv = inverse(sys.finite().form, Rational(0), Rational(1));
    if (!b_inv) throw DomainError("translation_part: degenerate finite form");
    l1 = b_inv->apply(r1);
    l2 = b_inv->apply(r2);
  }
  if (sys.marking() == Marking::Delta2) {
    tp.affine_translation = l1;
    tp.kernel_translation = l2;
  } else {
    tp.affine_translation = l2;
    tp.kernel_translation = l1;
  }
  return tp;
}

QMatrix affine_quotient(const EllipticRootSystem& sys, const QMatrix& m) {
  int r = sys.rank();
  int drop = sys.marking() == Marking::Delta2 ? r + 1 : r;
  QMatrix out(r + 1, r + 1, Rational(0));
  int oi = 0;
  for (int i = 0; i < r + 2; ++i) {
    if (i == drop) continue;
    int oj = 0;
    for (int j = 0; j < r + 2; ++j) {
      if (j == drop) continue;
      out(oi, oj) = m(i, j);
      ++oj;
    }
    ++oi;
  }
  return out;
}

QMatrix finite_projection(const QMatrix& m, int rank) {
  QMatrix out(rank, rank, Rational(0));
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) out(i, j) = m(i, j);
  return out;
}

GL2 gl2_multiply(const GL2& a, const GL2& b) {
  GL2 c{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
  return c;
}

long long gl2_det(const GL2& g) { return g[0][0] * g[1][1] - g[0][1] * g[1][0]; }

bool gl2_is_identity(const GL2& g) { return g[0][0] == 1 && g[0][1] == 0 && g[1][0] == 0 && g[1][1] == 1; }

QMatrix gl2_lift(const EllipticRootSystem& sys, const GL2& g) {
  long long det = gl2_det(g);
  if (det != 1 && det != -1) throw DomainError("GL(2,Z) element must have determinant +-1");
  int r = sys.rank();
  QMatrix m = QMatrix::identity(r + 2, Rational(0), Rational(1));
  // Column vector (m, n)^T maps to g^T (m, n)^T.
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) m(r + i, r + j) = rat(g[j][i]);
  return m;
}

QMatrix ExtendedElement::action(const EllipticRootSystem& sys) const { return gl2_lift(sys, gl2) * weyl.matrix; }

ExtendedElement ExtendedElement::compose(const EllipticRootSystem& sys, const ExtendedElement& rhs) const {
  ExtendedElement out;
  QMatrix full = action(sys) * rhs.action(sys);
  // (m,n) |-> ((m,n) g_rhs) g_this.
  out.gl2 = gl2_multiply(rhs.gl2, gl2);
  GL2 inv{{{out.gl2[1][1], -out.gl2[0][1]}, {-out.gl2[1][0], out.gl2[0][0]}}};
  long long det = gl2_det(out.gl2);
  for (auto& row : inv)
    for (auto& x : row) x *= det;  // inverse of a det +-1 matrix
  out.weyl.matrix = gl2_lift(sys, inv) * full;
  out.weyl.word = weyl.word;
  out.weyl.word.insert(out.weyl.word.end(), rhs.weyl.word.begin(), rhs.weyl.word.end());
  out.label = label + "*" + rhs.label;
  return out;
}

bool ExtendedElement::fixes_marking_line(const EllipticRootSystem& sys) const {
  QMatrix a = action(sys);
  int r = sys.rank();
  int keep = sys.marking() == Marking::Delta2 ? r + 1 : r;
  // Image of the marking generator must be a multiple of it.
  for (int i = 0; i < r + 2; ++i)
    if (i != keep && sgn(a(i, keep)) != 0) return false;
  return sgn(a(keep, keep)) != 0;
}

std::vector<ExtendedElement> marking_stabilizer_generators(const EllipticRootSystem& sys) {
  std::vector<ExtendedElement> gens;
  const auto& fin = sys.finite();
  int r = sys.rank();
  GL2 id{{{1, 0}, {0, 1}}};
  for (int i = 0; i < r; ++i) {
    WeylElement w = reflect(sys, EllipticRoot{fin.simple_root(i), 0, 0});
    w.word = {"s" + std::to_string(i + 1)};
    gens.push_back({w, id, "s" + std::to_string(i + 1)});
  }
  if (r > 0) {
    IntVector neg_theta = fin.highest_root;
    for (auto& c : neg_theta) c = -c;
    WeylElement w1 = reflect(sys, EllipticRoot{neg_theta, 1, 0});
    w1.word = {"s(d1-theta)"};
    gens.push_back({w1, id, "s(d1-theta)"});
    WeylElement w2 = reflect(sys, EllipticRoot{neg_theta, 0, 1});
    w2.word = {"s(d2-theta)"};
    gens.push_back({w2, id, "s(d2-theta)"});
  }
  GL2 t, flip;
  if (sys.marking() == Marking::Delta2) {
    t = {{{1, 1}, {0, 1}}};
    flip = {{{-1, 0}, {0, 1}}};
  } else {
    t = {{{1, 0}, {1, 1}}};
    flip = {{{1, 0}, {0, -1}}};
  }
  gens.push_back({weyl_identity(sys), t, "T"});
  gens.push_back({weyl_identity(sys), flip, "R"});
  return gens;
}

int coxeter_exponent(const FiniteRootData& fin, int i, int j) {
  if (i == j) return 1;
  long long p = fin.cartan(i, j) * fin.cartan(j, i);
  switch (p) {
    case 0:
      return 2;
    case 1:
      return 3;
    case 2:
      return 4;
    case 3:
      return 6;
    default:
      throw DomainError("invalid Cartan matrix entry product");
  }
}

InfiniteOrderCertificate certify_infinite_order(const GL2& g) {
  InfiniteOrderCertificate c;
  GL2 n{{{g[0][0] - 1, g[0][1]}, {g[1][0], g[1][1] - 1}}};
  GL2 n2 = gl2_multiply(n, n);
  c.unipotent = n2[0][0] == 0 && n2[0][1] == 0 && n2[1][0] == 0 && n2[1][1] == 0;
  c.nontrivial = !gl2_is_identity(g);
  GL2 p{{{1, 0}, {0, 1}}};
  for (int k = 1; k <= 6; ++k) {
    p = gl2_multiply(p, g);
    if ((k == 1 || k == 2 || k == 3 || k == 4 || k == 6) && gl2_is_identity(p)) {
      c.finite_order = k;
      break;
    }
  }
  return c;
}

}  // namespace ellwall
