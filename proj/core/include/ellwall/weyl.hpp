#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ellwall/matrix.hpp"
#include "ellwall/root_system.hpp"

namespace ellwall {

// Linear map on F = h + Q delta1 + Q delta2 in coordinates
// (simple roots, delta1, delta2), acting on column vectors.
struct WeylElement {
  QMatrix matrix;
  std::vector<std::string> word;  // provenance only; equality ignores it

  // this o rhs (rhs applied first).
  WeylElement compose(const WeylElement& rhs) const;
  WeylElement power(int k) const;
  QVector apply(const QVector& x) const;
  // Image of a lattice vector; throws DomainError if it leaves the lattice.
  EllipticRoot apply(const EllipticRootSystem& sys, const EllipticRoot& b) const;

  friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.matrix == b.matrix; }
};

WeylElement weyl_identity(const EllipticRootSystem& sys);

// w_b(x) = x - 2 (x,b)/(b,b) b. Throws DomainError for imaginary b.
WeylElement reflect(const EllipticRootSystem& sys, const EllipticRoot& b);

bool preserves_form(const EllipticRootSystem& sys, const QMatrix& m);
bool fixes_radical_pointwise(const EllipticRootSystem& sys, const QMatrix& m);
// Every root in the box maps to a root.
bool permutes_roots(const EllipticRootSystem& sys, const QMatrix& m, long long box);

// w(x) = w0(x) + (x, l1) delta1 + (x, l2) delta2 for x in h.
struct TranslationPart {
  QMatrix finite_part;            // w0, rank x rank
  QVector affine_translation;     // translation surviving in the affine quotient
  QVector kernel_translation;     // translation along the marking line
};

// Throws DomainError if w does not preserve the form or has the wrong block shape.
TranslationPart translation_part(const EllipticRootSystem& sys, const WeylElement& w);

// Action on F / (marking line), coordinates (simple roots, unmarked delta).
QMatrix affine_quotient(const EllipticRootSystem& sys, const QMatrix& m);
// Action on h: top-left block.
QMatrix finite_projection(const QMatrix& m, int rank);

using GL2 = std::array<std::array<long long, 2>, 2>;

GL2 gl2_multiply(const GL2& a, const GL2& b);
long long gl2_det(const GL2& g);
bool gl2_is_identity(const GL2& g);

// An element of IW^ell seen through its action on F. The GL(2,Z) part acts on
// row vectors (m, n) |-> (m, n) g of radical coordinates; the lift used here is
// the identity on h, so the full matrix is diag(I, g^T) * weyl.
struct ExtendedElement {
  WeylElement weyl;
  GL2 gl2{{{1, 0}, {0, 1}}};
  std::string label;

  QMatrix action(const EllipticRootSystem& sys) const;
  // this o rhs.
  ExtendedElement compose(const EllipticRootSystem& sys, const ExtendedElement& rhs) const;
  bool fixes_marking_line(const EllipticRootSystem& sys) const;
};

QMatrix gl2_lift(const EllipticRootSystem& sys, const GL2& g);

// Simple reflections, w_{delta1 - theta}, w_{delta2 - theta}, and the two
// GL(2,Z) generators of the stabilizer of the marking line (translation T and
// the order-2 flip). Rank-0 types return only the GL(2,Z) pair.
std::vector<ExtendedElement> marking_stabilizer_generators(const EllipticRootSystem& sys);

// Coxeter exponent m_ij from the Cartan matrix.
int coxeter_exponent(const FiniteRootData& fin, int i, int j);

// Certificate that g has infinite order: g - I is nonzero nilpotent.
struct InfiniteOrderCertificate {
  bool unipotent = false;         // (g - I)^2 = 0
  bool nontrivial = false;        // g != I
  std::optional<int> finite_order;  // order if g^k = I for some k in {1,2,3,4,6}
  bool infinite() const { return unipotent && nontrivial && !finite_order; }
};

InfiniteOrderCertificate certify_infinite_order(const GL2& g);

}  // namespace ellwall
