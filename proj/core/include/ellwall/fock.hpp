#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ellwall/qh.hpp"
#include "ellwall/rational.hpp"

namespace ellwall {

// Basis of H*(E). sigma+- are odd.
enum class Label : std::uint8_t { E = 0, SigmaPlus = 1, SigmaMinus = 2, Pt = 3 };

constexpr std::array<Label, 4> kAllLabels = {Label::E, Label::SigmaPlus, Label::SigmaMinus, Label::Pt};

bool is_odd(Label l);
// <E,pt> = <pt,E> = 1, <s+,s-> = 1 = -<s-,s+>, others 0.
int label_pairing(Label a, Label b);
// The unique label pairing nontrivially with l.
Label dual_label(Label l);
std::string to_string(Label l);  // "E", "s+", "s-", "pt"
Label parse_label(const std::string& s);

// Product on H*(E) used for gamma * eta in the toroidal bracket.
enum class StarProduct {
  Convolution,  // unit pt; s+ * s- = E = -(s- * s+); E * x = 0 for x != pt
  Cup,          // unit E; s+ * s- = pt = -(s- * s+); pt * x = 0 for x != E
};

struct LabelProduct {
  int sign = 0;  // 0 means the product vanishes
  Label label = Label::E;
};
LabelProduct star(Label a, Label b, StarProduct p = StarProduct::Convolution);

struct CohClass {
  std::array<Rational, 4> c{};  // coefficients on E, s+, s-, pt

  static CohClass basis(Label l);
  Rational coeff(Label l) const { return c[static_cast<int>(l)]; }
  bool is_zero() const;
  friend bool operator==(const CohClass&, const CohClass&) = default;
};

Rational pairing(const CohClass& x, const CohClass& y);
CohClass star(const CohClass& x, const CohClass& y, StarProduct p = StarProduct::Convolution);

using SL2 = std::array<std::array<long long, 2>, 2>;
// Fixes E and pt; acts by g on span(s+, s-) with s+ = (1,0), s- = (0,1) as columns.
CohClass sl2_label_action(const SL2& g, const CohClass& x);

// A Heisenberg mode alpha_{-k}(label) (creator) or alpha_k(label) (annihilator); k > 0.
struct Mode {
  std::int16_t k = 1;
  Label label = Label::E;
  friend bool operator==(const Mode&, const Mode&) = default;
};

// Canonical order: k descending, then label order E, s+, s-, pt.
inline bool mode_before(const Mode& a, const Mode& b) {
  if (a.k != b.k) return a.k > b.k;
  return static_cast<int>(a.label) < static_cast<int>(b.label);
}

struct MonomialLess {
  bool operator()(const std::vector<Mode>& a, const std::vector<Mode>& b) const;
};

using Monomial = std::vector<Mode>;

int energy(const Monomial& m);
bool is_odd(const Monomial& m);

// Sorts a product of modes into canonical order. Returns the Koszul sign, or
// 0 if an odd mode repeats (the product vanishes).
int canonicalize(Monomial& m);

// Sum of coefficient * prod(alpha_{-k}(label)) e^{charge E}|0>, all terms in
// one charge sector.
class FockState {
 public:
  using Terms = std::map<Monomial, QH, MonomialLess>;

  explicit FockState(int charge = 0) : charge_(charge) {}
  static FockState vacuum(int charge = 0);
  // Product of the given creators (in the given order) on the vacuum.
  static FockState from_modes(int charge, Monomial modes, const QH& coeff = QH(1));

  int charge() const { return charge_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int max_energy() const;  // -1 for the zero state

  // Adds coeff * m, m canonical.
  void add(const Monomial& m, const QH& coeff);
  FockState& operator+=(const FockState& o);
  FockState& operator-=(const FockState& o);
  FockState& operator*=(const QH& q);
  friend FockState operator+(FockState a, const FockState& b) { return a += b; }
  friend FockState operator-(FockState a, const FockState& b) { return a -= b; }
  friend FockState operator*(FockState a, const QH& q) { return a *= q; }
  friend bool operator==(const FockState& a, const FockState& b);

  // Nonzero q with *this == q * other, if one exists.
  std::optional<Rational> ratio_to(const FockState& other) const;

  std::string to_string() const;

 private:
  void adopt_charge(const FockState& o);
  int charge_;
  Terms terms_;
};

// All canonical monomials of energy <= max_energy over the given labels.
std::vector<Monomial> monomial_basis(int max_energy, const std::vector<Label>& labels);
// Monomials of energy exactly e.
std::vector<Monomial> monomials_of_energy(int e, const std::vector<Label>& labels);

// Unit of each term: e^{shift E} * creators * chat^cpow * annihilators, where
// chat reads the charge of the state it acts on.
struct OpKey {
  Monomial annihilators;
  int shift = 0;
  int cpow = 0;
  Monomial creators;
  friend bool operator==(const OpKey&, const OpKey&) = default;
};

struct OpKeyLess {
  bool operator()(const OpKey& a, const OpKey& b) const;
};

// Finite sum of normal-ordered terms. Truncation N: only terms with
// annihilation energy <= N are kept, so application is exact on states of
// energy <= N.
class OperatorExpr {
 public:
  using Terms = std::map<OpKey, QH, OpKeyLess>;

  static constexpr int kUnbounded = 1 << 20;
  explicit OperatorExpr(int truncation = kUnbounded) : truncation_(truncation) {}
  static OperatorExpr identity(int truncation);
  static OperatorExpr scalar(const QH& q, int truncation);
  // alpha_n(label): creator for n < 0, annihilator for n > 0, and for n = 0
  // the zero mode <label, E> chat.
  static OperatorExpr mode(int n, Label l, int truncation);
  static OperatorExpr mode(int n, const CohClass& x, int truncation);
  static OperatorExpr charge_shift(int m, int truncation);

  int truncation() const { return truncation_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // 0 even, 1 odd, -1 inhomogeneous (zero counts as even).
  int parity() const;
  int max_creation_energy() const;
  int max_annihilation_energy() const;
  // min over terms of (annihilation energy - creation energy); kUnbounded if zero.
  int min_energy_drop() const;

  void add_term(const OpKey& key, const QH& coeff);  // key must be canonical
  OperatorExpr& operator+=(const OperatorExpr& o);
  OperatorExpr& operator-=(const OperatorExpr& o);
  OperatorExpr& operator*=(const QH& q);
  friend OperatorExpr operator+(OperatorExpr a, const OperatorExpr& b) { return a += b; }
  friend OperatorExpr operator-(OperatorExpr a, const OperatorExpr& b) { return a -= b; }
  friend OperatorExpr operator*(OperatorExpr a, const QH& q) { return a *= q; }

  // Normal-ordered product (Wick contractions). Exact up to annihilation
  // energy min(N_y, N_x + min_energy_drop(y)), which becomes its truncation.
  friend OperatorExpr operator*(const OperatorExpr& x, const OperatorExpr& y);

  OperatorExpr truncated(int n) const;

  // Throws TruncationError if the state has energy above the truncation.
  FockState apply(const FockState& s) const;

  std::string to_string() const;

 private:
  int truncation_;
  Terms terms_;
};

// x y - (-1)^{|x||y|} y x for homogeneous x, y.
OperatorExpr supercommutator(const OperatorExpr& x, const OperatorExpr& y);

// Terms of annihilation energy <= n agree.
bool equal_up_to(const OperatorExpr& x, const OperatorExpr& y, int n);

// alpha_n(x) applied to s; n != 0. Throws TruncationError when the result
// would exceed max_energy (if max_energy >= 0).
FockState alpha_apply(int n, const CohClass& x, const FockState& s, int max_energy = -1);

// w^{0,n} = (1/|n|) alpha_n([|n|]^* x), [n]^* scaling E, s+-, pt by 1, n, n^2.
OperatorExpr w_small(int n, Label l, int truncation);

// Lattice vertex operator Y(e^{mE}, z) = e^{mE} :exp(sum_{n != 0} alpha_n(E) z^{-n} / (-n)):
// mode(n) is the coefficient of z^{-n}; it lowers energy by n.
class VertexField {
 public:
  VertexField(int m, int truncation);
  int charge() const { return m_; }
  int truncation() const { return truncation_; }
  OperatorExpr mode(int n) const;

 private:
  int m_;
  int truncation_;
};

// Conventions for the d_m field (label pt at nonzero slope). Off by default.
enum class OmegaConvention { FreeField };
enum class DzConvention { Derivative, Euler };
struct ExtendedConventions {
  bool enabled = false;
  OmegaConvention omega = OmegaConvention::FreeField;
  DzConvention dz = DzConvention::Derivative;
};

// w^{a,b}: mode z^{-b} of the slope-a field for the label; a = 0 gives w_small.
// E: (1/a) Gamma_a.  s+-: z :alpha(s+-, z) Gamma_a(z):.  pt: d_a (extended).
OperatorExpr w_general(int a, int b, Label l, int truncation, const ExtendedConventions& ext = {});

// Parity of w^{a,b}_l.
inline int w_parity(Label l) { return is_odd(l) ? 1 : 0; }

// A generator w^{a,b}_label.
struct Generator {
  int a = 0;
  int b = 0;
  Label label = Label::E;
  friend auto operator<=>(const Generator&, const Generator&) = default;
};
std::string to_string(const Generator& g);

enum class PairStatus { Zero, Proportional, Central, Mismatch };
std::string to_string(PairStatus s);

// Raw supercommutator [w_x, w_y] compared against the generator predicted by
// the bracket, before any rescaling.
struct BracketPair {
  Generator x;
  Generator y;
  std::optional<Generator> target;  // absent when the predicted product vanishes
  bool central = false;             // (a+c, b+d) = (0, 0)
  Rational expected;                // -(ad - bc) * sign of gamma * eta
  PairStatus status = PairStatus::Zero;
  Rational value = 0;  // lhs = value * w_target, or value * id when central
  int exact_to = 0;    // comparison is exact for annihilation energy <= exact_to
  std::string witness;  // first disagreeing term on mismatch
};

BracketPair bracket_pair(const Generator& x, const Generator& y, int truncation,
                         StarProduct product = StarProduct::Convolution, const ExtendedConventions& ext = {});

struct BracketOptions {
  int truncation = 6;
  int a_max = 1;
  int b_max = 2;
  std::vector<Label> labels{Label::E, Label::SigmaPlus, Label::SigmaMinus};
  StarProduct product = StarProduct::Convolution;
  ExtendedConventions ext;
};

struct RescaleFactor {
  Generator generator;
  Rational lambda;
};

// Result of the sweep over all generator pairs in the box. Generators are
// rescaled by lambda; the bracket holds iff every pair is consistent after
// rescaling. Central terms are fitted as (a c_s + b c_t) <gamma, eta>.
struct BracketReport {
  BracketOptions options;
  std::vector<BracketPair> pairs;
  bool solvable = false;  // a nonzero rational rescaling exists
  std::vector<RescaleFactor> rescale;  // every generator involved, sorted
  std::optional<Rational> c_s;
  std::optional<Rational> c_t;
  std::vector<std::string> failures;
  bool match() const { return solvable && failures.empty(); }
};

BracketReport bracket_sweep(const BracketOptions& opt);

// rho(f): sign prod (-1)^{k_i+1}, charge c -> -n - c. Throws DomainError on
// terms of weight != n.
FockState monodromy_f(const FockState& s, int n);

// rho(s): replaces each creator alpha_{-k}(l) by w^{1,-k}_l, applied right to left.
FockState monodromy_s(const FockState& s, int truncation, const ExtendedConventions& ext = {});

}  // namespace ellwall
