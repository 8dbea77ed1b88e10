#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ellwall/cyclotomic.hpp"
#include "ellwall/matrix.hpp"
#include "ellwall/root_system.hpp"

namespace ellwall {

using CMatrix = Matrix<Cyclotomic>;

// a_g for g = zeta^0 .. zeta^{k-1} in mu_k, coefficients in Q(zeta_k).
struct BimoduleParam {
  int k = 1;
  std::vector<Cyclotomic> a;

  static BimoduleParam zero(int k);
  static BimoduleParam delta_e(int k);  // a_e = 1, others 0
  void validate() const;
};

// Table of dim HH_0 for cyclic orbifold curves: orders 1, 2, 3, 4, 6.
int hh0_dim(int order);
// HH_0(E) plus one entry per nontrivial invariant fixed-point summand; only
// exposed for orders 1, 2, 3, where the naive count reproduces the table.
std::optional<std::vector<int>> hh0_breakdown(int order);

struct CharacterValue {
  int r;
  Cyclotomic value;
};

// A_r = sum_g a_g zeta^{r g}, r taken mod k.
Cyclotomic char_value(const BimoduleParam& p, long long r);
std::vector<CharacterValue> char_values(const BimoduleParam& p);

enum class TensorKind { Split, Extension };

struct TensorDecomposition {
  TensorKind kind;
  int i;           // s_i
  int i_minus_1;   // index of s_{i-1}
};

// s_i (x) E_a = s_i + s_{i-1} if A_i = 0, else the extension e_{i,i-1}.
TensorDecomposition tensor_simple(long long i, const BimoduleParam& p);

// [[J, diag(A_0..A_n)], [0, J]] with J the (n+1) nilpotent Jordan block.
CMatrix y_matrix(int n, const BimoduleParam& p);

Cyclotomic trace_a(int n, const BimoduleParam& p);
bool splits(int n, const BimoduleParam& p);

// Jordan block sizes (descending) of a nilpotent matrix, from ranks of powers.
// Throws DomainError if the matrix is not nilpotent.
std::vector<int> nilpotent_jordan_type(const CMatrix& m);

// Linear functional on (a_g): f(a) = sum_g coeff[g] a_g.
struct RootFunctional {
  int k = 1;
  std::vector<Cyclotomic> coeff;

  Cyclotomic evaluate(const BimoduleParam& p) const;
  bool contains(const BimoduleParam& p) const { return evaluate(p).is_zero(); }
};

// beta = sum_i c_i alpha_i on the cyclic quiver with k nodes. Real roots give
// a |-> sum_i c_i A_i; the class delta gives a |-> k a_e. Imaginary classes
// other than delta are rejected.
RootFunctional root_hyperplane(int k, const IntVector& beta);

// Representation of the doubled cyclic quiver. cw[i]: V_i -> V_{i-1},
// ccw[i]: V_i -> V_{i+1} (indices mod k).
struct PreprojRep {
  int k = 1;
  std::vector<int> dims;
  std::vector<CMatrix> cw;
  std::vector<CMatrix> ccw;
  std::vector<Cyclotomic> lambda;
};

struct PreprojReport {
  bool relation_holds = false;
  bool lambda_matches = false;  // lambda_i == A_i
  bool cw_nilpotent = false;
  int sign = 1;
  std::vector<CMatrix> residuals;  // per node: ccw cw - cw ccw - sign lambda
  bool ok() const { return relation_holds && lambda_matches; }
};

// Relation at node i: ccw[i-1] cw[i] - cw[i+1] ccw[i] = sign * lambda_i * id.
PreprojReport preproj_check(const PreprojRep& rep, const BimoduleParam& p, int sign = 1);

// The length-(n+1) module with basis e_0..e_n, e_j at node j mod k:
// ccw e_j = e_{j+1}, cw e_j = c_j e_{j-1}, c_0 = 0, c_{j+1} = c_j - sign A_j.
// Satisfies the relation iff Tr A = 0.
PreprojRep jet_module(int n, const BimoduleParam& p, int sign = 1);

// "i,A_i,split|ext" lines with a header row.
std::string tensor_table_csv(const BimoduleParam& p);

}  // namespace ellwall
