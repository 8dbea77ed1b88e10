#include "ellwall/local_model.hpp"

#include <sstream>

#include "ellwall/errors.hpp"

namespace ellwall {

namespace {

long long mod(long long a, long long k) { return ((a % k) + k) % k; }

CMatrix zeros(int k, std::size_t r, std::size_t c) { return CMatrix(r, c, Cyclotomic::zero(k)); }

CMatrix mul(int k, const CMatrix& a, const CMatrix& b) { return CMatrix::multiply(a, b, Cyclotomic::zero(k)); }

}  // namespace

BimoduleParam BimoduleParam::zero(int k) {
  if (k < 1) throw DomainError("group order must be positive");
  return BimoduleParam{k, std::vector<Cyclotomic>(k, Cyclotomic::zero(k))};
}

BimoduleParam BimoduleParam::delta_e(int k) {
  BimoduleParam p = zero(k);
  p.a[0] = Cyclotomic::one(k);
  return p;
}

void BimoduleParam::validate() const {
  if (k < 1) throw DomainError("group order must be positive");
  if (a.size() != static_cast<std::size_t>(k)) throw DomainError("bimodule parameter needs one entry per group element");
  for (const auto& x : a)
    if (x.order() != k) throw DomainError("bimodule parameter entries must lie in Q(zeta_k)");
}

int hh0_dim(int order) {
  switch (order) {
    case 1:
      return 2;
    case 2:
      return 6;
    case 3:
      return 8;
    case 4:
      return 9;
    case 6:
      return 10;
    default:
      throw DomainError("no elliptic orbifold with cyclic group of order " + std::to_string(order));
  }
}

std::optional<std::vector<int>> hh0_breakdown(int order) {
  hh0_dim(order);  // validates
  switch (order) {
    case 1:
      return std::vector<int>{2};
    case 2:
      return std::vector<int>{2, 4};
    case 3:
      return std::vector<int>{2, 3, 3};
    default:
      return std::nullopt;
  }
}

Cyclotomic char_value(const BimoduleParam& p, long long r) {
  p.validate();
  Cyclotomic acc = Cyclotomic::zero(p.k);
  for (int g = 0; g < p.k; ++g) {
    if (p.a[g].is_zero()) continue;
    acc += p.a[g] * Cyclotomic::zeta_power(p.k, mod(r * g, p.k));
  }
  return acc;
}

std::vector<CharacterValue> char_values(const BimoduleParam& p) {
  std::vector<CharacterValue> out;
  for (int r = 0; r < p.k; ++r) out.push_back({r, char_value(p, r)});
  return out;
}

TensorDecomposition tensor_simple(long long i, const BimoduleParam& p) {
  int ii = static_cast<int>(mod(i, p.k));
  TensorKind kind = char_value(p, ii).is_zero() ? TensorKind::Split : TensorKind::Extension;
  return {kind, ii, static_cast<int>(mod(ii - 1, p.k))};
}

CMatrix y_matrix(int n, const BimoduleParam& p) {
  if (n < 0) throw DomainError("jet order must be non-negative");
  p.validate();
  int d = n + 1;
  CMatrix m = zeros(p.k, 2 * d, 2 * d);
  Cyclotomic one = Cyclotomic::one(p.k);
  for (int i = 0; i + 1 < d; ++i) {
    m(i, i + 1) = one;
    m(d + i, d + i + 1) = one;
  }
  for (int r = 0; r < d; ++r) m(r, d + r) = char_value(p, r);
  return m;
}

Cyclotomic trace_a(int n, const BimoduleParam& p) {
  if (n < 0) throw DomainError("jet order must be non-negative");
  Cyclotomic t = Cyclotomic::zero(p.k);
  for (int r = 0; r <= n; ++r) t += char_value(p, r);
  return t;
}

bool splits(int n, const BimoduleParam& p) { return trace_a(n, p).is_zero(); }

std::vector<int> nilpotent_jordan_type(const CMatrix& m) {
  std::size_t d = m.rows();
  if (m.cols() != d) throw DomainError("Jordan type needs a square matrix");
  if (d == 0) return {};
  Cyclotomic zero = m(0, 0) - m(0, 0);
  std::vector<std::size_t> ranks{d};
  CMatrix power = m;
  while (true) {
    std::size_t r = rank(power);
    ranks.push_back(r);
    if (r == 0) break;
    if (ranks.size() > d + 1) throw DomainError("matrix is not nilpotent");
    if (r == ranks[ranks.size() - 2]) throw DomainError("matrix is not nilpotent");
    power = CMatrix::multiply(power, m, zero);
  }
  // Blocks of size >= j: ranks[j-1] - ranks[j].
  std::vector<int> at_least(ranks.size(), 0);
  for (std::size_t j = 1; j < ranks.size(); ++j) at_least[j] = static_cast<int>(ranks[j - 1] - ranks[j]);
  std::vector<int> blocks;
  for (std::size_t j = ranks.size() - 1; j >= 1; --j) {
    int next = j + 1 < at_least.size() ? at_least[j + 1] : 0;
    for (int c = 0; c < at_least[j] - next; ++c) blocks.push_back(static_cast<int>(j));
  }
  return blocks;
}

Cyclotomic RootFunctional::evaluate(const BimoduleParam& p) const {
  p.validate();
  if (p.k != k) throw DomainError("functional and parameter have different group orders");
  Cyclotomic acc = Cyclotomic::zero(k);
  for (int g = 0; g < k; ++g) acc += coeff[g] * p.a[g];
  return acc;
}

RootFunctional root_hyperplane(int k, const IntVector& beta) {
  if (!CyclicQuiverRoots::is_root(k, beta)) throw DomainError("not a root of the cyclic quiver");
  if (!CyclicQuiverRoots::is_real(k, beta) && beta != CyclicQuiverRoots::delta(k) &&
      beta != IntVector(k, -1))
    throw DomainError("imaginary root other than +-delta has no torsion class");
  RootFunctional f{k, std::vector<Cyclotomic>(k, Cyclotomic::zero(k))};
  // sum_i c_i A_i = sum_g a_g (sum_i c_i zeta^{i g}).
  for (int g = 0; g < k; ++g)
    for (int i = 0; i < k; ++i)
      if (beta[i] != 0) f.coeff[g] += Cyclotomic::zeta_power(k, mod(static_cast<long long>(i) * g, k)) * Cyclotomic(k, rat(beta[i]));
  return f;
}

PreprojReport preproj_check(const PreprojRep& rep, const BimoduleParam& p, int sign) {
  p.validate();
  int k = rep.k;
  if (k != p.k) throw DomainError("representation and parameter have different group orders");
  if (sign != 1 && sign != -1) throw DomainError("preprojective sign must be +1 or -1");
  if (rep.dims.size() != static_cast<std::size_t>(k) || rep.cw.size() != static_cast<std::size_t>(k) ||
      rep.ccw.size() != static_cast<std::size_t>(k) || rep.lambda.size() != static_cast<std::size_t>(k))
    throw DomainError("representation data must have one entry per node");
  for (int i = 0; i < k; ++i) {
    std::size_t di = rep.dims[i], dprev = rep.dims[mod(i - 1, k)], dnext = rep.dims[mod(i + 1, k)];
    if (rep.cw[i].rows() != dprev || rep.cw[i].cols() != di)
      throw DomainError("clockwise map at node " + std::to_string(i) + " has the wrong shape");
    if (rep.ccw[i].rows() != dnext || rep.ccw[i].cols() != di)
      throw DomainError("counterclockwise map at node " + std::to_string(i) + " has the wrong shape");
  }
  PreprojReport rpt;
  rpt.sign = sign;
  rpt.relation_holds = true;
  rpt.lambda_matches = true;
  for (int i = 0; i < k; ++i) {
    std::size_t di = rep.dims[i];
    CMatrix lhs = mul(k, rep.ccw[mod(i - 1, k)], rep.cw[i]) - mul(k, rep.cw[mod(i + 1, k)], rep.ccw[i]);
    Cyclotomic s = rep.lambda[i] * Cyclotomic(k, Rational(sign));
    CMatrix res = lhs;
    for (std::size_t j = 0; j < di; ++j) res(j, j) -= s;
    if (!res.is_zero_matrix()) rpt.relation_holds = false;
    rpt.residuals.push_back(res);
    if (!(rep.lambda[i] == char_value(p, i))) rpt.lambda_matches = false;
  }
  // Nilpotency of the total clockwise map: compose around the cycle.
  std::size_t total = 0;
  for (int d : rep.dims) total += d;
  CMatrix big = zeros(k, total, total);
  std::vector<std::size_t> off(k, 0);
  for (int i = 1; i < k; ++i) off[i] = off[i - 1] + rep.dims[i - 1];
  for (int i = 0; i < k; ++i) {
    int t = static_cast<int>(mod(i - 1, k));
    for (std::size_t r = 0; r < rep.cw[i].rows(); ++r)
      for (std::size_t c = 0; c < rep.cw[i].cols(); ++c) big(off[t] + r, off[i] + c) += rep.cw[i](r, c);
  }
  CMatrix pw = big;
  rpt.cw_nilpotent = total == 0;
  for (std::size_t j = 0; j < total && !rpt.cw_nilpotent; ++j) {
    if (pw.is_zero_matrix()) rpt.cw_nilpotent = true;
    pw = mul(k, pw, big);
  }
  if (!rpt.cw_nilpotent && pw.is_zero_matrix()) rpt.cw_nilpotent = true;
  return rpt;
}

PreprojRep jet_module(int n, const BimoduleParam& p, int sign) {
  if (n < 0) throw DomainError("jet order must be non-negative");
  p.validate();
  int k = p.k;
  PreprojRep rep;
  rep.k = k;
  rep.dims.assign(k, 0);
  for (int j = 0; j <= n; ++j) rep.dims[j % k]++;
  for (int i = 0; i < k; ++i) {
    rep.cw.push_back(zeros(k, rep.dims[mod(i - 1, k)], rep.dims[i]));
    rep.ccw.push_back(zeros(k, rep.dims[mod(i + 1, k)], rep.dims[i]));
    rep.lambda.push_back(char_value(p, i));
  }
  Cyclotomic c = Cyclotomic::zero(k);
  Cyclotomic sgn_k(k, Rational(sign));
  for (int j = 0; j <= n; ++j) {
    int node = j % k;
    if (j >= 1) rep.cw[node]((j - 1) / k, j / k) = c;
    if (j < n) rep.ccw[node]((j + 1) / k, j / k) = Cyclotomic::one(k);
    c -= sgn_k * rep.lambda[node];
  }
  return rep;
}

std::string tensor_table_csv(const BimoduleParam& p) {
  std::ostringstream os;
  os << "i,A_i,kind\n";
  for (const auto& cv : char_values(p)) {
    TensorDecomposition t = tensor_simple(cv.r, p);
    os << cv.r << "," << cv.value.to_string() << "," << (t.kind == TensorKind::Split ? "split" : "ext") << "\n";
  }
  return os.str();
}

}  // namespace ellwall
