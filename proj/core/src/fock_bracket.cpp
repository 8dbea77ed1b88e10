#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "ellwall/errors.hpp"
#include "ellwall/fock.hpp"
#include "ellwall/matrix.hpp"
#include "ellwall/parallel.hpp"

namespace ellwall {

std::string to_string(const Generator& g) {
  return "w^{" + std::to_string(g.a) + "," + std::to_string(g.b) + "}_" + to_string(g.label);
}

std::string to_string(PairStatus s) {
  switch (s) {
    case PairStatus::Zero:
      return "zero";
    case PairStatus::Proportional:
      return "proportional";
    case PairStatus::Central:
      return "central";
    case PairStatus::Mismatch:
      return "mismatch";
  }
  return "?";
}

namespace {

using Lookup = std::function<const OperatorExpr&(const Generator&)>;

std::string key_string(const OpKey& k, const QH& c) {
  OperatorExpr e;
  e.add_term(k, c);
  return e.to_string();
}

BracketPair analyse_pair(const Generator& x, const Generator& y, StarProduct product, const Lookup& get) {
  BracketPair out;
  out.x = x;
  out.y = y;
  out.central = (x.a + y.a == 0 && x.b + y.b == 0);
  LabelProduct lp = star(x.label, y.label, product);
  out.expected = Rational(-(static_cast<long>(x.a) * y.b - static_cast<long>(x.b) * y.a) * lp.sign);
  if (!out.central && lp.sign != 0) out.target = Generator{x.a + y.a, x.b + y.b, lp.label};

  OperatorExpr lhs = supercommutator(get(x), get(y));
  out.exact_to = lhs.truncation();
  lhs = lhs.truncated(out.exact_to);
  if (lhs.is_zero()) {
    if (out.target && sgn(out.expected) != 0) {
      out.status = PairStatus::Mismatch;
      out.witness = "commutator vanishes but " + to_string(*out.target) + " is predicted";
    } else {
      out.status = PairStatus::Zero;
    }
    return out;
  }

  if (out.central) {
    const auto& t = lhs.terms();
    auto it = t.find(OpKey{});
    if (t.size() == 1 && it != t.end() && it->second.is_constant()) {
      out.status = PairStatus::Central;
      out.value = it->second.constant();
    } else {
      out.status = PairStatus::Mismatch;
      auto bad = t.begin();
      if (bad->first == OpKey{}) ++bad;
      out.witness = "non-scalar term " + key_string(bad->first, bad->second);
    }
    return out;
  }

  out.status = PairStatus::Mismatch;
  if (!out.target || sgn(out.expected) == 0) {
    out.witness = "predicted zero, got " + key_string(lhs.terms().begin()->first, lhs.terms().begin()->second);
    return out;
  }
  const OperatorExpr* w = nullptr;
  try {
    w = &get(*out.target);
  } catch (const ConventionError& e) {
    out.witness = std::string("target not constructible: ") + e.what();
    return out;
  }
  OperatorExpr wt = w->truncated(out.exact_to);
  std::optional<Rational> ratio;
  for (const auto& [k, c] : lhs.terms()) {
    auto it = wt.terms().find(k);
    Rational r;
    if (it == wt.terms().end() || !c.proportional_to(it->second, &r) || (ratio && *ratio != r)) {
      out.witness = "lhs term " + key_string(k, c) + " not matched by " + to_string(*out.target);
      return out;
    }
    ratio = r;
  }
  for (const auto& [k, c] : wt.terms()) {
    if (!lhs.terms().count(k)) {
      out.witness = "missing term " + key_string(k, c) + " of " + to_string(*out.target);
      return out;
    }
  }
  out.status = PairStatus::Proportional;
  out.value = *ratio;
  return out;
}

// Integer factorisation of |z| by trial division; z is small in practice.
std::map<long, long> factor(mpz_class z) {
  std::map<long, long> out;
  if (z < 0) z = -z;
  for (long p = 2; mpz_class(p) * p <= z; ++p) {
    while (z % p == 0) {
      ++out[p];
      z /= p;
    }
  }
  if (z > 1) {
    if (!z.fits_slong_p()) throw DomainError("rescale factor too large to factor");
    ++out[z.get_si()];
  }
  return out;
}

struct Equation {
  std::vector<std::pair<std::size_t, int>> vars;  // variable, exponent
  Rational rhs;                                   // prod lambda^exp = rhs
  std::string what;
};

// Finds lambda with prod lambda_v^e = rhs for each equation, free variables 1.
std::optional<std::vector<Rational>> solve_multiplicative(const std::vector<Equation>& eqs, std::size_t nvars) {
  std::vector<long> primes;
  {
    std::set<long> ps;
    for (const auto& e : eqs) {
      for (auto [p, k] : factor(e.rhs.get_num())) ps.insert(p);
      for (auto [p, k] : factor(e.rhs.get_den())) ps.insert(p);
    }
    primes.assign(ps.begin(), ps.end());
  }
  const std::size_t rows = eqs.size();
  std::vector<Rational> lambda(nvars, Rational(1));
  if (rows == 0) return lambda;

  // Magnitudes: exponents of each prime.
  QMatrix m(rows, nvars + primes.size(), Rational(0));
  for (std::size_t i = 0; i < rows; ++i) {
    for (auto [v, e] : eqs[i].vars) m(i, v) += e;
    auto num = factor(eqs[i].rhs.get_num());
    auto den = factor(eqs[i].rhs.get_den());
    for (std::size_t j = 0; j < primes.size(); ++j) {
      long e = 0;
      if (num.count(primes[j])) e += num[primes[j]];
      if (den.count(primes[j])) e -= den[primes[j]];
      m(i, nvars + j) = e;
    }
  }
  auto piv = row_reduce(m);
  for (std::size_t r = 0; r < piv.size(); ++r) {
    if (piv[r] >= nvars) return std::nullopt;
    for (std::size_t j = 0; j < primes.size(); ++j) {
      const Rational& e = m(r, nvars + j);
      if (!is_integer(e)) return std::nullopt;
      long ex = static_cast<long>(to_integer(e));
      Rational pw = 1;
      for (long t = 0; t < std::labs(ex); ++t) pw *= primes[j];
      lambda[piv[r]] *= ex >= 0 ? pw : 1 / pw;
    }
  }

  // Signs over GF(2).
  std::vector<std::vector<int>> g(rows, std::vector<int>(nvars + 1, 0));
  for (std::size_t i = 0; i < rows; ++i) {
    for (auto [v, e] : eqs[i].vars) g[i][v] ^= (e & 1);
    g[i][nvars] = sgn(eqs[i].rhs) < 0 ? 1 : 0;
  }
  std::size_t r = 0;
  std::vector<std::size_t> gpiv;
  for (std::size_t c = 0; c <= nvars && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && g[p][c] == 0) ++p;
    if (p == rows) continue;
    if (c == nvars) return std::nullopt;
    std::swap(g[p], g[r]);
    for (std::size_t i = 0; i < rows; ++i)
      if (i != r && g[i][c])
        for (std::size_t j = c; j <= nvars; ++j) g[i][j] ^= g[r][j];
    gpiv.push_back(c);
    ++r;
  }
  for (std::size_t i = 0; i < gpiv.size(); ++i)
    if (g[i][nvars]) lambda[gpiv[i]] = -lambda[gpiv[i]];
  return lambda;
}

}  // namespace

BracketPair bracket_pair(const Generator& x, const Generator& y, int truncation, StarProduct product,
                         const ExtendedConventions& ext) {
  std::map<Generator, OperatorExpr> cache;
  Lookup get = [&](const Generator& g) -> const OperatorExpr& {
    auto it = cache.find(g);
    if (it == cache.end()) it = cache.emplace(g, w_general(g.a, g.b, g.label, truncation, ext)).first;
    return it->second;
  };
  return analyse_pair(x, y, product, get);
}

BracketReport bracket_sweep(const BracketOptions& opt) {
  BracketReport rep;
  rep.options = opt;

  std::vector<Generator> box;
  for (int a = -opt.a_max; a <= opt.a_max; ++a)
    for (int b = -opt.b_max; b <= opt.b_max; ++b)
      if (a != 0 || b != 0)
        for (Label l : opt.labels) box.push_back(Generator{a, b, l});
  std::sort(box.begin(), box.end());

  std::vector<std::pair<Generator, Generator>> pairs;
  for (std::size_t i = 0; i < box.size(); ++i)
    for (std::size_t j = i; j < box.size(); ++j) pairs.emplace_back(box[i], box[j]);

  // Every operator needed, built once up front so the pair loop only reads.
  std::set<Generator> needed(box.begin(), box.end());
  for (const auto& [x, y] : pairs) {
    if (x.a + y.a == 0 && x.b + y.b == 0) continue;
    LabelProduct lp = star(x.label, y.label, opt.product);
    if (lp.sign != 0 && (x.a * y.b - x.b * y.a) != 0) needed.insert(Generator{x.a + y.a, x.b + y.b, lp.label});
  }
  std::vector<Generator> gens(needed.begin(), needed.end());
  std::vector<std::optional<OperatorExpr>> built(gens.size());
  std::vector<std::string> build_error(gens.size());
  parallel_for(gens.size(), [&](std::size_t i) {
    try {
      built[i] = w_general(gens[i].a, gens[i].b, gens[i].label, opt.truncation, opt.ext);
    } catch (const ConventionError& e) {
      build_error[i] = e.what();
    }
  });
  std::map<Generator, std::size_t> index;
  for (std::size_t i = 0; i < gens.size(); ++i) index[gens[i]] = i;
  Lookup get = [&](const Generator& g) -> const OperatorExpr& {
    std::size_t i = index.at(g);
    if (!built[i]) throw ConventionError(build_error[i]);
    return *built[i];
  };

  rep.pairs.resize(pairs.size());
  parallel_for(pairs.size(), [&](std::size_t i) {
    rep.pairs[i] = analyse_pair(pairs[i].first, pairs[i].second, opt.product, get);
  });

  // Variables: generators with a != 0, then slope-0 generators, then c_t.
  std::set<Generator> involved;
  for (const auto& p : rep.pairs) {
    involved.insert(p.x);
    involved.insert(p.y);
    if (p.target) involved.insert(*p.target);
  }
  std::vector<Generator> vars;
  for (const auto& g : involved)
    if (g.a != 0) vars.push_back(g);
  for (const auto& g : involved)
    if (g.a == 0) vars.push_back(g);
  std::map<Generator, std::size_t> var_of;
  for (std::size_t i = 0; i < vars.size(); ++i) var_of[vars[i]] = i;
  const std::size_t ct_var = vars.size();

  auto label_of = [](const BracketPair& p) { return "[" + to_string(p.x) + ", " + to_string(p.y) + "]"; };
  std::vector<Equation> eqs;
  std::vector<const BracketPair*> deferred;  // central pairs with a != 0
  for (const auto& p : rep.pairs) {
    if (p.status == PairStatus::Mismatch) {
      rep.failures.push_back(label_of(p) + ": " + p.witness);
      continue;
    }
    std::vector<std::pair<std::size_t, int>> xy{{var_of.at(p.x), 1}, {var_of.at(p.y), 1}};
    if (p.central) {
      if (p.x.a != 0) {
        deferred.push_back(&p);
        continue;
      }
      Rational pred = Rational(p.x.b) * pairing(CohClass::basis(p.x.label), CohClass::basis(p.y.label));
      if (sgn(pred) == 0) {
        if (p.status != PairStatus::Zero) rep.failures.push_back(label_of(p) + ": central term where none is allowed");
        continue;
      }
      if (p.status != PairStatus::Central) {
        rep.failures.push_back(label_of(p) + ": central term missing");
        continue;
      }
      xy.emplace_back(ct_var, -1);
      eqs.push_back({xy, pred / p.value, label_of(p)});
      continue;
    }
    if (p.status == PairStatus::Zero) continue;
    // Proportional.
    xy.emplace_back(var_of.at(*p.target), -1);
    eqs.push_back({xy, p.expected / p.value, label_of(p)});
  }

  // First try c_s = 0, which makes the slope != 0 central terms multiplicative
  // too; if that has no solution, fit c_s afterwards.
  std::vector<Equation> with_cs0 = eqs;
  for (const BracketPair* p : deferred) {
    Rational g = pairing(CohClass::basis(p->x.label), CohClass::basis(p->y.label));
    if (p->x.b == 0 || sgn(g) == 0 || p->status != PairStatus::Central) continue;
    with_cs0.push_back({{{var_of.at(p->x), 1}, {var_of.at(p->y), 1}, {ct_var, -1}},
                        Rational(p->x.b) * g / p->value,
                        label_of(*p)});
  }
  auto lambda = solve_multiplicative(with_cs0, vars.size() + 1);
  if (!lambda) lambda = solve_multiplicative(eqs, vars.size() + 1);
  if (!lambda) {
    rep.solvable = false;
    rep.failures.push_back("no nonzero rational rescaling satisfies all proportional brackets");
    return rep;
  }
  // Plug back in; this is the actual check.
  for (const auto& e : eqs) {
    Rational prod = 1;
    for (auto [v, k] : e.vars)
      for (int t = 0; t < std::abs(k); ++t) prod = k > 0 ? Rational(prod * (*lambda)[v]) : Rational(prod / (*lambda)[v]);
    if (prod != e.rhs) rep.failures.push_back(e.what + ": rescaled coefficient off");
  }
  rep.solvable = true;
  for (std::size_t i = 0; i < vars.size(); ++i) rep.rescale.push_back({vars[i], (*lambda)[i]});
  std::sort(rep.rescale.begin(), rep.rescale.end(),
            [](const RescaleFactor& a, const RescaleFactor& b) { return a.generator < b.generator; });
  rep.c_t = (*lambda)[ct_var];

  for (const BracketPair* p : deferred) {
    Rational v = p->status == PairStatus::Central ? p->value : Rational(0);
    Rational scaled = (*lambda)[var_of.at(p->x)] * (*lambda)[var_of.at(p->y)] * v;
    Rational g = pairing(CohClass::basis(p->x.label), CohClass::basis(p->y.label));
    if (sgn(g) == 0) {
      if (sgn(scaled) != 0) rep.failures.push_back(label_of(*p) + ": central term where <gamma,eta> = 0");
      continue;
    }
    Rational cs = (scaled / g - Rational(p->x.b) * *rep.c_t) / p->x.a;
    if (!rep.c_s) {
      rep.c_s = cs;
    } else if (*rep.c_s != cs) {
      rep.failures.push_back(label_of(*p) + ": central term needs c_s = " + to_string(cs) + " but c_s = " +
                             to_string(*rep.c_s));
    }
  }
  return rep;
}

}  // namespace ellwall
