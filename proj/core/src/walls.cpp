#include "ellwall/walls.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "ellwall/errors.hpp"

namespace ellwall {

namespace {

void check_dims(const MukaiVector& v, const BilinearLattice& ns) {
  if (v.c1.size() != static_cast<std::size_t>(ns.rank()))
    throw DomainError("Mukai vector c1 does not match the NS lattice rank");
}

// Symbolic H, B and the quadratic pieces of Z, built once per lattice.
struct SymbolicChart {
  std::vector<Poly> h, b;
  Poly hb, half_b2_minus_h2;
  const BilinearLattice* ns;

  explicit SymbolicChart(const BilinearLattice& lattice) : ns(&lattice) {
    for (const auto& l : lattice.labels()) {
      h.push_back(Poly::var("H:" + l));
      b.push_back(Poly::var("B:" + l));
    }
    hb = dot(h, b);
    half_b2_minus_h2 = (dot(b, b) - dot(h, h)) * Poly(rat(1, 2));
  }

  Poly dot(const std::vector<Poly>& x, const std::vector<Poly>& y) const {
    Poly acc;
    const IntMatrix& g = ns->gram();
    for (std::size_t i = 0; i < x.size(); ++i)
      for (std::size_t j = 0; j < y.size(); ++j)
        if (g(i, j) != 0) acc += x[i] * y[j] * Poly(rat(g(i, j)));
    return acc;
  }

  Poly dot_int(const std::vector<Poly>& x, const IntVector& c) const {
    Poly acc;
    const IntMatrix& g = ns->gram();
    for (std::size_t i = 0; i < x.size(); ++i) {
      long long coef = 0;
      for (std::size_t j = 0; j < c.size(); ++j) coef += g(i, j) * c[j];
      if (coef != 0) acc += x[i] * Poly(rat(coef));
    }
    return acc;
  }

  std::pair<Poly, Poly> z(const MukaiVector& v) const {
    Poly re = Poly(v.ch2) - dot_int(b, v.c1) + Poly(rat(v.rank)) * half_b2_minus_h2;
    Poly im = dot_int(h, v.c1) - Poly(rat(v.rank)) * hb;
    return {re, im};
  }

  Poly locus(const MukaiVector& v, const MukaiVector& w) const {
    auto [rv, iv] = z(v);
    auto [rw, iw] = z(w);
    return iv * rw - rv * iw;
  }
};

Poly restrict_to_am1_chart(const Poly& p) {
  // H = P + bE, B = cP + dE.
  return p.substitute("H:E", Poly::var("b"))
      .substitute("H:P", Poly(1))
      .substitute("B:E", Poly::var("d"))
      .substitute("B:P", Poly::var("c"));
}

long long hilbert_n(const MukaiVector& v) {
  bool zero_c1 = std::all_of(v.c1.begin(), v.c1.end(), [](long long c) { return c == 0; });
  if (v.rank != 1 || !zero_c1 || !is_integer(v.ch2) || v.ch2 >= 0)
    throw DomainError("v must be normalized to (1, 0, -n) with n >= 1");
  return -to_integer(v.ch2);
}

void check_supported(CartanType r) {
  switch (r) {
    case CartanType::Am1:
    case CartanType::D4:
    case CartanType::E6:
    case CartanType::E7:
    case CartanType::E8:
      return;
    case CartanType::A0:
    case CartanType::A1:
    case CartanType::A2:
      throw UnsupportedType("type " + to_string(r) +
                            " is a wild case: its walls admit no description by roots");
    default:
      throw UnsupportedType("type " + to_string(r) + " has no supported wall model");
  }
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  std::string s = buf;
  if (s == "-0.000") s = "0.000";
  return s;
}

}  // namespace

CentralCharge central_charge(const MukaiVector& v, const BilinearLattice& ns, const QVector& h,
                             const QVector& b) {
  check_dims(v, ns);
  QVector c = to_qvector(v.c1);
  Rational r = rat(v.rank);
  CentralCharge z;
  z.re = v.ch2 - ns.pair(c, b) + r * (ns.pair(b, b) - ns.pair(h, h)) / 2;
  z.im = ns.pair(h, c) - r * ns.pair(h, b);
  return z;
}

Rational phase_alignment(const MukaiVector& v, const MukaiVector& w, const BilinearLattice& ns,
                         const QVector& h, const QVector& b) {
  CentralCharge zv = central_charge(v, ns, h, b);
  CentralCharge zw = central_charge(w, ns, h, b);
  return zv.im * zw.re - zv.re * zw.im;
}

Poly phase_equal_locus_general(const MukaiVector& v, const MukaiVector& w, const BilinearLattice& ns) {
  check_dims(v, ns);
  check_dims(w, ns);
  return SymbolicChart(ns).locus(v, w);
}

Poly phase_equal_locus(const MukaiVector& v, const MukaiVector& w) {
  BilinearLattice ns = BilinearLattice::hyperbolic_plane();
  return restrict_to_am1_chart(phase_equal_locus_general(v, w, ns));
}

Poly wall_rs_polynomial(long long n, long long r, long long s) {
  Poly b = Poly::var("b"), c = Poly::var("c"), d = Poly::var("d");
  return Poly(rat(r)) * (Poly(rat(n)) + b + b * c * c) - Poly(rat(s)) * (d + b * c);
}

Poly printed_wall_polynomial(long long n, long long r, long long s) {
  Poly b = Poly::var("b"), c = Poly::var("c"), d = Poly::var("d");
  Poly R(rat(r)), S(rat(s)), N(rat(n));
  Poly lhs = Poly(2) * c * d * R - b * R - N * R;
  Poly rhs = S * d + b * c * S - R * b * c * c;
  return lhs - rhs;
}

std::vector<WallSpec> enumerate_v_walls(const MukaiVector& v, CartanType r, const WallOptions& opt) {
  check_supported(r);
  EllipticRootSystem sys(r);
  BilinearLattice ns = BilinearLattice::ns_lattice(r);
  check_dims(v, ns);
  long long n = hilbert_n(v);
  if (opt.pairing_sign != 1 && opt.pairing_sign != -1) throw DomainError("pairing sign must be +1 or -1");
  Rational half_vv = opt.pairing_sign * mukai_pair(v, v, ns) / 2;

  std::optional<SymbolicChart> chart;
  if (opt.with_locus) chart.emplace(ns);
  const auto& fin = sys.finite();
  IntVector zero(fin.rank, 0);

  std::vector<EllipticRoot> candidates;
  for (const auto& a : fin.positive_roots) candidates.push_back(EllipticRoot{a, 0, 0});
  for (long long m = 1; m <= n; ++m) {
    for (long long k = 0; k < m; ++k) {
      if (std::gcd(k, m) == 1) candidates.push_back(EllipticRoot{zero, m, k});
      for (const auto& a : fin.roots) candidates.push_back(EllipticRoot{a, m, k});
    }
  }

  std::vector<WallSpec> out;
  for (const auto& root : candidates) {
    WallSpec w;
    w.root = root;
    w.kclass = root_to_kclass(root, sys, ns);
    w.pairing = opt.pairing_sign * mukai_pair(w.kclass, v, ns);
    // The same wall is labelled by beta and -beta: both must satisfy the bound.
    if (w.pairing > half_vv || -w.pairing > half_vv) continue;
    w.bound_equality = abs(w.pairing) == half_vv;
    w.curve = {root.n, root.m};
    w.curve.insert(w.curve.end(), root.finite.begin(), root.finite.end());
    if (root.m > 0) {
      w.n1_ray = std::array<long long, 2>{root.m, -root.n};
      w.level1_pos = rat(-root.n, root.m);
    }
    w.degenerate = n == 1 && root.finite_is_zero() && root.m == 1 && root.n == 0;
    if (chart) {
      w.locus = chart->locus(v, w.kclass);
      if (r == CartanType::Am1) w.locus = restrict_to_am1_chart(w.locus);
    }
    out.push_back(std::move(w));
  }
  return out;
}

BayerMacriClass bayer_macri_class(const QVector& h, const QVector& b, const MukaiVector& v,
                                  const BilinearLattice& ns) {
  long long n = hilbert_n(v);
  check_dims(v, ns);
  Rational bh = ns.pair(b, h);
  Rational coef = rat(-n) + (ns.pair(b, b) - ns.pair(h, h)) / 2;
  BayerMacriClass bm;
  bm.r_sigma = bh;
  bm.s_sigma = -n * bh;
  bm.c_sigma.resize(h.size());
  for (std::size_t i = 0; i < h.size(); ++i) bm.c_sigma[i] = -bh * b[i] + coef * h[i];
  return bm;
}

std::array<Rational, 2> n1_coordinates(const BayerMacriClass& bm, const BilinearLattice& ns) {
  QVector e(ns.rank(), Rational(0));
  e[ns.index_of("E")] = 1;
  // <l, (0, E, 0)> = c_sigma . E ;  <l, (0, 0, 1)> = -r_sigma.
  return {-ns.pair(bm.c_sigma, e), -bm.r_sigma};
}

ChamberDecomposition chamber_decomposition(long long n, CartanType r, const WallOptions& opt) {
  if (n < 1) throw DomainError("chamber decomposition needs n >= 1");
  check_supported(r);
  ChamberDecomposition dec;
  dec.n = n;
  dec.type = r;
  int ns_rank = BilinearLattice::ns_lattice(r).rank();
  dec.walls = enumerate_v_walls(MukaiVector::hilbert(ns_rank, n), r, opt);

  std::map<Rational, std::array<long long, 2>> pos;
  for (const auto& w : dec.walls)
    if (w.level1_pos && w.root.finite_is_zero()) pos.emplace(*w.level1_pos, *w.n1_ray);
  for (const auto& [p, ray] : pos) {
    dec.level1_positions.push_back(p);
    dec.rays.push_back(ray);
  }
  std::array<long long, 2> down{0, -1}, up{0, 1};
  std::array<long long, 2> prev_ray = down;
  std::optional<Rational> prev_pos;
  for (std::size_t i = 0; i < dec.rays.size(); ++i) {
    dec.chambers.push_back(Chamber{prev_ray, dec.rays[i], prev_pos, dec.level1_positions[i]});
    prev_ray = dec.rays[i];
    prev_pos = dec.level1_positions[i];
  }
  dec.chambers.push_back(Chamber{prev_ray, up, prev_pos, std::nullopt});

  dec.assumptions = {
      "wall bound <beta,v> <= <v,v>/2 applied non-strictly to both beta and -beta",
      "window 0 <= k < m for roots alpha + k delta_E + m delta_pt (translation fundamental domain)",
      "curve classes k C_E + m C_pt with 1 <= m <= n, gcd(k,m) = 1",
      "level-1 coordinate D.C_pt / D.C_E with D.C_E = -<l,(0,E,0)>, D.C_pt = <l,(0,0,1)>",
      "wall locus Im(Z(v) conj Z(w)) derived from the central charge",
  };
  if (opt.pairing_sign != 1) dec.assumptions.push_back("pairing sign override: -1");
  if (r != CartanType::Am1)
    dec.assumptions.push_back("level-1 positions taken on the slice D.C_alpha = 0");
  if (n == 1) dec.assumptions.push_back("n = 1: single Hilbert-Chow wall, flagged degenerate");
  return dec;
}

std::string emit_chamber_svg(const ChamberDecomposition& dec, const SvgStyle& style) {
  const double w = style.width, h = style.height;
  const double margin = 40.0;
  // View box in N^1 coordinates: X = D.C_E in [0, 1.25], Y = D.C_pt in [-1.25, 0.25].
  const double x0 = 0.0, x1 = 1.25, y0 = -1.25, y1 = 0.25;
  auto px = [&](double x) { return margin + (x - x0) / (x1 - x0) * (w - 2 * margin); };
  auto py = [&](double y) { return h - margin - (y - y0) / (y1 - y0) * (h - 2 * margin); };
  // Where a ray (1, t) leaves the view box.
  auto ray_end = [&](double t) {
    double s = x1;
    if (t * s < y0) s = y0 / t;
    if (t * s > y1) s = y1 / t;
    return std::pair<double, double>{s, t * s};
  };

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << style.width
     << "\" height=\"" << style.height << "\" viewBox=\"0 0 " << style.width << " " << style.height << "\">\n";
  os << "<title>chambers " << to_string(dec.type) << " n=" << dec.n << "</title>\n";
  os << "<rect x=\"0\" y=\"0\" width=\"" << style.width << "\" height=\"" << style.height
     << "\" fill=\"white\"/>\n";

  if (style.shade && !dec.chambers.empty() && !dec.level1_positions.empty()) {
    os << "<g id=\"chambers\" stroke=\"none\">\n";
    for (std::size_t i = 0; i < dec.chambers.size(); ++i) {
      const auto& c = dec.chambers[i];
      // Origin, the two bounding rays' exit points, and frame corners in between.
      double lo_t = c.lower_pos ? static_cast<double>(to_long_double(*c.lower_pos)) : -1e9;
      double hi_t = c.upper_pos ? static_cast<double>(to_long_double(*c.upper_pos)) : 1e9;
      std::pair<double, double> a = c.lower_pos ? ray_end(lo_t) : std::pair<double, double>{0.0, y0};
      std::pair<double, double> b = c.upper_pos ? ray_end(hi_t) : std::pair<double, double>{0.0, y1};
      std::vector<std::pair<double, double>> pts{{0.0, 0.0}, a};
      for (auto corner : {std::pair<double, double>{x1, y0}, std::pair<double, double>{x1, y1}}) {
        double t = corner.second / corner.first;
        if (t > lo_t && t < hi_t) pts.push_back(corner);
      }
      pts.push_back(b);
      os << "<polygon points=\"";
      for (std::size_t j = 0; j < pts.size(); ++j)
        os << (j ? " " : "") << fmt(px(pts[j].first)) << "," << fmt(py(pts[j].second));
      os << "\" fill=\"" << (i % 2 == 0 ? "#dbe8f6" : "#f6e8db") << "\"/>\n";
    }
    os << "</g>\n";
  }

  os << "<g id=\"axes\" stroke=\"black\" stroke-width=\"1\">\n";
  os << "<line x1=\"" << fmt(px(0)) << "\" y1=\"" << fmt(py(y0)) << "\" x2=\"" << fmt(px(0)) << "\" y2=\""
     << fmt(py(y1)) << "\"/>\n";
  os << "<line x1=\"" << fmt(px(0)) << "\" y1=\"" << fmt(py(0)) << "\" x2=\"" << fmt(px(x1)) << "\" y2=\""
     << fmt(py(0)) << "\"/>\n";
  os << "</g>\n";
  os << "<text x=\"" << fmt(px(x1) - 40) << "\" y=\"" << fmt(py(0) - 6)
     << "\" font-size=\"11\" font-family=\"sans-serif\">D.C_E</text>\n";
  os << "<text x=\"" << fmt(px(0) + 4) << "\" y=\"" << fmt(py(y1) + 12)
     << "\" font-size=\"11\" font-family=\"sans-serif\">D.C_pt</text>\n";

  if (!dec.level1_positions.empty()) {
    os << "<line id=\"level1\" x1=\"" << fmt(px(1)) << "\" y1=\"" << fmt(py(y0)) << "\" x2=\"" << fmt(px(1))
       << "\" y2=\"" << fmt(py(y1)) << "\" stroke=\"gray\" stroke-dasharray=\"4,3\"/>\n";
  }
  os << "<g id=\"walls\" stroke=\"#a01010\" stroke-width=\"1.2\">\n";
  for (const auto& p : dec.level1_positions) {
    auto e = ray_end(to_long_double(p));
    os << "<line x1=\"" << fmt(px(0)) << "\" y1=\"" << fmt(py(0)) << "\" x2=\"" << fmt(px(e.first)) << "\" y2=\""
       << fmt(py(e.second)) << "\"/>\n";
  }
  os << "</g>\n";
  if (!dec.level1_positions.empty()) {
    os << "<g id=\"positions\" fill=\"#a01010\" font-size=\"9\" font-family=\"sans-serif\">\n";
    for (const auto& p : dec.level1_positions) {
      double y = to_long_double(p);
      os << "<circle cx=\"" << fmt(px(1)) << "\" cy=\"" << fmt(py(y)) << "\" r=\"2.5\"/>\n";
      if (style.labels)
        os << "<text x=\"" << fmt(px(1) + 5) << "\" y=\"" << fmt(py(y) + 3) << "\">" << to_string(p) << "</text>\n";
    }
    os << "</g>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace ellwall
