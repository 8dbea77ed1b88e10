#include "ellwall/serialize.hpp"

#include "ellwall/errors.hpp"

namespace ellwall {

const char* tool_version() { return ELLWALL_VERSION; }

namespace {

std::string omega_name(OmegaConvention) { return "free-field"; }
std::string dz_name(DzConvention d) { return d == DzConvention::Euler ? "euler" : "derivative"; }

json rational_or_null(const std::optional<Rational>& q) { return q ? json(to_string(*q)) : json(nullptr); }

json params(const Generator& g) { return json{{"a", g.a}, {"b", g.b}, {"label", to_string(g.label)}}; }

}  // namespace

json metadata(const Conventions& c) {
  json pc;
  pc["mukai_pairing"] = "c.c' - r s' - r' s";
  pc["pairing_sign"] = c.pairing_sign;
  pc["central_charge"] = "Z = int e^{iH} ch^B";
  pc["root_to_kclass"] = "alpha + m delta_pt + n delta_E -> (0, C_alpha + n E, m)";
  pc["heisenberg"] = "[a_m(x), a_k(y)] = m delta_{m+k,0} <x,y>";
  pc["w_small"] = "w^{0,n} = a_n([|n|]^* x) / |n|";
  pc["star_product"] = c.star == StarProduct::Convolution ? "convolution" : "cup";
  pc["central_term"] = "(a c_s + b c_t) <x,y>";
  pc["rho_f"] = "charge reflection c -> -n - c";
  pc["preproj_sign"] = c.preproj_sign;
  pc["preproj_lambda"] = "lambda_i = A_i";
  pc["extended"] = {{"enabled", c.ext.enabled}, {"omega", omega_name(c.ext.omega)}, {"dz", dz_name(c.ext.dz)}};
  return json{{"paper_conventions", pc}, {"tool_version", tool_version()}};
}

json to_json(const EllipticRoot& r) {
  return json{{"finite", r.finite}, {"m", r.m}, {"n", r.n}, {"text", to_string(r)}};
}

json to_json(const MukaiVector& v) {
  return json{{"rank", v.rank}, {"c1", v.c1}, {"ch2", to_string(v.ch2)}};
}

json to_json(const WallSpec& w) {
  json j;
  j["root"] = to_json(w.root);
  j["kclass"] = to_json(w.kclass);
  j["curve"] = w.curve;
  j["pairing"] = to_string(w.pairing);
  j["locus"] = w.locus.to_string();
  j["n1_ray"] = w.n1_ray ? json(*w.n1_ray) : json(nullptr);
  j["level1_pos"] = rational_or_null(w.level1_pos);
  j["bound_equality"] = w.bound_equality;
  j["degenerate"] = w.degenerate;
  return j;
}

json to_json(const ChamberDecomposition& d) {
  json j;
  j["type"] = to_string(d.type);
  j["n"] = d.n;
  j["walls"] = json::array();
  for (const auto& w : d.walls) j["walls"].push_back(to_json(w));
  j["level1_positions"] = json::array();
  for (const auto& p : d.level1_positions) j["level1_positions"].push_back(to_string(p));
  j["rays"] = d.rays;
  j["chambers"] = d.chambers.size();
  j["chamber_bounds"] = json::array();
  for (const auto& c : d.chambers)
    j["chamber_bounds"].push_back({{"lower_ray", c.lower_ray},
                             {"upper_ray", c.upper_ray},
                             {"lower_pos", rational_or_null(c.lower_pos)},
                             {"upper_pos", rational_or_null(c.upper_pos)}});
  j["wall_count"] = d.walls.size();
  j["assumptions"] = d.assumptions;
  return j;
}

json to_json(const FockState& s) {
  json terms = json::array();
  for (const auto& [m, c] : s.terms()) {
    json modes = json::array();
    for (const auto& x : m) modes.push_back(json::array({static_cast<int>(x.k), to_string(x.label)}));
    terms.push_back({{"modes", modes}, {"coeff", c.to_string()}});
  }
  return json{{"charge", s.charge()}, {"terms", terms}};
}

FockState fock_state_from_json(const json& j) {
  try {
    FockState out(j.value("charge", 0));
    for (const auto& t : j.at("terms")) {
      Monomial m;
      for (const auto& md : t.at("modes")) {
        int k = md.at(0).get<int>();
        if (k <= 0 || k > 32767) throw DomainError("mode index must be a positive integer");
        m.push_back(Mode{static_cast<std::int16_t>(k), parse_label(md.at(1).get<std::string>())});
      }
      QH c = t.contains("coeff") ? QH::parse(t.at("coeff").get<std::string>()) : QH(1);
      int sign = canonicalize(m);
      if (sign != 0) out.add(m, c * QH(sign));
    }
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("bad state JSON: ") + e.what());
  }
}

json to_json(const Generator& g) { return params(g); }

json to_json(const BracketPair& p) {
  json j;
  j["lhs_params"] = {params(p.x), params(p.y)};
  j["rhs_params"] = p.target ? params(*p.target) : json(nullptr);
  j["central"] = p.central;
  j["expected"] = to_string(p.expected);
  j["status"] = to_string(p.status);
  j["value"] = to_string(p.value);
  j["exact_to"] = p.exact_to;
  if (!p.witness.empty()) j["witness"] = p.witness;
  return j;
}

json to_json(const BracketReport& r) {
  json j;
  json labels = json::array();
  for (Label l : r.options.labels) labels.push_back(to_string(l));
  j["lhs_params"] = {{"a_max", r.options.a_max}, {"b_max", r.options.b_max}, {"labels", labels}};
  j["rhs_params"] = {{"star_product", r.options.product == StarProduct::Convolution ? "convolution" : "cup"}};
  j["match"] = r.match();
  j["solvable"] = r.solvable;
  json rf = json::array();
  for (const auto& f : r.rescale) rf.push_back({{"generator", params(f.generator)}, {"lambda", to_string(f.lambda)}});
  j["rescale_factors"] = rf;
  j["central"] = {{"c_s", rational_or_null(r.c_s)}, {"c_t", rational_or_null(r.c_t)}};
  j["truncation"] = r.options.truncation;
  int counts[4] = {0, 0, 0, 0};
  for (const auto& p : r.pairs) ++counts[static_cast<int>(p.status)];
  j["pair_counts"] = {{"zero", counts[0]}, {"proportional", counts[1]}, {"central", counts[2]}, {"mismatch", counts[3]}};
  j["failures"] = r.failures;
  return j;
}

json to_json(const BimoduleParam& p) {
  json a = json::array();
  for (const auto& x : p.a) a.push_back(x.to_string());
  return json{{"k", p.k}, {"a", a}};
}

json to_json(const PreprojReport& r) {
  return json{{"relation_holds", r.relation_holds},
              {"lambda_matches", r.lambda_matches},
              {"cw_nilpotent", r.cw_nilpotent},
              {"sign", r.sign},
              {"ok", r.ok()}};
}

}  // namespace ellwall
