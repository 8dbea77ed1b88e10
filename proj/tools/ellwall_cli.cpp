// ellwall: walls, brackets, monodromy and local-model tables from the shell.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "ellwall/errors.hpp"
#include "ellwall/fock.hpp"
#include "ellwall/local_model.hpp"
#include "ellwall/root_system.hpp"
#include "ellwall/serialize.hpp"
#include "ellwall/verify.hpp"
#include "ellwall/walls.hpp"

using namespace ellwall;

namespace {

struct Common {
  Conventions conv;
  std::string star = "convolution";
  bool ext = false;
  std::string dz = "derivative";
};

void finish_conventions(Common& c) {
  c.conv.star = c.star == "cup" ? StarProduct::Cup : StarProduct::Convolution;
  c.conv.ext.enabled = c.ext;
  c.conv.ext.dz = c.dz == "euler" ? DzConvention::Euler : DzConvention::Derivative;
}

void print_json(const json& meta, json body) {
  for (auto& [k, v] : meta.items()) body[k] = v;
  std::cout << body.dump(2) << "\n";
}

// "a,b,label"
Generator parse_generator(const std::string& s) {
  std::stringstream ss(s);
  std::string a, b, l;
  if (!std::getline(ss, a, ',') || !std::getline(ss, b, ',') || !std::getline(ss, l))
    throw DomainError("generator must look like a,b,label: " + s);
  return Generator{std::stoi(a), std::stoi(b), parse_label(l)};
}

template <class V>
std::string join(const V& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
  return os.str();
}

std::string metadata_line(const json& meta) { return meta.dump(); }

int cmd_walls(const Common& c, const std::string& type, long long n, const std::string& format) {
  WallOptions wo;
  wo.pairing_sign = c.conv.pairing_sign;
  ChamberDecomposition dec = chamber_decomposition(n, parse_cartan_type(type), wo);
  json meta = metadata(c.conv);
  if (format == "json") {
    print_json(meta, to_json(dec));
  } else if (format == "csv") {
    std::cout << "# " << metadata_line(meta) << "\n";
    std::cout << "m,n,finite,rank,c1,ch2,pairing,level1_pos,degenerate\n";
    for (const auto& w : dec.walls) {
      std::string fin = join(w.root.finite);
      std::cout << w.root.m << "," << w.root.n << ",\"" << fin << "\"," << w.kclass.rank << ",\"" << join(w.kclass.c1) << "\","
                << to_string(w.kclass.ch2) << "," << to_string(w.pairing)
                << "," << (w.level1_pos ? to_string(*w.level1_pos) : "") << "," << (w.degenerate ? "true" : "false") << "\n";
    }
  } else {
    std::string svg = emit_chamber_svg(dec);
    // Metadata goes right after the root element opens.
    auto open = svg.find("<svg");
    auto close = svg.find('>', open);
    std::string escaped;
    for (char ch : metadata_line(meta)) {
      if (ch == '<') escaped += "&lt;";
      else if (ch == '&') escaped += "&amp;";
      else escaped += ch;
    }
    svg.insert(close + 1, "\n<metadata>" + escaped + "</metadata>");
    std::cout << svg;
  }
  return 0;
}

int cmd_bracket(const Common& c, const std::string& x, const std::string& y, int truncation, bool sweep, int a_max,
                int b_max) {
  json meta = metadata(c.conv);
  if (sweep) {
    BracketOptions o;
    o.truncation = truncation;
    o.a_max = a_max;
    o.b_max = b_max;
    o.product = c.conv.star;
    o.ext = c.conv.ext;
    BracketReport rep = bracket_sweep(o);
    print_json(meta, to_json(rep));
    return rep.match() ? 0 : 1;
  }
  if (x.empty() || y.empty()) throw CLI::ValidationError("bracket", "--x and --y are required without --sweep");
  BracketPair p = bracket_pair(parse_generator(x), parse_generator(y), truncation, c.conv.star, c.conv.ext);
  print_json(meta, to_json(p));
  return 0;
}

int cmd_monodromy(const Common& c, const std::string& state, const std::string& gen, int n) {
  std::string text = state;
  if (!state.empty() && state.front() != '{') {
    std::ifstream in(state);
    if (!in) throw DomainError("cannot read state file " + state);
    std::stringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  FockState s = fock_state_from_json(json::parse(text));
  FockState out = gen == "f" ? monodromy_f(s, n) : monodromy_s(s, n, c.conv.ext);
  json body;
  body["generator"] = gen;
  body["n"] = n;
  body["state"] = to_json(out);
  print_json(metadata(c.conv), body);
  return 0;
}

int cmd_local(const Common& c, int k, const std::vector<std::string>& a, int n, const std::string& format) {
  BimoduleParam p = BimoduleParam::zero(k);
  if (!a.empty()) {
    if (static_cast<int>(a.size()) != k) throw DomainError("--a needs exactly k entries");
    for (int g = 0; g < k; ++g) p.a[g] = Cyclotomic::parse(k, a[g]);
  }
  p.validate();
  json meta = metadata(c.conv);
  if (format == "csv") {
    std::cout << "# " << metadata_line(meta) << "\n" << tensor_table_csv(p);
    return 0;
  }
  json body;
  body["param"] = to_json(p);
  json chars = json::array();
  for (const auto& v : char_values(p)) chars.push_back({{"r", v.r}, {"A_r", v.value.to_string()}});
  body["char_values"] = chars;
  json table = json::array();
  for (int i = 0; i < k; ++i) {
    auto d = tensor_simple(i, p);
    table.push_back({{"i", d.i}, {"i_minus_1", d.i_minus_1}, {"kind", d.kind == TensorKind::Split ? "split" : "ext"}});
  }
  body["tensor_table"] = table;
  body["n"] = n;
  body["trace"] = trace_a(n, p).to_string();
  body["splits"] = splits(n, p);
  print_json(meta, body);
  return 0;
}

int cmd_hh0(const Common& c) {
  json body;
  json rows = json::array();
  for (int k : {1, 2, 3, 4, 6}) rows.push_back({{"order", k}, {"hh0", hh0_dim(k)}});
  body["hh0"] = rows;
  print_json(metadata(c.conv), body);
  return 0;
}

int cmd_roots(const Common& c, const std::string& type, long long m_max, long long n_max, long long h_max) {
  EllipticRootSystem sys(parse_cartan_type(type));
  json body;
  body["type"] = to_string(sys.type());
  json roots = json::array();
  for (const auto& r : sys.roots_in_box(m_max, n_max, h_max)) {
    json j = to_json(r);
    j["real"] = sys.is_real(r);
    roots.push_back(j);
  }
  body["count"] = roots.size();
  body["roots"] = roots;
  print_json(metadata(c.conv), body);
  return 0;
}

int cmd_verify(const Common& c, std::uint64_t seed, const std::vector<int>& only) {
  VerifyOptions o;
  o.seed = seed;
  o.only.insert(only.begin(), only.end());
  o.oracles = builtin_oracles();
  o.conventions = c.conv;
  auto results = run_criteria(o);
  json rep = verify_report(results, o);
  std::cerr << "seed " << seed << "\n";
  std::cout << rep.dump(2) << "\n";
  return rep["all_pass"].get<bool>() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ellwall: elliptic root systems, stability walls and Fock-space checks"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(tool_version()));

  Common c;
  auto add_conventions = [&](CLI::App* sub) {
    sub->add_option("--pairing-sign", c.conv.pairing_sign, "Sign of the Mukai pairing in the wall bound")
        ->check(CLI::IsMember({-1, 1}));
    sub->add_option("--preproj-sign", c.conv.preproj_sign, "Sign of the preprojective relation")
        ->check(CLI::IsMember({-1, 1}));
    sub->add_option("--star", c.star, "Product on H*(E) in the bracket")->check(CLI::IsMember({"convolution", "cup"}));
    sub->add_flag("--extended", c.ext, "Enable the slope-a point-class field");
    sub->add_option("--dz", c.dz, "Derivative convention of the extended field")
        ->check(CLI::IsMember({"derivative", "euler"}));
  };

  std::string type = "A-1", format = "json";
  long long n = 1;
  auto* walls = app.add_subcommand("walls", "Walls and chambers for Hilb^n");
  walls->add_option("--type", type, "Surface type (A-1, D4, E6, E7, E8)");
  walls->add_option("--n", n, "Number of points")->check(CLI::Range(1LL, 1000000LL));
  walls->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "svg"}));
  add_conventions(walls);

  std::string gx, gy;
  int truncation = 6, a_max = 1, b_max = 2;
  bool sweep = false;
  auto* bracket = app.add_subcommand("bracket", "Check the bracket of two generators a,b,label");
  bracket->add_option("--x", gx, "First generator, e.g. 0,1,E");
  bracket->add_option("--y", gy, "Second generator, e.g. 0,-1,pt");
  bracket->add_option("--truncation", truncation, "Fock truncation N")->check(CLI::Range(1, 40));
  bracket->add_flag("--sweep", sweep, "Sweep every pair in the (a,b) box");
  bracket->add_option("--a-max", a_max, "Sweep bound on |a|")->check(CLI::Range(0, 4));
  bracket->add_option("--b-max", b_max, "Sweep bound on |b|")->check(CLI::Range(0, 8));
  add_conventions(bracket);

  std::string state, gen = "f";
  int mono_n = 0;
  auto* mono = app.add_subcommand("monodromy", "Apply rho(f) or rho(s) to a Fock state");
  mono->add_option("--state", state, "State JSON, inline or a file path")->required();
  mono->add_option("--generator", gen, "f or s")->check(CLI::IsMember({"f", "s"}));
  mono->add_option("--n", mono_n, "Weight for f, truncation for s")->check(CLI::Range(0, 40));
  add_conventions(mono);

  int k = 2, local_n = 0;
  std::vector<std::string> avec;
  std::string local_format = "json";
  auto* local = app.add_subcommand("local", "Local cyclic-orbifold model");
  local->add_option("--k", k, "Cyclic order")->check(CLI::Range(1, 12));
  local->add_option("--a", avec, "a_g for g = 0..k-1, each in Q(zeta_k)")->delimiter(';');
  local->add_option("--n", local_n, "Jet order")->check(CLI::Range(0, 40));
  local->add_option("--format", local_format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  add_conventions(local);

  auto* hh0 = app.add_subcommand("hh0", "HH_0 dimensions of cyclic orbifold curves");
  add_conventions(hh0);

  long long m_max = 1, n_max = 1, h_max = -1;
  auto* roots = app.add_subcommand("roots", "Elliptic roots in a box");
  roots->add_option("--type", type, "Cartan type");
  roots->add_option("--m-max", m_max)->check(CLI::Range(0LL, 50LL));
  roots->add_option("--n-max", n_max)->check(CLI::Range(0LL, 50LL));
  roots->add_option("--height-max", h_max);
  add_conventions(roots);

  std::uint64_t seed = 20241016;
  std::vector<int> only;
  auto* verify = app.add_subcommand("verify-all", "Run the acceptance criteria");
  verify->add_option("--seed", seed, "Seed for randomized sweeps");
  verify->add_option("--only", only, "Criterion ids to run")->check(CLI::Range(1, 10));
  add_conventions(verify);

  CLI11_PARSE(app, argc, argv);
  finish_conventions(c);

  try {
    if (*walls) return cmd_walls(c, type, n, format);
    if (*bracket) return cmd_bracket(c, gx, gy, truncation, sweep, a_max, b_max);
    if (*mono) return cmd_monodromy(c, state, gen, mono_n);
    if (*local) return cmd_local(c, k, avec, local_n, local_format);
    if (*hh0) return cmd_hh0(c);
    if (*roots) return cmd_roots(c, type, m_max, n_max, h_max);
    if (*verify) return cmd_verify(c, seed, only);
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const UnsupportedType& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
