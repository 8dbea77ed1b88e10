#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "ellwall/fock.hpp"
#include "ellwall/local_model.hpp"
#include "ellwall/root_system.hpp"
#include "ellwall/walls.hpp"

namespace ellwall {

using json = nlohmann::ordered_json;

const char* tool_version();

// Every convention a run can override. Echoed into each output document.
struct Conventions {
  int pairing_sign = 1;
  int preproj_sign = 1;
  StarProduct star = StarProduct::Convolution;
  ExtendedConventions ext;
};

// {"paper_conventions": {...}, "tool_version": "..."}
json metadata(const Conventions& c);

json to_json(const EllipticRoot& r);
json to_json(const MukaiVector& v);
json to_json(const WallSpec& w);
json to_json(const ChamberDecomposition& d);

// {charge, terms: [{modes: [[k, label]], coeff: "p/q"}]}; coefficients with
// hbar terms use the "1 + 2*h" form.
json to_json(const FockState& s);
FockState fock_state_from_json(const json& j);  // throws DomainError

json to_json(const Generator& g);
json to_json(const BracketPair& p);
// {lhs_params, rhs_params, match, rescale_factors, central: {c_s, c_t}, truncation}
json to_json(const BracketReport& r);

json to_json(const BimoduleParam& p);
json to_json(const PreprojReport& r);

}  // namespace ellwall
