#pragma once

#include "gonc/goncarov.hpp"
#include "gonc/poly.hpp"
#include "gonc/series.hpp"

#include <json.hpp>

#include <string>

namespace gonc {

// All JSON uses ordered_json with rationals as "num/den" strings, so emitted
// documents re-serialize byte-identically after a parse round trip.
using Json = nlohmann::ordered_json;

Json to_json(const Poly& p);            // array of coefficient strings, index = degree
Poly poly_from_json(const Json& j);

Json to_json(const TruncSeries& f);     // { "order": N, "coeffs": [...] }
TruncSeries series_from_json(const Json& j);

Json grid_to_json(const Grid& z);
Grid grid_from_json(const Json& j);

std::string to_latex(const Poly& p, const std::string& var = "x");

// t_n as a combination of the basic polynomials, e.g. "p_{2}(x) - 3 p_{1}(x)".
std::string latex_in_basic_basis(const std::vector<Rational>& coeffs);

}  // namespace gonc
