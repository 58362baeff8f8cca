#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "genus_forge/poly.hpp"
#include "genus_forge/series.hpp"

namespace gforge {

using Json = nlohmann::json;

/// [{"exponents":[i],"coeff":"p/q"}, ...] for the stored nonzero terms.
Json series_to_json(const Series<Rational>& s);
Series<Rational> series_from_json(const Json& j, int order = kExact);

/// Exponent vectors follow `vars`; a term using any other variable is rejected.
Json poly_to_json(const Poly& p, const std::vector<std::string>& vars);
Poly poly_from_json(const Json& j, const std::vector<std::string>& vars);

/// Exponent vectors are [i, e_vars...] where i is the series exponent.
Json series_to_json(const Series<Poly>& s, const std::vector<std::string>& vars);
Series<Poly> series_from_json(const Json& j, const std::vector<std::string>& vars, int order = kExact);

}  // namespace gforge
