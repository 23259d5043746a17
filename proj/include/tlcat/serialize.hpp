#pragma once

#include "tlcat/diagrams.hpp"
#include "tlcat/laurent.hpp"
#include "tlcat/polyring.hpp"

#include <json.hpp>

namespace tlcat {

/// {"exponent": coefficient}; coefficients outside the 64-bit range are
/// written as decimal strings.
nlohmann::json to_json(const LaurentPoly &p);
LaurentPoly laurent_from_json(const nlohmann::json &j);

/// {"num": ..., "den": ...}
nlohmann::json to_json(const RationalFn &r);
RationalFn rational_from_json(const nlohmann::json &j);

/// Partner array p with p[a] = partner of a.
nlohmann::json to_json(const Matching &m);
/// Square matching from a partner array.
Matching matching_from_json(const nlohmann::json &j);

/// [{"exponents": [...], "coeff": "p/q"}, ...]
nlohmann::json to_json(const Poly &p);
Poly poly_from_json(const nlohmann::json &j, int n);

} // namespace tlcat
