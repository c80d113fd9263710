#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "kac/leading.hpp"
#include "kac/qpoly.hpp"

namespace kac {

using Json = nlohmann::ordered_json;

// Machine formats list exponent/coefficient pairs, highest term first, with
// coefficients as exact decimal strings "a" or "a/b".

/// [[5, "1"], [3, "1"]]
Json qpoly_to_json(const QPoly& p);
QPoly qpoly_from_json(const Json& j);

/// "5:1 3:1"; the zero polynomial is the empty string.
std::string qpoly_to_csv(const QPoly& p);
QPoly qpoly_from_csv(std::string_view text);

/// [[[e11, e12, e22], "c"], ...]
Json gpoly_to_json(const GPolynomial& p);
GPolynomial gpoly_from_json(std::size_t n, const Json& j);

/// "2.0.1:3/2 1.0.0:-1"
std::string gpoly_to_csv(const GPolynomial& p);
GPolynomial gpoly_from_csv(std::size_t n, std::string_view text);

}  // namespace kac
