#pragma once

#include <string>

#include "blob/laurent.hpp"
#include "blob/repdims.hpp"

namespace blob {

// JSON array of [exponent, coefficient] pairs ascending by exponent,
// e.g. t^3+t <-> [[1,1],[3,1]].
std::string poly_to_json(const LaurentPoly& poly);
LaurentPoly poly_from_json(const std::string& text);

// Decomposition matrix as a JSON document with params, the ascending
// weight list and one column per weight. Parsing then re-serializing is
// the identity.
std::string decomp_to_json(const DecompMatrix& matrix);
DecompMatrix decomp_from_json(const std::string& text);

// One row per (mu, lambda) pair, both ascending by weight.
std::string decomp_to_csv(const DecompMatrix& matrix);

}  // namespace blob
