#pragma once

// JSON forms.
//
//   Polynomial: [{"coeff": "-3", "monomial": {"z": 1, "V": 1}}, ...] in
//               canonical term order, variables listed in variable order.
//   Series:     {"order": N, "coeffs": [Polynomial, ...]}
//   LetterGF:   {"letter": i, "numerator": Polynomial, "denominator": Polynomial}
//   Histogram:  {"letter": i, "length": n, "counts": {"0": 41, "1": 1}}
//
// Readers throw InvalidArgument on malformed input.

#include <json.hpp>

#include "catwords/cfrac.hpp"
#include "catwords/oracle.hpp"
#include "catwords/polyring.hpp"

namespace catwords {

using Json = nlohmann::ordered_json;

Json to_json(const Polynomial& p);
Json to_json(const Series& s);
Json to_json(const LetterGF& gf);
Json to_json(const Histogram& h);

Polynomial polynomial_from_json(const Json& j);
Series series_from_json(const Json& j);
LetterGF letter_gf_from_json(const Json& j);

} // namespace catwords
