#pragma once

// Plain-text and CSV rendering.
//
// Polynomials print compactly in canonical term order. Inside a term the
// factors read z, V, v1, v2, ..., C, e.g. "1-zVC-3z+2z^2VC+z^2" or "z^2v1v3C". Series print as
// "1 + z + 2 z^2 + (41+V) z^5", skipping zero coefficients.

#include <string>

#include "catwords/oracle.hpp"
#include "catwords/polyring.hpp"

namespace catwords {

std::string render_monomial(const Monomial& m);
std::string render_polynomial(const Polynomial& p);
std::string render_series(const Series& s);

/// "k,count" header then one row per occurrence count, ascending.
std::string histogram_csv(const Histogram& h);
/// "{0:41,1:1}"
std::string render_histogram(const Histogram& h);

} // namespace catwords
