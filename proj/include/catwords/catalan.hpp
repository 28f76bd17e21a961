#pragma once

#include <cstddef>

#include "catwords/polyring.hpp"

namespace catwords {

/// C(z) = sum C_n z^n through z^order, generated by the exact integer
/// recurrence C_{n+1} = C_n * 2(2n+1) / (n+2).
Series catalan_series(std::size_t order);

/// The Catalan series truncated at `order`, as a polynomial in z.
Polynomial catalan_polynomial(std::size_t order);

/// True iff 1 + z*c(z)^2 == c(z) holds exactly through c.order().
bool satisfies_functional_equation(const Series& c);

/// satisfies_functional_equation(catalan_series(order)).
bool check_functional_equation(std::size_t order);

} // namespace catwords
