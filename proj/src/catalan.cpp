#include "catwords/catalan.hpp"

#include <vector>

namespace catwords {

Series catalan_series(std::size_t order)
{
    std::vector<Polynomial> cs;
    cs.reserve(order + 1);
    Integer c = 1;
    for (std::size_t n = 0; n <= order; ++n) {
        cs.emplace_back(c);
        c = c * 2 * (2 * n + 1) / (n + 2);
    }
    return Series(std::move(cs));
}

Polynomial catalan_polynomial(std::size_t order)
{
    return catalan_series(order).to_polynomial();
}

bool satisfies_functional_equation(const Series& c)
{
    // z * c^2 shifts c^2 up by one; its coefficient n is [z^{n-1}] c^2.
    const Series square = c * c;
    for (std::size_t n = 0; n <= c.order(); ++n) {
        Polynomial rhs = n == 0 ? Polynomial(1) : square[n - 1];
        if (rhs != c[n]) return false;
    }
    return true;
}

bool check_functional_equation(std::size_t order)
{
    return satisfies_functional_equation(catalan_series(order));
}

} // namespace catwords
