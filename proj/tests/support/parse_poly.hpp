#pragma once

// Test-only reader for polynomials written the way they are typeset in the
// literature: "1-zv_5C-v_4z+z^2v_3v_5C", "1-zVC-9z+8z^2VC", "3v_1^2v_2^2".
// Kept independent of the library's renderer so golden values are transcribed
// rather than round-tripped.

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "catwords/polyring.hpp"

namespace catwords::testing {

inline Polynomial parse_poly(std::string_view text)
{
    std::string s;
    for (char ch : text) {
        if (!std::isspace(static_cast<unsigned char>(ch)) && ch != '{' && ch != '}') s += ch;
    }
    std::size_t pos = 0;
    auto number = [&]() {
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) throw std::invalid_argument("expected digits in '" + s + "'");
        return s.substr(start, pos - start);
    };

    Polynomial result;
    while (pos < s.size()) {
        int sign = 1;
        if (s[pos] == '+' || s[pos] == '-') {
            sign = s[pos] == '-' ? -1 : 1;
            ++pos;
        }
        Integer coeff = 1;
        if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            coeff = Integer(number());
        }
        std::vector<Monomial::Factor> factors;
        while (pos < s.size() && s[pos] != '+' && s[pos] != '-') {
            const char ch = s[pos++];
            Variable var = Variable::z();
            if (ch == 'z') {
                var = Variable::z();
            } else if (ch == 'C') {
                var = Variable::c();
            } else if (ch == 'V') {
                var = Variable::v();
            } else if (ch == 'v') {
                if (pos < s.size() && s[pos] == '_') ++pos;
                var = Variable::indexed(static_cast<unsigned>(std::stoul(number())));
            } else {
                throw std::invalid_argument(std::string("unexpected '") + ch + "' in '" + s + "'");
            }
            unsigned exp = 1;
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                exp = static_cast<unsigned>(std::stoul(number()));
            }
            factors.emplace_back(var, exp);
        }
        result.add_term(Monomial::from_factors(std::move(factors)), sign * coeff);
    }
    return result;
}

/// Series from its coefficient list, lowest power first.
inline Series parse_series(const std::vector<std::string_view>& coeffs)
{
    std::vector<Polynomial> cs;
    for (auto c : coeffs) cs.push_back(parse_poly(c));
    return Series(std::move(cs));
}

} // namespace catwords::testing
