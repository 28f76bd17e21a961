#include "catwords/format.hpp"

#include <sstream>

namespace catwords {

namespace {

int display_rank(Variable v)
{
    switch (v.kind()) {
    case Variable::Kind::Z: return 0;
    case Variable::Kind::V: return 1;
    case Variable::Kind::Indexed: return 2;
    case Variable::Kind::C: return 3;
    }
    return 4;
}

std::string factor_text(Variable var, unsigned exp)
{
    std::string s = var.name();
    if (exp > 1) s += "^" + std::to_string(exp);
    return s;
}

// Term without its sign; unit coefficients are suppressed.
std::string unsigned_term(const Monomial& m, const Integer& coeff)
{
    const Integer magnitude = abs(coeff);
    if (m.is_unit()) return magnitude.str();
    std::string s = magnitude == 1 ? "" : magnitude.str();
    return s + render_monomial(m);
}

} // namespace

std::string render_monomial(const Monomial& m)
{
    if (m.is_unit()) return "1";
    std::string out;
    for (int rank = 0; rank <= 3; ++rank) {
        for (const auto& [var, exp] : m.factors()) {
            if (display_rank(var) == rank) out += factor_text(var, exp);
        }
    }
    return out;
}

std::string render_polynomial(const Polynomial& p)
{
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        if (c < 0) {
            out += '-';
        } else if (!first) {
            out += '+';
        }
        out += unsigned_term(m, c);
        first = false;
    }
    return out;
}

std::string render_series(const Series& s)
{
    std::string out;
    bool first = true;
    for (std::size_t n = 0; n <= s.order(); ++n) {
        const Polynomial& c = s[n];
        if (c.is_zero()) continue;
        const std::string power = n == 0 ? "" : n == 1 ? "z" : "z^" + std::to_string(n);

        bool negative = false;
        std::string body;
        if (c.size() == 1) {
            const auto& [m, coeff] = *c.terms().begin();
            negative = coeff < 0;
            body = unsigned_term(m, coeff);
            if (n > 0) body = body == "1" ? power : body + " " + power;
        } else {
            body = n == 0 ? render_polynomial(c) : "(" + render_polynomial(c) + ") " + power;
        }

        if (first) {
            out += negative ? "-" + body : body;
        } else {
            out += (negative ? " - " : " + ") + body;
        }
        first = false;
    }
    return first ? "0" : out;
}

std::string histogram_csv(const Histogram& h)
{
    std::ostringstream os;
    os << "k,count\n";
    for (const auto& [k, n] : h.counts) os << k << ',' << n << '\n';
    return os.str();
}

std::string render_histogram(const Histogram& h)
{
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (const auto& [k, n] : h.counts) {
        if (!first) os << ',';
        os << k << ':' << n;
        first = false;
    }
    os << '}';
    return os.str();
}

} // namespace catwords
