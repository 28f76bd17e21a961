#include "catwords/json_io.hpp"

#include <string>
#include <vector>

#include "catwords/errors.hpp"

namespace catwords {

Json to_json(const Polynomial& p)
{
    Json terms = Json::array();
    for (const auto& [m, c] : p.terms()) {
        Json monomial = Json::object();
        for (const auto& [var, exp] : m.factors()) monomial[var.name()] = exp;
        terms.push_back(Json{{"coeff", c.str()}, {"monomial", std::move(monomial)}});
    }
    return terms;
}

Json to_json(const Series& s)
{
    Json coeffs = Json::array();
    for (const auto& c : s.coeffs()) coeffs.push_back(to_json(c));
    return Json{{"order", s.order()}, {"coeffs", std::move(coeffs)}};
}

Json to_json(const LetterGF& gf)
{
    return Json{{"letter", gf.letter},
                {"numerator", to_json(gf.numerator)},
                {"denominator", to_json(gf.denominator)}};
}

Json to_json(const Histogram& h)
{
    Json counts = Json::object();
    for (const auto& [k, n] : h.counts) counts[std::to_string(k)] = n;
    return Json{{"letter", h.letter}, {"length", h.length}, {"counts", std::move(counts)}};
}

Polynomial polynomial_from_json(const Json& j)
{
    if (!j.is_array()) throw InvalidArgument("polynomial JSON must be an array of terms");
    Polynomial p;
    for (const auto& term : j) {
        if (!term.is_object() || !term.contains("coeff") || !term.contains("monomial") ||
            !term["coeff"].is_string() || !term["monomial"].is_object()) {
            throw InvalidArgument("polynomial term needs string \"coeff\" and object \"monomial\"");
        }
        Integer coeff;
        try {
            coeff = Integer(term["coeff"].get<std::string>());
        } catch (const std::exception&) {
            throw InvalidArgument("bad coefficient '" + term["coeff"].get<std::string>() + "'");
        }
        std::vector<Monomial::Factor> factors;
        for (const auto& [name, exp] : term["monomial"].items()) {
            if (!exp.is_number_unsigned() || exp.get<unsigned>() == 0) {
                throw InvalidArgument("exponent of " + name + " must be a positive integer");
            }
            factors.emplace_back(Variable::from_name(name), exp.get<unsigned>());
        }
        p.add_term(Monomial::from_factors(std::move(factors)), coeff);
    }
    return p;
}

Series series_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("order") || !j.contains("coeffs") ||
        !j["order"].is_number_unsigned() || !j["coeffs"].is_array()) {
        throw InvalidArgument("series JSON needs \"order\" and \"coeffs\"");
    }
    const auto order = j["order"].get<std::size_t>();
    if (j["coeffs"].size() != order + 1) {
        throw InvalidArgument("series JSON must carry order + 1 coefficients");
    }
    std::vector<Polynomial> cs;
    for (const auto& c : j["coeffs"]) cs.push_back(polynomial_from_json(c));
    return Series(std::move(cs));
}

LetterGF letter_gf_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("letter") || !j["letter"].is_number_unsigned() ||
        !j.contains("numerator") || !j.contains("denominator")) {
        throw InvalidArgument("letter GF JSON needs \"letter\", \"numerator\", \"denominator\"");
    }
    return {j["letter"].get<unsigned>(), polynomial_from_json(j["numerator"]),
            polynomial_from_json(j["denominator"])};
}

} // namespace catwords
