#include "catwords/polyring.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>

#include "catwords/errors.hpp"

namespace catwords {

// ---------------------------------------------------------------------------
// Variable

Variable Variable::indexed(unsigned i)
{
    if (i == 0) {
        throw InvalidArgument("letter variables are numbered from 1");
    }
    return {Kind::Indexed, i};
}

Variable Variable::from_name(std::string_view name)
{
    if (name == "z") return z();
    if (name == "C") return c();
    if (name == "V") return v();
    if (name.size() >= 2 && name.front() == 'v') {
        unsigned index = 0;
        auto digits = name.substr(1);
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), index);
        if (ec == std::errc{} && ptr == digits.data() + digits.size() && digits.front() != '0') {
            return indexed(index);
        }
    }
    throw InvalidArgument("unknown variable name '" + std::string(name) + "'");
}

std::string Variable::name() const
{
    switch (kind_) {
    case Kind::Z: return "z";
    case Kind::C: return "C";
    case Kind::V: return "V";
    case Kind::Indexed: return "v" + std::to_string(index_);
    }
    return {};
}

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(Variable var, unsigned exponent)
{
    if (exponent > 0) {
        factors_.emplace_back(var, exponent);
    }
}

Monomial Monomial::from_factors(std::vector<Factor> factors)
{
    std::sort(factors.begin(), factors.end(),
              [](const Factor& a, const Factor& b) { return a.first < b.first; });
    Monomial m;
    for (const auto& [var, exp] : factors) {
        if (exp == 0) continue;
        if (!m.factors_.empty() && m.factors_.back().first == var) {
            m.factors_.back().second += exp;
        } else {
            m.factors_.emplace_back(var, exp);
        }
    }
    return m;
}

unsigned Monomial::exponent(Variable var) const
{
    auto it = std::lower_bound(factors_.begin(), factors_.end(), var,
                               [](const Factor& f, Variable v) { return f.first < v; });
    return (it != factors_.end() && it->first == var) ? it->second : 0;
}

unsigned Monomial::total_degree() const
{
    unsigned d = 0;
    for (const auto& f : factors_) d += f.second;
    return d;
}

Monomial Monomial::without(Variable var) const
{
    Monomial m;
    m.factors_.reserve(factors_.size());
    for (const auto& f : factors_) {
        if (f.first != var) m.factors_.push_back(f);
    }
    return m;
}

Monomial Monomial::operator*(const Monomial& other) const
{
    Monomial m;
    m.factors_.reserve(factors_.size() + other.factors_.size());
    auto a = factors_.begin();
    auto b = other.factors_.begin();
    while (a != factors_.end() && b != other.factors_.end()) {
        if (a->first < b->first) {
            m.factors_.push_back(*a++);
        } else if (b->first < a->first) {
            m.factors_.push_back(*b++);
        } else {
            m.factors_.emplace_back(a->first, a->second + b->second);
            ++a;
            ++b;
        }
    }
    m.factors_.insert(m.factors_.end(), a, factors_.end());
    m.factors_.insert(m.factors_.end(), b, other.factors_.end());
    return m;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const
{
    const unsigned za = a.exponent(Variable::z());
    const unsigned zb = b.exponent(Variable::z());
    if (za != zb) return za < zb;
    const unsigned ca = a.exponent(Variable::c());
    const unsigned cb = b.exponent(Variable::c());
    if (ca != cb) return ca > cb;

    auto skip = [](std::span<const Monomial::Factor> fs) {
        auto it = fs.begin();
        while (it != fs.end() && it->first.kind() != Variable::Kind::V &&
               it->first.kind() != Variable::Kind::Indexed) {
            ++it;
        }
        return it;
    };
    auto fa = a.factors();
    auto fb = b.factors();
    auto ia = skip(fa);
    auto ib = skip(fb);
    // First variable (in variable order) whose exponents differ decides;
    // the smaller exponent sorts first.
    while (ia != fa.end() || ib != fb.end()) {
        if (ib == fb.end()) return false;
        if (ia == fa.end()) return true;
        if (ia->first == ib->first) {
            if (ia->second != ib->second) return ia->second < ib->second;
            ++ia;
            ++ib;
        } else {
            return ib->first < ia->first;
        }
    }
    return false;
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(const Integer& constant)
{
    if (constant != 0) terms_.emplace(Monomial{}, constant);
}

Polynomial Polynomial::variable(Variable var, unsigned exponent)
{
    return term(1, Monomial(var, exponent));
}

Polynomial Polynomial::term(const Integer& coeff, Monomial monomial)
{
    Polynomial p;
    if (coeff != 0) p.terms_.emplace(std::move(monomial), coeff);
    return p;
}

Integer Polynomial::coefficient(const Monomial& monomial) const
{
    auto it = terms_.find(monomial);
    return it == terms_.end() ? Integer(0) : it->second;
}

bool Polynomial::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
}

bool Polynomial::contains(Variable var) const
{
    return std::any_of(terms_.begin(), terms_.end(),
                       [&](const auto& t) { return t.first.exponent(var) > 0; });
}

std::set<Variable> Polynomial::variables() const
{
    std::set<Variable> vars;
    for (const auto& [m, c] : terms_) {
        for (const auto& f : m.factors()) vars.insert(f.first);
    }
    return vars;
}

unsigned Polynomial::degree_in(Variable var) const
{
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(var));
    return d;
}

void Polynomial::add_term(const Monomial& monomial, const Integer& coeff)
{
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(monomial, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::pow(unsigned exponent) const
{
    Polynomial result(1);
    Polynomial base = *this;
    while (exponent > 0) {
        if (exponent & 1u) result *= base;
        exponent >>= 1;
        if (exponent > 0) base *= base;
    }
    return result;
}

Polynomial Polynomial::operator-() const
{
    Polynomial p = *this;
    for (auto& [m, c] : p.terms_) c = -c;
    return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& other)
{
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    assert(is_canonical());
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other)
{
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    assert(is_canonical());
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other)
{
    *this = *this * other;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    Polynomial result;
    if (a.is_zero() || b.is_zero()) return result;
    auto& out = result.terms_;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            Integer product = ca * cb;
            auto [it, inserted] = out.try_emplace(ma * mb, product);
            if (!inserted) it->second += product;
        }
    }
    std::erase_if(out, [](const auto& t) { return t.second == 0; });
    assert(result.is_canonical());
    return result;
}

bool Polynomial::is_canonical() const
{
    for (const auto& [m, c] : terms_) {
        if (c == 0) return false;
        for (const auto& f : m.factors()) {
            if (f.second == 0) return false;
        }
    }
    return true;
}

Polynomial poly_add(const Polynomial& a, const Polynomial& b) { return a + b; }

Polynomial poly_mul(const Polynomial& a, const Polynomial& b) { return a * b; }

Polynomial specialize(const Polynomial& p, const Assignment& assignment)
{
    if (assignment.empty()) return p;
    for (const auto& [var, value] : assignment) {
        for (const auto& used : value.variables()) {
            if (assignment.contains(used)) {
                throw RecursiveAssignment("value assigned to " + var.name() +
                                          " mentions substituted variable " + used.name());
            }
        }
    }

    // powers[var][e] caches value^e.
    std::map<Variable, std::vector<Polynomial>> powers;
    auto power_of = [&](Variable var, unsigned e) -> const Polynomial& {
        auto& cache = powers[var];
        if (cache.empty()) cache.emplace_back(1);
        while (cache.size() <= e) cache.push_back(cache.back() * assignment.at(var));
        return cache[e];
    };

    Polynomial result;
    for (const auto& [m, c] : p.terms()) {
        std::vector<Monomial::Factor> kept;
        Polynomial substituted(c);
        for (const auto& [var, e] : m.factors()) {
            if (assignment.contains(var)) {
                substituted *= power_of(var, e);
            } else {
                kept.emplace_back(var, e);
            }
        }
        result += substituted * Polynomial::term(1, Monomial::from_factors(std::move(kept)));
    }
    return result;
}

// ---------------------------------------------------------------------------
// Series

Series Series::zero(std::size_t order)
{
    return Series(std::vector<Polynomial>(order + 1));
}

Series::Series(std::vector<Polynomial> coeffs) : coeffs_(std::move(coeffs))
{
    if (coeffs_.empty()) {
        throw InvalidArgument("a series needs at least one coefficient");
    }
    for (const auto& c : coeffs_) {
        if (c.contains(Variable::z())) {
            throw InvalidArgument("series coefficients must not mention z");
        }
    }
}

Series Series::truncated(std::size_t order) const
{
    std::vector<Polynomial> cs(coeffs_.begin(),
                               coeffs_.begin() + static_cast<std::ptrdiff_t>(std::min(order, this->order()) + 1));
    return Series(std::move(cs));
}

Polynomial Series::to_polynomial() const
{
    Polynomial p;
    for (std::size_t n = 0; n < coeffs_.size(); ++n) {
        for (const auto& [m, c] : coeffs_[n].terms()) {
            p.add_term(m * Monomial(Variable::z(), static_cast<unsigned>(n)), c);
        }
    }
    return p;
}

Series series_from_poly(const Polynomial& p, std::size_t order)
{
    std::vector<Polynomial> cs(order + 1);
    for (const auto& [m, c] : p.terms()) {
        const unsigned e = m.exponent(Variable::z());
        if (e <= order) cs[e].add_term(m.without(Variable::z()), c);
    }
    return Series(std::move(cs));
}

Series series_add(const Series& a, const Series& b)
{
    const std::size_t order = std::min(a.order(), b.order());
    std::vector<Polynomial> cs(order + 1);
    for (std::size_t n = 0; n <= order; ++n) cs[n] = a[n] + b[n];
    return Series(std::move(cs));
}

Series series_sub(const Series& a, const Series& b)
{
    const std::size_t order = std::min(a.order(), b.order());
    std::vector<Polynomial> cs(order + 1);
    for (std::size_t n = 0; n <= order; ++n) cs[n] = a[n] - b[n];
    return Series(std::move(cs));
}

Series series_mul(const Series& a, const Series& b)
{
    const std::size_t order = std::min(a.order(), b.order());
    std::vector<Polynomial> cs(order + 1);
    for (std::size_t i = 0; i <= order; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; i + j <= order; ++j) {
            if (b[j].is_zero()) continue;
            cs[i + j] += a[i] * b[j];
        }
    }
    return Series(std::move(cs));
}

Series series_inverse(const Series& s)
{
    if (s[0] != Polynomial(1)) {
        throw NonUnitConstantTerm("series inverse needs constant coefficient 1");
    }
    std::vector<Polynomial> t(s.order() + 1);
    t[0] = Polynomial(1);
    for (std::size_t n = 1; n <= s.order(); ++n) {
        Polynomial acc;
        for (std::size_t j = 1; j <= n; ++j) {
            if (s[j].is_zero() || t[n - j].is_zero()) continue;
            acc += s[j] * t[n - j];
        }
        t[n] = -acc;
    }
    return Series(std::move(t));
}

Series series_divide(const Series& num, const Series& den)
{
    if (den[0] != Polynomial(1)) {
        throw NonUnitConstantTerm("series division needs a denominator with constant coefficient 1");
    }
    const std::size_t order = std::min(num.order(), den.order());
    std::vector<Polynomial> t(order + 1);
    for (std::size_t n = 0; n <= order; ++n) {
        Polynomial acc = num[n];
        for (std::size_t j = 1; j <= n; ++j) {
            if (den[j].is_zero() || t[n - j].is_zero()) continue;
            acc -= den[j] * t[n - j];
        }
        t[n] = std::move(acc);
    }
    return Series(std::move(t));
}

Series specialize(const Series& s, const Assignment& assignment)
{
    for (const auto& [var, value] : assignment) {
        if (var == Variable::z() || value.contains(Variable::z())) {
            throw InvalidArgument("series specialization cannot involve z");
        }
    }
    std::vector<Polynomial> cs;
    cs.reserve(s.order() + 1);
    for (const auto& c : s.coeffs()) cs.push_back(specialize(c, assignment));
    return Series(std::move(cs));
}

} // namespace catwords
