#pragma once

// Exact multivariate integer polynomials and power series in z truncated at a
// fixed order.
//
// Polynomials are kept in canonical form: a map from monomial to a nonzero
// arbitrary-precision coefficient, where a monomial maps variables to
// positive exponents. Terms are ordered by MonomialOrder, which is also the
// order used for printing and serialization.

#include <compare>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace catwords {

using Integer = boost::multiprecision::cpp_int;

/// A polynomial indeterminate: z (length marker), C (formal Catalan tail),
/// V (the single tracked letter), or v_i (letter i, i >= 1).
///
/// Variables are totally ordered z < C < V < v1 < v2 < ...
class Variable {
public:
    enum class Kind : std::uint8_t { Z, C, V, Indexed };

    static Variable z() { return {Kind::Z, 0}; }
    static Variable c() { return {Kind::C, 0}; }
    static Variable v() { return {Kind::V, 0}; }
    /// Throws InvalidArgument when i == 0.
    static Variable indexed(unsigned i);

    /// Parses "z", "C", "V" or "v<i>".
    static Variable from_name(std::string_view name);

    Kind kind() const { return kind_; }
    unsigned index() const { return index_; }
    std::string name() const;

    auto operator<=>(const Variable&) const = default;

private:
    Variable(Kind kind, unsigned index) : kind_(kind), index_(index) {}

    Kind kind_;
    unsigned index_;
};

/// Product of variables raised to positive exponents. The empty product is the
/// unit monomial.
class Monomial {
public:
    using Factor = std::pair<Variable, unsigned>;

    Monomial() = default;
    explicit Monomial(Variable var, unsigned exponent = 1);

    /// Sorts, merges repeated variables and drops zero exponents.
    static Monomial from_factors(std::vector<Factor> factors);

    std::span<const Factor> factors() const { return factors_; }
    bool is_unit() const { return factors_.empty(); }
    unsigned exponent(Variable var) const;
    unsigned total_degree() const;

    /// The monomial with every power of `var` removed.
    Monomial without(Variable var) const;

    Monomial operator*(const Monomial& other) const;
    bool operator==(const Monomial&) const = default;

private:
    std::vector<Factor> factors_; // sorted by variable, exponents > 0
};

/// Canonical term order: ascending power of z, then descending power of C,
/// then the exponent vector over (V, v1, v2, ...) compared lexicographically
/// in ascending order. Printed polynomials read like 1-zVC-3z+2z^2VC+z^2.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

class Polynomial {
public:
    using Terms = std::map<Monomial, Integer, MonomialOrder>;

    Polynomial() = default;
    explicit Polynomial(const Integer& constant);
    template <std::integral T>
    Polynomial(T constant) : Polynomial(Integer(constant)) {}

    static Polynomial variable(Variable var, unsigned exponent = 1);
    static Polynomial term(const Integer& coeff, Monomial monomial);

    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    Integer coefficient(const Monomial& monomial) const;
    Integer constant_term() const { return coefficient(Monomial{}); }
    bool is_constant() const;

    bool contains(Variable var) const;
    std::set<Variable> variables() const;
    unsigned degree_in(Variable var) const;

    /// Adds coeff * monomial in place, keeping canonical form.
    void add_term(const Monomial& monomial, const Integer& coeff);

    Polynomial pow(unsigned exponent) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Polynomial& other);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

    bool operator==(const Polynomial& other) const { return terms_ == other.terms_; }

    /// True when no zero coefficient or zero exponent is stored.
    bool is_canonical() const;

private:
    Terms terms_;
};

Polynomial poly_add(const Polynomial& a, const Polynomial& b);
Polynomial poly_mul(const Polynomial& a, const Polynomial& b);

using Assignment = std::map<Variable, Polynomial>;

/// Substitutes each keyed variable by its assigned polynomial. Throws
/// RecursiveAssignment if any assigned value mentions a keyed variable.
Polynomial specialize(const Polynomial& p, const Assignment& assignment);

/// Power series in z truncated after z^order. Coefficients are polynomials in
/// the remaining variables and never mention z.
class Series {
public:
    /// The zero series of the given order.
    static Series zero(std::size_t order);
    /// Order is coeffs.size() - 1. Throws InvalidArgument if coeffs is empty
    /// or a coefficient mentions z.
    explicit Series(std::vector<Polynomial> coeffs);

    std::size_t order() const { return coeffs_.size() - 1; }
    std::span<const Polynomial> coeffs() const { return coeffs_; }
    const Polynomial& operator[](std::size_t n) const { return coeffs_.at(n); }

    Series truncated(std::size_t order) const;
    Polynomial to_polynomial() const;

    bool operator==(const Series&) const = default;

private:
    std::vector<Polynomial> coeffs_;
};

/// Collects the terms of p by power of z; powers above `order` are dropped.
Series series_from_poly(const Polynomial& p, std::size_t order);

Series series_add(const Series& a, const Series& b);
Series series_sub(const Series& a, const Series& b);
/// Cauchy product truncated at min(a.order(), b.order()).
Series series_mul(const Series& a, const Series& b);
/// Multiplicative inverse at the same order via t_0 = 1,
/// t_n = -sum_{j=1..n} s_j t_{n-j}. Throws NonUnitConstantTerm unless s_0 == 1.
Series series_inverse(const Series& s);

/// num / den at order min(num.order(), den.order()), solving den * t = num
/// by t_n = num_n - sum_{j=1..n} den_j t_{n-j}. Equal to num * inverse(den)
/// without forming the inverse. Throws NonUnitConstantTerm unless den_0 == 1.
Series series_divide(const Series& num, const Series& den);

/// Coefficientwise substitution. Assigned values must not mention z.
Series specialize(const Series& s, const Assignment& assignment);

inline Series operator+(const Series& a, const Series& b) { return series_add(a, b); }
inline Series operator-(const Series& a, const Series& b) { return series_sub(a, b); }
inline Series operator*(const Series& a, const Series& b) { return series_mul(a, b); }

namespace symbols {

inline Polynomial z() { return Polynomial::variable(Variable::z()); }
inline Polynomial C() { return Polynomial::variable(Variable::c()); }
inline Polynomial V() { return Polynomial::variable(Variable::v()); }
inline Polynomial v(unsigned i) { return Polynomial::variable(Variable::indexed(i)); }

} // namespace symbols

} // namespace catwords
